#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hpd/chern.hpp"
#include "hpd/divisor_ext.hpp"
#include "hpd/kgroup.hpp"

namespace hpd::engine {

// ---------------------------------------------------------------------------
// Lefschetz chains on P^m

// The chain A, A(1), ..., A(i-1) with A spanned by the d consecutive twists
// O(0..d-1).  Rectangular when the blocks tile O(0..m) exactly (d*i = m+1);
// otherwise the final block keeps only the first m+1-(i-1)d twists.
struct LefschetzData {
  int m = 0;
  int d = 1;
  int i = 1;
  std::vector<int> block;  // the base block twists 0..d-1
  bool rectangular = true;

  [[nodiscard]] int final_block_size() const {
    return m + 1 - (i - 1) * d;
  }
};

[[nodiscard]] inline LefschetzData build_lefschetz(int m, int d,
                                                   bool require_rectangular) {
  if (m < 0) throw std::invalid_argument("build_lefschetz: m < 0");
  if (d < 1 || d > m + 1)
    throw std::invalid_argument("build_lefschetz: block size outside [1, m+1]");
  LefschetzData data;
  data.m = m;
  data.d = d;
  data.rectangular = (m + 1) % d == 0;
  if (!data.rectangular && require_rectangular)
    throw std::invalid_argument("build_lefschetz: d does not divide m+1");
  data.i = (m + 1 + d - 1) / d;  // ceiling; exact in the rectangular case
  data.block.resize(d);
  for (int s = 0; s < d; ++s) data.block[s] = s;
  return data;
}

struct LefschetzValidation {
  bool pass = false;
  bool covers_all_twists = false;  // blocks flatten to O(0..m) exactly
  kgroup::ExceptionalityReport collection;
};

// Flattens the chain into the twist sequence it generates and runs the full
// two-layer exceptionality check on P^m.
[[nodiscard]] inline LefschetzValidation validate_lefschetz(
    const LefschetzData& data) {
  LefschetzValidation v;
  std::vector<kgroup::Twist> twists;
  for (int j = 0; j < data.i; ++j) {
    int size = (j == data.i - 1) ? data.final_block_size() : data.d;
    for (int s = 0; s < size; ++s) twists.push_back({j * data.d + s});
  }
  v.covers_all_twists = static_cast<int>(twists.size()) == data.m + 1;
  for (size_t j = 0; v.covers_all_twists && j < twists.size(); ++j)
    v.covers_all_twists &= twists[j][0] == static_cast<int>(j);
  v.collection = kgroup::is_exceptional_collection(
      kgroup::Collection::of_line_bundles(AmbientSpec({data.m}), twists));
  v.pass = v.covers_all_twists && v.collection.pass;
  return v;
}

// ---------------------------------------------------------------------------
// Semi-orthogonal decomposition reports

enum class BlockLabel { BASE_LOCUS, AMBIENT_TWIST, LEFSCHETZ_BLOCK, HPD_CATEGORY };

[[nodiscard]] inline const char* to_string(BlockLabel label) {
  switch (label) {
    case BlockLabel::BASE_LOCUS: return "BASE_LOCUS";
    case BlockLabel::AMBIENT_TWIST: return "AMBIENT_TWIST";
    case BlockLabel::LEFSCHETZ_BLOCK: return "LEFSCHETZ_BLOCK";
    case BlockLabel::HPD_CATEGORY: return "HPD_CATEGORY";
  }
  return "?";
}

struct SODBlock {
  BlockLabel label = BlockLabel::BASE_LOCUS;
  std::optional<int> alpha;  // Lefschetz column, when meaningful
  std::optional<int> beta;   // system-side twist, when meaningful
  Int rank;

  friend bool operator==(const SODBlock&, const SODBlock&) = default;
};

struct Certificate {
  std::string name;
  Int lhs;
  Int rhs;
  bool pass = false;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

[[nodiscard]] inline Certificate make_certificate(std::string name, Int lhs,
                                                  Int rhs) {
  bool pass = lhs == rhs;
  return {std::move(name), std::move(lhs), std::move(rhs), pass};
}

enum class CaseTag { HPD1, HPD2_GT, HPD2_EQ, HPD2_LT };

[[nodiscard]] inline const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::HPD1: return "HPD1";
    case CaseTag::HPD2_GT: return "HPD2_GT";
    case CaseTag::HPD2_EQ: return "HPD2_EQ";
    case CaseTag::HPD2_LT: return "HPD2_LT";
  }
  return "?";
}

struct SODReport {
  CaseTag case_tag = CaseTag::HPD1;
  int m = 0, d = 1, ell = 1, i = 1;
  std::vector<SODBlock> blocks;
  // In the ell < i case the same category admits a second presentation with
  // the residual blocks twisted to the columns ell..i-1; kept alongside.
  std::vector<SODBlock> alternative_blocks;
  std::vector<Certificate> certificates;
  std::map<std::string, Int> scalars;
  std::optional<bool> calabi_yau;

  [[nodiscard]] bool all_pass() const {
    for (const auto& c : certificates)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

[[nodiscard]] inline Int chi_universal_divisor(int m, int d, int ell) {
  return chern::chi_top({AmbientSpec({m, ell - 1}), {{d, 1}}});
}

[[nodiscard]] inline Int chi_linear_section_locus(int m, int d, int ell) {
  return chern::chi_top(
      {AmbientSpec({m}),
       std::vector<std::vector<int>>(ell, std::vector<int>{d})});
}

}  // namespace detail

// Decomposition of the derived category of the universal divisor H over an
// ell-dimensional system of degree-d sections of P^m: the base locus part
// plus ell-1 ambient copies, with the proof obligations reduced to table
// computations and recorded as certificates.
[[nodiscard]] inline SODReport hpd1_decomposition(int m, int d, int ell) {
  if (m < 1) throw std::invalid_argument("hpd1_decomposition: m < 1");
  if (d < 1) throw std::invalid_argument("hpd1_decomposition: d < 1");
  if (ell < 2 || ell > m)
    throw std::invalid_argument("hpd1_decomposition: ell outside [2, m]");

  SODReport report;
  report.case_tag = CaseTag::HPD1;
  report.m = m;
  report.d = d;
  report.ell = ell;
  report.i = 0;  // no Lefschetz chain involved at this stage

  Int chi_h = detail::chi_universal_divisor(m, d, ell);
  Int chi_base = detail::chi_linear_section_locus(m, d, ell);
  report.scalars.emplace("chi_divisor", chi_h);
  report.scalars.emplace("chi_baselocus", chi_base);

  report.blocks.push_back({BlockLabel::BASE_LOCUS, std::nullopt, std::nullopt,
                           chi_base});
  for (int k = 1; k <= ell - 1; ++k)
    report.blocks.push_back({BlockLabel::AMBIENT_TWIST, std::nullopt, k,
                             Int(m + 1)});

  report.certificates.push_back(make_certificate(
      "chi_additivity", chi_h, chi_base + Int(ell - 1) * (m + 1)));

  Int stray_forms = 0;  // twisted cotangent powers on the system side
  for (int r = 1; r <= ell - 1; ++r)
    stray_forms += bott::omega_cohomology(ell - 1, r, r).total();
  report.certificates.push_back(
      make_certificate("form_twist_acyclicity", stray_forms, 0));

  Int stray_fiber = 0;  // pushforwards of O(0,-k) along the system projection
  for (int k = 1; k <= ell - 1; ++k)
    stray_fiber += bott::line_cohomology(ell - 1, -k).total();
  report.certificates.push_back(
      make_certificate("fiber_pushforward_vanishing", stray_fiber, 0));

  Int stray_graph = 0;  // pushforwards along the space projection
  for (int k = 2; k <= ell - 1; ++k)
    for (int n = 1; n < k; ++n)
      stray_graph += bott::line_cohomology(ell - 1, n - k).total() +
                     bott::line_cohomology(ell - 1, n - k - 1).total();
  report.certificates.push_back(
      make_certificate("graph_pushforward_vanishing", stray_graph, 0));

  Int block_sum = 0;
  for (const auto& b : report.blocks) block_sum += b.rank;
  report.certificates.push_back(
      make_certificate("block_rank_conservation", block_sum, chi_h));
  return report;
}

// Rank bookkeeping for the dual category: of the i*ell*d-dimensional grid of
// Lefschetz boxes over H, the columns 1..i-1 are removed and the remainder
// is compared against the case split on ell vs i.
[[nodiscard]] inline SODReport hpd2_decomposition(int m, int d, int ell) {
  if (m < 1) throw std::invalid_argument("hpd2_decomposition: m < 1");
  if (d < 1 || (m + 1) % d != 0)
    throw std::invalid_argument(
        "hpd2_decomposition: need rectangular d | m+1");
  if (ell < 1 || ell > m)
    throw std::invalid_argument("hpd2_decomposition: ell outside [1, m]");
  const int i = (m + 1) / d;

  SODReport report;
  report.m = m;
  report.d = d;
  report.ell = ell;
  report.i = i;

  Int chi_h = detail::chi_universal_divisor(m, d, ell);
  Int chi_base = detail::chi_linear_section_locus(m, d, ell);
  Int rank_c = chi_h - Int(i - 1) * ell * d;
  report.scalars.emplace("chi_divisor", chi_h);
  report.scalars.emplace("chi_baselocus", chi_base);
  report.scalars.emplace("hpd_rank", rank_c);

  const int canonical_degree = (ell - i) * d;
  report.scalars.emplace("canonical_degree", canonical_degree);
  report.calabi_yau = canonical_degree == 0;

  report.certificates.push_back(make_certificate(
      "chi_additivity", chi_h, chi_base + Int(ell - 1) * (m + 1)));

  Int block_sum_target;
  if (ell > i) {
    report.case_tag = CaseTag::HPD2_GT;
    report.blocks.push_back({BlockLabel::BASE_LOCUS, std::nullopt,
                             std::nullopt, chi_base});
    for (int k = 1; k <= ell - i; ++k)
      report.blocks.push_back({BlockLabel::LEFSCHETZ_BLOCK, 0, k, Int(d)});
    report.certificates.push_back(make_certificate(
        "case_rank_identity", rank_c, chi_base + Int(ell - i) * d));
    block_sum_target = rank_c;
  } else if (ell == i) {
    report.case_tag = CaseTag::HPD2_EQ;
    report.blocks.push_back({BlockLabel::BASE_LOCUS, std::nullopt,
                             std::nullopt, chi_base});
    report.certificates.push_back(
        make_certificate("case_rank_identity", rank_c, chi_base));
    block_sum_target = rank_c;
  } else {
    report.case_tag = CaseTag::HPD2_LT;
    report.blocks.push_back({BlockLabel::HPD_CATEGORY, std::nullopt,
                             std::nullopt, rank_c});
    for (int a = 1; a <= i - ell; ++a)
      report.blocks.push_back({BlockLabel::LEFSCHETZ_BLOCK, a, 0, Int(d)});
    // second presentation: residual blocks twisted to the top columns
    report.alternative_blocks.push_back({BlockLabel::HPD_CATEGORY,
                                         std::nullopt, std::nullopt, rank_c});
    for (int a = ell; a <= i - 1; ++a)
      report.alternative_blocks.push_back(
          {BlockLabel::LEFSCHETZ_BLOCK, a, 0, Int(d)});
    report.certificates.push_back(make_certificate(
        "case_rank_identity", chi_base, rank_c + Int(i - ell) * d));
    block_sum_target = chi_base;
  }

  Int block_sum = 0;
  for (const auto& b : report.blocks) block_sum += b.rank;
  report.certificates.push_back(
      make_certificate("block_rank_conservation", block_sum, block_sum_target));
  return report;
}

// ---------------------------------------------------------------------------
// Mutation walkthrough over the box grid

struct Box {
  int alpha = 0;
  int beta = 0;

  auto operator<=>(const Box&) const = default;
};

struct SkipCertificate {
  Box skipped;   // box claimed to have no pairings into the moving object
  Box target;    // box of the moving object's current support
  int case_id = 0;     // vanishing window that applies to the difference
  bool classified = false;
  bool verified = false;  // instantiated on a witness geometry
};

struct WalkStep {
  int stage = 0;         // 1-based
  int column_alpha = 0;  // i - stage
  std::vector<Box> mutated_past;  // in mutation order, beta = 0 down to 1-stage
  std::vector<Box> skipped;       // beta = 1 .. ell-stage
  std::vector<std::string> certificate_ids;
};

struct GridState {
  int i = 1;
  int ell = 1;
  std::set<Box> support;  // final support of the moved object
  std::vector<WalkStep> script;
  std::map<std::string, SkipCertificate> certificates;
  bool all_certified = true;
};

namespace detail {

// Smallest rectangular witness geometry carrying a chain of length i and a
// system of dimension ell (needs d*i = m+1 >= ell).
[[nodiscard]] inline divext::DivisorGeometry witness_geometry(int i, int ell) {
  int d = (ell + i - 1) / i;
  if (d < 1) d = 1;
  return {d * i - 1, d, ell};
}

// Checks that RHom(A(da, db), A) dies on the witness geometry: both cone
// terms empty for every generator pair.
[[nodiscard]] inline bool vanishing_holds(const divext::DivisorGeometry& g,
                                          int da, int db) {
  for (int s = 0; s < g.d; ++s)
    for (int s2 = 0; s2 < g.d; ++s2) {
      divext::ExtAnswer ans =
          divext::ext_on_divisor(g, {s + da * g.d, db}, {s2, 0});
      if (!ans.term_before.empty() || !ans.term_after.empty()) return false;
    }
  return true;
}

[[nodiscard]] inline std::string box_to_string(const Box& b) {
  std::ostringstream os;
  os << '(' << b.alpha << ',' << b.beta << ')';
  return os.str();
}

}  // namespace detail

// Stage-by-stage script projecting an object of the first system twist away
// from the removed grid columns.  Stage k works down column alpha = i-k in
// its shifted twist window: the first k boxes (beta = 0 down to 1-k) are
// mutated past, the remaining ell-k are skipped, and every skip carries a
// vanishing certificate against every box of the object's current support.
[[nodiscard]] inline GridState mutation_walkthrough(int i, int ell) {
  if (i < 1) throw std::invalid_argument("mutation_walkthrough: i < 1");
  if (ell < i)
    throw std::invalid_argument("mutation_walkthrough: need ell >= i");
  GridState state;
  state.i = i;
  state.ell = ell;
  const divext::DivisorGeometry witness = detail::witness_geometry(i, ell);
  const Box origin{0, 1};  // the moving object starts in the first twist

  for (int stage = 1; stage <= i - 1; ++stage) {
    WalkStep step;
    step.stage = stage;
    step.column_alpha = i - stage;
    for (int beta = 0; beta >= 1 - stage; --beta)
      step.mutated_past.push_back({step.column_alpha, beta});
    for (int beta = 1; beta <= ell - stage; ++beta)
      step.skipped.push_back({step.column_alpha, beta});

    std::vector<Box> targets{origin};
    targets.insert(targets.end(), state.support.begin(), state.support.end());
    for (const Box& skip : step.skipped)
      for (const Box& target : targets) {
        SkipCertificate cert;
        cert.skipped = skip;
        cert.target = target;
        const int da = skip.alpha - target.alpha;
        const int db = skip.beta - target.beta;
        auto window = divext::vanishing_case(i, ell, da, db);
        cert.classified = window.has_value();
        cert.case_id = window.value_or(0);
        cert.verified =
            cert.classified && detail::vanishing_holds(witness, da, db);
        std::string id = "stage" + std::to_string(stage) + ":skip" +
                         detail::box_to_string(skip) + "->" +
                         detail::box_to_string(target);
        state.all_certified &= cert.verified;
        step.certificate_ids.push_back(id);
        state.certificates.emplace(std::move(id), cert);
      }

    for (const Box& b : step.mutated_past) state.support.insert(b);
    state.script.push_back(std::move(step));
  }
  return state;
}

// The closed-form support the walkthrough must land on.
[[nodiscard]] inline std::set<Box> walkthrough_support_formula(int i, int ell) {
  if (i < 1) throw std::invalid_argument("walkthrough_support_formula: i < 1");
  if (ell < i)
    throw std::invalid_argument("walkthrough_support_formula: need ell >= i");
  std::set<Box> support;
  for (int beta = 2 - i; beta <= 0; ++beta)
    for (int alpha = 1; alpha <= i + beta - 1; ++alpha)
      support.insert({alpha, beta});
  return support;
}

// ---------------------------------------------------------------------------
// Generation schedule

struct GenerationEntry {
  Box target;    // box to be generated
  Box detector;  // box whose pairing with the target survives
  Int euler;     // aggregate pairing Euler number on the witness geometry
  GradedDims pairing;  // aggregate pairing table (concentrated in ell-2)
  bool pass = false;
};

struct GenerationSchedule {
  int i = 1, ell = 2, k = 1;
  std::vector<GenerationEntry> entries;
  bool all_pass = true;
};

// For ell > i the dual category has to regenerate the boxes beta in
// [k+1-ell, 0], alpha in [i+beta, i] of the k-th system twist, walked in
// increasing beta and, per beta, decreasing alpha from i to i+beta.  Each
// box is witnessed by the detector box (alpha-1, beta+ell-1), whose pairing
// against it survives in degree ell-2 with nonzero Euler number.
[[nodiscard]] inline GenerationSchedule generation_schedule(int i, int ell,
                                                            int k) {
  if (i < 1) throw std::invalid_argument("generation_schedule: i < 1");
  if (ell <= i)
    throw std::invalid_argument("generation_schedule: need ell > i");
  if (k < ell - i + 1 || k > ell - 1)
    throw std::invalid_argument(
        "generation_schedule: k outside [ell-i+1, ell-1]");
  GenerationSchedule schedule{i, ell, k, {}, true};
  const divext::DivisorGeometry g = detail::witness_geometry(i, ell);
  for (int beta = k + 1 - ell; beta <= 0; ++beta)
    for (int alpha = i; alpha >= i + beta; --alpha) {
      GenerationEntry entry;
      entry.target = {alpha, beta};
      entry.detector = {alpha - 1, beta + ell - 1};
      bool determined = true;
      for (int s = 0; s < g.d; ++s)
        for (int s2 = 0; s2 < g.d; ++s2) {
          divext::ExtAnswer ans = divext::ext_on_divisor(
              g, {s + entry.detector.alpha * g.d, entry.detector.beta},
              {s2 + entry.target.alpha * g.d, entry.target.beta});
          determined &= ans.status == divext::ExtStatus::Determined;
          entry.euler += ans.euler;
          if (ans.status == divext::ExtStatus::Determined)
            for (const auto& [q, dim] : ans.table.entries())
              entry.pairing.add(q, dim);
        }
      bool concentrated = !entry.pairing.empty();
      for (const auto& [q, dim] : entry.pairing.entries())
        concentrated &= q == ell - 2;
      entry.pass = determined && entry.euler != 0 && concentrated;
      schedule.all_pass &= entry.pass;
      schedule.entries.push_back(std::move(entry));
    }
  return schedule;
}

// ---------------------------------------------------------------------------
// Fibration-formula checks and the worked-example catalog

enum class OrlovKind { PROJECTIVE_BUNDLE, BLOWUP };

struct OrlovReport {
  OrlovKind kind = OrlovKind::PROJECTIVE_BUNDLE;
  std::vector<Certificate> certificates;

  [[nodiscard]] bool all_pass() const {
    for (const auto& c : certificates)
      if (!c.pass) return false;
    return true;
  }
};

[[nodiscard]] inline OrlovReport orlov_projective_bundle(const Int& chi_base,
                                                         int fiber_rank,
                                                         const Int& chi_total) {
  if (fiber_rank < 1)
    throw std::invalid_argument("orlov_projective_bundle: fiber rank < 1");
  OrlovReport report{OrlovKind::PROJECTIVE_BUNDLE, {}};
  report.certificates.push_back(make_certificate(
      "bundle_chi_product", chi_total, Int(fiber_rank) * chi_base));
  return report;
}

[[nodiscard]] inline OrlovReport orlov_blowup(const Int& chi_x,
                                              const Int& chi_z, int codim,
                                              const Int& chi_total) {
  OrlovReport report{OrlovKind::BLOWUP, {}};
  report.certificates.push_back(make_certificate(
      "blowup_chi_additivity", chi_total,
      chern::blowup_chi(chi_x, chi_z, codim)));
  return report;
}

struct ExampleReport {
  std::string name;
  int n = 0;  // series parameter, 0 when the entry is a single geometry
  std::optional<CaseTag> case_tag;
  std::vector<SODBlock> blocks;
  std::vector<Certificate> certificates;
  std::map<std::string, Int> scalars;
  std::optional<bool> calabi_yau;

  [[nodiscard]] bool all_pass() const {
    for (const auto& c : certificates)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

[[nodiscard]] inline ExampleReport from_sod(std::string name, int n,
                                            SODReport sod) {
  ExampleReport ex;
  ex.name = std::move(name);
  ex.n = n;
  ex.case_tag = sod.case_tag;
  ex.blocks = std::move(sod.blocks);
  ex.certificates = std::move(sod.certificates);
  ex.scalars = std::move(sod.scalars);
  ex.calabi_yau = sod.calabi_yau;
  return ex;
}

}  // namespace detail

// Worked examples with their pinned literature values:
//   quadric_even(n):          Q^{2n} in P^{2n+1}, residual category of rank 2
//   cubic_fourfold:           cubic in P^5, residual rank 24 = quartic K3
//   grassmannian_lefschetz(n): Gr(2, 2n+1), cell count (2n+1)n in n-blocks
//   two_cubics_pencil:        pencil of cubics in P^5, chi = -144, CY
[[nodiscard]] inline ExampleReport example_catalog(const std::string& name,
                                                   std::optional<int> n = {}) {
  auto series_param = [&](int fallback) {
    int value = n.value_or(fallback);
    if (value < 1)
      throw std::invalid_argument("example_catalog: series parameter < 1");
    return value;
  };
  if (name == "quadric_even") {
    int nn = series_param(2);
    ExampleReport ex = detail::from_sod(
        name, nn, hpd2_decomposition(2 * nn + 1, 2, 1));
    ex.certificates.push_back(
        make_certificate("spinor_pair_rank", ex.scalars.at("hpd_rank"), 2));
    return ex;
  }
  if (name == "cubic_fourfold") {
    if (n.has_value())
      throw std::invalid_argument("example_catalog: entry takes no parameter");
    ExampleReport ex = detail::from_sod(name, 0, hpd2_decomposition(5, 3, 1));
    ex.certificates.push_back(make_certificate(
        "k3_surface_chi", ex.scalars.at("hpd_rank"),
        chern::chi_top({AmbientSpec({3}), {{4}}})));
    return ex;
  }
  if (name == "grassmannian_lefschetz") {
    int nn = series_param(3);
    ExampleReport ex;
    ex.name = name;
    ex.n = nn;
    const int chain_length = 2 * nn + 1;
    for (int a = 0; a < chain_length; ++a)
      ex.blocks.push_back({BlockLabel::LEFSCHETZ_BLOCK, a, std::nullopt,
                           Int(nn)});
    Int cells = binom_table(chain_length, 2);
    ex.scalars.emplace("schubert_cells", cells);
    ex.certificates.push_back(make_certificate(
        "cell_count_identity", cells, Int(chain_length) * nn));
    Int block_sum = 0;
    for (const auto& b : ex.blocks) block_sum += b.rank;
    ex.certificates.push_back(
        make_certificate("block_rank_conservation", block_sum, cells));
    return ex;
  }
  if (name == "two_cubics_pencil") {
    if (n.has_value())
      throw std::invalid_argument("example_catalog: entry takes no parameter");
    ExampleReport ex = detail::from_sod(name, 0, hpd2_decomposition(5, 3, 2));
    ex.certificates.push_back(make_certificate(
        "catalog_chi", ex.scalars.at("chi_baselocus"), -144));
    return ex;
  }
  throw std::invalid_argument("example_catalog: unknown entry '" + name + "'");
}

[[nodiscard]] inline std::vector<std::string> example_names() {
  return {"quadric_even", "cubic_fourfold", "grassmannian_lefschetz",
          "two_cubics_pencil"};
}

}  // namespace hpd::engine
