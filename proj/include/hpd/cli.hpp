#pragma once

#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hpd/bott.hpp"
#include "hpd/chern.hpp"
#include "hpd/divisor_ext.hpp"
#include "hpd/grid.hpp"
#include "hpd/hpd_engine.hpp"
#include "hpd/kgroup.hpp"
#include "hpd/report_io.hpp"

// Command-line front end.  Exit codes: 0 = computed and every certificate
// passed; 1 = computed but at least one certificate failed; 2 = usage error
// or violated precondition.
namespace hpd::cli {

namespace detail {

using io::json;

struct RunOutput {
  int code = 0;
  std::string rendered;  // in the requested format
  std::string error;     // diagnostics for the error stream
  json payload;          // canonical JSON form, valid when code < 2
};

[[nodiscard]] inline int parse_strict_int(const std::string& token) {
  std::size_t pos = 0;
  int value = std::stoi(token, &pos);
  if (pos != token.size())
    throw std::invalid_argument("not an integer: " + token);
  return value;
}

[[nodiscard]] inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ','))
    out.push_back(parse_strict_int(token));
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

[[nodiscard]] inline std::vector<std::vector<int>> parse_int_rows(
    const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ';')) rows.push_back(parse_int_list(token));
  return rows;
}

[[nodiscard]] inline std::string format_twist(const kgroup::Twist& t) {
  std::ostringstream os;
  os << "O(";
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (j) os << ',';
    os << t[j];
  }
  os << ')';
  return os.str();
}

[[nodiscard]] inline std::string format_class(const kgroup::KClass& c) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [twist, mult] : c.terms()) {
    Int coeff = mult;
    if (first) {
      if (coeff < 0) {
        os << "- ";
        coeff = -coeff;
      }
    } else {
      os << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    if (coeff != 1) os << coeff << ' ';
    os << '[' << format_twist(twist) << ']';
    first = false;
  }
  return os.str();
}

[[nodiscard]] inline std::string certificate_line(
    const engine::Certificate& c) {
  std::ostringstream os;
  os << "certificate " << c.name << ": " << c.lhs << " == " << c.rhs << ' '
     << (c.pass ? "[ok]" : "[FAIL]");
  return os.str();
}

[[nodiscard]] inline std::string block_line(const engine::SODBlock& b) {
  std::ostringstream os;
  os << "block " << engine::to_string(b.label);
  if (b.alpha) os << " alpha=" << *b.alpha;
  if (b.beta) os << " beta=" << *b.beta;
  os << " rank=" << b.rank;
  return os.str();
}

[[nodiscard]] inline std::string report_ascii(
    const std::string& head, const std::vector<engine::SODBlock>& blocks,
    const std::vector<engine::SODBlock>& alternative,
    const std::vector<engine::Certificate>& certs,
    const std::map<std::string, Int>& scalars,
    const std::optional<bool>& calabi_yau, bool all_pass) {
  std::ostringstream os;
  os << head << '\n';
  for (const auto& b : blocks) os << block_line(b) << '\n';
  if (!alternative.empty()) {
    os << "alternative presentation:\n";
    for (const auto& b : alternative) os << "  " << block_line(b) << '\n';
  }
  for (const auto& c : certs) os << certificate_line(c) << '\n';
  if (!scalars.empty()) {
    os << "scalars:";
    for (const auto& [key, value] : scalars) os << ' ' << key << '=' << value;
    os << '\n';
  }
  if (calabi_yau) os << "calabi_yau " << (*calabi_yau ? "yes" : "no") << '\n';
  os << (all_pass ? "all certificates pass" : "CERTIFICATE FAILURE") << '\n';
  return os.str();
}

// ------------------------------------------------------------------ handlers

[[nodiscard]] inline RunOutput handle_cohom(int n, int p, int k,
                                            const std::string& format) {
  GradedDims table = bott::omega_cohomology(n, p, k);
  RunOutput ro;
  ro.payload["command"] = "cohom";
  ro.payload["inputs"] = {{"n", n}, {"p", p}, {"k", k}};
  ro.payload["table"] = io::to_json(table);
  ro.payload["total"] = io::json_int(table.total());
  ro.payload["euler"] = io::json_int(table.euler());
  if (format == "tsv") {
    ro.rendered = io::tsv_table(table);
  } else if (format == "ascii") {
    std::ostringstream os;
    os << "cohom n=" << n << " p=" << p << " k=" << k << '\n'
       << "table " << table.to_string() << '\n'
       << "total " << table.total() << '\n'
       << "euler " << table.euler() << '\n';
    ro.rendered = os.str();
  }
  return ro;
}

[[nodiscard]] inline RunOutput handle_chi(const std::string& n_text,
                                          const std::string& d_text,
                                          const std::string& format) {
  std::vector<int> dims = parse_int_list(n_text);
  std::vector<std::vector<int>> degrees =
      d_text.empty() ? std::vector<std::vector<int>>{} : parse_int_rows(d_text);
  Int chi = chern::chi_top({AmbientSpec(dims), degrees});
  RunOutput ro;
  ro.payload["command"] = "chi";
  ro.payload["inputs"] = {{"n", dims}, {"d", degrees}};
  ro.payload["chi_top"] = io::json_int(chi);
  if (format == "tsv") {
    std::ostringstream os;
    os << "chi_top\t" << chi << '\n';
    ro.rendered = os.str();
  } else if (format == "ascii") {
    std::ostringstream os;
    os << "chi n=" << n_text;
    if (!d_text.empty()) os << " d=" << d_text;
    os << '\n' << "chi_top " << chi << '\n';
    ro.rendered = os.str();
  }
  return ro;
}

[[nodiscard]] inline kgroup::Collection collection_from_text(
    const std::string& n_text, const std::string& twists_text) {
  std::vector<int> dims = parse_int_list(n_text);
  std::vector<std::vector<int>> rows = parse_int_rows(twists_text);
  return kgroup::Collection::of_line_bundles(AmbientSpec(dims), rows);
}

[[nodiscard]] inline RunOutput handle_gram(const std::string& n_text,
                                           const std::string& twists_text,
                                           const std::string& format) {
  kgroup::Collection col = collection_from_text(n_text, twists_text);
  kgroup::GramMatrix gram = kgroup::gram_matrix(col);
  kgroup::ExceptionalityReport report = kgroup::is_exceptional_collection(col);

  std::vector<engine::Certificate> certs;
  certs.push_back(engine::make_certificate(
      "pairing_unitriangular", report.numerical ? 1 : 0, 0));
  if (report.graded_layer_applicable)
    certs.push_back(engine::make_certificate("graded_exceptional",
                                             report.graded ? 1 : 0, 0));

  RunOutput ro;
  ro.code = report.pass ? 0 : 1;
  ro.payload["command"] = "gram";
  ro.payload["inputs"] = {{"n", parse_int_list(n_text)},
                          {"twists", parse_int_rows(twists_text)}};
  json matrix = json::array();
  for (const auto& row : gram.entries) {
    json jrow = json::array();
    for (const auto& v : row) jrow.push_back(io::json_int(v));
    matrix.push_back(jrow);
  }
  ro.payload["gram"] = matrix;
  ro.payload["certificates"] = io::certificates_to_json(certs);
  ro.payload["exceptional"] = report.pass;

  if (format == "tsv") {
    std::ostringstream os;
    for (const auto& row : gram.entries) {
      for (std::size_t j = 0; j < row.size(); ++j)
        os << (j ? "\t" : "") << row[j];
      os << '\n';
    }
    ro.rendered = os.str();
  } else if (format == "ascii") {
    std::ostringstream os;
    os << "gram n=" << n_text << " objects=" << gram.size() << '\n';
    for (const auto& row : gram.entries) {
      for (const auto& v : row) {
        std::string s = v.str();
        os << std::string(s.size() < 6 ? 6 - s.size() : 1, ' ') << s;
      }
      os << '\n';
    }
    for (const auto& c : certs) os << certificate_line(c) << '\n';
    if (report.numerical)
      os << "pairing violation at (" << report.numerical->row << ','
         << report.numerical->col << "): chi = " << report.numerical->value
         << '\n';
    if (report.graded)
      os << "graded violation at (" << report.graded->row << ','
         << report.graded->col << "): " << report.graded->table.to_string()
         << '\n';
    os << "exceptional: " << (report.pass ? "yes" : "no") << '\n';
    ro.rendered = os.str();
  }
  return ro;
}

[[nodiscard]] inline RunOutput handle_mutate(const std::string& n_text,
                                             const std::string& twists_text,
                                             int t, const std::string& side,
                                             const std::string& format) {
  kgroup::Collection col = collection_from_text(n_text, twists_text);
  kgroup::Collection mutated = side == "left" ? kgroup::left_mutate(col, t)
                                              : kgroup::right_mutate(col, t);
  RunOutput ro;
  ro.payload["command"] = "mutate";
  ro.payload["inputs"] = {{"n", parse_int_list(n_text)},
                          {"twists", parse_int_rows(twists_text)},
                          {"t", t},
                          {"side", side}};
  json objects = json::array();
  for (const auto& obj : mutated.objects()) {
    json terms = json::array();
    for (const auto& [twist, mult] : obj.terms())
      terms.push_back({{"coeff", io::json_int(mult)}, {"twist", twist}});
    objects.push_back(terms);
  }
  ro.payload["objects"] = objects;
  if (format == "tsv") {
    std::ostringstream os;
    os << "object\tcoeff\ttwist\n";
    for (std::size_t s = 0; s < mutated.objects().size(); ++s)
      for (const auto& [twist, mult] : mutated.objects()[s].terms()) {
        os << s << '\t' << mult << '\t';
        for (std::size_t j = 0; j < twist.size(); ++j)
          os << (j ? "," : "") << twist[j];
        os << '\n';
      }
    ro.rendered = os.str();
  } else if (format == "ascii") {
    std::ostringstream os;
    os << "mutate n=" << n_text << " side=" << side << " t=" << t << '\n';
    for (std::size_t s = 0; s < mutated.objects().size(); ++s)
      os << "object " << s << ": " << format_class(mutated.objects()[s])
         << '\n';
    ro.rendered = os.str();
  }
  return ro;
}

[[nodiscard]] inline RunOutput handle_ext(int m, int d, int ell,
                                          const std::string& from_text,
                                          const std::string& to_text,
                                          const std::string& format) {
  std::vector<int> from = parse_int_list(from_text);
  std::vector<int> to = parse_int_list(to_text);
  if (from.size() != 2 || to.size() != 2)
    throw std::invalid_argument("ext: --from/--to need exactly two entries");
  divext::ExtAnswer ans = divext::ext_on_divisor(
      {m, d, ell}, {from[0], from[1]}, {to[0], to[1]});
  RunOutput ro;
  ro.payload = io::to_json(ans);
  ro.payload["command"] = "ext";
  ro.payload["inputs"] = {
      {"m", m}, {"d", d}, {"ell", ell}, {"from", from}, {"to", to}};
  const bool determined = ans.status == divext::ExtStatus::Determined;
  if (format == "tsv") {
    std::ostringstream os;
    os << "status\t" << (determined ? "determined" : "indeterminate") << '\n'
       << "euler\t" << ans.euler << '\n';
    if (determined)
      for (const auto& [q, dim] : ans.table.entries())
        os << q << '\t' << dim << '\n';
    ro.rendered = os.str();
  } else if (format == "ascii") {
    std::ostringstream os;
    os << "ext m=" << m << " d=" << d << " ell=" << ell << " from=("
       << from[0] << ',' << from[1] << ") to=(" << to[0] << ',' << to[1]
       << ")\n"
       << "status " << (determined ? "determined" : "indeterminate") << '\n'
       << "term_after " << ans.term_after.to_string() << '\n'
       << "term_before " << ans.term_before.to_string() << '\n';
    if (determined) os << "table " << ans.table.to_string() << '\n';
    os << "euler " << ans.euler << '\n';
    ro.rendered = os.str();
  }
  return ro;
}

[[nodiscard]] inline RunOutput handle_hpd(int stage, int m, int d, int ell,
                                          const std::string& format) {
  engine::SODReport r = stage == 1 ? engine::hpd1_decomposition(m, d, ell)
                                   : engine::hpd2_decomposition(m, d, ell);
  RunOutput ro;
  ro.code = r.all_pass() ? 0 : 1;
  ro.payload = io::to_json(r);
  ro.payload["command"] = stage == 1 ? "hpd1" : "hpd2";
  ro.payload["inputs"] = {{"m", m}, {"d", d}, {"ell", ell}};
  if (format == "tsv") {
    ro.rendered = io::tsv_blocks(r.blocks);
  } else if (format == "ascii") {
    std::ostringstream head;
    head << (stage == 1 ? "hpd1" : "hpd2") << " m=" << m << " d=" << d
         << " ell=" << ell << "  case " << engine::to_string(r.case_tag);
    if (r.i > 0) head << "  i=" << r.i;
    ro.rendered =
        report_ascii(head.str(), r.blocks, r.alternative_blocks,
                     r.certificates, r.scalars, r.calabi_yau, r.all_pass());
  }
  return ro;
}

[[nodiscard]] inline RunOutput handle_walk(int i, int ell,
                                           const std::string& format) {
  engine::GridState g = engine::mutation_walkthrough(i, ell);
  RunOutput ro;
  ro.code = g.all_certified ? 0 : 1;
  ro.payload = io::to_json(g);
  ro.payload["command"] = "walk";
  ro.payload["inputs"] = {{"i", i}, {"ell", ell}};
  if (format == "tsv") {
    std::ostringstream os;
    os << "alpha\tbeta\n";
    for (const auto& b : g.support) os << b.alpha << '\t' << b.beta << '\n';
    ro.rendered = os.str();
  } else if (format == "ascii") {
    std::ostringstream os;
    os << "walk i=" << i << " ell=" << ell << '\n'
       << grid::walkthrough_ascii(g);
    for (const auto& s : g.script) {
      os << "stage " << s.stage << " column " << s.column_alpha << ": past";
      for (const auto& b : s.mutated_past)
        os << " (" << b.alpha << ',' << b.beta << ')';
      os << "; skipped";
      for (const auto& b : s.skipped)
        os << " (" << b.alpha << ',' << b.beta << ')';
      os << '\n';
    }
    std::size_t verified = 0;
    for (const auto& [id, c] : g.certificates) verified += c.verified ? 1 : 0;
    os << "certificates " << verified << '/' << g.certificates.size()
       << " verified\n"
       << (g.all_certified ? "all skips certified" : "CERTIFICATE FAILURE")
       << '\n';
    ro.rendered = os.str();
  }
  return ro;
}

[[nodiscard]] inline RunOutput handle_example(const std::string& name,
                                              std::optional<int> n,
                                              const std::string& format) {
  engine::ExampleReport ex = engine::example_catalog(name, n);
  RunOutput ro;
  ro.code = ex.all_pass() ? 0 : 1;
  ro.payload = io::to_json(ex);
  ro.payload["command"] = "example";
  json inputs{{"name", name}};
  if (n) inputs["n"] = *n;
  ro.payload["inputs"] = inputs;
  if (format == "tsv") {
    ro.rendered = io::tsv_blocks(ex.blocks);
  } else if (format == "ascii") {
    std::ostringstream head;
    head << "example " << ex.name;
    if (ex.n > 0) head << " n=" << ex.n;
    if (ex.case_tag) head << "  case " << engine::to_string(*ex.case_tag);
    ro.rendered = report_ascii(head.str(), ex.blocks, {}, ex.certificates,
                               ex.scalars, ex.calabi_yau, ex.all_pass());
  }
  return ro;
}

// -------------------------------------------------------------- dispatching

[[nodiscard]] inline RunOutput single_run(std::vector<std::string> args) {
  CLI::App app{"exact arithmetic for box grids, pairings, and dual "
               "decompositions of universal divisors"};
  app.name("hpdcalc");
  app.require_subcommand(1);

  std::string format = "ascii";
  auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "tsv", "ascii"}));
  };

  int n = 0, p = 0, k = 0, m = 0, d = 1, ell = 1, i = 1, t = 0;
  std::string n_text, d_text, twists_text, from_text, to_text, side, name;

  CLI::App* cohom = app.add_subcommand(
      "cohom", "twisted p-form cohomology table on projective space");
  cohom->add_option("--n", n, "ambient dimension")->required();
  cohom->add_option("--p", p, "form degree");
  cohom->add_option("--k", k, "twist")->required();
  add_format(cohom);

  CLI::App* chi = app.add_subcommand(
      "chi", "topological Euler number of a multihomogeneous intersection");
  chi->add_option("--n", n_text, "factor dimensions, comma-separated")
      ->required();
  chi->add_option("--d", d_text,
                  "degree rows: comma within a row, semicolon between");
  add_format(chi);

  CLI::App* gram = app.add_subcommand(
      "gram", "pairing matrix and exceptionality check for twist collections");
  gram->add_option("--n", n_text, "factor dimensions")->required();
  gram->add_option("--twists", twists_text,
                   "objects: comma within a twist, semicolon between")
      ->required();
  add_format(gram);

  CLI::App* mutate = app.add_subcommand(
      "mutate", "class-level mutation of a twist collection at a slot");
  mutate->add_option("--n", n_text, "factor dimensions")->required();
  mutate->add_option("--twists", twists_text, "objects")->required();
  mutate->add_option("--t", t, "slot")->required();
  mutate->add_option("--side", side, "mutation side")
      ->check(CLI::IsMember({"left", "right"}))
      ->required();
  add_format(mutate);

  CLI::App* ext = app.add_subcommand(
      "ext", "pairing table between twists on the universal divisor");
  ext->add_option("--m", m, "space dimension")->required();
  ext->add_option("--d", d, "divisor degree")->required();
  ext->add_option("--ell", ell, "system dimension")->required();
  ext->add_option("--from", from_text, "source bidegree u,v")->required();
  ext->add_option("--to", to_text, "target bidegree u,v")->required();
  add_format(ext);

  CLI::App* hpd1 = app.add_subcommand(
      "hpd1", "divisor-side decomposition with vanishing certificates");
  hpd1->add_option("--m", m, "space dimension")->required();
  hpd1->add_option("--d", d, "divisor degree")->required();
  hpd1->add_option("--ell", ell, "system dimension")->required();
  add_format(hpd1);

  CLI::App* hpd2 = app.add_subcommand(
      "hpd2", "dual-side rank bookkeeping with case certificates");
  hpd2->add_option("--m", m, "space dimension")->required();
  hpd2->add_option("--d", d, "divisor degree")->required();
  hpd2->add_option("--ell", ell, "system dimension")->required();
  add_format(hpd2);

  CLI::App* walk = app.add_subcommand(
      "walk", "stagewise mutation walkthrough over the box grid");
  walk->add_option("--i", i, "chain length")->required();
  walk->add_option("--ell", ell, "system dimension")->required();
  add_format(walk);

  CLI::App* example =
      app.add_subcommand("example", "worked example with pinned certificates");
  example->add_option("--name", name, "catalog entry")->required();
  CLI::Option* n_opt = example->add_option("--n", n, "series parameter");
  add_format(example);

  // consumed by the outer driver before parsing; declared for help only
  app.add_option("--out")
      ->description("write the output to a file instead of stdout")
      ->group("Driver");
  app.add_option("--sweep")
      ->description("fan one integer flag over a range, e.g. --sweep ell=1..4")
      ->group("Driver");

  RunOutput ro;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    ro.rendered = app.help();
    return ro;
  } catch (const CLI::ParseError& e) {
    ro.code = 2;
    ro.error = std::string("usage error: ") + e.what() + '\n';
    return ro;
  }

  try {
    if (cohom->parsed()) return handle_cohom(n, p, k, format);
    if (chi->parsed()) return handle_chi(n_text, d_text, format);
    if (gram->parsed()) return handle_gram(n_text, twists_text, format);
    if (mutate->parsed())
      return handle_mutate(n_text, twists_text, t, side, format);
    if (ext->parsed())
      return handle_ext(m, d, ell, from_text, to_text, format);
    if (hpd1->parsed()) return handle_hpd(1, m, d, ell, format);
    if (hpd2->parsed()) return handle_hpd(2, m, d, ell, format);
    if (walk->parsed()) return handle_walk(i, ell, format);
    if (example->parsed())
      return handle_example(
          name, n_opt->count() ? std::optional<int>(n) : std::nullopt, format);
    ro.code = 2;
    ro.error = "usage error: no subcommand\n";
  } catch (const std::exception& e) {
    ro.code = 2;
    ro.error = std::string("error: ") + e.what() + '\n';
  }
  return ro;
}

struct SweepSpec {
  std::string flag;
  int lo = 0, hi = 0;
};

[[nodiscard]] inline SweepSpec parse_sweep(const std::string& text) {
  static const std::regex pattern{R"(^([A-Za-z_]+)=(-?\d+)\.\.(-?\d+)$)"};
  std::smatch match;
  if (!std::regex_match(text, match, pattern))
    throw std::invalid_argument("bad sweep spec (want flag=lo..hi): " + text);
  SweepSpec spec{match[1].str(), parse_strict_int(match[2].str()),
                 parse_strict_int(match[3].str())};
  if (spec.lo > spec.hi)
    throw std::invalid_argument("empty sweep range: " + text);
  return spec;
}

// Removes "--flag value" / "--flag=value" and returns the value, if present.
[[nodiscard]] inline std::optional<std::string> extract_flag(
    std::vector<std::string>& args, const std::string& flag) {
  for (std::size_t j = 0; j < args.size(); ++j) {
    if (args[j] == flag && j + 1 < args.size()) {
      std::string value = args[j + 1];
      args.erase(args.begin() + j, args.begin() + j + 2);
      return value;
    }
    if (args[j].rfind(flag + "=", 0) == 0) {
      std::string value = args[j].substr(flag.size() + 1);
      args.erase(args.begin() + j);
      return value;
    }
  }
  return std::nullopt;
}

[[nodiscard]] inline std::vector<std::string> with_flag_value(
    std::vector<std::string> args, const std::string& flag, int value) {
  (void)extract_flag(args, flag);
  args.push_back(flag + "=" + std::to_string(value));
  return args;
}

}  // namespace detail

// Runs one invocation (args exclude the program name); output and
// diagnostics go to the given streams.  Returns the process exit code.
inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  using namespace detail;
  std::optional<std::string> out_path = extract_flag(args, "--out");
  std::optional<std::string> sweep_text = extract_flag(args, "--sweep");

  std::string rendered;
  int code = 0;
  if (!sweep_text) {
    RunOutput ro = single_run(args);
    err << ro.error;
    if (ro.code < 2 && ro.rendered.empty())
      ro.rendered = ro.payload.dump(2) + '\n';  // json is the default fallback
    rendered = std::move(ro.rendered);
    code = ro.code;
  } else {
    SweepSpec spec;
    try {
      spec = parse_sweep(*sweep_text);
    } catch (const std::exception& e) {
      err << "usage error: " << e.what() << '\n';
      return 2;
    }
    // format governs how the runs are merged; each run renders itself
    std::vector<std::string> probe = args;
    std::string format =
        extract_flag(probe, "--format").value_or(std::string("ascii"));

    std::vector<std::future<RunOutput>> futures;
    std::vector<int> values;
    for (int v = spec.lo; v <= spec.hi; ++v) {
      values.push_back(v);
      futures.push_back(std::async(std::launch::async, single_run,
                                   with_flag_value(args, "--" + spec.flag, v)));
    }
    json runs = json::array();
    std::ostringstream merged;
    for (std::size_t j = 0; j < futures.size(); ++j) {
      RunOutput ro = futures[j].get();
      code = std::max(code, ro.code);
      if (!ro.error.empty())
        err << spec.flag << '=' << values[j] << ": " << ro.error;
      if (format == "json") {
        runs.push_back(ro.payload);
      } else {
        merged << "# " << spec.flag << '=' << values[j] << '\n'
               << ro.rendered;
      }
    }
    if (format == "json") {
      json payload;
      payload["command"] = "sweep";
      payload["parameter"] = spec.flag;
      payload["values"] = values;
      payload["runs"] = runs;
      rendered = payload.dump(2) + '\n';
    } else {
      rendered = merged.str();
    }
  }

  if (out_path) {
    std::ofstream file(*out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << *out_path << '\n';
      return 2;
    }
    file << rendered;
  } else {
    out << rendered;
  }
  return code;
}

}  // namespace hpd::cli
