#pragma once

#include <optional>
#include <vector>

#include "hpd/bott.hpp"
#include "hpd/graded.hpp"
#include "hpd/integer.hpp"

namespace hpd::divext {

// The universal (d,1)-divisor H inside P^m x P^{l-1}: the incidence locus of
// an l-dimensional linear system of degree-d hypersurfaces in P^m.  For
// l = 1 it is the hypersurface itself; l = m+1 is the full system.
struct DivisorGeometry {
  int m = 0;    // dimension of the projective space being sectioned
  int d = 1;    // degree of the hypersurfaces
  int ell = 1;  // dimension of the linear system, 1 <= ell <= m+1

  [[nodiscard]] int dim() const { return m + ell - 2; }
};

inline void validate(const DivisorGeometry& g) {
  if (g.m < 0) throw std::invalid_argument("DivisorGeometry: m < 0");
  if (g.d < 1) throw std::invalid_argument("DivisorGeometry: d < 1");
  if (g.ell < 1 || g.ell > g.m + 1)
    throw std::invalid_argument("DivisorGeometry: ell outside [1, m+1]");
}

// Bidegree of a line bundle O(u, v) restricted from the ambient product.
struct Bidegree {
  int u = 0;
  int v = 0;

  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

// RHom between restricted line bundles on H is the cone of the restriction
// map  RGamma(O(u-d, v-1)) -> RGamma(O(u, v))  with (u, v) = to - from.
// When at least one of the two ambient tables is zero the answer is an exact
// dimension table (Determined); otherwise only the Euler number is certain
// and both contributing tables are reported (Indeterminate).
enum class ExtStatus { Determined, Indeterminate };

struct ExtAnswer {
  ExtStatus status = ExtStatus::Indeterminate;
  GradedDims table;        // meaningful only when Determined
  GradedDims term_before;  // RGamma(O(to - from - (d,1)))
  GradedDims term_after;   // RGamma(O(to - from))
  Int euler;               // chi(after) - chi(before), always exact
};

[[nodiscard]] inline ExtAnswer ext_on_divisor(const DivisorGeometry& g,
                                              const Bidegree& from,
                                              const Bidegree& to) {
  validate(g);
  const int du = to.u - from.u;
  const int dv = to.v - from.v;
  ExtAnswer ans;
  ans.term_after = bott::kunneth({{g.m, 0, du}, {g.ell - 1, 0, dv}});
  ans.term_before =
      bott::kunneth({{g.m, 0, du - g.d}, {g.ell - 1, 0, dv - 1}});
  ans.euler = ans.term_after.euler() - ans.term_before.euler();
  if (ans.term_before.empty()) {
    ans.status = ExtStatus::Determined;
    ans.table = ans.term_after;
  } else if (ans.term_after.empty()) {
    // the cone shifts the surviving term down one degree
    ans.status = ExtStatus::Determined;
    ans.table = ans.term_before.shifted(-1);
  }
  return ans;
}

// Restriction of the ambient canonical bundle to H by adjunction:
// O(-m-1, -ell) twisted by the divisor class (d, 1).
[[nodiscard]] inline Bidegree canonical_twist(const DivisorGeometry& g) {
  validate(g);
  return {g.d - g.m - 1, 1 - g.ell};
}

// Does the projection to the system factor kill O(0, -k)?  True exactly on
// the acyclic band 1 <= k <= ell-1 of P^{ell-1}; read off the table itself.
[[nodiscard]] inline bool fiber_vanishing(int ell, int k) {
  if (ell < 1) throw std::invalid_argument("fiber_vanishing: ell < 1");
  return bott::line_cohomology(ell - 1, -k).empty();
}

// ---------------------------------------------------------------------------
// Vanishing windows between twisted Lefschetz blocks.
//
// For a rectangular Lefschetz chain A, A(1), ..., A(i-1) on P^m (block of
// the d consecutive twists 0..d-1, d*i = m+1), the pairs (alpha, beta) for
// which RHom_H(A(alpha, beta), A) vanishes identically split into four
// windows.  In the first two one Kunneth factor kills both cone terms by
// itself, so the other coordinate is unconstrained; the two corner cases
// need one factor each and exist only when both i >= 2 and ell >= 2.

inline constexpr int kCaseAlphaInterior = 1;  // 1 <= alpha <= i-2, any beta
inline constexpr int kCaseBetaInterior = 2;   // 1 <= beta <= ell-2, any alpha
inline constexpr int kCaseFarCorner = 3;      // (alpha, beta) = (0, ell-1)
inline constexpr int kCaseNearCorner = 4;     // (alpha, beta) = (i-1, 0)

[[nodiscard]] inline std::optional<int> vanishing_case(int i, int ell,
                                                       int alpha, int beta) {
  if (alpha >= 1 && alpha <= i - 2) return kCaseAlphaInterior;
  if (beta >= 1 && beta <= ell - 2) return kCaseBetaInterior;
  if (i >= 2 && ell >= 2) {
    if (alpha == 0 && beta == ell - 1) return kCaseFarCorner;
    if (alpha == i - 1 && beta == 0) return kCaseNearCorner;
  }
  return std::nullopt;
}

struct VanishingCheck {
  int case_id = 0;
  int alpha = 0, beta = 0;
  int s = 0, s2 = 0;  // generator twists inside the block, O(s + alpha*d) vs O(s2)
  bool pass = false;
};

struct VanishingTable {
  DivisorGeometry geometry;
  int i = 0;
  std::vector<VanishingCheck> checks;
  bool all_pass = true;
};

// Both cone terms must vanish for every generator pair in every window; the
// table lists each (case, alpha, beta, s, s2) with its verdict.  Degenerate
// windows (empty ranges, corner cases with i or ell equal to 1) contribute
// no rows.
[[nodiscard]] inline VanishingTable block_vanishing_table(
    const DivisorGeometry& g, int i) {
  validate(g);
  if (i < 1 || g.d * i != g.m + 1)
    throw std::invalid_argument(
        "block_vanishing_table: need rectangular d * i = m + 1");
  VanishingTable out{g, i, {}, true};
  auto check_box = [&](int case_id, int alpha, int beta) {
    for (int s = 0; s < g.d; ++s)
      for (int s2 = 0; s2 < g.d; ++s2) {
        ExtAnswer ans = ext_on_divisor(g, {s + alpha * g.d, beta}, {s2, 0});
        bool pass = ans.term_before.empty() && ans.term_after.empty();
        out.checks.push_back({case_id, alpha, beta, s, s2, pass});
        out.all_pass &= pass;
      }
  };
  for (int alpha = 1; alpha <= i - 2; ++alpha)
    for (int beta = 0; beta <= g.ell - 1; ++beta)
      check_box(kCaseAlphaInterior, alpha, beta);
  for (int beta = 1; beta <= g.ell - 2; ++beta)
    for (int alpha = 0; alpha <= i - 1; ++alpha)
      check_box(kCaseBetaInterior, alpha, beta);
  if (i >= 2 && g.ell >= 2) {
    check_box(kCaseFarCorner, 0, g.ell - 1);
    check_box(kCaseNearCorner, i - 1, 0);
  }
  return out;
}

}  // namespace hpd::divext
