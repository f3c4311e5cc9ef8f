#pragma once

#include <vector>

#include "hpd/graded.hpp"

namespace hpd::bott {

// One Kunneth factor: H^*(P^n, Omega^p(k)).
struct CohomFactor {
  int n = 0;  // projective space dimension, n >= 0
  int p = 0;  // exterior power of the cotangent bundle, 0 <= p <= n
  int k = 0;  // twist
};

inline void validate(const CohomFactor& f) {
  if (f.n < 0) throw std::invalid_argument("cohomology: negative dimension");
  if (f.p < 0 || f.p > f.n)
    throw std::invalid_argument("cohomology: form degree outside [0, n]");
}

// Cohomology table of Omega^p(k) on P^n.  At most one degree is populated:
//   q = 0 (k > p):      C(k+n-p, k) * C(k-1, p)
//   q = p (k = 0):      1
//   q = n (k < p - n):  C(-k+p, -k) * C(-k-1, n-p)
// with binomials in the table convention (zero on out-of-range arguments).
// The branch conditions are disjoint except on P^0, where the accumulation
// still yields the correct {0 -> 1} for every twist.
[[nodiscard]] inline GradedDims omega_cohomology(int n, int p, int k) {
  validate({n, p, k});
  GradedDims out;
  if (k > p)
    out.add(0, binom_table(k + n - p, k) * binom_table(k - 1, p));
  if (k == 0)
    out.add(p, 1);
  if (k < p - n)
    out.add(n, binom_table(-k + p, -k) * binom_table(-k - 1, n - p));
  return out;
}

// Cohomology table of the line bundle O(k) on P^n:
//   h^0 = C(k+n, n) for k >= 0,   h^n = C(-k-1, n) for k <= -n-1,
// zero in between.  (The p = 0 specialization of the table above.)
[[nodiscard]] inline GradedDims line_cohomology(int n, int k) {
  return omega_cohomology(n, 0, k);
}

// Cohomology table of an external tensor product over a product of
// projective spaces.  An empty factor list is the stalk on a point: {0 -> 1}.
[[nodiscard]] inline GradedDims kunneth(const std::vector<CohomFactor>& factors) {
  GradedDims out{{0, 1}};
  for (const auto& f : factors) out = out.tensor(omega_cohomology(f.n, f.p, f.k));
  return out;
}

// Euler characteristic of O(k) on P^n, as the signed binomial polynomial
// C(k+n, n) = (k+1)(k+2)...(k+n)/n!.  Agrees with the alternating sum of
// line_cohomology for every twist.
[[nodiscard]] inline Int line_euler(int n, int k) {
  if (n < 0) throw std::invalid_argument("line_euler: negative dimension");
  return binom_poly(static_cast<long long>(k) + n, n);
}

}  // namespace hpd::bott
