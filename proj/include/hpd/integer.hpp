#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace hpd {

// All ranks, dimensions and Euler characteristics are exact integers.
using Int = boost::multiprecision::cpp_int;

// Binomial coefficient in the combinatorial (table) convention:
// zero whenever a < 0, b < 0 or b > a.  Used in cohomology-table branches,
// where a negative argument means "this branch contributes nothing".
[[nodiscard]] inline Int binom_table(long long a, long long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (a - b < b) b = a - b;
  Int r = 1;
  for (long long j = 1; j <= b; ++j) {
    r *= a - b + j;
    r /= j;  // exact: r is a binomial coefficient at every step
  }
  return r;
}

// Binomial coefficient C(t, n) read as the degree-n polynomial
// t(t-1)...(t-n+1)/n!, defined for every integer t.  This signed extension is
// the one that appears in Euler-characteristic formulas; it is nonzero for
// t < 0 (e.g. C(-2, 1) = -2), unlike the table convention above.
[[nodiscard]] inline Int binom_poly(long long t, long long n) {
  if (n < 0) throw std::invalid_argument("binom_poly: negative lower index");
  Int num = 1;
  for (long long j = 0; j < n; ++j) num *= t - j;
  Int den = 1;
  for (long long j = 2; j <= n; ++j) den *= j;
  return num / den;  // exact: n consecutive integers are divisible by n!
}

// Checked narrowing for report serialization.
[[nodiscard]] inline std::int64_t to_int64(const Int& v) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("to_int64: value exceeds 64 bits");
  return v.convert_to<std::int64_t>();
}

}  // namespace hpd
