#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

namespace hpd {

// A product of projective spaces P^{n_1} x ... x P^{n_r}, identified by its
// factor dimensions.  Shared by the intersection-theory and K-theory layers;
// two computations may be combined only when their ambients agree.
struct AmbientSpec {
  std::vector<int> factor_dims;

  AmbientSpec() = default;
  explicit AmbientSpec(std::vector<int> dims) : factor_dims(std::move(dims)) {
    if (factor_dims.empty())
      throw std::invalid_argument("AmbientSpec: no factors");
    for (int n : factor_dims)
      if (n < 0) throw std::invalid_argument("AmbientSpec: negative dimension");
  }

  [[nodiscard]] int factors() const {
    return static_cast<int>(factor_dims.size());
  }

  [[nodiscard]] int total_dim() const {
    return std::accumulate(factor_dims.begin(), factor_dims.end(), 0);
  }

  friend bool operator==(const AmbientSpec&, const AmbientSpec&) = default;
};

}  // namespace hpd
