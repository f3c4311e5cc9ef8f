#pragma once

#include <map>
#include <vector>

#include "hpd/ambient.hpp"
#include "hpd/integer.hpp"

namespace hpd::chern {

// Element of Z[h_1..h_r]/(h_i^{n_i+1}), h_i the hyperplane class of the i-th
// factor, stored as a sparse exponent-vector -> coefficient map.  Every term
// with an exponent beyond the truncation order is dropped on the spot, so
// products stay small and division by 1 + D terminates.
class TruncatedClass {
 public:
  explicit TruncatedClass(AmbientSpec amb) : amb_(std::move(amb)) {}

  [[nodiscard]] static TruncatedClass one(const AmbientSpec& amb) {
    TruncatedClass c(amb);
    c.coeffs_[std::vector<int>(amb.factor_dims.size(), 0)] = 1;
    return c;
  }

  // The divisor class  sum_i d_i h_i  of a multi-degree.
  [[nodiscard]] static TruncatedClass divisor(const AmbientSpec& amb,
                                              const std::vector<int>& multideg) {
    if (static_cast<int>(multideg.size()) != amb.factors())
      throw std::invalid_argument("TruncatedClass: multi-degree arity mismatch");
    TruncatedClass c(amb);
    for (int i = 0; i < amb.factors(); ++i) {
      if (multideg[i] < 0)
        throw std::invalid_argument("TruncatedClass: negative degree entry");
      if (multideg[i] == 0 || amb.factor_dims[i] == 0) continue;
      std::vector<int> e(amb.factor_dims.size(), 0);
      e[i] = 1;
      c.coeffs_[e] = multideg[i];
    }
    return c;
  }

  [[nodiscard]] const AmbientSpec& ambient() const { return amb_; }

  void add_term(const std::vector<int>& expo, const Int& coeff) {
    if (coeff == 0) return;
    for (size_t i = 0; i < expo.size(); ++i)
      if (expo[i] > amb_.factor_dims[i]) return;  // truncated away
    auto it = coeffs_.find(expo);
    if (it == coeffs_.end()) {
      coeffs_.emplace(expo, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  [[nodiscard]] Int coefficient(const std::vector<int>& expo) const {
    auto it = coeffs_.find(expo);
    return it == coeffs_.end() ? Int(0) : it->second;
  }

  // Coefficient of the volume form h_1^{n_1} ... h_r^{n_r} (integration).
  [[nodiscard]] Int top_coefficient() const {
    return coefficient(amb_.factor_dims);
  }

  [[nodiscard]] TruncatedClass operator+(const TruncatedClass& o) const {
    require_same_ambient(o);
    TruncatedClass out = *this;
    for (const auto& [e, c] : o.coeffs_) out.add_term(e, c);
    return out;
  }

  [[nodiscard]] TruncatedClass operator-(const TruncatedClass& o) const {
    require_same_ambient(o);
    TruncatedClass out = *this;
    for (const auto& [e, c] : o.coeffs_) out.add_term(e, -c);
    return out;
  }

  [[nodiscard]] TruncatedClass operator*(const TruncatedClass& o) const {
    require_same_ambient(o);
    TruncatedClass out(amb_);
    std::vector<int> e(amb_.factor_dims.size());
    for (const auto& [ea, ca] : coeffs_)
      for (const auto& [eb, cb] : o.coeffs_) {
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  [[nodiscard]] TruncatedClass pow(int e) const {
    if (e < 0) throw std::invalid_argument("TruncatedClass: negative power");
    TruncatedClass out = one(amb_);
    for (int j = 0; j < e; ++j) out = out * *this;
    return out;
  }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }

 private:
  void require_same_ambient(const TruncatedClass& o) const {
    if (!(amb_ == o.amb_))
      throw std::invalid_argument("TruncatedClass: ambient mismatch");
  }

  AmbientSpec amb_;
  std::map<std::vector<int>, Int> coeffs_;
};

// 1/(1 + D) for a divisor class D (no constant term): the geometric series
// sum_t (-D)^t, exact because D is nilpotent in the truncated ring.
[[nodiscard]] inline TruncatedClass inverse_one_plus(const TruncatedClass& d) {
  TruncatedClass acc = TruncatedClass::one(d.ambient());
  TruncatedClass power = TruncatedClass::one(d.ambient());
  const int bound = d.ambient().total_dim();
  for (int t = 1; t <= bound; ++t) {
    power = power * d;
    if (power.is_zero()) break;
    acc = (t % 2 == 0) ? acc + power : acc - power;
  }
  return acc;
}

// A smooth complete intersection of multi-degree hypersurfaces in a product
// of projective spaces.  An empty degree list denotes the ambient itself.
struct CISpec {
  AmbientSpec ambient;
  std::vector<std::vector<int>> degrees;
};

inline void validate(const CISpec& spec) {
  if (static_cast<int>(spec.degrees.size()) > spec.ambient.total_dim())
    throw std::invalid_argument("CISpec: more equations than dimensions");
  for (const auto& deg : spec.degrees) {
    if (static_cast<int>(deg.size()) != spec.ambient.factors())
      throw std::invalid_argument("CISpec: multi-degree arity mismatch");
    bool nonzero = false;
    for (int d : deg) {
      if (d < 0) throw std::invalid_argument("CISpec: negative degree entry");
      nonzero |= d > 0;
    }
    if (!nonzero) throw std::invalid_argument("CISpec: zero multi-degree");
  }
}

// Topological Euler characteristic via integration of the top Chern class of
// the tangent bundle, adjunction along each hypersurface done by the exact
// quotient  c(T_ambient) * prod_j D_j / prod_j (1 + D_j).
[[nodiscard]] inline Int chi_top(const CISpec& spec) {
  validate(spec);
  const AmbientSpec& amb = spec.ambient;
  TruncatedClass acc = TruncatedClass::one(amb);
  for (int i = 0; i < amb.factors(); ++i) {
    std::vector<int> unit(amb.factors(), 0);
    unit[i] = 1;
    TruncatedClass h = TruncatedClass::one(amb) +
                       TruncatedClass::divisor(amb, unit);
    acc = acc * h.pow(amb.factor_dims[i] + 1);
  }
  for (const auto& deg : spec.degrees) {
    TruncatedClass d = TruncatedClass::divisor(amb, deg);
    acc = acc * d * inverse_one_plus(d);
  }
  return acc.top_coefficient();
}

// Euler characteristic of a blow-up along a smooth center of the given
// codimension: the exceptional locus swaps a copy of Z for a P^{codim-1}
// bundle over it.
[[nodiscard]] inline Int blowup_chi(const Int& chi_x, const Int& chi_z,
                                    int codim) {
  if (codim < 2) throw std::invalid_argument("blowup_chi: codimension < 2");
  return chi_x + (codim - 1) * chi_z;
}

}  // namespace hpd::chern
