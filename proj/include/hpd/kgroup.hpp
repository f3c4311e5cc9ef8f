#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hpd/ambient.hpp"
#include "hpd/bott.hpp"
#include "hpd/graded.hpp"
#include "hpd/integer.hpp"

namespace hpd::kgroup {

using Twist = std::vector<int>;  // one entry per ambient factor

// Integer combination of line-bundle classes [O(a)] on a product of
// projective spaces, stored as twist -> multiplicity.  Classes keep the
// presentation they were built with; reduction to the box basis below is
// always an explicit call, never applied behind the caller's back.
class KClass {
 public:
  explicit KClass(AmbientSpec amb) : amb_(std::move(amb)) {}

  [[nodiscard]] static KClass line_bundle(const AmbientSpec& amb,
                                          const Twist& twist) {
    KClass c(amb);
    c.add(twist, 1);
    return c;
  }

  void add(const Twist& twist, const Int& mult) {
    if (static_cast<int>(twist.size()) != amb_.factors())
      throw std::invalid_argument("KClass: twist arity mismatch");
    if (mult == 0) return;
    auto it = terms_.find(twist);
    if (it == terms_.end()) {
      terms_.emplace(twist, mult);
    } else {
      it->second += mult;
      if (it->second == 0) terms_.erase(it);
    }
  }

  [[nodiscard]] const AmbientSpec& ambient() const { return amb_; }
  [[nodiscard]] const std::map<Twist, Int>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  // Single line bundle with multiplicity one?  (Gates the graded layer of
  // the exceptionality check.)
  [[nodiscard]] bool is_plain_line_bundle() const {
    return terms_.size() == 1 && terms_.begin()->second == 1;
  }

  [[nodiscard]] KClass operator+(const KClass& o) const {
    require_same_ambient(o);
    KClass out = *this;
    for (const auto& [t, m] : o.terms_) out.add(t, m);
    return out;
  }

  [[nodiscard]] KClass operator-(const KClass& o) const {
    require_same_ambient(o);
    KClass out = *this;
    for (const auto& [t, m] : o.terms_) out.add(t, -m);
    return out;
  }

  [[nodiscard]] KClass scaled(const Int& c) const {
    KClass out(amb_);
    if (c == 0) return out;
    for (const auto& [t, m] : terms_) out.add(t, m * c);
    return out;
  }

  friend bool operator==(const KClass&, const KClass&) = default;

 private:
  void require_same_ambient(const KClass& o) const {
    if (!(amb_ == o.amb_))
      throw std::invalid_argument("KClass: ambient mismatch");
  }

  AmbientSpec amb_;
  std::map<Twist, Int> terms_;
};

// Euler pairing chi(a, b) = sum of products of the signed binomial
// polynomials C(v_i - u_i + n_i, n_i) over the ambient factors, extended
// bilinearly.  Non-symmetric; both arguments must live on the same ambient.
[[nodiscard]] inline Int euler_pairing(const KClass& a, const KClass& b) {
  if (!(a.ambient() == b.ambient()))
    throw std::invalid_argument("euler_pairing: ambient mismatch");
  const auto& dims = a.ambient().factor_dims;
  Int total = 0;
  for (const auto& [u, mu] : a.terms())
    for (const auto& [v, mv] : b.terms()) {
      Int prod = mu * mv;
      for (size_t i = 0; i < dims.size(); ++i)
        prod *= binom_poly(static_cast<long long>(v[i]) - u[i] + dims[i],
                           dims[i]);
      total += prod;
    }
  return total;
}

// Ordered list of K-classes on a shared ambient.
class Collection {
 public:
  Collection(AmbientSpec amb, std::vector<KClass> objects)
      : amb_(std::move(amb)), objects_(std::move(objects)) {
    if (objects_.empty())
      throw std::invalid_argument("Collection: no objects");
    for (const auto& obj : objects_)
      if (!(obj.ambient() == amb_))
        throw std::invalid_argument("Collection: ambient mismatch");
  }

  [[nodiscard]] static Collection of_line_bundles(
      const AmbientSpec& amb, const std::vector<Twist>& twists) {
    std::vector<KClass> objs;
    objs.reserve(twists.size());
    for (const auto& t : twists) objs.push_back(KClass::line_bundle(amb, t));
    return Collection(amb, std::move(objs));
  }

  [[nodiscard]] const AmbientSpec& ambient() const { return amb_; }
  [[nodiscard]] const std::vector<KClass>& objects() const { return objects_; }
  [[nodiscard]] int size() const { return static_cast<int>(objects_.size()); }

  friend bool operator==(const Collection&, const Collection&) = default;

 private:
  AmbientSpec amb_;
  std::vector<KClass> objects_;
};

struct GramMatrix {
  std::vector<std::vector<Int>> entries;  // entries[s][t] = chi(obj_s, obj_t)

  [[nodiscard]] int size() const { return static_cast<int>(entries.size()); }

  [[nodiscard]] bool is_unitriangular() const {
    for (int s = 0; s < size(); ++s) {
      if (entries[s][s] != 1) return false;
      for (int t = 0; t < s; ++t)
        if (entries[s][t] != 0) return false;
    }
    return true;
  }

  friend bool operator==(const GramMatrix&, const GramMatrix&) = default;
};

[[nodiscard]] inline GramMatrix gram_matrix(const Collection& c) {
  GramMatrix g;
  g.entries.resize(c.size(), std::vector<Int>(c.size()));
  for (int s = 0; s < c.size(); ++s)
    for (int t = 0; t < c.size(); ++t)
      g.entries[s][t] = euler_pairing(c.objects()[s], c.objects()[t]);
  return g;
}

// Exceptionality is checked in two layers.  The numerical layer asks the
// Gram matrix to be unitriangular (necessary for any exceptional collection).
// When every object is a plain line bundle, the graded layer additionally
// computes full Ext tables: {0 -> 1} on the diagonal and the zero table
// strictly below it.  The report carries the first violation of each layer.
struct NumericalViolation {
  int row = 0, col = 0;
  Int value;
};

struct GradedViolation {
  int row = 0, col = 0;
  GradedDims table;
};

struct ExceptionalityReport {
  bool pass = false;
  bool graded_layer_applicable = false;
  std::optional<NumericalViolation> numerical;
  std::optional<GradedViolation> graded;
};

// Full graded Ext table between two plain line bundles on the ambient.
[[nodiscard]] inline GradedDims line_bundle_ext(const AmbientSpec& amb,
                                                const Twist& from,
                                                const Twist& to) {
  std::vector<bott::CohomFactor> factors;
  factors.reserve(amb.factor_dims.size());
  for (size_t i = 0; i < amb.factor_dims.size(); ++i)
    factors.push_back({amb.factor_dims[i], 0, to[i] - from[i]});
  return bott::kunneth(factors);
}

[[nodiscard]] inline ExceptionalityReport is_exceptional_collection(
    const Collection& c) {
  ExceptionalityReport report;
  GramMatrix g = gram_matrix(c);
  for (int s = 0; s < c.size() && !report.numerical; ++s) {
    if (g.entries[s][s] != 1) {
      report.numerical = NumericalViolation{s, s, g.entries[s][s]};
      break;
    }
    for (int t = 0; t < s; ++t)
      if (g.entries[s][t] != 0) {
        report.numerical = NumericalViolation{s, t, g.entries[s][t]};
        break;
      }
  }

  report.graded_layer_applicable = true;
  for (const auto& obj : c.objects())
    report.graded_layer_applicable &= obj.is_plain_line_bundle();
  if (report.graded_layer_applicable) {
    const GradedDims identity{{0, 1}};
    for (int s = 0; s < c.size() && !report.graded; ++s) {
      const Twist& ts = c.objects()[s].terms().begin()->first;
      for (int t = 0; t <= s; ++t) {
        const Twist& tt = c.objects()[t].terms().begin()->first;
        GradedDims ext = line_bundle_ext(c.ambient(), ts, tt);
        bool ok = (t == s) ? ext == identity : ext.empty();
        if (!ok) {
          report.graded = GradedViolation{s, t, std::move(ext)};
          break;
        }
      }
    }
  }

  report.pass = !report.numerical && !report.graded;
  return report;
}

// Left mutation at slot t (1 <= t < size): the object in slot t is replaced
// by its projection  [F] - chi(E, F) [E]  away from its left neighbour E,
// and the two slots swap.  Right mutation at slot t (0 <= t < size-1) is the
// dual:  [F] - chi(F, E) [E]  through the right neighbour, swapping likewise.
[[nodiscard]] inline Collection left_mutate(const Collection& c, int t) {
  if (t < 1 || t >= c.size())
    throw std::invalid_argument("left_mutate: slot out of range");
  const KClass& e = c.objects()[t - 1];
  const KClass& f = c.objects()[t];
  std::vector<KClass> objs = c.objects();
  objs[t - 1] = f - e.scaled(euler_pairing(e, f));
  objs[t] = e;
  return Collection(c.ambient(), std::move(objs));
}

[[nodiscard]] inline Collection right_mutate(const Collection& c, int t) {
  if (t < 0 || t + 1 >= c.size())
    throw std::invalid_argument("right_mutate: slot out of range");
  const KClass& f = c.objects()[t];
  const KClass& e = c.objects()[t + 1];
  std::vector<KClass> objs = c.objects();
  objs[t] = e;
  objs[t + 1] = f - e.scaled(euler_pairing(f, e));
  return Collection(c.ambient(), std::move(objs));
}

// Rewrites a class on the span of the box twists prod_i [0, n_i] using the
// factorwise relations  sum_{j=0}^{n+1} (-1)^j C(n+1, j) [O(k - j)] = 0.
// Explicit basis change for lattice comparisons; pairing-invariant.
[[nodiscard]] inline KClass reduce_to_box_basis(const KClass& cls) {
  const auto& dims = cls.ambient().factor_dims;
  std::map<Twist, Int> work(cls.terms().begin(), cls.terms().end());
  auto find_out_of_box = [&]() -> std::optional<std::pair<Twist, int>> {
    for (const auto& [t, m] : work)
      for (size_t i = 0; i < dims.size(); ++i)
        if (t[i] < 0 || t[i] > dims[i])
          return std::make_pair(t, static_cast<int>(i));
    return std::nullopt;
  };
  while (auto bad = find_out_of_box()) {
    const auto [twist, slot] = *bad;
    const Int mult = work[twist];
    work.erase(twist);
    const int big = dims[slot] + 1;
    auto emit = [&](Twist t, const Int& m) {
      if (m == 0) return;
      auto it = work.find(t);
      if (it == work.end()) {
        work.emplace(std::move(t), m);
      } else {
        it->second += m;
        if (it->second == 0) work.erase(it);
      }
    };
    if (twist[slot] > dims[slot]) {
      // [O(a)] = sum_{j=1}^{n+1} (-1)^{j+1} C(n+1, j) [O(a - j e_slot)]
      for (int j = 1; j <= big; ++j) {
        Twist t = twist;
        t[slot] -= j;
        Int coeff = binom_table(big, j) * mult;
        emit(std::move(t), (j % 2 == 1) ? coeff : -coeff);
      }
    } else {
      // [O(a)] = sum_{j=0}^{n} (-1)^{j+n} C(n+1, j) [O(a + (n+1-j) e_slot)]
      for (int j = 0; j < big; ++j) {
        Twist t = twist;
        t[slot] += big - j;
        Int coeff = binom_table(big, j) * mult;
        emit(std::move(t), ((j + big + 1) % 2 == 0) ? coeff : -coeff);
      }
    }
  }
  KClass out(cls.ambient());
  for (const auto& [t, m] : work) out.add(t, m);
  return out;
}

}  // namespace hpd::kgroup
