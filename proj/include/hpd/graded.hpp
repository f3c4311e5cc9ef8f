#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "hpd/integer.hpp"

namespace hpd {

// Dimension table of a finite graded vector space: degree -> dimension.
// Zero entries are never stored, so `empty()` means the zero space and
// equality of tables is equality of maps.  Grading is cohomological
// throughout; a shift X[s] moves an entry in degree q to degree q - s.
class GradedDims {
 public:
  GradedDims() = default;
  GradedDims(std::initializer_list<std::pair<const int, Int>> init) {
    for (const auto& [q, d] : init) add(q, d);
  }

  // Accumulates `dim` in the given degree, dropping the entry if it cancels
  // to zero.  Dimensions must stay nonnegative.
  void add(int degree, const Int& dim) {
    if (dim == 0) return;
    auto it = entries_.find(degree);
    if (it == entries_.end()) {
      if (dim < 0) throw std::invalid_argument("GradedDims: negative dimension");
      entries_.emplace(degree, dim);
      return;
    }
    it->second += dim;
    if (it->second == 0) {
      entries_.erase(it);
    } else if (it->second < 0) {
      throw std::invalid_argument("GradedDims: negative dimension");
    }
  }

  [[nodiscard]] const std::map<int, Int>& entries() const { return entries_; }
  [[nodiscard]] bool empty() const { return entries_.empty(); }

  [[nodiscard]] Int dim(int degree) const {
    auto it = entries_.find(degree);
    return it == entries_.end() ? Int(0) : it->second;
  }

  // Total dimension, all degrees summed.
  [[nodiscard]] Int total() const {
    Int t = 0;
    for (const auto& [q, d] : entries_) t += d;
    return t;
  }

  // Alternating sum over the grading.
  [[nodiscard]] Int euler() const {
    Int t = 0;
    for (const auto& [q, d] : entries_) t += (q % 2 == 0) ? d : -d;
    return t;
  }

  // Table of the shifted space: entry in degree q moves to q + offset.
  [[nodiscard]] GradedDims shifted(int offset) const {
    GradedDims out;
    for (const auto& [q, d] : entries_) out.add(q + offset, d);
    return out;
  }

  // Graded tensor product (convolution of the two tables).
  [[nodiscard]] GradedDims tensor(const GradedDims& other) const {
    GradedDims out;
    for (const auto& [qa, da] : entries_)
      for (const auto& [qb, db] : other.entries_) out.add(qa + qb, da * db);
    return out;
  }

  [[nodiscard]] std::string to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [q, d] : entries_) {
      if (!first) os << ", ";
      os << q << " -> " << d;
      first = false;
    }
    os << '}';
    return os.str();
  }

  friend bool operator==(const GradedDims&, const GradedDims&) = default;

 private:
  std::map<int, Int> entries_;
};

}  // namespace hpd
