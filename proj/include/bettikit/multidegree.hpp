#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "bettikit/vertex_set.hpp"

namespace bettikit {

/// Exponent vector in N^n. Doubles as the monomial x^b.
class Multidegree {
 public:
  Multidegree() = default;
  explicit Multidegree(int n) : exps_(static_cast<std::size_t>(n), 0) {}
  explicit Multidegree(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_)
      if (e < 0) throw std::invalid_argument("negative exponent");
  }

  /// Characteristic vector of a face.
  static Multidegree indicator(VertexSet face, int n) {
    Multidegree m(n);
    for (int v : face.elements()) m.exps_[static_cast<std::size_t>(v)] = 1;
    return m;
  }

  int size() const { return static_cast<int>(exps_.size()); }
  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return exps_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& exponents() const { return exps_; }

  int total() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

  bool is_square_free() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
  }

  VertexSet support() const {
    VertexSet s;
    for (int i = 0; i < size(); ++i)
      if (exps_[static_cast<std::size_t>(i)] > 0) s = s.with(i);
    return s;
  }

  /// Componentwise <=, i.e. x^this divides x^o.
  bool divides(const Multidegree& o) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  /// Strictly below in the componentwise order.
  bool strictly_below(const Multidegree& o) const { return divides(o) && exps_ != o.exps_; }

  Multidegree join(const Multidegree& o) const {
    Multidegree r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], o.exps_[i]);
    return r;
  }

  Multidegree meet(const Multidegree& o) const {
    Multidegree r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::min(exps_[i], o.exps_[i]);
    return r;
  }

  Multidegree operator+(const Multidegree& o) const {
    Multidegree r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    return r;
  }

  /// Requires o.divides(*this).
  Multidegree operator-(const Multidegree& o) const {
    Multidegree r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      r.exps_[i] -= o.exps_[i];
      if (r.exps_[i] < 0) throw std::invalid_argument("multidegree subtraction underflow");
    }
    return r;
  }

  friend bool operator==(const Multidegree&, const Multidegree&) = default;
  /// Plain lexicographic order on exponent vectors; used only for containers.
  friend auto operator<=>(const Multidegree& a, const Multidegree& b) { return a.exps_ <=> b.exps_; }

 private:
  std::vector<int> exps_;
};

/// Renders as a monomial, e.g. "x0^2*x3"; the zero vector renders as "1".
std::string monomial_string(const Multidegree& m);

}  // namespace bettikit
