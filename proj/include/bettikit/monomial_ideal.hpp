#pragma once

#include <string>
#include <vector>

#include "bettikit/multidegree.hpp"

namespace bettikit {

/// Monomial ideal in k[x0, ..., x(n-1)], kept as its minimal generating set.
///
/// No generators means the zero ideal; the single generator 1 (the zero
/// multidegree) is the unit ideal.
class MonomialIdeal {
 public:
  /// Drops redundant generators. Every generator must have exactly n entries.
  MonomialIdeal(int n, std::vector<Multidegree> gens);

  static MonomialIdeal zero(int n) { return MonomialIdeal(n, {}); }

  int variable_count() const { return n_; }
  const std::vector<Multidegree>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().total() == 0; }
  bool is_square_free() const { return square_free_; }

  /// x^b lies in the ideal.
  bool contains(const Multidegree& b) const;

  /// Componentwise max of all generators, or the zero vector.
  Multidegree lcm() const;

  /// Every variable appears as a pure power among the generators.
  bool is_artinian() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int n_ = 0;
  std::vector<Multidegree> gens_;
  bool square_free_ = true;
};

/// Canonical form "gens: x0*x2, x1*x3"; zero ideal is "gens:".
std::string to_string(const MonomialIdeal& ideal);

/// Generators only, comma separated: "x0*x2, x1*x3".
std::string generators_string(const MonomialIdeal& ideal);

}  // namespace bettikit
