#pragma once

#include <span>
#include <vector>

#include "bettikit/complex.hpp"
#include "bettikit/field.hpp"
#include "bettikit/linalg.hpp"

namespace bettikit {

/// Betti numbers of a chain complex starting in degree -1.
class HomologyRanks {
 public:
  HomologyRanks() = default;
  /// ranks[0] is the rank in degree -1.
  explicit HomologyRanks(std::vector<int> ranks) : ranks_(std::move(ranks)) {}

  /// Rank in degree i; 0 outside the stored range.
  int at(int i) const {
    const int idx = i + 1;
    return idx >= 0 && idx < static_cast<int>(ranks_.size()) ? ranks_[static_cast<std::size_t>(idx)] : 0;
  }
  /// Highest stored degree (dim of the complex); -2 when empty.
  int top_degree() const { return static_cast<int>(ranks_.size()) - 2; }
  const std::vector<int>& values() const { return ranks_; }
  bool is_zero() const;

  friend bool operator==(const HomologyRanks&, const HomologyRanks&) = default;

 private:
  std::vector<int> ranks_;
};

/// Matrix of the simplicial boundary from `faces` (rows) to `lower` (columns).
///
/// Faces are ascending vertex lists; removing the j-th smallest vertex
/// contributes (-1)^j. `lower` must be sorted in face order; boundary faces
/// missing from it are dropped, which is the quotient map used for relative
/// chains.
ModMatrix boundary_matrix(std::span<const VertexSet> faces, std::span<const VertexSet> lower, const PrimeField& k);

/// dim H~_i(X; k) for i = -1 .. dim X, using the augmented chain complex.
/// The void complex gives an empty sequence.
HomologyRanks reduced_homology_ranks(const SimplicialComplex& x, const PrimeField& k);

/// dim H_i(X, A; k) for i = -1 .. dim X from the quotient of augmented chain
/// complexes. Throws std::invalid_argument unless A is a subcomplex of X.
HomologyRanks relative_homology_ranks(const SimplicialComplex& x, const SimplicialComplex& a, const PrimeField& k);

}  // namespace bettikit
