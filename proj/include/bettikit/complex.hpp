#pragma once

#include <string>
#include <vector>

#include "bettikit/vertex_set.hpp"

namespace bettikit {

enum class ComplexKind {
  void_complex,  // no faces at all
  irrelevant,    // only the empty face
  proper,
};

/// Simplicial complex on the vertex set {0, ..., n-1}, stored by its facets.
///
/// Immutable. Facets are pairwise incomparable and kept sorted in face order
/// (cardinality, then bit pattern), so equality is structural.
class SimplicialComplex {
 public:
  /// Builds the complex generated by `faces`; non-maximal entries are dropped.
  /// An empty list gives the void complex.
  static SimplicialComplex from_facets(int n, std::vector<VertexSet> faces);

  static SimplicialComplex void_complex(int n) { return from_facets(n, {}); }
  static SimplicialComplex irrelevant(int n) { return from_facets(n, {VertexSet{}}); }
  static SimplicialComplex simplex(int n) { return from_facets(n, {VertexSet::full(n)}); }

  int vertex_count() const { return n_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  ComplexKind kind() const;
  bool is_void() const { return facets_.empty(); }

  bool contains(VertexSet face) const;

  /// max |facet| - 1; -1 for the irrelevant complex, -2 for the void complex.
  int dimension() const;

  /// Union of all faces.
  VertexSet vertices() const;

  /// Every face, sorted in face order.
  std::vector<VertexSet> faces() const;

  /// Faces grouped by dimension; entry d holds the faces of dimension d - 1.
  std::vector<std::vector<VertexSet>> faces_by_size() const;

  bool is_pure() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  SimplicialComplex(int n, std::vector<VertexSet> facets) : n_(n), facets_(std::move(facets)) {}

  int n_ = 0;
  std::vector<VertexSet> facets_;
};

/// Canonical form "facets: 0 1, 1 2"; the empty face is "{}"; void is "facets:".
std::string to_string(const SimplicialComplex& x);

}  // namespace bettikit
