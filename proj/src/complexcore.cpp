#include "bettikit/complexcore.hpp"

#include <algorithm>
#include <unordered_set>

namespace bettikit {

std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& x) {
  if (x.is_void()) return {VertexSet{}};
  const int n = x.vertex_count();
  const auto faces = x.faces();
  std::unordered_set<std::uint64_t> face_set;
  for (VertexSet f : faces) face_set.insert(f.bits());
  auto is_face = [&](VertexSet f) { return face_set.count(f.bits()) != 0; };

  // Every minimal nonface is a face plus one vertex.
  std::unordered_set<std::uint64_t> found;
  for (VertexSet g : faces) {
    for (int v = 0; v < n; ++v) {
      if (g.contains(v)) continue;
      VertexSet f = g.with(v);
      if (is_face(f) || found.count(f.bits())) continue;
      bool minimal = true;
      for (int u : f.elements())
        if (!is_face(f.without(u))) {
          minimal = false;
          break;
        }
      if (minimal) found.insert(f.bits());
    }
  }
  std::vector<VertexSet> out;
  for (std::uint64_t b : found) out.emplace_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& x) {
  if (x.is_void()) throw UnitIdealError();
  std::vector<Multidegree> gens;
  for (VertexSet f : minimal_nonfaces(x)) gens.push_back(Multidegree::indicator(f, x.vertex_count()));
  return MonomialIdeal(x.vertex_count(), std::move(gens));
}

SimplicialComplex complex_of_ideal(const MonomialIdeal& ideal) {
  if (!ideal.is_square_free()) throw std::invalid_argument("complex_of_ideal needs a square-free ideal; polarize first");
  const int n = ideal.variable_count();
  if (ideal.is_unit()) return SimplicialComplex::void_complex(n);

  std::vector<VertexSet> nonfaces;
  for (const auto& g : ideal.generators()) nonfaces.push_back(g.support());
  auto is_face = [&](VertexSet f) {
    return std::none_of(nonfaces.begin(), nonfaces.end(), [f](VertexSet g) { return g.subset_of(f); });
  };

  // Depth-first over faces, extending only by larger vertices so each face is visited once.
  std::vector<VertexSet> facets;
  std::vector<VertexSet> stack{VertexSet{}};
  while (!stack.empty()) {
    VertexSet f = stack.back();
    stack.pop_back();
    bool maximal = true;
    for (int v = 0; v < n; ++v) {
      if (f.contains(v)) continue;
      VertexSet g = f.with(v);
      if (!is_face(g)) continue;
      maximal = false;
      if (f.empty() || v > f.max()) stack.push_back(g);
    }
    if (maximal) facets.push_back(f);
  }
  return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex alexander_dual(const SimplicialComplex& x) {
  const int n = x.vertex_count();
  std::vector<VertexSet> facets;
  for (VertexSet f : minimal_nonfaces(x)) facets.push_back(f.complement(n));
  return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex link(VertexSet face, const SimplicialComplex& x) {
  if (!x.contains(face)) throw std::invalid_argument("link: not a face of the complex");
  std::vector<VertexSet> facets;
  for (VertexSet g : x.facets())
    if (face.subset_of(g)) facets.push_back(g - face);
  return SimplicialComplex::from_facets(x.vertex_count(), std::move(facets));
}

SimplicialComplex star(VertexSet face, const SimplicialComplex& x) {
  if (!x.contains(face)) throw std::invalid_argument("star: not a face of the complex");
  std::vector<VertexSet> facets;
  for (VertexSet g : x.facets())
    if (face.subset_of(g)) facets.push_back(g);
  return SimplicialComplex::from_facets(x.vertex_count(), std::move(facets));
}

SimplicialComplex restriction(const SimplicialComplex& x, VertexSet vertices) {
  std::vector<VertexSet> facets;
  for (VertexSet g : x.facets()) facets.push_back(g & vertices);
  return SimplicialComplex::from_facets(x.vertex_count(), std::move(facets));
}

SimplicialComplex restriction(const SimplicialComplex& x, const Multidegree& b) {
  if (!b.is_square_free()) throw std::invalid_argument("restriction: multidegree must be square-free");
  if (b.size() != x.vertex_count()) throw std::invalid_argument("restriction: multidegree has wrong length");
  return restriction(x, b.support());
}

SimplicialComplex core(const SimplicialComplex& x) {
  SimplicialComplex current = x;
  while (!current.is_void()) {
    VertexSet cone = VertexSet::full(current.vertex_count());
    for (VertexSet f : current.facets()) cone = cone & f;
    if (cone.empty()) break;
    current = restriction(current, cone.complement(current.vertex_count()));
  }
  return current;
}

MonomialIdeal polarize(const MonomialIdeal& ideal) {
  const int n = ideal.variable_count();
  std::vector<int> offset(static_cast<std::size_t>(n) + 1, 0);
  for (int j = 0; j < n; ++j) {
    int copies = 1;
    for (const auto& g : ideal.generators()) copies = std::max(copies, g[j]);
    offset[static_cast<std::size_t>(j) + 1] = offset[static_cast<std::size_t>(j)] + copies;
  }
  const int total = offset.back();
  if (total > kMaxVertices) throw std::invalid_argument("polarization needs more than 64 variables");
  std::vector<Multidegree> gens;
  for (const auto& g : ideal.generators()) {
    Multidegree p(total);
    for (int j = 0; j < n; ++j)
      for (int c = 0; c < g[j]; ++c) p[offset[static_cast<std::size_t>(j)] + c] = 1;
    gens.push_back(std::move(p));
  }
  return MonomialIdeal(total, std::move(gens));
}

}  // namespace bettikit
