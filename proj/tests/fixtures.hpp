#pragma once

#include <array>
#include <vector>

#include "bettikit/complex.hpp"
#include "bettikit/complexcore.hpp"
#include "bettikit/monomial_ideal.hpp"

namespace fixtures {

using bettikit::Multidegree;
using bettikit::MonomialIdeal;
using bettikit::SimplicialComplex;
using bettikit::VertexSet;

inline SimplicialComplex complex(int n, std::vector<std::vector<int>> facets) {
  std::vector<VertexSet> fs;
  for (const auto& f : facets) {
    VertexSet s;
    for (int v : f) s = s.with(v);
    fs.push_back(s);
  }
  return SimplicialComplex::from_facets(n, std::move(fs));
}

inline Multidegree mono(std::vector<int> exps) { return Multidegree(std::move(exps)); }

inline Multidegree square_free(int n, std::vector<int> vars) {
  Multidegree m(n);
  for (int v : vars) m[v] = 1;
  return m;
}

inline MonomialIdeal ideal(int n, std::vector<std::vector<int>> gens) {
  std::vector<Multidegree> ms;
  for (const auto& g : gens) ms.push_back(square_free(n, g));
  return MonomialIdeal(n, std::move(ms));
}

// 5-cycle 0-1-2-3-4-0.
inline SimplicialComplex pentagon() { return complex(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}); }

// Seven-vertex torus: I_X = (x_i x_{i+1} x_{i+2}, x_i x_{i+1} x_{i+4}, x_i x_{i+2} x_{i+4}), i in Z/7.
inline MonomialIdeal torus_ideal() {
  std::vector<std::vector<int>> gens;
  for (int i = 0; i < 7; ++i)
    for (const auto& t : {std::array{0, 1, 2}, std::array{0, 1, 4}, std::array{0, 2, 4}})
      gens.push_back({(i + t[0]) % 7, (i + t[1]) % 7, (i + t[2]) % 7});
  return ideal(7, gens);
}

inline SimplicialComplex torus() { return bettikit::complex_of_ideal(torus_ideal()); }

// Complex with edges and triangles; I_X = (x0x2, x0x3, x0x4, x1x4).
inline MonomialIdeal mixed_ideal() { return ideal(5, {{0, 2}, {0, 3}, {0, 4}, {1, 4}}); }

inline SimplicialComplex mixed() { return complex(5, {{0, 1}, {1, 2, 3}, {2, 3, 4}}); }

}  // namespace fixtures
