#include "bettikit/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace bettikit {

namespace {

int uniform(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

VertexSet random_subset_of_size(Rng& rng, int n, int size) {
  VertexSet s;
  while (s.size() < size) s = s.with(uniform(rng, 0, n - 1));
  return s;
}

Multidegree random_monomial(Rng& rng, int n, int degree) {
  Multidegree m(n);
  for (int i = 0; i < degree; ++i) ++m[uniform(rng, 0, n - 1)];
  return m;
}

}  // namespace

SimplicialComplex random_complex(Rng& rng, int n, int max_facets) {
  if (n < 2) throw std::invalid_argument("random_complex: need at least two vertices");
  std::vector<VertexSet> facets;
  const int count = uniform(rng, 1, max_facets);
  for (int i = 0; i < count; ++i) facets.push_back(random_subset_of_size(rng, n, uniform(rng, 1, n - 1)));
  return SimplicialComplex::from_facets(n, std::move(facets));
}

MonomialIdeal random_square_free_ideal(Rng& rng, int n, int max_gens, int max_degree) {
  std::vector<Multidegree> gens;
  const int count = uniform(rng, 1, max_gens);
  for (int i = 0; i < count; ++i)
    gens.push_back(Multidegree::indicator(random_subset_of_size(rng, n, uniform(rng, 1, std::min(max_degree, n))), n));
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal random_artinian_ideal(Rng& rng, int n, int max_degree, int extra) {
  std::vector<Multidegree> gens;
  for (int v = 0; v < n; ++v) {
    Multidegree m(n);
    m[v] = uniform(rng, 1, max_degree);
    gens.push_back(m);
  }
  const int count = uniform(rng, 0, extra);
  for (int i = 0; i < count && max_degree >= 2; ++i) gens.push_back(random_monomial(rng, n, uniform(rng, 2, max_degree)));
  return MonomialIdeal(n, std::move(gens));
}

std::vector<Polynomial> random_homogeneous_ideal(Rng& rng, int n, int max_gens, int max_degree, int max_terms,
                                                 const PrimeField& k) {
  std::vector<Polynomial> gens;
  const int count = uniform(rng, 1, max_gens);
  const std::uint64_t p = k.characteristic();
  while (static_cast<int>(gens.size()) < count) {
    const int degree = uniform(rng, 1, max_degree);
    const int terms = uniform(rng, 1, max_terms);
    std::vector<Term> ts;
    for (int t = 0; t < terms; ++t)
      ts.push_back({static_cast<std::uint32_t>(1 + rng() % (p - 1)), random_monomial(rng, n, degree)});
    Polynomial f(n, std::move(ts), k);
    if (!f.is_zero()) gens.push_back(std::move(f));
  }
  return gens;
}

}  // namespace bettikit
