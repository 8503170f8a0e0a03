#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bettikit/complex.hpp"
#include "bettikit/field.hpp"
#include "bettikit/monomial_ideal.hpp"
#include "bettikit/polynomial.hpp"

namespace bettikit {

/// Generators for property tests. All draws come from the given engine, so a
/// seed reproduces the instance.
using Rng = std::mt19937_64;

/// Complex on n vertices with 1..max_facets random facets of size 1..n-1
/// (only n-vertex simplices are excluded; the facet list is maximalized).
SimplicialComplex random_complex(Rng& rng, int n, int max_facets);

/// Square-free ideal with 1..max_gens generators of degree 1..max_degree.
MonomialIdeal random_square_free_ideal(Rng& rng, int n, int max_gens, int max_degree);

/// Every variable appears as a pure power x_i^a with a in 1..max_degree, plus
/// up to `extra` further generators of degree 2..max_degree.
MonomialIdeal random_artinian_ideal(Rng& rng, int n, int max_degree, int extra);

/// 1..max_gens homogeneous generators, each of degree 1..max_degree with
/// 1..max_terms terms and coefficients uniform in GF(p)*.
std::vector<Polynomial> random_homogeneous_ideal(Rng& rng, int n, int max_gens, int max_degree, int max_terms,
                                                 const PrimeField& k);

}  // namespace bettikit
