#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bettikit/betti_table.hpp"
#include "bettikit/complex.hpp"
#include "bettikit/field.hpp"
#include "bettikit/monomial_ideal.hpp"

namespace bettikit {

/// Upper Koszul simplicial complex K_b(I) = {F subset supp(b) : x^(b-F) in I}.
SimplicialComplex koszul_subcomplex(const MonomialIdeal& ideal, const Multidegree& b);

/// All joins of nonempty subsets of the generators, sorted.
std::vector<Multidegree> lcm_lattice(const MonomialIdeal& ideal);

/// beta_{i,b}(I) = dim H~_{i-1}(K_b(I); k), evaluated on the lcm lattice.
/// Ideal convention. The zero ideal gives an empty table.
BettiTable betti_via_koszul(const MonomialIdeal& ideal, const PrimeField& k);

/// Betti numbers of S/I_X from homology of full subcomplexes:
/// beta_{i+1,b}(S/I_X) = beta_{i,b}(I_X) = dim H~_{|b|-i-2}(X_b; k).
/// Quotient convention; the void complex gives an empty table.
BettiTable hochster_betti(const SimplicialComplex& x, const PrimeField& k);

/// Betti numbers of the Alexander dual ideal I_{X^v} from links in X:
/// beta_{i,b} = dim H~_{i-1}(lk(b^c, X); k) when b^c is a face, else 0.
/// Ideal convention.
BettiTable dual_betti_via_links(const SimplicialComplex& x, const PrimeField& k);

/// dim_k (S/I)_d for d = 0 .. d_max.
std::vector<std::int64_t> hilbert_function(const MonomialIdeal& ideal, int d_max);

/// Last nonzero degree of the Hilbert function of S/I and its value.
/// Throws std::invalid_argument unless S/I has finite length.
std::pair<int, std::int64_t> hilbert_top(const MonomialIdeal& ideal);

/// For artinian I: S/I has exactly one corner, at (n, m) where m is the last
/// nonzero degree of its Hilbert function, with value equal to that last
/// Hilbert function value.
bool artinian_extremal_check(const MonomialIdeal& ideal, const PrimeField& k);

}  // namespace bettikit
