#pragma once

#include "bettikit/betti_table.hpp"
#include "bettikit/complex.hpp"
#include "bettikit/field.hpp"
#include "bettikit/report.hpp"

namespace bettikit {

/// "n=<n> facets: ..." -- identifies a complex in reports.
std::string instance_string(const SimplicialComplex& x);

/// Ideal-convention Betti tables of I_X (Hochster) and I_{X^v} (links).
struct DualTables {
  BettiTable primal;
  BettiTable dual;
};

DualTables dual_tables(const SimplicialComplex& x, const PrimeField& k);

/// Restriction/link long exact sequence for the pair (X_{b+v}, X_b):
///   h_i(X_b) <= h_i(lk(v, X_{b+v})) + h_i(X_{b+v}),
///   H_i(X_{b+v}, X_b) = H~_{i-1}(lk(v, X_{b+v})),
///   sum_i (-1)^i [h_i(X_b) - h_i(X_{b+v}) + h_{i-1}(lk)] = 0.
/// Requires v < n and v not in b.
VerificationReport check_restriction_link_sequence(const SimplicialComplex& x, VertexSet b, int v,
                                                   const PrimeField& k);

/// The sequence check for every square-free b and every vertex v outside b.
VerificationReport check_restriction_link_sequence_all(const SimplicialComplex& x, const PrimeField& k);

/// beta_{i,b}(I_X) <= sum over b <= c <= [n] of beta_{|b|-i-1,c}(I_{X^v}).
VerificationReport check_betti_duality_bound(const SimplicialComplex& x, const PrimeField& k);
VerificationReport check_betti_duality_bound(const SimplicialComplex& x, const DualTables& t, std::uint32_t p);

/// Total-degree version: beta_{i,m} <= sum_k C(m+k, k) beta^v_{m-i-1, m+k}.
VerificationReport check_graded_duality_bound(const SimplicialComplex& x, const PrimeField& k);
VerificationReport check_graded_duality_bound(const SimplicialComplex& x, const DualTables& t, std::uint32_t p);

/// i-extremal dual entries dominate the mirrored primal entry; extremal ones
/// equal it. Checked in both directions. X must be neither void nor a simplex.
VerificationReport check_extremal_flip(const SimplicialComplex& x, const PrimeField& k);
VerificationReport check_extremal_flip(const SimplicialComplex& x, const DualTables& t, std::uint32_t p);

/// reg(I_X) == pd(S/I_{X^v}). X must be neither void nor a simplex.
VerificationReport check_regularity_pd_duality(const SimplicialComplex& x, const PrimeField& k);

/// Reisner: H~_i(lk(F, X); k) = 0 for every face F and i < dim lk(F, X).
bool is_cohen_macaulay(const SimplicialComplex& x, const PrimeField& k);

/// pd(S/I_X) == n - dim(X) - 1, i.e. depth equals Krull dimension.
bool is_cohen_macaulay_by_depth(const SimplicialComplex& x, const PrimeField& k);

/// PASS iff X is Cohen-Macaulay; FAIL also when the two routes disagree.
VerificationReport check_cohen_macaulay(const SimplicialComplex& x, const PrimeField& k);

/// On core(X): every link has the homology of a sphere of its own dimension.
bool is_gorenstein(const SimplicialComplex& x, const PrimeField& k);

/// PASS iff Gorenstein. Cross-checks the link criterion against
/// "Cohen-Macaulay with last total Betti number 1", and when Gorenstein also
/// requires a single corner of value 1 and a linear resolution of I_{X^v}.
VerificationReport check_gorenstein(const SimplicialComplex& x, const PrimeField& k);

/// X is Cohen-Macaulay and so is every X minus a vertex, with the same dimension.
bool is_doubly_cohen_macaulay(const SimplicialComplex& x, const PrimeField& k);

/// PASS iff doubly Cohen-Macaulay; when it is, also requires I_{X^v} to have
/// a linear resolution whose only extremal Betti number sits at
/// (dim X + 1, (1, ..., 1)).
VerificationReport check_doubly_cohen_macaulay(const SimplicialComplex& x, const PrimeField& k);

}  // namespace bettikit
