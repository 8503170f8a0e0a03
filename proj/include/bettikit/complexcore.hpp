#pragma once

#include <stdexcept>
#include <vector>

#include "bettikit/complex.hpp"
#include "bettikit/monomial_ideal.hpp"

namespace bettikit {

/// Raised when an operation would have to return the unit ideal (1) as a
/// Stanley-Reisner ideal, i.e. its input is the void complex.
class UnitIdealError : public std::domain_error {
 public:
  UnitIdealError() : std::domain_error("void complex: Stanley-Reisner ideal is the unit ideal") {}
};

/// Minimal subsets of [n] that are not faces. The void complex has the single
/// minimal nonface {}.
std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& x);

/// Square-free ideal generated by the minimal nonfaces. Throws UnitIdealError
/// on the void complex.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& x);

/// Faces are the sets whose monomial is not in the ideal. Rejects
/// non-square-free input (polarize first).
SimplicialComplex complex_of_ideal(const MonomialIdeal& ideal);

/// {F : complement of F is not a face of x}. An involution on complexes over [n].
SimplicialComplex alexander_dual(const SimplicialComplex& x);

/// {G : F u G in x, F n G empty}, kept on the same vertex set. Throws if F is
/// not a face.
SimplicialComplex link(VertexSet face, const SimplicialComplex& x);

/// {G : F u G in x}. Throws if F is not a face.
SimplicialComplex star(VertexSet face, const SimplicialComplex& x);

/// Full subcomplex on the given vertices.
SimplicialComplex restriction(const SimplicialComplex& x, VertexSet vertices);

/// Full subcomplex on the support of a square-free multidegree.
SimplicialComplex restriction(const SimplicialComplex& x, const Multidegree& b);

/// Strips cone points (vertices lying in every facet) until none remain.
SimplicialComplex core(const SimplicialComplex& x);

/// Polarization: the exponent e of x_j becomes the product of e distinct
/// copies x_{j,0} ... x_{j,e-1}. Variable j receives max(1, max exponent)
/// copies, numbered consecutively by (j, copy), so square-free input comes
/// back unchanged.
MonomialIdeal polarize(const MonomialIdeal& ideal);

}  // namespace bettikit
