#pragma once

#include <vector>

#include "bettikit/field.hpp"
#include "bettikit/monomial_ideal.hpp"
#include "bettikit/polynomial.hpp"

namespace bettikit {

/// Reduced degrevlex Groebner basis: monic, sorted by increasing lead monomial.
struct GroebnerBasis {
  int n = 0;
  std::vector<Polynomial> basis;

  /// Monomial ideal of lead terms.
  MonomialIdeal lead_ideal() const;
  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const PrimeField& k);

/// Full reduction of f by `divisors`; the result has no term divisible by any
/// divisor's lead monomial.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors, const PrimeField& k);

/// Buchberger's algorithm with the normal selection strategy and both of
/// Buchberger's pair criteria. Zero generators are dropped; every remaining
/// one must be homogeneous (std::invalid_argument otherwise).
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const PrimeField& k);

/// Every S-polynomial of `g` reduces to zero modulo `g`.
bool is_groebner_basis(const std::vector<Polynomial>& g, const PrimeField& k);

}  // namespace bettikit
