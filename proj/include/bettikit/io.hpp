#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bettikit/complex.hpp"
#include "bettikit/field.hpp"
#include "bettikit/monomial_ideal.hpp"
#include "bettikit/parse_error.hpp"
#include "bettikit/polynomial.hpp"

namespace bettikit {

/// Text input for the command-line tool:
///
///   # pentagon
///   n: 5
///   facets: 0 1, 1 2, 2 3, 3 4, 0 4
///
/// or a `gens:` body of comma-separated polynomials. Optional keys are `char`
/// and `seed`. Lines that do not start with a key continue the previous body.
/// `{}` is the empty face, `facets:` alone is the void complex, `gens:` alone is
/// the zero ideal. When n is absent it is one more than the largest index used.
struct InputDocument {
  enum class Body { facets, gens };

  int n = 0;
  Body body = Body::facets;
  std::vector<VertexSet> facets;
  std::vector<Polynomial> gens;
  std::optional<std::uint32_t> characteristic;
  std::optional<std::uint64_t> seed;

  PrimeField field() const { return PrimeField(characteristic.value_or(kDefaultCharacteristic)); }
  SimplicialComplex complex() const;
  /// Every generator is a single term.
  bool gens_are_monomials() const;
  /// Throws std::invalid_argument unless gens_are_monomials().
  MonomialIdeal monomial_ideal() const;
};

/// Throws ParseError. A given `characteristic` replaces the document's `char`
/// before coefficients are reduced.
InputDocument parse_input(std::string_view text, std::optional<std::uint32_t> characteristic = std::nullopt);

/// Canonical text; parse_input(render(d)) reproduces d.
std::string render(const InputDocument& doc);
std::string render(const SimplicialComplex& x);
std::string render(const MonomialIdeal& ideal);

}  // namespace bettikit
