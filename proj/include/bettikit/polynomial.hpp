#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bettikit/field.hpp"
#include "bettikit/multidegree.hpp"

namespace bettikit {

/// Degree reverse lexicographic order. Higher total degree wins; on a tie a > b
/// iff the last nonzero entry of a - b is negative.
std::strong_ordering degrevlex_compare(const Multidegree& a, const Multidegree& b);

struct Term {
  std::uint32_t coeff;
  Multidegree mono;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Polynomial over GF(p) in n variables. Terms are kept strictly descending in
/// degrevlex with nonzero coefficients; the zero polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(int n = 0) : n_(n) {}
  /// Combines like terms, reduces coefficients, drops zeros and sorts.
  Polynomial(int n, std::vector<Term> terms, const PrimeField& k);
  static Polynomial monomial(const Multidegree& m, std::uint32_t coeff = 1);

  int variable_count() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  /// Degree of the lead term; -1 for zero.
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.total(); }
  const Term& lead() const { return terms_.front(); }
  bool is_monomial() const { return terms_.size() == 1; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Arithmetic. Operands must share the variable count.
  Polynomial plus(const Polynomial& o, const PrimeField& k) const;
  Polynomial minus(const Polynomial& o, const PrimeField& k) const;
  Polynomial times(const Polynomial& o, const PrimeField& k) const;
  Polynomial times_term(std::uint32_t c, const Multidegree& m, const PrimeField& k) const;
  /// Scales so the lead coefficient is 1. Zero stays zero.
  Polynomial monic(const PrimeField& k) const;

 private:
  int n_;
  std::vector<Term> terms_;  // strictly descending
};

/// "3*x0^2*x1 + x2^3"; zero renders as "0". Coefficients print as residues.
std::string to_string(const Polynomial& f);

/// Parses one polynomial. Accepts x<i> variables, and bare x, y, z, w as x0..x3;
/// juxtaposed factors multiply, '*' is optional, '^' takes a nonnegative
/// integer, terms combine with '+' and '-'. Coefficients are reduced mod p.
/// Throws ParseError with `line` and the 1-based column offset by `column0`.
/// Variable indices must be < n when n >= 0; n < 0 accepts any index and the
/// result lives in (max index + 1) variables.
Polynomial parse_polynomial(std::string_view text, int n, const PrimeField& k, int line = 1, int column0 = 0);

}  // namespace bettikit
