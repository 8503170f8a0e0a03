#include <doctest.h>

#include "bettikit/groebner.hpp"
#include "bettikit/parse_error.hpp"
#include "bettikit/polynomial.hpp"
#include "bettikit/random.hpp"
#include "fixtures.hpp"

using namespace bettikit;
using fixtures::mono;

namespace {

const PrimeField k;

Polynomial poly(std::string_view text, int n = 3) { return parse_polynomial(text, n, k); }

}  // namespace

TEST_CASE("degrevlex") {
  const auto gt = std::strong_ordering::greater;
  CHECK(degrevlex_compare(mono({2, 0, 0}), mono({1, 1, 0})) == gt);  // x^2 > xy
  CHECK(degrevlex_compare(mono({1, 1, 0}), mono({0, 2, 0})) == gt);  // xy > y^2
  CHECK(degrevlex_compare(mono({0, 2, 0}), mono({1, 0, 1})) == gt);  // y^2 > xz
  CHECK(degrevlex_compare(mono({0, 0, 1}), mono({3, 0, 0})) == std::strong_ordering::less);
  CHECK(degrevlex_compare(mono({1, 2, 0}), mono({1, 2, 0})) == std::strong_ordering::equal);
  CHECK_THROWS(degrevlex_compare(mono({1}), mono({1, 0})));
}

TEST_CASE("polynomial arithmetic") {
  const auto f = poly("x + y");
  const auto g = poly("x - y");
  CHECK(f.times(g, k) == poly("x^2 - y^2"));
  CHECK(f.plus(g, k) == poly("2x"));
  CHECK(f.minus(f, k).is_zero());
  CHECK(f.times_term(3, mono({0, 0, 1}), k) == poly("3xz + 3yz"));
  CHECK(poly("2x^2 + 4y^2").monic(k) == poly("x^2 + 2y^2"));
  CHECK(poly("x^2 + y").degree() == 2);
  CHECK_FALSE(poly("x^2 + y").is_homogeneous());
  CHECK(poly("x^2 + yz").is_homogeneous());
  CHECK(Polynomial(3).degree() == -1);
  CHECK(poly("y^2 + x^2").lead().mono == mono({2, 0, 0}));
  CHECK(poly("xy").is_monomial());
  CHECK(Polynomial::monomial(mono({1, 0, 2}), 5) == poly("5*x0*x2^2"));
}

TEST_CASE("parse and render") {
  CHECK(to_string(poly("3x0^2x1 + x2^3")) == "3*x0^2*x1 + x2^3");
  CHECK(to_string(poly("x2^3 + 3*x0^2*x1")) == "3*x0^2*x1 + x2^3");
  CHECK(to_string(poly("x - x")) == "0");
  CHECK(to_string(poly("-x")) == "32002*x0");
  CHECK(to_string(poly("7")) == "7");
  CHECK(to_string(poly("x y z")) == "x0*x1*x2");
  CHECK(to_string(parse_polynomial("x + 32004*y", 2, k)) == "x0 + x1");
  CHECK(parse_polynomial("w^2", -1, k).variable_count() == 4);
  CHECK(parse_polynomial("x9", -1, k).variable_count() == 10);

  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    for (const auto& f : random_homogeneous_ideal(rng, 4, 3, 3, 4, k)) CHECK(poly(to_string(f), 4) == f);
  }
}

TEST_CASE("parse errors carry positions") {
  const auto column_of = [](std::string_view text, int n) {
    try {
      parse_polynomial(text, n, k, 4, 10);
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
      return e.column();
    }
    return -1;
  };
  CHECK(column_of("x + q", 3) == 15);
  CHECK(column_of("x5", 3) >= 11);
  CHECK(column_of("x^", 3) > 10);
  CHECK(column_of("", 3) > 0);
  CHECK(column_of("x +", 3) > 10);
  try {
    parse_polynomial("x $", 2, k);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).starts_with("1:3: "));
  }
}

TEST_CASE("Buchberger on small ideals") {
  const auto g = buchberger({poly("x^2 + y^2", 2), poly("xy", 2)}, k);
  CHECK(g.lead_ideal() == MonomialIdeal(2, {mono({2, 0}), mono({1, 1}), mono({0, 3})}));
  CHECK(g.basis.size() == 3);
  for (const auto& f : g.basis) CHECK(f.lead().coeff == 1);
  CHECK(is_groebner_basis(g.basis, k));
  CHECK_FALSE(is_groebner_basis({poly("x^2 + y^2", 2), poly("xy", 2)}, k));

  // A monomial ideal is its own basis.
  const auto m = buchberger({poly("xy"), poly("x^2"), poly("x^2 y")}, k);
  CHECK(m.basis == std::vector<Polynomial>{poly("xy"), poly("x^2")});

  CHECK(buchberger({Polynomial(2)}, k).basis.empty());
  CHECK(buchberger({poly("x - y", 2), poly("x + y", 2)}, k).lead_ideal() ==
        MonomialIdeal(2, {mono({1, 0}), mono({0, 1})}));
  CHECK_THROWS_AS(buchberger({poly("x^2 + y")}, k), std::invalid_argument);

  // Twisted cubic: 2x2 minors give three quadrics that already form a basis.
  const auto cubic = buchberger({poly("x0 x2 - x1^2", 4), poly("x0 x3 - x1 x2", 4), poly("x1 x3 - x2^2", 4)}, k);
  CHECK(cubic.basis.size() == 3);
  CHECK(cubic.lead_ideal() == MonomialIdeal(4, {mono({0, 2, 0, 0}), mono({0, 1, 1, 0}), mono({0, 0, 2, 0})}));
}

TEST_CASE("normal forms") {
  const std::vector<Polynomial> divs{poly("x^2 + y^2", 2), poly("xy", 2)};
  CHECK(normal_form(poly("x^3", 2), divs, k).is_zero());
  CHECK(normal_form(poly("x^2", 2), divs, k) == poly("-y^2", 2));
  CHECK(normal_form(poly("y^3", 2), divs, k) == poly("y^3", 2));
  CHECK(s_polynomial(poly("x^2 + y^2", 2), poly("xy", 2), k) == poly("y^3", 2));
}

TEST_CASE("Buchberger properties on random ideals") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const auto gens = random_homogeneous_ideal(rng, n, 3, 3, 3, k);
    const auto g = buchberger(gens, k);
    CHECK(is_groebner_basis(g.basis, k));
    // Generators reduce to zero; the basis is reduced and sorted.
    for (const auto& f : gens) CHECK(normal_form(f, g.basis, k).is_zero());
    for (std::size_t a = 0; a < g.basis.size(); ++a) {
      std::vector<Polynomial> others = g.basis;
      others.erase(others.begin() + static_cast<std::ptrdiff_t>(a));
      CHECK(normal_form(g.basis[a], others, k) == g.basis[a]);
      if (a > 0) CHECK(degrevlex_compare(g.basis[a - 1].lead().mono, g.basis[a].lead().mono) < 0);
    }
    // Reduction is idempotent and linear.
    const auto h = random_homogeneous_ideal(rng, n, 2, 4, 4, k);
    const auto nf0 = normal_form(h[0], g.basis, k);
    CHECK(normal_form(nf0, g.basis, k) == nf0);
    if (h.size() == 2) {
      CHECK(normal_form(h[0].plus(h[1], k), g.basis, k) == nf0.plus(normal_form(h[1], g.basis, k), k));
    }
    // The basis does not depend on the order of the generators.
    std::vector<Polynomial> reversed(gens.rbegin(), gens.rend());
    CHECK(buchberger(reversed, k) == g);
  }
}
