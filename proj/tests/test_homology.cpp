#include <doctest.h>

#include "bettikit/complexcore.hpp"
#include "bettikit/homology.hpp"
#include "bettikit/linalg.hpp"
#include "bettikit/random.hpp"
#include "fixtures.hpp"

using namespace bettikit;
using fixtures::complex;

TEST_CASE("prime field arithmetic") {
  const PrimeField k(7);
  CHECK(k.reduce(-1) == 6);
  CHECK(k.add(5, 4) == 2);
  CHECK(k.sub(2, 5) == 4);
  CHECK(k.mul(3, 5) == 1);
  CHECK(k.inv(3) == 5);
  CHECK(k.pow(3, 6) == 1);
  CHECK_THROWS_AS(k.inv(0), std::domain_error);
  CHECK_THROWS_AS(PrimeField(8), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  CHECK(PrimeField().characteristic() == 32003);
  CHECK(is_prime(2147483647u));
  CHECK_FALSE(is_prime(32001));

  const PrimeField big(2147483647u);
  for (std::uint32_t a : {2u, 12345u, 2147483646u}) CHECK(big.mul(a, big.inv(a)) == 1);
}

TEST_CASE("matrix rank") {
  const PrimeField k7(7);
  CHECK(matrix_rank(ModMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), k7) == 3);
  CHECK(matrix_rank(ModMatrix(3, 4), k7) == 0);
  CHECK(matrix_rank(ModMatrix::from_rows({{1, 2}, {2, 4}}), k7) == 1);
  CHECK(matrix_rank(ModMatrix::from_rows({{1, 2}, {2, 5}}), k7) == 2);
  // det = 2 vanishes mod 2 only.
  CHECK(matrix_rank(ModMatrix::from_rows({{1, 1}, {1, 3}}), PrimeField(2)) == 1);
  CHECK(matrix_rank(ModMatrix::from_rows({{1, 1}, {1, 3}}), PrimeField(3)) == 2);
  CHECK(matrix_rank(ModMatrix(0, 5), k7) == 0);
}

TEST_CASE("reduced homology of small complexes") {
  const PrimeField k;
  CHECK(reduced_homology_ranks(fixtures::pentagon(), k) == HomologyRanks({0, 0, 1}));
  CHECK(reduced_homology_ranks(SimplicialComplex::irrelevant(3), k) == HomologyRanks({1}));
  CHECK(reduced_homology_ranks(SimplicialComplex::void_complex(3), k).values().empty());
  CHECK(reduced_homology_ranks(SimplicialComplex::simplex(4), k).is_zero());
  CHECK(reduced_homology_ranks(complex(4, {{0}, {1}, {2}}), k) == HomologyRanks({0, 2}));

  const auto t = fixtures::torus();
  for (std::uint32_t p : {2u, 3u, 32003u}) {
    const auto h = reduced_homology_ranks(t, PrimeField(p));
    CHECK(h.at(-1) == 0);
    CHECK(h.at(0) == 0);
    CHECK(h.at(1) == 2);
    CHECK(h.at(2) == 1);
  }

  // Real projective plane (6 vertices): H_1 = Z/2, visible only at p = 2.
  const auto rp2 = complex(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4},
                               {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
  CHECK(reduced_homology_ranks(rp2, PrimeField(3)).is_zero());
  CHECK(reduced_homology_ranks(rp2, PrimeField(2)) == HomologyRanks({0, 0, 1, 1}));
}

TEST_CASE("relative homology") {
  const PrimeField k;
  const auto pent = fixtures::pentagon();
  CHECK(relative_homology_ranks(pent, pent, k).is_zero());
  const auto edge = complex(2, {{0, 1}});
  CHECK(relative_homology_ranks(edge, complex(2, {{0}}), k).is_zero());
  // (disk, boundary circle) has H_2 = k.
  const auto disk = complex(3, {{0, 1, 2}});
  const auto circle = complex(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(relative_homology_ranks(disk, circle, k).at(2) == 1);
  CHECK_THROWS_AS(relative_homology_ranks(circle, disk, k), std::invalid_argument);
}

TEST_CASE("boundary maps compose to zero, Euler characteristic and cones, on random complexes") {
  Rng rng(11);
  for (std::uint32_t p : {2u, 32003u}) {
    const PrimeField k(p);
    for (int trial = 0; trial < 150; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 7);
      const auto x = random_complex(rng, n, 7);
      CAPTURE(to_string(x));
      const auto levels = x.faces_by_size();
      for (std::size_t d = 2; d < levels.size(); ++d) {
        const ModMatrix upper = boundary_matrix(levels[d], levels[d - 1], k);
        const ModMatrix lower = boundary_matrix(levels[d - 1], levels[d - 2], k);
        CHECK(multiply(upper, lower, k).is_zero());
      }
      const auto h = reduced_homology_ranks(x, k);
      long euler_faces = 0;
      long euler_homology = 0;
      for (int d = -1; d <= x.dimension(); ++d) {
        const long sign = d % 2 == 0 ? 1 : -1;
        euler_faces += sign * static_cast<long>(levels[static_cast<std::size_t>(d + 1)].size());
        euler_homology += sign * h.at(d);
      }
      CHECK(euler_faces == euler_homology);

      // Cone over x with apex n-1 is acyclic (when n-1 is not already used).
      if (!x.vertices().contains(n - 1)) {
        std::vector<VertexSet> coned;
        for (VertexSet f : x.facets()) coned.push_back(f.with(n - 1));
        CHECK(reduced_homology_ranks(SimplicialComplex::from_facets(n, coned), k).is_zero());
      }
    }
  }
}

TEST_CASE("reduced homology ranks agree with Alexander duality on random complexes") {
  Rng rng(5);
  const PrimeField k;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto x = random_complex(rng, n, 6);
    const auto h = reduced_homology_ranks(x, k);
    const auto hd = reduced_homology_ranks(alexander_dual(x), k);
    CAPTURE(to_string(x));
    for (int i = -1; i <= n; ++i) CHECK(h.at(i) == hd.at(n - i - 3));
  }
}
