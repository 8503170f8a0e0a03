#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bettikit/betti_table.hpp"
#include "bettikit/field.hpp"
#include "bettikit/groebner.hpp"
#include "bettikit/monomial_ideal.hpp"
#include "bettikit/polynomial.hpp"
#include "bettikit/report.hpp"

namespace bettikit {

inline constexpr std::uint64_t kDefaultSeed = 20240611;
inline constexpr int kGinSeedPairs = 4;

/// Invertible n x n matrix acting by x_j -> sum_i M(i, j) x_i.
struct LinearChange {
  int n = 0;
  std::vector<std::vector<std::uint32_t>> matrix;
  std::uint64_t seed = 0;

  static LinearChange identity(int n);
  /// Uniform entries from the seed; singular draws are discarded and redrawn.
  static LinearChange random(int n, std::uint64_t seed, const PrimeField& k);

  Polynomial apply(const Polynomial& f, const PrimeField& k) const;
};

std::vector<Polynomial> generic_change(const std::vector<Polynomial>& gens, int n, std::uint64_t seed,
                                       const PrimeField& k);

/// Lead ideal after one random change of coordinates. No stability check.
MonomialIdeal gin_candidate(const std::vector<Polynomial>& gens, int n, std::uint64_t seed, const PrimeField& k);

class GinUnstable : public std::runtime_error {
 public:
  GinUnstable(MonomialIdeal first, MonomialIdeal second);
  const MonomialIdeal& first() const { return first_; }
  const MonomialIdeal& second() const { return second_; }

 private:
  MonomialIdeal first_;
  MonomialIdeal second_;
};

/// Generic initial ideal in degrevlex. Two candidates from independent seeds
/// derived from `seed` must agree; up to kGinSeedPairs pairs are tried before
/// GinUnstable is thrown with the last two candidates.
MonomialIdeal gin(const std::vector<Polynomial>& gens, int n, std::uint64_t seed, const PrimeField& k);

/// Graded Betti numbers of S/I for homogeneous I, from the homology of the
/// Koszul complex on x0..x(n-1) tensored with S/I, in total degrees up to
/// degree_bound. Quotient convention.
BettiDiagram betti_via_tor(const std::vector<Polynomial>& gens, int n, const PrimeField& k, int degree_bound);

/// Compares l-regularity for every l, the corner positions and the corner
/// values of S/I and S/gin(I). Throws GinUnstable.
VerificationReport compare_corners(const std::vector<Polynomial>& gens, int n, const PrimeField& k,
                                   std::uint64_t seed);

/// depth(S/I) == depth(S/gin(I)), both as n - pd. Throws GinUnstable.
VerificationReport depth_preservation_check(const std::vector<Polynomial>& gens, int n, const PrimeField& k,
                                            std::uint64_t seed);

/// Strong stability: x_i * m / x_j lies in J for every generator m, x_j | m, i < j.
/// Requires p larger than every generator degree.
bool borel_check(const MonomialIdeal& j, std::uint32_t p);

/// "n=<n> gens: f1, f2"
std::string ideal_instance_string(const std::vector<Polynomial>& gens, int n);

}  // namespace bettikit
