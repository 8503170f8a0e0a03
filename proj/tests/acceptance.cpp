// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bettikit/complexcore.hpp"
#include "bettikit/dualitylab.hpp"
#include "bettikit/ginlab.hpp"
#include "bettikit/homology.hpp"
#include "bettikit/random.hpp"
#include "bettikit/resolutions.hpp"

using namespace bettikit;

namespace {

const PrimeField k;

struct Outcome {
  bool pass = true;
  std::ostringstream notes;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (!pass) notes << "; ";
    pass = false;
    notes << what;
  }
};

SimplicialComplex complex(int n, std::vector<std::vector<int>> facets) {
  std::vector<VertexSet> fs;
  for (const auto& f : facets) {
    VertexSet s;
    for (int v : f) s = s.with(v);
    fs.push_back(s);
  }
  return SimplicialComplex::from_facets(n, std::move(fs));
}

MonomialIdeal square_free_ideal(int n, const std::vector<std::vector<int>>& gens) {
  std::vector<Multidegree> ms;
  for (const auto& g : gens) {
    Multidegree m(n);
    for (int v : g) m[v] = 1;
    ms.push_back(m);
  }
  return MonomialIdeal(n, std::move(ms));
}

SimplicialComplex pentagon() { return complex(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}); }

SimplicialComplex torus() {
  std::vector<std::vector<int>> gens;
  for (int i = 0; i < 7; ++i)
    for (const auto& t : {std::vector{0, 1, 2}, std::vector{0, 1, 4}, std::vector{0, 2, 4}})
      gens.push_back({(i + t[0]) % 7, (i + t[1]) % 7, (i + t[2]) % 7});
  return complex_of_ideal(square_free_ideal(7, gens));
}

BettiDiagram diagram(std::initializer_list<std::tuple<int, int, std::int64_t>> entries) {
  BettiDiagram d;
  for (const auto& [i, j, v] : entries) d.add(i, j, v);
  return d;
}

BettiDiagram quotient_diagram(const SimplicialComplex& x, const PrimeField& f) {
  return coarse_diagram(hochster_betti(x, f));
}
BettiDiagram dual_diagram(const SimplicialComplex& x, const PrimeField& f) {
  return coarse_diagram(dual_betti_via_links(x, f).to_quotient());
}

Polynomial poly(std::string_view text, int n) { return parse_polynomial(text, n, k); }

Outcome cycle() {
  Outcome o;
  const auto x = pentagon();
  o.expect(quotient_diagram(x, k) == diagram({{0, 0, 1}, {1, 2, 5}, {2, 3, 5}, {3, 5, 1}}), "quotient table");
  o.expect(dual_diagram(x, k) == diagram({{0, 0, 1}, {1, 3, 5}, {2, 4, 5}, {3, 5, 1}}), "dual table");
  return o;
}

Outcome torus_tables() {
  Outcome o;
  const auto x = torus();
  const auto q = quotient_diagram(x, k);
  const auto d = dual_diagram(x, k);
  o.expect(q.totals() == std::vector<std::int64_t>{1, 21, 49, 42, 15, 2}, "quotient totals");
  o.expect(q.at(4, 6) == 14 && q.at(4, 7) == 1 && q.at(5, 7) == 2, "quotient entries");
  o.expect(d.totals() == std::vector<std::int64_t>{1, 14, 21, 9, 1}, "dual totals");
  o.expect(d.at(3, 6) == 7 && d.at(3, 7) == 2 && d.at(4, 7) == 1, "dual entries");
  const PrimeField f2(2);
  o.expect(hochster_betti(x, f2) == hochster_betti(x, k), "p=2 quotient ranks differ");
  o.expect(dual_betti_via_links(x, f2) == dual_betti_via_links(x, k), "p=2 dual ranks differ");
  return o;
}

Outcome multigraded() {
  Outcome o;
  const auto x = complex_of_ideal(square_free_ideal(5, {{0, 2}, {0, 3}, {0, 4}, {1, 4}}));
  o.expect(quotient_diagram(x, k) == diagram({{0, 0, 1}, {1, 2, 4}, {2, 3, 4}, {3, 4, 1}}), "quotient table");
  const auto dual = dual_betti_via_links(x, k);
  const auto dd = coarse_diagram(dual.to_quotient());
  o.expect(dd == diagram({{0, 0, 1}, {1, 2, 2}, {1, 3, 1}, {2, 3, 1}, {2, 4, 1}}), "dual table");
  Multidegree b(5);
  for (int v : {0, 1, 4}) b[v] = 1;
  o.expect(dual.at(1, b) == 1, "dual entry at (1, x0x1x4)");
  o.expect(is_i_extremal(dual, 1, b), "not i-extremal");
  o.expect(!is_single_graded_extremal(dd, 2, 3), "single-graded extremal");
  return o;
}

Outcome pipelines() {
  Outcome o;
  Rng rng(4001);
  int mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const auto ideal = random_square_free_ideal(rng, n, 8, n);
    if (betti_via_koszul(ideal, k).to_quotient() != hochster_betti(complex_of_ideal(ideal), k)) {
      if (mismatches++ == 0) o.notes << "first mismatch " << to_string(ideal);
    }
  }
  o.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
  return o;
}

Outcome rank_duality() {
  Outcome o;
  Rng rng(5001);
  int failures = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto x = random_complex(rng, n, 8);
    const auto h = reduced_homology_ranks(x, k);
    const auto hd = reduced_homology_ranks(alexander_dual(x), k);
    bool ok = true;
    for (int i = -1; i <= n; ++i) ok = ok && h.at(i) == hd.at(n - i - 3);
    if (!ok && failures++ == 0) o.notes << "first failure " << instance_string(x);
  }
  o.expect(failures == 0, std::to_string(failures) + " failures");
  return o;
}

Outcome theorem_suite() {
  Outcome o;
  Rng rng(6001);
  int failures = 0;
  int runs = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto x = random_complex(rng, n, 8);
    const auto t = dual_tables(x, k);
    std::vector<VerificationReport> reports{
        check_regularity_pd_duality(x, k), check_betti_duality_bound(x, t, k.characteristic()),
        check_graded_duality_bound(x, t, k.characteristic()), check_extremal_flip(x, t, k.characteristic()),
        check_restriction_link_sequence_all(x, k)};
    for (const auto& r : reports) {
      ++runs;
      if (!r.pass && failures++ == 0) o.notes << r.to_line();
    }
  }
  o.expect(failures == 0, std::to_string(failures) + " of " + std::to_string(runs) + " checks failed");
  return o;
}

Outcome cohen_macaulay() {
  Outcome o;
  Rng rng(7001);
  int disagreements = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto x = random_complex(rng, n, 6);
    if (is_cohen_macaulay(x, k) != is_cohen_macaulay_by_depth(x, k) && disagreements++ == 0)
      o.notes << "first disagreement " << instance_string(x) << "; ";
  }
  o.expect(disagreements == 0, std::to_string(disagreements) + " route disagreements");
  const auto t = torus();
  o.expect(is_cohen_macaulay(pentagon(), k), "pentagon CM = false");
  const auto torus_cm = check_cohen_macaulay(t, k);
  o.expect(torus_cm.pass, "torus CM = false (" + torus_cm.witness + ")");
  o.expect(!is_gorenstein(t, k), "torus Gorenstein = true");
  o.expect(is_gorenstein(pentagon(), k), "pentagon Gorenstein = false");
  return o;
}

Outcome artinian() {
  Outcome o;
  Rng rng(8001);
  int failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto ideal = random_artinian_ideal(rng, n, 4, 3);
    // Independent oracle: the socle degree read off the Hilbert function.
    const auto h = hilbert_function(ideal, 4 * n);
    int top = 0;
    for (int d = 0; d < static_cast<int>(h.size()); ++d)
      if (h[static_cast<std::size_t>(d)] != 0) top = d;
    const auto cs = corners(coarse_diagram(betti_via_koszul(ideal, k).to_quotient()));
    const bool ok = cs.size() == 1 && cs[0].l == n && cs[0].m == top &&
                    cs[0].value == h[static_cast<std::size_t>(top)] && artinian_extremal_check(ideal, k);
    if (!ok && failures++ == 0) o.notes << "first failure " << to_string(ideal) << "; ";
  }
  o.expect(failures == 0, std::to_string(failures) + " failures");
  return o;
}

std::vector<MonomialIdeal> stable_gins;

Outcome gin_corners() {
  Outcome o;
  Rng rng(9001);
  int failures = 0;
  int unstable = 0;
  int stable = 0;
  for (std::uint64_t trial = 0; stable < 50 && trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto gens = random_homogeneous_ideal(rng, n, 4, 3, 3, k);
    const std::uint64_t seed = kDefaultSeed + trial;
    try {
      const auto j = gin(gens, n, seed, k);
      const auto corners = compare_corners(gens, n, k, seed);
      const auto depth = depth_preservation_check(gens, n, k, seed);
      ++stable;
      stable_gins.push_back(j);
      for (const auto& r : {corners, depth})
        if (!r.pass && failures++ == 0) o.notes << r.to_line() << "; ";
    } catch (const GinUnstable&) {
      ++unstable;
    }
  }
  o.expect(stable == 50, "only " + std::to_string(stable) + " stable gins");
  o.expect(failures == 0, std::to_string(failures) + " failed checks");
  const MonomialIdeal x2(2, {Multidegree({2, 0})});
  o.expect(gin({poly("xy", 2)}, 2, kDefaultSeed, k) == x2, "gin((xy)) != (x^2)");
  const MonomialIdeal expected(2, {Multidegree({2, 0}), Multidegree({1, 1}), Multidegree({0, 3})});
  o.expect(gin({poly("x^2", 2), poly("y^2", 2)}, 2, kDefaultSeed, k) == expected, "gin((x^2,y^2)) != (x^2,xy,y^3)");
  if (o.pass) o.notes << stable << " stable, " << unstable << " unstable";
  return o;
}

Outcome borel() {
  Outcome o;
  int failures = 0;
  for (const auto& j : stable_gins)
    if (!borel_check(j, k.characteristic()) && failures++ == 0) o.notes << "first failure " << to_string(j) << "; ";
  o.expect(!stable_gins.empty(), "no gins from criterion 9");
  o.expect(failures == 0, std::to_string(failures) + " failures");
  if (o.pass) o.notes << stable_gins.size() << " gins";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "cycle tables", 1, cycle},
      {2, "torus tables", 30, torus_tables},
      {3, "multigraded example", 10, multigraded},
      {4, "Koszul and Hochster pipelines agree", 300, pipelines},
      {5, "Alexander rank duality", 60, rank_duality},
      {6, "duality theorem suite", 300, theorem_suite},
      {7, "Cohen-Macaulay cross-validation", 60, cohen_macaulay},
      {8, "artinian corner", 60, artinian},
      {9, "gin corner preservation", 600, gin_corners},
      {10, "Borel sanity", 10, borel},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) o.expect(false, "over the " + std::to_string(c.budget_seconds) + " s budget");
    if (!o.pass) ++failed;
    char time[32];
    std::snprintf(time, sizeof time, "%.3fs", seconds);
    std::cout << "criterion " << c.number << " " << (o.pass ? "PASS" : "FAIL") << " " << c.name << " [" << time
              << "]";
    const std::string notes = o.notes.str();
    if (!notes.empty()) std::cout << " " << notes;
    std::cout << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
