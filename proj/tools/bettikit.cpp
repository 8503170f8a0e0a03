// bettikit: Betti tables, extremal Betti numbers and duality checks for
// Stanley-Reisner ideals and homogeneous ideals over GF(p).
//
// Exit codes: 0 ok, 1 a verification failed, 2 bad input, 3 gin unstable.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bettikit/complexcore.hpp"
#include "bettikit/dualitylab.hpp"
#include "bettikit/ginlab.hpp"
#include "bettikit/io.hpp"
#include "bettikit/resolutions.hpp"

using namespace bettikit;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnstable = 3;

struct Options {
  std::string file = "-";
  std::uint32_t characteristic = 0;
  bool json = false;
};

InputDocument load(const Options& o) {
  std::string text;
  if (o.file == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(o.file);
    if (!in) throw std::invalid_argument("cannot open " + o.file);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  if (o.characteristic != 0) return parse_input(text, o.characteristic);
  return parse_input(text);
}

MonomialIdeal monomial_input(const InputDocument& doc, bool polarize_ok) {
  MonomialIdeal ideal = doc.monomial_ideal();
  if (ideal.is_square_free()) return ideal;
  if (!polarize_ok) throw std::invalid_argument("generators are not square-free; pass --polarize");
  return polarize(ideal);
}

SimplicialComplex complex_input(const InputDocument& doc) {
  if (doc.body == InputDocument::Body::facets) return doc.complex();
  const MonomialIdeal ideal = doc.monomial_ideal();
  if (!ideal.is_square_free()) throw std::invalid_argument("generators are not square-free");
  return complex_of_ideal(ideal);
}

// Ideal-convention table of the input, facets or monomial generators.
BettiTable input_table(const InputDocument& doc, const PrimeField& k, bool polarize_ok) {
  if (doc.body == InputDocument::Body::facets) return hochster_betti(doc.complex(), k).to_ideal();
  return betti_via_koszul(monomial_input(doc, polarize_ok), k);
}

std::vector<std::pair<BettiTable::Key, std::int64_t>> sorted_entries(const BettiTable& t) {
  std::vector<std::pair<BettiTable::Key, std::int64_t>> v(t.entries().begin(), t.entries().end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    const auto& [ia, ba] = a.first;
    const auto& [ib, bb] = b.first;
    if (ia != ib) return ia < ib;
    if (ba.total() != bb.total()) return ba.total() < bb.total();
    return ba > bb;
  });
  return v;
}

json diagram_json(const BettiDiagram& d) {
  json entries = json::array();
  for (const auto& [key, v] : d.entries()) entries.push_back({{"i", key.first}, {"j", key.second}, {"value", v}});
  return {{"totals", d.totals()}, {"entries", entries}};
}

std::string corner_list(const std::vector<Corner>& cs) {
  std::string s;
  for (const auto& c : cs) s += (s.empty() ? "" : " ") + to_string(c);
  return s.empty() ? "none" : s;
}

int cmd_betti(const Options& o, const std::string& convention, bool multigraded, bool polarize_ok) {
  const InputDocument doc = load(o);
  const PrimeField k = doc.field();
  const Convention conv = convention == "ideal" ? Convention::ideal : Convention::quotient;
  const BettiTable table = input_table(doc, k, polarize_ok).in(conv);
  const BettiDiagram diagram = coarse_diagram(table);
  if (o.json) {
    json out{{"convention", convention_name(conv)}, {"p", k.characteristic()}, {"diagram", diagram_json(diagram)}};
    if (multigraded) {
      json rows = json::array();
      for (const auto& [key, v] : sorted_entries(table))
        rows.push_back({{"i", key.first}, {"b", key.second.exponents()}, {"value", v}});
      out["multigraded"] = rows;
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  if (multigraded) {
    for (const auto& [key, v] : sorted_entries(table))
      std::cout << key.first << " " << monomial_string(key.second) << " " << v << "\n";
  } else {
    std::cout << diagram.render();
  }
  return kExitOk;
}

int cmd_dual(const Options& o, bool diagram) {
  const InputDocument doc = load(o);
  const PrimeField k = doc.field();
  const SimplicialComplex x = complex_input(doc);
  const SimplicialComplex dual = alexander_dual(x);
  json out{{"p", k.characteristic()}};
  std::string text;
  if (dual.is_void()) {
    text = "dual ideal is the unit ideal (the input is the full simplex)\n";
    out["unit"] = true;
    out["gens"] = json::array({"1"});
  } else {
    const MonomialIdeal ideal = stanley_reisner_ideal(dual);
    text = "gens: " + generators_string(ideal) + "\n";
    out["unit"] = false;
    json gens = json::array();
    for (const auto& g : ideal.generators()) gens.push_back(monomial_string(g));
    out["gens"] = gens;
  }
  if (diagram) {
    const BettiDiagram d = coarse_diagram(dual_betti_via_links(x, k).to_quotient());
    text += d.render();
    out["diagram"] = diagram_json(d);
  }
  if (o.json) std::cout << out.dump(2) << "\n";
  else std::cout << text;
  return kExitOk;
}

int cmd_extremal(const Options& o, bool dual, bool polarize_ok) {
  const InputDocument doc = load(o);
  const PrimeField k = doc.field();
  BettiTable table = dual ? dual_betti_via_links(complex_input(doc), k) : input_table(doc, k, polarize_ok);
  table = table.to_quotient();
  const auto cs = corners(coarse_diagram(table));
  const auto ext = multigraded_extremal(table);
  if (o.json) {
    json jc = json::array();
    for (const auto& c : cs) jc.push_back({{"l", c.l}, {"m", c.m}, {"value", c.value}});
    json je = json::array();
    for (const auto& [i, b] : ext) je.push_back({{"i", i}, {"b", b.exponents()}, {"value", table.at(i, b)}});
    std::cout << json{{"p", k.characteristic()}, {"corners", jc}, {"multigraded_extremal", je}}.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "corners: " << corner_list(cs) << "\n";
  std::cout << "multigraded extremal:" << (ext.empty() ? " none" : "") << "\n";
  for (const auto& [i, b] : ext) std::cout << "  " << i << " " << monomial_string(b) << " " << table.at(i, b) << "\n";
  return kExitOk;
}

using Check = std::function<VerificationReport(const SimplicialComplex&, const PrimeField&)>;

const std::vector<std::pair<std::string, Check>>& check_table() {
  static const std::vector<std::pair<std::string, Check>> table{
      {"terai", check_regularity_pd_duality},
      {"corF", [](const SimplicialComplex& x, const PrimeField& k) { return check_betti_duality_bound(x, k); }},
      {"corG", [](const SimplicialComplex& x, const PrimeField& k) { return check_graded_duality_bound(x, k); }},
      {"thmG", [](const SimplicialComplex& x, const PrimeField& k) { return check_extremal_flip(x, k); }},
      {"thmE", check_restriction_link_sequence_all},
      {"cm", check_cohen_macaulay},
      {"gorenstein", check_gorenstein},
      {"dcm", check_doubly_cohen_macaulay},
  };
  return table;
}

int cmd_check(const Options& o, const std::string& which) {
  const InputDocument doc = load(o);
  const PrimeField k = doc.field();
  const SimplicialComplex x = complex_input(doc);
  bool all_pass = true;
  json reports = json::array();
  for (const auto& [name, check] : check_table()) {
    if (which != "all" && which != name) continue;
    VerificationReport r;
    try {
      r = check(x, k);
    } catch (const std::invalid_argument& e) {
      if (which != "all") throw;
      std::cout << name << " SKIP (" << e.what() << ")\n";
      continue;
    }
    all_pass = all_pass && r.pass;
    if (o.json) reports.push_back(r.to_json());
    else std::cout << r.to_line() << "\n";
  }
  if (o.json) std::cout << reports.dump(2) << "\n";
  return all_pass ? kExitOk : kExitFailed;
}

int cmd_gin(const Options& o, std::optional<std::uint64_t> seed_flag, bool compare) {
  const InputDocument doc = load(o);
  if (doc.body != InputDocument::Body::gens) throw std::invalid_argument("gin needs a gens body");
  const PrimeField k = doc.field();
  const std::uint64_t seed = seed_flag.value_or(doc.seed.value_or(kDefaultSeed));
  try {
    const MonomialIdeal j = gin(doc.gens, doc.n, seed, k);
    json out{{"p", k.characteristic()}, {"seed", seed}, {"gin", generators_string(j)}};
    if (!o.json) std::cout << "gin: " << generators_string(j) << "\n";
    bool pass = true;
    if (compare) {
      json reports = json::array();
      for (const auto& r : {compare_corners(doc.gens, doc.n, k, seed), depth_preservation_check(doc.gens, doc.n, k, seed)}) {
        pass = pass && r.pass;
        if (o.json) reports.push_back(r.to_json());
        else std::cout << r.to_line() << "\n";
      }
      out["reports"] = reports;
    }
    if (o.json) std::cout << out.dump(2) << "\n";
    return pass ? kExitOk : kExitFailed;
  } catch (const GinUnstable& e) {
    if (o.json) {
      std::cout << json{{"unstable", true}, {"first", generators_string(e.first())},
                        {"second", generators_string(e.second())}}.dump(2)
                << "\n";
    } else {
      std::cout << "unstable: " << generators_string(e.first()) << " | " << generators_string(e.second()) << "\n";
    }
    std::cerr << "bettikit: " << e.what() << "\n";
    return kExitUnstable;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti numbers, extremal Betti numbers and Alexander duality over GF(p)"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "input file, '-' for stdin")->capture_default_str();
    sub->add_option("--char", o.characteristic, "prime characteristic, overrides the input's char");
    sub->add_flag("--json", o.json, "machine-readable output");
  };

  std::string convention = "quotient";
  bool multigraded = false, polarize_ok = false, diagram = false, dual = false, compare = false;
  std::string which = "all";
  std::optional<std::uint64_t> seed;

  auto* betti = app.add_subcommand("betti", "Betti diagram of S/I or I");
  common(betti);
  betti->add_option("--convention", convention, "quotient or ideal")
      ->check(CLI::IsMember({"quotient", "ideal"}))
      ->capture_default_str();
  betti->add_flag("--multigraded", multigraded, "list (i, b, value) triples");
  betti->add_flag("--polarize", polarize_ok, "polarize non-square-free generators");

  auto* dual_cmd = app.add_subcommand("dual", "generators of the Alexander dual ideal");
  common(dual_cmd);
  dual_cmd->add_flag("--diagram", diagram, "also print the dual Betti diagram");

  auto* extremal = app.add_subcommand("extremal", "corners and multigraded extremal positions");
  common(extremal);
  extremal->add_flag("--dual", dual, "report on the Alexander dual ideal");
  extremal->add_flag("--polarize", polarize_ok, "polarize non-square-free generators");

  auto* check = app.add_subcommand("check", "verify duality and Cohen-Macaulay statements");
  common(check);
  check->add_option("--which", which, "terai, cm, gorenstein, dcm, corF, corG, thmG, thmE or all")
      ->check(CLI::IsMember({"terai", "cm", "gorenstein", "dcm", "corF", "corG", "thmG", "thmE", "all"}))
      ->capture_default_str();

  auto* gin_cmd = app.add_subcommand("gin", "generic initial ideal in degrevlex");
  common(gin_cmd);
  gin_cmd->add_option("--seed", seed, "seed for the random change of coordinates");
  gin_cmd->add_flag("--compare", compare, "compare corners and depth of S/I and S/gin(I)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*betti) return cmd_betti(o, convention, multigraded, polarize_ok);
    if (*dual_cmd) return cmd_dual(o, diagram);
    if (*extremal) return cmd_extremal(o, dual, polarize_ok);
    if (*check) return cmd_check(o, which);
    if (*gin_cmd) return cmd_gin(o, seed, compare);
  } catch (const ParseError& e) {
    std::cerr << "bettikit: parse error at " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bettikit: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "bettikit: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
