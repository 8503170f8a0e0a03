#include "bettikit/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bettikit {

MonomialIdeal GroebnerBasis::lead_ideal() const {
  std::vector<Multidegree> leads;
  for (const auto& g : basis) leads.push_back(g.lead().mono);
  return MonomialIdeal(n, std::move(leads));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const PrimeField& k) {
  const Multidegree l = f.lead().mono.join(g.lead().mono);
  const Polynomial a = f.times_term(k.inv(f.lead().coeff), l - f.lead().mono, k);
  const Polynomial b = g.times_term(k.inv(g.lead().coeff), l - g.lead().mono, k);
  return a.minus(b, k);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors, const PrimeField& k) {
  Polynomial rest = f;
  std::vector<Term> done;
  while (!rest.is_zero()) {
    const Term t = rest.lead();
    const Polynomial* hit = nullptr;
    for (const auto& g : divisors)
      if (!g.is_zero() && g.lead().mono.divides(t.mono)) {
        hit = &g;
        break;
      }
    if (hit == nullptr) {
      done.push_back(t);
      rest = rest.minus(Polynomial::monomial(t.mono, t.coeff), k);
      continue;
    }
    const std::uint32_t c = k.mul(t.coeff, k.inv(hit->lead().coeff));
    rest = rest.minus(hit->times_term(c, t.mono - hit->lead().mono, k), k);
  }
  return Polynomial(f.variable_count(), std::move(done), k);
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Multidegree lcm;
};

bool coprime(const Multidegree& a, const Multidegree& b) {
  for (int v = 0; v < a.size(); ++v)
    if (a[v] > 0 && b[v] > 0) return false;
  return true;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const PrimeField& k) {
  GroebnerBasis out;
  std::vector<Polynomial> g;
  for (const auto& f : gens) {
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) throw std::invalid_argument("buchberger: inhomogeneous generator " + to_string(f));
    if (!g.empty() && g.front().variable_count() != f.variable_count())
      throw std::invalid_argument("buchberger: generators in different rings");
    g.push_back(f.monic(k));
  }
  if (g.empty()) {
    out.n = gens.empty() ? 0 : gens.front().variable_count();
    return out;
  }
  out.n = g.front().variable_count();

  std::vector<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      queue.push_back({i, j, g[i].lead().mono.join(g[j].lead().mono)});
      pending.insert({i, j});
    }
  };
  for (std::size_t j = 1; j < g.size(); ++j) add_pairs(j);

  while (!queue.empty()) {
    // Normal selection: smallest lcm, ties by insertion order.
    auto best = queue.begin();
    for (auto it = queue.begin(); it != queue.end(); ++it)
      if (degrevlex_compare(it->lcm, best->lcm) < 0) best = it;
    const Pair p = *best;
    queue.erase(best);
    pending.erase({p.i, p.j});

    if (coprime(g[p.i].lead().mono, g[p.j].lead().mono)) continue;
    bool chain = false;
    for (std::size_t m = 0; m < g.size() && !chain; ++m) {
      if (m == p.i || m == p.j || !g[m].lead().mono.divides(p.lcm)) continue;
      const auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      chain = !pending.count(key(p.i, m)) && !pending.count(key(p.j, m));
    }
    if (chain) continue;

    const Polynomial r = normal_form(s_polynomial(g[p.i], g[p.j], k), g, k);
    if (r.is_zero()) continue;
    g.push_back(r.monic(k));
    add_pairs(g.size() - 1);
  }

  // Minimalize, then interreduce.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !g[j].lead().mono.divides(g[i].lead().mono)) continue;
      redundant = g[j].lead().mono != g[i].lead().mono || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Term lead = minimal[i].lead();
    const Polynomial tail = minimal[i].minus(Polynomial::monomial(lead.mono, lead.coeff), k);
    minimal[i] = Polynomial::monomial(lead.mono, lead.coeff).plus(normal_form(tail, others, k), k).monic(k);
  }
  std::sort(minimal.begin(), minimal.end(), [](const Polynomial& a, const Polynomial& b) {
    return degrevlex_compare(a.lead().mono, b.lead().mono) < 0;
  });
  out.basis = std::move(minimal);
  return out;
}

bool is_groebner_basis(const std::vector<Polynomial>& g, const PrimeField& k) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!normal_form(s_polynomial(g[i], g[j], k), g, k).is_zero()) return false;
  return true;
}

}  // namespace bettikit
