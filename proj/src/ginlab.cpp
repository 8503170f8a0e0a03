#include "bettikit/ginlab.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>

#include "bettikit/linalg.hpp"
#include "bettikit/resolutions.hpp"

namespace bettikit {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Multidegree unit_vector(int n, int v) {
  Multidegree m(n);
  m[v] = 1;
  return m;
}

// Monomials of total degree d, in degrevlex descending order.
std::vector<Multidegree> monomials_of_degree(int n, int d) {
  std::vector<Multidegree> out;
  if (n == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  Multidegree m(n);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n - 1) {
      m[var] = left;
      out.push_back(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[var] = e;
      self(self, var + 1, left - e);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [](const Multidegree& a, const Multidegree& b) { return degrevlex_compare(a, b) > 0; });
  return out;
}

std::vector<VertexSet> subsets_of_size(int n, int i) {
  std::vector<VertexSet> out;
  if (i < 0 || i > n) return out;
  for_each_subset(VertexSet::full(n), [&](VertexSet s) {
    if (s.size() == i) out.push_back(s);
  });
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
  return out;
}

}  // namespace

LinearChange LinearChange::identity(int n) {
  LinearChange c;
  c.n = n;
  c.matrix.assign(static_cast<std::size_t>(n), std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) c.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return c;
}

LinearChange LinearChange::random(int n, std::uint64_t seed, const PrimeField& k) {
  std::mt19937_64 rng(seed);
  LinearChange c;
  c.n = n;
  c.seed = seed;
  const std::uint64_t p = k.characteristic();
  while (true) {
    ModMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    c.matrix.assign(static_cast<std::size_t>(n), std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0));
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
      for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
        const auto v = static_cast<std::uint32_t>(rng() % p);
        c.matrix[i][j] = v;
        m.set(i, j, v);
      }
    if (matrix_rank(m, k) == static_cast<std::size_t>(n)) return c;
  }
}

Polynomial LinearChange::apply(const Polynomial& f, const PrimeField& k) const {
  if (f.variable_count() != n) throw std::invalid_argument("LinearChange::apply: wrong variable count");
  std::vector<Polynomial> images;
  for (int j = 0; j < n; ++j) {
    std::vector<Term> terms;
    for (int i = 0; i < n; ++i)
      terms.push_back({matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], unit_vector(n, i)});
    images.emplace_back(n, std::move(terms), k);
  }
  Polynomial out(n);
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::monomial(Multidegree(n), t.coeff);
    for (int j = 0; j < n; ++j)
      for (int e = 0; e < t.mono[j]; ++e) prod = prod.times(images[static_cast<std::size_t>(j)], k);
    out = out.plus(prod, k);
  }
  return out;
}

std::vector<Polynomial> generic_change(const std::vector<Polynomial>& gens, int n, std::uint64_t seed,
                                       const PrimeField& k) {
  const LinearChange c = LinearChange::random(n, seed, k);
  std::vector<Polynomial> out;
  for (const auto& f : gens) out.push_back(c.apply(f, k));
  return out;
}

MonomialIdeal gin_candidate(const std::vector<Polynomial>& gens, int n, std::uint64_t seed, const PrimeField& k) {
  GroebnerBasis g = buchberger(generic_change(gens, n, seed, k), k);
  g.n = n;
  return g.lead_ideal();
}

GinUnstable::GinUnstable(MonomialIdeal first, MonomialIdeal second)
    : std::runtime_error("gin unstable: " + generators_string(first) + " vs " + generators_string(second)),
      first_(std::move(first)),
      second_(std::move(second)) {}

MonomialIdeal gin(const std::vector<Polynomial>& gens, int n, std::uint64_t seed, const PrimeField& k) {
  for (const auto& f : gens)
    if (f.variable_count() != n) throw std::invalid_argument("gin: generator in the wrong ring");
  std::optional<MonomialIdeal> a, b;
  for (int attempt = 0; attempt < kGinSeedPairs; ++attempt) {
    a = gin_candidate(gens, n, splitmix(seed + 2 * static_cast<std::uint64_t>(attempt)), k);
    b = gin_candidate(gens, n, splitmix(seed + 2 * static_cast<std::uint64_t>(attempt) + 1), k);
    if (*a == *b) return *a;
  }
  throw GinUnstable(*a, *b);
}

BettiDiagram betti_via_tor(const std::vector<Polynomial>& gens, int n, const PrimeField& k, int degree_bound) {
  GroebnerBasis g = buchberger(gens, k);
  g.n = n;
  int max_gen = 0;
  for (const auto& f : g.basis) max_gen = std::max(max_gen, f.degree());
  if (degree_bound < max_gen) throw std::invalid_argument("betti_via_tor: degree bound below a generator degree");
  const MonomialIdeal lead = g.lead_ideal();

  std::vector<std::vector<Multidegree>> standard(static_cast<std::size_t>(degree_bound) + 1);
  std::vector<std::map<Multidegree, std::size_t>> position(standard.size());
  for (int e = 0; e <= degree_bound; ++e)
    for (const auto& m : monomials_of_degree(n, e))
      if (!lead.contains(m)) {
        auto& s = standard[static_cast<std::size_t>(e)];
        position[static_cast<std::size_t>(e)][m] = s.size();
        s.push_back(m);
      }
  auto std_at = [&](int e) -> const std::vector<Multidegree>& {
    static const std::vector<Multidegree> none;
    return e < 0 || e > degree_bound ? none : standard[static_cast<std::size_t>(e)];
  };

  std::map<Multidegree, Polynomial> nf_cache;
  auto nf = [&](const Multidegree& m) -> const Polynomial& {
    auto it = nf_cache.find(m);
    if (it == nf_cache.end()) it = nf_cache.emplace(m, normal_form(Polynomial::monomial(m), g.basis, k)).first;
    return it->second;
  };

  // Rank of the Koszul differential K_{i,d} -> K_{i-1,d}.
  auto differential_rank = [&](int i, int d) -> std::size_t {
    if (i < 1 || i > n) return 0;
    const auto& src = std_at(d - i);
    const auto& dst = std_at(d - i + 1);
    const auto src_faces = subsets_of_size(n, i);
    const auto dst_faces = subsets_of_size(n, i - 1);
    if (src.empty() || dst.empty()) return 0;
    std::map<std::uint64_t, std::size_t> face_index;
    for (std::size_t f = 0; f < dst_faces.size(); ++f) face_index[dst_faces[f].bits()] = f;
    ModMatrix mat(src_faces.size() * src.size(), dst_faces.size() * dst.size());
    const auto& dst_pos = position[static_cast<std::size_t>(d - i + 1)];
    for (std::size_t f = 0; f < src_faces.size(); ++f) {
      const auto verts = src_faces[f].elements();
      for (std::size_t s = 0; s < src.size(); ++s) {
        const std::size_t row = f * src.size() + s;
        for (std::size_t t = 0; t < verts.size(); ++t) {
          const int v = verts[t];
          const std::size_t face = face_index.at(src_faces[f].without(v).bits());
          const Polynomial& image = nf(src[s] + unit_vector(n, v));
          for (const auto& term : image.terms()) {
            const std::size_t col = face * dst.size() + dst_pos.at(term.mono);
            const std::uint32_t c = t % 2 == 0 ? term.coeff : k.neg(term.coeff);
            mat.set(row, col, k.add(mat.at(row, col), c));
          }
        }
      }
    }
    return matrix_rank(std::move(mat), k);
  };

  BettiDiagram out;
  std::int64_t binom = 1;
  std::vector<std::int64_t> choose(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    choose[static_cast<std::size_t>(i)] = binom;
    binom = binom * (n - i) / (i + 1);
  }
  for (int d = 0; d <= degree_bound; ++d) {
    std::vector<std::size_t> ranks(static_cast<std::size_t>(n) + 2, 0);
    for (int i = 1; i <= n; ++i) ranks[static_cast<std::size_t>(i)] = differential_rank(i, d);
    for (int i = 0; i <= n; ++i) {
      const std::int64_t dim =
          choose[static_cast<std::size_t>(i)] * static_cast<std::int64_t>(std_at(d - i).size());
      const std::int64_t beta = dim - static_cast<std::int64_t>(ranks[static_cast<std::size_t>(i)]) -
                                static_cast<std::int64_t>(ranks[static_cast<std::size_t>(i) + 1]);
      out.add(i, d, beta);
    }
  }
  return out;
}

std::string ideal_instance_string(const std::vector<Polynomial>& gens, int n) {
  std::string s = "n=" + std::to_string(n) + " gens:";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i == 0 ? " " : ", ") + to_string(gens[i]);
  return s;
}

namespace {

struct GinTables {
  MonomialIdeal gin_ideal;
  BettiDiagram original;
  BettiDiagram generic;
  int bound;
};

GinTables gin_tables(const std::vector<Polynomial>& gens, int n, const PrimeField& k, std::uint64_t seed) {
  MonomialIdeal j = gin(gens, n, seed, k);
  BettiDiagram generic = coarse_diagram(betti_via_koszul(j, k).to_quotient());
  const int bound = std::max(generic.empty() ? 0 : generic.max_degree(), 0) + 1;
  BettiDiagram original = betti_via_tor(gens, n, k, bound);
  return {std::move(j), std::move(original), std::move(generic), bound};
}

std::string corner_list(const std::vector<Corner>& cs) {
  std::string s;
  for (const auto& c : cs) s += (s.empty() ? "" : " ") + to_string(c);
  return s.empty() ? "none" : s;
}

}  // namespace

VerificationReport compare_corners(const std::vector<Polynomial>& gens, int n, const PrimeField& k,
                                   std::uint64_t seed) {
  VerificationReport r;
  r.theorem = "gin-corners";
  r.instance = ideal_instance_string(gens, n);
  r.characteristic = k.characteristic();
  r.seed = seed;
  const GinTables t = gin_tables(gens, n, k, seed);
  for (const auto& [key, v] : t.original.entries())
    if (key.second >= t.bound) r.fail("truncated: S/I has an entry at the degree bound " + std::to_string(t.bound));
  for (int l = 0; l <= n + 1; ++l) {
    const int a = l_regularity(t.original, l);
    const int b = l_regularity(t.generic, l);
    if (a != b)
      r.fail("l=" + std::to_string(l) + " l-reg(S/I)=" + std::to_string(a) + " l-reg(S/gin)=" + std::to_string(b));
  }
  const auto ca = corners(t.original);
  const auto cb = corners(t.generic);
  if (ca != cb) r.fail("corners S/I=" + corner_list(ca) + " S/gin=" + corner_list(cb));
  if (r.pass) r.witness = "gin: " + generators_string(t.gin_ideal) + " corners=" + corner_list(ca);
  return r;
}

VerificationReport depth_preservation_check(const std::vector<Polynomial>& gens, int n, const PrimeField& k,
                                            std::uint64_t seed) {
  VerificationReport r;
  r.theorem = "gin-depth";
  r.instance = ideal_instance_string(gens, n);
  r.characteristic = k.characteristic();
  r.seed = seed;
  const GinTables t = gin_tables(gens, n, k, seed);
  if (t.original.empty() || t.generic.empty()) {
    if (t.original.empty() != t.generic.empty()) r.fail("one side is the zero module");
    return r;
  }
  const int a = depth_via_auslander_buchsbaum(t.original, n);
  const int b = depth_via_auslander_buchsbaum(t.generic, n);
  if (a != b) r.fail("depth(S/I)=" + std::to_string(a) + " depth(S/gin)=" + std::to_string(b));
  else r.witness = "depth=" + std::to_string(a);
  return r;
}

bool borel_check(const MonomialIdeal& j, std::uint32_t p) {
  for (const auto& g : j.generators())
    if (static_cast<std::uint32_t>(g.total()) >= p)
      throw std::invalid_argument("borel_check: characteristic not above the generator degrees");
  const int n = j.variable_count();
  for (const auto& g : j.generators())
    for (int b = 0; b < n; ++b) {
      if (g[b] == 0) continue;
      for (int a = 0; a < b; ++a) {
        Multidegree m = g;
        --m[b];
        ++m[a];
        if (!j.contains(m)) return false;
      }
    }
  return true;
}

}  // namespace bettikit
