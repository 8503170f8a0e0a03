#include "bettikit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "bettikit/parse_error.hpp"

namespace bettikit {

std::strong_ordering degrevlex_compare(const Multidegree& a, const Multidegree& b) {
  if (a.size() != b.size()) throw std::invalid_argument("degrevlex_compare: different variable counts");
  if (auto c = a.total() <=> b.total(); c != 0) return c;
  for (int i = a.size() - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  return std::strong_ordering::equal;
}

namespace {

struct DegrevlexGreater {
  bool operator()(const Multidegree& a, const Multidegree& b) const { return degrevlex_compare(a, b) > 0; }
};

using TermMap = std::map<Multidegree, std::uint32_t, DegrevlexGreater>;

std::vector<Term> flatten(const TermMap& m) {
  std::vector<Term> out;
  out.reserve(m.size());
  for (const auto& [mono, c] : m)
    if (c != 0) out.push_back({c, mono});
  return out;
}

void require_same(const Polynomial& a, const Polynomial& b) {
  if (a.variable_count() != b.variable_count()) throw std::invalid_argument("polynomials in different rings");
}

}  // namespace

Polynomial::Polynomial(int n, std::vector<Term> terms, const PrimeField& k) : n_(n) {
  TermMap acc;
  for (auto& t : terms) {
    if (t.mono.size() != n) throw std::invalid_argument("term has wrong number of variables");
    auto& c = acc[t.mono];
    c = k.add(c, k.reduce(t.coeff));
  }
  terms_ = flatten(acc);
}

Polynomial Polynomial::monomial(const Multidegree& m, std::uint32_t coeff) {
  Polynomial f(m.size());
  if (coeff != 0) f.terms_.push_back({coeff, m});
  return f;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono.total() == degree(); });
}

Polynomial Polynomial::plus(const Polynomial& o, const PrimeField& k) const {
  require_same(*this, o);
  Polynomial r(n_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && degrevlex_compare(a->mono, b->mono) > 0)) {
      r.terms_.push_back(*a++);
    } else if (a == terms_.end() || degrevlex_compare(a->mono, b->mono) < 0) {
      r.terms_.push_back(*b++);
    } else {
      const std::uint32_t c = k.add(a->coeff, b->coeff);
      if (c != 0) r.terms_.push_back({c, a->mono});
      ++a;
      ++b;
    }
  }
  return r;
}

Polynomial Polynomial::minus(const Polynomial& o, const PrimeField& k) const {
  return plus(o.times_term(k.neg(1), Multidegree(n_), k), k);
}

Polynomial Polynomial::times_term(std::uint32_t c, const Multidegree& m, const PrimeField& k) const {
  Polynomial r(n_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves degrevlex order.
  for (const auto& t : terms_) r.terms_.push_back({k.mul(t.coeff, c), t.mono + m});
  return r;
}

Polynomial Polynomial::times(const Polynomial& o, const PrimeField& k) const {
  require_same(*this, o);
  Polynomial r(n_);
  for (const auto& t : o.terms_) r = r.plus(times_term(t.coeff, t.mono, k), k);
  return r;
}

Polynomial Polynomial::monic(const PrimeField& k) const {
  if (is_zero()) return *this;
  return times_term(k.inv(lead().coeff), Multidegree(n_), k);
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += " + ";
    const bool unit_mono = t.mono.total() == 0;
    if (t.coeff != 1 || unit_mono) {
      out += std::to_string(t.coeff);
      if (!unit_mono) out += "*";
    }
    if (!unit_mono) out += monomial_string(t.mono);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, int n, const PrimeField& k, int line, int column0)
      : s_(s), n_(n), k_(k), line_(line), col0_(column0) {}

  Polynomial run() {
    skip_ws();
    if (pos_ == s_.size()) error("empty polynomial");
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
      skip_ws();
    }
    term(negative);
    skip_ws();
    while (pos_ < s_.size()) {
      const char c = peek();
      if (c != '+' && c != '-') error(std::string("unexpected '") + c + "'");
      ++pos_;
      skip_ws();
      term(c == '-');
      skip_ws();
    }
    int vars = n_;
    if (vars < 0) vars = max_index_ + 1;
    std::vector<Term> terms;
    for (auto& [exps, c] : raw_) {
      exps.resize(static_cast<std::size_t>(vars), 0);
      terms.push_back({c, Multidegree(exps)});
    }
    return Polynomial(vars, std::move(terms), k_);
  }

 private:
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void error(const std::string& what) const {
    throw ParseError(line_, col0_ + static_cast<int>(pos_) + 1, what);
  }

  std::int64_t integer() {
    if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(peek()))) error("expected an integer");
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      if (v > (std::int64_t{1} << 40)) error("integer too large");
    }
    return v;
  }

  bool at_factor() const {
    if (pos_ == s_.size()) return false;
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == 'z' || c == 'w';
  }

  void term(bool negative) {
    if (!at_factor()) error("expected a term");
    std::uint32_t coeff = k_.reduce(negative ? -1 : 1);
    std::vector<int> exps;
    bool first = true;
    while (true) {
      skip_ws();
      if (!first) {
        if (pos_ < s_.size() && peek() == '*') {
          ++pos_;
          skip_ws();
          if (!at_factor()) error("expected a factor after '*'");
        } else if (!at_factor()) {
          break;
        }
      }
      first = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = k_.mul(coeff, k_.reduce(integer()));
        continue;
      }
      const std::size_t var_pos = pos_;
      const char letter = get();
      int index = 0;
      if (letter == 'x' && pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
        const std::int64_t v = integer();
        if (v >= kMaxVertices) {
          pos_ = var_pos;
          error("variable index too large");
        }
        index = static_cast<int>(v);
      } else {
        index = letter == 'x' ? 0 : letter == 'y' ? 1 : letter == 'z' ? 2 : 3;
      }
      if (n_ >= 0 && index >= n_) {
        pos_ = var_pos;
        error("variable x" + std::to_string(index) + " outside x0..x" + std::to_string(n_ - 1));
      }
      skip_ws();
      int e = 1;
      if (pos_ < s_.size() && peek() == '^') {
        ++pos_;
        skip_ws();
        const std::int64_t v = integer();
        if (v > 1000) error("exponent too large");
        e = static_cast<int>(v);
      }
      if (exps.size() <= static_cast<std::size_t>(index)) exps.resize(static_cast<std::size_t>(index) + 1, 0);
      exps[static_cast<std::size_t>(index)] += e;
      max_index_ = std::max(max_index_, index);
    }
    raw_.emplace_back(std::move(exps), coeff);
  }

  std::string_view s_;
  int n_;
  const PrimeField& k_;
  int line_;
  int col0_;
  std::size_t pos_ = 0;
  int max_index_ = -1;
  std::vector<std::pair<std::vector<int>, std::uint32_t>> raw_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int n, const PrimeField& k, int line, int column0) {
  return PolyParser(text, n, k, line, column0).run();
}

}  // namespace bettikit
