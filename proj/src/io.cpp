#include "bettikit/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace bettikit {

SimplicialComplex InputDocument::complex() const {
  if (body != Body::facets) throw std::invalid_argument("input has no facets body");
  return SimplicialComplex::from_facets(n, facets);
}

bool InputDocument::gens_are_monomials() const {
  return body == Body::gens &&
         std::all_of(gens.begin(), gens.end(), [](const Polynomial& f) { return f.terms().size() <= 1; });
}

MonomialIdeal InputDocument::monomial_ideal() const {
  if (!gens_are_monomials()) throw std::invalid_argument("generators are not all monomials");
  std::vector<Multidegree> monos;
  for (const auto& f : gens)
    if (!f.is_zero()) monos.push_back(f.lead().mono);
  return MonomialIdeal(n, std::move(monos));
}

namespace {

// A piece of text with its position in the document.
struct Span {
  std::string_view text;
  int line;
  int column;  // 1-based column of text[0]
};

Span trim(Span s) {
  std::size_t a = 0;
  while (a < s.text.size() && std::isspace(static_cast<unsigned char>(s.text[a]))) ++a;
  std::size_t b = s.text.size();
  while (b > a && std::isspace(static_cast<unsigned char>(s.text[b - 1]))) --b;
  return {s.text.substr(a, b - a), s.line, s.column + static_cast<int>(a)};
}

// Items never span lines; a trailing comma at the end of a line is allowed.
std::vector<Span> split_commas(const std::vector<Span>& pieces) {
  std::vector<Span> items;
  for (const Span& piece : pieces) {
    std::size_t start = 0;
    for (std::size_t i = 0; i <= piece.text.size(); ++i) {
      if (i < piece.text.size() && piece.text[i] != ',') continue;
      const Span item = trim({piece.text.substr(start, i - start), piece.line, piece.column + static_cast<int>(start)});
      if (!item.text.empty()) items.push_back(item);
      else if (i < piece.text.size()) throw ParseError(item.line, item.column, "empty item");
      start = i + 1;
    }
  }
  return items;
}

std::uint64_t parse_unsigned(Span s, std::uint64_t max, const char* what) {
  s = trim(s);
  std::uint64_t v = 0;
  const char* end = s.text.data() + s.text.size();
  auto [ptr, ec] = std::from_chars(s.text.data(), end, v);
  if (s.text.empty() || ec != std::errc{} || ptr != end)
    throw ParseError(s.line, s.column, std::string("expected a nonnegative integer for ") + what);
  if (v > max) throw ParseError(s.line, s.column, std::string(what) + " out of range");
  return v;
}

// n < 0 accepts any vertex index.
VertexSet parse_face(Span s, int n, int& max_vertex) {
  if (s.text == "{}") return {};
  VertexSet face;
  std::size_t i = 0;
  while (i < s.text.size()) {
    if (std::isspace(static_cast<unsigned char>(s.text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.text.size() && !std::isspace(static_cast<unsigned char>(s.text[j]))) ++j;
    const Span token{s.text.substr(i, j - i), s.line, s.column + static_cast<int>(i)};
    const auto v = static_cast<int>(parse_unsigned(token, kMaxVertices - 1, "vertex"));
    if (n >= 0 && v >= n) throw ParseError(token.line, token.column, "vertex outside 0.." + std::to_string(n - 1));
    if (face.contains(v)) throw ParseError(token.line, token.column, "repeated vertex");
    face = face.with(v);
    max_vertex = std::max(max_vertex, v);
    i = j;
  }
  return face;
}

}  // namespace

InputDocument parse_input(std::string_view text, std::optional<std::uint32_t> characteristic) {
  std::map<std::string, Span> scalars;
  std::optional<InputDocument::Body> body;
  std::vector<Span> body_pieces;
  int line_no = 0;
  std::size_t pos = 0;
  bool in_body = false;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const Span whole = trim({line, line_no, 1});
    pos = eol + 1;
    if (whole.text.empty()) continue;

    // "key: value" when the text before the first ':' is a bare word.
    const std::size_t colon = whole.text.find(':');
    std::string key;
    if (colon != std::string_view::npos) {
      key = std::string(trim({whole.text.substr(0, colon), line_no, whole.column}).text);
      if (key.empty() || !std::all_of(key.begin(), key.end(), [](char c) { return std::isalpha(static_cast<unsigned char>(c)); }))
        key.clear();
    }
    if (key.empty()) {
      if (!in_body) throw ParseError(line_no, whole.column, "expected 'key: value'");
      body_pieces.push_back(whole);
      continue;
    }
    const Span value{whole.text.substr(colon + 1), line_no, whole.column + static_cast<int>(colon) + 1};
    if (key == "facets" || key == "gens") {
      if (body) throw ParseError(line_no, whole.column, "only one facets or gens body is allowed");
      body = key == "facets" ? InputDocument::Body::facets : InputDocument::Body::gens;
      body_pieces.push_back(value);
      in_body = true;
    } else if (key == "n" || key == "char" || key == "seed") {
      if (scalars.count(key)) throw ParseError(line_no, whole.column, "duplicate key '" + key + "'");
      scalars.emplace(key, value);
      in_body = false;
    } else {
      throw ParseError(line_no, whole.column, "unknown key '" + key + "'");
    }
  }
  if (!body) throw ParseError(line_no, 1, "missing facets or gens body");

  InputDocument doc;
  doc.body = *body;
  int n = -1;
  if (auto it = scalars.find("n"); it != scalars.end())
    n = static_cast<int>(parse_unsigned(it->second, kMaxVertices, "n"));
  if (auto it = scalars.find("char"); it != scalars.end()) {
    const auto p = parse_unsigned(it->second, (1ULL << 31) - 1, "char");
    if (!is_prime(static_cast<std::uint32_t>(p))) throw ParseError(it->second.line, trim(it->second).column, "char must be prime");
    doc.characteristic = static_cast<std::uint32_t>(p);
  }
  if (characteristic) {
    if (!is_prime(*characteristic)) throw std::invalid_argument("characteristic must be prime");
    doc.characteristic = *characteristic;
  }
  if (auto it = scalars.find("seed"); it != scalars.end())
    doc.seed = parse_unsigned(it->second, UINT64_MAX, "seed");

  const auto items = split_commas(body_pieces);
  if (doc.body == InputDocument::Body::facets) {
    int max_vertex = -1;
    for (const Span& item : items) {
      doc.facets.push_back(parse_face(item, n, max_vertex));
    }
    doc.n = n >= 0 ? n : max_vertex + 1;
  } else {
    const PrimeField k = doc.field();
    int vars = n;
    if (vars < 0) {
      vars = 0;
      for (const Span& item : items)
        vars = std::max(vars, parse_polynomial(item.text, -1, k, item.line, item.column - 1).variable_count());
    }
    for (const Span& item : items) doc.gens.push_back(parse_polynomial(item.text, vars, k, item.line, item.column - 1));
    doc.n = vars;
  }
  return doc;
}

std::string render(const SimplicialComplex& x) {
  return "n: " + std::to_string(x.vertex_count()) + "\n" + to_string(x) + "\n";
}

std::string render(const MonomialIdeal& ideal) {
  return "n: " + std::to_string(ideal.variable_count()) + "\n" + to_string(ideal) + "\n";
}

std::string render(const InputDocument& doc) {
  std::string out = "n: " + std::to_string(doc.n) + "\n";
  if (doc.characteristic) out += "char: " + std::to_string(*doc.characteristic) + "\n";
  if (doc.seed) out += "seed: " + std::to_string(*doc.seed) + "\n";
  if (doc.body == InputDocument::Body::facets) {
    std::string body = "facets:";
    for (std::size_t i = 0; i < doc.facets.size(); ++i) {
      body += i == 0 ? " " : ", ";
      if (doc.facets[i].empty()) {
        body += "{}";
        continue;
      }
      const auto vs = doc.facets[i].elements();
      for (std::size_t j = 0; j < vs.size(); ++j) body += (j == 0 ? "" : " ") + std::to_string(vs[j]);
    }
    out += body + "\n";
  } else {
    std::string body = "gens:";
    for (std::size_t i = 0; i < doc.gens.size(); ++i) body += (i == 0 ? " " : ", ") + to_string(doc.gens[i]);
    out += body + "\n";
  }
  return out;
}

}  // namespace bettikit
