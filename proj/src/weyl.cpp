#include "pathweyl/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>
#include <utility>

#include "pathweyl/errors.hpp"

namespace pathweyl {

// ---------------------------------------------------------------------------
// WeylMonomial

WeylMonomial::WeylMonomial(std::vector<std::uint32_t> alpha, std::vector<std::uint32_t> beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_.size() != beta_.size()) throw PreconditionError("exponent vectors of different lengths");
}

WeylMonomial WeylMonomial::from_indices(std::size_t n, std::span<const Vertex> xs,
                                        std::span<const Vertex> ds) {
  WeylMonomial m(n);
  for (Vertex i : xs) {
    if (i < 1 || i > n) throw PreconditionError("x index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    ++m.alpha_[i - 1];
  }
  for (Vertex j : ds) {
    if (j < 1 || j > n) throw PreconditionError("d index " + std::to_string(j) + " outside 1.." + std::to_string(n));
    ++m.beta_[j - 1];
  }
  return m;
}

WeylMonomial WeylMonomial::basis(std::size_t n, Vertex i, Vertex j) {
  const Vertex xs[] = {i};
  const Vertex ds[] = {j};
  return from_indices(n, xs, ds);
}

std::size_t WeylMonomial::x_degree() const { return std::accumulate(alpha_.begin(), alpha_.end(), std::size_t{0}); }
std::size_t WeylMonomial::d_degree() const { return std::accumulate(beta_.begin(), beta_.end(), std::size_t{0}); }

long WeylMonomial::length() const {
  return static_cast<long>(x_degree()) - static_cast<long>(d_degree());
}

std::vector<long> WeylMonomial::weight() const {
  std::vector<long> w(alpha_.size());
  for (std::size_t i = 0; i < alpha_.size(); ++i) w[i] = static_cast<long>(alpha_[i]) - static_cast<long>(beta_[i]);
  return w;
}

bool WeylMonomial::in_subspace(std::size_t p, std::size_t q) const { return x_degree() == p && d_degree() == q; }
bool WeylMonomial::is_length_zero() const { return x_degree() == d_degree(); }

bool WeylMonomial::in_bounded_length_zero(std::size_t p) const {
  std::size_t degree = x_degree();
  return degree == d_degree() && degree >= 1 && degree <= p;
}

WeylMonomial WrittenMonomial::normal_form() const { return WeylMonomial::from_indices(dimension, x_indices, d_indices); }

// ---------------------------------------------------------------------------
// WeylElement

WeylElement::WeylElement(const WeylMonomial& m, Integer coefficient) : n_(m.dimension()) {
  add_term(m, coefficient);
}

WeylElement WeylElement::one(std::size_t n) { return WeylElement(WeylMonomial(n)); }

Integer WeylElement::coefficient(const WeylMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::size_t WeylElement::order() const {
  std::size_t order = 0;
  for (const auto& [m, c] : terms_) order = std::max(order, m.d_degree());
  return order;
}

void WeylElement::add_term(const WeylMonomial& m, const Integer& coefficient) {
  if (m.dimension() != n_) {
    if (terms_.empty() && n_ == 0) {
      n_ = m.dimension();
    } else {
      throw PreconditionError("monomial of dimension " + std::to_string(m.dimension()) +
                              " added to an element of dimension " + std::to_string(n_));
    }
  }
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

WeylElement& WeylElement::operator+=(const WeylElement& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  if (n_ == 0) n_ = other.n_;
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  if (n_ == 0) n_ = other.n_;
  return *this;
}

WeylElement& WeylElement::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

WeylElement WeylElement::operator-() const {
  WeylElement out = *this;
  out *= Integer(-1);
  return out;
}

// ---------------------------------------------------------------------------
// Products

namespace {

void require_same_dimension(std::size_t a, std::size_t b) {
  if (a != b) {
    throw PreconditionError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

// Adds coefficient * (x^a ∂^b)(x^c ∂^d) to out.
void accumulate_product(const WeylMonomial& left, const WeylMonomial& right, const Integer& coefficient,
                        WeylElement& out) {
  const std::size_t n = left.dimension();
  const auto& a = left.alpha();
  const auto& b = left.beta();
  const auto& c = right.alpha();
  const auto& d = right.beta();

  std::vector<std::uint32_t> limit(n);
  for (std::size_t i = 0; i < n; ++i) limit[i] = std::min(b[i], c[i]);
  std::vector<std::uint32_t> k(n, 0);
  std::vector<std::uint32_t> alpha(n);
  std::vector<std::uint32_t> beta(n);
  while (true) {
    Integer weight = coefficient;
    for (std::size_t i = 0; i < n; ++i) {
      if (k[i] > 0) weight *= binomial(b[i], k[i]) * binomial(c[i], k[i]) * factorial(k[i]);
      alpha[i] = a[i] + c[i] - k[i];
      beta[i] = b[i] + d[i] - k[i];
    }
    out.add_term(WeylMonomial(alpha, beta), weight);
    std::size_t i = 0;
    while (i < n && k[i] == limit[i]) k[i++] = 0;
    if (i == n) break;
    ++k[i];
  }
}

}  // namespace

WeylElement multiply(const WeylElement& a, const WeylElement& b) {
  require_same_dimension(a.dimension(), b.dimension());
  WeylElement out(a.dimension());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) accumulate_product(ma, mb, ca * cb, out);
  }
  return out;
}

WeylElement multiply(const WeylMonomial& a, const WeylMonomial& b) {
  require_same_dimension(a.dimension(), b.dimension());
  WeylElement out(a.dimension());
  accumulate_product(a, b, 1, out);
  return out;
}

WeylElement normal_order_product(std::span<const WeylMonomial> factors) {
  if (factors.empty()) throw PreconditionError("empty product");
  WeylElement result(factors.front());
  for (std::size_t k = 1; k < factors.size(); ++k) {
    require_same_dimension(result.dimension(), factors[k].dimension());
    result = multiply(result, WeylElement(factors[k]));
  }
  return result;
}

namespace {

// Generator letter: index > 0 is x_index, index < 0 is ∂_{-index}.
using Word = std::vector<int>;

}  // namespace

WeylElement normal_order_by_rewriting(std::span<const WeylMonomial> factors) {
  if (factors.empty()) throw PreconditionError("empty product");
  const std::size_t n = factors.front().dimension();
  Word start;
  for (const WeylMonomial& f : factors) {
    require_same_dimension(n, f.dimension());
    for (std::size_t i = 0; i < n; ++i) start.insert(start.end(), f.alpha()[i], static_cast<int>(i + 1));
    for (std::size_t i = 0; i < n; ++i) start.insert(start.end(), f.beta()[i], -static_cast<int>(i + 1));
  }

  std::map<Word, Integer> pending;
  pending.emplace(std::move(start), 1);
  WeylElement result(n);
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    Word& word = node.key();
    const Integer& coefficient = node.mapped();
    if (coefficient == 0) continue;

    std::size_t p = 0;
    while (p + 1 < word.size() && !(word[p] < 0 && word[p + 1] > 0)) ++p;
    if (p + 1 >= word.size()) {
      std::vector<std::uint32_t> alpha(n, 0);
      std::vector<std::uint32_t> beta(n, 0);
      for (int letter : word) {
        if (letter > 0) {
          ++alpha[letter - 1];
        } else {
          ++beta[-letter - 1];
        }
      }
      result.add_term(WeylMonomial(std::move(alpha), std::move(beta)), coefficient);
      continue;
    }
    // ∂_i x_j = x_j ∂_i + δ_ij
    if (-word[p] == word[p + 1]) {
      Word contracted = word;
      contracted.erase(contracted.begin() + static_cast<long>(p), contracted.begin() + static_cast<long>(p) + 2);
      pending[std::move(contracted)] += coefficient;
    }
    std::swap(word[p], word[p + 1]);
    pending[std::move(word)] += coefficient;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Graph expansion

std::vector<Edge> block_of(const WrittenMonomial& w) {
  if (w.x_indices.size() != w.d_indices.size()) {
    throw PreconditionError("block_of needs a monomial of length 0 (as many x's as d's)");
  }
  std::vector<Edge> block;
  block.reserve(w.x_indices.size());
  for (std::size_t s = 0; s < w.x_indices.size(); ++s) block.push_back({w.x_indices[s], w.d_indices[s]});
  return block;
}

WrittenMonomial written_form(const WeylMonomial& w) {
  WrittenMonomial out{w.dimension(), {}, {}};
  for (std::size_t i = 0; i < w.dimension(); ++i) {
    out.x_indices.insert(out.x_indices.end(), w.alpha()[i], static_cast<Vertex>(i + 1));
    out.d_indices.insert(out.d_indices.end(), w.beta()[i], static_cast<Vertex>(i + 1));
  }
  return out;
}

std::vector<Edge> block_of(const WeylMonomial& w) { return block_of(written_form(w)); }

LabeledDigraph expansion_graph(std::span<const WrittenMonomial> factors) {
  if (factors.empty()) throw PreconditionError("empty product");
  const std::size_t n = factors.front().dimension;
  std::vector<std::vector<Edge>> blocks;
  for (const WrittenMonomial& w : factors) {
    require_same_dimension(n, w.dimension);
    blocks.push_back(block_of(w));
  }
  return LabeledDigraph::from_blocks(n, blocks);
}

WeylMonomial monomial_of(std::size_t n, const VertexMultiset& xs, const VertexMultiset& ds) {
  auto alpha = xs.dense(n);
  auto beta = ds.dense(n);
  return WeylMonomial(std::move(alpha), std::move(beta));
}

WeylElement expand_from_graph(const LabeledDigraph& g) {
  WeylElement out(g.vertex_count());
  for (const auto& [sources, count] : stirling_table(g)) {
    auto sinks = forced_sinks(g, sources);
    if (!sinks) throw OracleMismatch("realized sources " + to_string(sources) + " without valid sinks");
    out.add_term(monomial_of(g.vertex_count(), sources, *sinks), count);
  }
  return out;
}

WeylElement graph_expand(std::span<const WrittenMonomial> factors) {
  return expand_from_graph(expansion_graph(factors));
}

WeylElement graph_expand(std::span<const WeylMonomial> factors) {
  std::vector<WrittenMonomial> written;
  written.reserve(factors.size());
  for (const WeylMonomial& w : factors) written.push_back(written_form(w));
  return graph_expand(written);
}

// ---------------------------------------------------------------------------
// Text syntax

namespace {

struct Token {
  enum Kind { kPlus, kMinus, kNumber, kX, kD } kind;
  Integer number;        // kNumber
  Vertex index = 1;      // kX, kD
  std::uint32_t power = 1;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  auto small = [&](std::size_t from, std::size_t to) {
    std::uint64_t v = 0;
    for (std::size_t k = from; k < to; ++k) {
      v = v * 10 + static_cast<std::uint64_t>(text[k] - '0');
      if (v > 1'000'000) throw ParseError("index or exponent too large in '" + std::string(text) + "'");
    }
    return static_cast<std::uint32_t>(v);
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++i;
    } else if (c == '+') {
      out.push_back({Token::kPlus, 0});
      ++i;
    } else if (c == '-') {
      out.push_back({Token::kMinus, 0});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = digits(i);
      out.push_back({Token::kNumber, Integer(std::string(text.substr(i, j - i)))});
      i = j;
    } else if (c == 'x' || c == 'd') {
      Token t{c == 'x' ? Token::kX : Token::kD, 0};
      std::size_t j = digits(i + 1);
      if (j > i + 1) t.index = small(i + 1, j);
      if (t.index == 0) throw ParseError("generator indices start at 1 in '" + std::string(text) + "'");
      if (j < text.size() && text[j] == '^') {
        std::size_t k = digits(j + 1);
        if (k == j + 1) throw ParseError("missing exponent in '" + std::string(text) + "'");
        t.power = small(j + 1, k);
        j = k;
      }
      out.push_back(t);
      i = j;
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "' in '" + std::string(text) + "'");
    }
  }
  return out;
}

struct ParsedTerm {
  Integer coefficient = 1;
  std::vector<Vertex> xs;
  std::vector<Vertex> ds;
};

std::vector<ParsedTerm> parse_terms(std::string_view text) {
  auto tokens = tokenize(text);
  std::vector<ParsedTerm> terms;
  std::size_t i = 0;
  if (tokens.empty()) throw ParseError("empty expression");
  while (i < tokens.size()) {
    ParsedTerm term;
    bool negative = false;
    if (tokens[i].kind == Token::kPlus || tokens[i].kind == Token::kMinus) {
      negative = tokens[i].kind == Token::kMinus;
      ++i;
    } else if (!terms.empty()) {
      throw ParseError("expected '+' or '-' between terms in '" + std::string(text) + "'");
    }
    bool any = false;
    if (i < tokens.size() && tokens[i].kind == Token::kNumber) {
      term.coefficient = tokens[i].number;
      any = true;
      ++i;
    }
    while (i < tokens.size() && (tokens[i].kind == Token::kX || tokens[i].kind == Token::kD)) {
      const Token& t = tokens[i];
      if (t.kind == Token::kX) {
        if (!term.ds.empty()) {
          throw ParseError("term is not normally ordered (x after d) in '" + std::string(text) + "'");
        }
        term.xs.insert(term.xs.end(), t.power, t.index);
      } else {
        term.ds.insert(term.ds.end(), t.power, t.index);
      }
      any = true;
      ++i;
    }
    if (!any) throw ParseError("empty term in '" + std::string(text) + "'");
    if (negative) term.coefficient = -term.coefficient;
    terms.push_back(std::move(term));
  }
  return terms;
}

std::size_t resolve_dimension(const std::vector<ParsedTerm>& terms, std::optional<std::size_t> n,
                              std::string_view text) {
  std::size_t largest = 0;
  for (const auto& t : terms) {
    for (Vertex v : t.xs) largest = std::max<std::size_t>(largest, v);
    for (Vertex v : t.ds) largest = std::max<std::size_t>(largest, v);
  }
  if (n && largest > *n) {
    throw ParseError("index " + std::to_string(largest) + " exceeds dimension " + std::to_string(*n) +
                     " in '" + std::string(text) + "'");
  }
  return n.value_or(std::max<std::size_t>(largest, 1));
}

std::string generator_power(char letter, std::size_t index, std::uint32_t power) {
  std::string out(1, letter);
  out += std::to_string(index);
  if (power > 1) out += '^' + std::to_string(power);
  return out;
}

}  // namespace

WeylElement parse_element(std::string_view text, std::optional<std::size_t> n) {
  auto terms = parse_terms(text);
  std::size_t dim = resolve_dimension(terms, n, text);
  WeylElement out(dim);
  for (const auto& t : terms) out.add_term(WeylMonomial::from_indices(dim, t.xs, t.ds), t.coefficient);
  return out;
}

WrittenMonomial parse_written_monomial(std::string_view text, std::optional<std::size_t> n) {
  auto terms = parse_terms(text);
  if (terms.size() != 1 || terms[0].coefficient != 1) {
    throw ParseError("expected a single monomial without coefficient: '" + std::string(text) + "'");
  }
  std::size_t dim = resolve_dimension(terms, n, text);
  return WrittenMonomial{dim, terms[0].xs, terms[0].ds};
}

std::string format_monomial(const WeylMonomial& m) {
  std::string out;
  auto append = [&](const std::string& s) {
    if (!out.empty()) out += ' ';
    out += s;
  };
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    if (m.alpha()[i] > 0) append(generator_power('x', i + 1, m.alpha()[i]));
  }
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    if (m.beta()[i] > 0) append(generator_power('d', i + 1, m.beta()[i]));
  }
  return out.empty() ? "1" : out;
}

std::string format_element(const WeylElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    bool negative = c < 0;
    Integer magnitude = abs(c);
    bool constant = m.x_degree() == 0 && m.d_degree() == 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (constant) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + ' ';
      out += format_monomial(m);
    }
    first = false;
  }
  return out;
}

}  // namespace pathweyl
