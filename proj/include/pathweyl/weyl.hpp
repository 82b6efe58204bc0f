#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pathweyl/bigint.hpp"
#include "pathweyl/decomposition.hpp"
#include "pathweyl/digraph.hpp"

namespace pathweyl {

/// Normally ordered monomial x^α ∂^β of the n-th Weyl algebra.
class WeylMonomial {
 public:
  WeylMonomial() = default;
  explicit WeylMonomial(std::size_t n) : alpha_(n, 0), beta_(n, 0) {}
  WeylMonomial(std::vector<std::uint32_t> alpha, std::vector<std::uint32_t> beta);

  /// x_{xs[0]} x_{xs[1]} ... ∂_{ds[0]} ... (indices 1-based, any order).
  static WeylMonomial from_indices(std::size_t n, std::span<const Vertex> xs,
                                   std::span<const Vertex> ds);
  /// x_i ∂_j
  static WeylMonomial basis(std::size_t n, Vertex i, Vertex j);

  std::size_t dimension() const { return alpha_.size(); }
  const std::vector<std::uint32_t>& alpha() const { return alpha_; }
  const std::vector<std::uint32_t>& beta() const { return beta_; }

  std::size_t x_degree() const;
  /// |β|
  std::size_t d_degree() const;
  /// Σ (α_i − β_i)
  long length() const;
  /// (α_1 − β_1, ..., α_n − β_n)
  std::vector<long> weight() const;

  /// |α| = p and |β| = q.
  bool in_subspace(std::size_t p, std::size_t q) const;
  /// |α| = |β| (length zero).
  bool is_length_zero() const;
  /// |α| = |β| ≤ p, nonconstant.
  bool in_bounded_length_zero(std::size_t p) const;

  bool operator==(const WeylMonomial&) const = default;
  /// Lexicographic on (α, β).
  auto operator<=>(const WeylMonomial&) const = default;

 private:
  std::vector<std::uint32_t> alpha_;
  std::vector<std::uint32_t> beta_;
};

/// Monomial as written, x_{i_1} ... x_{i_p} ∂_{j_1} ... ∂_{j_q}, keeping the
/// index order (the order decides which edges block_of pairs up).
struct WrittenMonomial {
  std::size_t dimension = 0;
  std::vector<Vertex> x_indices;
  std::vector<Vertex> d_indices;

  WeylMonomial normal_form() const;
  bool operator==(const WrittenMonomial&) const = default;
};

/// Finite Z-linear combination of normally ordered monomials; zero
/// coefficients are never stored.
class WeylElement {
 public:
  using TermMap = std::map<WeylMonomial, Integer>;

  WeylElement() = default;
  explicit WeylElement(std::size_t n) : n_(n) {}
  WeylElement(const WeylMonomial& m, Integer coefficient = 1);

  static WeylElement one(std::size_t n);

  std::size_t dimension() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const WeylMonomial& m) const;
  /// max |β| over stored terms; 0 for the zero element.
  std::size_t order() const;

  void add_term(const WeylMonomial& m, const Integer& coefficient);

  WeylElement& operator+=(const WeylElement& other);
  WeylElement& operator-=(const WeylElement& other);
  WeylElement& operator*=(const Integer& scalar);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  WeylElement operator-() const;

  bool operator==(const WeylElement& other) const {
    return n_ == other.n_ && terms_ == other.terms_;
  }

 private:
  std::size_t n_ = 0;
  TermMap terms_;
};

/// Normally ordered product, using ∂^β x^γ = Σ_k Π_i C(β_i,k_i) C(γ_i,k_i) k_i! x^{γ−k} ∂^{β−k}.
WeylElement multiply(const WeylElement& a, const WeylElement& b);
WeylElement multiply(const WeylMonomial& a, const WeylMonomial& b);
inline WeylElement operator*(const WeylElement& a, const WeylElement& b) { return multiply(a, b); }

/// Left fold of multiply over a nonempty sequence of factors of one dimension.
WeylElement normal_order_product(std::span<const WeylMonomial> factors);

/// Independent route: expand the word of generators by repeatedly rewriting the
/// leftmost ∂_i x_j into x_j ∂_i + δ_ij until no ∂ precedes an x.
WeylElement normal_order_by_rewriting(std::span<const WeylMonomial> factors);

/// Edges (i_s, j_s) pairing the s-th x index with the s-th ∂ index as written.
std::vector<Edge> block_of(const WrittenMonomial& w);
/// Canonical written form of a normally ordered monomial: both index lists sorted.
WrittenMonomial written_form(const WeylMonomial& w);
std::vector<Edge> block_of(const WeylMonomial& w);

/// Graph built from block_of(w_1), ..., block_of(w_m), blocks in factor order.
LabeledDigraph expansion_graph(std::span<const WrittenMonomial> factors);
/// Σ_I S_G(I) Π_{i∈I} x_i Π_{j∈J} ∂_j for a graph on n vertices.
WeylElement expand_from_graph(const LabeledDigraph& g);
/// w_1 ⋯ w_m through the decomposition count of the expansion graph.
WeylElement graph_expand(std::span<const WrittenMonomial> factors);
WeylElement graph_expand(std::span<const WeylMonomial> factors);

/// Π_{i∈I} x_i Π_{j∈J} ∂_j
WeylMonomial monomial_of(std::size_t n, const VertexMultiset& xs, const VertexMultiset& ds);

/// Text syntax. A term is an optional integer coefficient followed by
/// generators x<i> or d<i> (optionally ^k), all x's before all d's, e.g.
/// "2 x1 x2 d2 d1 + x4 d2 - 3". "x" and "d" mean index 1. `n` fixes the
/// dimension; otherwise the largest index wins.
WeylElement parse_element(std::string_view text, std::optional<std::size_t> n = std::nullopt);
/// Single monomial keeping index order, e.g. "x1 x2 d2 d1".
WrittenMonomial parse_written_monomial(std::string_view text,
                                       std::optional<std::size_t> n = std::nullopt);
/// Canonical print: terms in lexicographic (α, β) order, generators by
/// ascending index with exponents, "0" for the zero element.
std::string format_element(const WeylElement& e);
std::string format_monomial(const WeylMonomial& m);

}  // namespace pathweyl
