#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pathweyl {

using Vertex = std::uint32_t;

/// Finite multiset of vertex ids. Zero multiplicities are never stored, so
/// two multisets compare equal exactly when their count maps do.
class VertexMultiset {
 public:
  VertexMultiset() = default;
  /// Elements listed with repetition, e.g. {1, 4, 4}.
  VertexMultiset(std::initializer_list<Vertex> elements);
  explicit VertexMultiset(std::span<const Vertex> elements);

  /// counts[v - 1] is the multiplicity of vertex v.
  static VertexMultiset from_dense(std::span<const std::uint32_t> counts);

  std::uint32_t count(Vertex v) const;
  void add(Vertex v, std::uint32_t copies = 1);
  /// Saturating: removing more copies than present leaves zero.
  void remove(Vertex v, std::uint32_t copies = 1);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  /// True when `sub` is a sub-multiset of *this.
  bool contains(const VertexMultiset& sub) const;

  const std::map<Vertex, std::uint32_t>& counts() const { return counts_; }
  /// Sorted element list with repetition.
  std::vector<Vertex> elements() const;
  /// Dense count vector of length n (vertices above n are ignored).
  std::vector<std::uint32_t> dense(std::size_t n) const;

  bool operator==(const VertexMultiset& other) const { return counts_ == other.counts_; }
  /// Orders by size first, then lexicographically by sorted element list.
  std::strong_ordering operator<=>(const VertexMultiset& other) const;

 private:
  std::map<Vertex, std::uint32_t> counts_;
  std::size_t size_ = 0;
};

VertexMultiset multiset_difference(const VertexMultiset& a, const VertexMultiset& x);
VertexMultiset multiset_merge(const VertexMultiset& a, const VertexMultiset& x);

/// All sub-multisets of `a`, in increasing order.
std::vector<VertexMultiset> sub_multisets(const VertexMultiset& a);

/// Exponent notation, e.g. "{1,2,4^2}"; the empty multiset prints as "{}".
std::string to_string(const VertexMultiset& m);
/// Comma-separated list with repetition, e.g. "1,4,4".
std::string to_list(const VertexMultiset& m);
/// Accepts "1,1,2", "1^2,2", optionally wrapped in braces; "" and "{}" are empty.
VertexMultiset parse_multiset(std::string_view text);

}  // namespace pathweyl
