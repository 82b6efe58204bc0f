#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pathweyl/multiset.hpp"

namespace pathweyl {

/// Edge labels run 1..m; the label of an edge is its position in label order.
using Label = std::uint32_t;

struct Edge {
  Vertex tail = 0;
  Vertex head = 0;

  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

/// Inclusive label interval [first, last].
struct LabelRange {
  Label first = 1;
  Label last = 0;

  std::size_t size() const { return last + 1 - first; }
  bool operator==(const LabelRange&) const = default;
};

/// Bijection on 1..m stored by images: images()[l - 1] = σ(l).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Label> images);
  static Permutation identity(std::size_t m);

  std::size_t size() const { return images_.size(); }
  Label operator()(Label l) const { return images_[l - 1]; }
  const std::vector<Label>& images() const { return images_; }

  Permutation inverse() const;
  /// (σ ∘ τ)(l) = σ(τ(l)).
  friend Permutation compose(const Permutation& sigma, const Permutation& tau);
  int sign() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Label> images_;
};

Permutation compose(const Permutation& sigma, const Permutation& tau);
/// Parity of inversions of an arbitrary sequence of distinct values.
int sequence_sign(std::span<const Label> sequence);

/// Digraph on vertices 1..n with edges in label order and an ordered partition
/// of the labels into consecutive blocks. A graph without blocks is stored as
/// m singleton blocks; both spellings are the same value.
class LabeledDigraph {
 public:
  LabeledDigraph() = default;
  /// Blockless graph.
  LabeledDigraph(std::size_t vertices, std::vector<Edge> edges);
  /// Block sizes must be positive and sum to the number of edges.
  LabeledDigraph(std::size_t vertices, std::vector<Edge> edges,
                 std::span<const std::size_t> block_sizes);
  /// Edges of block k take the next consecutive labels.
  static LabeledDigraph from_blocks(std::size_t vertices,
                                    const std::vector<std::vector<Edge>>& blocks);

  std::size_t vertex_count() const { return vertices_; }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(Label l) const { return edges_[l - 1]; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const LabelRange> blocks() const { return blocks_; }
  /// 0-based index of the block containing label l.
  std::size_t block_index(Label l) const { return block_of_label_[l - 1]; }
  bool is_blockless() const { return blocks_.size() == edges_.size(); }

  bool operator==(const LabeledDigraph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_ && blocks_ == other.blocks_;
  }

 private:
  void validate_and_index();

  std::size_t vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<LabelRange> blocks_;
  std::vector<std::uint32_t> block_of_label_;
};

/// V_out: each vertex once per outgoing edge.
VertexMultiset out_multiset(const LabeledDigraph& g);
/// V_in: each vertex once per incoming edge.
VertexMultiset in_multiset(const LabeledDigraph& g);

/// Sinks forced by sources I: J = V_in ⊎ I − V_out, computed exactly. Empty
/// when I is not a sub-multiset of V_out or the difference would go negative.
std::optional<VertexMultiset> forced_sinks(const LabeledDigraph& g, const VertexMultiset& sources);

/// G^σ: label l of the result carries old edge e_{σ(l)}. Blocks are dropped.
/// Right action: permute_labels(permute_labels(g, σ), τ) == permute_labels(g, compose(σ, τ)).
LabeledDigraph permute_labels(const LabeledDigraph& g, const Permutation& sigma);

/// Removes one edge; later labels shift down by one, blocks shrink and empty
/// blocks disappear.
LabeledDigraph remove_edge(const LabeledDigraph& g, Label label);

}  // namespace pathweyl
