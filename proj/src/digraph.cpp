#include "pathweyl/digraph.hpp"

#include <numeric>
#include <string>

#include "pathweyl/errors.hpp"

namespace pathweyl {

Permutation::Permutation(std::vector<Label> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Label l : images_) {
    if (l < 1 || l > images_.size() || seen[l - 1]) {
      throw PreconditionError("not a permutation of 1.." + std::to_string(images_.size()));
    }
    seen[l - 1] = true;
  }
}

Permutation Permutation::identity(std::size_t m) {
  std::vector<Label> images(m);
  std::iota(images.begin(), images.end(), Label{1});
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Label> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<Label>(i + 1);
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw PreconditionError("composing permutations of different sizes");
  std::vector<Label> images(tau.size());
  for (std::size_t i = 0; i < tau.size(); ++i) images[i] = sigma(tau.images_[i]);
  return Permutation(std::move(images));
}

int Permutation::sign() const {
  std::vector<bool> visited(images_.size(), false);
  int sign = 1;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (visited[start]) continue;
    std::size_t length = 0;
    for (std::size_t i = start; !visited[i]; i = images_[i] - 1) {
      visited[i] = true;
      ++length;
    }
    if (length % 2 == 0) sign = -sign;
  }
  return sign;
}

int sequence_sign(std::span<const Label> sequence) {
  int sign = 1;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    for (std::size_t j = i + 1; j < sequence.size(); ++j) {
      if (sequence[i] > sequence[j]) sign = -sign;
    }
  }
  return sign;
}

LabeledDigraph::LabeledDigraph(std::size_t vertices, std::vector<Edge> edges)
    : vertices_(vertices), edges_(std::move(edges)) {
  blocks_.reserve(edges_.size());
  for (Label l = 1; l <= edges_.size(); ++l) blocks_.push_back({l, l});
  validate_and_index();
}

LabeledDigraph::LabeledDigraph(std::size_t vertices, std::vector<Edge> edges,
                               std::span<const std::size_t> block_sizes)
    : vertices_(vertices), edges_(std::move(edges)) {
  Label next = 1;
  for (std::size_t size : block_sizes) {
    if (size == 0) throw PreconditionError("empty block");
    blocks_.push_back({next, static_cast<Label>(next + size - 1)});
    next = static_cast<Label>(next + size);
  }
  if (next != edges_.size() + 1) {
    throw PreconditionError("block sizes sum to " + std::to_string(next - 1) + " but graph has " +
                            std::to_string(edges_.size()) + " edges");
  }
  validate_and_index();
}

LabeledDigraph LabeledDigraph::from_blocks(std::size_t vertices,
                                           const std::vector<std::vector<Edge>>& blocks) {
  std::vector<Edge> edges;
  std::vector<std::size_t> sizes;
  for (const auto& block : blocks) {
    if (block.empty()) continue;
    edges.insert(edges.end(), block.begin(), block.end());
    sizes.push_back(block.size());
  }
  return LabeledDigraph(vertices, std::move(edges), sizes);
}

void LabeledDigraph::validate_and_index() {
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    if (e.tail < 1 || e.tail > vertices_ || e.head < 1 || e.head > vertices_) {
      throw PreconditionError("edge e" + std::to_string(k + 1) + " = (" + std::to_string(e.tail) +
                              "," + std::to_string(e.head) + ") leaves vertex range 1.." +
                              std::to_string(vertices_));
    }
  }
  block_of_label_.assign(edges_.size(), 0);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (Label l = blocks_[b].first; l <= blocks_[b].last; ++l) {
      block_of_label_[l - 1] = static_cast<std::uint32_t>(b);
    }
  }
}

VertexMultiset out_multiset(const LabeledDigraph& g) {
  VertexMultiset out;
  for (const Edge& e : g.edges()) out.add(e.tail);
  return out;
}

VertexMultiset in_multiset(const LabeledDigraph& g) {
  VertexMultiset in;
  for (const Edge& e : g.edges()) in.add(e.head);
  return in;
}

std::optional<VertexMultiset> forced_sinks(const LabeledDigraph& g, const VertexMultiset& sources) {
  VertexMultiset v_out = out_multiset(g);
  if (!v_out.contains(sources)) return std::nullopt;
  VertexMultiset merged = multiset_merge(in_multiset(g), sources);
  if (!merged.contains(v_out)) return std::nullopt;
  return multiset_difference(merged, v_out);
}

LabeledDigraph permute_labels(const LabeledDigraph& g, const Permutation& sigma) {
  if (sigma.size() != g.edge_count()) {
    throw PreconditionError("permutation of size " + std::to_string(sigma.size()) +
                            " applied to a graph with " + std::to_string(g.edge_count()) + " edges");
  }
  std::vector<Edge> edges(g.edge_count());
  for (Label l = 1; l <= g.edge_count(); ++l) edges[l - 1] = g.edge(sigma(l));
  return LabeledDigraph(g.vertex_count(), std::move(edges));
}

LabeledDigraph remove_edge(const LabeledDigraph& g, Label label) {
  if (label < 1 || label > g.edge_count()) {
    throw PreconditionError("no edge with label " + std::to_string(label));
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (Label l = 1; l <= g.edge_count(); ++l) {
    if (l != label) edges.push_back(g.edge(l));
  }
  std::vector<std::size_t> sizes;
  for (std::size_t b = 0; b < g.blocks().size(); ++b) {
    std::size_t size = g.blocks()[b].size() - (b == g.block_index(label) ? 1 : 0);
    if (size > 0) sizes.push_back(size);
  }
  return LabeledDigraph(g.vertex_count(), std::move(edges), sizes);
}

}  // namespace pathweyl
