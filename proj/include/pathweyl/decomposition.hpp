#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pathweyl/bigint.hpp"
#include "pathweyl/digraph.hpp"
#include "pathweyl/multiset.hpp"

namespace pathweyl {

/// Edge labels of a walk, in traversal order.
using Path = std::vector<Label>;

/// Partition of the edge set into paths. Canonical form keeps the paths
/// sorted by their smallest label, which makes decompositions comparable.
struct Decomposition {
  std::vector<Path> paths;

  void canonicalize();
  bool operator==(const Decomposition&) const = default;
  auto operator<=>(const Decomposition&) const = default;
};

/// "e1e5 | e2e4 | e3 | e6"
std::string to_string(const Decomposition& d);

VertexMultiset sources(const LabeledDigraph& g, const Decomposition& d);
VertexMultiset sinks(const LabeledDigraph& g, const Decomposition& d);

/// Checks the partition and walk conditions, the block condition and, when
/// `principal` is set, strictly increasing labels along each path.
bool is_valid_decomposition(const LabeledDigraph& g, const Decomposition& d, bool principal);

using DecompositionVisitor = std::function<void(const Decomposition&)>;

/// Calls `visit` once for every principal decomposition (depth-first order,
/// canonical form).
void for_each_principal(const LabeledDigraph& g, const DecompositionVisitor& visit);
/// Every principal decomposition, sorted by canonical form.
std::vector<Decomposition> enumerate_principal(const LabeledDigraph& g);

/// Number of principal decompositions with sources exactly `sources`, by
/// pruned enumeration.
Integer stirling_count(const LabeledDigraph& g, const VertexMultiset& sources);

/// Same value by peeling the maximum-label edge of the last block:
/// S_G(I) = S_{G'}(I - {i}) + (k_i - r_e) S_{G'}(I), memoized on (label prefix, I).
Integer stirling_recurrence(const LabeledDigraph& g, const VertexMultiset& sources);

/// Source multiset -> S_G(I), one entry per realized source multiset.
using StirlingTable = std::map<VertexMultiset, Integer>;

/// Forward form of the recurrence over label prefixes; polynomial in the
/// number of candidate source multisets.
StirlingTable stirling_table(const LabeledDigraph& g);
/// Tally over `for_each_principal`.
StirlingTable stirling_table_by_enumeration(const LabeledDigraph& g);

/// All decompositions (labels need not increase along paths), optionally
/// restricted to a source multiset. Requires a blockless graph.
void for_each_decomposition(const LabeledDigraph& g, const std::optional<VertexMultiset>& sources,
                            const DecompositionVisitor& visit);
std::vector<Decomposition> enumerate_all_decompositions(const LabeledDigraph& g,
                                                        const VertexMultiset& sources);

}  // namespace pathweyl
