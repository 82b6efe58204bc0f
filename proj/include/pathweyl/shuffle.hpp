#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "pathweyl/bigint.hpp"
#include "pathweyl/digraph.hpp"

namespace pathweyl {

/// Disjoint label chains whose union is exactly {1, ..., M}. The order inside
/// a chain is data; chains need not be sorted.
class ChainFamily {
 public:
  ChainFamily() = default;
  explicit ChainFamily(std::vector<std::vector<Label>> chains);

  const std::vector<std::vector<Label>>& chains() const { return chains_; }
  std::size_t total_size() const { return total_; }

 private:
  std::vector<std::vector<Label>> chains_;
  std::size_t total_ = 0;
};

/// Two increasing chains (1..m) and (m+1..m+n).
ChainFamily consecutive_chains(std::size_t m, std::size_t n);

/// Visits every interleaving that keeps each chain's internal order, as a
/// label sequence of length M.
void for_each_shuffle(const ChainFamily& family,
                      const std::function<void(std::span<const Label>)>& visit);
std::vector<Permutation> enumerate_shuffles(const ChainFamily& family);

/// Σ sgn(σ) over the shuffle set, by dynamic programming over consumed
/// prefix lengths.
Integer signed_shuffle_sum(const ChainFamily& family);
/// Same, for chains already known to partition {1, ..., M} (no validation).
Integer signed_shuffle_sum(std::span<const std::vector<Label>> chains);

/// Signed shuffle count of two increasing chains of lengths m and n, closed form.
Integer q(std::size_t m, std::size_t n);

}  // namespace pathweyl
