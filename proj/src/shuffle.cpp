#include "pathweyl/shuffle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "pathweyl/errors.hpp"

namespace pathweyl {

ChainFamily::ChainFamily(std::vector<std::vector<Label>> chains) : chains_(std::move(chains)) {
  for (const auto& c : chains_) total_ += c.size();
  std::vector<bool> seen(total_, false);
  for (const auto& c : chains_) {
    for (Label l : c) {
      if (l < 1 || l > total_ || seen[l - 1]) {
        throw PreconditionError("chains must partition 1.." + std::to_string(total_));
      }
      seen[l - 1] = true;
    }
  }
}

ChainFamily consecutive_chains(std::size_t m, std::size_t n) {
  std::vector<Label> first(m);
  std::vector<Label> second(n);
  for (std::size_t i = 0; i < m; ++i) first[i] = static_cast<Label>(i + 1);
  for (std::size_t i = 0; i < n; ++i) second[i] = static_cast<Label>(m + i + 1);
  return ChainFamily({std::move(first), std::move(second)});
}

namespace {

void shuffle_step(const std::vector<std::vector<Label>>& chains, std::vector<std::size_t>& used,
                  std::vector<Label>& sequence, std::size_t total,
                  const std::function<void(std::span<const Label>)>& visit) {
  if (sequence.size() == total) {
    visit(sequence);
    return;
  }
  for (std::size_t c = 0; c < chains.size(); ++c) {
    if (used[c] == chains[c].size()) continue;
    sequence.push_back(chains[c][used[c]++]);
    shuffle_step(chains, used, sequence, total, visit);
    --used[c];
    sequence.pop_back();
  }
}

// dp over mixed-radix states (consumed length of each chain). Appending value
// v in front of everything still unplaced adds one inversion per smaller
// unplaced value.
template <typename Value>
Value shuffle_dp(std::span<const std::vector<Label>> chains) {
  std::vector<Label> all;
  for (const auto& c : chains) all.insert(all.end(), c.begin(), c.end());
  std::sort(all.begin(), all.end());
  auto rank = [&](Label l) {
    return static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), l) - all.begin());
  };
  std::vector<std::vector<std::size_t>> ranked;
  ranked.reserve(chains.size());
  for (const auto& c : chains) {
    std::vector<std::size_t> r;
    r.reserve(c.size());
    for (Label l : c) r.push_back(rank(l));
    ranked.push_back(std::move(r));
  }

  const std::size_t k = ranked.size();
  std::vector<std::size_t> stride(k + 1, 1);
  for (std::size_t c = 0; c < k; ++c) stride[c + 1] = stride[c] * (ranked[c].size() + 1);
  std::vector<Value> dp(stride[k], Value(0));
  dp[0] = 1;

  std::vector<std::size_t> used(k, 0);
  for (std::size_t state = 0; state < stride[k]; ++state) {
    for (std::size_t c = 0; c < k; ++c) used[c] = (state / stride[c]) % (ranked[c].size() + 1);
    if (dp[state] == 0) continue;
    for (std::size_t c = 0; c < k; ++c) {
      if (used[c] == ranked[c].size()) continue;
      std::size_t v = ranked[c][used[c]];
      std::size_t placed_below = 0;
      for (std::size_t d = 0; d < k; ++d) {
        for (std::size_t t = 0; t < used[d]; ++t) placed_below += ranked[d][t] < v ? 1 : 0;
      }
      std::size_t unplaced_below = v - placed_below;
      if (unplaced_below % 2 == 0) {
        dp[state + stride[c]] += dp[state];
      } else {
        dp[state + stride[c]] -= dp[state];
      }
    }
  }
  return dp[stride[k] - 1];
}

}  // namespace

void for_each_shuffle(const ChainFamily& family,
                      const std::function<void(std::span<const Label>)>& visit) {
  std::vector<std::size_t> used(family.chains().size(), 0);
  std::vector<Label> sequence;
  sequence.reserve(family.total_size());
  shuffle_step(family.chains(), used, sequence, family.total_size(), visit);
}

std::vector<Permutation> enumerate_shuffles(const ChainFamily& family) {
  std::vector<Permutation> out;
  for_each_shuffle(family, [&](std::span<const Label> s) {
    out.emplace_back(std::vector<Label>(s.begin(), s.end()));
  });
  return out;
}

Integer signed_shuffle_sum(const ChainFamily& family) { return signed_shuffle_sum(family.chains()); }

Integer signed_shuffle_sum(std::span<const std::vector<Label>> chains) {
  std::size_t total = 0;
  for (const auto& c : chains) total += c.size();
  // Every partial sum is bounded by the multinomial, which is at most total! < 2^63 for total <= 20.
  if (total <= 20) return Integer(static_cast<long>(shuffle_dp<std::int64_t>(chains)));
  return shuffle_dp<Integer>(chains);
}

Integer q(std::size_t m, std::size_t n) {
  if (m % 2 == 1 && n % 2 == 1) return 0;
  return binomial(m / 2 + n / 2, n / 2);
}

}  // namespace pathweyl
