#include "pathweyl/skewsym.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "pathweyl/errors.hpp"
#include "pathweyl/shuffle.hpp"

namespace pathweyl {

namespace {

void require_blockless(const LabeledDigraph& g) {
  if (!g.is_blockless()) throw PreconditionError("E_G is defined for graphs without blocks of size > 1");
}

void require_budget(std::size_t edges, std::size_t max_edges) {
  if (edges > max_edges) {
    throw BudgetExceeded("relabeling sum over " + std::to_string(edges) + "! permutations exceeds the budget of " +
                         std::to_string(max_edges) + " edges; use eg_decomposition");
  }
}

// Calls visit(σ, sgn σ) for every σ ∈ S_m.
template <typename Visit>
void for_each_permutation(std::size_t m, Visit&& visit) {
  std::vector<Label> images(m);
  std::iota(images.begin(), images.end(), Label{1});
  do {
    Permutation sigma(images);
    visit(sigma, sigma.sign());
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace

Integer eg_symmetrization(const LabeledDigraph& g, const VertexMultiset& sources, std::size_t max_edges) {
  require_blockless(g);
  require_budget(g.edge_count(), max_edges);
  Integer total = 0;
  for_each_permutation(g.edge_count(), [&](const Permutation& sigma, int sign) {
    Integer count = stirling_count(permute_labels(g, sigma), sources);
    if (sign > 0) {
      total += count;
    } else {
      total -= count;
    }
  });
  return total;
}

EGTable eg_symmetrization_table(const LabeledDigraph& g, std::size_t max_edges) {
  require_blockless(g);
  require_budget(g.edge_count(), max_edges);
  EGTable table;
  for_each_permutation(g.edge_count(), [&](const Permutation& sigma, int sign) {
    for (const auto& [sources, count] : stirling_table(permute_labels(g, sigma))) {
      if (sign > 0) {
        table[sources] += count;
      } else {
        table[sources] -= count;
      }
    }
  });
  std::erase_if(table, [](const auto& entry) { return entry.second == 0; });
  return table;
}

Integer eg_decomposition(const LabeledDigraph& g, const VertexMultiset& sources) {
  require_blockless(g);
  Integer total = 0;
  for_each_decomposition(g, sources, [&](const Decomposition& d) { total += signed_shuffle_sum(d.paths); });
  return total;
}

EGTable eg_table(const LabeledDigraph& g) {
  require_blockless(g);
  EGTable table;
  for_each_decomposition(g, std::nullopt, [&](const Decomposition& d) {
    table[sources(g, d)] += signed_shuffle_sum(d.paths);
  });
  return table;
}

std::vector<DecompositionTerm> eg_terms(const LabeledDigraph& g, const VertexMultiset& sources) {
  std::vector<DecompositionTerm> out;
  for (Decomposition& d : enumerate_all_decompositions(g, sources)) {
    Integer sum = signed_shuffle_sum(d.paths);
    out.push_back({std::move(d), std::move(sum)});
  }
  return out;
}

LabeledDigraph edge_graph(std::span<const WeylMonomial> args) {
  if (args.empty()) throw PreconditionError("s_m needs at least one argument");
  const std::size_t n = args.front().dimension();
  std::vector<Edge> edges;
  edges.reserve(args.size());
  for (const WeylMonomial& w : args) {
    if (w.dimension() != n) throw PreconditionError("arguments of different dimensions");
    if (!w.in_subspace(1, 1)) {
      throw PreconditionError("argument " + format_monomial(w) + " is not a basis monomial x_i d_j");
    }
    auto i = std::find(w.alpha().begin(), w.alpha().end(), 1u) - w.alpha().begin();
    auto j = std::find(w.beta().begin(), w.beta().end(), 1u) - w.beta().begin();
    edges.push_back({static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1)});
  }
  return LabeledDigraph(n, std::move(edges));
}

namespace {

WeylElement element_from_eg(const LabeledDigraph& g, const EGTable& table) {
  WeylElement out(g.vertex_count());
  for (const auto& [sources, value] : table) {
    if (value == 0) continue;
    auto sinks = forced_sinks(g, sources);
    if (!sinks) throw OracleMismatch("decomposition sources " + to_string(sources) + " without valid sinks");
    out.add_term(monomial_of(g.vertex_count(), sources, *sinks), value);
  }
  return out;
}

}  // namespace

WeylElement s_m_evaluate(std::span<const WeylMonomial> args) {
  LabeledDigraph g = edge_graph(args);
  return element_from_eg(g, eg_table(g));
}

WeylElement alternating_sum_direct(std::span<const WeylMonomial> args, std::size_t max_args) {
  if (args.empty()) throw PreconditionError("s_m needs at least one argument");
  require_budget(args.size(), max_args);
  WeylElement total(args.front().dimension());
  std::vector<WeylMonomial> ordered(args.begin(), args.end());
  for_each_permutation(args.size(), [&](const Permutation& sigma, int sign) {
    for (std::size_t l = 0; l < args.size(); ++l) ordered[l] = args[sigma(static_cast<Label>(l + 1)) - 1];
    WeylElement product = normal_order_product(ordered);
    if (sign > 0) {
      total += product;
    } else {
      total -= product;
    }
  });
  return total;
}

// ---------------------------------------------------------------------------
// Identity sweeps

namespace {

using EdgeMask = std::uint64_t;

std::vector<EdgeMask> subset_masks(std::size_t universe, std::size_t m) {
  std::vector<EdgeMask> out;
  if (m > universe) return out;
  std::vector<std::size_t> pick(m);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  while (true) {
    EdgeMask mask = 0;
    for (std::size_t p : pick) mask |= EdgeMask{1} << p;
    out.push_back(mask);
    std::size_t i = m;
    while (i > 0 && pick[i - 1] == universe - m + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t k = i; k < m; ++k) pick[k] = pick[k - 1] + 1;
  }
  return out;
}

// The smallest image of `mask` under simultaneous relabeling of both endpoints.
class VertexSymmetry {
 public:
  explicit VertexSymmetry(std::size_t n) : n_(n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      std::vector<std::uint8_t> image(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) image[i * n + j] = static_cast<std::uint8_t>(perm[i] * n + perm[j]);
      }
      images_.push_back(std::move(image));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  bool is_canonical(EdgeMask mask) const {
    for (const auto& image : images_) {
      EdgeMask mapped = 0;
      for (EdgeMask rest = mask; rest != 0; rest &= rest - 1) {
        mapped |= EdgeMask{1} << image[static_cast<std::size_t>(__builtin_ctzll(rest))];
      }
      if (mapped < mask) return false;
    }
    return true;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<std::uint8_t>> images_;
};

std::vector<Edge> edges_of(EdgeMask mask, std::size_t n) {
  std::vector<Edge> edges;
  for (EdgeMask rest = mask; rest != 0; rest &= rest - 1) {
    auto bit = static_cast<std::size_t>(__builtin_ctzll(rest));
    edges.push_back({static_cast<Vertex>(bit / n + 1), static_cast<Vertex>(bit % n + 1)});
  }
  return edges;
}

std::optional<IdentityWitness> first_nonzero(const std::vector<Edge>& edges, std::size_t n) {
  LabeledDigraph g(n, edges);
  for (const auto& [sources, value] : eg_table(g)) {
    if (value == 0) continue;
    return IdentityWitness{edges, sources, *forced_sinks(g, sources), value};
  }
  return std::nullopt;
}

}  // namespace

IdentityVerdict identity_check(std::size_t n, std::size_t m, const IdentityCheckOptions& options) {
  if (n < 1 || m < 1) throw PreconditionError("identity_check needs n >= 1 and m >= 1");
  if (n > 8) throw PreconditionError("identity_check supports n <= 8");
  const std::size_t universe = n * n;
  Integer raw = binomial(universe, m);
  if (!options.long_running && (m > options.max_args || raw > options.case_budget)) {
    throw BudgetExceeded("sweep of " + raw.get_str() + " cases with s_" + std::to_string(m) +
                         " exceeds the default budget; pass the long-running flag");
  }

  IdentityVerdict verdict;
  verdict.raw_cases = raw.get_ui();
  std::vector<EdgeMask> all = subset_masks(universe, m);
  VertexSymmetry symmetry(n);
  std::vector<EdgeMask> todo;
  for (EdgeMask mask : all) {
    bool canonical = symmetry.is_canonical(mask);
    if (canonical) ++verdict.symmetry_classes;
    if (canonical || !options.symmetry_reduction) todo.push_back(mask);
  }

  constexpr std::size_t kNoFailure = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_failure{kNoFailure};
  std::mutex lock;
  std::optional<IdentityWitness> witness;

  auto worker = [&] {
    while (true) {
      std::size_t pos = next.fetch_add(1);
      if (pos >= todo.size() || pos > first_failure.load()) return;
      auto found = first_nonzero(edges_of(todo[pos], n), n);
      if (!found) continue;
      std::lock_guard guard(lock);
      if (pos < first_failure.load()) {
        first_failure.store(pos);
        witness = std::move(found);
      }
    }
  };
  unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  if (witness) {
    verdict.holds = false;
    verdict.witness = std::move(witness);
    verdict.cases_checked = first_failure.load() + 1;
  } else {
    verdict.cases_checked = todo.size();
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// Constructions

LabeledDigraph fig3_graph(std::size_t n) {
  if (n < 4) throw PreconditionError("fig3_graph needs n >= 4");
  std::vector<Edge> edges;
  auto doubled_cycle = [&](std::size_t k) {
    auto wrap = [k](std::size_t v) { return static_cast<Vertex>(v > k ? v - k : v); };
    for (std::size_t v = 1; v <= k; ++v) edges.push_back({wrap(v), wrap(v + 1)});
    for (std::size_t s = 1; s <= k; ++s) edges.push_back({wrap(k + 2 - s), wrap(k + 1 - s)});
  };
  if (n % 2 == 0) {
    doubled_cycle(n);
  } else {
    doubled_cycle(n - 1);
    edges.push_back({2, static_cast<Vertex>(n)});
    edges.push_back({static_cast<Vertex>(n), 2});
  }
  return LabeledDigraph(n, std::move(edges));
}

std::vector<Edge> staircase_edges(std::size_t n, std::size_t N) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= n; ++v) {
    edges.push_back({v, v});
    if (v < n) edges.push_back({v, v + 1});
  }
  if (N > edges.size()) throw PreconditionError("staircase has only " + std::to_string(edges.size()) + " edges");
  edges.resize(N);
  return edges;
}

NCommutatorWitness ncommutator_witness(std::size_t n, std::size_t N) {
  if (N <= 2 || N >= 2 * n) {
    throw PreconditionError("ncommutator_witness needs 2 < N < 2n (got n=" + std::to_string(n) +
                            ", N=" + std::to_string(N) + ")");
  }
  LabeledDigraph g(n, staircase_edges(n, N));
  VertexMultiset sources = N % 2 == 1 ? VertexMultiset{1, 1} : VertexMultiset{1, 2};
  auto sinks = forced_sinks(g, sources);
  if (!sinks) throw OracleMismatch("staircase sources " + to_string(sources) + " have no sinks");
  Integer coefficient = eg_decomposition(g, sources);
  WeylMonomial term = monomial_of(n, sources, *sinks);
  return {std::move(g), std::move(sources), std::move(*sinks), std::move(coefficient), std::move(term)};
}

}  // namespace pathweyl
