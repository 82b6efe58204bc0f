#include "pathweyl/decomposition.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "pathweyl/errors.hpp"

namespace pathweyl {

namespace {

Label min_label(const Path& p) { return *std::min_element(p.begin(), p.end()); }

// Per-prefix dense vertex counts: counts[k][v-1] over labels 1..k.
struct PrefixDegrees {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::vector<std::int64_t>> in;

  explicit PrefixDegrees(const LabeledDigraph& g)
      : out(g.edge_count() + 1, std::vector<std::int64_t>(g.vertex_count(), 0)),
        in(g.edge_count() + 1, std::vector<std::int64_t>(g.vertex_count(), 0)) {
    for (Label l = 1; l <= g.edge_count(); ++l) {
      out[l] = out[l - 1];
      in[l] = in[l - 1];
      ++out[l][g.edge(l).tail - 1];
      ++in[l][g.edge(l).head - 1];
    }
  }
};

// Edges with labels in [block.first, before) that end at vertex v.
std::int64_t block_heads_before(const LabeledDigraph& g, Label before, Vertex v) {
  const LabelRange& block = g.blocks()[g.block_index(before)];
  std::int64_t count = 0;
  for (Label l = block.first; l < before; ++l) {
    if (g.edge(l).head == v) ++count;
  }
  return count;
}

void require_blockless(const LabeledDigraph& g, const char* what) {
  if (!g.is_blockless()) {
    throw PreconditionError(std::string(what) + " is defined for graphs without blocks of size > 1");
  }
}

}  // namespace

void Decomposition::canonicalize() {
  std::sort(paths.begin(), paths.end(),
            [](const Path& a, const Path& b) { return min_label(a) < min_label(b); });
}

std::string to_string(const Decomposition& d) {
  std::string out;
  for (const Path& p : d.paths) {
    if (!out.empty()) out += " | ";
    for (Label l : p) out += 'e' + std::to_string(l);
  }
  return out;
}

VertexMultiset sources(const LabeledDigraph& g, const Decomposition& d) {
  VertexMultiset out;
  for (const Path& p : d.paths) out.add(g.edge(p.front()).tail);
  return out;
}

VertexMultiset sinks(const LabeledDigraph& g, const Decomposition& d) {
  VertexMultiset out;
  for (const Path& p : d.paths) out.add(g.edge(p.back()).head);
  return out;
}

bool is_valid_decomposition(const LabeledDigraph& g, const Decomposition& d, bool principal) {
  std::vector<bool> used(g.edge_count(), false);
  std::size_t total = 0;
  for (const Path& p : d.paths) {
    if (p.empty()) return false;
    std::vector<std::size_t> blocks;
    for (std::size_t t = 0; t < p.size(); ++t) {
      Label l = p[t];
      if (l < 1 || l > g.edge_count() || used[l - 1]) return false;
      used[l - 1] = true;
      ++total;
      if (t > 0) {
        if (g.edge(p[t - 1]).head != g.edge(l).tail) return false;
        if (principal && p[t - 1] >= l) return false;
      }
      std::size_t b = g.block_index(l);
      if (std::find(blocks.begin(), blocks.end(), b) != blocks.end()) return false;
      blocks.push_back(b);
    }
  }
  return total == g.edge_count();
}

// ---------------------------------------------------------------------------
// Principal decompositions

namespace {

class PrincipalSearch {
 public:
  PrincipalSearch(const LabeledDigraph& g, const DecompositionVisitor& visit) : g_(g), visit_(visit) {}

  void run() { step(1); }

 private:
  void step(Label l) {
    if (l > g_.edge_count()) {
      visit_(current_);
      return;
    }
    const Edge& e = g_.edge(l);
    std::size_t block = g_.block_index(l);
    for (std::size_t p = 0; p < current_.paths.size(); ++p) {
      Path& path = current_.paths[p];
      Label last = path.back();
      if (g_.edge(last).head != e.tail || g_.block_index(last) == block) continue;
      path.push_back(l);
      step(l + 1);
      current_.paths[p].pop_back();
    }
    current_.paths.push_back({l});
    step(l + 1);
    current_.paths.pop_back();
  }

  const LabeledDigraph& g_;
  const DecompositionVisitor& visit_;
  Decomposition current_;
};

class PrincipalCounter {
 public:
  PrincipalCounter(const LabeledDigraph& g, const VertexMultiset& sources)
      : g_(g), budget_(sources.dense(g.vertex_count())) {
    for (std::uint32_t c : budget_) remaining_opens_ += c;
  }

  Integer run() {
    count_ = 0;
    step(1);
    return count_;
  }

 private:
  void step(Label l) {
    if (remaining_opens_ > g_.edge_count() + 1 - l) return;
    if (l > g_.edge_count()) {
      if (remaining_opens_ == 0) ++count_;
      return;
    }
    const Edge& e = g_.edge(l);
    std::size_t block = g_.block_index(l);
    for (std::size_t p = 0; p < ends_.size(); ++p) {
      Label last = ends_[p];
      if (g_.edge(last).head != e.tail || g_.block_index(last) == block) continue;
      ends_[p] = l;
      step(l + 1);
      ends_[p] = last;
    }
    if (budget_[e.tail - 1] > 0) {
      --budget_[e.tail - 1];
      --remaining_opens_;
      ends_.push_back(l);
      step(l + 1);
      ends_.pop_back();
      ++remaining_opens_;
      ++budget_[e.tail - 1];
    }
  }

  const LabeledDigraph& g_;
  std::vector<std::uint32_t> budget_;
  std::size_t remaining_opens_ = 0;
  std::vector<Label> ends_;  // last label of each open path
  Integer count_;
};

}  // namespace

void for_each_principal(const LabeledDigraph& g, const DecompositionVisitor& visit) {
  PrincipalSearch(g, visit).run();
}

std::vector<Decomposition> enumerate_principal(const LabeledDigraph& g) {
  std::vector<Decomposition> out;
  for_each_principal(g, [&](const Decomposition& d) { out.push_back(d); });
  std::sort(out.begin(), out.end());
  return out;
}

Integer stirling_count(const LabeledDigraph& g, const VertexMultiset& sources) {
  if (!out_multiset(g).contains(sources)) return 0;
  return PrincipalCounter(g, sources).run();
}

// ---------------------------------------------------------------------------
// Recurrence

namespace {

class RecurrenceSolver {
 public:
  explicit RecurrenceSolver(const LabeledDigraph& g) : g_(g), degrees_(g) {}

  Integer solve(std::size_t prefix, std::vector<std::int64_t> sources) {
    if (prefix == 0) {
      return std::all_of(sources.begin(), sources.end(), [](std::int64_t c) { return c == 0; }) ? 1 : 0;
    }
    auto key = std::make_pair(prefix, sources);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Integer result = 0;
    const auto& v_out = degrees_.out[prefix];
    const auto& v_in = degrees_.in[prefix];
    bool feasible = true;
    std::vector<std::int64_t> sinks(g_.vertex_count());
    for (std::size_t v = 0; v < g_.vertex_count(); ++v) {
      sinks[v] = v_in[v] + sources[v] - v_out[v];
      if (sources[v] > v_out[v] || sinks[v] < 0) feasible = false;
    }
    const Label label = static_cast<Label>(prefix);
    const Edge& e = g_.edge(label);
    if (feasible && sinks[e.head - 1] > 0) {
      if (sources[e.tail - 1] > 0) {
        auto reduced = sources;
        --reduced[e.tail - 1];
        result += solve(prefix - 1, std::move(reduced));
      }
      // Paths of G' ending at i: the i's among (J - {j}) ⊎ {i}.
      std::int64_t k_i = sinks[e.tail - 1] - (e.head == e.tail ? 1 : 0) + 1;
      std::int64_t r_e = block_heads_before(g_, label, e.tail);
      if (k_i - r_e != 0) {
        Integer tail_count = solve(prefix - 1, sources);
        result += Integer(static_cast<long>(k_i - r_e)) * tail_count;
      }
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  const LabeledDigraph& g_;
  PrefixDegrees degrees_;
  std::map<std::pair<std::size_t, std::vector<std::int64_t>>, Integer> memo_;
};

}  // namespace

Integer stirling_recurrence(const LabeledDigraph& g, const VertexMultiset& sources) {
  for (const auto& [v, c] : sources.counts()) {
    if (v < 1 || v > g.vertex_count()) return 0;
  }
  std::vector<std::int64_t> dense(g.vertex_count(), 0);
  for (const auto& [v, c] : sources.counts()) dense[v - 1] = c;
  return RecurrenceSolver(g).solve(g.edge_count(), std::move(dense));
}

StirlingTable stirling_table(const LabeledDigraph& g) {
  const std::size_t n = g.vertex_count();
  PrefixDegrees degrees(g);
  std::map<std::vector<std::int64_t>, Integer> layer;
  layer.emplace(std::vector<std::int64_t>(n, 0), 1);
  for (Label l = 1; l <= g.edge_count(); ++l) {
    const Edge& e = g.edge(l);
    const std::int64_t r = block_heads_before(g, l, e.tail);
    const auto& out_before = degrees.out[l - 1];
    const auto& in_before = degrees.in[l - 1];
    std::map<std::vector<std::int64_t>, Integer> next;
    for (const auto& [sources, count] : layer) {
      auto opened = sources;
      ++opened[e.tail - 1];
      next[opened] += count;
      std::int64_t ending_here = in_before[e.tail - 1] + sources[e.tail - 1] - out_before[e.tail - 1];
      if (ending_here - r > 0) next[sources] += count * static_cast<long>(ending_here - r);
    }
    layer = std::move(next);
  }
  StirlingTable table;
  for (const auto& [sources, count] : layer) {
    if (count == 0) continue;
    std::vector<std::uint32_t> dense(sources.begin(), sources.end());
    table.emplace(VertexMultiset::from_dense(dense), count);
  }
  return table;
}

StirlingTable stirling_table_by_enumeration(const LabeledDigraph& g) {
  StirlingTable table;
  for_each_principal(g, [&](const Decomposition& d) { table[sources(g, d)] += 1; });
  return table;
}

// ---------------------------------------------------------------------------
// All decompositions

namespace {

class DecompositionSearch {
 public:
  static constexpr std::uint32_t kNone = 0;

  DecompositionSearch(const LabeledDigraph& g, const std::optional<VertexMultiset>& sources,
                      const DecompositionVisitor& visit)
      : g_(g), visit_(visit), prev_(g.edge_count() + 1, kNone), taken_(g.edge_count() + 1, false) {
    if (sources) {
      budget_ = sources->dense(g.vertex_count());
      restricted_ = true;
      for (std::uint32_t c : budget_) remaining_opens_ += c;
    }
  }

  void run() {
    if (restricted_ && !out_multiset(g_).contains(sourcesum())) return;
    step(1);
  }

 private:
  VertexMultiset sourcesum() const { return VertexMultiset::from_dense(budget_); }

  bool closes_cycle(Label f, Label e) const {
    for (Label x = e; x != kNone && x < f; x = prev_[x]) {
      if (prev_[x] == f) return true;
    }
    return e == f;
  }

  void emit() {
    std::vector<Label> next(g_.edge_count() + 1, kNone);
    for (Label l = 1; l <= g_.edge_count(); ++l) {
      if (prev_[l] != kNone) next[prev_[l]] = l;
    }
    Decomposition d;
    for (Label l = 1; l <= g_.edge_count(); ++l) {
      if (prev_[l] != kNone) continue;
      Path p;
      for (Label x = l; x != kNone; x = next[x]) p.push_back(x);
      d.paths.push_back(std::move(p));
    }
    d.canonicalize();
    visit_(d);
  }

  void step(Label f) {
    if (restricted_ && remaining_opens_ > g_.edge_count() + 1 - f) return;
    if (f > g_.edge_count()) {
      if (!restricted_ || remaining_opens_ == 0) emit();
      return;
    }
    const Vertex tail = g_.edge(f).tail;
    if (!restricted_ || budget_[tail - 1] > 0) {
      if (restricted_) {
        --budget_[tail - 1];
        --remaining_opens_;
      }
      step(f + 1);
      if (restricted_) {
        ++budget_[tail - 1];
        ++remaining_opens_;
      }
    }
    for (Label e = 1; e <= g_.edge_count(); ++e) {
      if (e == f || taken_[e] || g_.edge(e).head != tail) continue;
      if (e < f && closes_cycle(f, e)) continue;
      taken_[e] = true;
      prev_[f] = e;
      step(f + 1);
      prev_[f] = kNone;
      taken_[e] = false;
    }
  }

  const LabeledDigraph& g_;
  const DecompositionVisitor& visit_;
  std::vector<Label> prev_;   // prev_[l] = predecessor of edge l in its path
  std::vector<bool> taken_;   // edge already has a successor
  std::vector<std::uint32_t> budget_;
  bool restricted_ = false;
  std::size_t remaining_opens_ = 0;
};

}  // namespace

void for_each_decomposition(const LabeledDigraph& g, const std::optional<VertexMultiset>& sources,
                            const DecompositionVisitor& visit) {
  require_blockless(g, "decomposition enumeration without the increasing condition");
  if (sources) {
    for (const auto& [v, c] : sources->counts()) {
      if (v < 1 || v > g.vertex_count()) return;
    }
  }
  DecompositionSearch(g, sources, visit).run();
}

std::vector<Decomposition> enumerate_all_decompositions(const LabeledDigraph& g,
                                                        const VertexMultiset& sources) {
  std::vector<Decomposition> out;
  for_each_decomposition(g, sources, [&](const Decomposition& d) { out.push_back(d); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pathweyl
