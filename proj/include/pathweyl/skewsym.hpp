#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "pathweyl/bigint.hpp"
#include "pathweyl/decomposition.hpp"
#include "pathweyl/digraph.hpp"
#include "pathweyl/multiset.hpp"
#include "pathweyl/weyl.hpp"

namespace pathweyl {

/// Source multiset -> E_G(I) (signed). Keys are the source multisets of all
/// decompositions; entries may be zero.
using EGTable = std::map<VertexMultiset, Integer>;

/// Largest edge count for which the m! relabeling sum is attempted.
inline constexpr std::size_t kDefaultSymmetrizationBudget = 8;

/// E_G(I) = Σ_{σ∈S_m} sgn(σ) S_{G^σ}(I). Throws BudgetExceeded above `max_edges`.
Integer eg_symmetrization(const LabeledDigraph& g, const VertexMultiset& sources,
                          std::size_t max_edges = kDefaultSymmetrizationBudget);
/// The same sum for every source multiset at once (non-zero entries only).
EGTable eg_symmetrization_table(const LabeledDigraph& g,
                                std::size_t max_edges = kDefaultSymmetrizationBudget);

/// E_G(I) = Σ over all decompositions P with sources I of the signed shuffle sum E(P).
Integer eg_decomposition(const LabeledDigraph& g, const VertexMultiset& sources);
EGTable eg_table(const LabeledDigraph& g);

/// One decomposition with its signed shuffle sum, for reports.
struct DecompositionTerm {
  Decomposition decomposition;
  Integer shuffle_sum;
};
std::vector<DecompositionTerm> eg_terms(const LabeledDigraph& g, const VertexMultiset& sources);

/// Graph with edge (i, j) for every argument x_i ∂_j, labels in argument order.
/// Throws PreconditionError on any argument outside the A_n^(1,1) basis.
LabeledDigraph edge_graph(std::span<const WeylMonomial> args);

/// s_m(w_1, ..., w_m) = Σ_I E_G(I) x^I ∂^J for basis monomials w = x_i ∂_j.
WeylElement s_m_evaluate(std::span<const WeylMonomial> args);
/// Σ_σ sgn(σ) w_{σ(1)} ⋯ w_{σ(m)} by m! normally ordered products.
WeylElement alternating_sum_direct(std::span<const WeylMonomial> args,
                                   std::size_t max_args = kDefaultSymmetrizationBudget);

struct IdentityWitness {
  std::vector<Edge> edges;   // arguments x_i ∂_j as edges (i, j)
  VertexMultiset sources;
  VertexMultiset sinks;
  Integer coefficient;       // E_G(sources), nonzero
};

struct IdentityVerdict {
  bool holds = true;
  std::optional<IdentityWitness> witness;
  std::uint64_t raw_cases = 0;         // C(n², m)
  std::uint64_t cases_checked = 0;     // evaluated argument sets
  std::uint64_t symmetry_classes = 0;  // orbits under vertex relabeling
};

struct IdentityCheckOptions {
  bool long_running = false;
  /// Evaluate one representative per vertex-relabeling orbit.
  bool symmetry_reduction = false;
  unsigned threads = 1;
  /// Without long_running: refuse sweeps over this many cases or argument counts above max_args.
  std::uint64_t case_budget = 20000;
  std::size_t max_args = 8;
};

/// Sweeps every m-subset of the n² basis monomials x_i ∂_j and reports whether
/// s_m vanishes on all of them. Subsets suffice: repeated arguments give zero
/// and reordering only flips the sign. The witness is the first failing
/// subset in lexicographic order, independent of thread count.
IdentityVerdict identity_check(std::size_t n, std::size_t m, const IdentityCheckOptions& options = {});

/// n ≥ 4. Even n: doubled n-cycle, e_1..e_n forward (i -> i+1, n -> 1) and
/// e_{n+1}..e_{2n} backward (1 -> n, n -> n-1, ..., 2 -> 1). Odd n: the same on
/// vertices 1..n-1 (2n-2 edges) plus e_{2n-1} = (2, n), e_{2n} = (n, 2).
LabeledDigraph fig3_graph(std::size_t n);

struct NCommutatorWitness {
  LabeledDigraph graph;
  VertexMultiset sources;
  VertexMultiset sinks;
  Integer coefficient;
  WeylMonomial term;
};

/// Staircase x_1∂_1, x_1∂_2, x_2∂_2, ..., x_{n-1}∂_n, x_n∂_n truncated to N
/// arguments (2 < N < 2n). Odd N reads E_G({1,1}), even N reads E_G({1,2});
/// the term has ∂-degree 2, so s_N leaves A_n^(1,1) whenever it is nonzero.
NCommutatorWitness ncommutator_witness(std::size_t n, std::size_t N);

/// Staircase edges alone.
std::vector<Edge> staircase_edges(std::size_t n, std::size_t N);

}  // namespace pathweyl
