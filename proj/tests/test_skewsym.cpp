#include <doctest.h>

#include "oracles.hpp"
#include "pathweyl/errors.hpp"
#include "pathweyl/shuffle.hpp"
#include "pathweyl/skewsym.hpp"

using namespace pathweyl;

namespace {

LabeledDigraph two_cycle() { return LabeledDigraph(2, {{1, 2}, {2, 1}}); }

std::vector<WeylMonomial> args_of(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<WeylMonomial> out;
  for (const Edge& e : edges) out.push_back(WeylMonomial::basis(n, e.tail, e.head));
  return out;
}

}  // namespace

TEST_CASE("E_G on the 2-cycle") {
  CHECK(eg_symmetrization(two_cycle(), {1}) == 1);
  CHECK(eg_decomposition(two_cycle(), {1}) == 1);
  CHECK(eg_decomposition(two_cycle(), {2}) == -1);
  CHECK(eg_table(two_cycle()) == EGTable{{{1}, 1}, {{2}, -1}, {{1, 2}, 0}});
  CHECK(eg_symmetrization_table(two_cycle()) == EGTable{{{1}, 1}, {{2}, -1}});
}

TEST_CASE("E_G at I = V_out vanishes") {
  oracle::Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = oracle::random_graph(rng, 3, oracle::uniform(rng, 2, 6), false);
    CHECK(eg_symmetrization(g, out_multiset(g)) == 0);
    CHECK(eg_decomposition(g, out_multiset(g)) == 0);
  }
}

TEST_CASE("single edge") {
  LabeledDigraph g(3, {{2, 3}});
  CHECK(eg_decomposition(g, {2}) == 1);
  CHECK(eg_table(g) == EGTable{{{2}, 1}});
}

TEST_CASE("symmetrization refuses large graphs") {
  LabeledDigraph g(1, std::vector<Edge>(9, Edge{1, 1}));
  CHECK_THROWS_AS(eg_symmetrization(g, {1}), BudgetExceeded);
  CHECK_NOTHROW(eg_symmetrization(g, {1}, 9));
}

TEST_CASE("decomposition terms carry shuffle sums") {
  auto terms = eg_terms(fig3_graph(4), {1, 1});
  Integer sum = 0;
  for (const auto& t : terms) {
    std::vector<std::vector<Label>> chains(t.decomposition.paths.begin(), t.decomposition.paths.end());
    CHECK(t.shuffle_sum == oracle::shuffle_sign_sum(chains));
    sum += t.shuffle_sum;
  }
  CHECK(terms.size() == 4);
  CHECK(sum == 4);
}

TEST_CASE("Fig. 3 graphs") {
  auto g4 = fig3_graph(4);
  CHECK(g4.edge_count() == 8);
  CHECK(g4.vertex_count() == 4);
  std::vector<Edge> edges(g4.edges().begin(), g4.edges().end());
  CHECK(edges == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 4}, {4, 3}, {3, 2}, {2, 1}});
  CHECK(eg_decomposition(g4, {1, 1}) == 4);
  CHECK(eg_table(g4).at({1, 1}) == 4);

  auto g5 = fig3_graph(5);
  CHECK(g5.edge_count() == 10);
  CHECK(g5.edge(9) == Edge{2, 5});
  CHECK(g5.edge(10) == Edge{5, 2});
  CHECK(eg_decomposition(g5, {1, 1}) == 15);
  CHECK(eg_decomposition(fig3_graph(6), {1, 1}) == 18);
  CHECK_THROWS_AS(fig3_graph(3), PreconditionError);
}

TEST_CASE("Fig. 3 value for n = 4 by relabelings") {
  CHECK(eg_symmetrization(fig3_graph(4), {1, 1}) == 4);
}

TEST_CASE("decomposition route matches relabelings and the set-partition oracle") {
  oracle::Rng rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = oracle::uniform(rng, 1, 4);
    auto g = oracle::random_graph(rng, n, oracle::uniform(rng, 1, 5), false);
    auto table = eg_table(g);
    auto relabeled = eg_symmetrization_table(g);
    for (const auto& sources : sub_multisets(out_multiset(g))) {
      if (sources.empty()) continue;
      Integer value = eg_decomposition(g, sources);
      CHECK(value == eg_symmetrization(g, sources));
      CHECK(value == oracle::symmetrized(g, sources));
      auto it = table.find(sources);
      CHECK((it == table.end() ? Integer(0) : it->second) == value);
      auto jt = relabeled.find(sources);
      CHECK((jt == relabeled.end() ? Integer(0) : jt->second) == value);
    }
  }
}

TEST_CASE("s_m by E_G matches the alternating sum") {
  oracle::Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = oracle::uniform(rng, 1, 3);
    std::size_t m = oracle::uniform(rng, 1, 6);
    auto args = args_of(n, oracle::random_edges(rng, n, m));
    CHECK(s_m_evaluate(args) == alternating_sum_direct(args));
  }
}

TEST_CASE("s_m examples") {
  CHECK(s_m_evaluate(args_of(1, {{1, 1}, {1, 1}})).is_zero());
  CHECK(s_m_evaluate(args_of(2, {{1, 1}, {2, 2}, {1, 2}, {2, 1}})).is_zero());
  CHECK_FALSE(s_m_evaluate(args_of(2, {{1, 2}, {2, 1}})).is_zero());
  std::vector<WeylMonomial> bad{WeylMonomial::basis(2, 1, 1), WeylMonomial::from_indices(2, std::vector<Vertex>{1, 2}, std::vector<Vertex>{1, 2})};
  CHECK_THROWS_AS(s_m_evaluate(bad), PreconditionError);
}

TEST_CASE("s_m is skew-symmetric") {
  oracle::Rng rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = oracle::uniform(rng, 2, 3);
    std::size_t m = oracle::uniform(rng, 2, 6);
    auto args = args_of(n, oracle::random_edges(rng, n, m));
    auto value = s_m_evaluate(args);
    std::size_t a = oracle::uniform(rng, 0, m - 1), b = oracle::uniform(rng, 0, m - 1);
    if (a == b) continue;
    std::swap(args[a], args[b]);
    CHECK(s_m_evaluate(args) == -value);
    args[a] = args[b];
    CHECK(s_m_evaluate(args).is_zero());
  }
}

TEST_CASE("Euler-tour signs cancel for 2n edges on n vertices") {
  oracle::Rng rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = oracle::uniform(rng, 2, 3);
    auto g = oracle::random_graph(rng, n, 2 * n, false);
    for (Vertex v = 1; v <= n; ++v) CHECK(eg_decomposition(g, {v}) == 0);
  }
}

TEST_CASE("identity sweeps") {
  auto v1 = identity_check(1, 2);
  CHECK(v1.holds);
  CHECK(v1.raw_cases == 0);
  auto v2 = identity_check(2, 4);
  CHECK(v2.holds);
  CHECK(v2.raw_cases == 1);
  CHECK(v2.cases_checked == 1);
  auto v3 = identity_check(3, 6);
  CHECK(v3.holds);
  CHECK(v3.raw_cases == 84);
  CHECK(v3.cases_checked == 84);
  CHECK(v3.symmetry_classes == 17);
  CHECK(identity_check(2, 4).symmetry_classes == 1);
}

TEST_CASE("lower arities fail on A_n^(1,1)") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto v = identity_check(n, 2 * n - 1);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    LabeledDigraph g(n, v.witness->edges);
    CHECK(eg_decomposition(g, v.witness->sources) == v.witness->coefficient);
    CHECK(v.witness->coefficient != 0);
  }
}

TEST_CASE("pruned and unpruned sweeps agree") {
  for (std::size_t m = 1; m <= 6; ++m) {
    IdentityCheckOptions pruned;
    pruned.symmetry_reduction = true;
    auto a = identity_check(3, m);
    auto b = identity_check(3, m, pruned);
    CHECK(a.holds == b.holds);
    CHECK(a.symmetry_classes == b.symmetry_classes);
    if (!a.holds) {
      LabeledDigraph g(3, b.witness->edges);
      CHECK(eg_decomposition(g, b.witness->sources) == b.witness->coefficient);
    }
  }
}

TEST_CASE("sweeps are deterministic across thread counts") {
  IdentityCheckOptions threaded;
  threaded.threads = 4;
  threaded.long_running = true;
  IdentityCheckOptions single;
  single.long_running = true;
  auto a = identity_check(3, 5, single);
  auto b = identity_check(3, 5, threaded);
  CHECK(a.holds == b.holds);
  REQUIRE(a.witness.has_value());
  REQUIRE(b.witness.has_value());
  CHECK(a.witness->edges == b.witness->edges);
  CHECK(a.witness->coefficient == b.witness->coefficient);
  CHECK(a.cases_checked == b.cases_checked);
}

TEST_CASE("sweep budget") {
  CHECK_THROWS_AS(identity_check(4, 10), BudgetExceeded);
  CHECK_THROWS_AS(identity_check(3, 0), PreconditionError);
}

TEST_CASE("staircase witnesses") {
  CHECK(staircase_edges(3, 5) == std::vector<Edge>{{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}});
  auto odd = ncommutator_witness(3, 3);
  CHECK(odd.sources == VertexMultiset{1, 1});
  CHECK(odd.coefficient == 1);
  CHECK(odd.term.d_degree() == 2);

  // Values below come from the decomposition route and the relabeling oracle;
  // for even N = 2r they equal q(1, 2r-1) + q(2, 2r-2) = r.
  auto even = ncommutator_witness(3, 4);
  CHECK(even.sources == VertexMultiset{1, 2});
  CHECK(even.sinks == VertexMultiset{2, 3});
  CHECK(even.coefficient == 2);
  CHECK(even.coefficient == eg_symmetrization(even.graph, even.sources));
  CHECK(ncommutator_witness(5, 8).coefficient == 4);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t N = 3; N < 2 * n; ++N) {
      auto w = ncommutator_witness(n, N);
      std::size_t r = (N + 1) / 2;
      CHECK(w.coefficient == (N % 2 ? Integer(q(1, 2 * r - 2)) : Integer(q(1, 2 * r - 1) + q(2, 2 * r - 2))));
      auto args = args_of(n, staircase_edges(n, N));
      if (N <= 6) CHECK(alternating_sum_direct(args).coefficient(w.term) == w.coefficient);
    }
  }
  CHECK_THROWS_AS(ncommutator_witness(3, 2), PreconditionError);
  CHECK_THROWS_AS(ncommutator_witness(3, 6), PreconditionError);
}
