#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "netsel/absorb.hpp"
#include "support.hpp"

using namespace netsel;
using namespace testsupport;
using Catch::Approx;

namespace {

// The 15-node in-tree: a balanced 7-node branch and a 7-node chain feeding
// the root.
DirectedGraph two_branch_tree() {
  std::vector<std::pair<NodeId, NodeId>> edges = {{1, 0}, {2, 1}, {3, 1}, {4, 2}, {5, 2},
                                                  {6, 3}, {7, 3}, {8, 0}};
  for (int v = 9; v <= 14; ++v) edges.emplace_back(v, v - 1);
  return DirectedGraph(15, std::move(edges));
}

int predecessor_count_after_cut(const DirectedGraph& g, const NodeSet& s, NodeId v) {
  return static_cast<int>(predecessors(remove_outgoing(g, s), v).size());
}

}  // namespace

TEST_CASE("absorb_bruteforce") {
  SECTION("4-path splits evenly") {
    const Selection sel = absorb_bruteforce(path_graph(4), 2, Kind::pagerank);
    CHECK(sel.members == NodeSet{1, 3});
    CHECK(*sel.group_score == Approx(2.0).margin(1e-3));
  }
  SECTION("katz favors the larger clique wholesale") {
    const Selection sel = absorb_bruteforce(two_cliques(4, 8), 3, Kind::katz);
    CHECK(sel.members == NodeSet{4, 5, 6});
  }
  SECTION("selecting every node scores 1") {
    const Selection sel = absorb_bruteforce(path_graph(3), 3, Kind::pagerank);
    CHECK(sel.members == NodeSet{0, 1, 2});
    CHECK(*sel.group_score == Approx(1.0).margin(1e-6));
  }
  SECTION("node cap is a refusal error") {
    CHECK_THROWS_AS(absorb_bruteforce(path_graph(21), 2, Kind::pagerank), SizeCapError);
  }
  SECTION("subsets with a saturated feeding cycle are skipped and counted") {
    std::vector<std::pair<NodeId, NodeId>> edges;
    add_clique(edges, 0, 3);
    edges.emplace_back(0, 3);
    const DirectedGraph g(4, std::move(edges));
    const Selection sel = absorb_bruteforce(g, 1, Kind::katz);
    CHECK(sel.divergent_skipped == 1);  // the {3} subset
    CHECK(sel.members == NodeSet{0});   // symmetric scores, lexicographic tie
  }
}

TEST_CASE("pi_decide") {
  SECTION("6-path with p=2 selects the two even splitters") {
    const auto witness = pi_decide(path_graph(6), 2, 2);
    REQUIRE(witness);
    CHECK(*witness == NodeSet{2, 5});
  }
  SECTION("4-leaf star cannot seat two") {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int leaf = 0; leaf < 4; ++leaf) edges.emplace_back(leaf, 4);
    const DirectedGraph star(5, std::move(edges));
    CHECK_FALSE(pi_decide(star, 2, 2));
    CHECK(pi_decide(star, 2, 1));
  }
  SECTION("p=0 accepts any feasible size") {
    const DirectedGraph g = path_graph(5);
    for (int ell = 0; ell <= 5; ++ell) CHECK(pi_decide(g, 0, ell));
    CHECK_FALSE(pi_decide(g, 0, 6));
  }
  SECTION("witnesses are valid by construction") {
    const CounterRng rng(91);
    for (int trial = 0; trial < 40; ++trial) {
      const DirectedGraph g = random_functional(rng.derive(1, trial), 10, 0.8);
      for (int p = 0; p <= 3; ++p)
        for (int ell = 1; ell <= 3; ++ell) {
          const auto witness = pi_decide(g, p, ell);
          if (!witness) continue;
          REQUIRE(static_cast<int>(witness->size()) == ell);
          for (NodeId v : *witness) CHECK(predecessor_count_after_cut(g, *witness, v) >= p);
        }
    }
  }
  SECTION("monotone in both p and ell") {
    const CounterRng rng(92);
    for (int trial = 0; trial < 30; ++trial) {
      const DirectedGraph g = random_functional(rng.derive(1, trial), 9, 0.8);
      for (int p = 1; p <= 3; ++p)
        for (int ell = 1; ell <= 3; ++ell)
          if (pi_decide(g, p, ell)) {
            CHECK(pi_decide(g, p - 1, ell));
            CHECK(pi_decide(g, p, ell - 1));
          }
    }
  }
  SECTION("non-functional input is a class error") {
    CHECK_THROWS_AS(pi_decide(clique_graph(3), 1, 1), InvalidArgument);
  }
}

TEST_CASE("absorb_functional") {
  SECTION("12-path splits into thirds") {
    const Selection sel = absorb_functional(path_graph(12), 3);
    CHECK(sel.members == NodeSet{3, 7, 11});
    CHECK(*sel.min_predecessors == 3);
    CHECK(*sel.group_score == Approx(4.0));
  }
  SECTION("two-branch tree splits into subtrees of size 3") {
    const Selection sel = absorb_functional(two_branch_tree(), 5);
    CHECK(*sel.min_predecessors == 2);
    REQUIRE(sel.members.size() == 5);
    for (NodeId v : sel.members) CHECK(predecessor_count_after_cut(two_branch_tree(), sel.members, v) == 2);
  }
  SECTION("single pick on a cycle keeps everyone upstream") {
    const Selection sel = absorb_functional(cycle_graph(6), 1);
    CHECK(sel.members.size() == 1);
    CHECK(*sel.min_predecessors == 5);
  }
  SECTION("matches brute force on random functional graphs") {
    const CounterRng rng(93);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 4 + static_cast<int>(rng.below(7, 0, trial));
      const DirectedGraph g = random_functional(rng.derive(1, trial), n, 0.8);
      const int k = 1 + static_cast<int>(rng.below(3, 2, trial));
      const Selection exact = absorb_functional(g, k);
      const Selection brute = absorb_bruteforce(g, k, Kind::pagerank);
      REQUIRE(brute.group_score);
      CHECK(*exact.group_score == Approx(*brute.group_score).margin(1e-3));
      // Both witnesses achieve the shared objective.
      const LimitScore via_witness = limit_group_score(g, exact.members, Kind::pagerank);
      CHECK(via_witness.score == Approx(*brute.group_score).margin(1e-3));
    }
  }
}

TEST_CASE("absorb_bipartite") {
  SECTION("coincides with the top rule when enough candidates exist") {
    const CounterRng rng(94);
    int tested = 0;
    for (int trial = 0; trial < 25; ++trial) {
      const DirectedGraph g = random_bipartite(rng.derive(1, trial), 4, 5);
      const int v2 = static_cast<int>(classify(g).bipartition->second.size());
      if (v2 < 2) continue;
      for (int k = 1; k <= v2; ++k) {
        CHECK(absorb_bipartite(g, k, Kind::pagerank).members == top_rank(g, k).members);
        CHECK(absorb_bipartite(g, k, Kind::katz).members == top_katz(g, k).members);
      }
      ++tested;
    }
    CHECK(tested > 10);
  }
  SECTION("padding once the candidate side runs out") {
    DirectedGraph g(6, {{0, 4}, {1, 4}, {2, 5}, {3, 5}});
    const Selection sel = absorb_bipartite(g, 4, Kind::pagerank);
    CHECK(sel.members == NodeSet{0, 1, 4, 5});
    CHECK(*sel.group_score == Approx(1.0));
  }
  SECTION("k equal to the candidate side returns exactly it") {
    DirectedGraph g(6, {{0, 4}, {1, 4}, {2, 5}, {3, 5}});
    const Selection sel = absorb_bipartite(g, 2, Kind::pagerank);
    NodeSet sorted = sel.members;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == NodeSet{4, 5});
  }
  SECTION("non-bipartite input is a class error") {
    CHECK_THROWS_AS(absorb_bipartite(cycle_graph(3), 1, Kind::pagerank), InvalidArgument);
  }
}

TEST_CASE("absorb_exact dispatch") {
  CHECK(absorb_exact(path_graph(12), 3, Kind::pagerank).members == NodeSet{3, 7, 11});
  DirectedGraph bip(4, {{0, 2}, {0, 3}, {1, 2}});
  CHECK(absorb_exact(bip, 1, Kind::katz).members == NodeSet{2});
  CHECK(absorb_exact(two_cliques(4, 8), 3, Kind::katz).members == NodeSet{4, 5, 6});
  CHECK_THROWS_AS(absorb_exact(clique_graph(21), 2, Kind::pagerank), SizeCapError);
}

TEST_CASE("build_is_reduction") {
  SECTION("triangle instance sizes") {
    const ReductionInstance inst = build_is_reduction(3, {{0, 1}, {1, 2}, {0, 2}}, 1);
    CHECK(inst.graph.node_count() == 15);
    CHECK(inst.k == 13);
    CHECK(inst.c > 1.0);
    // Gadget shape: mutual edges plus n+1 shared sinks per base edge.
    CHECK(inst.graph.has_edge(0, 1));
    CHECK(inst.graph.has_edge(1, 0));
    const NodeId x = inst.new_node(0, 0);
    CHECK(inst.graph.has_edge(0, x));
    CHECK(inst.graph.has_edge(1, x));
    CHECK(inst.graph.out_degree(x) == 0);
    // c sits below the smallest positive in-contribution.
    int max_out = 0;
    for (NodeId v = 0; v < inst.graph.node_count(); ++v)
      max_out = std::max(max_out, inst.graph.out_degree(v));
    CHECK(inst.c - 1.0 < 1.0 / (2.0 * max_out));
  }
  SECTION("4-cycle instance sizes") {
    const ReductionInstance inst = build_is_reduction(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, 2);
    CHECK(inst.graph.node_count() == 24);
    CHECK(inst.k == 22);
  }
  SECTION("degree precondition enforced") {
    CHECK_THROWS_AS(build_is_reduction(3, {{0, 1}, {1, 2}}, 1), InvalidArgument);
  }
}
