#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "netsel/registry.hpp"
#include "netsel/rules.hpp"
#include "support.hpp"

using namespace netsel;
using namespace testsupport;
using Catch::Approx;

namespace {

NodeSet sorted_members(const Selection& sel) {
  NodeSet m = sel.members;
  std::sort(m.begin(), m.end());
  return m;
}

// Voters 0-9 in blocks of 4/3/3, candidates 10-18 in blocks of 3, complete
// within-block edges (the bipartite three-group fixture).
DirectedGraph three_block_bipartite() {
  std::vector<std::pair<NodeId, NodeId>> edges;
  auto block_of_voter = [](int i) { return i < 4 ? 0 : i < 7 ? 1 : 2; };
  for (int i = 0; i < 10; ++i)
    for (int c = 0; c < 9; ++c)
      if (c / 3 == block_of_voter(i)) edges.emplace_back(i, 10 + c);
  return DirectedGraph(19, std::move(edges));
}

int candidate_block(NodeId v) { return (v - 10) / 3; }

}  // namespace

TEST_CASE("top rules") {
  SECTION("path: the last k nodes") {
    const Selection sel = top_rank(path_graph(12), 3);
    CHECK(sel.members == std::vector<NodeId>{11, 10, 9});
  }
  SECTION("fixture graph: the fed clique outranks the 2-cycle") {
    const DirectedGraph g = two_cycle_and_fed_clique();
    CHECK(sorted_members(top_rank(g, 3)) == NodeSet{2, 3, 4});
    CHECK(sorted_members(top_katz(g, 3)) == NodeSet{2, 3, 4});
  }
  SECTION("edgeless graph falls back to lowest ids") {
    CHECK(top_rank(DirectedGraph(4, {}), 2).members == std::vector<NodeId>{0, 1});
  }
}

TEST_CASE("mes rules") {
  SECTION("three-block bipartite fixture: one candidate per block") {
    const DirectedGraph g = three_block_bipartite();
    for (const Selection& sel : {mes_rank(g, 3), mes_katz(g, 3)}) {
      REQUIRE(sel.members.size() == 3);
      std::vector<int> blocks;
      for (NodeId v : sel.members) {
        REQUIRE(v >= 10);
        blocks.push_back(candidate_block(v));
      }
      std::sort(blocks.begin(), blocks.end());
      CHECK(blocks == std::vector<int>{0, 1, 2});
    }
    // The big block is served first, lexicographic ids within ties.
    CHECK(mes_rank(g, 3).members == std::vector<NodeId>{10, 13, 16});
  }
  SECTION("path at the decay limit selects the last k nodes") {
    const Selection sel = mes_rank(path_graph(12), 3, 1.0 - 1e-6);
    CHECK(sorted_members(sel) == NodeSet{9, 10, 11});
  }
  SECTION("single 2-cycle resolves the symmetric tie by id") {
    const Selection sel = mes_rank(cycle_graph(2), 1);
    CHECK(sel.members == std::vector<NodeId>{0});
  }
}

TEST_CASE("bos rules") {
  SECTION("coincides with mes when no completion was needed") {
    const DirectedGraph g = three_block_bipartite();
    // Here MES itself stalls (escalation was needed), but BOS must still
    // cover each block once.
    const Selection sel = bos_rank(g, 3);
    std::vector<int> blocks;
    for (NodeId v : sel.members) blocks.push_back(candidate_block(v));
    std::sort(blocks.begin(), blocks.end());
    CHECK(blocks == std::vector<int>{0, 1, 2});
  }
  SECTION("mes-affordable graphs give identical selections") {
    // Literal-diagonal profiles let a node's own budget count, so plain MES
    // regularly fills k; on those graphs BOS must match member for member.
    const CounterRng rng(55);
    int matched = 0;
    for (int trial = 0; trial < 25; ++trial) {
      const DirectedGraph g = random_digraph(rng.derive(1, trial), 8, 0.5);
      const Selection plain = mes_rank(g, 2, {}, false, false);
      if (plain.members.size() < 2) continue;
      CHECK(bos_rank(g, 2, {}, false).members == plain.members);
      ++matched;
    }
    CHECK(matched > 5);
  }
  SECTION("disjoint 2-cycles under the overspend contract") {
    DirectedGraph g(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
    // With self-utility zeroed every pool is a single voter's share, all
    // rounds overspend, and the id tie-break keeps the first cycle.
    CHECK(sorted_members(bos_rank(g, 2)) == NodeSet{0, 1});
    // The literal diagonal pools each cycle's full budget and buys one
    // candidate per cycle through plain MES rounds.
    CHECK(sorted_members(bos_rank(g, 2, {}, false)) == NodeSet{0, 2});
  }
}

TEST_CASE("seq_absorb") {
  SECTION("4-path picks the sink, then the even splitter") {
    const Selection sel = seq_absorb(path_graph(4), 2, Kind::pagerank, 1.0 - 1e-6);
    CHECK(sel.members == std::vector<NodeId>{3, 1});
    CHECK(*sel.group_score == Approx(2.0).margin(1e-4));
  }
  SECTION("k=1 maximizes the single-node absorbed score") {
    const Selection sel = seq_absorb(path_graph(4), 1, Kind::pagerank, 1.0 - 1e-6);
    CHECK(sel.members == std::vector<NodeId>{3});
  }
  SECTION("edgeless graph scores 1") {
    const Selection sel = seq_absorb(DirectedGraph(3, {}), 2, Kind::pagerank, 0.85);
    CHECK(sel.members == std::vector<NodeId>{0, 1});
    CHECK(*sel.group_score == Approx(1.0));
  }
  SECTION("group score is nonincreasing in k") {
    const CounterRng rng(56);
    for (int trial = 0; trial < 6; ++trial) {
      const DirectedGraph g = random_digraph(rng.derive(1, trial), 9, 0.3);
      double prev = 1e300;
      for (int k = 1; k <= 4; ++k) {
        const Selection sel = seq_absorb(g, k, Kind::pagerank, 0.85);
        CHECK(*sel.group_score <= prev + 1e-9);
        prev = *sel.group_score;
      }
    }
  }
}

TEST_CASE("utility scaling leaves election rules unchanged") {
  const CounterRng rng(57);
  for (int trial = 0; trial < 10; ++trial) {
    const DirectedGraph g = random_digraph(rng.derive(1, trial), 8, 0.4);
    UtilityMatrix m = pagerank_utilities(g, 0.85).with_zero_diagonal();
    const ElectionProfile p = ElectionProfile::from_utilities(m);
    UtilityMatrix scaled = m;
    for (double& x : scaled.mu) x *= 37.5;
    const ElectionProfile ps = ElectionProfile::from_utilities(scaled);
    CHECK(add1u_complete(p, 3).members == add1u_complete(ps, 3).members);
    CHECK(bos(p, 3).first.members == bos(ps, 3).first.members);
  }
}

TEST_CASE("bipartite reductions to classic voting") {
  const CounterRng rng(58);
  int tested = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int n1 = 2 + static_cast<int>(rng.below(5, 0, trial));
    const int n2 = 2 + static_cast<int>(rng.below(5, 1, trial));
    const DirectedGraph g = random_bipartite(rng.derive(2, trial), n1, n2);
    const int v2 = static_cast<int>(classify(g).bipartition->second.size());
    if (v2 == 0) continue;
    // Approval profile: u approves v iff (u,v) is an edge.
    ElectionProfile approval;
    approval.n_voters = approval.n_candidates = g.node_count();
    approval.mu.assign(static_cast<std::size_t>(g.node_count()) * g.node_count(), 0.0);
    for (NodeId u = 0; u < g.node_count(); ++u)
      for (NodeId v : g.out(u)) approval.util(u, v) = 1.0;
    for (int k = 1; k <= v2; ++k) {
      CHECK(top_katz(g, k).members == av_winners(approval, k).members);
      CHECK(top_rank(g, k).members == sav_winners(approval, k).members);
    }
    ++tested;
  }
  CHECK(tested > 20);
}

TEST_CASE("rank and katz rules agree on functional graphs") {
  const CounterRng rng(59);
  for (int trial = 0; trial < 8; ++trial) {
    const DirectedGraph g = random_functional(rng.derive(1, trial), 9, 0.8);
    CHECK(top_rank(g, 3).members == top_katz(g, 3).members);
    CHECK(mes_rank(g, 3).members == mes_katz(g, 3).members);
    CHECK(seq_absorb_rank(g, 2).members == seq_absorb_katz(g, 2).members);
  }
}

TEST_CASE("av on the literal diagonal reproduces top-k by centrality") {
  const CounterRng rng(60);
  for (int trial = 0; trial < 10; ++trial) {
    const DirectedGraph g = random_digraph(rng.derive(1, trial), 9, 0.35);
    const ElectionProfile p = ElectionProfile::from_utilities(pagerank_utilities(g, 0.85));
    CHECK(av_winners(p, 3).members == top_rank(g, 3).members);
  }
}

TEST_CASE("selection size reaches k whenever enough nodes are supported") {
  const CounterRng rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const DirectedGraph g = random_digraph(rng.derive(1, trial), 8, 0.4);
    int supported = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) supported += g.in_degree(v) > 0;
    const int k = std::max(1, std::min(3, supported));
    CHECK(static_cast<int>(mes_rank(g, k).members.size()) == k);
    CHECK(static_cast<int>(bos_rank(g, k).members.size()) == k);
    CHECK(static_cast<int>(top_rank(g, k).members.size()) == k);
  }
}

TEST_CASE("rule registry dispatch") {
  const DirectedGraph g = path_graph(6);
  for (const std::string& name : rule_names()) {
    const Selection sel = run_rule(name, g, 2);
    CHECK(static_cast<int>(sel.members.size()) == 2);
  }
  CHECK_THROWS_AS(run_rule("nope", g, 2), InvalidArgument);
}
