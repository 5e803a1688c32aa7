#pragma once

#include <algorithm>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "netsel/errors.hpp"

namespace netsel {

using NodeId = int;
// Sorted list of distinct node ids.
using NodeSet = std::vector<NodeId>;

// Unweighted simple directed graph over dense ids 0..n-1, immutable after
// construction. Self-loops and duplicate edges in the input are dropped and
// counted rather than rejected; real edge lists contain both.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  DirectedGraph(int n, std::vector<std::pair<NodeId, NodeId>> edges, std::vector<std::string> names = {})
      : n_(n), out_(n), in_(n), names_(std::move(names)) {
    if (n < 0) throw InvalidArgument("negative node count");
    std::sort(edges.begin(), edges.end());
    std::pair<NodeId, NodeId> prev{-1, -1};
    for (const auto& e : edges) {
      if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n)
        throw InvalidArgument("edge endpoint out of range");
      if (e.first == e.second) {
        ++dropped_self_loops_;
        continue;
      }
      if (e == prev) {
        ++dropped_duplicates_;
        continue;
      }
      prev = e;
      out_[e.first].push_back(e.second);
      in_[e.second].push_back(e.first);
      ++m_;
    }
    for (auto& v : in_) std::sort(v.begin(), v.end());
  }

  int node_count() const { return n_; }
  long long edge_count() const { return m_; }
  const std::vector<NodeId>& out(NodeId u) const { return out_[u]; }
  const std::vector<NodeId>& in(NodeId v) const { return in_[v]; }
  int out_degree(NodeId u) const { return static_cast<int>(out_[u].size()); }
  int in_degree(NodeId v) const { return static_cast<int>(in_[v].size()); }

  bool has_edge(NodeId u, NodeId v) const {
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
  }

  std::vector<std::pair<NodeId, NodeId>> edges() const {
    std::vector<std::pair<NodeId, NodeId>> es;
    es.reserve(static_cast<std::size_t>(m_));
    for (NodeId u = 0; u < n_; ++u)
      for (NodeId v : out_[u]) es.emplace_back(u, v);
    return es;
  }

  // External names; empty when nodes were created from dense ids.
  const std::vector<std::string>& names() const { return names_; }
  std::string name(NodeId v) const {
    return names_.empty() ? std::to_string(v) : names_[v];
  }
  std::optional<NodeId> find_name(const std::string& name) const {
    for (NodeId v = 0; v < n_; ++v)
      if (names_[v] == name) return v;
    return std::nullopt;
  }

  int dropped_self_loops() const { return dropped_self_loops_; }
  int dropped_duplicates() const { return dropped_duplicates_; }

 private:
  int n_ = 0;
  long long m_ = 0;
  std::vector<std::vector<NodeId>> out_;  // sorted per node
  std::vector<std::vector<NodeId>> in_;   // sorted per node
  std::vector<std::string> names_;
  int dropped_self_loops_ = 0;
  int dropped_duplicates_ = 0;
};

// Structural class of a graph; see classify().
struct GraphClass {
  bool is_functional = false;  // every out-degree <= 1
  bool is_bipartite = false;   // no node has both in- and out-edges
  // Only set when bipartite: V1 = nodes with out-edges or isolated,
  // V2 = nodes with in-edges.
  std::optional<std::pair<NodeSet, NodeSet>> bipartition;
};

inline void check_subset(const DirectedGraph& g, const NodeSet& s) {
  NodeId prev = -1;
  for (NodeId v : s) {
    if (v < 0 || v >= g.node_count()) throw InvalidArgument("node id out of range");
    if (v <= prev) throw InvalidArgument("node subset must be sorted and distinct");
    prev = v;
  }
}

// Parse a line-oriented edge list: '#'-prefixed comment lines ignored, one
// "u<ws>v" pair per line, ids are arbitrary strings mapped to dense ints in
// first-seen order. With treat_undirected, each line yields both directions.
inline DirectedGraph from_edge_list(std::istream& text, bool treat_undirected = false) {
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> names;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::string line;
  long line_no = 0;
  auto intern = [&](const std::string& tok) {
    auto it = ids.find(tok);
    if (it != ids.end()) return it->second;
    const NodeId id = static_cast<NodeId>(names.size());
    ids.emplace(tok, id);
    names.push_back(tok);
    return id;
  };
  while (std::getline(text, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream ss(line);
    std::string a, b, extra;
    if (!(ss >> a >> b) || (ss >> extra))
      throw ParseError("expected exactly two node tokens", line_no);
    const NodeId u = intern(a);
    const NodeId v = intern(b);
    edges.emplace_back(u, v);
    if (treat_undirected) edges.emplace_back(v, u);
  }
  const int n = static_cast<int>(names.size());
  return DirectedGraph(n, std::move(edges), std::move(names));
}

inline DirectedGraph from_edge_list(const std::string& text, bool treat_undirected = false) {
  std::istringstream ss(text);
  return from_edge_list(ss, treat_undirected);
}

// G - E+(S): the graph with all outgoing edges of S removed.
inline DirectedGraph remove_outgoing(const DirectedGraph& g, const NodeSet& s) {
  check_subset(g, s);
  std::vector<char> absorbed(g.node_count(), 0);
  for (NodeId v : s) absorbed[v] = 1;
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(static_cast<std::size_t>(g.edge_count()));
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (absorbed[u]) continue;
    for (NodeId v : g.out(u)) edges.emplace_back(u, v);
  }
  return DirectedGraph(g.node_count(), std::move(edges), g.names());
}

inline std::vector<NodeSet> canonical_partition(std::vector<NodeSet> parts) {
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end(),
            [](const NodeSet& a, const NodeSet& b) { return a.front() < b.front(); });
  return parts;
}

// Strongly connected components (iterative Tarjan), returned as a partition
// sorted by smallest member.
inline std::vector<NodeSet> strongly_connected_components(const DirectedGraph& g) {
  const int n = g.node_count();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<NodeId> stack;
  std::vector<NodeSet> comps;
  int next_index = 0;

  struct Frame {
    NodeId v;
    std::size_t child;
  };
  std::vector<Frame> call;
  for (NodeId root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& [v, child] = call.back();
      if (child == 0) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      if (child < g.out(v).size()) {
        const NodeId w = g.out(v)[child++];
        if (index[w] == -1) {
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        NodeSet comp;
        NodeId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != v);
        comps.push_back(std::move(comp));
      }
      const NodeId done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[done]);
    }
  }
  return canonical_partition(std::move(comps));
}

// Weakly connected components of the underlying undirected graph.
inline std::vector<NodeSet> weakly_connected_components(const DirectedGraph& g) {
  const int n = g.node_count();
  std::vector<int> comp(n, -1);
  std::vector<NodeSet> comps;
  std::vector<NodeId> queue;
  for (NodeId root = 0; root < n; ++root) {
    if (comp[root] != -1) continue;
    const int c = static_cast<int>(comps.size());
    comps.emplace_back();
    comp[root] = c;
    queue.assign(1, root);
    while (!queue.empty()) {
      const NodeId v = queue.back();
      queue.pop_back();
      comps[c].push_back(v);
      for (NodeId w : g.out(v))
        if (comp[w] == -1) comp[w] = c, queue.push_back(w);
      for (NodeId w : g.in(v))
        if (comp[w] == -1) comp[w] = c, queue.push_back(w);
    }
  }
  return canonical_partition(std::move(comps));
}

// Nodes with a walk of length >= 1 into v, excluding v itself.
inline NodeSet predecessors(const DirectedGraph& g, NodeId v) {
  if (v < 0 || v >= g.node_count()) throw InvalidArgument("node id out of range");
  std::vector<char> seen(g.node_count(), 0);
  std::vector<NodeId> queue{v};
  seen[v] = 1;
  NodeSet result;
  while (!queue.empty()) {
    const NodeId w = queue.back();
    queue.pop_back();
    for (NodeId u : g.in(w)) {
      if (seen[u]) continue;
      seen[u] = 1;
      result.push_back(u);
      queue.push_back(u);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

// Nodes reachable from S by walks of length >= 1, excluding members of S.
inline NodeSet successors_closure(const DirectedGraph& g, const NodeSet& s) {
  check_subset(g, s);
  std::vector<char> seen(g.node_count(), 0);
  std::vector<char> in_s(g.node_count(), 0);
  std::vector<NodeId> queue;
  for (NodeId v : s) {
    seen[v] = 1;
    in_s[v] = 1;
    queue.push_back(v);
  }
  NodeSet result;
  while (!queue.empty()) {
    const NodeId w = queue.back();
    queue.pop_back();
    for (NodeId u : g.out(w)) {
      if (seen[u]) continue;
      seen[u] = 1;
      result.push_back(u);
      queue.push_back(u);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

inline GraphClass classify(const DirectedGraph& g) {
  GraphClass cls;
  cls.is_functional = true;
  cls.is_bipartite = true;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.out_degree(v) > 1) cls.is_functional = false;
    if (g.out_degree(v) > 0 && g.in_degree(v) > 0) cls.is_bipartite = false;
  }
  if (cls.is_bipartite) {
    NodeSet v1, v2;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      // Isolated nodes are voters with empty ballots.
      if (g.in_degree(v) > 0)
        v2.push_back(v);
      else
        v1.push_back(v);
    }
    cls.bipartition = {std::move(v1), std::move(v2)};
  }
  return cls;
}

// True iff every ordered pair of distinct nodes in S is an edge.
inline bool is_clique(const DirectedGraph& g, const NodeSet& s) {
  check_subset(g, s);
  for (NodeId u : s)
    for (NodeId v : s)
      if (u != v && !g.has_edge(u, v)) return false;
  return true;
}

// True iff the subgraph induced by S is strongly connected.
inline bool is_strongly_connected_subset(const DirectedGraph& g, const NodeSet& s) {
  check_subset(g, s);
  if (s.empty()) return false;
  if (s.size() == 1) return true;
  std::vector<char> in_s(g.node_count(), 0);
  for (NodeId v : s) in_s[v] = 1;
  auto covers = [&](bool forward) {
    std::vector<char> seen(g.node_count(), 0);
    std::vector<NodeId> queue{s.front()};
    seen[s.front()] = 1;
    std::size_t count = 1;
    while (!queue.empty()) {
      const NodeId w = queue.back();
      queue.pop_back();
      for (NodeId u : forward ? g.out(w) : g.in(w)) {
        if (!in_s[u] || seen[u]) continue;
        seen[u] = 1;
        ++count;
        queue.push_back(u);
      }
    }
    return count == s.size();
  };
  return covers(true) && covers(false);
}

}  // namespace netsel
