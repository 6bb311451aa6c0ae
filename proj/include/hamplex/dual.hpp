#pragma once

// Dual graphs of pure complexes (facets adjacent iff they share a ridge,
// i.e. a d-element intersection), graph connectivity / 2-connectivity /
// Hamiltonicity, and strong connectivity of complexes under vertex
// deletion.

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "hamiltonian.hpp"

namespace hamplex {

struct DualGraph {
  int node_count = 0;
  std::vector<std::string> labels;           // annotation per node
  std::vector<std::pair<int, int>> edges;    // i < j, lexicographic order
  std::vector<std::vector<int>> adj;         // sorted neighbor lists

  const std::string& label(int i) const { return labels[static_cast<std::size_t>(i)]; }
  bool adjacent(int u, int v) const {
    return std::binary_search(adj[static_cast<std::size_t>(u)].begin(),
                              adj[static_cast<std::size_t>(u)].end(), v);
  }
};

/// Plain graph constructor (also used to feed arbitrary graphs through the
/// same checkers). Edges are deduplicated; self-loops rejected.
inline DualGraph make_graph(int nodes, std::vector<std::pair<int, int>> edges,
                            std::vector<std::string> labels = {}) {
  if (nodes < 0) throw Error(Errc::invalid_parameters, "negative node count");
  DualGraph g;
  g.node_count = nodes;
  if (labels.empty()) {
    for (int i = 0; i < nodes; ++i) g.labels.push_back("f" + std::to_string(i + 1));
  } else {
    if (static_cast<int>(labels.size()) != nodes)
      throw Error(Errc::invalid_parameters, "one label per node required");
    g.labels = std::move(labels);
  }
  g.adj.assign(static_cast<std::size_t>(nodes), {});
  for (auto& e : edges) {
    if (e.first == e.second) throw Error(Errc::invalid_parameters, "self-loop");
    if (e.first < 0 || e.second < 0 || e.first >= nodes || e.second >= nodes)
      throw Error(Errc::invalid_parameters, "edge endpoint out of range");
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges = std::move(edges);
  for (const auto& e : g.edges) {
    g.adj[static_cast<std::size_t>(e.first)].push_back(e.second);
    g.adj[static_cast<std::size_t>(e.second)].push_back(e.first);
  }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  return g;
}

/// Ridge-adjacency graph: nodes are facets (annotated by facet names when
/// the complex carries them), edges join facets with |F_i cap F_j| = d.
inline DualGraph dual_graph(const PureComplex& c) {
  if (c.degenerate()) throw Error(Errc::degenerate_complex, "dual graph of degenerate complex");
  const int m = c.facet_count();
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    std::string name = c.facet_name(i);
    labels.push_back(name.empty() ? "f" + std::to_string(i + 1) : std::move(name));
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (c.facets()[static_cast<std::size_t>(i)].intersection_size(
              c.facets()[static_cast<std::size_t>(j)]) == c.dim())
        edges.emplace_back(i, j);
  return make_graph(m, std::move(edges), std::move(labels));
}

namespace detail {
inline void require_nonempty(const DualGraph& g) {
  if (g.node_count == 0) throw Error(Errc::empty_graph, "graph has no nodes");
}
}  // namespace detail

inline bool graph_connected(const DualGraph& g) {
  detail::require_nonempty(g);
  std::vector<char> seen(static_cast<std::size_t>(g.node_count), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 0;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    ++count;
    for (int v : g.adj[static_cast<std::size_t>(u)])
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        stack.push_back(v);
      }
  }
  return count == g.node_count;
}

/// Connected, at least 3 nodes, and no articulation vertex (lowlink DFS).
inline bool graph_two_connected(const DualGraph& g) {
  detail::require_nonempty(g);
  if (g.node_count < 3 || !graph_connected(g)) return false;
  const int n = g.node_count;
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  int timer = 0;
  bool has_articulation = false;
  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
    int children = 0;
    for (int v : g.adj[static_cast<std::size_t>(u)]) {
      if (v == parent) continue;
      if (disc[static_cast<std::size_t>(v)] == -1) {
        ++children;
        dfs(v, u);
        low[static_cast<std::size_t>(u)] =
            std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(v)]);
        if (parent != -1 && low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(u)])
          has_articulation = true;
      } else {
        low[static_cast<std::size_t>(u)] =
            std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(v)]);
      }
    }
    if (parent == -1 && children > 1) has_articulation = true;
  };
  dfs(0, -1);
  return !has_articulation;
}

/// Exact backtracking Hamiltonicity on the graph itself, with a node
/// sequence as certificate. Cycles need >= 3 nodes; the one-node path is
/// trivially present. Deterministic: lexicographically least sequence
/// under the symmetry breaking (cycles anchored at node 0, both shapes
/// oriented forward).
inline std::optional<std::vector<int>> graph_hamiltonian(const DualGraph& g, HamShape shape) {
  detail::require_nonempty(g);
  const int n = g.node_count;
  if (shape == HamShape::cycle && n < 3) return std::nullopt;
  if (n == 1) return std::vector<int>{0};
  std::vector<int> seq(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<bool(int)> extend = [&](int pos) -> bool {
    if (pos == n) {
      if (shape == HamShape::cycle)
        return g.adjacent(seq[static_cast<std::size_t>(n - 1)], seq[0]);
      return true;
    }
    if (pos == 0) {
      const int first_max = shape == HamShape::cycle ? 1 : n;  // cycles anchored at node 0
      for (int s = 0; s < first_max; ++s) {
        seq[0] = s;
        used[static_cast<std::size_t>(s)] = 1;
        if (extend(1)) return true;
        used[static_cast<std::size_t>(s)] = 0;
      }
      return false;
    }
    for (int v : g.adj[static_cast<std::size_t>(seq[static_cast<std::size_t>(pos - 1)])]) {
      if (used[static_cast<std::size_t>(v)]) continue;
      // reflection breaking: cycle reversal fixes seq[0], swaps seq[1] and
      // seq[n-1]; path reversal swaps the endpoints
      if (shape == HamShape::cycle && pos == n - 1 && v < seq[1]) continue;
      if (shape == HamShape::path && pos == n - 1 && v < seq[0]) continue;
      seq[static_cast<std::size_t>(pos)] = v;
      used[static_cast<std::size_t>(v)] = 1;
      if (extend(pos + 1)) return true;
      used[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  };
  if (extend(0)) return seq;
  return std::nullopt;
}

/// Certificate check for graph_hamiltonian results.
inline bool verify_graph_sequence(const DualGraph& g, const std::vector<int>& seq,
                                  HamShape shape) {
  if (static_cast<int>(seq.size()) != g.node_count) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.node_count), 0);
  for (int v : seq) {
    if (v < 0 || v >= g.node_count || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  if (g.node_count == 1) return shape == HamShape::path;
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (!g.adjacent(seq[i - 1], seq[i])) return false;
  if (shape == HamShape::cycle && !g.adjacent(seq.back(), seq.front())) return false;
  return true;
}

inline bool is_strongly_connected(const PureComplex& c) {
  return graph_connected(dual_graph(c));
}

/// True iff deleting every vertex subset of size <= k-1 leaves a
/// non-degenerate, strongly connected complex (an emptied facet family
/// counts as a failure).
inline bool is_k_strongly_connected(const PureComplex& c, int k) {
  if (c.degenerate())
    throw Error(Errc::degenerate_complex, "strong connectivity of degenerate complex");
  if (k < 1) throw Error(Errc::invalid_parameters, "k must be positive");
  bool ok = true;
  std::function<void(std::size_t, std::vector<VertexId>&)> rec = [&](std::size_t from,
                                                                     std::vector<VertexId>& pick) {
    if (!ok) return;
    {
      PureComplex cur = c;
      bool emptied = false;
      for (VertexId v : pick) {
        if (!cur.contains_vertex(v)) continue;  // already gone with its facets
        cur = delete_vertex(cur, v);
        if (cur.degenerate()) {
          emptied = true;
          break;
        }
      }
      if (emptied || !is_strongly_connected(cur)) {
        ok = false;
        return;
      }
    }
    if (static_cast<int>(pick.size()) == k - 1) return;
    for (std::size_t i = from; i < c.universe().size(); ++i) {
      pick.push_back(c.universe()[i]);
      rec(i + 1, pick);
      pick.pop_back();
      if (!ok) return;
    }
  };
  std::vector<VertexId> pick;
  rec(0, pick);
  return ok;
}

/// One `u v` line per edge, nodes by annotation.
inline std::string format_edge_list(const DualGraph& g) {
  std::ostringstream os;
  for (const auto& e : g.edges)
    os << g.label(e.first) << ' ' << g.label(e.second) << '\n';
  return os.str();
}

}  // namespace hamplex
