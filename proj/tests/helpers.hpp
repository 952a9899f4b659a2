#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "linarr/graph.hpp"

namespace helpers {

using linarr::Cost;
using linarr::Graph;
using linarr::Vertex;

inline Graph from_edges(Vertex n, std::vector<std::pair<Vertex, Vertex>> e) {
  return Graph::build(n, e);
}

// order[i] = vertex at position i+1
inline Cost net_cost_of_order(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<Vertex> pos(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (std::size_t i = 0; i < order.size(); ++i)
    pos[order[i]] = static_cast<Vertex>(i + 1);
  Cost total = -g.edge_count();
  for (const linarr::Edge& e : g.edges()) {
    Cost d = pos[e.u] - pos[e.v];
    total += d < 0 ? -d : d;
  }
  return total;
}

// (minimum net cost, lexicographically first optimal order), by checking all
// n! orders. Keep n small.
inline std::pair<Cost, std::vector<Vertex>> brute_best(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  Cost best = std::numeric_limits<Cost>::max();
  std::vector<Vertex> best_order = order;
  do {
    Cost nc = net_cost_of_order(g, order);
    if (nc < best) {
      best = nc;
      best_order = order;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return {best, best_order};
}

// all orders with net cost <= k, as a sorted list of (order, nc)
inline std::vector<std::pair<std::vector<Vertex>, Cost>> brute_filter(
    const Graph& g, Cost k) {
  const Vertex n = g.vertex_count();
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::vector<std::pair<std::vector<Vertex>, Cost>> out;
  do {
    Cost nc = net_cost_of_order(g, order);
    if (nc <= k) out.push_back({order, nc});
  } while (std::next_permutation(order.begin(), order.end()));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::pair<Vertex, Vertex>> all_pairs(Vertex n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) pairs.push_back({u, v});
  return pairs;
}

// every simple graph on n labeled vertices with the edges selected by mask
inline Graph graph_from_mask(Vertex n, std::uint32_t mask,
                             const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (mask & (1u << i)) e.push_back(pairs[i]);
  return Graph::build(n, e);
}

inline std::vector<Graph> all_connected_graphs(Vertex n) {
  auto pairs = all_pairs(n);
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    Graph g = graph_from_mask(n, mask, pairs);
    if (linarr::is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

// connected, n >= 3, and no single vertex removal disconnects it
inline bool is_two_vertex_connected(const Graph& g) {
  const Vertex n = g.vertex_count();
  if (n < 3 || !linarr::is_connected(g)) return false;
  for (Vertex skip = 1; skip <= n; ++skip) {
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    seen[skip] = 1;
    Vertex start = skip == 1 ? 2 : 1;
    std::vector<Vertex> stack{start};
    seen[start] = 1;
    Vertex visited = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          ++visited;
          stack.push_back(w);
        }
    }
    if (visited != n - 1) return false;
  }
  return true;
}

inline bool has_bridge(const Graph& g) {
  for (const linarr::Edge& e : g.edges()) {
    std::vector<std::pair<Vertex, Vertex>> rest;
    for (const linarr::Edge& f : g.edges())
      if (!(f == e)) rest.push_back({f.u, f.v});
    Graph h = Graph::build(g.vertex_count(), rest);
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    std::vector<Vertex> stack{e.u};
    seen[e.u] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : h.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    if (!seen[e.v]) return true;
  }
  return false;
}

// spine path 1..spine, a triangle glued to the far end, and pendant legs at
// spine vertices 2 and 5. Net-cost optimum is 3 regardless of spine length
// (spine >= 6). Vertices: spine+1, spine+2 close the triangle, spine+3 hangs
// off 2, spine+4 hangs off 5.
inline Graph caterpillar_with_triangle(Vertex spine) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 1; v < spine; ++v) e.push_back({v, v + 1});
  e.push_back({spine, spine + 1});
  e.push_back({spine + 1, spine + 2});
  e.push_back({spine, spine + 2});
  e.push_back({2, spine + 3});
  e.push_back({5, spine + 4});
  return Graph::build(spine + 4, e);
}

// random connected graph: random tree plus a few random extra edges
inline Graph random_connected_graph(Vertex n, int extra, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 2; v <= n; ++v) {
    Vertex u = static_cast<Vertex>(1 + rng() % (v - 1));
    edges.insert({u, v});
  }
  const std::int64_t capacity =
      static_cast<std::int64_t>(n) * (n - 1) / 2 - (n - 1);
  for (int t = 0; t < extra && static_cast<std::int64_t>(edges.size()) <
                                   capacity + (n - 1);) {
    Vertex u = static_cast<Vertex>(1 + rng() % n);
    Vertex v = static_cast<Vertex>(1 + rng() % n);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (!edges.insert({u, v}).second) continue;
    ++t;
  }
  return Graph::build(n, {edges.begin(), edges.end()});
}

}  // namespace helpers
