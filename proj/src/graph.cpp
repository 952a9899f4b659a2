#include "linarr/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace linarr {

Graph Graph::build(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  if (n < 0) throw BadParameters("vertex count must be nonnegative");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    const std::string where = "edge #" + std::to_string(i);
    if (a < 1 || a > n || b < 1 || b > n)
      throw EndpointOutOfRange(a, b, i, where);
    if (a == b) throw LoopEdge(a, b, i, where);
    g.edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  auto sorted = g.edges_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) {
      // report the later occurrence in input order
      std::size_t last = 0;
      for (std::size_t j = 0; j < g.edges_.size(); ++j)
        if (g.edges_[j] == sorted[i]) last = j;
      throw DuplicateEdge(sorted[i].u, sorted[i].v, last,
                          "edge #" + std::to_string(last));
    }
  }
  g.edges_ = std::move(sorted);

  g.offset_.assign(static_cast<std::size_t>(n) + 2, 0);
  for (const Edge& e : g.edges_) {
    ++g.offset_[e.u + 1];
    ++g.offset_[e.v + 1];
  }
  std::partial_sum(g.offset_.begin(), g.offset_.end(), g.offset_.begin());
  g.adj_.resize(2 * g.edges_.size());
  std::vector<std::int64_t> fill(g.offset_.begin(), g.offset_.end() - 1);
  for (const Edge& e : g.edges_) {
    g.adj_[fill[e.u]++] = e.v;
    g.adj_[fill[e.v]++] = e.u;
  }
  for (Vertex v = 1; v <= n; ++v)
    std::sort(g.adj_.begin() + g.offset_[v], g.adj_.begin() + g.offset_[v + 1]);
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_ || u == v) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Arrangement::Arrangement(std::vector<Vertex> positions_by_vertex) {
  if (positions_by_vertex.empty())
    throw ArrangementMismatch("positions vector must have slot 0");
  const Vertex n = static_cast<Vertex>(positions_by_vertex.size()) - 1;
  order_.assign(n, 0);
  for (Vertex v = 1; v <= n; ++v) {
    Vertex p = positions_by_vertex[v];
    if (p < 1 || p > n)
      throw ArrangementMismatch("position " + std::to_string(p) +
                                " of vertex " + std::to_string(v) +
                                " out of range");
    if (order_[p - 1] != 0)
      throw ArrangementMismatch("position " + std::to_string(p) +
                                " assigned twice");
    order_[p - 1] = v;
  }
  pos_ = std::move(positions_by_vertex);
}

Arrangement Arrangement::from_order(const std::vector<Vertex>& order) {
  const Vertex n = static_cast<Vertex>(order.size());
  std::vector<Vertex> pos(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex i = 0; i < n; ++i) {
    Vertex v = order[i];
    if (v < 1 || v > n)
      throw ArrangementMismatch("vertex " + std::to_string(v) +
                                " out of range in order");
    if (pos[v] != 0)
      throw ArrangementMismatch("vertex " + std::to_string(v) +
                                " listed twice in order");
    pos[v] = i + 1;
  }
  Arrangement a;
  a.pos_ = std::move(pos);
  a.order_ = order;
  return a;
}

Arrangement Arrangement::identity(Vertex n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 1);
  return from_order(order);
}

Arrangement Arrangement::reversed() const {
  const Vertex n = size();
  std::vector<Vertex> order(order_.rbegin(), order_.rend());
  Arrangement a;
  a.order_ = std::move(order);
  a.pos_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex i = 0; i < n; ++i) a.pos_[a.order_[i]] = i + 1;
  return a;
}

Cost arrangement_cost(const Graph& g, const Arrangement& a) {
  if (a.size() != g.vertex_count())
    throw ArrangementMismatch("arrangement size " + std::to_string(a.size()) +
                              " does not match vertex count " +
                              std::to_string(g.vertex_count()));
  Cost total = 0;
  const auto& pos = a.positions();
  for (const Edge& e : g.edges())
    total += std::abs(static_cast<Cost>(pos[e.u]) - pos[e.v]);
  return total;
}

Cost net_cost(const Graph& g, const Arrangement& a) {
  return arrangement_cost(g, a) - g.edge_count();
}

ComponentSplit connected_components(const Graph& g) {
  const Vertex n = g.vertex_count();
  ComponentSplit split;
  split.part_index.assign(static_cast<std::size_t>(n) + 1, -1);
  split.to_local.assign(static_cast<std::size_t>(n) + 1, 0);

  std::vector<Vertex> stack;
  for (Vertex s = 1; s <= n; ++s) {
    if (split.part_index[s] != -1) continue;
    const int part = static_cast<int>(split.parts.size());
    std::vector<Vertex> members;
    split.part_index[s] = part;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (split.part_index[w] == -1) {
          split.part_index[w] = part;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    ComponentPart cp;
    cp.to_parent.assign(members.size() + 1, 0);
    for (std::size_t i = 0; i < members.size(); ++i) {
      cp.to_parent[i + 1] = members[i];
      split.to_local[members[i]] = static_cast<Vertex>(i + 1);
    }
    std::vector<std::pair<Vertex, Vertex>> local_edges;
    for (Vertex v : members)
      for (Vertex w : g.neighbors(v))
        if (v < w) local_edges.push_back({split.to_local[v], split.to_local[w]});
    cp.graph = Graph::build(static_cast<Vertex>(members.size()), local_edges);
    split.parts.push_back(std::move(cp));
  }
  return split;
}

bool is_connected(const Graph& g) {
  const Vertex n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> stack{1};
  seen[1] = 1;
  Vertex count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

bool is_simple_path(const Graph& g) {
  const Vertex n = g.vertex_count();
  if (n == 0) return true;
  if (g.edge_count() != n - 1) return false;
  for (Vertex v = 1; v <= n; ++v)
    if (g.degree(v) > 2) return false;
  return is_connected(g);
}

}  // namespace linarr
