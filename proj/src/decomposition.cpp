#include "linarr/decomposition.hpp"

#include <algorithm>

namespace linarr {

namespace {

struct DfsData {
  std::vector<Vertex> parent;
  std::vector<Vertex> entry;
  std::vector<Vertex> exit;
  std::vector<Vertex> low;
  std::vector<Vertex> subtree;
  std::vector<Vertex> preorder;
  std::vector<Vertex> postorder;
};

// Iterative DFS from `root`, neighbors in ascending order. Computes parent,
// entry/exit timestamps, low-links and subtree sizes in one pass.
DfsData run_dfs(const Graph& g, Vertex root) {
  const Vertex n = g.vertex_count();
  if (root < 1 || root > n)
    throw BadParameters("dfs root " + std::to_string(root) +
                        " is not a vertex");
  DfsData d;
  d.parent.assign(static_cast<std::size_t>(n) + 1, 0);
  d.entry.assign(static_cast<std::size_t>(n) + 1, 0);
  d.exit.assign(static_cast<std::size_t>(n) + 1, 0);
  d.low.assign(static_cast<std::size_t>(n) + 1, 0);
  d.subtree.assign(static_cast<std::size_t>(n) + 1, 1);
  d.preorder.reserve(n);
  d.postorder.reserve(n);

  std::vector<std::pair<Vertex, std::size_t>> stack;  // (vertex, next neighbor slot)
  Vertex time = 0;
  d.entry[root] = d.low[root] = ++time;
  d.preorder.push_back(root);
  stack.push_back({root, 0});
  while (!stack.empty()) {
    const Vertex v = stack.back().first;
    const std::size_t idx = stack.back().second;
    auto nb = g.neighbors(v);
    if (idx < nb.size()) {
      stack.back().second = idx + 1;
      Vertex w = nb[idx];
      if (w == d.parent[v]) continue;  // simple graph: one edge to the parent
      if (d.entry[w] == 0) {
        d.parent[w] = v;
        d.entry[w] = d.low[w] = ++time;
        d.preorder.push_back(w);
        stack.push_back({w, 0});
      } else {
        d.low[v] = std::min(d.low[v], d.entry[w]);
      }
    } else {
      d.exit[v] = time;
      d.postorder.push_back(v);
      stack.pop_back();
      if (!stack.empty()) {
        Vertex p = stack.back().first;
        d.low[p] = std::min(d.low[p], d.low[v]);
        d.subtree[p] += d.subtree[v];
      }
    }
  }
  if (static_cast<Vertex>(d.preorder.size()) != n)
    throw Disconnected("graph is not connected");
  return d;
}

}  // namespace

bool BridgeSet::contains(Vertex u, Vertex v) const {
  const Vertex n = static_cast<Vertex>(parent_.size()) - 1;
  if (u < 1 || u > n || v < 1 || v > n) return false;
  return (parent_[v] == u && bridge_up_[v]) || (parent_[u] == v && bridge_up_[u]);
}

std::pair<Vertex, Vertex> BridgeSet::sides(Vertex u, Vertex v) const {
  const Vertex n = static_cast<Vertex>(parent_.size()) - 1;
  if (u >= 1 && u <= n && v >= 1 && v <= n) {
    if (parent_[v] == u && bridge_up_[v])
      return {n - child_side_[v], child_side_[v]};
    if (parent_[u] == v && bridge_up_[u])
      return {child_side_[u], n - child_side_[u]};
  }
  throw NotABridge("(" + std::to_string(u) + "," + std::to_string(v) +
                   ") is not a bridge");
}

BridgeSet find_bridges(const Graph& g) {
  BridgeSet bs;
  const Vertex n = g.vertex_count();
  if (n == 0) {
    bs.parent_.assign(1, 0);
    bs.child_side_.assign(1, 0);
    bs.bridge_up_.assign(1, 0);
    return bs;
  }
  DfsData d = run_dfs(g, 1);
  bs.parent_ = d.parent;
  bs.child_side_ = d.subtree;
  bs.bridge_up_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v : d.preorder) {
    Vertex p = d.parent[v];
    if (p != 0 && d.low[v] > d.entry[p]) {
      bs.bridge_up_[v] = 1;
      Edge e{std::min(p, v), std::max(p, v)};
      Vertex child_sz = d.subtree[v];
      if (e.u == v)
        bs.bridges_.push_back(e), bs.side_sizes_.push_back({child_sz, n - child_sz});
      else
        bs.bridges_.push_back(e), bs.side_sizes_.push_back({n - child_sz, child_sz});
    }
  }
  // sort bridge list for deterministic reporting, keep sides aligned
  std::vector<std::size_t> by(bs.bridges_.size());
  for (std::size_t i = 0; i < by.size(); ++i) by[i] = i;
  std::sort(by.begin(), by.end(), [&](std::size_t a, std::size_t b) {
    return bs.bridges_[a] < bs.bridges_[b];
  });
  std::vector<Edge> eb;
  std::vector<std::pair<Vertex, Vertex>> sb;
  eb.reserve(by.size());
  sb.reserve(by.size());
  for (std::size_t i : by) {
    eb.push_back(bs.bridges_[i]);
    sb.push_back(bs.side_sizes_[i]);
  }
  bs.bridges_ = std::move(eb);
  bs.side_sizes_ = std::move(sb);
  return bs;
}

std::vector<std::vector<Vertex>> bridgeless_components(const Graph& g) {
  const Vertex n = g.vertex_count();
  BridgeSet bs = find_bridges(g);
  std::vector<std::vector<Vertex>> parts;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> stack;
  for (Vertex s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> members;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w] && !bs.contains(v, w)) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    parts.push_back(std::move(members));
  }
  return parts;
}

bool is_k_separating(const Graph& g, Vertex u, Vertex v, Cost k) {
  BridgeSet bs = find_bridges(g);
  auto [su, sv] = bs.sides(u, v);
  return su > k && sv > k;
}

RootedDfsTree dfs_tree_with_subtree_sizes(const Graph& g, Vertex root) {
  DfsData d = run_dfs(g, root);
  RootedDfsTree t;
  t.root = root;
  t.parent = std::move(d.parent);
  t.subtree_size = std::move(d.subtree);
  t.subtree_size[0] = 0;  // slot 0 unused, like every other field
  t.entry = std::move(d.entry);
  t.exit = std::move(d.exit);
  t.preorder = std::move(d.preorder);
  t.postorder = std::move(d.postorder);
  return t;
}

}  // namespace linarr
