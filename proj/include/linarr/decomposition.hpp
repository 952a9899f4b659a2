#pragma once

#include <utility>
#include <vector>

#include "linarr/graph.hpp"

namespace linarr {

// Bridges of a connected graph, with the sizes of the two sides each bridge
// separates. side_size[i].first counts the side containing bridges[i].u.
class BridgeSet {
 public:
  const std::vector<Edge>& bridges() const { return bridges_; }
  const std::vector<std::pair<Vertex, Vertex>>& side_sizes() const {
    return side_sizes_;
  }

  bool contains(Vertex u, Vertex v) const;

  // (size of side containing u, size of side containing v).
  // Throws NotABridge if (u,v) is not a bridge.
  std::pair<Vertex, Vertex> sides(Vertex u, Vertex v) const;

 private:
  friend BridgeSet find_bridges(const Graph& g);
  std::vector<Edge> bridges_;
  std::vector<std::pair<Vertex, Vertex>> side_sizes_;
  std::vector<Vertex> parent_;        // DFS parent, 0 at the root
  std::vector<Vertex> child_side_;    // subtree size under v
  std::vector<char> bridge_up_;       // edge (parent_[v], v) is a bridge
};

// Throws Disconnected. Deterministic: DFS from vertex 1, neighbors ascending.
BridgeSet find_bridges(const Graph& g);

// Partition of V into maximal bridgeless (2-edge-connected) pieces; isolated
// and pendant vertices form their own parts. Parts are sorted internally and
// ordered by smallest member. Throws Disconnected.
std::vector<std::vector<Vertex>> bridgeless_components(const Graph& g);

// True iff both sides of bridge (u,v) have more than k vertices.
// Throws NotABridge if (u,v) is not a bridge of g, Disconnected otherwise
// as per find_bridges.
bool is_k_separating(const Graph& g, Vertex u, Vertex v, Cost k);

// Rooted DFS tree of a connected graph with per-vertex subtree sizes.
// Children are visited in ascending id order; preorder/postorder list every
// vertex once. entry/exit are preorder timestamps: w lies in the subtree of
// v iff entry[v] <= entry[w] <= exit[v].
struct RootedDfsTree {
  Vertex root{0};
  std::vector<Vertex> parent;        // 0 at the root
  std::vector<Vertex> subtree_size;  // t_v = |V(T_v)|
  std::vector<Vertex> entry;
  std::vector<Vertex> exit;
  std::vector<Vertex> preorder;
  std::vector<Vertex> postorder;
};

// Throws Disconnected; BadParameters if root is not a vertex.
RootedDfsTree dfs_tree_with_subtree_sizes(const Graph& g, Vertex root);

}  // namespace linarr
