#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "linarr/errors.hpp"

namespace linarr {

using Vertex = std::int32_t;
using Cost = std::int64_t;

struct Edge {
  Vertex u{0};
  Vertex v{0};  // normalized: u < v
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 1..n, immutable after construction.
// Neighbor lists are sorted ascending; edges() is sorted lexicographically.
class Graph {
 public:
  Graph() = default;

  // Validates every pair: endpoints in [1..n], no loops, no duplicates
  // (regardless of orientation). Throws LoopEdge / DuplicateEdge /
  // EndpointOutOfRange naming the offending pair and its index.
  static Graph build(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  Vertex vertex_count() const { return n_; }
  Cost edge_count() const { return static_cast<Cost>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offset_[v], adj_.data() + offset_[v + 1]};
  }

  Vertex degree(Vertex v) const { return offset_[v + 1] - offset_[v]; }

  bool has_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Vertex n_{0};
  std::vector<Edge> edges_;
  std::vector<std::int64_t> offset_;  // size n_+2, offset_[v]..offset_[v+1]
  std::vector<Vertex> adj_;
};

// Bijection V -> {1..n}. Stores both directions.
class Arrangement {
 public:
  Arrangement() = default;

  // positions_by_vertex[v] for v in 1..n (slot 0 ignored). Throws
  // ArrangementMismatch unless the values are a permutation of 1..n.
  explicit Arrangement(std::vector<Vertex> positions_by_vertex);

  // order[i] = vertex placed at position i+1.
  static Arrangement from_order(const std::vector<Vertex>& order);
  static Arrangement identity(Vertex n);

  Vertex size() const { return static_cast<Vertex>(order_.size()); }
  Vertex position_of(Vertex v) const { return pos_[v]; }
  Vertex vertex_at(Vertex position) const { return order_[position - 1]; }
  const std::vector<Vertex>& order() const { return order_; }

  // positions indexed by vertex id, slot 0 unused (0).
  const std::vector<Vertex>& positions() const { return pos_; }

  Arrangement reversed() const;

  friend bool operator==(const Arrangement& a, const Arrangement& b) {
    return a.pos_ == b.pos_;
  }

 private:
  std::vector<Vertex> pos_;    // vertex -> position
  std::vector<Vertex> order_;  // position-1 -> vertex
};

// Sum over edges of (|pos(u)-pos(v)| - 1); the arrangement cost minus the
// edge count. Throws ArrangementMismatch if a.size() != g.vertex_count().
Cost net_cost(const Graph& g, const Arrangement& a);

// Plain arrangement cost: sum of |pos(u)-pos(v)|.
Cost arrangement_cost(const Graph& g, const Arrangement& a);

struct ComponentPart {
  Graph graph;                    // relabeled to 1..n_local
  std::vector<Vertex> to_parent;  // local id -> id in the parent graph; slot 0 unused
};

struct ComponentSplit {
  std::vector<ComponentPart> parts;  // ordered by smallest parent vertex id
  std::vector<int> part_index;       // parent vertex -> index into parts
  std::vector<Vertex> to_local;      // parent vertex -> local id in its part
};

ComponentSplit connected_components(const Graph& g);

bool is_connected(const Graph& g);

// True iff g is a simple path: connected, m = n-1, max degree <= 2.
// Single vertex and empty graph count as paths; disconnected input does not.
bool is_simple_path(const Graph& g);

}  // namespace linarr
