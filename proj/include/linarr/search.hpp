#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "linarr/kernelization.hpp"

namespace linarr {

// DFS spanning tree from vertex 1, neighbors in ascending order.
// Throws Disconnected.
Graph spanning_tree(const Graph& g);

// Order x_1..x_n such that each x_i is a leaf of the tree minus the earlier
// vertices; among the current leaves the smallest id goes first. The single
// remaining vertex closes the order. Throws NotATree.
std::vector<Vertex> leaf_elimination_order(const Graph& tree);

// Optional per-vertex placement constraint for the enumerator.
//   Free: any gap.
//   EndsOnly: the vertex must end at position 1 or n; inserting it at the
//     current left (right) end freezes that end for later insertions.
//   RightEndOnly: likewise but the final position must be n.
enum class PinMode : unsigned char { Free, EndsOnly, RightEndOnly };

struct EnumStats {
  std::uint64_t nodes{0};    // search tree nodes expanded
  std::uint64_t emitted{0};  // complete arrangements reported
};

// Called with the order (order[i] = vertex at position i+1) and its exact net
// cost over the tree edges. Return false to stop the whole enumeration.
using ArrangementVisitor =
    std::function<bool(const std::vector<Vertex>& order, Cost tree_net_cost)>;

// Every arrangement whose net cost over the tree is at most k, each exactly
// once. Vertices are inserted in reversed leaf-elimination order into the
// gaps of the partial arrangement; a branch dies as soon as the partial net
// cost exceeds k (insertions never lower it). Throws NotATree, BadParameters
// (k < 0).
EnumStats enumerate_arrangements(const Graph& tree, Cost k,
                                 const ArrangementVisitor& visit);

// Materializing variant, with each arrangement's tree net cost.
std::vector<std::pair<Arrangement, Cost>> enumerate_arrangements(const Graph& tree,
                                                                 Cost k);

// Same enumeration restricted by per-vertex pins (index = vertex id; slot 0
// ignored). pins must have size n+1.
EnumStats enumerate_arrangements_pinned(const Graph& tree, Cost k,
                                        const std::vector<PinMode>& pins,
                                        const ArrangementVisitor& visit);

struct SearchOptions {
  // Explore only one of each reflection pair (net cost is reflection
  // invariant, so the optimum value is unaffected; the returned arrangement
  // may be the mirror of the default one).
  bool symmetry_prune = false;
};

struct BestArrangement {
  Arrangement arrangement;
  Cost net_cost{0};
};

// Minimum net cost arrangement of a connected graph among those with net
// cost at most k, or nullopt if none exists. Enumerates spanning tree
// arrangements (net cost over tree edges never exceeds the net cost over all
// edges) and evaluates each against every edge of g. Ties keep the first
// arrangement in enumeration order. Throws Disconnected, BadParameters.
std::optional<BestArrangement> best_arrangement(const Graph& g, Cost k,
                                                const SearchOptions& opts = {});

struct ComponentKernelStats {
  int component{0};     // 1-based index in component order
  Vertex kernel_n{0};
  Cost kernel_m{0};
  Vertex suppressed{0};
};

struct SolveTimings {
  double components_ms{0};
  double kernelize_ms{0};
  double search_ms{0};
  double lift_ms{0};
};

struct SolveReport {
  bool decision{false};
  Cost k{0};
  std::optional<Cost> net_cost_opt;      // present iff decision
  std::optional<Arrangement> arrangement;  // present iff decision
  std::vector<ComponentKernelStats> kernel_stats;  // non-path components
  int path_components{0};
  SolveTimings timings;
};

struct SolveOptions {
  int threads = 1;  // components are solved concurrently when > 1
  bool symmetry_prune = false;
};

// Decides whether g has an arrangement of net cost at most k and returns an
// optimal arrangement when it does. Path components cost nothing and are laid
// out directly; each of the p remaining components is kernelized and searched
// with budget k-p+1 (any smaller share forces some other component above its
// minimum of 1). Components occupy consecutive position blocks ordered by
// smallest vertex id. Throws BadParameters (k < 0).
SolveReport solve(const Graph& g, Cost k, const SolveOptions& opts = {});

}  // namespace linarr
