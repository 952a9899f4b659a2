#pragma once

#include <cstdint>
#include <vector>

#include "linarr/graph.hpp"

namespace linarr {

// One contraction step: vertex v had exactly the two neighbors u1 (on the
// side away from the DFS root) and u2 at the moment it was removed; removal
// replaces the path u1-v-u2 by the edge u1-u2.
struct KernelStep {
  Vertex v{0};
  Vertex u1{0};
  Vertex u2{0};
  friend bool operator==(const KernelStep&, const KernelStep&) = default;
};

// Output of suppressible_sequence: the vertices that can be contracted away
// for budget k, in an order that keeps every step valid (each listed vertex
// has degree 2 and both incident edges are bridges whose sides still exceed
// k vertices when the step is applied).
struct SuppressionPlan {
  std::vector<Vertex> order;       // contraction order
  std::vector<KernelStep> steps;   // aligned with `order`
  std::vector<Vertex> tprime;      // per vertex: contracted count in its subtree
  Cost k{0};
  Vertex original_n{0};
  std::uint64_t work{0};           // elementary operations spent planning
};

// Everything needed to undo a contraction sequence. Replaying `steps` in
// reverse on the kernel reconstructs the original graph. entry/exit are the
// DFS timestamps of the original graph used to identify bridge sides when
// re-inserting vertices into an arrangement.
struct KernelRecord {
  std::vector<KernelStep> steps;
  Vertex original_n{0};
  std::vector<Vertex> kernel_to_original;  // local id -> original id, slot 0 unused
  std::vector<Vertex> original_to_kernel;  // 0 for contracted vertices
  std::vector<Vertex> entry;
  std::vector<Vertex> exit;
};

struct KernelResult {
  Graph kernel;  // relabeled to 1..n'
  KernelRecord record;
};

enum class KernelGate { Accept, RejectTooBig };

// Computes the contraction plan for a connected graph and budget k >= 0.
// Single bottom-up pass over a DFS tree rooted at vertex 1; linear in n+m.
// Throws Disconnected, BadParameters (k < 0).
SuppressionPlan suppressible_sequence(const Graph& g, Cost k);

// Applies a plan. Throws RecordMismatch if the plan does not fit g,
// InternalInvariantViolation if a step would create a duplicate edge.
KernelResult suppress_all(const Graph& g, const SuppressionPlan& plan);

// Size gate: a connected graph with no contractible vertex left and optimum
// net cost at most k has at most 5k+2 vertices and 6k+1 edges, so anything
// bigger certifies a "no" answer for budget k.
KernelGate kernel_gate(const Graph& kernel, Cost k);

// Re-inserts contracted vertices into an arrangement of the kernel, yielding
// an arrangement of the original graph. For arrangements that are optimal on
// the kernel the result has the same net cost on the original graph: each
// vertex lands in the gap between the two bridge sides it connects. Sides
// that interleave (possible only for non-optimal inputs) are handled by
// inserting at the first side boundary toward u2. Throws RecordMismatch.
Arrangement lift_arrangement(const KernelRecord& record, const Arrangement& a_kernel);

}  // namespace linarr
