#include "linarr/kernelization.hpp"

#include <algorithm>

#include "linarr/decomposition.hpp"

namespace linarr {

SuppressionPlan suppressible_sequence(const Graph& g, Cost k) {
  if (k < 0) throw BadParameters("budget must be nonnegative");
  const Vertex n = g.vertex_count();
  SuppressionPlan plan;
  plan.k = k;
  plan.original_n = n;
  plan.tprime.assign(static_cast<std::size_t>(n) + 1, 0);
  if (n <= 2) {
    if (!is_connected(g)) throw Disconnected("graph is not connected");
    return plan;
  }

  RootedDfsTree t = dfs_tree_with_subtree_sizes(g, 1);
  BridgeSet bs = find_bridges(g);
  plan.work += static_cast<std::uint64_t>(n) + 2 * g.edge_count();

  // anchor[v]: the vertex that currently stands in for the contracted chain
  // below v (the far endpoint of the edge created when v was removed).
  std::vector<Vertex> anchor(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> in_plan(static_cast<std::size_t>(n) + 1, 0);
  auto resolve = [&](Vertex u) { return in_plan[u] ? anchor[u] : u; };

  Cost sprime = 0;
  for (Vertex v : t.postorder) {
    ++plan.work;
    bool added = false;
    Vertex u1 = 0, u2 = 0;
    if (g.degree(v) == 2) {
      auto nb = g.neighbors(v);
      const Vertex a = nb[0], b = nb[1];
      if (bs.contains(v, a) && bs.contains(v, b)) {
        if (v == t.root) {
          // both neighbors are children of the root
          const Cost side_a = t.subtree_size[a] - plan.tprime[a];
          const Cost side_b = t.subtree_size[b] - plan.tprime[b];
          if (side_a > k && side_b > k) {
            added = true;
            u1 = resolve(a);
            u2 = resolve(b);
          }
        } else {
          const Vertex u = (t.parent[a] == v) ? a : (t.parent[b] == v ? b : 0);
          if (u != 0) {
            const Cost below = t.subtree_size[v] - plan.tprime[u];
            if (k + 1 < below && below < n - k - sprime) {
              added = true;
              u1 = resolve(u);
              u2 = t.parent[v];
            }
          }
        }
      }
    }
    if (added) {
      anchor[v] = u1;
      in_plan[v] = 1;
      plan.order.push_back(v);
      plan.steps.push_back({v, u1, u2});
      ++sprime;
      ++plan.tprime[v];
    }
    if (t.parent[v] != 0) plan.tprime[t.parent[v]] += plan.tprime[v];
  }
  return plan;
}

KernelResult suppress_all(const Graph& g, const SuppressionPlan& plan) {
  const Vertex n = g.vertex_count();
  if (plan.original_n != n)
    throw RecordMismatch("plan was computed for a graph of different size");

  std::vector<char> contracted(static_cast<std::size_t>(n) + 1, 0);
  for (const KernelStep& s : plan.steps) {
    if (s.v < 1 || s.v > n || s.u1 < 1 || s.u1 > n || s.u2 < 1 || s.u2 > n)
      throw RecordMismatch("plan step references a vertex outside the graph");
    if (contracted[s.v]) throw RecordMismatch("plan contracts a vertex twice");
    contracted[s.v] = 1;
  }
  for (const KernelStep& s : plan.steps) {
    if (contracted[s.u1])
      throw RecordMismatch("plan step endpoint was itself contracted");
    if (s.u1 == s.u2)
      throw InternalInvariantViolation("contraction step would create a loop");
  }

  KernelResult out;
  out.record.steps = plan.steps;
  out.record.original_n = n;
  out.record.original_to_kernel.assign(static_cast<std::size_t>(n) + 1, 0);
  out.record.kernel_to_original.assign(1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    if (!contracted[v]) {
      out.record.kernel_to_original.push_back(v);
      out.record.original_to_kernel[v] =
          static_cast<Vertex>(out.record.kernel_to_original.size()) - 1;
    }
  }

  std::vector<std::pair<Vertex, Vertex>> kedges;
  kedges.reserve(g.edges().size());
  for (const Edge& e : g.edges())
    if (!contracted[e.u] && !contracted[e.v])
      kedges.push_back({out.record.original_to_kernel[e.u],
                        out.record.original_to_kernel[e.v]});
  // an edge added by a step survives unless a later step contracts its u2 end
  for (const KernelStep& s : plan.steps)
    if (!contracted[s.u2])
      kedges.push_back({out.record.original_to_kernel[s.u1],
                        out.record.original_to_kernel[s.u2]});

  const Vertex nk = static_cast<Vertex>(out.record.kernel_to_original.size()) - 1;
  try {
    out.kernel = Graph::build(nk, kedges);
  } catch (const EdgeError&) {
    throw InternalInvariantViolation(
        "contraction produced a duplicate or invalid edge");
  }

  if (n >= 1 && !plan.steps.empty()) {
    RootedDfsTree t = dfs_tree_with_subtree_sizes(g, 1);
    out.record.entry = std::move(t.entry);
    out.record.exit = std::move(t.exit);
  } else {
    out.record.entry.assign(static_cast<std::size_t>(n) + 1, 0);
    out.record.exit.assign(static_cast<std::size_t>(n) + 1, 0);
  }
  return out;
}

KernelGate kernel_gate(const Graph& kernel, Cost k) {
  const Cost nk = kernel.vertex_count();
  const Cost mk = kernel.edge_count();
  if (k >= nk && k >= mk) return KernelGate::Accept;  // bounds trivially met
  return (nk <= 5 * k + 2 && mk <= 6 * k + 1) ? KernelGate::Accept
                                              : KernelGate::RejectTooBig;
}

Arrangement lift_arrangement(const KernelRecord& record, const Arrangement& a_kernel) {
  const Vertex nk = static_cast<Vertex>(record.kernel_to_original.size()) - 1;
  const Vertex N = record.original_n;
  if (a_kernel.size() != nk)
    throw RecordMismatch("kernel arrangement size does not match the record");
  if (N != nk + static_cast<Vertex>(record.steps.size()))
    throw RecordMismatch("record step count does not match its vertex counts");
  if (static_cast<Vertex>(record.entry.size()) != N + 1 && !record.steps.empty())
    throw RecordMismatch("record is missing its subtree timestamps");

  // doubly linked list over original ids; 0 is the head sentinel, N+1 the tail
  const Vertex head = 0, tail = N + 1;
  std::vector<Vertex> nxt(static_cast<std::size_t>(N) + 2, -1);
  std::vector<Vertex> prv(static_cast<std::size_t>(N) + 2, -1);
  Vertex last = head;
  for (Vertex p = 1; p <= nk; ++p) {
    Vertex orig = record.kernel_to_original[a_kernel.vertex_at(p)];
    nxt[last] = orig;
    prv[orig] = last;
    last = orig;
  }
  nxt[last] = tail;
  prv[tail] = last;

  const auto& entry = record.entry;
  const auto& exit = record.exit;
  for (auto it = record.steps.rbegin(); it != record.steps.rend(); ++it) {
    const Vertex v = it->v, u1 = it->u1, u2 = it->u2;
    auto in_side = [&](Vertex x) {
      return entry[u1] <= entry[x] && entry[x] <= exit[u1];
    };
    // which direction is u2? alternate steps both ways until it shows up
    Vertex r = u1, l = u1;
    bool right = false;
    for (Vertex guard = 0;; ++guard) {
      if (guard > N + 1)
        throw RecordMismatch("step endpoints are not in the arrangement");
      if (r != tail) {
        r = nxt[r];
        if (r == u2) {
          right = true;
          break;
        }
      }
      if (l != head) {
        l = prv[l];
        if (l == u2) break;
      }
    }
    Vertex left_of_v, right_of_v;
    if (right) {
      Vertex x = u1;
      while (nxt[x] != tail && in_side(nxt[x])) x = nxt[x];
      left_of_v = x;
      right_of_v = nxt[x];
    } else {
      Vertex x = u1;
      while (prv[x] != head && in_side(prv[x])) x = prv[x];
      left_of_v = prv[x];
      right_of_v = x;
    }
    nxt[left_of_v] = v;
    prv[v] = left_of_v;
    nxt[v] = right_of_v;
    prv[right_of_v] = v;
  }

  std::vector<Vertex> order;
  order.reserve(N);
  for (Vertex x = nxt[head]; x != tail; x = nxt[x]) order.push_back(x);
  if (static_cast<Vertex>(order.size()) != N)
    throw RecordMismatch("lift lost vertices; record is inconsistent");
  return Arrangement::from_order(order);
}

}  // namespace linarr
