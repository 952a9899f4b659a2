#include "linarr/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <queue>
#include <thread>

#include "linarr/decomposition.hpp"

namespace linarr {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void require_tree(const Graph& t) {
  if (t.vertex_count() == 0 || t.edge_count() != t.vertex_count() - 1 ||
      !is_connected(t))
    throw NotATree("input is not a tree");
}

// Depth-first insertion of vertices (in reversed leaf-elimination order)
// into the gaps of a partial arrangement. Inserting x into gap g adds
// (tree edges spanning g) + (distance to x's placed neighbor - 1) to the
// exact net cost of the partial arrangement, and no later insertion can
// remove it, so branches above *budget are dead. The budget may shrink
// between nodes (used for incumbent pruning in best_arrangement).
class EnumCore {
 public:
  EnumCore(const Graph& tree, Cost* budget, const std::vector<PinMode>* pins,
           bool halve, const ArrangementVisitor& visit)
      : tree_(tree), budget_(budget), pins_(pins), halve_(halve), visit_(visit) {
    n_ = tree.vertex_count();
    auto elim = leaf_elimination_order(tree);
    ins_.assign(elim.rbegin(), elim.rend());
    anch_.assign(n_, 0);
    std::vector<char> placed(static_cast<std::size_t>(n_) + 1, 0);
    for (Vertex i = 0; i < n_; ++i) {
      for (Vertex w : tree.neighbors(ins_[i]))
        if (placed[w]) anch_[i] = w;  // exactly one placed neighbor
      placed[ins_[i]] = 1;
    }
    pos_.assign(static_cast<std::size_t>(n_) + 1, 0);
    diff_.assign(static_cast<std::size_t>(n_) + 2, 0);
    cross_.assign(static_cast<std::size_t>(n_) + 1,
                  std::vector<Cost>(static_cast<std::size_t>(n_) + 1, 0));
    order_.reserve(n_);
  }

  EnumStats run() {
    rec(0, 0, false, false);
    return stats_;
  }

 private:
  void insert_at(Vertex x, int g) {
    order_.insert(order_.begin() + g, x);
    for (int i = g; i < static_cast<int>(order_.size()); ++i) pos_[order_[i]] = i;
  }

  void erase_at(int g) {
    order_.erase(order_.begin() + g);
    for (int i = g; i < static_cast<int>(order_.size()); ++i) pos_[order_[i]] = i;
  }

  void try_gap(int depth, Cost spent, int g, int iy, const std::vector<Cost>& cross,
               bool sealedL, bool sealedR) {
    if (stopped_) return;
    Cost dist = 0;
    if (depth > 0) dist = (g <= iy) ? iy - g : static_cast<Cost>(g) - iy - 1;
    const Cost sp = spent + cross[g] + dist;
    if (sp > *budget_) return;
    insert_at(ins_[depth], g);
    rec(depth + 1, sp, sealedL, sealedR);
    erase_at(g);
  }

  void rec(int depth, Cost spent, bool sealedL, bool sealedR) {
    if (stopped_) return;
    ++stats_.nodes;
    if (depth == n_) {
      ++stats_.emitted;
      if (!visit_(order_, spent)) stopped_ = true;
      return;
    }
    const Vertex x = ins_[depth];
    const int s = depth;

    auto& cross = cross_[depth];
    std::fill(diff_.begin(), diff_.begin() + s + 2, 0);
    for (int j = 1; j < depth; ++j) {
      int i1 = pos_[ins_[j]], i2 = pos_[anch_[j]];
      if (i1 > i2) std::swap(i1, i2);
      ++diff_[i1 + 1];
      --diff_[i2 + 1];
    }
    Cost acc = 0;
    for (int g = 0; g <= s; ++g) {
      acc += diff_[g];
      cross[g] = acc;
    }
    const int iy = (depth == 0) ? -1 : pos_[anch_[depth]];

    switch (pins_ ? (*pins_)[x] : PinMode::Free) {
      case PinMode::Free: {
        const int gmin = sealedL ? 1 : 0;
        int gmax = s - (sealedR ? 1 : 0);
        if (halve_ && depth == 1) gmax = 0;  // skip mirror trajectories
        for (int g = gmin; g <= gmax; ++g)
          try_gap(depth, spent, g, iy, cross, sealedL, sealedR);
      } break;
      case PinMode::EndsOnly: {
        if (s == 0) {
          try_gap(depth, spent, 0, iy, cross, true, sealedR);
          if (depth + 1 < n_)  // for the last vertex both ends coincide
            try_gap(depth, spent, 0, iy, cross, sealedL, true);
        } else {
          if (!sealedL) try_gap(depth, spent, 0, iy, cross, true, sealedR);
          if (!sealedR) try_gap(depth, spent, s, iy, cross, sealedL, true);
        }
      } break;
      case PinMode::RightEndOnly: {
        if (!sealedR) try_gap(depth, spent, s, iy, cross, sealedL, true);
      } break;
    }
  }

  const Graph& tree_;
  Cost* budget_;
  const std::vector<PinMode>* pins_;
  bool halve_;
  const ArrangementVisitor& visit_;
  Vertex n_{0};
  std::vector<Vertex> ins_;
  std::vector<Vertex> anch_;
  std::vector<Vertex> order_;
  std::vector<Vertex> pos_;
  std::vector<Cost> diff_;
  std::vector<std::vector<Cost>> cross_;
  EnumStats stats_;
  bool stopped_ = false;
};

std::vector<Vertex> path_order(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::vector<Vertex> order;
  order.reserve(n);
  if (n == 0) return order;
  Vertex start = 1;
  for (Vertex v = 1; v <= n; ++v)
    if (g.degree(v) <= 1) {
      start = v;
      break;
    }
  Vertex prev = 0, cur = start;
  for (Vertex i = 0; i < n; ++i) {
    order.push_back(cur);
    Vertex next = 0;
    for (Vertex w : g.neighbors(cur))
      if (w != prev) next = w;
    prev = cur;
    cur = next;
  }
  return order;
}

}  // namespace

Graph spanning_tree(const Graph& g) {
  const Vertex n = g.vertex_count();
  if (n == 0) return g;
  RootedDfsTree t = dfs_tree_with_subtree_sizes(g, 1);
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (Vertex v = 1; v <= n; ++v)
    if (t.parent[v] != 0) edges.push_back({t.parent[v], v});
  return Graph::build(n, edges);
}

std::vector<Vertex> leaf_elimination_order(const Graph& tree) {
  require_tree(tree);
  const Vertex n = tree.vertex_count();
  std::vector<Vertex> deg(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> removed(static_cast<std::size_t>(n) + 1, 0);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 1; v <= n; ++v) {
    deg[v] = tree.degree(v);
    if (deg[v] <= 1) leaves.push(v);
  }
  std::vector<Vertex> order;
  order.reserve(n);
  while (!leaves.empty()) {
    Vertex v = leaves.top();
    leaves.pop();
    if (removed[v]) continue;
    removed[v] = 1;
    order.push_back(v);
    for (Vertex w : tree.neighbors(v))
      if (!removed[w] && --deg[w] == 1) leaves.push(w);
  }
  return order;
}

EnumStats enumerate_arrangements(const Graph& tree, Cost k,
                                 const ArrangementVisitor& visit) {
  if (k < 0) throw BadParameters("budget must be nonnegative");
  Cost budget = k;
  return EnumCore(tree, &budget, nullptr, false, visit).run();
}

std::vector<std::pair<Arrangement, Cost>> enumerate_arrangements(const Graph& tree,
                                                                 Cost k) {
  std::vector<std::pair<Arrangement, Cost>> out;
  enumerate_arrangements(tree, k,
                         [&](const std::vector<Vertex>& order, Cost nc) {
                           out.push_back({Arrangement::from_order(order), nc});
                           return true;
                         });
  return out;
}

EnumStats enumerate_arrangements_pinned(const Graph& tree, Cost k,
                                        const std::vector<PinMode>& pins,
                                        const ArrangementVisitor& visit) {
  if (k < 0) throw BadParameters("budget must be nonnegative");
  if (pins.size() != static_cast<std::size_t>(tree.vertex_count()) + 1)
    throw BadParameters("pins must have one slot per vertex");
  Cost budget = k;
  return EnumCore(tree, &budget, &pins, false, visit).run();
}

std::optional<BestArrangement> best_arrangement(const Graph& g, Cost k,
                                                const SearchOptions& opts) {
  if (k < 0) throw BadParameters("budget must be nonnegative");
  const Vertex n = g.vertex_count();
  if (n == 0) return BestArrangement{Arrangement::identity(0), 0};
  if (!is_connected(g)) throw Disconnected("graph is not connected");
  if (n == 1) return BestArrangement{Arrangement::identity(1), 0};

  const Graph t = spanning_tree(g);
  const Cost m = g.edge_count();
  Cost budget = k;
  Cost best_nc = std::numeric_limits<Cost>::max();
  std::vector<Vertex> best_order;
  std::vector<Vertex> posbuf(static_cast<std::size_t>(n) + 1, 0);

  ArrangementVisitor visit = [&](const std::vector<Vertex>& order, Cost) {
    for (Vertex i = 0; i < n; ++i) posbuf[order[i]] = i + 1;
    Cost f = -m;
    for (const Edge& e : g.edges()) {
      Cost d = posbuf[e.u] - posbuf[e.v];
      f += d < 0 ? -d : d;
    }
    if (f <= k && f < best_nc) {
      best_nc = f;
      best_order = order;
      budget = std::min(budget, f - 1);
    }
    return true;
  };
  EnumCore(t, &budget, nullptr, opts.symmetry_prune, visit).run();

  if (best_order.empty()) return std::nullopt;
  return BestArrangement{Arrangement::from_order(best_order), best_nc};
}

SolveReport solve(const Graph& g, Cost k, const SolveOptions& opts) {
  if (k < 0) throw BadParameters("budget must be nonnegative");
  SolveReport rep;
  rep.k = k;

  auto t0 = std::chrono::steady_clock::now();
  ComponentSplit split = connected_components(g);
  std::vector<int> nonpath;
  std::vector<char> part_is_path(split.parts.size(), 0);
  for (std::size_t i = 0; i < split.parts.size(); ++i) {
    if (is_simple_path(split.parts[i].graph)) {
      part_is_path[i] = 1;
      ++rep.path_components;
    } else {
      nonpath.push_back(static_cast<int>(i));
    }
  }
  rep.timings.components_ms = ms_since(t0);

  const Cost p = static_cast<Cost>(nonpath.size());
  if (p > k) {
    rep.decision = false;  // every non-path component costs at least 1
    return rep;
  }

  struct CompOutcome {
    ComponentKernelStats stats;
    std::optional<Arrangement> lifted;  // local labels
    Cost nc{0};
    double kernelize_ms{0}, search_ms{0}, lift_ms{0};
  };
  const Cost kc = k - p + 1;
  std::vector<CompOutcome> outcomes(nonpath.size());

  auto run_component = [&](std::size_t j) {
    const int part = nonpath[j];
    const Graph& comp = split.parts[part].graph;
    CompOutcome& out = outcomes[j];
    out.stats.component = part + 1;

    auto tk = std::chrono::steady_clock::now();
    SuppressionPlan plan = suppressible_sequence(comp, kc);
    KernelResult kres = suppress_all(comp, plan);
    out.stats.kernel_n = kres.kernel.vertex_count();
    out.stats.kernel_m = kres.kernel.edge_count();
    out.stats.suppressed = static_cast<Vertex>(plan.order.size());
    const bool accepted = kernel_gate(kres.kernel, kc) == KernelGate::Accept;
    out.kernelize_ms = ms_since(tk);
    if (!accepted) return;

    auto ts = std::chrono::steady_clock::now();
    auto best = best_arrangement(kres.kernel, kc, {opts.symmetry_prune});
    out.search_ms = ms_since(ts);
    if (!best) return;

    auto tl = std::chrono::steady_clock::now();
    Arrangement lifted = lift_arrangement(kres.record, best->arrangement);
    out.nc = net_cost(comp, lifted);
    if (out.nc != best->net_cost)
      throw InternalInvariantViolation(
          "lifted arrangement changed the optimal net cost");
    out.lifted = std::move(lifted);
    out.lift_ms = ms_since(tl);
  };

  const int threads = std::max(1, opts.threads);
  if (threads == 1 || nonpath.size() <= 1) {
    for (std::size_t j = 0; j < nonpath.size(); ++j) run_component(j);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto worker = [&] {
      for (;;) {
        std::size_t j = next.fetch_add(1);
        if (j >= nonpath.size()) return;
        try {
          run_component(j);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!err) err = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    const int nthreads = std::min<int>(threads, static_cast<int>(nonpath.size()));
    pool.reserve(nthreads);
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
  }

  Cost sum = 0;
  bool all_ok = true;
  for (auto& out : outcomes) {
    rep.kernel_stats.push_back(out.stats);
    rep.timings.kernelize_ms += out.kernelize_ms;
    rep.timings.search_ms += out.search_ms;
    rep.timings.lift_ms += out.lift_ms;
    if (!out.lifted)
      all_ok = false;
    else
      sum += out.nc;
  }
  if (!all_ok || sum > k) {
    rep.decision = false;
    return rep;
  }

  rep.decision = true;
  rep.net_cost_opt = sum;
  std::vector<Vertex> positions(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  Vertex offset = 0;
  std::vector<std::optional<Arrangement>*> lifted_by_part(split.parts.size(), nullptr);
  for (std::size_t j = 0; j < nonpath.size(); ++j)
    lifted_by_part[nonpath[j]] = &outcomes[j].lifted;
  for (std::size_t i = 0; i < split.parts.size(); ++i) {
    const ComponentPart& part = split.parts[i];
    const Vertex cn = part.graph.vertex_count();
    if (part_is_path[i]) {
      std::vector<Vertex> order = path_order(part.graph);
      for (Vertex q = 0; q < cn; ++q)
        positions[part.to_parent[order[q]]] = offset + q + 1;
    } else {
      const Arrangement& a = **lifted_by_part[i];
      for (Vertex local = 1; local <= cn; ++local)
        positions[part.to_parent[local]] = offset + a.position_of(local);
    }
    offset += cn;
  }
  rep.arrangement = Arrangement(std::move(positions));
  return rep;
}

}  // namespace linarr
