#include "linarr/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <random>

#include "linarr/generate.hpp"

namespace linarr {

double path_count_bound(Vertex n, Cost k, Vertex j, const BoundConstants& bc) {
  double b = std::exp2(bc.a * n + bc.b * static_cast<double>(k) - bc.x * j +
                       bc.pn_offset);
  if (j == 2) b *= 1.0 - bc.d2;
  return b;
}

double tree_count_bound(Vertex n, Cost k, int i, const BoundConstants& bc) {
  return std::exp2(bc.a * n + bc.b * static_cast<double>(k) - bc.c * i +
                   bc.tree_offset);
}

CountReport count_path_arrangements(Vertex n, Cost k, Vertex j) {
  if (n < 2) throw BadParameters("path must have at least two vertices");
  if (k < 0) throw BadParameters("budget must be nonnegative");
  if (j < 0) throw BadParameters("position must be nonnegative");
  CountReport r;
  r.family = "path";
  r.n = n;
  r.k = k;
  r.j_or_i = j;
  r.bound = path_count_bound(n, k, j);
  if (j < 1 || j > n - 1) {
    r.vacuous = true;  // no arrangement puts p_1 there with p_n at n
    r.holds = true;
    return r;
  }
  Graph pn = path_graph(n);
  std::vector<PinMode> pins(static_cast<std::size_t>(n) + 1, PinMode::Free);
  pins[n] = PinMode::RightEndOnly;
  std::uint64_t count = 0;
  enumerate_arrangements_pinned(
      pn, k, pins, [&](const std::vector<Vertex>& order, Cost) {
        if (order[j - 1] == 1) ++count;
        return true;
      });
  r.exact_count = count;
  r.holds = static_cast<double>(count) <= r.bound + bound_slack;
  return r;
}

std::uint64_t count_tree_arrangements(const Graph& tree, Cost k,
                                      const std::vector<Vertex>& X) {
  if (k < 0) throw BadParameters("budget must be nonnegative");
  std::vector<Vertex> xs = X;
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (xs.size() > 3) throw BadParameters("at most three pinned vertices");
  const Vertex n = tree.vertex_count();
  for (Vertex v : xs)
    if (v < 1 || v > n) throw BadParameters("pinned vertex outside the graph");
  if (xs.size() == 3) return 0;  // only two end positions exist
  std::vector<PinMode> pins(static_cast<std::size_t>(n) + 1, PinMode::Free);
  for (Vertex v : xs) pins[v] = PinMode::EndsOnly;
  std::uint64_t count = 0;
  enumerate_arrangements_pinned(tree, k, pins,
                                [&](const std::vector<Vertex>&, Cost) {
                                  ++count;
                                  return true;
                                });
  return count;
}

namespace {

// Per-tree tally of arrangements with nc <= k_max keyed by (nc, first vertex,
// last vertex). Every |OLA^+| count with |X| <= 2 is a partial sum of it.
class EndHistogram {
 public:
  EndHistogram(Vertex n, Cost k_max) : n_(n) {
    cells_.assign(static_cast<std::size_t>(k_max + 1) * (n + 1) * (n + 1), 0);
  }

  void clear() { std::fill(cells_.begin(), cells_.end(), 0); }

  void add(Cost nc, Vertex a, Vertex b) { ++cells_[idx(nc, a, b)]; }

  std::uint64_t at(Cost nc, Vertex a, Vertex b) const {
    return cells_[idx(nc, a, b)];
  }

  std::uint64_t total(Cost k) const {
    std::uint64_t s = 0;
    for (Cost q = 0; q <= k; ++q)
      for (Vertex a = 1; a <= n_; ++a)
        for (Vertex b = 1; b <= n_; ++b) s += at(q, a, b);
    return s;
  }

  std::uint64_t with_end(Cost k, Vertex x) const {
    std::uint64_t s = 0;
    for (Cost q = 0; q <= k; ++q) {
      for (Vertex b = 1; b <= n_; ++b) s += at(q, x, b);
      for (Vertex a = 1; a <= n_; ++a) s += at(q, a, x);
      s -= at(q, x, x);
    }
    return s;
  }

  std::uint64_t with_both_ends(Cost k, Vertex x, Vertex y) const {
    std::uint64_t s = 0;
    for (Cost q = 0; q <= k; ++q) s += at(q, x, y) + at(q, y, x);
    return s;
  }

 private:
  std::size_t idx(Cost nc, Vertex a, Vertex b) const {
    return (static_cast<std::size_t>(nc) * (n_ + 1) + a) * (n_ + 1) + b;
  }

  Vertex n_;
  std::vector<std::uint64_t> cells_;
};

void absorb_tree(const Graph& t, Cost k_max, int i_max, EndHistogram& hist,
                 std::vector<std::array<std::uint64_t, 3>>& best) {
  hist.clear();
  enumerate_arrangements(t, k_max,
                         [&](const std::vector<Vertex>& order, Cost nc) {
                           hist.add(nc, order.front(), order.back());
                           return true;
                         });
  const Vertex n = t.vertex_count();
  for (Cost k = 0; k <= k_max; ++k) {
    auto& row = best[static_cast<std::size_t>(k)];
    row[0] = std::max(row[0], hist.total(k));
    if (i_max >= 1)
      for (Vertex x = 1; x <= n; ++x)
        row[1] = std::max(row[1], hist.with_end(k, x));
    if (i_max >= 2)
      for (Vertex x = 1; x <= n; ++x)
        for (Vertex y = x + 1; y <= n; ++y)
          row[2] = std::max(row[2], hist.with_both_ends(k, x, y));
  }
}

}  // namespace

std::vector<CountReport> verify_bounds(const BoundSweep& sweep) {
  if (sweep.tree_i_max < 0 || sweep.tree_i_max > 2)
    throw BadParameters("tree_i_max must lie in 0..2");
  if (sweep.path_k_max < 0 || sweep.tree_k_max < 0)
    throw BadParameters("budgets must be nonnegative");
  std::vector<CountReport> out;

  for (Vertex n = std::max<Vertex>(2, sweep.path_n_min); n <= sweep.path_n_max;
       ++n) {
    const Cost k_max = sweep.path_k_max;
    std::vector<std::vector<std::uint64_t>> hist(
        static_cast<std::size_t>(k_max) + 1,
        std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
    Graph pn = path_graph(n);
    std::vector<PinMode> pins(static_cast<std::size_t>(n) + 1, PinMode::Free);
    pins[n] = PinMode::RightEndOnly;
    enumerate_arrangements_pinned(
        pn, k_max, pins, [&](const std::vector<Vertex>& order, Cost nc) {
          for (Vertex i = 0; i < n; ++i)
            if (order[i] == 1) {
              ++hist[nc][static_cast<std::size_t>(i) + 1];
              break;
            }
          return true;
        });
    for (Cost k = 0; k <= k_max; ++k) {
      for (Vertex j = sweep.path_j_min; j <= k + sweep.path_j_slack; ++j) {
        CountReport r;
        r.family = "path";
        r.n = n;
        r.k = k;
        r.j_or_i = j;
        r.bound = path_count_bound(n, k, j);
        if (j < 1 || j > n - 1) {
          r.vacuous = true;
        } else {
          for (Cost q = 0; q <= k; ++q) r.exact_count += hist[q][j];
        }
        r.holds = static_cast<double>(r.exact_count) <= r.bound + bound_slack;
        out.push_back(r);
      }
    }
  }

  for (Vertex n = std::max<Vertex>(2, sweep.tree_n_min); n <= sweep.tree_n_max;
       ++n) {
    const Cost k_max = sweep.tree_k_max;
    std::vector<std::array<std::uint64_t, 3>> best(
        static_cast<std::size_t>(k_max) + 1, {0, 0, 0});
    EndHistogram hist(n, k_max);
    if (n <= sweep.exhaustive_tree_n_max) {
      std::vector<Vertex> code(n >= 2 ? static_cast<std::size_t>(n) - 2 : 0, 1);
      for (;;) {
        absorb_tree(tree_from_prufer(n, code), k_max, sweep.tree_i_max, hist,
                    best);
        int pos = static_cast<int>(code.size()) - 1;
        while (pos >= 0 && code[pos] == n) code[pos--] = 1;
        if (pos < 0) break;
        ++code[pos];
      }
    } else {
      std::mt19937_64 rng(sweep.seed + static_cast<std::uint64_t>(n));
      for (int s = 0; s < sweep.tree_samples; ++s) {
        std::vector<Vertex> code(static_cast<std::size_t>(n) - 2);
        for (auto& a : code) a = static_cast<Vertex>(1 + rng() % n);
        absorb_tree(tree_from_prufer(n, code), k_max, sweep.tree_i_max, hist,
                    best);
      }
    }
    for (Cost k = 0; k <= k_max; ++k) {
      for (int i = 0; i <= sweep.tree_i_max; ++i) {
        CountReport r;
        r.family = "tree";
        r.n = n;
        r.k = k;
        r.j_or_i = i;
        r.exact_count = best[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
        r.bound = tree_count_bound(n, k, i);
        r.holds = static_cast<double>(r.exact_count) <= r.bound + bound_slack;
        out.push_back(r);
      }
    }
  }
  return out;
}

std::string bounds_csv(const std::vector<CountReport>& reports) {
  std::string csv = "family,n,k,j_or_i,exact_count,bound,holds\n";
  char buf[192];
  for (const CountReport& r : reports) {
    std::snprintf(buf, sizeof buf, "%s,%d,%lld,%d,%llu,%.9g,%s\n",
                  r.family.c_str(), static_cast<int>(r.n),
                  static_cast<long long>(r.k), static_cast<int>(r.j_or_i),
                  static_cast<unsigned long long>(r.exact_count), r.bound,
                  r.holds ? "true" : "false");
    csv += buf;
  }
  return csv;
}

}  // namespace linarr
