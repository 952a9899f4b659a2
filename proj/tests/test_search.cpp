#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "linarr/generate.hpp"
#include "linarr/oracle.hpp"
#include "linarr/search.hpp"

using namespace linarr;
using helpers::from_edges;

namespace {

using OrderSet = std::set<std::pair<std::vector<Vertex>, Cost>>;

OrderSet enumerate_as_set(const Graph& tree, Cost k) {
  OrderSet out;
  for (const auto& [arr, nc] : enumerate_arrangements(tree, k)) {
    bool fresh = out.insert({arr.order(), nc}).second;
    CHECK(fresh);  // each arrangement exactly once
  }
  return out;
}

OrderSet brute_as_set(const Graph& g, Cost k) {
  OrderSet out;
  for (auto& [order, nc] : helpers::brute_filter(g, k)) out.insert({order, nc});
  return out;
}

// interleaved labels: local vertex v of part p becomes (v-1)*parts + p + 1,
// so every part's smallest global id fixes the part order
Graph striped_union(const std::vector<Graph>& parts) {
  const auto width = static_cast<Vertex>(parts.size());
  Vertex n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex p = 0; p < width; ++p) {
    const Graph& g = parts[p];
    n = std::max(n, static_cast<Vertex>((g.vertex_count() - 1) * width + p + 1));
    for (const Edge& e : g.edges())
      edges.push_back({(e.u - 1) * width + p + 1, (e.v - 1) * width + p + 1});
  }
  return Graph::build(n, edges);
}

}  // namespace

TEST_CASE("spanning tree") {
  CHECK(spanning_tree(cycle_graph(5)) == path_graph(5));
  CHECK(spanning_tree(clique_graph(4)) == path_graph(4));
  Graph t = random_tree(12, 3);
  CHECK(spanning_tree(t) == t);
  CHECK_THROWS_AS(spanning_tree(from_edges(4, {{1, 2}, {3, 4}})), Disconnected);
}

TEST_CASE("leaf elimination order") {
  CHECK(leaf_elimination_order(path_graph(5)) ==
        std::vector<Vertex>{1, 2, 3, 4, 5});
  // the star center becomes a leaf once all but one spoke is gone
  CHECK(leaf_elimination_order(star_graph(4)) == std::vector<Vertex>{2, 3, 1, 4});
  CHECK(leaf_elimination_order(path_graph(1)) == std::vector<Vertex>{1});
  CHECK_THROWS_AS(leaf_elimination_order(cycle_graph(3)), NotATree);
  CHECK_THROWS_AS(leaf_elimination_order(from_edges(4, {{1, 2}, {3, 4}})),
                  NotATree);
  CHECK_THROWS_AS(leaf_elimination_order(Graph::build(0, {})), NotATree);
}

TEST_CASE("enumeration matches the brute-force filter on trees") {
  std::vector<Graph> corpus{path_graph(3),        path_graph(5),
                            path_graph(6),        star_graph(4),
                            star_graph(5),        caterpillar_graph(3, 1),
                            random_tree(6, 11),   random_tree(7, 12),
                            random_tree(6, 13)};
  for (const Graph& t : corpus)
    for (Cost k = 0; k <= 3; ++k) CHECK(enumerate_as_set(t, k) == brute_as_set(t, k));
}

TEST_CASE("enumeration basics frozen") {
  // only the two end-to-end traversals of a path cost nothing extra
  OrderSet p3 = enumerate_as_set(path_graph(3), 0);
  CHECK(p3 == OrderSet{{{1, 2, 3}, 0}, {{3, 2, 1}, 0}});

  CHECK(enumerate_arrangements(star_graph(4), 0).empty());
  CHECK(enumerate_arrangements(star_graph(4), 1).size() == 12);

  EnumStats stats = enumerate_arrangements(path_graph(4), 1,
                                           [](const std::vector<Vertex>&, Cost) {
                                             return true;
                                           });
  CHECK(stats.emitted == enumerate_arrangements(path_graph(4), 1).size());
  CHECK(stats.nodes >= stats.emitted);

  CHECK_THROWS_AS(enumerate_arrangements(path_graph(3), -1), BadParameters);
  CHECK_THROWS_AS(enumerate_arrangements(cycle_graph(4), 1), NotATree);
}

TEST_CASE("visitor can stop the enumeration") {
  int seen = 0;
  EnumStats stats = enumerate_arrangements(path_graph(4), 2,
                                           [&](const std::vector<Vertex>&, Cost) {
                                             ++seen;
                                             return false;
                                           });
  CHECK(seen == 1);
  CHECK(stats.emitted == 1);
}

TEST_CASE("pinned enumeration matches filtered brute force") {
  auto pinned_set = [](const Graph& t, Cost k, const std::vector<PinMode>& pins) {
    OrderSet out;
    enumerate_arrangements_pinned(t, k, pins,
                                  [&](const std::vector<Vertex>& order, Cost nc) {
                                    CHECK(out.insert({order, nc}).second);
                                    return true;
                                  });
    return out;
  };
  auto filtered = [](const Graph& g, Cost k, auto&& keep) {
    OrderSet out;
    for (auto& [order, nc] : helpers::brute_filter(g, k))
      if (keep(order)) out.insert({order, nc});
    return out;
  };

  for (const Graph& t : {path_graph(4), path_graph(5), star_graph(4),
                         caterpillar_graph(3, 1)}) {
    const auto n = static_cast<std::size_t>(t.vertex_count());
    for (Cost k = 0; k <= 3; ++k) {
      std::vector<PinMode> pins(n + 1, PinMode::Free);

      pins[n] = PinMode::RightEndOnly;
      CHECK(pinned_set(t, k, pins) ==
            filtered(t, k, [&](const std::vector<Vertex>& o) {
              return o.back() == static_cast<Vertex>(n);
            }));

      pins.assign(n + 1, PinMode::Free);
      pins[1] = PinMode::EndsOnly;
      CHECK(pinned_set(t, k, pins) ==
            filtered(t, k, [](const std::vector<Vertex>& o) {
              return o.front() == 1 || o.back() == 1;
            }));

      pins.assign(n + 1, PinMode::Free);
      pins[1] = PinMode::EndsOnly;
      pins[2] = PinMode::EndsOnly;
      CHECK(pinned_set(t, k, pins) ==
            filtered(t, k, [](const std::vector<Vertex>& o) {
              return (o.front() == 1 && o.back() == 2) ||
                     (o.front() == 2 && o.back() == 1);
            }));

      pins.assign(n + 1, PinMode::Free);
      pins[1] = PinMode::RightEndOnly;
      pins[2] = PinMode::EndsOnly;
      CHECK(pinned_set(t, k, pins) ==
            filtered(t, k, [](const std::vector<Vertex>& o) {
              return o.back() == 1 && o.front() == 2;
            }));
    }
  }

  std::vector<PinMode> short_pins(3, PinMode::Free);
  CHECK_THROWS_AS(enumerate_arrangements_pinned(
                      path_graph(4), 1, short_pins,
                      [](const std::vector<Vertex>&, Cost) { return true; }),
                  BadParameters);
}

TEST_CASE("best arrangement agrees with the exact oracle") {
  for (Vertex n = 1; n <= 5; ++n) {
    for (const Graph& g : helpers::all_connected_graphs(n)) {
      const Cost opt = exact_ola_dp(g).ola_plus;
      for (Cost k = 0; k <= 4; ++k) {
        auto best = best_arrangement(g, k);
        if (opt > k) {
          CHECK_FALSE(best.has_value());
        } else {
          REQUIRE(best.has_value());
          CHECK(best->net_cost == opt);
          CHECK(net_cost(g, best->arrangement) == opt);
        }
      }
    }
  }
}

TEST_CASE("best arrangement details") {
  auto best = best_arrangement(path_graph(3), 2);
  REQUIRE(best.has_value());
  CHECK(best->arrangement == Arrangement::identity(3));  // first found wins ties

  CHECK(best_arrangement(Graph::build(0, {}), 0)->net_cost == 0);
  CHECK(best_arrangement(from_edges(1, {}), 0)->net_cost == 0);
  CHECK_THROWS_AS(best_arrangement(from_edges(4, {{1, 2}, {3, 4}}), 1),
                  Disconnected);
  CHECK_THROWS_AS(best_arrangement(path_graph(3), -1), BadParameters);
}

TEST_CASE("reflection pruning keeps the optimum") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    Graph g = helpers::random_connected_graph(
        static_cast<Vertex>(5 + seed % 4), static_cast<int>(seed % 3), seed);
    for (Cost k = 0; k <= 3; ++k) {
      auto plain = best_arrangement(g, k);
      auto pruned = best_arrangement(g, k, SearchOptions{true});
      CHECK(plain.has_value() == pruned.has_value());
      if (plain) {
        CHECK(plain->net_cost == pruned->net_cost);
        CHECK(net_cost(g, pruned->arrangement) == pruned->net_cost);
      }
    }
  }
}

TEST_CASE("solve on a path plus triangle union") {
  // path on {1,3,5}, triangle on {2,4,6}
  Graph g = from_edges(6, {{1, 3}, {3, 5}, {2, 4}, {4, 6}, {2, 6}});

  SolveReport no = solve(g, 0);
  CHECK_FALSE(no.decision);
  CHECK_FALSE(no.net_cost_opt.has_value());
  CHECK_FALSE(no.arrangement.has_value());
  CHECK(no.kernel_stats.empty());  // rejected before kernelization
  CHECK(no.path_components == 1);

  SolveReport yes = solve(g, 1);
  REQUIRE(yes.decision);
  CHECK(yes.net_cost_opt == 1);
  CHECK(yes.path_components == 1);
  REQUIRE(yes.kernel_stats.size() == 1);
  CHECK(yes.kernel_stats[0].component == 2);
  CHECK(yes.kernel_stats[0].kernel_n == 3);
  CHECK(yes.kernel_stats[0].suppressed == 0);

  const Arrangement& a = *yes.arrangement;
  CHECK(net_cost(g, a) == 1);
  // first block walks the path component from its smaller endpoint
  CHECK(a.vertex_at(1) == 1);
  CHECK(a.vertex_at(2) == 3);
  CHECK(a.vertex_at(3) == 5);
  std::set<Vertex> tail{a.vertex_at(4), a.vertex_at(5), a.vertex_at(6)};
  CHECK(tail == std::set<Vertex>{2, 4, 6});
}

TEST_CASE("more non-path components than budget is an immediate no") {
  Graph g = striped_union({cycle_graph(3), cycle_graph(3), path_graph(4)});
  SolveReport rep = solve(g, 1);
  CHECK_FALSE(rep.decision);
  CHECK(rep.kernel_stats.empty());
  CHECK(rep.path_components == 3);  // the 4-path and two padding vertices
  CHECK(solve(g, 2).decision);
}

TEST_CASE("solve agrees with per-component optima on random unions") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    std::vector<Graph> parts;
    Cost total = 0;
    for (std::uint64_t p = 0; p < 1 + seed % 3; ++p) {
      Graph part = helpers::random_connected_graph(
          static_cast<Vertex>(4 + (seed + p) % 4),
          static_cast<int>((seed + p) % 3), 100 * seed + p);
      total += exact_ola_dp(part).ola_plus;
      parts.push_back(std::move(part));
    }
    Graph g = striped_union(parts);
    for (Cost k = 0; k <= 5; ++k) {
      SolveReport rep = solve(g, k);
      CHECK(rep.decision == (total <= k));
      if (rep.decision) {
        CHECK(*rep.net_cost_opt == total);
        CHECK(net_cost(g, *rep.arrangement) == total);
      }
    }
  }
}

TEST_CASE("solve trivia") {
  SolveReport empty = solve(Graph::build(0, {}), 0);
  CHECK(empty.decision);
  CHECK(empty.net_cost_opt == 0);
  CHECK(empty.arrangement->size() == 0);
  CHECK(empty.path_components == 0);

  SolveReport dots = solve(Graph::build(3, {}), 0);
  CHECK(dots.decision);
  CHECK(dots.net_cost_opt == 0);
  CHECK(dots.path_components == 3);
  CHECK(dots.arrangement->size() == 3);

  CHECK_THROWS_AS(solve(path_graph(3), -1), BadParameters);
}

TEST_CASE("decision is monotone in the budget") {
  Graph g = striped_union({cycle_graph(5), star_graph(5)});
  bool seen_yes = false;
  for (Cost k = 0; k <= 8; ++k) {
    SolveReport rep = solve(g, k);
    if (seen_yes) CHECK(rep.decision);
    if (rep.decision) {
      seen_yes = true;
      CHECK(*rep.net_cost_opt ==
            exact_ola_dp(cycle_graph(5)).ola_plus +
                exact_ola_dp(star_graph(5)).ola_plus);
    }
  }
  CHECK(seen_yes);
}

TEST_CASE("worker threads do not change the report") {
  std::vector<Graph> parts;
  for (std::uint64_t p = 0; p < 6; ++p)
    parts.push_back(helpers::random_connected_graph(
        static_cast<Vertex>(4 + p % 3), static_cast<int>(p % 3), 40 + p));
  Graph g = striped_union(parts);
  for (Cost k = 0; k <= 6; ++k) {
    SolveReport one = solve(g, k, SolveOptions{1, false});
    SolveReport four = solve(g, k, SolveOptions{4, false});
    CHECK(one.decision == four.decision);
    CHECK(one.net_cost_opt == four.net_cost_opt);
    if (one.decision) CHECK(*one.arrangement == *four.arrangement);
  }
}

TEST_CASE("long path is solved without search") {
  SolveReport rep = solve(path_graph(100000), 0);
  CHECK(rep.decision);
  CHECK(*rep.net_cost_opt == 0);
  CHECK(rep.path_components == 1);
  CHECK(rep.kernel_stats.empty());
  CHECK(net_cost(path_graph(100000), *rep.arrangement) == 0);
}
