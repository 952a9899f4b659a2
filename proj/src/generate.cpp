#include "linarr/generate.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>

#include "linarr/errors.hpp"

namespace linarr {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

void require(bool ok, const std::string& what) {
  if (!ok) throw BadParams(what);
}

}  // namespace

Graph path_graph(Vertex n) {
  require(n >= 1, "path: n must be at least 1");
  EdgeList e;
  e.reserve(n > 0 ? n - 1 : 0);
  for (Vertex v = 1; v < n; ++v) e.push_back({v, v + 1});
  return Graph::build(n, e);
}

Graph cycle_graph(Vertex n) {
  require(n >= 3, "cycle: n must be at least 3");
  EdgeList e;
  e.reserve(n);
  for (Vertex v = 1; v < n; ++v) e.push_back({v, v + 1});
  e.push_back({n, 1});
  return Graph::build(n, e);
}

Graph clique_graph(Vertex n) {
  require(n >= 1, "clique: n must be at least 1");
  EdgeList e;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) e.push_back({u, v});
  return Graph::build(n, e);
}

Graph star_graph(Vertex n) {
  require(n >= 1, "star: n must be at least 1");
  EdgeList e;
  for (Vertex v = 2; v <= n; ++v) e.push_back({1, v});
  return Graph::build(n, e);
}

Graph caterpillar_graph(Vertex spine, Vertex legs) {
  require(spine >= 1, "caterpillar: spine must be at least 1");
  require(legs >= 0, "caterpillar: legs must be nonnegative");
  EdgeList e;
  for (Vertex v = 1; v < spine; ++v) e.push_back({v, v + 1});
  Vertex next = spine + 1;
  for (Vertex v = 1; v <= spine; ++v)
    for (Vertex l = 0; l < legs; ++l) e.push_back({v, next++});
  return Graph::build(next - 1, e);
}

Graph tree_from_prufer(Vertex n, const std::vector<Vertex>& code) {
  require(n >= 2, "prufer: n must be at least 2");
  require(code.size() == static_cast<std::size_t>(n) - 2,
          "prufer: code length must be n-2");
  for (Vertex a : code)
    require(a >= 1 && a <= n, "prufer: code entries must lie in 1..n");
  std::vector<Vertex> deg(static_cast<std::size_t>(n) + 1, 1);
  for (Vertex a : code) ++deg[a];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 1; v <= n; ++v)
    if (deg[v] == 1) leaves.push(v);
  EdgeList e;
  e.reserve(static_cast<std::size_t>(n) - 1);
  for (Vertex a : code) {
    Vertex leaf = leaves.top();
    leaves.pop();
    e.push_back({leaf, a});
    deg[leaf] = 0;
    if (--deg[a] == 1) leaves.push(a);
  }
  Vertex u = leaves.top();
  leaves.pop();
  Vertex w = leaves.top();
  e.push_back({u, w});
  return Graph::build(n, e);
}

Graph random_tree(Vertex n, std::uint64_t seed) {
  require(n >= 1, "random_tree: n must be at least 1");
  if (n == 1) return Graph::build(1, {});
  std::mt19937_64 rng(seed);
  std::vector<Vertex> code(static_cast<std::size_t>(n) - 2);
  for (auto& a : code) a = static_cast<Vertex>(1 + rng() % n);
  return tree_from_prufer(n, code);
}

Graph tree_plus_chords(Vertex n, Vertex chords, std::uint64_t seed) {
  require(n >= 1, "tree_plus_chords: n must be at least 1");
  require(chords >= 0, "tree_plus_chords: chords must be nonnegative");
  const std::int64_t capacity =
      static_cast<std::int64_t>(n) * (n - 1) / 2 - (n - 1);
  require(chords <= capacity, "tree_plus_chords: not enough non-tree pairs");
  std::mt19937_64 rng(seed);
  Graph t = n == 1 ? Graph::build(1, {}) : [&] {
    std::vector<Vertex> code(static_cast<std::size_t>(n) - 2);
    for (auto& a : code) a = static_cast<Vertex>(1 + rng() % n);
    return tree_from_prufer(n, code);
  }();
  std::set<std::pair<Vertex, Vertex>> present;
  EdgeList e;
  for (const Edge& te : t.edges()) {
    present.insert({te.u, te.v});
    e.push_back({te.u, te.v});
  }
  Vertex added = 0;
  while (added < chords) {
    Vertex u = static_cast<Vertex>(1 + rng() % n);
    Vertex v = static_cast<Vertex>(1 + rng() % n);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (!present.insert({u, v}).second) continue;
    e.push_back({u, v});
    ++added;
  }
  return Graph::build(n, e);
}

Graph two_cliques_bridged(Vertex a, Vertex b) {
  require(a >= 1 && b >= 1, "two_cliques_bridged: both sizes must be at least 1");
  EdgeList e;
  for (Vertex u = 1; u <= a; ++u)
    for (Vertex v = u + 1; v <= a; ++v) e.push_back({u, v});
  for (Vertex u = a + 1; u <= a + b; ++u)
    for (Vertex v = u + 1; v <= a + b; ++v) e.push_back({u, v});
  e.push_back({a, a + 1});
  return Graph::build(a + b, e);
}

Graph generate_instance(const std::string& family, const GenParams& params,
                        std::uint64_t seed) {
  auto get = [&](const std::string& key, std::int64_t fallback,
                 bool required_key = false) -> std::int64_t {
    auto it = params.find(key);
    if (it == params.end()) {
      if (required_key) throw BadParams(family + ": missing parameter '" + key + "'");
      return fallback;
    }
    return it->second;
  };
  auto check_keys = [&](std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : params) {
      bool ok = false;
      for (const char* a : allowed)
        if (key == a) ok = true;
      if (!ok) throw BadParams(family + ": unknown parameter '" + key + "'");
    }
  };
  auto as_vertex = [&](std::int64_t v, const char* what) -> Vertex {
    if (v < 0 || v > 10'000'000) throw BadParams(family + ": " + what + " out of range");
    return static_cast<Vertex>(v);
  };

  if (family == "path") {
    check_keys({"n"});
    return path_graph(as_vertex(get("n", 0, true), "n"));
  }
  if (family == "cycle") {
    check_keys({"n"});
    return cycle_graph(as_vertex(get("n", 0, true), "n"));
  }
  if (family == "clique") {
    check_keys({"n"});
    return clique_graph(as_vertex(get("n", 0, true), "n"));
  }
  if (family == "star") {
    check_keys({"n"});
    return star_graph(as_vertex(get("n", 0, true), "n"));
  }
  if (family == "caterpillar") {
    check_keys({"spine", "legs"});
    return caterpillar_graph(as_vertex(get("spine", 0, true), "spine"),
                             as_vertex(get("legs", 1), "legs"));
  }
  if (family == "random_tree") {
    check_keys({"n"});
    return random_tree(as_vertex(get("n", 0, true), "n"), seed);
  }
  if (family == "tree_plus_chords") {
    check_keys({"n", "chords"});
    return tree_plus_chords(as_vertex(get("n", 0, true), "n"),
                            as_vertex(get("chords", 1), "chords"), seed);
  }
  if (family == "two_cliques_bridged") {
    check_keys({"a", "b"});
    return two_cliques_bridged(as_vertex(get("a", 0, true), "a"),
                               as_vertex(get("b", 0, true), "b"));
  }
  throw UnknownFamily("unknown family '" + family + "'");
}

}  // namespace linarr
