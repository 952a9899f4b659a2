#include "linarr/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>

namespace linarr {

OracleResult exact_ola_enum(const Graph& g) {
  const Vertex n = g.vertex_count();
  if (n > 9) throw TooLarge("permutation oracle capped at 9 vertices");
  OracleResult res;
  if (n == 0) {
    res.witness = Arrangement::identity(0);
    return res;
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::vector<Vertex> pos(static_cast<std::size_t>(n) + 1, 0);
  Cost best = std::numeric_limits<Cost>::max();
  std::vector<Vertex> best_order;
  do {
    for (Vertex i = 0; i < n; ++i) pos[order[i]] = i + 1;
    Cost cost = 0;
    for (const Edge& e : g.edges()) {
      Cost d = pos[e.u] - pos[e.v];
      cost += d < 0 ? -d : d;
      if (cost >= best) break;
    }
    if (cost < best) {
      best = cost;
      best_order = order;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  res.ola = best;
  res.ola_plus = best - g.edge_count();
  res.witness = Arrangement::from_order(best_order);
  return res;
}

OracleResult exact_ola_dp(const Graph& g) {
  const Vertex n = g.vertex_count();
  if (n > 24) throw TooLarge("subset DP oracle capped at 24 vertices");
  OracleResult res;
  if (n == 0) {
    res.witness = Arrangement::identity(0);
    return res;
  }

  std::vector<std::uint32_t> nbr(n, 0);
  for (const Edge& e : g.edges()) {
    nbr[e.u - 1] |= 1u << (e.v - 1);
    nbr[e.v - 1] |= 1u << (e.u - 1);
  }

  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::int32_t> dp(static_cast<std::size_t>(full) + 1);
  dp[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    // edges leaving the prefix set s
    std::int32_t cut = 0;
    for (std::uint32_t rest = s; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      cut += std::popcount(nbr[v] & ~s);
    }
    std::int32_t best = std::numeric_limits<std::int32_t>::max();
    for (std::uint32_t rest = s; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      best = std::min(best, dp[s & ~(1u << v)]);
    }
    dp[s] = best + cut;
  }

  // witness: peel the last-placed vertex off the full set, smallest id first
  std::vector<Vertex> order(n);
  std::uint32_t s = full;
  for (Vertex slot = n; slot >= 1; --slot) {
    std::int32_t cut = 0;
    for (std::uint32_t rest = s; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      cut += std::popcount(nbr[v] & ~s);
    }
    for (std::uint32_t rest = s; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (dp[s] == dp[s & ~(1u << v)] + cut) {
        order[slot - 1] = v + 1;
        s &= ~(1u << v);
        break;
      }
    }
  }

  res.ola = dp[full];
  res.ola_plus = res.ola - g.edge_count();
  res.witness = Arrangement::from_order(order);
  return res;
}

}  // namespace linarr
