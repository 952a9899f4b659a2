#pragma once

#include "linarr/graph.hpp"

namespace linarr {

struct OracleResult {
  Cost ola{0};       // minimum arrangement cost
  Cost ola_plus{0};  // ola - |E|
  Arrangement witness;
};

// Minimum linear arrangement by checking every permutation. Throws TooLarge
// for n > 9. Witness is the lexicographically first optimal order.
OracleResult exact_ola_enum(const Graph& g);

// Minimum linear arrangement via subset DP over vertex prefixes: the cost of
// an arrangement equals the sum over the n-1 gaps of the number of edges
// crossing the gap, so dp[S] = min_{v in S} dp[S\{v}] + cut(S). One 32-bit
// value per subset; the witness is recovered by re-deriving argmins from the
// table. Throws TooLarge for n > 24.
OracleResult exact_ola_dp(const Graph& g);

}  // namespace linarr
