#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linarr/search.hpp"

namespace linarr {

// Constants of the analytic count bounds. Path bound:
//   2^(a*n + b*k - x*j + pn_offset), scaled by (1 - d2) when j == 2.
// Tree bound, i = number of vertices pinned to the end positions:
//   2^(a*n + b*k - c*i + tree_offset).
struct BoundConstants {
  double a = 0.119;
  double b = 1.96;
  double x = 0.967095;
  double c = 1.4625;
  double d2 = 0.497534;
  double pn_offset = 2.0;
  double tree_offset = 4.0;
};

double path_count_bound(Vertex n, Cost k, Vertex j, const BoundConstants& = {});
double tree_count_bound(Vertex n, Cost k, int i, const BoundConstants& = {});

// Bounds are real-valued; counts are compared with this additive slack so
// ties are never lost to rounding.
inline constexpr double bound_slack = 1e-9;

struct CountReport {
  std::string family;  // "path" or "tree"
  Vertex n{0};
  Cost k{0};
  Vertex j_or_i{0};
  std::uint64_t exact_count{0};
  double bound{0.0};
  bool holds{false};   // exact_count <= bound + slack
  bool vacuous{false}; // the parameters describe an a-priori empty set
};

// Arrangements of the n-vertex path p_1..p_n with net cost <= k, the first
// path vertex at position j and the last at position n. j outside 1..n-1
// (including j = 0) pins an empty set; such cells report count 0, vacuous.
CountReport count_path_arrangements(Vertex n, Cost k, Vertex j);

// Arrangements of `tree` with net cost <= k in which every vertex of X sits
// at position 1 or n. |X| = 3 is counted as 0 (two end positions), larger X
// is rejected.
std::uint64_t count_tree_arrangements(const Graph& tree, Cost k,
                                      const std::vector<Vertex>& X);

struct BoundSweep {
  Vertex path_n_min{2};
  Vertex path_n_max{12};
  Cost path_k_max{4};
  Vertex path_j_min{0};
  Vertex path_j_slack{2};  // j sweeps up to k + path_j_slack
  Vertex tree_n_min{2};
  Vertex tree_n_max{8};
  Cost tree_k_max{3};
  int tree_i_max{2};
  Vertex exhaustive_tree_n_max{8};  // all labeled trees up to here
  int tree_samples{200};            // random trees per n beyond that
  std::uint64_t seed{1};
};

// One report per path cell (n, k, j). Tree cells (n, k, i) aggregate the
// maximum exact count over the tree corpus for n and over all pinned sets X
// with |X| = i, since the bounded quantity is that maximum.
std::vector<CountReport> verify_bounds(const BoundSweep& sweep = {});

// Header line plus one row per report: family,n,k,j_or_i,exact_count,bound,holds.
std::string bounds_csv(const std::vector<CountReport>& reports);

}  // namespace linarr
