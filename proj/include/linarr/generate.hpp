#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "linarr/graph.hpp"

namespace linarr {

Graph path_graph(Vertex n);
Graph cycle_graph(Vertex n);
Graph clique_graph(Vertex n);
// Vertex 1 is the center; 2..n are leaves.
Graph star_graph(Vertex n);
// Spine path 1..spine; each spine vertex gets `legs` pendant leaves.
Graph caterpillar_graph(Vertex spine, Vertex legs);
// Decodes a Pruefer code (entries in 1..n, length n-2) to its labeled tree.
Graph tree_from_prufer(Vertex n, const std::vector<Vertex>& code);
// Uniformly random labeled tree (random Pruefer code).
Graph random_tree(Vertex n, std::uint64_t seed);
// Random tree plus `chords` extra edges between non-adjacent vertex pairs.
Graph tree_plus_chords(Vertex n, Vertex chords, std::uint64_t seed);
// K_a on 1..a and K_b on a+1..a+b joined by the single edge (a, a+1).
Graph two_cliques_bridged(Vertex a, Vertex b);

using GenParams = std::map<std::string, std::int64_t>;

// Families: path, cycle, clique, star, caterpillar, random_tree,
// tree_plus_chords, two_cliques_bridged. Deterministic in (family, params,
// seed). Unknown keys in params are rejected.
Graph generate_instance(const std::string& family, const GenParams& params,
                        std::uint64_t seed);

}  // namespace linarr
