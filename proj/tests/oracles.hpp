#pragma once
// Brute-force reference implementations used only by the tests. They work on
// dart permutations and plain search and share no code with the library
// beyond dihedral multiplication.

#include <cstdint>
#include <random>
#include <vector>

#include "dimaps/cayley_map.hpp"

namespace oracle {

using Perm = std::vector<int>;

/// Darts (g, k), numbered g_index * d + k. R turns around the vertex,
/// L crosses the edge: (g, k) -> (g x_k, c(k)).
struct DartSystem {
  int darts = 0;
  Perm rotate;
  Perm reverse;
};
DartSystem darts_of(const dimaps::CayleyMap& m);

/// Regular iff the monodromy group <R, L> acts regularly on darts.
bool regular_by_monodromy(const dimaps::CayleyMap& m);
/// Regular and some dart bijection conjugates (R, L) to (R^-1, L).
bool reflexible_by_monodromy(const dimaps::CayleyMap& m);
/// Number of cycles of R L, i.e. faces.
int face_count(const dimaps::CayleyMap& m);
int genus(const dimaps::CayleyMap& m);

/// Every valid map (one cycle per rotation class) on D_n with valency at
/// most max_d, by trying all inverse-closed subsets and orders.
std::vector<dimaps::CayleyMap> all_maps(dimaps::Modulus n, int max_d);

/// A valid map with random X and random order.
dimaps::CayleyMap random_map(dimaps::Modulus n, std::mt19937& rng);

using Graph = std::vector<std::vector<int>>;
/// Simple graph isomorphism by backtracking over vertex images.
bool graphs_isomorphic(const Graph& a, const Graph& b);
Graph complete_graph(int k);
Graph complete_bipartite(int k);
Graph cube_graph();
Graph octahedron_graph();

}  // namespace oracle
