#pragma once

// Dart-level map automorphism machinery. Deliberately shares nothing with the
// skew-morphism engine beyond the dihedral arithmetic.

#include <span>

#include "dimaps/cayley_map.hpp"

namespace dimaps {

/// Number of orientation-preserving map automorphisms, found by propagating a
/// dart bijection from the root dart (1, x_0) to every target dart along the
/// rotation and edge-reversal moves.
long orientation_preserving_automorphism_count(const CayleyMap& m);

/// Arc-regularity: every dart is the image of the root dart, i.e.
/// |Aut+| = 2 n d.
bool regular_by_flags(const CayleyMap& m);

/// Whether the vertex bijection f (indexed by element index) preserves the
/// Cayley graph and the rotation: f(g)^{-1} f(g p(x)) = p(f(g)^{-1} f(g x)).
bool is_map_automorphism(const CayleyMap& m, std::span<const Element> f);

/// Antirotary conditions: tau(1) = 1, tau(g)^{-1} tau(g x) in X and
/// tau(g)^{-1} tau(g p(x)) = p^{-1}(tau(g)^{-1} tau(g x)).
bool is_antirotary(const CayleyMap& m, std::span<const Element> tau);

}  // namespace dimaps
