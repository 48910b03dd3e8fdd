#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dimaps/cayley_map.hpp"

namespace dimaps {

/// A group automorphism alpha with alpha(X) = X and
/// alpha(p(x)) = p^{-1}(alpha(x)) on X.
struct ReflectionWitness {
  enum class Kind { Balanced, PartiallyInverting };

  GroupAutomorphism aut;
  Kind kind = Kind::Balanced;

  friend bool operator==(const ReflectionWitness&, const ReflectionWitness&) = default;
};

std::string to_string(ReflectionWitness::Kind kind);

/// Whether s satisfies alpha(X) = X and alpha p = p^{-1} alpha on X.
bool satisfies_reflection_identity(const CayleyMap& m, GroupAutomorphism s);

/// Searches Aut(D_n) for a reflection witness. Balanced maps search the whole
/// group; all others only automorphisms with a -> a^{-1}. Throws NotRegular.
std::optional<ReflectionWitness> reflexible_by_automorphism(const CayleyMap& m);

/// Every automorphism with a -> a^{-1} satisfying the reflection identity.
std::vector<GroupAutomorphism> partially_inverting_reflections(const CayleyMap& m);

/// An antirotary vertex bijection (indexed by element index), found by
/// propagating tau(g x_k) = tau(g) x_{beta(g) - k} outward from the identity
/// for every choice of beta(1).
std::optional<std::vector<Element>> antirotary_mapping(const CayleyMap& m);

bool reflexible_by_flags(const CayleyMap& m);

/// Least k >= 1 with p^k(x) = x^{-1} over x in X cap A_n; absent when X has
/// no rotations. Also called the rotation index.
std::optional<int> reflection_index(const CayleyMap& m);

}  // namespace dimaps
