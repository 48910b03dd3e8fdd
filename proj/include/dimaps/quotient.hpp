#pragma once

#include <string>
#include <vector>

#include "dimaps/cayley_map.hpp"
#include "dimaps/skew.hpp"

namespace dimaps {

/// A subgroup N <= A_n whose cosets form a block system for the vertex
/// action of a regular map's automorphism group.
struct BlockSubgroup {
  Subgroup group;
  /// n / |N|: the quotient D_n / N is D_{quotient_modulus} when this is >= 2.
  int quotient_modulus = 1;
};

/// <a^k> for the divisor k of n with |<a^k>| = size.
Subgroup rotation_subgroup(Modulus n, int size);

/// The image of x in D_n / <a^k> = D_k.
Element project(Element x, Modulus quotient);

/// Whether phi maps every N-coset onto an N-coset. Left translations always
/// do since N is normal, and together with phi they generate the vertex
/// action of Aut(M), so this decides the block property.
bool preserves_cosets(const SkewMorphism& skew, const Subgroup& group);

/// Every subgroup of A_n (one per divisor of n) that is a block subgroup
/// for the map with this skew-morphism, smallest first.
std::vector<BlockSubgroup> block_subgroups(const SkewMorphism& skew);

/// M / N = CM(D_k, X/N, p^{D_k}). The coset sequence of the cycle is
/// periodic and one period is kept. Throws DegenerateQuotient.
CayleyMap quotient_map(const CayleyMap& m, const BlockSubgroup& block);

struct QuotientLawReport {
  int block_size = 1;
  int parent_order = 0;
  int quotient_order = 0;
  bool x_union_of_cosets = false;

  bool quotient_regular = false;
  /// The quotient's skew-morphism is the action of the parent one on cosets.
  bool induced_skew = false;
  /// |<psi>| <= |N| |<psi/N>|.
  bool order_bound = false;
  /// Equality in the bound holds exactly when X is a union of N-cosets.
  bool order_equality_iff_union = false;
  /// pi/N(Ng) = pi(g) modulo |<psi/N>| for every g.
  bool power_congruence = false;

  std::vector<std::string> findings;

  bool all_hold() const {
    return quotient_regular && induced_skew && order_bound && order_equality_iff_union && power_congruence;
  }
};

/// Checks the quotient laws for a regular map and one of its block
/// subgroups. Violations are listed in `findings`, never thrown.
/// Throws NotRegular / DegenerateQuotient for unusable input.
QuotientLawReport check_quotient_laws(const CayleyMap& m, const BlockSubgroup& block);

}  // namespace dimaps
