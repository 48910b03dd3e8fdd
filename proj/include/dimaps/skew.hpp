#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dimaps/cayley_map.hpp"
#include "dimaps/dihedral.hpp"

namespace dimaps {

/// A skew-morphism phi of D_n with power function pi:
///   phi(x y) = phi(x) phi^{pi(x)}(y)  for all x, y.
/// Tables are indexed by element index. Power values are stored as residue
/// representatives in [1, order], so pi(1) = 1 even for the identity map.
struct SkewMorphism {
  Modulus n{2};
  int order = 1;
  std::vector<Element> images;
  std::vector<int> power;

  Element image(Element x) const { return images[static_cast<std::size_t>(index_of(x, n))]; }
  int power_of(Element x) const { return power[static_cast<std::size_t>(index_of(x, n))]; }
  /// phi^k(x), k >= 0.
  Element iterate(Element x, long k) const;

  static SkewMorphism identity(Modulus n);
};

/// Outcome of checking the skew-morphism axioms.
struct SkewVerdict {
  bool ok = true;
  std::string reason;
  /// First violating pair (x, y) for axiom failures, or the offending
  /// element for fixed-point / bijection failures in x.
  std::optional<Element> x;
  std::optional<Element> y;

  explicit operator bool() const { return ok; }
};

/// Checks phi(1) = 1, bijectivity and the axiom on all 4n^2 pairs.
/// Throws TablesIncomplete if a table does not have 2n entries.
SkewVerdict verify_skew(std::span<const Element> images, std::span<const int> power, Modulus n);
SkewVerdict verify_skew(const SkewMorphism& sm);

/// Order of the permutation given by an image table.
int permutation_order(std::span<const Element> images, Modulus n);

/// Power function of a permutation fixing 1: for each g the t in [1, order]
/// with phi(g y) = phi(g) phi^t(y) for all y. Absent if some g has none,
/// i.e. phi is not a skew-morphism.
std::optional<std::vector<int>> derive_power_function(std::span<const Element> images, Modulus n);

/// The unique skew-morphism restricting to p on X, if any. Built breadth-first
/// from the identity with power values tracked modulo the valency, then lifted
/// to the permutation order and re-verified.
std::optional<SkewMorphism> extend_from_rotation(const CayleyMap& m);

/// ker(pi) = { g : pi(g) = 1 }.
Subgroup power_kernel(const SkewMorphism& sm);

/// True when pi never vanishes modulo the order (expected whenever phi is not
/// the identity).
bool power_values_nonzero(const SkewMorphism& sm);

struct RegularityCertificate {
  SkewMorphism skew;
  /// phi restricted to X equals p.
  bool orbit_check = false;
};

/// Regularity via extend_from_rotation, cross-checked against
/// regular_by_flags. Throws OracleDisagreement if they differ.
std::optional<RegularityCertificate> is_regular(const CayleyMap& m);

}  // namespace dimaps
