#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dimaps/cayley_map.hpp"
#include "dimaps/reflex.hpp"
#include "dimaps/skew.hpp"

namespace dimaps {

/// Which map of the reflexible regular classification a map is.
struct FamilyTag {
  enum class Kind { D2Cycle, Small3, M1, M2, M3, M4, M5, M6 };
  /// The three valency-3 maps: K4 on D_2, K_{3,3} on D_3, the cube on D_4.
  enum class Small3 { D2K4, D3K33, D4Q3 };

  Kind kind = Kind::D2Cycle;
  Small3 variant = Small3::D2K4;  // Small3 only
  int ell = 0;                    // M1 only

  static FamilyTag d2_cycle() { return {Kind::D2Cycle}; }
  static FamilyTag small3(Small3 v) { return {Kind::Small3, v}; }
  static FamilyTag m1(int ell) { return {Kind::M1, Small3::D2K4, ell}; }
  static FamilyTag of(Kind kind) { return {kind}; }

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

/// "D2cycle", "Small3(D3-K33)", "M1(5)", "M4", ...
std::string to_string(const FamilyTag& tag);
/// Family name without parameters: "D2cycle", "Small3", "M1", ...
std::string family_name(const FamilyTag& tag);
/// Inverse of to_string; also accepts the bare variant names "D2-K4",
/// "D3-K33", "D4-Q3". Throws ParseError.
FamilyTag parse_family_tag(std::string_view text);

struct CertifiedMap {
  CayleyMap map;
  SkewMorphism skew;
  ReflectionWitness reflection;
  FamilyTag tag;
};

/// Least d >= 1 with 1 + l + ... + l^{d-1} = 0 (mod n); requires gcd(l, n) = 1.
int balanced_valency(int n, int ell);

/// The balanced map M(n, l) with cycle (b, ab, a^{l+1} b, a^{l^2+l+1} b, ...),
/// for any l coprime to n.
CayleyMap balanced_map(Modulus n, int ell);

/// The map of the classification for this tag, together with its
/// skew-morphism, power function and reflection, all verified.
/// Throws BadParameters or CertificationFailure.
CertifiedMap build_family(FamilyTag tag, Modulus n);

/// Every tag admissible at n. M1 parameters whose valency is below 4 are left
/// out because they coincide with the D2cycle / Small3 maps.
std::vector<FamilyTag> family_parameters(Modulus n);

/// The admissible tag whose map is isomorphic to m, if any.
/// Throws NotReflexibleRegular.
std::optional<FamilyTag> classify(const CayleyMap& m);

/// Reflection index carried by every map of the families M2..M6; absent for
/// all other tags.
std::optional<int> family_reflection_index(const FamilyTag& tag);

}  // namespace dimaps
