#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dimaps/cayley_map.hpp"
#include "dimaps/families.hpp"

namespace dimaps {

struct CensusOptions {
  /// Only valencies d with d <= max_valency (unset: all, up to 2n - 1).
  std::optional<int> max_valency;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Largest n an exhaustive run accepts: 8, or 12 when every valency searched
/// is at most 8. DIMAPS_MAX_N overrides both.
int census_bound(std::optional<int> valency_cap);

/// All regular Cayley maps on D_n, one per cycle (rotations identified; every
/// cycle starts at min X), sorted by cycle. With `valency` set only that
/// valency is searched. Throws BoundExceeded.
std::vector<CayleyMap> enumerate_regular(Modulus n, std::optional<int> valency = std::nullopt,
                                         const CensusOptions& options = {});

/// The regular maps that are also reflexible, with the automorphism and the
/// antirotary tests required to agree (OracleDisagreement otherwise).
std::vector<CayleyMap> enumerate_reflexible_regular(Modulus n, const CensusOptions& options = {});

/// Isomorphism classes, each sorted and the list sorted by first member.
/// Maps differing by a group automorphism always share a class; maps of
/// different rotation type are merged through the canonical dart code.
std::vector<std::vector<CayleyMap>> isomorphism_classes(const std::vector<CayleyMap>& maps);

struct CensusClass {
  CayleyMap representative;
  std::size_t size = 1;
  std::optional<FamilyTag> tag;  // absent: unmatched
};

struct CensusReport {
  int n = 0;
  std::vector<CensusClass> found;
  std::vector<FamilyTag> expected;
  /// Empty exactly when found and expected are in bijection.
  std::vector<std::string> mismatches;

  bool match() const { return mismatches.empty(); }
};

/// Enumerates the reflexible regular classes on D_n and pairs them with the
/// maps built from family_parameters(n).
CensusReport cross_check(Modulus n, const CensusOptions& options = {});

}  // namespace dimaps
