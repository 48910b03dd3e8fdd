#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dimaps/census.hpp"
#include "dimaps/families.hpp"
#include "dimaps/quotient.hpp"

namespace dimaps {

using Json = nlohmann::ordered_json;

/// {"n": n, "cycle": ["b", "a^1", ...]}
Json map_to_json(const CayleyMap& m);
/// Throws ParseError for malformed documents and InvalidMap for bad cycles.
CayleyMap map_from_json(const Json& doc);

/// {"order": k, "images": {"<g>": "<phi(g)>"}, "power": {"<g>": pi(g)}}
Json skew_to_json(const SkewMorphism& sm);
/// {"i": i, "j": j, "kind": "balanced" | "partial"}
Json reflection_to_json(const ReflectionWitness& w);
/// Map document with "family", "skew" and "reflection" appended.
Json certified_to_json(const CertifiedMap& cm);

/// Everything `verify` reports about one map.
struct MapSummary {
  int n = 0;
  int valency = 0;
  bool regular = false;
  bool reflexible = false;
  std::optional<int> reflection_index;
  int genus = 0;
  int faces = 0;
  std::string balance;
  std::optional<int> skew_order;
  std::optional<int> kernel_size;
  std::optional<FamilyTag> family;
};

MapSummary summarize(const CayleyMap& m);
Json summary_to_json(const MapSummary& s);

Json quotient_report_to_json(const CayleyMap& quotient, const QuotientLawReport& report);

/// One row per class: n, d, family, ell, genus, reflection_index.
struct CensusRow {
  int n = 0;
  int d = 0;
  std::string family;
  std::optional<int> ell;
  int genus = 0;
  std::optional<int> reflection_index;
};

std::vector<CensusRow> census_rows(const CensusReport& report);
Json census_to_json(const std::vector<CensusReport>& reports);
std::string census_to_csv(const std::vector<CensusReport>& reports);
std::string census_to_markdown(const std::vector<CensusReport>& reports);

/// Reads and parses a map file. Throws std::runtime_error on IO failure.
CayleyMap read_map_file(const std::filesystem::path& path);

}  // namespace dimaps
