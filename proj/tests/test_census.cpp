#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "dimaps/census.hpp"
#include "dimaps/errors.hpp"
#include "oracles.hpp"

using namespace dimaps;

namespace {

Element a(long k, int n) { return Element::rotation(k, Modulus(n)); }
Element ab(long k, int n) { return Element::reflection(k, Modulus(n)); }
CayleyMap family(const char* tag, int n) { return build_family(parse_family_tag(tag), Modulus(n)).map; }

bool contains_iso(const std::vector<CayleyMap>& maps, const CayleyMap& m) {
  return std::any_of(maps.begin(), maps.end(), [&](const CayleyMap& x) { return isomorphic(x, m); });
}

}  // namespace

TEST_SUITE("census") {
  TEST_CASE("search agrees with brute force over all cycles") {
    for (int n = 2; n <= 5; ++n) {
      const int max_d = n <= 4 ? 2 * n - 1 : 6;
      std::vector<CayleyMap> brute;
      for (const auto& m : oracle::all_maps(Modulus(n), max_d)) {
        if (oracle::regular_by_monodromy(m)) brute.push_back(m);
      }
      CensusOptions opts;
      opts.max_valency = max_d;
      auto found = enumerate_regular(Modulus(n), std::nullopt, opts);
      REQUIRE(found.size() == brute.size());
      for (const auto& m : brute) CHECK(std::find(found.begin(), found.end(), m) != found.end());
    }
  }

  TEST_CASE("known maps appear in the census") {
    const auto n3 = enumerate_regular(Modulus(3), 4);
    CHECK(contains_iso(n3, family("M4", 3)));
    const auto n2 = enumerate_regular(Modulus(2));
    CHECK(contains_iso(n2, make_map(Modulus(2), {ab(0, 2), ab(1, 2)})));
    CHECK(contains_iso(n2, make_map(Modulus(2), {ab(0, 2), ab(1, 2), a(1, 2)})));
    CHECK(isomorphism_classes(n2).size() == 2);

    for (const auto& m : enumerate_regular(Modulus(7))) {
      if (balance_type(m).kind != BalanceType::Kind::Balanced) continue;
      bool found = false;
      for (int l = 1; l < 7; ++l) found = found || isomorphic(m, balanced_map(Modulus(7), l));
      CHECK(found);
    }

    const auto refl6 = enumerate_reflexible_regular(Modulus(6));
    CHECK(contains_iso(refl6, family("M4", 6)));
    CHECK(contains_iso(refl6, family("M6", 6)));
    CHECK(isomorphism_classes(enumerate_reflexible_regular(Modulus(7))).size() == 2);
  }

  TEST_CASE("cycles start at min X and are sorted") {
    const auto maps = enumerate_regular(Modulus(6));
    for (const auto& m : maps) CHECK(m.normalized() == m);
    for (std::size_t i = 1; i < maps.size(); ++i) CHECK(maps[i - 1].valency() <= maps[i].valency());
  }

  TEST_CASE("isomorphism classes") {
    const auto m2 = family("M2", 6);
    CHECK(isomorphism_classes({m2, apply_aut(make_automorphism(5, 0, Modulus(6)), m2)}).size() == 1);
    CHECK(isomorphism_classes({family("M1(3)", 8), family("M1(5)", 8)}).size() == 2);
    CHECK(isomorphism_classes({m2, family("M6", 6)}).size() == 2);
    // Group-automorphism images always land in one class.
    for (int n = 3; n <= 6; ++n) {
      for (const auto& cls : isomorphism_classes(enumerate_regular(Modulus(n)))) {
        for (auto s : automorphisms(Modulus(n))) CHECK(canonical_code(apply_aut(s, cls.front())) == canonical_code(cls.front()));
      }
    }
  }

  TEST_CASE("threads do not change the result") {
    CensusOptions one, three;
    one.threads = 1;
    three.threads = 3;
    const auto x = enumerate_regular(Modulus(6), std::nullopt, one);
    const auto y = enumerate_regular(Modulus(6), std::nullopt, three);
    REQUIRE(x.size() == y.size());
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(x[i] == y[i]);
  }

  TEST_CASE("bounds") {
    unsetenv("DIMAPS_MAX_N");
    CHECK(census_bound(std::nullopt) == 8);
    CHECK(census_bound(8) == 12);
    CHECK(census_bound(9) == 8);
    CHECK_THROWS_AS(enumerate_regular(Modulus(9)), BoundExceeded);
    CHECK_THROWS_AS(enumerate_regular(Modulus(13), 3), BoundExceeded);
    CHECK_NOTHROW(enumerate_regular(Modulus(9), 3));
    setenv("DIMAPS_MAX_N", "20", 1);
    CHECK(census_bound(std::nullopt) == 20);
    CHECK_NOTHROW(enumerate_regular(Modulus(13), 2));
    unsetenv("DIMAPS_MAX_N");
  }

  TEST_CASE("cross check for small n") {
    for (int n = 2; n <= 6; ++n) {
      const auto report = cross_check(Modulus(n));
      CHECK_MESSAGE(report.match(), "n = " << n);
      CHECK(report.found.size() == report.expected.size());
    }
  }
}
