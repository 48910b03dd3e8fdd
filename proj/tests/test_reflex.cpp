#include <doctest.h>

#include <random>

#include "dimaps/census.hpp"
#include "dimaps/errors.hpp"
#include "dimaps/flags.hpp"
#include "dimaps/reflex.hpp"
#include "oracles.hpp"

using namespace dimaps;

namespace {

Element a(long k, int n) { return Element::rotation(k, Modulus(n)); }
Element ab(long k, int n) { return Element::reflection(k, Modulus(n)); }
CayleyMap family(const char* tag, int n) { return build_family(parse_family_tag(tag), Modulus(n)).map; }

}  // namespace

TEST_SUITE("reflex") {
  TEST_CASE("witness examples") {
    const auto m3 = reflexible_by_automorphism(family("M3", 8));
    REQUIRE(m3.has_value());
    CHECK(m3->aut == GroupAutomorphism{7, 0});
    CHECK(m3->kind == ReflectionWitness::Kind::PartiallyInverting);

    const auto chiral = balanced_map(Modulus(7), 2);
    CHECK(chiral.valency() == 3);
    REQUIRE(is_regular(chiral).has_value());
    CHECK_FALSE(reflexible_by_automorphism(chiral).has_value());
    CHECK_FALSE(reflexible_by_flags(chiral));

    const auto cycle = make_map(Modulus(5), {ab(0, 5), ab(1, 5)});
    const auto w = reflexible_by_automorphism(cycle);
    REQUIRE(w.has_value());
    CHECK(satisfies_reflection_identity(cycle, w->aut));
    CHECK(w->kind == ReflectionWitness::Kind::Balanced);

    CHECK_THROWS_AS(reflexible_by_automorphism(make_map(Modulus(5), {ab(0, 5), a(1, 5), a(4, 5)})), NotRegular);
  }

  TEST_CASE("flag test on the small maps") {
    CHECK(reflexible_by_flags(make_map(Modulus(2), {ab(0, 2), ab(1, 2), a(1, 2)})));
    for (int n = 2; n <= 12; ++n) {
      for (const auto& tag : family_parameters(Modulus(n))) CHECK(reflexible_by_flags(build_family(tag, Modulus(n)).map));
    }
  }

  TEST_CASE("reflection index examples") {
    CHECK(reflection_index(family("M4", 6)) == 1);
    CHECK(reflection_index(family("M2", 6)) == 2);
    CHECK(reflection_index(family("M6", 6)) == 3);
    CHECK_FALSE(reflection_index(family("M1(1)", 6)).has_value());
  }

  TEST_CASE("antirotary mappings") {
    const auto m = family("M6", 6);
    const auto tau = antirotary_mapping(m);
    REQUIRE(tau.has_value());
    CHECK(is_antirotary(m, *tau));
    CHECK_FALSE(antirotary_mapping(balanced_map(Modulus(7), 2)).has_value());
  }

  TEST_CASE("both reflexibility tests agree with the monodromy oracle") {
    for (int n = 2; n <= 6; ++n) {
      for (const auto& m : enumerate_regular(Modulus(n))) {
        const bool by_aut = reflexible_by_automorphism(m).has_value();
        CHECK(by_aut == reflexible_by_flags(m));
        CHECK(by_aut == oracle::reflexible_by_monodromy(m));
        if (by_aut && balance_type(m).kind != BalanceType::Kind::Balanced) {
          for (const auto& s : partially_inverting_reflections(m)) CHECK(s.i == n - 1);
        }
      }
    }
  }

  TEST_CASE("i + c(i) is constant on rotations of non-balanced reflexible maps") {
    for (int n = 3; n <= 8; ++n) {
      for (const auto& m : enumerate_reflexible_regular(Modulus(n))) {
        if (balance_type(m).kind == BalanceType::Kind::Balanced) continue;
        std::optional<long> value;
        for (int i = 0; i < m.valency(); ++i) {
          if (m.at(i).flip) continue;
          const long v = mod(i + m.inverse_position(i), m.valency());
          if (value) CHECK(*value == v);
          value = v;
        }
      }
    }
  }
}
