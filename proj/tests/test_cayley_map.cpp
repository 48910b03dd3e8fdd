#include <doctest.h>

#include <random>

#include "dimaps/cayley_map.hpp"
#include "dimaps/families.hpp"
#include "oracles.hpp"

using namespace dimaps;

namespace {

Element a(long k, int n) { return Element::rotation(k, Modulus(n)); }
Element ab(long k, int n) { return Element::reflection(k, Modulus(n)); }
CayleyMap family(const char* tag, int n) { return build_family(parse_family_tag(tag), Modulus(n)).map; }

MapErrorKind failure(int n, std::vector<Element> cycle) {
  try {
    make_map(Modulus(n), std::move(cycle));
  } catch (const InvalidMap& e) {
    return e.kind();
  }
  FAIL("map accepted");
  return MapErrorKind::EmptyOrShort;
}

}  // namespace

TEST_SUITE("cayley_map") {
  TEST_CASE("make_map validation") {
    CHECK_NOTHROW(make_map(Modulus(3), {a(-1, 3), a(1, 3), ab(0, 3), ab(2, 3)}));
    CHECK(failure(4, {a(1, 4), a(3, 4)}) == MapErrorKind::NotGenerating);
    CHECK(failure(5, {ab(0, 5), a(1, 5)}) == MapErrorKind::NotInverseClosed);
    CHECK(failure(5, {ab(0, 5)}) == MapErrorKind::EmptyOrShort);
    CHECK(failure(5, {}) == MapErrorKind::EmptyOrShort);
    CHECK(failure(5, {ab(0, 5), Element::identity(), ab(1, 5)}) == MapErrorKind::ContainsIdentity);
    CHECK(failure(5, {ab(0, 5), ab(1, 5), ab(0, 5)}) == MapErrorKind::Duplicates);
  }

  TEST_CASE("inverse index") {
    const auto c = inverse_index(family("M4", 3)).c;
    CHECK(c == std::vector<int>{1, 0, 2, 3});
    CHECK(inverse_index(family("M1(1)", 7)).c == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
    const auto c6 = inverse_index(family("M2", 6));
    for (int k = 0; k < 6; ++k) CHECK(c6(c6(k)) == k);
  }

  TEST_CASE("balance types") {
    CHECK(balance_type(family("M1(3)", 8)).kind == BalanceType::Kind::Balanced);
    CHECK(balance_type(family("M2", 4)).kind == BalanceType::Kind::AntiBalanced);
    CHECK(balance_type(family("M2", 6)).kind == BalanceType::Kind::NotTBalanced);
    for (int n = 2; n <= 24; ++n) {
      for (const auto& tag : family_parameters(Modulus(n))) {
        if (tag.kind == FamilyTag::Kind::M1) CHECK(balance_type(build_family(tag, Modulus(n)).map).kind == BalanceType::Kind::Balanced);
      }
    }
  }

  TEST_CASE("rotation type") {
    const auto m2 = family("M2", 6);
    CHECK(rotation_type_equal(m2, m2));
    CHECK(rotation_type_equal(family("M4", 3), family("M4", 6)));
    CHECK_FALSE(rotation_type_equal(m2, family("M6", 6)));
    CHECK(rotation_type_equal(m2, m2.rotated(3)));

    std::mt19937 rng(7);
    std::vector<CayleyMap> corpus;
    for (int t = 0; t < 24; ++t) corpus.push_back(oracle::random_map(Modulus(3 + static_cast<int>(rng() % 3)), rng));
    for (const auto& x : corpus) {
      for (const auto& y : corpus) {
        CHECK(rotation_type_equal(x, y) == rotation_type_equal(y, x));
        for (const auto& z : corpus) {
          if (rotation_type_equal(x, y) && rotation_type_equal(y, z)) CHECK(rotation_type_equal(x, z));
        }
      }
    }
  }

  TEST_CASE("face tracing") {
    const auto k4 = trace_faces(make_map(Modulus(2), {ab(0, 2), ab(1, 2), a(1, 2)}));
    CHECK(k4.faces == std::vector<int>{3, 3, 3, 3});
    CHECK(k4.genus == 0);
    const auto oct = trace_faces(family("M4", 3));
    CHECK(oct.faces == std::vector<int>(8, 3));
    CHECK(oct.genus == 0);
    for (int f : trace_faces(family("M4", 6)).faces) CHECK(f == 6);

    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
      const Modulus n(2 + static_cast<int>(rng() % 8));
      const auto m = oracle::random_map(n, rng);
      const auto fs = trace_faces(m);
      int arcs = 0;
      for (int f : fs.faces) arcs += f;
      CHECK(arcs == n.group_order() * m.valency());
      CHECK(fs.euler_characteristic % 2 == 0);
      CHECK(static_cast<int>(fs.faces.size()) == oracle::face_count(m));
      CHECK(fs.genus == oracle::genus(m));
    }
  }

  TEST_CASE("equivalence") {
    CHECK_FALSE(equivalent(family("M1(3)", 8), family("M1(5)", 8)).has_value());
    const auto m2 = family("M2", 6);
    CHECK(equivalent(m2, m2) == GroupAutomorphism{1, 0});
    const auto s = make_automorphism(5, 0, Modulus(6));
    const auto image = apply_aut(s, m2);
    const auto w = equivalent(m2, image);
    REQUIRE(w.has_value());
    // The witness maps m2's cycle onto a rotation of the image's cycle.
    const auto mapped = apply_aut(*w, m2);
    bool aligned = false;
    for (int k = 0; k < image.valency(); ++k) aligned = aligned || mapped.rotated(k) == image || mapped == image.rotated(k);
    CHECK(aligned);
    CHECK(isomorphic(m2, image));
    CHECK(isomorphic(m2, m2.rotated(2)));
    CHECK_FALSE(isomorphic(m2, family("M6", 6)));
  }

  TEST_CASE("equivalence witnesses reproduce the cycle") {
    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
      const Modulus n(3 + static_cast<int>(rng() % 6));
      const auto m = oracle::random_map(n, rng);
      const auto auts = automorphisms(n);
      const auto other = apply_aut(auts[rng() % auts.size()], m).rotated(static_cast<int>(rng() % static_cast<unsigned>(m.valency())));
      const auto w = equivalent(m, other);
      REQUIRE(w.has_value());
      CHECK(apply_aut(*w, m).normalized() == other.normalized());
      CHECK(canonical_code(m) == canonical_code(other));
    }
  }

  TEST_CASE("normalization and rotation") {
    const auto m = family("M4", 3);
    CHECK(m.normalized().at(0) == a(1, 3));
    CHECK(m.rotated(2).at(0) == ab(0, 3));
    CHECK(m.next(ab(2, 3)) == a(2, 3));
    CHECK(m.previous(a(2, 3)) == ab(2, 3));
  }
}
