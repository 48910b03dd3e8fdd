#include "dimaps/families.hpp"

#include <functional>

#include "dimaps/errors.hpp"

namespace dimaps {

namespace {

using Kind = FamilyTag::Kind;

std::string small3_name(FamilyTag::Small3 v) {
  switch (v) {
    case FamilyTag::Small3::D2K4: return "D2-K4";
    case FamilyTag::Small3::D3K33: return "D3-K33";
    case FamilyTag::Small3::D4Q3: return "D4-Q3";
  }
  return "?";
}

int small3_modulus(FamilyTag::Small3 v) {
  switch (v) {
    case FamilyTag::Small3::D2K4: return 2;
    case FamilyTag::Small3::D3K33: return 3;
    case FamilyTag::Small3::D4Q3: return 4;
  }
  return 0;
}

Element rot(long e, Modulus n) { return Element::rotation(e, n); }
Element ref(long e, Modulus n) { return Element::reflection(e, n); }

// Closed-form tables of a family: the image and power of a^j and a^j b,
// with j in [0, n).
struct ClosedForm {
  std::function<Element(int j, bool flip)> image;
  std::function<long(int j, bool flip)> power;  // empty when derived instead
  GroupAutomorphism reflection;
};

ClosedForm closed_form(const FamilyTag& tag, Modulus n) {
  const int nn = n.value();
  const int m = nn / 2;
  switch (tag.kind) {
    case Kind::M1: {
      const int l = tag.ell;
      return {[=](int j, bool flip) {
                return flip ? ref(static_cast<long>(j) * l + 1, n) : rot(static_cast<long>(j) * l, n);
              },
              [](int, bool) { return 1L; }, make_automorphism(-l, 0, n)};
    }
    case Kind::M2:
    case Kind::M3: {
      // M3 differs from M2 only by the m-multiples in the exponents.
      const long twist = tag.kind == Kind::M3 ? m : 0;
      auto image = [=](int j, bool flip) {
        if (!flip) return j % 2 == 0 ? rot(j / 2 * twist - j, n) : ref(j + 1 + (j + 1) / 2 * twist, n);
        return j % 2 == 0 ? rot(j + 1 + j / 2 * twist, n) : ref((j + 1) / 2 * twist - j, n);
      };
      // pi(a^{2i+1}) = pi(a^{n-2i-2} b) = 4i+3 and pi(a^{2i}) = pi(a^{n-2i-1} b) = 4i+1 (mod n).
      auto power = [=](int j, bool flip) -> long {
        if (!flip) return j % 2 == 1 ? mod(4L * ((j - 1) / 2) + 3, nn) : mod(4L * (j / 2) + 1, nn);
        return j % 2 == 0 ? mod(4L * ((nn - 2 - j) / 2) + 3, nn) : mod(4L * ((nn - 1 - j) / 2) + 1, nn);
      };
      return {image, power, make_automorphism(-1, 0, n)};
    }
    case Kind::M4: {
      auto image = [=](int j, bool flip) {
        const int r = j % 3;
        if (!flip) return r == 1 ? ref(1 - j, n) : rot(-j, n);
        return r == 2 ? rot(1 - j, n) : ref(2 - j, n);
      };
      auto power = [](int j, bool flip) -> long {
        const int r = j % 3;
        if (!flip) return r + 1;
        return r == 0 ? 1 : (r == 2 ? 2 : 3);
      };
      return {image, power, make_automorphism(-1, 2, n)};
    }
    case Kind::M5: {
      auto image = [=](int j, bool flip) {
        const int r = j % 4;
        if (!flip) {
          if (r == 1) return ref(1 - j, n);
          if (r == 2) return ref(1 - j + m, n);
          return rot(-j, n);
        }
        // a^{4i} b goes to the rotation a^{-j+1+m}: its orbit successor
        // (b -> a^{m+1}, a^{m+2} b -> a^{-1}) lies in A_n.
        if (r == 0) return rot(1 - j + m, n);
        if (r == 3) return rot(1 - j, n);
        return ref(2 - j + m, n);
      };
      auto power = [](int j, bool flip) -> long {
        const int r = j % 4;
        static constexpr long kRot[] = {1, 2, 4, 5};
        static constexpr long kRef[] = {2, 1, 5, 4};
        return flip ? kRef[r] : kRot[r];
      };
      return {image, power, make_automorphism(-1, 2 + m, n)};
    }
    case Kind::M6: {
      auto image = [=](int j, bool flip) {
        if (!flip) return j % 2 == 0 ? rot(-j, n) : ref(-j - 1, n);
        return j % 2 == 0 ? ref(-j - 2 + m, n) : rot(-j - 1 + m, n);
      };
      return {image, {}, make_automorphism(-1, m - 2, n)};
    }
    default: break;
  }
  throw std::logic_error("no closed form for " + to_string(tag));
}

std::vector<Element> family_cycle(const FamilyTag& tag, Modulus n) {
  const int nn = n.value();
  const int m = nn / 2;
  std::vector<Element> cycle;
  switch (tag.kind) {
    case Kind::D2Cycle: return {ref(0, n), ref(1, n)};
    case Kind::Small3:
      if (tag.variant == FamilyTag::Small3::D4Q3) return {ref(0, n), rot(1, n), rot(-1, n)};
      if (tag.variant == FamilyTag::Small3::D3K33) return {ref(0, n), ref(1, n), ref(2, n)};
      return {ref(0, n), ref(1, n), rot(1, n)};
    case Kind::M1: return balanced_map(n, tag.ell).cycle();
    case Kind::M2:
    case Kind::M3:
      // x_{2j} = a^{2j + j m'} b, x_{2j+1} = a^{2j+1}, with m' = 0 for M2 and m for M3.
      for (int j = 0; j < m; ++j) {
        cycle.push_back(ref(2L * j + (tag.kind == Kind::M3 ? static_cast<long>(j) * m : 0), n));
        cycle.push_back(rot(2L * j + 1, n));
      }
      return cycle;
    case Kind::M4: return {rot(-1, n), rot(1, n), ref(0, n), ref(2, n)};
    case Kind::M5: return {rot(-1, n), rot(1, n), ref(0, n), rot(m + 1, n), rot(m - 1, n), ref(m + 2, n)};
    case Kind::M6: return {ref(0, n), ref(m - 2, n), rot(1, n), ref(-2, n), ref(m, n), rot(-1, n)};
  }
  return cycle;
}

bool admissible(const FamilyTag& tag, int n) {
  switch (tag.kind) {
    case Kind::D2Cycle: return true;
    case Kind::Small3: return n == small3_modulus(tag.variant);
    case Kind::M1: return tag.ell > 0 && mod(static_cast<long>(tag.ell) * tag.ell, n) == 1 % n;
    case Kind::M2: return n % 2 == 0 && n >= 4;
    case Kind::M3: return n % 8 == 0;
    case Kind::M4: return n % 3 == 0;
    case Kind::M5: return n % 8 == 4 && n >= 12;
    case Kind::M6: return n % 4 == 2 && n >= 6;
  }
  return false;
}

}  // namespace

std::string family_name(const FamilyTag& tag) {
  switch (tag.kind) {
    case Kind::D2Cycle: return "D2cycle";
    case Kind::Small3: return "Small3";
    case Kind::M1: return "M1";
    case Kind::M2: return "M2";
    case Kind::M3: return "M3";
    case Kind::M4: return "M4";
    case Kind::M5: return "M5";
    case Kind::M6: return "M6";
  }
  return "?";
}

std::string to_string(const FamilyTag& tag) {
  if (tag.kind == Kind::Small3) return "Small3(" + small3_name(tag.variant) + ")";
  if (tag.kind == Kind::M1) return "M1(" + std::to_string(tag.ell) + ")";
  return family_name(tag);
}

FamilyTag parse_family_tag(std::string_view text) {
  for (auto v : {FamilyTag::Small3::D2K4, FamilyTag::Small3::D3K33, FamilyTag::Small3::D4Q3}) {
    if (text == small3_name(v) || text == "Small3(" + small3_name(v) + ")") return FamilyTag::small3(v);
  }
  for (auto kind : {Kind::D2Cycle, Kind::M2, Kind::M3, Kind::M4, Kind::M5, Kind::M6}) {
    if (text == family_name(FamilyTag::of(kind))) return FamilyTag::of(kind);
  }
  if (text.starts_with("M1(") && text.ends_with(")")) {
    std::string digits(text.substr(3, text.size() - 4));
    try {
      std::size_t used = 0;
      int ell = std::stoi(digits, &used);
      if (used == digits.size()) return FamilyTag::m1(ell);
    } catch (const std::exception&) {
    }
  }
  throw ParseError("unknown family tag '" + std::string(text) + "'");
}

int balanced_valency(int n, int ell) {
  if (gcd(ell, n) != 1) throw BadParameters("balanced map needs gcd(l, n) = 1");
  // Partial sums follow s -> l s + 1, a permutation of Z_n, so 0 recurs.
  long s = 1 % n;
  int d = 1;
  while (s != 0) {
    s = mod(s * ell + 1, n);
    ++d;
  }
  return d;
}

CayleyMap balanced_map(Modulus n, int ell) {
  const int d = balanced_valency(n.value(), ell);
  std::vector<Element> cycle;
  long s = 0;
  for (int k = 0; k < d; ++k) {
    cycle.push_back(ref(s, n));
    s = mod(s * ell + 1, n.value());
  }
  return make_map(n, std::move(cycle));
}

CertifiedMap build_family(FamilyTag tag, Modulus n) {
  if (!admissible(tag, n.value())) throw BadParameters(to_string(tag) + " is not admissible for n = " + std::to_string(n.value()));
  if (tag.kind == Kind::M1) tag.ell = static_cast<int>(mod(tag.ell, n.value()));
  CayleyMap map = make_map(n, family_cycle(tag, n));

  SkewMorphism skew;
  std::optional<ReflectionWitness> reflection;
  if (tag.kind == Kind::D2Cycle || tag.kind == Kind::Small3) {
    auto cert = is_regular(map);
    if (!cert) throw CertificationFailure(to_string(tag) + " is not regular");
    skew = std::move(cert->skew);
    reflection = reflexible_by_automorphism(map);
    if (!reflection) throw CertificationFailure(to_string(tag) + " has no reflection");
  } else {
    const ClosedForm form = closed_form(tag, n);
    skew.n = n;
    for (Element x : all_elements(n)) skew.images.push_back(form.image(x.exp, x.flip));
    if (form.power) {
      for (Element x : all_elements(n)) skew.power.push_back(static_cast<int>(form.power(x.exp, x.flip)));
    } else {
      auto derived = derive_power_function(skew.images, n);
      if (!derived) throw CertificationFailure(to_string(tag) + ": image table admits no power function");
      skew.power = std::move(*derived);
    }
    const SkewVerdict verdict = verify_skew(skew);
    if (!verdict) {
      std::string where = verdict.x ? " at " + format_element(*verdict.x) : "";
      if (verdict.y) where += ", " + format_element(*verdict.y);
      throw CertificationFailure(to_string(tag) + " tables fail: " + verdict.reason + where);
    }
    skew.order = permutation_order(skew.images, n);
    for (int& p : skew.power) p = static_cast<int>(mod(p - 1, skew.order)) + 1;
    const bool balanced = balance_type(map).kind == BalanceType::Kind::Balanced;
    reflection = ReflectionWitness{form.reflection,
                                   balanced ? ReflectionWitness::Kind::Balanced : ReflectionWitness::Kind::PartiallyInverting};
  }
  for (Element x : map.cycle()) {
    if (skew.image(x) != map.next(x)) throw CertificationFailure(to_string(tag) + ": skew-morphism does not restrict to p");
  }
  if (!satisfies_reflection_identity(map, reflection->aut)) {
    throw CertificationFailure(to_string(tag) + ": reflection identity fails");
  }
  if (reflection->kind == ReflectionWitness::Kind::PartiallyInverting && reflection->aut.i != n.value() - 1) {
    throw CertificationFailure(to_string(tag) + ": partial reflection does not invert a");
  }
  return {std::move(map), std::move(skew), *reflection, tag};
}

std::vector<FamilyTag> family_parameters(Modulus n) {
  const int nn = n.value();
  std::vector<FamilyTag> out{FamilyTag::d2_cycle()};
  for (auto v : {FamilyTag::Small3::D2K4, FamilyTag::Small3::D3K33, FamilyTag::Small3::D4Q3}) {
    if (small3_modulus(v) == nn) out.push_back(FamilyTag::small3(v));
  }
  for (int ell = 1; ell < nn; ++ell) {
    FamilyTag t = FamilyTag::m1(ell);
    if (admissible(t, nn) && balanced_valency(nn, ell) >= 4) out.push_back(t);
  }
  for (auto kind : {Kind::M2, Kind::M3, Kind::M4, Kind::M5, Kind::M6}) {
    if (admissible(FamilyTag::of(kind), nn)) out.push_back(FamilyTag::of(kind));
  }
  return out;
}

std::optional<FamilyTag> classify(const CayleyMap& m) {
  if (!is_regular(m) || !reflexible_by_flags(m)) throw NotReflexibleRegular("classify needs a reflexible regular map");
  const auto code = canonical_code(m);
  for (const FamilyTag& tag : family_parameters(m.modulus())) {
    const CayleyMap built = make_map(m.modulus(), family_cycle(tag, m.modulus()));
    if (rotation_type_equal(built, m) && equivalent(built, m)) return tag;
    if (canonical_code(built) == code) return tag;
  }
  return std::nullopt;
}

std::optional<int> family_reflection_index(const FamilyTag& tag) {
  switch (tag.kind) {
    case Kind::M4:
    case Kind::M5: return 1;
    case Kind::M2:
    case Kind::M3: return 2;
    case Kind::M6: return 3;
    default: return std::nullopt;
  }
}

}  // namespace dimaps
