#include "dimaps/dihedral.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "dimaps/errors.hpp"

namespace dimaps {

Modulus::Modulus(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(n));
}

Element Element::rotation(long e, Modulus n) { return {false, static_cast<int>(mod(e, n.value()))}; }

Element Element::reflection(long e, Modulus n) { return {true, static_cast<int>(mod(e, n.value()))}; }

int gcd(int a, int b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Element element_at(int index, Modulus n) {
  if (index < 0 || index >= n.group_order()) throw std::out_of_range("element index out of range");
  return index < n.value() ? Element{false, index} : Element{true, index - n.value()};
}

std::vector<Element> all_elements(Modulus n) {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(n.group_order()));
  for (int k = 0; k < n.group_order(); ++k) out.push_back(element_at(k, n));
  return out;
}

// a^e b^f * a^g b^h: moving a^g past b inverts it.
Element mul(Element x, Element y, Modulus n) {
  long e = x.flip ? x.exp - y.exp : x.exp + y.exp;
  return {x.flip != y.flip, static_cast<int>(mod(e, n.value()))};
}

Element inv(Element x, Modulus n) {
  if (x.flip) return x;
  return {false, static_cast<int>(mod(-x.exp, n.value()))};
}

Element power(Element x, long k, Modulus n) {
  if (x.flip) return mod(k, 2) == 0 ? Element::identity() : x;
  return {false, static_cast<int>(mod(static_cast<long>(x.exp) * mod(k, n.value()), n.value()))};
}

int element_order(Element x, Modulus n) {
  if (x.flip) return 2;
  return n.value() / gcd(x.exp, n.value());
}

Subgroup::Subgroup(std::vector<Element> elements, Modulus n) : n_(n), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (!contains(Element::identity())) throw std::invalid_argument("subgroup must contain the identity");
  for (Element x : elements_) {
    for (Element y : elements_) {
      if (!contains(mul(x, y, n_))) throw std::invalid_argument("element set is not closed under products");
    }
  }
}

Subgroup Subgroup::trivial(Modulus n) { return Subgroup({Element::identity()}, n); }

bool Subgroup::contains(Element x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

bool Subgroup::inside_rotations() const {
  return std::none_of(elements_.begin(), elements_.end(), [](Element x) { return x.flip; });
}

Subgroup generated_subgroup(std::span<const Element> generators, Modulus n) {
  std::vector<bool> seen(static_cast<std::size_t>(n.group_order()), false);
  std::vector<Element> members{Element::identity()};
  seen[0] = true;
  // Finite group: closing under right multiplication by generators suffices.
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (Element g : generators) {
      Element y = mul(members[head], g, n);
      auto k = static_cast<std::size_t>(index_of(y, n));
      if (!seen[k]) {
        seen[k] = true;
        members.push_back(y);
      }
    }
  }
  return Subgroup(std::move(members), n);
}

GroupAutomorphism make_automorphism(long i, long j, Modulus n) {
  auto ii = static_cast<int>(mod(i, n.value()));
  if (gcd(ii, n.value()) != 1) throw std::invalid_argument("automorphism needs gcd(i, n) = 1");
  return {ii, static_cast<int>(mod(j, n.value()))};
}

std::vector<GroupAutomorphism> automorphisms(Modulus n) {
  std::vector<GroupAutomorphism> out;
  for (int i = 1; i <= n.value(); ++i) {
    int ii = i % n.value();
    if (gcd(ii, n.value()) != 1) continue;
    for (int j = 0; j < n.value(); ++j) out.push_back({ii, j});
  }
  std::sort(out.begin(), out.end(), [](auto a, auto b) { return a.i != b.i ? a.i < b.i : a.j < b.j; });
  return out;
}

Element apply_aut(GroupAutomorphism s, Element x, Modulus n) {
  long e = static_cast<long>(s.i) * x.exp + (x.flip ? s.j : 0);
  return {x.flip, static_cast<int>(mod(e, n.value()))};
}

GroupAutomorphism compose(GroupAutomorphism s, GroupAutomorphism t, Modulus n) {
  // s(t(a)) = a^{s.i t.i}; s(t(b)) = s(a^{t.j} b) = a^{s.i t.j + s.j} b.
  return make_automorphism(static_cast<long>(s.i) * t.i, static_cast<long>(s.i) * t.j + s.j, n);
}

std::string format_element(Element x) {
  if (x.exp == 0) return x.flip ? "b" : "1";
  std::string out = "a^" + std::to_string(x.exp);
  if (x.flip) out += " b";
  return out;
}

Element parse_element(std::string_view text, Modulus n) {
  auto fail = [&]() -> Element { throw ParseError("bad element text: '" + std::string(text) + "'"); };
  if (text == "1") return Element::identity();
  if (text == "b") return {true, 0};
  if (text.size() < 3 || text.substr(0, 2) != "a^") return fail();
  std::string_view rest = text.substr(2);
  bool flip = false;
  if (rest.size() >= 2 && rest.substr(rest.size() - 2) == " b") {
    flip = true;
    rest.remove_suffix(2);
  }
  if (rest.empty() || rest.front() == '+') return fail();
  long k = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
  if (ec != std::errc() || ptr != rest.data() + rest.size()) return fail();
  return flip ? Element::reflection(k, n) : Element::rotation(k, n);
}

GroupTable::GroupTable(Modulus n) : n_(n), size_(n.group_order()) {
  mul_.resize(static_cast<std::size_t>(size_ * size_));
  inv_.resize(static_cast<std::size_t>(size_));
  for (int x = 0; x < size_; ++x) {
    Element ex = element_at(x, n);
    inv_[static_cast<std::size_t>(x)] = index_of(dimaps::inv(ex, n), n);
    for (int y = 0; y < size_; ++y) {
      mul_[static_cast<std::size_t>(x * size_ + y)] = index_of(dimaps::mul(ex, element_at(y, n), n), n);
    }
  }
}

}  // namespace dimaps
