#pragma once

// Exact arithmetic in the dihedral group D_n = <a, b | a^n = b^2 = 1, bab = a^-1>.

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dimaps {

/// The parameter n of D_n (order 2n). Always at least 2.
class Modulus {
 public:
  explicit Modulus(int n);

  int value() const { return n_; }
  int group_order() const { return 2 * n_; }

  friend bool operator==(Modulus, Modulus) = default;

 private:
  int n_;
};

/// Normal form a^exp (flip == false) or a^exp b (flip == true) with
/// 0 <= exp < n. Ordering is (flip, exp), i.e. all rotations first.
struct Element {
  bool flip = false;
  int exp = 0;

  static Element identity() { return {}; }
  static Element rotation(long e, Modulus n);
  static Element reflection(long e, Modulus n);

  bool is_identity() const { return !flip && exp == 0; }
  bool is_rotation() const { return !flip; }

  auto operator<=>(const Element&) const = default;
};

/// Residue of k modulo m in [0, m).
inline long mod(long k, long m) {
  long r = k % m;
  return r < 0 ? r + m : r;
}

int gcd(int a, int b);

/// Dense index in [0, 2n): exp for rotations, n + exp for reflections.
/// Index order agrees with Element ordering.
inline int index_of(Element x, Modulus n) { return x.exp + (x.flip ? n.value() : 0); }
Element element_at(int index, Modulus n);

/// All 2n elements in index order.
std::vector<Element> all_elements(Modulus n);

Element mul(Element x, Element y, Modulus n);
Element inv(Element x, Modulus n);
Element power(Element x, long k, Modulus n);
int element_order(Element x, Modulus n);

/// Explicit sorted element set; always contains the identity and is closed
/// under products.
class Subgroup {
 public:
  /// Throws std::invalid_argument unless `elements` forms a subgroup.
  Subgroup(std::vector<Element> elements, Modulus n);

  /// The trivial subgroup.
  static Subgroup trivial(Modulus n);

  Modulus modulus() const { return n_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Element x) const;
  /// True when every element lies in A_n.
  bool inside_rotations() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.n_ == b.n_ && a.elements_ == b.elements_;
  }

 private:
  Modulus n_;
  std::vector<Element> elements_;
};

/// Closure of `generators` under the group operation.
Subgroup generated_subgroup(std::span<const Element> generators, Modulus n);

/// The automorphism s_{i,j}: a -> a^i, b -> a^j b, with gcd(i, n) = 1.
struct GroupAutomorphism {
  int i = 1;
  int j = 0;

  friend bool operator==(const GroupAutomorphism&, const GroupAutomorphism&) = default;
};

/// Normalizes (i, j) modulo n; throws std::invalid_argument if gcd(i, n) != 1.
GroupAutomorphism make_automorphism(long i, long j, Modulus n);

/// Every s_{i,j}, ordered by i then j. There are n * phi(n) of them.
std::vector<GroupAutomorphism> automorphisms(Modulus n);

Element apply_aut(GroupAutomorphism s, Element x, Modulus n);

/// (s o t)(x) = s(t(x)).
GroupAutomorphism compose(GroupAutomorphism s, GroupAutomorphism t, Modulus n);

/// Text forms: "1", "b", "a^K", "a^K b".
std::string format_element(Element x);

/// Parses the text form; K may be any decimal integer (optionally negative)
/// and is reduced modulo n. Throws ParseError.
Element parse_element(std::string_view text, Modulus n);

/// Flat multiplication and inverse tables over element indices, for the
/// inner loops of searches and oracles.
class GroupTable {
 public:
  explicit GroupTable(Modulus n);

  Modulus modulus() const { return n_; }
  int size() const { return size_; }
  int mul(int x, int y) const { return mul_[static_cast<std::size_t>(x * size_ + y)]; }
  int inv(int x) const { return inv_[static_cast<std::size_t>(x)]; }

 private:
  Modulus n_;
  int size_;
  std::vector<int> mul_;
  std::vector<int> inv_;
};

}  // namespace dimaps
