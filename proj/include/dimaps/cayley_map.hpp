#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dimaps/dihedral.hpp"
#include "dimaps/errors.hpp"

namespace dimaps {

enum class MapErrorKind { EmptyOrShort, ContainsIdentity, Duplicates, NotInverseClosed, NotGenerating };

std::string to_string(MapErrorKind kind);

/// Thrown by make_map; kind() names the violated invariant.
class InvalidMap : public Error {
 public:
  InvalidMap(MapErrorKind kind, const std::string& detail);
  MapErrorKind kind() const { return kind_; }

 private:
  MapErrorKind kind_;
};

/// CM(D_n, X, p) stored as the cycle (x_0, ..., x_{d-1}) of p. The cycle has
/// a fixed starting entry, but rotations of the list denote the same map.
class CayleyMap {
 public:
  Modulus modulus() const { return n_; }
  int valency() const { return static_cast<int>(cycle_.size()); }
  const std::vector<Element>& cycle() const { return cycle_; }

  /// x_k with k taken modulo d.
  Element at(long k) const { return cycle_[static_cast<std::size_t>(mod(k, valency()))]; }
  /// Index of x in the cycle, or -1 if x is not in X.
  int position(Element x) const { return position_[static_cast<std::size_t>(index_of(x, n_))]; }
  bool contains(Element x) const { return position(x) >= 0; }

  /// p(x) and p^{-1}(x) for x in X.
  Element next(Element x) const { return at(position(x) + 1); }
  Element previous(Element x) const { return at(position(x) - 1); }

  /// c(k): the index of x_k^{-1}.
  int inverse_position(long k) const { return inverse_pos_[static_cast<std::size_t>(mod(k, valency()))]; }

  /// Same map with the cycle rotated to start at x_k.
  CayleyMap rotated(int k) const;
  /// Rotation starting at the least element of X.
  CayleyMap normalized() const;

  /// Structural equality of the stored list (no rotation).
  friend bool operator==(const CayleyMap& a, const CayleyMap& b) { return a.n_ == b.n_ && a.cycle_ == b.cycle_; }

 private:
  CayleyMap(Modulus n, std::vector<Element> cycle);
  friend CayleyMap make_map(Modulus n, std::vector<Element> cycle);

  Modulus n_;
  std::vector<Element> cycle_;
  std::vector<int> position_;
  std::vector<int> inverse_pos_;
};

/// Validates and builds a map. Throws InvalidMap.
CayleyMap make_map(Modulus n, std::vector<Element> cycle);

/// The involution c with x_k^{-1} = x_{c(k)}.
struct InverseIndexMap {
  std::vector<int> c;
  int operator()(long k) const { return c[static_cast<std::size_t>(mod(k, static_cast<long>(c.size())))]; }
};

InverseIndexMap inverse_index(const CayleyMap& m);

/// t-balance classification: p(x)^{-1} = p^t(x^{-1}) for all x in X.
struct BalanceType {
  enum class Kind { Balanced, AntiBalanced, TBalanced, NotTBalanced };
  Kind kind = Kind::NotTBalanced;
  /// The balancing exponent; meaningful unless kind is NotTBalanced.
  int t = 0;

  friend bool operator==(const BalanceType&, const BalanceType&) = default;
};

BalanceType balance_type(const CayleyMap& m);
std::string to_string(const BalanceType& b);

/// True iff some rotations of the two cycles give equal inverse-offset patterns.
bool rotation_type_equal(const CayleyMap& m1, const CayleyMap& m2);

struct FaceStructure {
  /// Face lengths, sorted ascending.
  std::vector<int> faces;
  int genus = 0;
  int euler_characteristic = 2;
};

/// Orbits of the arc successor (g, x) -> (g x, p(x^{-1})).
FaceStructure trace_faces(const CayleyMap& m);

/// A group automorphism s with s(X1) = X2 and s p1 = p2 s, if any.
std::optional<GroupAutomorphism> equivalent(const CayleyMap& m1, const CayleyMap& m2);

/// The map whose cycle is s applied entrywise.
CayleyMap apply_aut(GroupAutomorphism s, const CayleyMap& m);

/// Orientation-preserving isomorphism invariant: the least breadth-first
/// dart code over all roots at the identity vertex.
std::vector<int> canonical_code(const CayleyMap& m);
bool isomorphic(const CayleyMap& m1, const CayleyMap& m2);

/// Adjacency lists of the underlying Cayley graph, indexed by element index.
std::vector<std::vector<int>> underlying_graph(const CayleyMap& m);

}  // namespace dimaps
