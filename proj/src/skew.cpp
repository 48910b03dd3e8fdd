#include "dimaps/skew.hpp"

#include <numeric>

#include "dimaps/errors.hpp"
#include "dimaps/flags.hpp"

namespace dimaps {

namespace {

using Table = std::vector<int>;

Table to_index_table(std::span<const Element> images, Modulus n) {
  Table out;
  out.reserve(images.size());
  for (Element x : images) out.push_back(index_of(x, n));
  return out;
}

// powers[t][x] = phi^t(x) for 0 <= t < order.
std::vector<Table> power_tables(const Table& phi, int order) {
  std::vector<Table> out;
  Table current(phi.size());
  std::iota(current.begin(), current.end(), 0);
  for (int t = 0; t < order; ++t) {
    out.push_back(current);
    for (auto& v : current) v = phi[static_cast<std::size_t>(v)];
  }
  return out;
}

int table_order(const Table& phi) {
  std::vector<bool> seen(phi.size(), false);
  long order = 1;
  for (std::size_t s = 0; s < phi.size(); ++s) {
    if (seen[s]) continue;
    long len = 0;
    for (auto v = s; !seen[v]; v = static_cast<std::size_t>(phi[v])) {
      seen[v] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return static_cast<int>(order);
}

}  // namespace

Element SkewMorphism::iterate(Element x, long k) const {
  long steps = mod(k, order);
  for (long t = 0; t < steps; ++t) x = image(x);
  return x;
}

SkewMorphism SkewMorphism::identity(Modulus n) {
  SkewMorphism sm;
  sm.n = n;
  sm.order = 1;
  sm.images = all_elements(n);
  sm.power.assign(static_cast<std::size_t>(n.group_order()), 1);
  return sm;
}

int permutation_order(std::span<const Element> images, Modulus n) { return table_order(to_index_table(images, n)); }

std::optional<std::vector<int>> derive_power_function(std::span<const Element> images, Modulus n) {
  const Table phi = to_index_table(images, n);
  const int order = table_order(phi);
  const auto powers = power_tables(phi, order);
  const GroupTable g(n);
  std::vector<int> out;
  for (int h = 0; h < g.size(); ++h) {
    const int inv_ph = g.inv(phi[static_cast<std::size_t>(h)]);
    int found = -1;
    for (int t = 1; t <= order && found < 0; ++t) {
      const auto& shifted = powers[static_cast<std::size_t>(t % order)];
      bool ok = true;
      for (int y = 0; y < g.size() && ok; ++y) {
        ok = g.mul(inv_ph, phi[static_cast<std::size_t>(g.mul(h, y))]) == shifted[static_cast<std::size_t>(y)];
      }
      if (ok) found = t;
    }
    if (found < 0) return std::nullopt;
    out.push_back(found);
  }
  return out;
}

SkewVerdict verify_skew(std::span<const Element> images, std::span<const int> power, Modulus n) {
  const auto size = static_cast<std::size_t>(n.group_order());
  if (images.size() != size || power.size() != size) {
    throw TablesIncomplete("skew tables need " + std::to_string(size) + " entries, got " + std::to_string(images.size()) +
                           " images and " + std::to_string(power.size()) + " powers");
  }
  for (Element x : images) {
    if (x.exp < 0 || x.exp >= n.value()) throw TablesIncomplete("image not in normal form");
  }
  SkewVerdict verdict;
  if (!images[0].is_identity()) return {false, "identity is not fixed", Element::identity(), std::nullopt};
  std::vector<bool> hit(size, false);
  for (std::size_t k = 0; k < size; ++k) {
    auto v = static_cast<std::size_t>(index_of(images[k], n));
    if (hit[v]) return {false, "not a bijection", element_at(static_cast<int>(k), n), std::nullopt};
    hit[v] = true;
  }
  const Table phi = to_index_table(images, n);
  const int order = table_order(phi);
  const auto powers = power_tables(phi, order);
  GroupTable g(n);
  for (int x = 0; x < g.size(); ++x) {
    const auto& shifted = powers[static_cast<std::size_t>(mod(power[static_cast<std::size_t>(x)], order))];
    for (int y = 0; y < g.size(); ++y) {
      int lhs = phi[static_cast<std::size_t>(g.mul(x, y))];
      int rhs = g.mul(phi[static_cast<std::size_t>(x)], shifted[static_cast<std::size_t>(y)]);
      if (lhs != rhs) return {false, "skew axiom fails", element_at(x, n), element_at(y, n)};
    }
  }
  return verdict;
}

SkewVerdict verify_skew(const SkewMorphism& sm) { return verify_skew(sm.images, sm.power, sm.n); }

std::optional<SkewMorphism> extend_from_rotation(const CayleyMap& m) {
  const Modulus n = m.modulus();
  const int d = m.valency();
  const GroupTable g(n);
  const int size = g.size();

  std::vector<int> x(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) x[static_cast<std::size_t>(k)] = index_of(m.at(k), n);
  // pi(x_k) = c(k+1) - c(k) in Z_d.
  std::vector<int> seed(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) seed[static_cast<std::size_t>(k)] = static_cast<int>(mod(m.inverse_position(k + 1) - m.inverse_position(k), d));
  // Prefix sums let pi(g x_k) = sum_{i<pi(g)} pi(x_{k+i}) be read off in O(1).
  std::vector<long> prefix(static_cast<std::size_t>(2 * d + 1), 0);
  for (int k = 0; k < 2 * d; ++k) prefix[static_cast<std::size_t>(k + 1)] = prefix[static_cast<std::size_t>(k)] + seed[static_cast<std::size_t>(k % d)];

  Table phi(static_cast<std::size_t>(size), -1), phi_inv(static_cast<std::size_t>(size), -1);
  std::vector<int> pi_d(static_cast<std::size_t>(size), -1);
  phi[0] = 0;
  phi_inv[0] = 0;
  pi_d[0] = 1 % d;
  std::vector<int> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int h = queue[head];
    const int ph = phi[static_cast<std::size_t>(h)];
    const int s = pi_d[static_cast<std::size_t>(h)];
    for (int k = 0; k < d; ++k) {
      const int target = g.mul(h, x[static_cast<std::size_t>(k)]);
      const int image = g.mul(ph, x[static_cast<std::size_t>((k + s) % d)]);
      const auto power = static_cast<int>(mod(prefix[static_cast<std::size_t>(k + s)] - prefix[static_cast<std::size_t>(k)], d));
      auto& slot = phi[static_cast<std::size_t>(target)];
      if (slot < 0) {
        if (phi_inv[static_cast<std::size_t>(image)] >= 0) return std::nullopt;
        slot = image;
        phi_inv[static_cast<std::size_t>(image)] = target;
        pi_d[static_cast<std::size_t>(target)] = power;
        queue.push_back(target);
      } else if (slot != image || pi_d[static_cast<std::size_t>(target)] != power) {
        return std::nullopt;
      }
    }
  }
  if (static_cast<int>(queue.size()) != size) return std::nullopt;

  // Lift each power value from Z_d to Z_order: the unique t = pi_d (mod d)
  // with phi(h y) = phi(h) phi^t(y) for all y.
  const int order = table_order(phi);
  if (order % d != 0) return std::nullopt;
  const auto powers = power_tables(phi, order);
  SkewMorphism sm;
  sm.n = n;
  sm.order = order;
  sm.images.resize(static_cast<std::size_t>(size));
  sm.power.resize(static_cast<std::size_t>(size));
  for (int h = 0; h < size; ++h) {
    sm.images[static_cast<std::size_t>(h)] = element_at(phi[static_cast<std::size_t>(h)], n);
    const int inv_ph = g.inv(phi[static_cast<std::size_t>(h)]);
    int lifted = -1;
    for (int t = pi_d[static_cast<std::size_t>(h)]; t < order && lifted < 0; t += d) {
      const auto& shifted = powers[static_cast<std::size_t>(t)];
      bool ok = true;
      for (int y = 0; y < size && ok; ++y) {
        ok = g.mul(inv_ph, phi[static_cast<std::size_t>(g.mul(h, y))]) == shifted[static_cast<std::size_t>(y)];
      }
      if (ok) lifted = t;
    }
    if (lifted < 0) return std::nullopt;
    sm.power[static_cast<std::size_t>(h)] = lifted == 0 ? order : lifted;
  }
  if (!verify_skew(sm)) return std::nullopt;
  return sm;
}

Subgroup power_kernel(const SkewMorphism& sm) {
  std::vector<Element> members;
  for (int k = 0; k < sm.n.group_order(); ++k) {
    if (mod(sm.power[static_cast<std::size_t>(k)] - 1, sm.order) == 0) members.push_back(element_at(k, sm.n));
  }
  return Subgroup(std::move(members), sm.n);
}

bool power_values_nonzero(const SkewMorphism& sm) {
  for (int p : sm.power) {
    if (mod(p, sm.order) == 0) return false;
  }
  return true;
}

std::optional<RegularityCertificate> is_regular(const CayleyMap& m) {
  auto skew = extend_from_rotation(m);
  const bool by_flags = regular_by_flags(m);
  if (skew.has_value() != by_flags) {
    throw OracleDisagreement("skew extension says " + std::string(skew ? "regular" : "not regular") +
                             ", arc oracle disagrees");
  }
  if (!skew) return std::nullopt;
  RegularityCertificate cert{std::move(*skew), true};
  for (Element x : m.cycle()) cert.orbit_check = cert.orbit_check && cert.skew.image(x) == m.next(x);
  if (!cert.orbit_check) throw OracleDisagreement("skew-morphism does not restrict to the rotation");
  return cert;
}

}  // namespace dimaps
