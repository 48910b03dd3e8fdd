#include "dimaps/cayley_map.hpp"

#include <algorithm>

namespace dimaps {

std::string to_string(MapErrorKind kind) {
  switch (kind) {
    case MapErrorKind::EmptyOrShort: return "EmptyOrShort";
    case MapErrorKind::ContainsIdentity: return "ContainsIdentity";
    case MapErrorKind::Duplicates: return "Duplicates";
    case MapErrorKind::NotInverseClosed: return "NotInverseClosed";
    case MapErrorKind::NotGenerating: return "NotGenerating";
  }
  return "?";
}

InvalidMap::InvalidMap(MapErrorKind kind, const std::string& detail)
    : Error(to_string(kind) + ": " + detail), kind_(kind) {}

CayleyMap::CayleyMap(Modulus n, std::vector<Element> cycle) : n_(n), cycle_(std::move(cycle)) {
  position_.assign(static_cast<std::size_t>(n.group_order()), -1);
  for (std::size_t k = 0; k < cycle_.size(); ++k) position_[static_cast<std::size_t>(index_of(cycle_[k], n))] = static_cast<int>(k);
  inverse_pos_.resize(cycle_.size());
  for (std::size_t k = 0; k < cycle_.size(); ++k) inverse_pos_[k] = position(inv(cycle_[k], n));
}

CayleyMap CayleyMap::rotated(int k) const {
  std::vector<Element> out;
  out.reserve(cycle_.size());
  for (int t = 0; t < valency(); ++t) out.push_back(at(k + t));
  return CayleyMap(n_, std::move(out));
}

CayleyMap CayleyMap::normalized() const {
  auto least = std::min_element(cycle_.begin(), cycle_.end());
  return rotated(static_cast<int>(least - cycle_.begin()));
}

CayleyMap make_map(Modulus n, std::vector<Element> cycle) {
  if (cycle.size() < 2) throw InvalidMap(MapErrorKind::EmptyOrShort, "valency must be at least 2");
  std::vector<bool> seen(static_cast<std::size_t>(n.group_order()), false);
  for (Element x : cycle) {
    if (x.exp < 0 || x.exp >= n.value()) throw InvalidMap(MapErrorKind::ContainsIdentity, "element not in normal form");
    if (x.is_identity()) throw InvalidMap(MapErrorKind::ContainsIdentity, "identity in generating cycle");
    auto k = static_cast<std::size_t>(index_of(x, n));
    if (seen[k]) throw InvalidMap(MapErrorKind::Duplicates, format_element(x) + " appears twice");
    seen[k] = true;
  }
  for (Element x : cycle) {
    Element y = inv(x, n);
    if (!seen[static_cast<std::size_t>(index_of(y, n))]) {
      throw InvalidMap(MapErrorKind::NotInverseClosed, format_element(y) + " missing");
    }
  }
  if (generated_subgroup(cycle, n).size() != static_cast<std::size_t>(n.group_order())) {
    throw InvalidMap(MapErrorKind::NotGenerating, "X does not generate D_" + std::to_string(n.value()));
  }
  return CayleyMap(n, std::move(cycle));
}

InverseIndexMap inverse_index(const CayleyMap& m) {
  InverseIndexMap out;
  for (int k = 0; k < m.valency(); ++k) out.c.push_back(m.inverse_position(k));
  return out;
}

BalanceType balance_type(const CayleyMap& m) {
  const int d = m.valency();
  // p(x_k)^{-1} = x_{c(k+1)} and p^t(x_k^{-1}) = x_{c(k)+t}, so t = c(k+1) - c(k) for every k.
  const auto t = static_cast<int>(mod(m.inverse_position(1) - m.inverse_position(0), d));
  for (int k = 1; k < d; ++k) {
    if (mod(m.inverse_position(k + 1) - m.inverse_position(k), d) != t) return {BalanceType::Kind::NotTBalanced, 0};
  }
  if (t == 1) return {BalanceType::Kind::Balanced, t};
  if (t == d - 1) return {BalanceType::Kind::AntiBalanced, t};
  return {BalanceType::Kind::TBalanced, t};
}

std::string to_string(const BalanceType& b) {
  switch (b.kind) {
    case BalanceType::Kind::Balanced: return "balanced";
    case BalanceType::Kind::AntiBalanced: return "anti-balanced";
    case BalanceType::Kind::TBalanced: return std::to_string(b.t) + "-balanced";
    case BalanceType::Kind::NotTBalanced: return "not t-balanced";
  }
  return "?";
}

namespace {

// x_k^{-1} = p^{o_k}(x_k).
std::vector<int> inverse_offsets(const CayleyMap& m) {
  std::vector<int> out;
  for (int k = 0; k < m.valency(); ++k) out.push_back(static_cast<int>(mod(m.inverse_position(k) - k, m.valency())));
  return out;
}

}  // namespace

bool rotation_type_equal(const CayleyMap& m1, const CayleyMap& m2) {
  if (m1.valency() != m2.valency()) return false;
  const int d = m1.valency();
  auto o1 = inverse_offsets(m1);
  auto o2 = inverse_offsets(m2);
  for (int shift = 0; shift < d; ++shift) {
    bool same = true;
    for (int k = 0; k < d && same; ++k) same = o1[static_cast<std::size_t>(k)] == o2[static_cast<std::size_t>((k + shift) % d)];
    if (same) return true;
  }
  return false;
}

FaceStructure trace_faces(const CayleyMap& m) {
  const Modulus n = m.modulus();
  const int d = m.valency();
  const int arcs = n.group_order() * d;
  std::vector<bool> visited(static_cast<std::size_t>(arcs), false);
  FaceStructure out;
  for (int start = 0; start < arcs; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    int length = 0;
    int arc = start;
    while (!visited[static_cast<std::size_t>(arc)]) {
      visited[static_cast<std::size_t>(arc)] = true;
      ++length;
      Element g = element_at(arc / d, n);
      int k = arc % d;
      Element h = mul(g, m.at(k), n);
      arc = index_of(h, n) * d + static_cast<int>(mod(m.inverse_position(k) + 1, d));
    }
    out.faces.push_back(length);
  }
  std::sort(out.faces.begin(), out.faces.end());
  const int vertices = n.group_order();
  const int edges = n.value() * d;
  out.euler_characteristic = vertices - edges + static_cast<int>(out.faces.size());
  out.genus = (2 - out.euler_characteristic) / 2;
  return out;
}

std::optional<GroupAutomorphism> equivalent(const CayleyMap& m1, const CayleyMap& m2) {
  if (!(m1.modulus() == m2.modulus()) || m1.valency() != m2.valency()) return std::nullopt;
  const Modulus n = m1.modulus();
  for (GroupAutomorphism s : automorphisms(n)) {
    int start = m2.position(apply_aut(s, m1.at(0), n));
    if (start < 0) continue;
    bool ok = true;
    for (int k = 1; k < m1.valency() && ok; ++k) ok = apply_aut(s, m1.at(k), n) == m2.at(start + k);
    if (ok) return s;
  }
  return std::nullopt;
}

CayleyMap apply_aut(GroupAutomorphism s, const CayleyMap& m) {
  std::vector<Element> out;
  for (Element x : m.cycle()) out.push_back(apply_aut(s, x, m.modulus()));
  return make_map(m.modulus(), std::move(out));
}

std::vector<int> canonical_code(const CayleyMap& m) {
  const Modulus n = m.modulus();
  const int d = m.valency();
  const int darts = n.group_order() * d;
  GroupTable table(n);
  std::vector<int> gens;
  for (Element x : m.cycle()) gens.push_back(index_of(x, n));
  // Dart (g, k) runs from g to g x_k; R turns it about g, L reverses it.
  auto rotate = [&](int dart) { return dart - dart % d + (dart % d + 1) % d; };
  auto reverse = [&](int dart) {
    int g = dart / d, k = dart % d;
    return table.mul(g, gens[static_cast<std::size_t>(k)]) * d + m.inverse_position(k);
  };

  std::vector<int> best;
  std::vector<int> label(static_cast<std::size_t>(darts));
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(darts));
  for (int root = 0; root < d; ++root) {
    std::fill(label.begin(), label.end(), -1);
    order.clear();
    label[static_cast<std::size_t>(root)] = 0;
    order.push_back(root);
    std::vector<int> code{n.value(), d};
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (int next : {rotate(order[head]), reverse(order[head])}) {
        auto& l = label[static_cast<std::size_t>(next)];
        if (l < 0) {
          l = static_cast<int>(order.size());
          order.push_back(next);
        }
        code.push_back(l);
      }
    }
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

bool isomorphic(const CayleyMap& m1, const CayleyMap& m2) { return canonical_code(m1) == canonical_code(m2); }

std::vector<std::vector<int>> underlying_graph(const CayleyMap& m) {
  const Modulus n = m.modulus();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n.group_order()));
  for (int g = 0; g < n.group_order(); ++g) {
    for (Element x : m.cycle()) adj[static_cast<std::size_t>(g)].push_back(index_of(mul(element_at(g, n), x, n), n));
    std::sort(adj[static_cast<std::size_t>(g)].begin(), adj[static_cast<std::size_t>(g)].end());
  }
  return adj;
}

}  // namespace dimaps
