#include "dimaps/reflex.hpp"

#include "dimaps/errors.hpp"
#include "dimaps/flags.hpp"
#include "dimaps/skew.hpp"

namespace dimaps {

std::string to_string(ReflectionWitness::Kind kind) {
  return kind == ReflectionWitness::Kind::Balanced ? "balanced" : "partial";
}

bool satisfies_reflection_identity(const CayleyMap& m, GroupAutomorphism s) {
  const Modulus n = m.modulus();
  for (Element x : m.cycle()) {
    const Element image = apply_aut(s, x, n);
    if (!m.contains(image)) return false;
    if (apply_aut(s, m.next(x), n) != m.previous(image)) return false;
  }
  return true;
}

std::optional<ReflectionWitness> reflexible_by_automorphism(const CayleyMap& m) {
  if (!is_regular(m)) throw NotRegular("reflection witness requested for a non-regular map");
  const Modulus n = m.modulus();
  const bool balanced = balance_type(m).kind == BalanceType::Kind::Balanced;
  const int minus_one = n.value() - 1;
  for (GroupAutomorphism s : automorphisms(n)) {
    if (!balanced && s.i != minus_one) continue;
    if (satisfies_reflection_identity(m, s)) {
      return ReflectionWitness{s, balanced ? ReflectionWitness::Kind::Balanced : ReflectionWitness::Kind::PartiallyInverting};
    }
  }
  return std::nullopt;
}

std::vector<GroupAutomorphism> partially_inverting_reflections(const CayleyMap& m) {
  std::vector<GroupAutomorphism> out;
  const Modulus n = m.modulus();
  for (int j = 0; j < n.value(); ++j) {
    GroupAutomorphism s = make_automorphism(-1, j, n);
    if (satisfies_reflection_identity(m, s)) out.push_back(s);
  }
  return out;
}

std::optional<std::vector<Element>> antirotary_mapping(const CayleyMap& m) {
  const Modulus n = m.modulus();
  const int d = m.valency();
  const int size = n.group_order();
  for (int root = 0; root < d; ++root) {
    std::vector<int> tau(static_cast<std::size_t>(size), -1), tau_inv(static_cast<std::size_t>(size), -1);
    std::vector<int> beta(static_cast<std::size_t>(size), -1);
    tau[0] = 0;
    tau_inv[0] = 0;
    beta[0] = root;
    std::vector<int> queue{0};
    bool ok = true;
    for (std::size_t head = 0; head < queue.size() && ok; ++head) {
      const int g = queue[head];
      const Element tg = element_at(tau[static_cast<std::size_t>(g)], n);
      const int b = beta[static_cast<std::size_t>(g)];
      for (int i = 0; i < d && ok; ++i) {
        // The arc (g, g x_i) goes to (tau(g), tau(g) x_{b - i}); the arc back
        // from g x_i must land on the arc back from its image.
        const int next = index_of(mul(element_at(g, n), m.at(i), n), n);
        const int image = index_of(mul(tg, m.at(b - i), n), n);
        const auto next_beta = static_cast<int>(mod(m.inverse_position(b - i) + m.inverse_position(i), d));
        int& slot = tau[static_cast<std::size_t>(next)];
        if (slot < 0) {
          if (tau_inv[static_cast<std::size_t>(image)] >= 0) {
            ok = false;
            break;
          }
          slot = image;
          tau_inv[static_cast<std::size_t>(image)] = next;
          beta[static_cast<std::size_t>(next)] = next_beta;
          queue.push_back(next);
        } else {
          ok = slot == image && beta[static_cast<std::size_t>(next)] == next_beta;
        }
      }
    }
    if (!ok || static_cast<int>(queue.size()) != size) continue;
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(size));
    for (int v : tau) out.push_back(element_at(v, n));
    if (is_antirotary(m, out)) return out;
  }
  return std::nullopt;
}

bool reflexible_by_flags(const CayleyMap& m) { return antirotary_mapping(m).has_value(); }

std::optional<int> reflection_index(const CayleyMap& m) {
  std::optional<int> best;
  const int d = m.valency();
  for (int k = 0; k < d; ++k) {
    if (!m.at(k).is_rotation()) continue;
    int offset = static_cast<int>(mod(m.inverse_position(k) - k, d));
    if (offset == 0) offset = d;
    if (!best || offset < *best) best = offset;
  }
  return best;
}

}  // namespace dimaps
