#include "dimaps/flags.hpp"

#include <vector>

namespace dimaps {

namespace {

// Darts (g, k) = g * d + k, running from g to g x_k.
struct DartMoves {
  std::vector<int> rotate;   // (g, k) -> (g, k + 1)
  std::vector<int> reverse;  // (g, k) -> (g x_k, c(k))

  explicit DartMoves(const CayleyMap& m) {
    const Modulus n = m.modulus();
    const int d = m.valency();
    const int darts = n.group_order() * d;
    rotate.resize(static_cast<std::size_t>(darts));
    reverse.resize(static_cast<std::size_t>(darts));
    for (int g = 0; g < n.group_order(); ++g) {
      const Element eg = element_at(g, n);
      for (int k = 0; k < d; ++k) {
        // The reverse of (g, k) leaves g x_k along x_k^{-1}, which sits at c(k).
        const int back = m.position(inv(m.at(k), n));
        rotate[static_cast<std::size_t>(g * d + k)] = g * d + (k + 1) % d;
        reverse[static_cast<std::size_t>(g * d + k)] = index_of(mul(eg, m.at(k), n), n) * d + back;
      }
    }
  }
};

bool extends_to_automorphism(const DartMoves& moves, int target, std::vector<int>& f, std::vector<int>& f_inv,
                             std::vector<int>& stack) {
  std::fill(f.begin(), f.end(), -1);
  std::fill(f_inv.begin(), f_inv.end(), -1);
  stack.clear();
  f[0] = target;
  f_inv[static_cast<std::size_t>(target)] = 0;
  stack.push_back(0);
  while (!stack.empty()) {
    const int dart = stack.back();
    stack.pop_back();
    const int image = f[static_cast<std::size_t>(dart)];
    const std::pair<int, int> steps[] = {
        {moves.rotate[static_cast<std::size_t>(dart)], moves.rotate[static_cast<std::size_t>(image)]},
        {moves.reverse[static_cast<std::size_t>(dart)], moves.reverse[static_cast<std::size_t>(image)]},
    };
    for (auto [from, to] : steps) {
      int& slot = f[static_cast<std::size_t>(from)];
      if (slot == -1) {
        if (f_inv[static_cast<std::size_t>(to)] != -1) return false;
        slot = to;
        f_inv[static_cast<std::size_t>(to)] = from;
        stack.push_back(from);
      } else if (slot != to) {
        return false;
      }
    }
  }
  return true;
}

long count_automorphisms(const CayleyMap& m, bool stop_at_first_failure) {
  const DartMoves moves(m);
  const auto darts = moves.rotate.size();
  std::vector<int> f(darts), f_inv(darts), stack;
  long count = 0;
  for (std::size_t target = 0; target < darts; ++target) {
    if (extends_to_automorphism(moves, static_cast<int>(target), f, f_inv, stack)) {
      ++count;
    } else if (stop_at_first_failure) {
      return count;
    }
  }
  return count;
}

bool is_vertex_bijection(const CayleyMap& m, std::span<const Element> f) {
  const Modulus n = m.modulus();
  if (f.size() != static_cast<std::size_t>(n.group_order())) return false;
  std::vector<bool> hit(f.size(), false);
  for (Element y : f) {
    if (y.exp < 0 || y.exp >= n.value()) return false;
    auto k = static_cast<std::size_t>(index_of(y, n));
    if (hit[k]) return false;
    hit[k] = true;
  }
  return true;
}

// direction +1 checks rotation preservation, -1 rotation reversal.
bool respects_rotation(const CayleyMap& m, std::span<const Element> f, int direction) {
  const Modulus n = m.modulus();
  for (int g = 0; g < n.group_order(); ++g) {
    const Element eg = element_at(g, n);
    const Element fg_inv = inv(f[static_cast<std::size_t>(g)], n);
    for (int k = 0; k < m.valency(); ++k) {
      const Element step = mul(fg_inv, f[static_cast<std::size_t>(index_of(mul(eg, m.at(k), n), n))], n);
      const int at = m.position(step);
      if (at < 0) return false;
      const Element turned = mul(fg_inv, f[static_cast<std::size_t>(index_of(mul(eg, m.at(k + 1), n), n))], n);
      if (turned != m.at(at + direction)) return false;
    }
  }
  return true;
}

}  // namespace

long orientation_preserving_automorphism_count(const CayleyMap& m) { return count_automorphisms(m, false); }

bool regular_by_flags(const CayleyMap& m) {
  const long darts = static_cast<long>(m.modulus().group_order()) * m.valency();
  return count_automorphisms(m, true) == darts;
}

bool is_map_automorphism(const CayleyMap& m, std::span<const Element> f) {
  return is_vertex_bijection(m, f) && respects_rotation(m, f, +1);
}

bool is_antirotary(const CayleyMap& m, std::span<const Element> tau) {
  return is_vertex_bijection(m, tau) && tau[0].is_identity() && respects_rotation(m, tau, -1);
}

}  // namespace dimaps
