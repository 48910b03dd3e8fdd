#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle {

using namespace dimaps;

DartSystem darts_of(const CayleyMap& m) {
  const Modulus n = m.modulus();
  const int d = m.valency();
  DartSystem s;
  s.darts = n.group_order() * d;
  s.rotate.resize(static_cast<std::size_t>(s.darts));
  s.reverse.resize(static_cast<std::size_t>(s.darts));
  for (const Element g : all_elements(n)) {
    for (int k = 0; k < d; ++k) {
      const int dart = index_of(g, n) * d + k;
      s.rotate[static_cast<std::size_t>(dart)] = index_of(g, n) * d + (k + 1) % d;
      const Element x = m.at(k);
      const Element h = mul(g, x, n);
      s.reverse[static_cast<std::size_t>(dart)] = index_of(h, n) * d + m.position(inv(x, n));
    }
  }
  return s;
}

namespace {

Perm compose(const Perm& p, const Perm& q) {  // p after q
  Perm r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

// Closure of <gens>, abandoned once it outgrows `cap`.
std::size_t group_order_capped(const std::vector<Perm>& gens, std::size_t cap) {
  Perm id(gens.front().size());
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::vector<Perm> queue{id};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Perm& s : gens) {
      Perm next = compose(s, queue[head]);
      if (seen.insert(next).second) {
        if (seen.size() > cap) return seen.size();
        queue.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

// A bijection f with f(0) = target, f A = A' f for each generator pair.
bool conjugates(const std::vector<Perm>& from, const std::vector<Perm>& to, int target) {
  const std::size_t size = from.front().size();
  Perm f(size, -1);
  std::vector<bool> used(size, false);
  f[0] = target;
  used[static_cast<std::size_t>(target)] = true;
  std::vector<int> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (std::size_t g = 0; g < from.size(); ++g) {
      const int y = from[g][static_cast<std::size_t>(x)];
      const int fy = to[g][static_cast<std::size_t>(f[static_cast<std::size_t>(x)])];
      if (f[static_cast<std::size_t>(y)] < 0) {
        if (used[static_cast<std::size_t>(fy)]) return false;
        f[static_cast<std::size_t>(y)] = fy;
        used[static_cast<std::size_t>(fy)] = true;
        queue.push_back(y);
      } else if (f[static_cast<std::size_t>(y)] != fy) {
        return false;
      }
    }
  }
  return queue.size() == size;
}

}  // namespace

bool regular_by_monodromy(const CayleyMap& m) {
  const DartSystem s = darts_of(m);
  return group_order_capped({s.rotate, s.reverse}, static_cast<std::size_t>(s.darts)) == static_cast<std::size_t>(s.darts);
}

bool reflexible_by_monodromy(const CayleyMap& m) {
  if (!regular_by_monodromy(m)) return false;
  const DartSystem s = darts_of(m);
  const std::vector<Perm> from{s.rotate, s.reverse};
  const std::vector<Perm> to{inverse(s.rotate), s.reverse};
  for (int t = 0; t < s.darts; ++t) {
    if (conjugates(from, to, t)) return true;
  }
  return false;
}

int face_count(const CayleyMap& m) {
  const DartSystem s = darts_of(m);
  const Perm walk = compose(s.rotate, s.reverse);
  std::vector<bool> seen(static_cast<std::size_t>(s.darts), false);
  int faces = 0;
  for (int x = 0; x < s.darts; ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    ++faces;
    for (int y = x; !seen[static_cast<std::size_t>(y)]; y = walk[static_cast<std::size_t>(y)]) seen[static_cast<std::size_t>(y)] = true;
  }
  return faces;
}

int genus(const CayleyMap& m) {
  const int v = m.modulus().group_order();
  const int e = v * m.valency() / 2;
  return (2 - (v - e + face_count(m))) / 2;
}

std::vector<CayleyMap> all_maps(Modulus n, int max_d) {
  // Inverse-closed units: involutions alone, other elements with their inverse.
  std::vector<std::vector<Element>> units;
  for (const Element x : all_elements(n)) {
    if (x.is_identity()) continue;
    const Element y = inv(x, n);
    if (y < x) continue;
    units.push_back(x == y ? std::vector<Element>{x} : std::vector<Element>{x, y});
  }
  std::vector<CayleyMap> out;
  for (std::uint32_t mask = 1; mask < (1u << units.size()); ++mask) {
    std::vector<Element> xs;
    for (std::size_t u = 0; u < units.size(); ++u) {
      if (mask & (1u << u)) xs.insert(xs.end(), units[u].begin(), units[u].end());
    }
    if (static_cast<int>(xs.size()) > max_d || xs.size() < 2) continue;
    if (generated_subgroup(xs, n).size() != static_cast<std::size_t>(n.group_order())) continue;
    std::sort(xs.begin(), xs.end());
    // Fix the least element first; permute the rest.
    std::vector<Element> rest(xs.begin() + 1, xs.end());
    do {
      std::vector<Element> cycle{xs.front()};
      cycle.insert(cycle.end(), rest.begin(), rest.end());
      out.push_back(make_map(n, std::move(cycle)));
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return out;
}

CayleyMap random_map(Modulus n, std::mt19937& rng) {
  const auto elems = all_elements(n);
  for (;;) {
    std::vector<Element> xs;
    for (const Element x : elems) {
      if (x.is_identity()) continue;
      const Element y = inv(x, n);
      if (y < x) continue;
      if (std::bernoulli_distribution(0.35)(rng)) {
        xs.push_back(x);
        if (y != x) xs.push_back(y);
      }
    }
    if (xs.size() < 2 || generated_subgroup(xs, n).size() != static_cast<std::size_t>(n.group_order())) continue;
    std::shuffle(xs.begin(), xs.end(), rng);
    return make_map(n, std::move(xs));
  }
}

namespace {

bool extend(const Graph& a, const Graph& b, std::vector<int>& f, std::vector<bool>& used, std::size_t v) {
  if (v == a.size()) return true;
  for (std::size_t w = 0; w < b.size(); ++w) {
    if (used[w] || a[v].size() != b[w].size()) continue;
    bool ok = true;
    for (std::size_t u = 0; u < v && ok; ++u) {
      const bool ea = std::count(a[v].begin(), a[v].end(), static_cast<int>(u)) > 0;
      const bool eb = std::count(b[w].begin(), b[w].end(), f[u]) > 0;
      ok = ea == eb;
    }
    if (!ok) continue;
    f[v] = static_cast<int>(w);
    used[w] = true;
    if (extend(a, b, f, used, v + 1)) return true;
    used[w] = false;
  }
  return false;
}

Graph simple(const Graph& g) {
  Graph out(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    std::set<int> nb(g[v].begin(), g[v].end());
    nb.erase(static_cast<int>(v));
    out[v].assign(nb.begin(), nb.end());
  }
  return out;
}

}  // namespace

bool graphs_isomorphic(const Graph& a0, const Graph& b0) {
  const Graph a = simple(a0), b = simple(b0);
  if (a.size() != b.size()) return false;
  std::vector<int> f(a.size(), -1);
  std::vector<bool> used(b.size(), false);
  return extend(a, b, f, used, 0);
}

Graph complete_graph(int k) {
  Graph g(static_cast<std::size_t>(k));
  for (int u = 0; u < k; ++u) {
    for (int v = 0; v < k; ++v) {
      if (u != v) g[static_cast<std::size_t>(u)].push_back(v);
    }
  }
  return g;
}

Graph complete_bipartite(int k) {
  Graph g(static_cast<std::size_t>(2 * k));
  for (int u = 0; u < k; ++u) {
    for (int v = k; v < 2 * k; ++v) {
      g[static_cast<std::size_t>(u)].push_back(v);
      g[static_cast<std::size_t>(v)].push_back(u);
    }
  }
  return g;
}

Graph cube_graph() {
  Graph g(8);
  for (int u = 0; u < 8; ++u) {
    for (int bit = 0; bit < 3; ++bit) g[static_cast<std::size_t>(u)].push_back(u ^ (1 << bit));
  }
  return g;
}

Graph octahedron_graph() {
  Graph g(6);
  for (int u = 0; u < 6; ++u) {
    for (int v = 0; v < 6; ++v) {
      if (u != v && u / 2 != v / 2) g[static_cast<std::size_t>(u)].push_back(v);
    }
  }
  return g;
}

}  // namespace oracle
