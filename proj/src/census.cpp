#include "dimaps/census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <thread>

#include "dimaps/errors.hpp"
#include "dimaps/reflex.hpp"
#include "dimaps/skew.hpp"

namespace dimaps {

namespace {

// Partial knowledge about a map under construction. Elements are group
// indices; -1 means unknown. s holds pi mod d.
struct State {
  std::vector<int> pos;
  std::vector<int> where;
  std::vector<int> phi, phi_inv, s;
};

// Backtracking over the cycle positions of one valency d with x_0 fixed.
// After every choice the skew relations
//   phi(g x_k) = phi(g) x_{k + s(g)},   s(g x_k) = c(k + s(g)) - c(k)
// are closed under forward and backward forcing; any clash prunes.
class CycleSearch {
 public:
  CycleSearch(const GroupTable& table, int d, int x0) : g_(table), d_(d), x0_(x0) {}

  void run(std::vector<std::vector<int>>& out) {
    const auto size = static_cast<std::size_t>(g_.size());
    State st{std::vector<int>(static_cast<std::size_t>(d_), -1), std::vector<int>(size, -1), std::vector<int>(size, -1),
             std::vector<int>(size, -1), std::vector<int>(size, -1)};
    st.phi[0] = 0;
    st.phi_inv[0] = 0;
    st.s[0] = 1 % d_;
    if (place(st, 0, x0_) && propagate(st)) branch(std::move(st), out);
  }

 private:
  const GroupTable& g_;
  int d_;
  int x0_;
  bool changed_ = false;

  int wrap(int k) const { return ((k % d_) + d_) % d_; }

  bool place(State& st, int k, int e) {
    auto& slot = st.pos[static_cast<std::size_t>(k)];
    if (slot == e) return true;
    if (slot >= 0 || e == 0 || e < x0_ || st.where[static_cast<std::size_t>(e)] >= 0) return false;
    slot = e;
    st.where[static_cast<std::size_t>(e)] = k;
    changed_ = true;
    return true;
  }

  bool set_phi(State& st, int t, int image) {
    auto& slot = st.phi[static_cast<std::size_t>(t)];
    if (slot == image) return true;
    if (slot >= 0 || st.phi_inv[static_cast<std::size_t>(image)] >= 0) return false;
    slot = image;
    st.phi_inv[static_cast<std::size_t>(image)] = t;
    changed_ = true;
    return true;
  }

  bool set_s(State& st, int t, int v) {
    auto& slot = st.s[static_cast<std::size_t>(t)];
    if (slot == v) return true;
    if (slot >= 0) return false;
    slot = v;
    changed_ = true;
    return true;
  }

  // Position of x_k^{-1}, or -1.
  int c(const State& st, int k) const {
    const int e = st.pos[static_cast<std::size_t>(k)];
    return e < 0 ? -1 : st.where[static_cast<std::size_t>(g_.inv(e))];
  }

  bool propagate(State& st) {
    do {
      changed_ = false;
      for (int h = 0; h < g_.size(); ++h) {
        const int ph = st.phi[static_cast<std::size_t>(h)];
        const int sh = st.s[static_cast<std::size_t>(h)];
        if (ph < 0 || sh < 0) continue;
        for (int k = 0; k < d_; ++k) {
          const int j = wrap(k + sh);
          const int xk = st.pos[static_cast<std::size_t>(k)];
          const int xj = st.pos[static_cast<std::size_t>(j)];
          if (xk < 0) {
            // Backward: phi^{-1}(phi(h) x_j) = h x_k.
            if (xj < 0) continue;
            const int pre = st.phi_inv[static_cast<std::size_t>(g_.mul(ph, xj))];
            if (pre >= 0 && !place(st, k, g_.mul(g_.inv(h), pre))) return false;
            continue;
          }
          const int t = g_.mul(h, xk);
          if (xj >= 0) {
            if (!set_phi(st, t, g_.mul(ph, xj))) return false;
          } else if (st.phi[static_cast<std::size_t>(t)] >= 0) {
            if (!place(st, j, g_.mul(g_.inv(ph), st.phi[static_cast<std::size_t>(t)]))) return false;
          }
          const int ck = c(st, k);
          const int cj = xj >= 0 ? c(st, j) : -1;
          const int st_t = st.s[static_cast<std::size_t>(t)];
          if (ck >= 0 && cj >= 0) {
            if (!set_s(st, t, wrap(cj - ck))) return false;
          } else if (st_t >= 0) {
            if (ck >= 0 && xj >= 0 && !place(st, wrap(ck + st_t), g_.inv(xj))) return false;
            if (cj >= 0 && !place(st, wrap(cj - st_t), g_.inv(xk))) return false;
          }
        }
      }
      if (!inverses_fit(st)) return false;
    } while (changed_);
    return true;
  }

  // Every placed element needs its inverse somewhere in the cycle.
  bool inverses_fit(const State& st) const {
    int free = 0, pending = 0;
    for (int e : st.pos) {
      if (e < 0) {
        ++free;
        continue;
      }
      const int ie = g_.inv(e);
      if (ie != e && st.where[static_cast<std::size_t>(ie)] < 0) {
        if (ie < x0_) return false;
        ++pending;
      }
    }
    return pending <= free;
  }

  void branch(State st, std::vector<std::vector<int>>& out) {
    const auto open = std::find(st.pos.begin(), st.pos.end(), -1);
    if (open == st.pos.end()) {
      out.push_back(st.pos);
      return;
    }
    const int k = static_cast<int>(open - st.pos.begin());
    for (int e = x0_ + 1; e < g_.size(); ++e) {
      if (st.where[static_cast<std::size_t>(e)] >= 0) continue;
      State next = st;
      if (place(next, k, e) && propagate(next)) branch(std::move(next), out);
    }
  }
};

template <class Task>
void run_parallel(std::size_t count, unsigned threads, Task task) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  auto worker = [&](unsigned id) {
    try {
      for (std::size_t i = next++; i < count; i = next++) task(i);
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<int> cycle_key(const CayleyMap& m) {
  std::vector<int> key;
  for (Element x : m.cycle()) key.push_back(index_of(x, m.modulus()));
  return key;
}

bool by_cycle(const CayleyMap& a, const CayleyMap& b) {
  if (a.valency() != b.valency()) return a.valency() < b.valency();
  return cycle_key(a) < cycle_key(b);
}

}  // namespace

int census_bound(std::optional<int> valency_cap) {
  if (const char* env = std::getenv("DIMAPS_MAX_N"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != nullptr && *end == '\0' && v >= 2) return static_cast<int>(v);
  }
  return valency_cap && *valency_cap <= 8 ? 12 : 8;
}

std::vector<CayleyMap> enumerate_regular(Modulus n, std::optional<int> valency, const CensusOptions& options) {
  std::optional<int> cap = options.max_valency;
  if (valency) cap = cap ? std::min(*cap, *valency) : *valency;
  const int bound = census_bound(cap);
  if (n.value() > bound) {
    throw BoundExceeded("n = " + std::to_string(n.value()) + " exceeds the census bound " + std::to_string(bound));
  }
  const GroupTable table(n);
  const int top = std::min(n.group_order() - 1, cap.value_or(n.group_order() - 1));
  const int bottom = valency.value_or(2);

  struct Task {
    int d, x0;
  };
  std::vector<Task> tasks;
  for (int d = bottom; d <= top; ++d) {
    for (int x0 = 1; x0 < table.size(); ++x0) tasks.push_back({d, x0});
  }
  std::vector<std::vector<CayleyMap>> found(tasks.size());
  run_parallel(tasks.size(), options.threads, [&](std::size_t i) {
    std::vector<std::vector<int>> cycles;
    CycleSearch(table, tasks[i].d, tasks[i].x0).run(cycles);
    for (const auto& cyc : cycles) {
      std::vector<Element> elems;
      for (int e : cyc) elems.push_back(element_at(e, n));
      std::optional<CayleyMap> m;
      try {
        m = make_map(n, std::move(elems));
      } catch (const InvalidMap&) {
        continue;
      }
      if (is_regular(*m)) found[i].push_back(std::move(*m));
    }
  });
  std::vector<CayleyMap> out;
  for (auto& chunk : found) {
    for (auto& m : chunk) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), by_cycle);
  return out;
}

std::vector<CayleyMap> enumerate_reflexible_regular(Modulus n, const CensusOptions& options) {
  std::vector<CayleyMap> out;
  for (CayleyMap& m : enumerate_regular(n, std::nullopt, options)) {
    const bool by_aut = reflexible_by_automorphism(m).has_value();
    if (by_aut != reflexible_by_flags(m)) {
      throw OracleDisagreement("reflexibility tests disagree on a map with valency " + std::to_string(m.valency()));
    }
    if (by_aut) out.push_back(std::move(m));
  }
  return out;
}

std::vector<std::vector<CayleyMap>> isomorphism_classes(const std::vector<CayleyMap>& maps) {
  std::map<std::vector<int>, std::vector<CayleyMap>> buckets;
  for (const CayleyMap& m : maps) buckets[canonical_code(m)].push_back(m);
  std::vector<std::vector<CayleyMap>> out;
  for (auto& [code, members] : buckets) {
    std::sort(members.begin(), members.end(), by_cycle);
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return by_cycle(a.front(), b.front()); });
  return out;
}

CensusReport cross_check(Modulus n, const CensusOptions& options) {
  CensusReport report;
  report.n = n.value();
  report.expected = family_parameters(n);

  std::vector<CayleyMap> expected_maps;
  std::vector<std::vector<int>> expected_codes;
  for (const FamilyTag& tag : report.expected) {
    expected_maps.push_back(build_family(tag, n).map);
    expected_codes.push_back(canonical_code(expected_maps.back()));
  }
  std::vector<int> hits(report.expected.size(), 0);

  for (auto& cls : isomorphism_classes(enumerate_reflexible_regular(n, options))) {
    CensusClass entry{cls.front(), cls.size(), std::nullopt};
    const auto code = canonical_code(entry.representative);
    for (std::size_t t = 0; t < expected_codes.size(); ++t) {
      if (expected_codes[t] != code) continue;
      ++hits[t];
      if (entry.tag) {
        report.mismatches.push_back("class of valency " + std::to_string(entry.representative.valency()) + " matches both " +
                                    to_string(*entry.tag) + " and " + to_string(report.expected[t]));
      } else {
        // Matched classes are shown through the family's own cycle.
        entry.tag = report.expected[t];
        entry.representative = expected_maps[t];
      }
    }
    if (!entry.tag) {
      std::string cyc;
      for (Element x : entry.representative.cycle()) cyc += (cyc.empty() ? "" : ", ") + format_element(x);
      report.mismatches.push_back("unmatched class (" + cyc + ")");
    }
    report.found.push_back(std::move(entry));
  }
  for (std::size_t t = 0; t < hits.size(); ++t) {
    if (hits[t] == 0) report.mismatches.push_back(to_string(report.expected[t]) + " not found");
    if (hits[t] > 1) report.mismatches.push_back(to_string(report.expected[t]) + " matches several classes");
  }
  return report;
}

}  // namespace dimaps
