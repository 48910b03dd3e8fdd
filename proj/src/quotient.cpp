#include "dimaps/quotient.hpp"

#include "dimaps/errors.hpp"

namespace dimaps {

Subgroup rotation_subgroup(Modulus n, int size) {
  if (size <= 0 || n.value() % size != 0) throw std::invalid_argument("subgroup order must divide n");
  const int step = n.value() / size;
  std::vector<Element> members;
  for (int t = 0; t < size; ++t) members.push_back(Element::rotation(static_cast<long>(t) * step, n));
  return Subgroup(std::move(members), n);
}

Element project(Element x, Modulus quotient) { return {x.flip, static_cast<int>(mod(x.exp, quotient.value()))}; }

bool preserves_cosets(const SkewMorphism& skew, const Subgroup& group) {
  const Modulus n = skew.n;
  for (Element g : all_elements(n)) {
    const Element base = inv(skew.image(g), n);
    for (Element u : group.elements()) {
      if (!group.contains(mul(base, skew.image(mul(g, u, n)), n))) return false;
    }
  }
  return true;
}

std::vector<BlockSubgroup> block_subgroups(const SkewMorphism& skew) {
  const Modulus n = skew.n;
  std::vector<BlockSubgroup> out;
  for (int size = 1; size <= n.value(); ++size) {
    if (n.value() % size != 0) continue;
    Subgroup group = rotation_subgroup(n, size);
    if (preserves_cosets(skew, group)) out.push_back({std::move(group), n.value() / size});
  }
  return out;
}

CayleyMap quotient_map(const CayleyMap& m, const BlockSubgroup& block) {
  if (block.quotient_modulus < 2) throw DegenerateQuotient("quotient of D_n by A_n is not dihedral");
  const Modulus q(block.quotient_modulus);
  const int d = m.valency();
  std::vector<Element> cosets;
  for (Element x : m.cycle()) cosets.push_back(project(x, q));
  for (Element y : cosets) {
    if (y.is_identity()) throw DegenerateQuotient("X meets N, so X/N contains the identity");
  }
  int period = d;
  for (int t = 1; t < d; ++t) {
    if (d % t != 0) continue;
    bool periodic = true;
    for (int k = 0; k < d && periodic; ++k) periodic = cosets[static_cast<std::size_t>(k)] == cosets[static_cast<std::size_t>((k + t) % d)];
    if (periodic) {
      period = t;
      break;
    }
  }
  if (period < 2) throw DegenerateQuotient("quotient valency " + std::to_string(period) + " is below 2");
  cosets.resize(static_cast<std::size_t>(period));
  try {
    return make_map(q, std::move(cosets));
  } catch (const InvalidMap& e) {
    throw DegenerateQuotient(std::string("quotient cycle is ill-defined: ") + e.what());
  }
}

QuotientLawReport check_quotient_laws(const CayleyMap& m, const BlockSubgroup& block) {
  auto parent = extend_from_rotation(m);
  if (!parent) throw NotRegular("quotient laws need a regular map");
  const Modulus n = m.modulus();
  const CayleyMap quotient = quotient_map(m, block);
  const Modulus q = quotient.modulus();

  QuotientLawReport report;
  report.block_size = static_cast<int>(block.group.size());
  report.parent_order = parent->order;
  report.x_union_of_cosets = true;
  for (Element x : m.cycle()) {
    for (Element u : block.group.elements()) report.x_union_of_cosets = report.x_union_of_cosets && m.contains(mul(x, u, n));
  }

  auto cert = is_regular(quotient);
  report.quotient_regular = cert.has_value();
  if (!cert) {
    report.findings.push_back("quotient map is not regular");
    return report;
  }
  const SkewMorphism& down = cert->skew;
  report.quotient_order = down.order;

  report.induced_skew = true;
  report.power_congruence = true;
  for (Element g : all_elements(n)) {
    const Element coset = project(g, q);
    if (down.image(coset) != project(parent->image(g), q)) {
      if (report.induced_skew) report.findings.push_back("induced action differs at " + format_element(g));
      report.induced_skew = false;
    }
    if (mod(down.power_of(coset) - parent->power_of(g), down.order) != 0) {
      if (report.power_congruence) report.findings.push_back("power congruence fails at " + format_element(g));
      report.power_congruence = false;
    }
  }

  const long bound = static_cast<long>(report.block_size) * down.order;
  report.order_bound = parent->order <= bound;
  if (!report.order_bound) report.findings.push_back("skew order exceeds |N| times the quotient order");
  report.order_equality_iff_union = (parent->order == bound) == report.x_union_of_cosets;
  if (!report.order_equality_iff_union) report.findings.push_back("order equality does not match X being a union of cosets");
  return report;
}

}  // namespace dimaps
