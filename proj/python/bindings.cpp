#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dimaps/census.hpp"
#include "dimaps/errors.hpp"
#include "dimaps/io.hpp"

namespace py = pybind11;
using namespace dimaps;

namespace {

py::object to_python(const Json& doc) { return py::module_::import("json").attr("loads")(doc.dump()); }

CayleyMap make(int n, const std::vector<std::string>& cycle) {
  if (n < 2) throw ParseError("n must be at least 2");
  std::vector<Element> elems;
  for (const auto& s : cycle) elems.push_back(parse_element(s, Modulus(n)));
  return make_map(Modulus(n), std::move(elems));
}

std::vector<std::string> cycle_text(const CayleyMap& m) {
  std::vector<std::string> out;
  for (Element x : m.cycle()) out.push_back(format_element(x));
  return out;
}

CensusOptions options(std::optional<int> max_valency, unsigned threads) {
  CensusOptions o;
  o.max_valency = max_valency;
  o.threads = threads;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Regular and reflexible Cayley maps on dihedral groups";

  auto base = py::register_exception<Error>(m, "DimapsError");
  py::register_exception<InvalidMap>(m, "InvalidMapError", base);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<NotRegular>(m, "NotRegularError", base);
  py::register_exception<BadParameters>(m, "BadParametersError", base);
  py::register_exception<BoundExceeded>(m, "BoundExceededError", base);

  py::class_<CayleyMap>(m, "CayleyMap")
      .def(py::init(&make), py::arg("n"), py::arg("cycle"))
      .def_property_readonly("n", [](const CayleyMap& c) { return c.modulus().value(); })
      .def_property_readonly("valency", &CayleyMap::valency)
      .def_property_readonly("cycle", &cycle_text)
      .def("to_json", [](const CayleyMap& c) { return map_to_json(c).dump(); })
      .def_static("from_json", [](const std::string& text) { return map_from_json(Json::parse(text)); })
      .def("__eq__", [](const CayleyMap& a, const CayleyMap& b) { return a == b; })
      .def("__repr__", [](const CayleyMap& c) {
        std::string body;
        for (const auto& s : cycle_text(c)) body += (body.empty() ? "" : ", ") + s;
        return "CayleyMap(n=" + std::to_string(c.modulus().value()) + ", (" + body + "))";
      });

  m.def("skew_morphism", [](const CayleyMap& c) -> py::object {
    auto cert = is_regular(c);
    return cert ? to_python(skew_to_json(cert->skew)) : py::none();
  }, "Skew-morphism dump of a regular map, or None");
  m.def("is_regular", [](const CayleyMap& c) { return is_regular(c).has_value(); });
  m.def("is_reflexible", [](const CayleyMap& c) { return is_regular(c) && reflexible_by_automorphism(c).has_value(); });
  m.def("reflection_index", &reflection_index);
  m.def("genus", [](const CayleyMap& c) { return trace_faces(c).genus; });
  m.def("isomorphic", &isomorphic);
  m.def("summarize", [](const CayleyMap& c) { return to_python(summary_to_json(summarize(c))); });

  m.def("build_family", [](const std::string& tag, int n) {
    return to_python(certified_to_json(build_family(parse_family_tag(tag), Modulus(n))));
  }, py::arg("tag"), py::arg("n"), "Certified family map as a dict, e.g. build_family('M4', 3)");
  m.def("family_map", [](const std::string& tag, int n) { return build_family(parse_family_tag(tag), Modulus(n)).map; },
        py::arg("tag"), py::arg("n"));
  m.def("family_parameters", [](int n) {
    std::vector<std::string> out;
    for (const auto& t : family_parameters(Modulus(n))) out.push_back(to_string(t));
    return out;
  });
  m.def("classify", [](const CayleyMap& c) -> std::optional<std::string> {
    auto tag = classify(c);
    return tag ? std::optional<std::string>(to_string(*tag)) : std::nullopt;
  });

  m.def("enumerate_regular", [](int n, std::optional<int> valency, std::optional<int> max_valency, unsigned threads) {
    py::gil_scoped_release release;
    return enumerate_regular(Modulus(n), valency, options(max_valency, threads));
  }, py::arg("n"), py::arg("valency") = py::none(), py::arg("max_valency") = py::none(), py::arg("threads") = 0);
  m.def("enumerate_reflexible_regular", [](int n, unsigned threads) {
    py::gil_scoped_release release;
    return enumerate_reflexible_regular(Modulus(n), options(std::nullopt, threads));
  }, py::arg("n"), py::arg("threads") = 0);
  m.def("isomorphism_classes", &isomorphism_classes);
  m.def("cross_check", [](int n, unsigned threads) {
    CensusReport report;
    {
      py::gil_scoped_release release;
      report = cross_check(Modulus(n), options(std::nullopt, threads));
    }
    return to_python(census_to_json({report})[0]);
  }, py::arg("n"), py::arg("threads") = 0);

  m.def("block_subgroup_sizes", [](const CayleyMap& c) {
    auto cert = is_regular(c);
    if (!cert) throw NotRegular("block subgroups need a regular map");
    std::vector<int> sizes;
    for (const auto& b : block_subgroups(cert->skew)) sizes.push_back(static_cast<int>(b.group.size()));
    return sizes;
  });
  m.def("quotient", [](const CayleyMap& c, int size) {
    auto cert = is_regular(c);
    if (!cert) throw NotRegular("quotients need a regular map");
    const Subgroup group = rotation_subgroup(c.modulus(), size);
    if (!preserves_cosets(cert->skew, group)) throw BadParameters("not a block subgroup");
    const BlockSubgroup block{group, c.modulus().value() / size};
    return to_python(quotient_report_to_json(quotient_map(c, block), check_quotient_laws(c, block)));
  }, py::arg("map"), py::arg("size"), "Quotient by the rotation subgroup of the given order, with the law report");
}
