#include "dimaps/io.hpp"

#include <fstream>
#include <sstream>

#include "dimaps/errors.hpp"

namespace dimaps {

Json map_to_json(const CayleyMap& m) {
  Json cycle = Json::array();
  for (Element x : m.cycle()) cycle.push_back(format_element(x));
  return Json{{"n", m.modulus().value()}, {"cycle", std::move(cycle)}};
}

CayleyMap map_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("cycle")) throw ParseError("map JSON needs \"n\" and \"cycle\"");
  if (!doc["n"].is_number_integer() || !doc["cycle"].is_array()) throw ParseError("map JSON has wrong field types");
  const int raw = doc["n"].get<int>();
  if (raw < 2) throw ParseError("n must be at least 2");
  const Modulus n(raw);
  std::vector<Element> cycle;
  for (const auto& item : doc["cycle"]) {
    if (!item.is_string()) throw ParseError("cycle entries must be strings");
    cycle.push_back(parse_element(item.get<std::string>(), n));
  }
  return make_map(n, std::move(cycle));
}

Json skew_to_json(const SkewMorphism& sm) {
  Json images = Json::object();
  Json power = Json::object();
  for (Element g : all_elements(sm.n)) {
    images[format_element(g)] = format_element(sm.image(g));
    power[format_element(g)] = sm.power_of(g);
  }
  return Json{{"order", sm.order}, {"images", std::move(images)}, {"power", std::move(power)}};
}

Json reflection_to_json(const ReflectionWitness& w) {
  return Json{{"i", w.aut.i}, {"j", w.aut.j}, {"kind", to_string(w.kind)}};
}

Json certified_to_json(const CertifiedMap& cm) {
  Json doc = map_to_json(cm.map);
  doc["family"] = to_string(cm.tag);
  doc["skew"] = skew_to_json(cm.skew);
  doc["reflection"] = reflection_to_json(cm.reflection);
  return doc;
}

MapSummary summarize(const CayleyMap& m) {
  MapSummary s;
  s.n = m.modulus().value();
  s.valency = m.valency();
  const FaceStructure faces = trace_faces(m);
  s.genus = faces.genus;
  s.faces = static_cast<int>(faces.faces.size());
  s.balance = to_string(balance_type(m));
  s.reflection_index = reflection_index(m);
  if (auto cert = is_regular(m)) {
    s.regular = true;
    s.skew_order = cert->skew.order;
    s.kernel_size = static_cast<int>(power_kernel(cert->skew).size());
    s.reflexible = reflexible_by_automorphism(m).has_value();
    if (s.reflexible) s.family = classify(m);
  }
  return s;
}

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json summary_to_json(const MapSummary& s) {
  return Json{{"n", s.n},
              {"valency", s.valency},
              {"regular", s.regular},
              {"reflexible", s.reflexible},
              {"reflection_index", optional_json(s.reflection_index)},
              {"genus", s.genus},
              {"faces", s.faces},
              {"balance", s.balance},
              {"skew_order", optional_json(s.skew_order)},
              {"kernel_size", optional_json(s.kernel_size)},
              {"family", s.family ? Json(to_string(*s.family)) : Json(nullptr)}};
}

Json quotient_report_to_json(const CayleyMap& quotient, const QuotientLawReport& r) {
  Json laws{{"quotient_regular", r.quotient_regular},
            {"induced_skew", r.induced_skew},
            {"order_bound", r.order_bound},
            {"order_equality_iff_union", r.order_equality_iff_union},
            {"power_congruence", r.power_congruence}};
  return Json{{"quotient", map_to_json(quotient)},
              {"block_size", r.block_size},
              {"parent_order", r.parent_order},
              {"quotient_order", r.quotient_order},
              {"x_union_of_cosets", r.x_union_of_cosets},
              {"laws", std::move(laws)},
              {"findings", r.findings}};
}

std::vector<CensusRow> census_rows(const CensusReport& report) {
  std::vector<CensusRow> rows;
  for (const CensusClass& cls : report.found) {
    CensusRow row;
    row.n = report.n;
    row.d = cls.representative.valency();
    if (!cls.tag) {
      row.family = "Unmatched";
    } else if (cls.tag->kind == FamilyTag::Kind::M1) {
      row.family = "M1";
      row.ell = cls.tag->ell;
    } else {
      row.family = to_string(*cls.tag);
    }
    row.genus = trace_faces(cls.representative).genus;
    row.reflection_index = reflection_index(cls.representative);
    rows.push_back(std::move(row));
  }
  return rows;
}

Json census_to_json(const std::vector<CensusReport>& reports) {
  Json out = Json::array();
  for (const CensusReport& r : reports) {
    Json classes = Json::array();
    const auto rows = census_rows(r);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Json entry = map_to_json(r.found[i].representative);
      entry["size"] = r.found[i].size;
      entry["family"] = rows[i].family;
      entry["ell"] = optional_json(rows[i].ell);
      entry["genus"] = rows[i].genus;
      entry["reflection_index"] = optional_json(rows[i].reflection_index);
      classes.push_back(std::move(entry));
    }
    Json expected = Json::array();
    for (const FamilyTag& t : r.expected) expected.push_back(to_string(t));
    out.push_back(Json{{"n", r.n},
                       {"verdict", r.match() ? "Match" : "Mismatch"},
                       {"classes", std::move(classes)},
                       {"expected", std::move(expected)},
                       {"mismatches", r.mismatches}});
  }
  return out;
}

namespace {

std::string cell(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

}  // namespace

std::string census_to_csv(const std::vector<CensusReport>& reports) {
  std::ostringstream out;
  out << "n,d,family,ell,genus,reflection_index\n";
  for (const CensusReport& r : reports) {
    for (const CensusRow& row : census_rows(r)) {
      out << row.n << ',' << row.d << ',' << row.family << ',' << cell(row.ell) << ',' << row.genus << ','
          << cell(row.reflection_index) << '\n';
    }
  }
  return out.str();
}

std::string census_to_markdown(const std::vector<CensusReport>& reports) {
  std::ostringstream out;
  out << "| n | d | family | ell | genus | reflection index |\n";
  out << "|---|---|---|---|---|---|\n";
  for (const CensusReport& r : reports) {
    for (const CensusRow& row : census_rows(r)) {
      out << "| " << row.n << " | " << row.d << " | " << row.family << " | " << cell(row.ell) << " | " << row.genus << " | "
          << cell(row.reflection_index) << " |\n";
    }
  }
  out << '\n';
  for (const CensusReport& r : reports) {
    out << "- n = " << r.n << ": " << (r.match() ? "Match" : "Mismatch");
    for (const auto& m : r.mismatches) out << "; " << m;
    out << '\n';
  }
  return out.str();
}

CayleyMap read_map_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return map_from_json(doc);
}

}  // namespace dimaps
