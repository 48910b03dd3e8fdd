// dimaps: regular Cayley maps on dihedral groups from the command line.
//
// Exit status: 0 success, 1 negative verdict, 2 usage or IO error.

#include <charconv>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dimaps/census.hpp"
#include "dimaps/errors.hpp"
#include "dimaps/io.hpp"

namespace {

using namespace dimaps;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Output {
  std::string path;

  void emit(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
  }
  void emit(const Json& doc) const { emit(doc.dump(2) + "\n"); }
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  auto number = [&](std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw CLI::ValidationError("--n-range", "expected A..B, got " + text);
    return v;
  };
  if (dots == std::string::npos) {
    const int v = number(text);
    return {v, v};
  }
  const std::string_view sv(text);
  const int lo = number(sv.substr(0, dots));
  const int hi = number(sv.substr(dots + 2));
  if (lo < 2 || hi < lo) throw CLI::ValidationError("--n-range", "need 2 <= A <= B");
  return {lo, hi};
}

int cmd_family(const std::string& tag_text, int n, std::optional<int> ell, const Output& out) {
  if (tag_text == "M1") {
    if (!ell) throw CLI::ValidationError("--ell", "M1 needs --ell or the form M1(l)");
    return cmd_family("M1(" + std::to_string(*ell) + ")", n, std::nullopt, out);
  }
  FamilyTag tag = parse_family_tag(tag_text);
  if (ell) {
    if (tag.kind != FamilyTag::Kind::M1) throw CLI::ValidationError("--ell", "only M1 takes a parameter");
    tag.ell = *ell;
  }
  out.emit(certified_to_json(build_family(tag, Modulus(n))));
  return kOk;
}

int cmd_verify(const std::string& path, const Output& out) {
  const MapSummary s = summarize(read_map_file(path));
  out.emit(summary_to_json(s));
  return s.regular ? kOk : kNegative;
}

int cmd_enumerate(int n, bool reflexible, std::optional<int> max_d, unsigned threads, const Output& out) {
  CensusOptions options;
  options.max_valency = max_d;
  options.threads = threads;
  const Modulus mod(n);
  auto maps = reflexible ? enumerate_reflexible_regular(mod, options) : enumerate_regular(mod, std::nullopt, options);
  if (max_d) std::erase_if(maps, [&](const CayleyMap& m) { return m.valency() > *max_d; });
  Json classes = Json::array();
  for (const auto& cls : isomorphism_classes(maps)) {
    Json entry = map_to_json(cls.front());
    entry["size"] = cls.size();
    entry["genus"] = trace_faces(cls.front()).genus;
    classes.push_back(std::move(entry));
  }
  out.emit(Json{{"n", n}, {"reflexible", reflexible}, {"maps", maps.size()}, {"class_count", classes.size()},
                {"classes", std::move(classes)}});
  return kOk;
}

int cmd_classify(const std::string& path, const Output& out) {
  const CayleyMap m = read_map_file(path);
  std::optional<FamilyTag> tag;
  try {
    tag = classify(m);
  } catch (const NotReflexibleRegular& e) {
    out.emit(Json{{"family", nullptr}, {"reason", e.what()}});
    return kNegative;
  }
  out.emit(Json{{"family", tag ? Json(to_string(*tag)) : Json(nullptr)}});
  return tag ? kOk : kNegative;
}

int cmd_quotient(const std::string& path, const std::string& generator, const Output& out) {
  const CayleyMap m = read_map_file(path);
  const Modulus n = m.modulus();
  const Element gen = parse_element(generator, n);
  if (gen.flip) throw CLI::ValidationError("--subgroup", "the generator must be a rotation a^k");
  const Subgroup group = generated_subgroup(std::vector<Element>{gen}, n);
  auto cert = is_regular(m);
  if (!cert) {
    out.emit(Json{{"error", "map is not regular"}});
    return kNegative;
  }
  if (!preserves_cosets(cert->skew, group)) {
    out.emit(Json{{"error", "subgroup is not a block subgroup"}});
    return kNegative;
  }
  const BlockSubgroup block{group, n.value() / static_cast<int>(group.size())};
  try {
    const CayleyMap q = quotient_map(m, block);
    const QuotientLawReport report = check_quotient_laws(m, block);
    out.emit(quotient_report_to_json(q, report));
    return report.all_hold() ? kOk : kNegative;
  } catch (const DegenerateQuotient& e) {
    out.emit(Json{{"error", e.what()}});
    return kNegative;
  }
}

int cmd_report(const std::string& range, const std::string& format, unsigned threads, const Output& out) {
  const auto [lo, hi] = parse_range(range);
  CensusOptions options;
  options.threads = threads;
  std::vector<CensusReport> reports;
  for (int n = lo; n <= hi; ++n) reports.push_back(cross_check(Modulus(n), options));
  if (format == "json") {
    out.emit(census_to_json(reports));
  } else if (format == "csv") {
    out.emit(census_to_csv(reports));
  } else {
    out.emit(census_to_markdown(reports));
  }
  for (const auto& r : reports) {
    if (!r.match()) return kNegative;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular and reflexible Cayley maps on dihedral groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("-o,--output", out.path, "Write to this file instead of stdout");
  unsigned threads = 0;

  auto* family = app.add_subcommand("family", "Build and certify a map of the classification");
  std::string tag;
  int n = 0;
  std::optional<int> ell;
  family->add_option("--tag", tag, "D2cycle, Small3(D3-K33), M1(5), M2 ... M6")->required();
  family->add_option("--n", n, "Dihedral parameter")->required()->check(CLI::Range(2, 1 << 12));
  family->add_option("--ell", ell, "M1 parameter");

  auto* verify = app.add_subcommand("verify", "Regularity, reflexibility and indices of a map file");
  std::string path;
  verify->add_option("map", path, "Map JSON")->required()->check(CLI::ExistingFile);

  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive census of regular maps");
  bool reflexible = false;
  std::optional<int> max_d;
  enumerate->add_option("--n", n)->required()->check(CLI::Range(2, 64));
  enumerate->add_flag("--reflexible", reflexible, "Keep only reflexible maps");
  enumerate->add_option("--max-d", max_d, "Largest valency searched")->check(CLI::Range(2, 128));
  enumerate->add_option("--threads", threads);

  auto* classify_cmd = app.add_subcommand("classify", "Name the family of a reflexible regular map");
  classify_cmd->add_option("map", path, "Map JSON")->required()->check(CLI::ExistingFile);

  auto* quotient = app.add_subcommand("quotient", "Quotient by a rotation subgroup and check the quotient laws");
  std::string generator;
  quotient->add_option("map", path, "Map JSON")->required()->check(CLI::ExistingFile);
  quotient->add_option("--subgroup", generator, "Generator, e.g. a^2")->required();

  auto* report = app.add_subcommand("report", "Census against the classification");
  std::string range, format = "md";
  report->add_option("--n-range", range, "A..B")->required();
  report->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "md"}));
  report->add_option("--threads", threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (family->parsed()) return cmd_family(tag, n, ell, out);
    if (verify->parsed()) return cmd_verify(path, out);
    if (enumerate->parsed()) return cmd_enumerate(n, reflexible, max_d, threads, out);
    if (classify_cmd->parsed()) return cmd_classify(path, out);
    if (quotient->parsed()) return cmd_quotient(path, generator, out);
    if (report->parsed()) return cmd_report(range, format, threads, out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "dimaps: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "dimaps: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidMap& e) {
    std::cerr << "dimaps: invalid map: " << e.what() << '\n';
    return kUsage;
  } catch (const BadParameters& e) {
    std::cerr << "dimaps: " << e.what() << '\n';
    return kUsage;
  } catch (const BoundExceeded& e) {
    std::cerr << "dimaps: " << e.what() << " (set DIMAPS_MAX_N to raise it)\n";
    return kUsage;
  } catch (const NotRegular& e) {
    std::cerr << "dimaps: " << e.what() << '\n';
    return kNegative;
  } catch (const std::exception& e) {
    std::cerr << "dimaps: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
