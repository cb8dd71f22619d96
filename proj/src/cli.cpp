#include "gray16/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gray16/catalog.hpp"
#include "gray16/errors.hpp"
#include "gray16/extension.hpp"
#include "gray16/io.hpp"

namespace gray16::cli {

namespace {

using nlohmann::ordered_json;

std::string builtin_iso_name(const GroupTable& g) {
  for (const auto& name : builtin_names()) {
    const GroupTable b = build_builtin(name);
    if (b.order() == g.order() && is_isomorphic(g, b)) return name;
  }
  return "";
}

int emit_graymap(const GrayMapTable& map, const std::string& name,
                 const std::string& format, std::ostream& out) {
  if (format == "tsv") {
    out << graymap_to_text(map, name);
  } else if (format == "json") {
    ordered_json words = ordered_json::object();
    for (int i = 0; i < map.group.order(); ++i)
      words[map.group.label(i)] = map.word(i).str();
    out << ordered_json{{"group", name}, {"length", map.length}, {"words", words}}
               .dump(2)
        << "\n";
  } else {
    out << graymap_table_text(map);
  }
  return 0;
}

int cmd_groups_list(std::ostream& out) {
  for (const auto& name : builtin_names()) out << name << "\n";
  return 0;
}

int cmd_groups_show(const std::string& name, const std::string& format,
                    std::ostream& out) {
  const GroupTable g = build_builtin(name);
  if (format == "json") {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < g.order(); ++i) {
      ordered_json row = ordered_json::array();
      for (int j = 0; j < g.order(); ++j) row.push_back(g.mul(i, j));
      rows.push_back(std::move(row));
    }
    out << ordered_json{{"name", name},
                        {"order", g.order()},
                        {"labels", g.labels()},
                        {"table", rows}}
               .dump(2)
        << "\n";
  } else {
    out << group_to_text(g);
  }
  return 0;
}

int cmd_aut(const std::string& name, const std::string& format,
            std::ostream& out) {
  const GroupTable g = build_builtin(name);
  const std::vector<Automorphism> autos = automorphism_group(g);
  if (format == "tsv") {
    out << "index\torder\timages\n";
    for (size_t i = 0; i < autos.size(); ++i)
      out << i + 1 << "\t" << automorphism_order(autos[i]) << "\t"
          << describe_automorphism(g, autos[i]) << "\n";
    return 0;
  }
  if (format == "json") {
    ordered_json doc = ordered_json::array();
    for (const auto& f : autos)
      doc.push_back({{"order", automorphism_order(f)},
                     {"images", describe_automorphism(g, f)}});
    out << ordered_json{{"group", name}, {"count", autos.size()},
                        {"automorphisms", doc}}
               .dump(2)
        << "\n";
    return 0;
  }
  std::string iso;
  if (autos.size() <= 32) {
    iso = builtin_iso_name(aut_as_group(g).table);
    if (!iso.empty()) iso = " (isomorphic to " + iso + ")";
  }
  out << "|Aut(" << name << ")| = " << autos.size() << iso << "\n";
  for (size_t i = 0; i < autos.size(); ++i) {
    out << "\naut " << i + 1 << "  order " << automorphism_order(autos[i]) << "\n";
    for (const auto& line : automorphism_lines(g, autos[i]))
      out << "  " << line << "\n";
  }
  return 0;
}

int cmd_classify(const std::string& format, std::ostream& out) {
  const auto& groups = classify_order16();
  if (format == "tsv") {
    out << "name\tdescription\textension_type\n";
    for (const auto& g : groups)
      out << g.name << "\t" << g.description << "\t"
          << (g.extension_literal.empty() ? "-" : g.extension_literal) << "\n";
    return 0;
  }
  if (format == "json") {
    ordered_json doc = ordered_json::array();
    for (const auto& g : groups)
      doc.push_back({{"name", g.name},
                     {"description", g.description},
                     {"extension_type", g.extension_literal}});
    out << doc.dump(2) << "\n";
    return 0;
  }
  size_t name_w = 0, desc_w = 0;
  for (const auto& g : groups) {
    name_w = std::max(name_w, g.name.size());
    desc_w = std::max(desc_w, g.description.size());
  }
  for (const auto& g : groups)
    out << g.name << std::string(name_w - g.name.size() + 2, ' ')
        << g.description << std::string(desc_w - g.description.size() + 2, ' ')
        << (g.extension_literal.empty() ? "-" : g.extension_literal) << "\n";
  return 0;
}

int cmd_graymap_type1(const std::string& name, const std::string& format,
                      std::ostream& out) {
  return emit_graymap(standard_type1(name), name, format, out);
}

int cmd_graymap_type2(const std::string& name, const std::string& decomp,
                      const std::string& format, std::ostream& out,
                      std::ostream& err) {
  SurveyRow row = [&] {
    if (decomp.empty()) return canonical_type2(name);
    const ExtensionType type = parse_extension_literal(decomp);
    SurveyRow built = type2_from_extension(type);
    if (built.map) {
      const GroupTable target = build_builtin(name);
      if (!is_isomorphic(built.map->group, target))
        throw std::invalid_argument("decomposition does not build " + name);
    }
    built.group = name;
    return built;
  }();
  if (!row.map) {
    err << name << ": no Type 2 construction (" << row.verdict << ")\n"
        << row.witness << "\n";
    return 1;
  }
  emit_graymap(*row.map, name, format, out);
  if (!row.valid) {
    err << "candidate on " << row.decomposition << " is not a Gray map\n"
        << report_text(*row.report);
    return 1;
  }
  return 0;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "cannot open " << path << "\n";
    return 2;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const GrayMapTable map = graymap_from_text(buffer.str());
  const VerificationReport report = verify_gray_map(map);
  out << report_text(report);
  return report.pass() ? 0 : 1;
}

int cmd_survey(bool exhaustive, const std::string& format, std::ostream& out) {
  const std::vector<SurveyRow> rows = type2_survey(exhaustive);
  if (format == "tsv") {
    out << survey_tsv(rows);
  } else if (format == "json") {
    out << survey_json(rows);
  } else {
    out << survey_table_text(rows);
    std::string feasible;
    for (const auto& name : type2_feasible_set(rows))
      feasible += (feasible.empty() ? "" : ", ") + name;
    out << "\nfeasible: {" << feasible << "}\n";
  }
  return 0;
}

int cmd_feasible(const std::string& name, int length, std::ostream& out) {
  const ParityFeasibility result =
      weight_parity_feasible(build_builtin(name), length);
  out << result.reason << "\n"
      << name << " -> Z_2^" << length << " bijections "
      << (result.feasible ? "pass the parity condition"
                          : "cannot satisfy inverse weight symmetry")
      << "\n";
  return result.feasible ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Gray maps over 2-groups of order up to 16"};
  app.require_subcommand(1);

  std::string format = "table";
  std::string name, decomp, mapfile;
  int length = 3;
  bool exhaustive = false;

  auto* groups = app.add_subcommand("groups", "Builtin group tables");
  groups->require_subcommand(1);
  groups->add_subcommand("list", "List builtin group names");
  auto* show = groups->add_subcommand("show", "Print a group table");
  show->add_option("name", name)->required();
  show->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  auto* aut = app.add_subcommand("aut", "Automorphism group of a builtin");
  aut->add_option("group", name)->required();
  aut->add_option("--format", format)
      ->check(CLI::IsMember({"table", "tsv", "json"}));

  auto* classify = app.add_subcommand("classify", "The fourteen groups of order 16");
  classify->add_option("--format", format)
      ->check(CLI::IsMember({"table", "tsv", "json"}));

  auto* graymap = app.add_subcommand("graymap", "Construct Gray maps");
  graymap->require_subcommand(1);
  auto* type1 = graymap->add_subcommand("type1", "Doubling construction");
  type1->add_option("group", name)->required();
  type1->add_option("--format", format)
      ->check(CLI::IsMember({"table", "tsv", "json"}));
  auto* type2 = graymap->add_subcommand("type2", "Concatenation construction");
  type2->add_option("group", name)->required();
  type2->add_option("--decomp", decomp, "Extension-type literal");
  type2->add_option("--format", format)
      ->check(CLI::IsMember({"table", "tsv", "json"}));

  auto* verify = app.add_subcommand("verify", "Check a Gray-map file");
  verify->add_option("mapfile", mapfile)->required();

  auto* survey = app.add_subcommand("survey", "Type 2 verdicts for order 16");
  survey->add_flag("--exhaustive", exhaustive,
                   "Also try every normal subgroup with a canonical transversal");
  survey->add_option("--format", format)
      ->check(CLI::IsMember({"table", "tsv", "json"}));

  auto* feasible = app.add_subcommand("feasible", "Inverse-weight parity test");
  feasible->add_option("group", name)->required();
  feasible->add_option("--length", length, "Word length n")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (groups->got_subcommand("list")) return cmd_groups_list(out);
    if (groups->got_subcommand("show")) return cmd_groups_show(name, format, out);
    if (aut->parsed()) return cmd_aut(name, format, out);
    if (classify->parsed()) return cmd_classify(format, out);
    if (graymap->got_subcommand("type1"))
      return cmd_graymap_type1(name, format, out);
    if (graymap->got_subcommand("type2"))
      return cmd_graymap_type2(name, decomp, format, out, err);
    if (verify->parsed()) return cmd_verify(mapfile, out, err);
    if (survey->parsed()) return cmd_survey(exhaustive, format, out);
    if (feasible->parsed()) return cmd_feasible(name, length, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no command\n";
  return 2;
}

}  // namespace gray16::cli
