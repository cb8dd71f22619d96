#include "gray16/io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "gray16/errors.hpp"

namespace gray16 {

std::string group_to_text(const GroupTable& g) {
  std::ostringstream out;
  out << "order " << g.order() << "\n";
  for (int i = 0; i < g.order(); ++i) out << (i ? " " : "") << g.label(i);
  out << "\n";
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) out << (j ? " " : "") << g.mul(i, j);
    out << "\n";
  }
  return out.str();
}

GroupTable group_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string keyword;
  int order = 0;
  if (!(in >> keyword >> order) || keyword != "order" || order < 1)
    throw std::invalid_argument("group file must start with \"order N\"");
  std::vector<std::string> labels(static_cast<size_t>(order));
  for (auto& l : labels)
    if (!(in >> l)) throw std::invalid_argument("group file is missing labels");
  std::vector<int> table(static_cast<size_t>(order) * order);
  for (auto& v : table)
    if (!(in >> v)) throw std::invalid_argument("group file is missing table entries");
  return GroupTable(std::move(labels), std::move(table));
}

std::string graymap_to_text(const GrayMapTable& map, const std::string& group_name) {
  std::ostringstream out;
  out << "group " << group_name << " length " << map.length << "\n";
  for (int i = 0; i < map.group.order(); ++i)
    out << map.group.label(i) << "\t" << map.word(i).str() << "\n";
  return out.str();
}

GrayMapTable graymap_from_text(const std::string& text, std::string* group_name) {
  std::istringstream in(text);
  std::string keyword, name, length_keyword;
  int length = 0;
  if (!(in >> keyword >> name >> length_keyword >> length) || keyword != "group" ||
      length_keyword != "length")
    throw std::invalid_argument("map file must start with \"group <name> length <n>\"");
  GroupTable g = build_builtin(name);
  std::vector<BinaryWord> words(static_cast<size_t>(g.order()));
  std::vector<char> seen(static_cast<size_t>(g.order()), 0);
  std::string label, bits;
  while (in >> label >> bits) {
    const int idx = g.index_of(label);
    if (seen[static_cast<size_t>(idx)])
      throw std::invalid_argument("duplicate map entry for " + label);
    seen[static_cast<size_t>(idx)] = 1;
    words[static_cast<size_t>(idx)] = BinaryWord::parse(bits);
    if (words[static_cast<size_t>(idx)].length() != length)
      throw std::invalid_argument("word length mismatch at " + label);
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw std::invalid_argument("map file does not cover every element");
  if (group_name) *group_name = name;
  return GrayMapTable(std::move(g), std::move(words));
}

std::vector<std::string> automorphism_lines(const GroupTable& g,
                                            const Automorphism& f) {
  std::vector<std::string> lines;
  for (int gen : minimal_generating_set(g))
    lines.push_back(g.label(gen) + " -> " + g.label(f.apply(gen)));
  return lines;
}

std::string graymap_table_text(const GrayMapTable& map) {
  size_t width = 0;
  for (const auto& l : map.group.labels()) width = std::max(width, l.size());
  std::ostringstream out;
  for (int i = 0; i < map.group.order(); ++i) {
    std::string head = "phi(" + map.group.label(i) + ")";
    out << head << std::string(width + 6 - head.size(), ' ') << "= "
        << map.word(i).str() << "\n";
  }
  return out.str();
}

namespace {

std::string condition_line(const char* name, const ConditionResult& c) {
  std::string out = std::string(name) + ": " + (c.pass ? "pass" : "FAIL");
  if (!c.pass) out += "  (" + c.detail + ")";
  return out + "\n";
}

}  // namespace

std::string report_text(const VerificationReport& report) {
  std::string out;
  out += condition_line("C1 weight zero iff identity ", report.c1);
  out += condition_line("C2 inverse weight symmetry  ", report.c2);
  out += condition_line("C3 subadditivity            ", report.c3);
  out += condition_line("C4 distance agreement       ", report.c4);
  out += std::string("overall: ") + (report.pass() ? "Gray map" : "not a Gray map") + "\n";
  return out;
}

std::string survey_table_text(const std::vector<SurveyRow>& rows) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"group", "decomposition", "construction", "verdict",
                   "witness", "section"});
  for (const auto& r : rows)
    cells.push_back({r.group, r.decomposition, r.construction, r.verdict,
                     r.witness, r.paper_section});
  std::vector<size_t> width(6, 0);
  for (const auto& row : cells)
    for (size_t c = 0; c < 6; ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : cells) {
    for (size_t c = 0; c < 6; ++c) {
      out << row[c];
      if (c + 1 < 6) out << std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << "\n";
  }
  return out.str();
}

std::string survey_tsv(const std::vector<SurveyRow>& rows) {
  std::ostringstream out;
  out << "group\tdecomposition\ttype\tverdict\twitness\tpaper_section\n";
  for (const auto& r : rows)
    out << r.group << "\t" << r.decomposition << "\t" << r.construction << "\t"
        << r.verdict << "\t" << r.witness << "\t" << r.paper_section << "\n";
  return out.str();
}

std::string survey_json(const std::vector<SurveyRow>& rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    doc.push_back({{"group", r.group},
                   {"decomposition", r.decomposition},
                   {"type", r.construction},
                   {"verdict", r.verdict},
                   {"witness", r.witness},
                   {"paper_section", r.paper_section}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace gray16
