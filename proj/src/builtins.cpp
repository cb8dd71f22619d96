#include <algorithm>
#include <string>
#include <vector>

#include "gray16/errors.hpp"
#include "gray16/extension.hpp"
#include "gray16/group.hpp"

namespace gray16 {

namespace {

std::string power_label(const std::string& letter, int i) {
  if (i == 0) return "";
  if (i == 1) return letter;
  return letter + "^" + std::to_string(i);
}

GroupTable cyclic(int n) {
  std::vector<std::string> labels(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::string l = power_label("x", i);
    labels[static_cast<size_t>(i)] = l.empty() ? "e" : l;
  }
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<size_t>(i) * n + j] = (i + j) % n;
  return GroupTable(std::move(labels), std::move(table));
}

// Two-generator presentation <x,y | x^m = e, y^2 = x^c, y x = x^t y> on
// normal forms x^i y^j. Covers K4, K8, D8, Q8 and Q16.
GroupTable two_generator(int m, int t, int c) {
  const int n = 2 * m;
  std::vector<std::string> labels(static_cast<size_t>(n));
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < m; ++i) {
      std::string l = power_label("x", i) + (j ? "y" : "");
      labels[static_cast<size_t>(j * m + i)] = l.empty() ? "e" : l;
    }
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int j1 = 0; j1 < 2; ++j1)
    for (int i1 = 0; i1 < m; ++i1)
      for (int j2 = 0; j2 < 2; ++j2)
        for (int i2 = 0; i2 < m; ++i2) {
          // (x^i1 y^j1)(x^i2 y^j2): y^j1 x^i2 = x^(i2 t^j1) y^j1, y^2 = x^c.
          int exp = i1 + i2 * (j1 ? t : 1) + (j1 && j2 ? c : 0);
          int ypart = (j1 + j2) % 2;
          table[static_cast<size_t>(j1 * m + i1) * n + (j2 * m + i2)] =
              ypart * m + ((exp % m + m) % m);
        }
  return GroupTable(std::move(labels), std::move(table));
}

GroupTable elementary_abelian(const std::vector<std::string>& letters) {
  const int rank = static_cast<int>(letters.size());
  const int n = 1 << rank;
  std::vector<std::string> labels(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::string l;
    for (int b = 0; b < rank; ++b)
      if (v & (1 << b)) l += letters[static_cast<size_t>(b)];
    labels[static_cast<size_t>(v)] = l.empty() ? "e" : l;
  }
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      table[static_cast<size_t>(u) * n + v] = u ^ v;
  return GroupTable(std::move(labels), std::move(table));
}

struct Order16Spec {
  const char* name;
  const char* base;         // N in the extension type; empty for G0
  const char* tau;          // generator images
  const char* v;
  const char* description;
};

// G1..G13 as degree-2 extension types over C8 or K8; G0 stands apart.
const Order16Spec kOrder16[] = {
    {"G0", "", "", "", "C2 x C2 x C2 x C2"},
    {"G1", "C8", "x->x", "e", "C2 x C8"},
    {"G2", "C8", "x->x^3", "e", "C2 |x C8 (sigma2)"},
    {"G3", "C8", "x->x^5", "e", "C2 |x C8 (sigma3)"},
    {"G4", "C8", "x->x^7", "e", "C2 |x C8 (sigma4)"},
    {"G5", "C8", "x->x^7", "x^4", "Q16"},
    {"G6", "C8", "x->x", "x", "C16"},
    {"G7", "K8", "x->x;y->y", "e", "K4 x C4"},
    {"G8", "K8", "x->x^3;y->y", "e", "D8 x C2"},
    {"G9", "K8", "x->xy;y->y", "e", "C4 |x K4"},
    {"G10", "K8", "x->x^3;y->x^2y", "e", "C2 |x Q8"},
    {"G11", "K8", "x->x^3;y->y", "x^2", "C2 x Q8"},
    {"G12", "K8", "x->xy;y->y", "x^2", "C4 |x C4"},
    {"G13", "K8", "x->x;y->y", "y", "C4 x C4"},
};

std::vector<NamedGroup> make_order16() {
  std::vector<NamedGroup> out;
  for (const auto& spec : kOrder16) {
    if (spec.base[0] == '\0') {
      out.push_back(NamedGroup{spec.name,
                               elementary_abelian({"x", "y", "a", "b"}),
                               spec.description, ""});
      continue;
    }
    std::string literal = std::string("(N=") + spec.base + ", n=2, tau=" +
                          spec.tau + ", v=" + spec.v + ")";
    ExtensionType type = parse_extension_literal(literal);
    ExtensionGroup built = build_extension(type);
    out.push_back(NamedGroup{spec.name, std::move(built.group),
                             spec.description, std::move(literal)});
  }
  return out;
}

}  // namespace

const std::vector<NamedGroup>& classify_order16() {
  static const std::vector<NamedGroup> groups = make_order16();
  return groups;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "C2",  "C4",  "K4",  "C8",  "K8",  "E8",  "D8",  "Q8",
      "C16", "Q16", "G0",  "G1",  "G2",  "G3",  "G4",  "G5",
      "G6",  "G7",  "G8",  "G9",  "G10", "G11", "G12", "G13"};
  return names;
}

GroupTable build_builtin(std::string_view name) {
  if (name == "C2") return cyclic(2);
  if (name == "C4") return cyclic(4);
  if (name == "C8") return cyclic(8);
  if (name == "C16") return cyclic(16);
  if (name == "K4") return two_generator(2, 1, 0);
  if (name == "K8") return two_generator(4, 1, 0);
  if (name == "D8") return two_generator(4, 3, 0);
  if (name == "Q8") return two_generator(4, 3, 2);
  if (name == "Q16") return two_generator(8, 7, 4);
  if (name == "E8") return elementary_abelian({"x", "y", "a"});
  for (const auto& g : classify_order16())
    if (g.name == name) return g.group;
  throw NameError("unknown group \"" + std::string(name) + "\"");
}

}  // namespace gray16
