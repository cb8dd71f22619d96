#include "gray16/extension.hpp"

#include <algorithm>
#include <set>

#include "gray16/errors.hpp"

namespace gray16 {

std::string ExtensionTypeReport::describe(const ExtensionType& e) const {
  std::string out;
  auto line = [&](bool pass, const std::string& what) {
    out += (pass ? "  ok   " : "  FAIL ") + what + "\n";
  };
  line(tau_valid, "tau is an automorphism of N");
  line(fixes_v, "tau(v) = v with v = " + e.base.label(e.v));
  std::string power = "tau^" + std::to_string(e.degree) + " = t_v";
  if (!power_matches && witness >= 0)
    power += " (differs at " + e.base.label(witness) + ")";
  line(power_matches, power);
  return out;
}

ExtensionTypeReport validate_extension_type(const ExtensionType& e) {
  ExtensionTypeReport report;
  const GroupTable& n = e.base;
  if (e.degree < 1 || e.v < 0 || e.v >= n.order() ||
      static_cast<int>(e.tau.map.size()) != n.order())
    return report;
  report.tau_valid = is_automorphism(n, e.tau);
  if (!report.tau_valid) return report;
  report.fixes_v = e.tau.apply(e.v) == e.v;
  Automorphism power = identity_automorphism(n);
  for (int i = 0; i < e.degree; ++i) power = compose(e.tau, power);
  const Automorphism conj = inner_automorphism(n, e.v);
  report.power_matches = true;
  for (int x = 0; x < n.order(); ++x) {
    if (power.apply(x) != conj.apply(x)) {
      report.power_matches = false;
      report.witness = x;
      break;
    }
  }
  return report;
}

namespace {

// First letter not used by any of N's labels, scanning a, b, c, ...
char coset_letter(const GroupTable& n) {
  for (char c = 'a'; c <= 'z'; ++c) {
    if (c == 'e') continue;
    bool used = false;
    for (const auto& l : n.labels())
      if (l.find(c) != std::string::npos) used = true;
    if (!used) return c;
  }
  throw std::invalid_argument("no free coset letter");
}

std::string coset_power_label(char letter, int i) {
  if (i == 0) return "";
  if (i == 1) return std::string(1, letter);
  return std::string(1, letter) + "^" + std::to_string(i);
}

}  // namespace

ExtensionGroup build_extension(const ExtensionType& e) {
  const ExtensionTypeReport report = validate_extension_type(e);
  if (!report.ok())
    throw InvalidExtension("not an extension type:\n" + report.describe(e));

  const GroupTable& base = e.base;
  const int m = base.order();
  const int n = m * e.degree;
  const char letter = coset_letter(base);

  std::vector<Automorphism> tau_pow{identity_automorphism(base)};
  for (int i = 1; i < e.degree; ++i)
    tau_pow.push_back(compose(e.tau, tau_pow.back()));

  auto idx = [m](int k, int i) { return i * m + k; };
  std::vector<std::string> labels(static_cast<size_t>(n));
  for (int i = 0; i < e.degree; ++i) {
    for (int k = 0; k < m; ++k) {
      std::string l = (k == 0 ? "" : base.label(k)) + coset_power_label(letter, i);
      labels[static_cast<size_t>(idx(k, i))] = l.empty() ? "e" : l;
    }
  }

  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i1 = 0; i1 < e.degree; ++i1)
    for (int k1 = 0; k1 < m; ++k1)
      for (int i2 = 0; i2 < e.degree; ++i2)
        for (int k2 = 0; k2 < m; ++k2) {
          // (k1 a^i1)(k2 a^i2) = k1 tau^i1(k2) a^(i1+i2), folding a^n = v.
          int part = base.mul(k1, tau_pow[static_cast<size_t>(i1)].apply(k2));
          int exp = i1 + i2;
          if (exp >= e.degree) {
            part = base.mul(part, e.v);
            exp -= e.degree;
          }
          table[static_cast<size_t>(idx(k1, i1)) * n + idx(k2, i2)] = idx(part, exp);
        }

  std::vector<int> base_image(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) base_image[static_cast<size_t>(k)] = k;
  return ExtensionGroup{GroupTable(std::move(labels), std::move(table)),
                        std::move(base_image), idx(0, 1)};
}

std::optional<Isomorphism> extension_equivalent(const ExtensionType& e1,
                                                const ExtensionType& e2) {
  if (e1.degree != e2.degree)
    throw DegreeMismatch("extension types have different degrees");
  for (auto& phi : all_isomorphisms(e1.base, e2.base)) {
    if (phi[static_cast<size_t>(e1.v)] != e2.v) continue;
    bool conjugates = true;
    for (int x = 0; x < e1.base.order(); ++x)
      if (phi[static_cast<size_t>(e1.tau.apply(x))] !=
          e2.tau.apply(phi[static_cast<size_t>(x)])) {
        conjugates = false;
        break;
      }
    if (conjugates) return Isomorphism{std::move(phi)};
  }
  return std::nullopt;
}

SemidirectDecomposition coset_decomposition(const GroupTable& g,
                                            const std::vector<int>& kernel_in,
                                            const std::vector<int>& transversal) {
  std::vector<int> kernel = kernel_in;
  std::sort(kernel.begin(), kernel.end());
  kernel.erase(std::unique(kernel.begin(), kernel.end()), kernel.end());
  if (!is_normal_subgroup(g, kernel))
    throw NotNormal("kernel is not a normal subgroup");

  const size_t cosets = static_cast<size_t>(g.order()) / kernel.size();
  if (transversal.size() != cosets || transversal.empty() || transversal[0] != 0)
    throw NotTransversal("transversal must list one representative per coset, identity first");

  std::vector<int> kernel_pos(static_cast<size_t>(g.order()), -1);
  for (size_t i = 0; i < kernel.size(); ++i)
    kernel_pos[static_cast<size_t>(kernel[i])] = static_cast<int>(i);

  std::vector<int> coset_pos(static_cast<size_t>(g.order()), -1);
  std::vector<int> pos_left(static_cast<size_t>(g.order()), -1);
  std::vector<int> pos_right(static_cast<size_t>(g.order()), -1);

  for (int x = 0; x < g.order(); ++x) {
    for (size_t t = 0; t < transversal.size(); ++t) {
      const int h = transversal[t];
      const int left = g.mul(g.inverse_of(h), x);   // h^-1 x
      if (kernel_pos[static_cast<size_t>(left)] < 0) continue;
      if (coset_pos[static_cast<size_t>(x)] >= 0)
        throw NotTransversal("two representatives share a coset");
      coset_pos[static_cast<size_t>(x)] = static_cast<int>(t);
      pos_left[static_cast<size_t>(x)] = kernel_pos[static_cast<size_t>(left)];
      const int right = g.mul(x, g.inverse_of(h));  // x h^-1, in K since K is normal
      pos_right[static_cast<size_t>(x)] = kernel_pos[static_cast<size_t>(right)];
    }
    if (coset_pos[static_cast<size_t>(x)] < 0)
      throw NotTransversal("some coset has no representative");
  }

  bool split = true;
  for (int h1 : transversal) {
    for (int h2 : transversal) {
      const int prod = g.mul(h1, h2);
      if (std::find(transversal.begin(), transversal.end(), prod) ==
          transversal.end())
        split = false;
    }
  }
  return SemidirectDecomposition{g,
                                 std::move(kernel),
                                 transversal,
                                 split,
                                 std::move(coset_pos),
                                 std::move(pos_left),
                                 std::move(pos_right)};
}

SemidirectProduct semidirect_product(const GroupTable& h, const GroupTable& k,
                                     const std::vector<Automorphism>& psi) {
  if (static_cast<int>(psi.size()) != h.order())
    throw NotHomomorphism("psi must assign one automorphism per element of H");
  for (const auto& f : psi)
    if (!is_automorphism(k, f))
      throw NotHomomorphism("psi image is not an automorphism of K");
  for (int a = 0; a < h.order(); ++a)
    for (int b = 0; b < h.order(); ++b) {
      const Automorphism expect = compose(psi[static_cast<size_t>(a)],
                                          psi[static_cast<size_t>(b)]);
      if (expect.map != psi[static_cast<size_t>(h.mul(a, b))].map)
        throw NotHomomorphism("psi is not a homomorphism at (" + h.label(a) +
                              ", " + h.label(b) + ")");
    }

  const int nh = h.order(), nk = k.order(), n = nh * nk;
  auto idx = [nk](int hi, int ki) { return hi * nk + ki; };
  std::vector<std::string> labels(static_cast<size_t>(n));
  for (int hi = 0; hi < nh; ++hi)
    for (int ki = 0; ki < nk; ++ki)
      labels[static_cast<size_t>(idx(hi, ki))] =
          (hi == 0 && ki == 0) ? "e" : "(" + h.label(hi) + "," + k.label(ki) + ")";

  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int h1 = 0; h1 < nh; ++h1)
    for (int k1 = 0; k1 < nk; ++k1)
      for (int h2 = 0; h2 < nh; ++h2)
        for (int k2 = 0; k2 < nk; ++k2) {
          // (h1 k1)(h2 k2) = (h1 h2)(psi_{h2}^-1(k1) k2)
          const Automorphism& back = psi[static_cast<size_t>(h.inverse_of(h2))];
          table[static_cast<size_t>(idx(h1, k1)) * n + idx(h2, k2)] =
              idx(h.mul(h1, h2), k.mul(back.apply(k1), k2));
        }
  GroupTable group(std::move(labels), std::move(table));

  std::vector<int> kernel(static_cast<size_t>(nk));
  for (int ki = 0; ki < nk; ++ki) kernel[static_cast<size_t>(ki)] = idx(0, ki);
  std::vector<int> transversal(static_cast<size_t>(nh));
  for (int hi = 0; hi < nh; ++hi) transversal[static_cast<size_t>(hi)] = idx(hi, 0);
  SemidirectDecomposition d = coset_decomposition(group, kernel, transversal);
  return SemidirectProduct{std::move(group), std::move(d)};
}

namespace {

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t");
  size_t e = s.find_last_not_of(" \t");
  if (b == std::string_view::npos) return "";
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

ExtensionType parse_extension_literal(std::string_view text) {
  std::string body = trim(text);
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
    body = body.substr(1, body.size() - 2);
  std::string n_name, tau_spec, v_label = "e";
  int degree = 2;
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t comma = body.find(',', pos);
    std::string field = trim(body.substr(pos, comma == std::string::npos
                                                  ? std::string::npos
                                                  : comma - pos));
    pos = comma == std::string::npos ? body.size() + 1 : comma + 1;
    if (field.empty()) continue;
    size_t eq = field.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("extension literal field without '=': " + field);
    std::string key = trim(field.substr(0, eq));
    std::string value = trim(field.substr(eq + 1));
    if (key == "N") n_name = value;
    else if (key == "n") degree = std::stoi(value);
    else if (key == "tau") tau_spec = value;
    else if (key == "v") v_label = value;
    else throw std::invalid_argument("unknown extension literal key: " + key);
  }
  if (n_name.empty()) throw std::invalid_argument("extension literal needs N=");
  GroupTable base = build_builtin(n_name);

  std::vector<std::pair<int, int>> images;
  size_t tp = 0;
  while (tp < tau_spec.size()) {
    size_t semi = tau_spec.find(';', tp);
    std::string item = trim(tau_spec.substr(
        tp, semi == std::string::npos ? std::string::npos : semi - tp));
    tp = semi == std::string::npos ? tau_spec.size() : semi + 1;
    if (item.empty()) continue;
    size_t arrow = item.find("->");
    if (arrow == std::string::npos)
      throw std::invalid_argument("tau image without '->': " + item);
    images.emplace_back(base.index_of(trim(item.substr(0, arrow))),
                        base.index_of(trim(item.substr(arrow + 2))));
  }
  std::optional<Automorphism> tau =
      images.empty() ? std::optional<Automorphism>(identity_automorphism(base))
                     : automorphism_from_images(base, images);
  if (!tau) throw std::invalid_argument("tau images do not define an automorphism");
  const int v = base.index_of(v_label);
  return ExtensionType{std::move(base), degree, std::move(*tau), v};
}

std::string extension_literal(const ExtensionType& e) {
  std::string tau;
  for (int gen : minimal_generating_set(e.base)) {
    if (!tau.empty()) tau += ";";
    tau += e.base.label(gen) + "->" + e.base.label(e.tau.apply(gen));
  }
  std::string name = "?";
  for (const auto& n : builtin_names())
    if (n[0] != 'G' && build_builtin(n).same_table(e.base)) {
      name = n;
      break;
    }
  return "(N=" + name + ", n=" + std::to_string(e.degree) + ", tau=" + tau +
         ", v=" + e.base.label(e.v) + ")";
}

}  // namespace gray16
