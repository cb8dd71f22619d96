#include "gray16/graymap.hpp"

#include <algorithm>

#include "gray16/errors.hpp"

namespace gray16 {

GrayMapTable::GrayMapTable(GroupTable g, std::vector<BinaryWord> w)
    : group(std::move(g)), words(std::move(w)) {
  if (words.size() != static_cast<size_t>(group.order()))
    throw LengthMismatch("need exactly one word per group element");
  length = words.front().length();
  for (const auto& word : words)
    if (word.length() != length)
      throw LengthMismatch("all words must have the same length");
}

std::string VerificationReport::first_failure() const {
  if (!c1.pass) return "C1: " + c1.detail;
  if (!c2.pass) return "C2: " + c2.detail;
  if (!c3.pass) return "C3: " + c3.detail;
  if (!c4.pass) return "C4: " + c4.detail;
  return "";
}

VerificationReport verify_gray_map(const GrayMapTable& phi) {
  const GroupTable& g = phi.group;
  VerificationReport r;

  for (int x = 0; x < g.order() && r.c1.pass; ++x) {
    const int w = hamming_weight(phi.word(x));
    if ((w == 0) != (x == 0)) {
      r.c1 = {false, x, -1, w, -1,
              "w(phi(" + g.label(x) + ")) = " + std::to_string(w)};
    }
  }

  for (int x = 0; x < g.order() && r.c2.pass; ++x) {
    const int inv = g.inverse_of(x);
    const int wx = hamming_weight(phi.word(x));
    const int wi = hamming_weight(phi.word(inv));
    if (wx != wi) {
      r.c2 = {false, x, inv, wx, wi,
              "w(phi(" + g.label(x) + ")) = " + std::to_string(wx) +
                  " but w(phi(" + g.label(inv) + ")) = " + std::to_string(wi)};
    }
  }

  for (int x = 0; x < g.order() && r.c3.pass; ++x)
    for (int y = 0; y < g.order() && r.c3.pass; ++y) {
      const int wxy = hamming_weight(phi.word(g.mul(x, y)));
      const int bound = hamming_weight(phi.word(x)) + hamming_weight(phi.word(y));
      if (wxy > bound) {
        r.c3 = {false, x, y, wxy, bound,
                "w(phi(" + g.label(x) + "*" + g.label(y) + ")) = " +
                    std::to_string(wxy) + " > " + std::to_string(bound)};
      }
    }

  for (int a = 0; a < g.order() && r.c4.pass; ++a)
    for (int b = 0; b < g.order() && r.c4.pass; ++b) {
      const int dphi =
          hamming_weight(phi.word(g.mul(a, g.inverse_of(b))));
      const int dh = hamming_distance(phi.word(a), phi.word(b));
      if (dphi != dh) {
        r.c4 = {false, a, b, dphi, dh,
                "d_phi(" + g.label(a) + "," + g.label(b) + ") = " +
                    std::to_string(dphi) + " but d_H = " + std::to_string(dh)};
      }
    }

  return r;
}

GrayMapTable base_gray_map(std::string_view name) {
  if (name == "C2")
    return GrayMapTable(build_builtin("C2"),
                        {BinaryWord::parse("0"), BinaryWord::parse("1")});
  if (name == "C4")
    return GrayMapTable(build_builtin("C4"),
                        {BinaryWord::parse("00"), BinaryWord::parse("01"),
                         BinaryWord::parse("11"), BinaryWord::parse("10")});
  if (name == "K4")
    return GrayMapTable(build_builtin("K4"),
                        {BinaryWord::parse("00"), BinaryWord::parse("01"),
                         BinaryWord::parse("11"), BinaryWord::parse("10")});
  if (name.starts_with("E(") && name.ends_with(")")) {
    const int rank = std::stoi(std::string(name.substr(2, name.size() - 3)));
    static const char* groups[] = {"C2", "K4", "E8", "G0"};
    if (rank < 1 || rank > 4)
      throw NameError("elementary abelian rank out of range");
    GroupTable g = build_builtin(groups[rank - 1]);
    std::vector<BinaryWord> words;
    for (int v = 0; v < g.order(); ++v) {
      // Element bit b selects generator b; render generator 0 leftmost.
      unsigned bits = 0;
      for (int b = 0; b < rank; ++b)
        if (v & (1 << b)) bits |= 1u << (rank - 1 - b);
      words.emplace_back(bits, rank);
    }
    return GrayMapTable(std::move(g), std::move(words));
  }
  throw NameError("no base Gray map named \"" + std::string(name) + "\"");
}

GrayMapTable type1_extend(const GroupTable& g, const std::vector<int>& subgroup,
                          int rep, const GrayMapTable& phi) {
  std::vector<int> h = subgroup;
  std::sort(h.begin(), h.end());
  if (!is_subgroup(g, h))
    throw NotIndexTwo("index set is not a subgroup");
  if (static_cast<int>(h.size()) * 2 != g.order())
    throw NotIndexTwo("subgroup does not have index 2");
  if (std::binary_search(h.begin(), h.end(), rep))
    throw ElementInSubgroup("coset representative lies in the subgroup");

  const SubgroupView view = induced_subgroup(g, h);
  if (!phi.group.same_table(view.group))
    throw InvalidBaseMap("base map is not defined on the given subgroup");
  if (!verify_gray_map(phi).pass())
    throw InvalidBaseMap("base map fails Gray-map verification");

  std::vector<int> pos(static_cast<size_t>(g.order()), -1);
  for (size_t i = 0; i < h.size(); ++i)
    pos[static_cast<size_t>(h[i])] = static_cast<int>(i);

  const BinaryWord ones = BinaryWord::ones(phi.length);
  const int rep_inv = g.inverse_of(rep);
  std::vector<BinaryWord> words(static_cast<size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x) {
    if (pos[static_cast<size_t>(x)] >= 0) {
      const BinaryWord& base = phi.word(pos[static_cast<size_t>(x)]);
      words[static_cast<size_t>(x)] = base.concat(base);
    } else {
      const int inside = g.mul(rep_inv, x);  // x = rep * inside
      const BinaryWord& base = phi.word(pos[static_cast<size_t>(inside)]);
      words[static_cast<size_t>(x)] = base.concat(base + ones);
    }
  }
  return GrayMapTable(g, std::move(words));
}

CompatibilityResult compatible(const SemidirectDecomposition& d,
                               std::span<const BinaryWord> theta2) {
  if (!d.split) throw NotSplit("compatibility requires a split decomposition");
  if (theta2.size() != d.kernel.size())
    throw LengthMismatch("need one word per kernel element");
  std::vector<int> pos(static_cast<size_t>(d.group.order()), -1);
  for (size_t i = 0; i < d.kernel.size(); ++i)
    pos[static_cast<size_t>(d.kernel[i])] = static_cast<int>(i);
  for (int h : d.complement) {
    for (size_t i = 0; i < d.kernel.size(); ++i) {
      const int k = d.kernel[i];
      const int conj = d.group.conjugate(h, k);
      if (hamming_weight(theta2[i]) !=
          hamming_weight(theta2[static_cast<size_t>(pos[static_cast<size_t>(conj)])]))
        return CompatibilityResult{false, h, k};
    }
  }
  return CompatibilityResult{};
}

CompatibilityResult compatible(const SemidirectDecomposition& d,
                               const GrayMapTable& theta2) {
  if (!theta2.group.same_table(induced_subgroup(d.group, d.kernel).group))
    throw LengthMismatch("theta2 is not defined on the decomposition's kernel");
  return compatible(d, std::span<const BinaryWord>(theta2.words));
}

GrayMapTable type2_construct(const SemidirectDecomposition& d,
                             std::span<const BinaryWord> theta1,
                             std::span<const BinaryWord> theta2,
                             Factoring factoring) {
  if (theta1.size() != d.complement.size())
    throw LengthMismatch("need one word per transversal element");
  if (theta2.size() != d.kernel.size())
    throw LengthMismatch("need one word per kernel element");
  const std::vector<int>& kpos = factoring == Factoring::complement_then_kernel
                                     ? d.kernel_pos_left
                                     : d.kernel_pos_right;
  std::vector<BinaryWord> words(static_cast<size_t>(d.group.order()));
  for (int x = 0; x < d.group.order(); ++x)
    words[static_cast<size_t>(x)] =
        theta1[static_cast<size_t>(d.coset_pos[static_cast<size_t>(x)])].concat(
            theta2[static_cast<size_t>(kpos[static_cast<size_t>(x)])]);
  return GrayMapTable(d.group, std::move(words));
}

GrayMapTable type2_construct(const SemidirectDecomposition& d,
                             const GrayMapTable& theta1,
                             const GrayMapTable& theta2, Factoring factoring) {
  if (!theta2.group.same_table(induced_subgroup(d.group, d.kernel).group))
    throw LengthMismatch("theta2 is not defined on the decomposition's kernel");
  std::vector<int> comp = d.complement;
  std::sort(comp.begin(), comp.end());
  if (!is_subgroup(d.group, comp) ||
      !theta1.group.same_table(induced_subgroup(d.group, comp).group))
    throw LengthMismatch("theta1 is not defined on the decomposition's complement");
  // Align theta1 words with the transversal order.
  std::vector<int> sorted_pos(static_cast<size_t>(d.group.order()), -1);
  for (size_t i = 0; i < comp.size(); ++i)
    sorted_pos[static_cast<size_t>(comp[i])] = static_cast<int>(i);
  std::vector<BinaryWord> theta1_words;
  for (int h : d.complement)
    theta1_words.push_back(
        theta1.word(sorted_pos[static_cast<size_t>(h)]));
  return type2_construct(d, theta1_words,
                         std::span<const BinaryWord>(theta2.words), factoring);
}

ParityFeasibility weight_parity_feasible(const GroupTable& g, int length) {
  if (g.order() != (1 << length))
    throw SizeMismatch("group order must be 2^length for a bijective candidate");
  ParityFeasibility out;
  out.involutions = count_involutions(g);
  // Class sizes binom(length, w); odd-sized classes each need an involution,
  // since non-involutions pair off {g, g^-1} with equal weights.
  long long binom = 1;
  for (int w = 1; w <= length; ++w) {
    binom = binom * (length - w + 1) / w;
    if (binom % 2 == 1) ++out.odd_weight_classes;
  }
  out.feasible = out.involutions >= out.odd_weight_classes;
  out.reason = "Z_2^" + std::to_string(length) + " has " +
               std::to_string(out.odd_weight_classes) +
               " odd-sized weight classes; group has " +
               std::to_string(out.involutions) + " elements of order 2";
  return out;
}

GrayMapTable transport(const GrayMapTable& phi, const std::vector<int>& iso,
                       const GroupTable& target) {
  if (!is_isomorphism(phi.group, target, iso))
    throw std::invalid_argument("transport requires an isomorphism");
  std::vector<BinaryWord> words(static_cast<size_t>(target.order()));
  for (int x = 0; x < phi.group.order(); ++x)
    words[static_cast<size_t>(iso[static_cast<size_t>(x)])] = phi.word(x);
  return GrayMapTable(target, std::move(words));
}

}  // namespace gray16
