#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <string>

#include "gray16/catalog.hpp"
#include "gray16/errors.hpp"
#include "gray16/graymap.hpp"

using namespace gray16;

namespace {

// Checks the distance axioms of d_phi(a,b) = w(phi(a b^-1)) head-on, with no
// reliance on the verifier's condition decomposition.
bool d_phi_is_metric(const GrayMapTable& phi) {
  const GroupTable& g = phi.group;
  auto d = [&](int a, int b) {
    return hamming_weight(phi.word(g.mul(a, g.inverse_of(b))));
  };
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      if ((d(a, b) == 0) != (a == b)) return false;
      if (d(a, b) != d(b, a)) return false;
      for (int c = 0; c < g.order(); ++c)
        if (d(a, c) > d(a, b) + d(b, c)) return false;
    }
  return true;
}

void check_words(const GrayMapTable& map,
                 const std::map<std::string, std::string>& expected) {
  REQUIRE(static_cast<int>(expected.size()) == map.group.order());
  for (const auto& [label, bits] : expected)
    CHECK_MESSAGE(map.word(map.group.index_of(label)).str() == bits, label);
}

}  // namespace

TEST_CASE("hamming weight and distance") {
  CHECK(hamming_weight(BinaryWord::parse("0000")) == 0);
  CHECK(hamming_weight(BinaryWord::parse("00110011")) == 4);
  CHECK(hamming_distance(BinaryWord::parse("01"), BinaryWord::parse("10")) == 2);
  CHECK(hamming_distance(BinaryWord::parse("0101"), BinaryWord::parse("0101")) == 0);
  CHECK_THROWS_AS(hamming_distance(BinaryWord::parse("01"), BinaryWord::parse("011")),
                  LengthMismatch);
  CHECK_THROWS_AS(BinaryWord::parse("01") + BinaryWord::parse("011"), LengthMismatch);
  CHECK((BinaryWord::parse("0110") + BinaryWord::ones(4)).str() == "1001");
  CHECK(BinaryWord::parse("01").concat(BinaryWord::parse("10")).str() == "0110");
}

TEST_CASE("base maps") {
  check_words(base_gray_map("C4"),
              {{"e", "00"}, {"x", "01"}, {"x^2", "11"}, {"x^3", "10"}});
  check_words(base_gray_map("K4"),
              {{"e", "00"}, {"x", "01"}, {"y", "11"}, {"xy", "10"}});
  const GrayMapTable e3 = base_gray_map("E(3)");
  CHECK(e3.word(0).str() == "000");
  std::set<std::string> distinct;
  for (const auto& w : e3.words) distinct.insert(w.str());
  CHECK(distinct.size() == 8);
  CHECK(verify_gray_map(e3).pass());
  CHECK_THROWS_AS(base_gray_map("D8"), NameError);

  for (const auto& name : {"C2", "C4", "K4", "E(1)", "E(2)", "E(3)", "E(4)"})
    CHECK(verify_gray_map(base_gray_map(name)).pass());
}

TEST_CASE("type1 doubling values") {
  // C4 from C2 over {e, x^2}.
  check_words(standard_type1("C4"),
              {{"e", "00"}, {"x", "01"}, {"x^2", "11"}, {"x^3", "10"}});

  // C8 from C4 over the even powers.
  check_words(standard_type1("C8"), {{"e", "0000"},
                                     {"x", "0011"},
                                     {"x^2", "0101"},
                                     {"x^3", "0110"},
                                     {"x^4", "1111"},
                                     {"x^5", "1100"},
                                     {"x^6", "1010"},
                                     {"x^7", "1001"}});
  CHECK(standard_type1("C8").word(0).str() == "0000");
}

TEST_CASE("type1 error paths") {
  const GroupTable c8 = build_builtin("C8");
  const GrayMapTable base = base_gray_map("C4");

  // <x^4> has index 4, not 2.
  CHECK_THROWS_AS(type1_extend(c8, {0, 4}, 1, base_gray_map("C2")), NotIndexTwo);
  // Representative inside the subgroup.
  CHECK_THROWS_AS(type1_extend(c8, {0, 2, 4, 6}, 2,
                               transport(base, {0, 1, 2, 3},
                                         induced_subgroup(c8, {0, 2, 4, 6}).group)),
                  ElementInSubgroup);
  // Base map on the wrong group.
  CHECK_THROWS_AS(type1_extend(c8, {0, 2, 4, 6}, 1, base), InvalidBaseMap);

  // Base map that is not a Gray map: duplicate words on <x^2>.
  const SubgroupView h = induced_subgroup(c8, {0, 2, 4, 6});
  GrayMapTable broken(h.group, {BinaryWord::parse("00"), BinaryWord::parse("01"),
                                BinaryWord::parse("01"), BinaryWord::parse("10")});
  CHECK_THROWS_AS(type1_extend(c8, {0, 2, 4, 6}, 1, broken), InvalidBaseMap);
}

TEST_CASE("verifier catches each condition") {
  CHECK(verify_gray_map(base_gray_map("C4")).pass());

  const GroupTable c4 = build_builtin("C4");
  // C1: nonzero word at the identity.
  GrayMapTable bad1(c4, {BinaryWord::parse("01"), BinaryWord::parse("00"),
                         BinaryWord::parse("11"), BinaryWord::parse("10")});
  CHECK_FALSE(verify_gray_map(bad1).c1.pass);

  // C2: asymmetric weights on x and x^3.
  GrayMapTable bad2(c4, {BinaryWord::parse("00"), BinaryWord::parse("01"),
                         BinaryWord::parse("10"), BinaryWord::parse("11")});
  const VerificationReport r2 = verify_gray_map(bad2);
  CHECK_FALSE(r2.c2.pass);
  CHECK(r2.c2.g == 1);
  CHECK(r2.c2.h == 3);

  // Duplicate words at distinct elements fail C4 at distance zero.
  GrayMapTable dup(c4, {BinaryWord::parse("00"), BinaryWord::parse("01"),
                        BinaryWord::parse("01"), BinaryWord::parse("01")});
  const VerificationReport rd = verify_gray_map(dup);
  CHECK_FALSE(rd.c4.pass);
}

TEST_CASE("valid gray maps are injective and translation-invariant") {
  // d_phi(a,b) = w(phi(a b^-1)) is invariant under right translation; the
  // common factor cancels inside the argument.
  std::vector<GrayMapTable> shipped;
  for (const auto& named : catalog_base_maps()) shipped.push_back(named.map);
  shipped.push_back(base_gray_map("K4"));
  shipped.push_back(base_gray_map("E(2)"));
  shipped.push_back(base_gray_map("E(3)"));
  shipped.push_back(standard_type1("E8"));
  shipped.push_back(d8_type2());
  shipped.push_back(k8_type2());
  for (const auto& map : shipped) {
    REQUIRE(verify_gray_map(map).pass());
    const GroupTable& g = map.group;
    std::set<std::string> seen;
    for (const auto& w : map.words) CHECK(seen.insert(w.str()).second);
    auto d = [&](int a, int b) {
      return hamming_weight(map.word(g.mul(a, g.inverse_of(b))));
    };
    for (int c = 0; c < g.order(); ++c)
      for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
          CHECK(d(g.mul(a, c), g.mul(b, c)) == d(a, b));
  }
}

TEST_CASE("doubling bases have weights constant on automorphism orbits") {
  // This is what lets the doubling survive any embedding, transporting
  // isomorphism and coset representative.
  for (const auto& named : catalog_base_maps()) {
    const GroupTable& g = named.map.group;
    for (const auto& f : automorphism_group(g))
      for (int v = 0; v < g.order(); ++v)
        CHECK_MESSAGE(hamming_weight(named.map.word(v)) ==
                          hamming_weight(named.map.word(f.apply(v))),
                      named.name);
  }
}

TEST_CASE("type1 weight structure") {
  // Weights double on the subgroup; the outer coset is pinned to weight n.
  for (const auto& name : {"C8", "K8", "D8", "Q8", "E8"}) {
    const GrayMapTable doubled = standard_type1(name);
    const GroupTable& g = doubled.group;
    const int n = doubled.length;
    for (int i = 0; i < g.order(); ++i) {
      const BinaryWord left(doubled.word(i).raw() >> (n / 2), n / 2);
      const BinaryWord right(doubled.word(i).raw(), n / 2);
      if (left == right)
        CHECK(hamming_weight(doubled.word(i)) == 2 * hamming_weight(left));
      else
        CHECK(hamming_weight(doubled.word(i)) == n / 2);
    }
  }
}

TEST_CASE("compatibility checks") {
  // G8 = C2 acting on K8 by psi3: weights survive conjugation.
  const ExtensionGroup g8 =
      build_extension(parse_extension_literal("(N=K8, n=2, tau=x->x^3;y->y, v=e)"));
  const SemidirectDecomposition d8 =
      coset_decomposition(g8.group, {0, 1, 2, 3, 4, 5, 6, 7}, {0, 8});
  CHECK(compatible(d8, k8_type2()).ok);

  // G9 = C2 acting by psi5: conjugation by a sends x to xy, weight 1 to 2.
  const ExtensionGroup g9 =
      build_extension(parse_extension_literal("(N=K8, n=2, tau=x->xy;y->y, v=e)"));
  const SemidirectDecomposition d9 =
      coset_decomposition(g9.group, {0, 1, 2, 3, 4, 5, 6, 7}, {0, 8});
  const CompatibilityResult bad = compatible(d9, k8_type2());
  CHECK_FALSE(bad.ok);
  CHECK(g9.group.label(bad.h) == "a");
  CHECK(g9.group.label(bad.k) == "x");

  // Trivial action is always compatible.
  const ExtensionGroup g7 =
      build_extension(parse_extension_literal("(N=K8, n=2, tau=x->x;y->y, v=e)"));
  CHECK(compatible(coset_decomposition(g7.group, {0, 1, 2, 3, 4, 5, 6, 7}, {0, 8}),
                   k8_type2())
            .ok);

  // Non-split decompositions are rejected.
  const GroupTable g11 = build_builtin("G11");
  CHECK_THROWS_AS(
      compatible(coset_decomposition(g11, {0, 1, 2, 3, 4, 5, 6, 7}, {0, 8}),
                 k8_type2()),
      NotSplit);
}

TEST_CASE("type2 construction values") {
  check_words(d8_type2(), {{"e", "000"},
                           {"x", "001"},
                           {"x^2", "011"},
                           {"x^3", "010"},
                           {"y", "100"},
                           {"xy", "110"},
                           {"x^2y", "111"},
                           {"x^3y", "101"}});
  CHECK(verify_gray_map(d8_type2()).pass());

  check_words(k8_type2(), {{"e", "000"},
                           {"x", "001"},
                           {"x^2", "011"},
                           {"x^3", "010"},
                           {"y", "100"},
                           {"xy", "101"},
                           {"x^2y", "111"},
                           {"x^3y", "110"}});
  CHECK(verify_gray_map(k8_type2()).pass());

  // The Q8 candidate fails inverse-weight symmetry at y: y^-1 = y x^2.
  const GrayMapTable q8 = q8_type2_candidate();
  CHECK(q8.word(q8.group.index_of("y")).str() == "100");
  CHECK(q8.word(q8.group.index_of("x^2y")).str() == "111");
  const VerificationReport report = verify_gray_map(q8);
  CHECK_FALSE(report.c2.pass);
  CHECK(q8.group.label(report.c2.g) == "y");
  CHECK(report.c2.lhs == 1);
  CHECK(report.c2.rhs == 3);
}

TEST_CASE("split plus compatible decompositions always give Gray maps") {
  // Over every degree-2 extension of K8 and D8 in the survey's range.
  const std::vector<std::pair<std::string, GrayMapTable>> cases = {
      {"(N=K8, n=2, tau=x->x;y->y, v=e)", k8_type2()},
      {"(N=K8, n=2, tau=x->x^3;y->y, v=e)", k8_type2()},
      {"(N=D8, n=2, tau=x->x^3;y->y, v=e)", d8_type2()},
      {"(N=D8, n=2, tau=x->x;y->x^2y, v=e)", d8_type2()},
  };
  for (const auto& [literal, theta2] : cases) {
    const ExtensionGroup built = build_extension(parse_extension_literal(literal));
    const SemidirectDecomposition d =
        coset_decomposition(built.group, {0, 1, 2, 3, 4, 5, 6, 7}, {0, 8});
    REQUIRE(d.split);
    const std::vector<BinaryWord> theta1 = {BinaryWord::parse("0"),
                                            BinaryWord::parse("1")};
    if (compatible(d, theta2).ok) {
      const GrayMapTable map = type2_construct(d, theta1, theta2.words);
      CHECK(verify_gray_map(map).pass());
    }
  }
}

TEST_CASE("parity feasibility") {
  CHECK_FALSE(weight_parity_feasible(build_builtin("C8"), 3).feasible);
  CHECK_FALSE(weight_parity_feasible(build_builtin("Q8"), 3).feasible);
  CHECK(weight_parity_feasible(build_builtin("K8"), 3).feasible);
  CHECK(weight_parity_feasible(build_builtin("D8"), 3).feasible);
  CHECK(weight_parity_feasible(build_builtin("E8"), 3).feasible);

  const ParityFeasibility c8 = weight_parity_feasible(build_builtin("C8"), 3);
  CHECK(c8.involutions == 1);
  CHECK(c8.odd_weight_classes == 3);

  CHECK_THROWS_AS(weight_parity_feasible(build_builtin("C8"), 4), SizeMismatch);

  // K8's feasibility verdict is constructive: the concatenated map exists.
  CHECK(verify_gray_map(k8_type2()).pass());
}

TEST_CASE("metric oracle agrees with the verifier on random candidates") {
  std::mt19937 rng(20240816);
  const std::vector<std::string> names = {"C2", "C4", "K4", "C8",
                                          "K8", "D8", "Q8", "E8"};
  int checked = 0;
  for (int sample = 0; sample < 300; ++sample) {
    const GroupTable g = build_builtin(names[rng() % names.size()]);
    const int length = 1 + static_cast<int>(rng() % 6);
    std::vector<BinaryWord> words;
    for (int i = 0; i < g.order(); ++i)
      words.emplace_back(static_cast<unsigned>(rng()), length);
    if (sample % 3 == 0) words[0] = BinaryWord::zero(length);
    const GrayMapTable candidate(g, std::move(words));
    const VerificationReport report = verify_gray_map(candidate);
    CHECK(d_phi_is_metric(candidate) ==
          (report.c1.pass && report.c2.pass && report.c3.pass));
    ++checked;
  }
  CHECK(checked == 300);
}

TEST_CASE("word table bookkeeping errors") {
  const GroupTable c4 = build_builtin("C4");
  // One word short.
  CHECK_THROWS_AS(GrayMapTable(c4, {BinaryWord::parse("00"), BinaryWord::parse("01"),
                                    BinaryWord::parse("11")}),
                  LengthMismatch);
  // Ragged lengths.
  CHECK_THROWS_AS(GrayMapTable(c4, {BinaryWord::parse("00"), BinaryWord::parse("01"),
                                    BinaryWord::parse("11"), BinaryWord::parse("1")}),
                  LengthMismatch);

  const GroupTable d8 = build_builtin("D8");
  const SemidirectDecomposition d = coset_decomposition(d8, {0, 1, 2, 3}, {0, 4});
  const std::vector<BinaryWord> theta1 = {BinaryWord::parse("0"),
                                          BinaryWord::parse("1")};
  const std::vector<BinaryWord> theta2 = base_gray_map("C4").words;
  // Wrong span sizes on either side.
  CHECK_THROWS_AS(type2_construct(d, theta2, theta2), LengthMismatch);
  CHECK_THROWS_AS(type2_construct(d, theta1, theta1), LengthMismatch);
  // A kernel map on the wrong group.
  CHECK_THROWS_AS(type2_construct(d, base_gray_map("C2"), base_gray_map("K4")),
                  LengthMismatch);
}

TEST_CASE("transport preserves verdicts") {
  const GroupTable k8 = build_builtin("K8");
  for (const auto& f : automorphism_group(k8)) {
    const GrayMapTable moved = transport(k8_type2(), f.map, k8);
    CHECK(verify_gray_map(moved).pass());
  }
  CHECK_THROWS_AS(transport(k8_type2(), {0, 1, 2, 3, 4, 5, 6, 6}, k8),
                  std::invalid_argument);
}
