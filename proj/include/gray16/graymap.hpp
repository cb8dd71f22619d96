#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gray16/extension.hpp"
#include "gray16/group.hpp"
#include "gray16/word.hpp"

namespace gray16 {

// A per-element assignment of fixed-length binary words over a group.
// Candidate tables are allowed to violate the Gray-map conditions; only the
// length bookkeeping is enforced here, the verifier reports the rest.
struct GrayMapTable {
  GroupTable group;
  int length = 0;
  std::vector<BinaryWord> words;

  GrayMapTable(GroupTable g, std::vector<BinaryWord> w);
  const BinaryWord& word(int element) const {
    return words[static_cast<size_t>(element)];
  }
};

struct ConditionResult {
  bool pass = true;
  int g = -1, h = -1;      // witness elements
  int lhs = -1, rhs = -1;  // the two weights/distances that disagree
  std::string detail;
};

// C1: weight zero exactly at the identity. C2: inverse weight symmetry.
// C3: subadditivity over all pairs. C4: w(phi(a b^-1)) = d_H(phi(a), phi(b)).
struct VerificationReport {
  ConditionResult c1, c2, c3, c4;
  bool pass() const { return c1.pass && c2.pass && c3.pass && c4.pass; }
  std::string first_failure() const;
};

VerificationReport verify_gray_map(const GrayMapTable& phi);

// The small seed maps: "C2" (natural), "C4" and "K4" (the classic length-2
// tables), "E(r)" (coordinate map of the rank-r elementary abelian group).
GrayMapTable base_gray_map(std::string_view name);

// Doubling over an index-2 subgroup: h -> (phi(h) | phi(h)) on H and
// xh -> (phi(h) | phi(h)+1) on the other coset.
GrayMapTable type1_extend(const GroupTable& g, const std::vector<int>& subgroup,
                          int rep, const GrayMapTable& phi);

struct CompatibilityResult {
  bool ok = true;
  int h = -1, k = -1;  // first weight-breaking conjugation, as G-indices
};

// Whether conjugation by every transversal element preserves theta2 weights.
CompatibilityResult compatible(const SemidirectDecomposition& d,
                               std::span<const BinaryWord> theta2);
CompatibilityResult compatible(const SemidirectDecomposition& d,
                               const GrayMapTable& theta2);

// Which side of g the kernel part is read from when factoring g for the
// concatenated word. The complement word always comes first.
enum class Factoring {
  complement_then_kernel,  // g = h * k
  kernel_then_complement,  // g = k * h
};

GrayMapTable type2_construct(const SemidirectDecomposition& d,
                             std::span<const BinaryWord> theta1,
                             std::span<const BinaryWord> theta2,
                             Factoring factoring = Factoring::complement_then_kernel);
GrayMapTable type2_construct(const SemidirectDecomposition& d,
                             const GrayMapTable& theta1,
                             const GrayMapTable& theta2,
                             Factoring factoring = Factoring::complement_then_kernel);

struct ParityFeasibility {
  bool feasible = false;
  int involutions = 0;
  int odd_weight_classes = 0;  // weights 1..n whose class size is odd
  std::string reason;
};

// Necessary condition on inverse-weight symmetry for any bijection
// G -> Z_2^n: each odd-sized weight class must absorb an involution.
ParityFeasibility weight_parity_feasible(const GroupTable& g, int length);

// Re-keys phi along an isomorphism onto the target group.
GrayMapTable transport(const GrayMapTable& phi, const std::vector<int>& iso,
                       const GroupTable& target);

}  // namespace gray16
