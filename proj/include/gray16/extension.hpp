#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gray16/automorphism.hpp"
#include "gray16/group.hpp"

namespace gray16 {

// The data of an inner cyclic extension: a group N extended by a cyclic
// coset of degree n, where conjugation by the coset generator restricts to
// tau on N and the generator's n-th power is v.
struct ExtensionType {
  GroupTable base;   // N
  int degree = 2;    // n
  Automorphism tau;  // on N
  int v = 0;         // element index in N
};

struct ExtensionTypeReport {
  bool tau_valid = false;       // tau is an automorphism of N
  bool fixes_v = false;         // tau(v) = v
  bool power_matches = false;   // tau^n = conjugation by v
  int witness = -1;             // element where tau^n differs from t_v
  bool ok() const { return tau_valid && fixes_v && power_matches; }
  std::string describe(const ExtensionType& e) const;
};

ExtensionTypeReport validate_extension_type(const ExtensionType& e);

// Group of order |N|*n with elements k*a^i, N-part varying fastest.
// base_image records where N lands (identically, by construction) and
// coset_rep is the index of a.
struct ExtensionGroup {
  GroupTable group;
  std::vector<int> base_image;
  int coset_rep = 0;
};
ExtensionGroup build_extension(const ExtensionType& e);  // throws InvalidExtension

// Witnessing isomorphism phi: N -> N' with sigma = phi tau phi^-1 and
// w = phi(v), when one exists.
std::optional<Isomorphism> extension_equivalent(const ExtensionType& e1,
                                                const ExtensionType& e2);

// A normal subgroup with a transversal, plus the factorizations of every
// element on both sides. complement[0] and kernel[0] are the identity.
struct SemidirectDecomposition {
  GroupTable group;
  std::vector<int> kernel;      // sorted G-indices
  std::vector<int> complement;  // transversal in the order given
  bool split = false;
  std::vector<int> coset_pos;         // g -> position in complement
  std::vector<int> kernel_pos_left;   // g = h*k: position of k in kernel
  std::vector<int> kernel_pos_right;  // g = k*h: position of k in kernel

  // g = h*k with h in the transversal, k in the kernel.
  std::pair<int, int> factor(int g) const {
    return {complement[static_cast<size_t>(coset_pos[static_cast<size_t>(g)])],
            kernel[static_cast<size_t>(kernel_pos_left[static_cast<size_t>(g)])]};
  }
};

SemidirectDecomposition coset_decomposition(const GroupTable& g,
                                            const std::vector<int>& kernel,
                                            const std::vector<int>& transversal);

// External semidirect product H |x K with the convention h*k*h^-1 = psi_h(k);
// pairs (h,k) realize g = h*k, kernel part varying fastest.
struct SemidirectProduct {
  GroupTable group;
  SemidirectDecomposition decomposition;
};
SemidirectProduct semidirect_product(const GroupTable& h, const GroupTable& k,
                                     const std::vector<Automorphism>& psi);

// The fourteen groups of order 16, G0 plus G1..G13 from their extension types.
struct NamedGroup {
  std::string name;
  GroupTable group;
  std::string description;         // e.g. "C2 x C8"
  std::string extension_literal;   // "(N=C8, n=2, tau=x->x, v=e)"; empty for G0
};
const std::vector<NamedGroup>& classify_order16();

// Parses "(N=K8, n=2, tau=x->x^3;y->y, v=e)".
ExtensionType parse_extension_literal(std::string_view text);
std::string extension_literal(const ExtensionType& e);

}  // namespace gray16
