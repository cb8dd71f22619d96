#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gray16/graymap.hpp"

namespace gray16 {

// The doubling-chain maps: length 2 on C4, length 4 on the order-8 groups,
// length 8 on C16/Q16 and the order-16 catalog (G0..G13).
GrayMapTable standard_type1(std::string_view name);

// One length-8 map per order-16 group, G0 first.
std::vector<std::pair<std::string, GrayMapTable>> type1_catalog();

// The concatenated maps on the order-8 groups: valid on D8 and K8, a
// refuted candidate on Q8. C8 admits no such map at all.
GrayMapTable d8_type2();
GrayMapTable k8_type2();
GrayMapTable q8_type2_candidate();

// The length-3 map on a D8/K8-shaped kernel used when doubling over it,
// keyed by the kernel group's builtin name; nullopt for C8/Q8 kernels.
std::optional<GrayMapTable> kernel_type2_map(std::string_view name);

struct SurveyRow {
  std::string group;          // G0..G13
  std::string decomposition;  // extension-type literal
  std::string construction;   // "Type 2" | "candidate" | "none"
  std::string verdict;        // "valid" | "fails C2" | ... | "no kernel map"
  std::string witness;
  std::string paper_section;  // locus tag such as "6.5"
  bool valid = false;
  std::optional<GrayMapTable> map;
  std::optional<VerificationReport> report;
};

// The fixed list of decompositions surveyed for the order-16 groups; every
// verdict is recomputed on the spot. `exhaustive` appends exploratory rows
// for every normal subgroup with a canonical transversal.
std::vector<SurveyRow> type2_survey(bool exhaustive = false);

std::set<std::string> type2_feasible_set(const std::vector<SurveyRow>& rows);

// The canonical construction behind `graymap type2 <name>`: first valid
// survey row if any, otherwise the refuted candidate or a blocked note.
SurveyRow canonical_type2(std::string_view name);

// Attempt on an explicit extension type: kernel map from the catalog,
// transversal of coset powers, verdict from the verifier.
SurveyRow type2_from_extension(const ExtensionType& type);

struct NecessaryConditionRow {
  std::string group;
  bool contains_c8 = false;
  bool contains_q8 = false;
  bool feasible = false;
};
struct NecessaryConditionsReport {
  std::vector<NecessaryConditionRow> rows;
  bool consistent = false;  // every feasible group avoids both subgroups
};
NecessaryConditionsReport necessary_conditions_report();

// Verified maps shipped for the order <= 8 groups, usable as doubling bases.
struct NamedBaseMap {
  std::string name;
  GrayMapTable map;
};
const std::vector<NamedBaseMap>& catalog_base_maps();

}  // namespace gray16
