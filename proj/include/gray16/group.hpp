#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gray16 {

// A finite group as a dense multiplication table over element indices.
// Index 0 is always the identity and carries the label "e". The constructor
// checks the full set of group axioms (Latin square, two-sided identity,
// associativity, inverses), so a GroupTable in hand is known-good.
class GroupTable {
 public:
  GroupTable(std::vector<std::string> labels, std::vector<int> table);

  int order() const { return order_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * order_ + b]; }
  int inverse_of(int a) const { return inverse_[static_cast<size_t>(a)]; }
  int element_order(int a) const { return elt_order_[static_cast<size_t>(a)]; }
  int power(int base, int exp) const;
  int conjugate(int by, int x) const { return mul(mul(by, x), inverse_of(by)); }

  const std::string& label(int a) const { return labels_[static_cast<size_t>(a)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> find(std::string_view label) const;
  int index_of(std::string_view label) const;  // throws NameError when absent

  bool same_table(const GroupTable& other) const {
    return labels_ == other.labels_ && table_ == other.table_;
  }

 private:
  int order_ = 0;
  std::vector<std::string> labels_;
  std::vector<int> table_;  // row-major, order x order
  std::vector<int> inverse_;
  std::vector<int> elt_order_;
};

struct Isomorphism {
  std::vector<int> map;  // source index -> target index
};

const std::vector<std::string>& builtin_names();
GroupTable build_builtin(std::string_view name);

// Componentwise product; first factor index varies fastest.
GroupTable direct_product(const GroupTable& a, const GroupTable& b);

bool is_isomorphism(const GroupTable& a, const GroupTable& b,
                    const std::vector<int>& map);
std::optional<Isomorphism> is_isomorphic(const GroupTable& a,
                                         const GroupTable& b);
std::vector<std::vector<int>> all_isomorphisms(const GroupTable& a,
                                               const GroupTable& b);

// All subgroups, each a sorted index set; includes {e} and G.
std::vector<std::vector<int>> subgroups(const GroupTable& g);
bool contains_subgroup_isomorphic_to(const GroupTable& g, const GroupTable& h);
int count_involutions(const GroupTable& g);

std::vector<int> subgroup_generated_by(const GroupTable& g,
                                       const std::vector<int>& gens);

// Greedy generating set: repeatedly adjoin the lowest-index element of
// maximal order outside the closure so far.
std::vector<int> minimal_generating_set(const GroupTable& g);

// Extends generator images to a full homomorphism by closure; nullopt when
// the images are inconsistent. Throws when the generators do not generate.
std::optional<std::vector<int>> homomorphism_from_images(
    const GroupTable& source, const GroupTable& target,
    const std::vector<std::pair<int, int>>& images);

// The subgroup `elements` of g as a GroupTable of its own, together with the
// positional map back into g. Element order follows the sorted index set.
struct SubgroupView {
  GroupTable group;
  std::vector<int> to_parent;
};
SubgroupView induced_subgroup(const GroupTable& g,
                              const std::vector<int>& elements);

bool is_subgroup(const GroupTable& g, const std::vector<int>& elements);
bool is_normal_subgroup(const GroupTable& g, const std::vector<int>& elements);

}  // namespace gray16
