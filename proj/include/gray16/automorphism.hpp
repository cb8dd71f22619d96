#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gray16/group.hpp"

namespace gray16 {

// A structure-preserving permutation of a group's elements, stored as the
// image vector. Fixes the identity and preserves element orders.
struct Automorphism {
  std::vector<int> map;

  int apply(int x) const { return map[static_cast<size_t>(x)]; }
  bool operator==(const Automorphism&) const = default;
};

bool is_automorphism(const GroupTable& g, const Automorphism& f);

Automorphism identity_automorphism(const GroupTable& g);
Automorphism compose(const Automorphism& f, const Automorphism& g);  // f after g
Automorphism inverse(const Automorphism& f);

// Order under composition; lcm of the cycle lengths of the permutation.
int automorphism_order(const Automorphism& f);

// Complete duplicate-free list, identity first.
std::vector<Automorphism> automorphism_group(const GroupTable& g);

Automorphism inner_automorphism(const GroupTable& g, int a);

std::optional<Automorphism> automorphism_from_images(
    const GroupTable& g, const std::vector<std::pair<int, int>>& images);

// Renders "x->x^3;y->y" over the group's greedy generating set.
std::string describe_automorphism(const GroupTable& g, const Automorphism& f);

// The automorphism group itself as a GroupTable under composition. Labels
// come from generator images; the identity keeps the label "e".
struct AutGroup {
  GroupTable table;
  std::vector<Automorphism> elements;  // positionally aligned with table
};
AutGroup aut_as_group(const GroupTable& g);

}  // namespace gray16
