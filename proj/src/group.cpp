#include "gray16/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "gray16/errors.hpp"

namespace gray16 {

GroupTable::GroupTable(std::vector<std::string> labels, std::vector<int> table)
    : order_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      table_(std::move(table)) {
  const int n = order_;
  if (n < 1) throw std::invalid_argument("group must have at least one element");
  if (table_.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("table size does not match order");
  if (labels_[0] != "e")
    throw std::invalid_argument("identity (index 0) must be labeled \"e\"");
  {
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (static_cast<int>(seen.size()) != n)
      throw std::invalid_argument("labels must be unique");
  }
  for (int v : table_)
    if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");

  // Two-sided identity at index 0.
  for (int i = 0; i < n; ++i)
    if (mul(0, i) != i || mul(i, 0) != i)
      throw std::invalid_argument("index 0 is not a two-sided identity");

  // Latin square: every row and column is a permutation.
  for (int i = 0; i < n; ++i) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int j = 0; j < n; ++j) {
      row[static_cast<size_t>(mul(i, j))] = 1;
      col[static_cast<size_t>(mul(j, i))] = 1;
    }
    for (int j = 0; j < n; ++j)
      if (!row[static_cast<size_t>(j)] || !col[static_cast<size_t>(j)])
        throw std::invalid_argument("table is not a Latin square");
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (mul(mul(i, j), k) != mul(i, mul(j, k)))
          throw std::invalid_argument("table is not associative");

  inverse_.assign(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (mul(i, j) == 0 && mul(j, i) == 0) {
        inverse_[static_cast<size_t>(i)] = j;
        break;
      }
    }
    if (inverse_[static_cast<size_t>(i)] < 0)
      throw std::invalid_argument("element without a two-sided inverse");
  }

  elt_order_.assign(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    int acc = i, k = 1;
    while (acc != 0) {
      acc = mul(acc, i);
      ++k;
    }
    elt_order_[static_cast<size_t>(i)] = k;
  }
}

int GroupTable::power(int base, int exp) const {
  int acc = 0;
  if (exp < 0) {
    base = inverse_of(base);
    exp = -exp;
  }
  for (int i = 0; i < exp; ++i) acc = mul(acc, base);
  return acc;
}

std::optional<int> GroupTable::find(std::string_view label) const {
  for (int i = 0; i < order_; ++i)
    if (labels_[static_cast<size_t>(i)] == label) return i;
  return std::nullopt;
}

int GroupTable::index_of(std::string_view label) const {
  auto hit = find(label);
  if (!hit) throw NameError("no element labeled \"" + std::string(label) + "\"");
  return *hit;
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::string> labels(static_cast<size_t>(n));
  std::vector<int> table(static_cast<size_t>(n) * n);
  auto idx = [na](int i, int j) { return j * na + i; };
  for (int j = 0; j < nb; ++j)
    for (int i = 0; i < na; ++i)
      labels[static_cast<size_t>(idx(i, j))] =
          (i == 0 && j == 0) ? "e" : "(" + a.label(i) + "," + b.label(j) + ")";
  for (int j1 = 0; j1 < nb; ++j1)
    for (int i1 = 0; i1 < na; ++i1)
      for (int j2 = 0; j2 < nb; ++j2)
        for (int i2 = 0; i2 < na; ++i2)
          table[static_cast<size_t>(idx(i1, j1)) * n + idx(i2, j2)] =
              idx(a.mul(i1, i2), b.mul(j1, j2));
  return GroupTable(std::move(labels), std::move(table));
}

namespace {

std::vector<int> closure_of(const GroupTable& g, std::vector<int> seed) {
  std::vector<char> in(static_cast<size_t>(g.order()), 0);
  std::vector<int> members;
  auto add = [&](int x) {
    if (!in[static_cast<size_t>(x)]) {
      in[static_cast<size_t>(x)] = 1;
      members.push_back(x);
    }
  };
  add(0);
  for (int s : seed) add(s);
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < members.size(); ++j)
      add(g.mul(members[i], members[j]));
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<int> order_profile(const GroupTable& g) {
  std::vector<int> profile(static_cast<size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i)
    profile[static_cast<size_t>(i)] = g.element_order(i);
  std::sort(profile.begin(), profile.end());
  return profile;
}

// Backtracking over generator images with matching element orders. Collects
// every bijective homomorphism when `all` is set, otherwise stops at one.
std::vector<std::vector<int>> isomorphism_search(const GroupTable& a,
                                                 const GroupTable& b,
                                                 bool all) {
  std::vector<std::vector<int>> found;
  if (a.order() != b.order()) return found;
  if (order_profile(a) != order_profile(b)) return found;

  const std::vector<int> gens = minimal_generating_set(a);
  std::vector<std::vector<int>> candidates;
  for (int gen : gens) {
    std::vector<int> c;
    for (int i = 0; i < b.order(); ++i)
      if (b.element_order(i) == a.element_order(gen)) c.push_back(i);
    candidates.push_back(std::move(c));
  }

  std::vector<std::pair<int, int>> images(gens.size());
  auto rec = [&](auto&& self, size_t pos) -> bool {
    if (pos == gens.size()) {
      auto hom = homomorphism_from_images(a, b, images);
      if (!hom) return false;
      std::vector<char> hit(static_cast<size_t>(b.order()), 0);
      for (int v : *hom) hit[static_cast<size_t>(v)] = 1;
      if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return false;
      found.push_back(std::move(*hom));
      return !all;
    }
    for (int img : candidates[pos]) {
      images[pos] = {gens[pos], img};
      if (self(self, pos + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

}  // namespace

std::vector<int> subgroup_generated_by(const GroupTable& g,
                                       const std::vector<int>& gens) {
  return closure_of(g, gens);
}

std::vector<int> minimal_generating_set(const GroupTable& g) {
  // Start from the lowest-index element of maximal order, then extend with
  // the lowest-index element outside the span; the second rule keeps the
  // presentation generators (x, then y) for the builtin tables.
  std::vector<int> gens;
  std::vector<int> span{0};
  if (g.order() > 1) {
    int first = 1;
    for (int cand = 2; cand < g.order(); ++cand)
      if (g.element_order(cand) > g.element_order(first)) first = cand;
    gens.push_back(first);
    span = closure_of(g, gens);
  }
  for (int cand = 1; cand < g.order(); ++cand) {
    if (static_cast<int>(span.size()) == g.order()) break;
    if (std::binary_search(span.begin(), span.end(), cand)) continue;
    gens.push_back(cand);
    span = closure_of(g, gens);
  }
  return gens;
}

std::optional<std::vector<int>> homomorphism_from_images(
    const GroupTable& source, const GroupTable& target,
    const std::vector<std::pair<int, int>>& images) {
  const int n = source.order();
  std::vector<int> map(static_cast<size_t>(n), -1);
  map[0] = 0;
  std::vector<int> reached{0};
  for (auto [gen, img] : images) {
    if (map[static_cast<size_t>(gen)] == -1) {
      map[static_cast<size_t>(gen)] = img;
      reached.push_back(gen);
    } else if (map[static_cast<size_t>(gen)] != img) {
      return std::nullopt;
    }
  }
  // Closure: every product of reached elements has a forced image.
  for (size_t i = 0; i < reached.size(); ++i) {
    for (size_t j = 0; j < reached.size(); ++j) {
      int u = reached[i], v = reached[j];
      int w = source.mul(u, v);
      int img = target.mul(map[static_cast<size_t>(u)], map[static_cast<size_t>(v)]);
      if (map[static_cast<size_t>(w)] == -1) {
        map[static_cast<size_t>(w)] = img;
        reached.push_back(w);
      } else if (map[static_cast<size_t>(w)] != img) {
        return std::nullopt;
      }
    }
  }
  if (static_cast<int>(reached.size()) != n)
    throw std::invalid_argument("images do not cover a generating set");
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (map[static_cast<size_t>(source.mul(u, v))] !=
          target.mul(map[static_cast<size_t>(u)], map[static_cast<size_t>(v)]))
        return std::nullopt;
  return map;
}

bool is_isomorphism(const GroupTable& a, const GroupTable& b,
                    const std::vector<int>& map) {
  if (a.order() != b.order()) return false;
  if (static_cast<int>(map.size()) != a.order()) return false;
  std::vector<char> hit(static_cast<size_t>(b.order()), 0);
  for (int v : map) {
    if (v < 0 || v >= b.order() || hit[static_cast<size_t>(v)]) return false;
    hit[static_cast<size_t>(v)] = 1;
  }
  if (map[0] != 0) return false;
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < a.order(); ++v)
      if (map[static_cast<size_t>(a.mul(u, v))] !=
          b.mul(map[static_cast<size_t>(u)], map[static_cast<size_t>(v)]))
        return false;
  return true;
}

std::optional<Isomorphism> is_isomorphic(const GroupTable& a,
                                         const GroupTable& b) {
  auto found = isomorphism_search(a, b, /*all=*/false);
  if (found.empty()) return std::nullopt;
  return Isomorphism{std::move(found.front())};
}

std::vector<std::vector<int>> all_isomorphisms(const GroupTable& a,
                                               const GroupTable& b) {
  return isomorphism_search(a, b, /*all=*/true);
}

std::vector<std::vector<int>> subgroups(const GroupTable& g) {
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> queue;
  std::vector<int> trivial{0};
  known.insert(trivial);
  queue.push_back(trivial);
  for (size_t q = 0; q < queue.size(); ++q) {
    std::vector<int> base = queue[q];
    for (int x = 1; x < g.order(); ++x) {
      if (std::binary_search(base.begin(), base.end(), x)) continue;
      std::vector<int> seed = base;
      seed.push_back(x);
      std::vector<int> bigger = closure_of(g, seed);
      if (known.insert(bigger).second) queue.push_back(std::move(bigger));
    }
  }
  return {known.begin(), known.end()};
}

bool is_subgroup(const GroupTable& g, const std::vector<int>& elements) {
  if (elements.empty() || elements.front() != 0) return false;
  for (int x : elements)
    for (int y : elements)
      if (!std::binary_search(elements.begin(), elements.end(), g.mul(x, y)))
        return false;
  return true;
}

bool is_normal_subgroup(const GroupTable& g, const std::vector<int>& elements) {
  if (!is_subgroup(g, elements)) return false;
  for (int a = 0; a < g.order(); ++a)
    for (int x : elements)
      if (!std::binary_search(elements.begin(), elements.end(),
                              g.conjugate(a, x)))
        return false;
  return true;
}

bool contains_subgroup_isomorphic_to(const GroupTable& g,
                                     const GroupTable& h) {
  for (const auto& s : subgroups(g)) {
    if (static_cast<int>(s.size()) != h.order()) continue;
    if (is_isomorphic(induced_subgroup(g, s).group, h)) return true;
  }
  return false;
}

int count_involutions(const GroupTable& g) {
  int count = 0;
  for (int i = 0; i < g.order(); ++i)
    if (g.element_order(i) == 2) ++count;
  return count;
}

SubgroupView induced_subgroup(const GroupTable& g,
                              const std::vector<int>& elements) {
  std::vector<int> members = elements;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!is_subgroup(g, members))
    throw std::invalid_argument("index set is not a subgroup");
  const int n = static_cast<int>(members.size());
  std::vector<int> pos(static_cast<size_t>(g.order()), -1);
  for (int i = 0; i < n; ++i) pos[static_cast<size_t>(members[static_cast<size_t>(i)])] = i;
  std::vector<std::string> labels(static_cast<size_t>(n));
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    labels[static_cast<size_t>(i)] = g.label(members[static_cast<size_t>(i)]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<size_t>(i) * n + j] =
          pos[static_cast<size_t>(g.mul(members[static_cast<size_t>(i)],
                                        members[static_cast<size_t>(j)]))];
  return SubgroupView{GroupTable(std::move(labels), std::move(table)),
                      std::move(members)};
}

}  // namespace gray16
