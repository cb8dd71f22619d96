#include "gray16/automorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gray16/errors.hpp"

namespace gray16 {

bool is_automorphism(const GroupTable& g, const Automorphism& f) {
  return is_isomorphism(g, g, f.map);
}

Automorphism identity_automorphism(const GroupTable& g) {
  std::vector<int> map(static_cast<size_t>(g.order()));
  std::iota(map.begin(), map.end(), 0);
  return Automorphism{std::move(map)};
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  std::vector<int> map(g.map.size());
  for (size_t i = 0; i < g.map.size(); ++i)
    map[i] = f.map[static_cast<size_t>(g.map[i])];
  return Automorphism{std::move(map)};
}

Automorphism inverse(const Automorphism& f) {
  std::vector<int> map(f.map.size());
  for (size_t i = 0; i < f.map.size(); ++i)
    map[static_cast<size_t>(f.map[i])] = static_cast<int>(i);
  return Automorphism{std::move(map)};
}

int automorphism_order(const Automorphism& f) {
  const int n = static_cast<int>(f.map.size());
  std::vector<char> seen(static_cast<size_t>(n), 0);
  long long result = 1;
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    int len = 0, cur = start;
    while (!seen[static_cast<size_t>(cur)]) {
      seen[static_cast<size_t>(cur)] = 1;
      cur = f.map[static_cast<size_t>(cur)];
      ++len;
    }
    result = std::lcm(result, static_cast<long long>(len));
  }
  return static_cast<int>(result);
}

std::vector<Automorphism> automorphism_group(const GroupTable& g) {
  std::vector<Automorphism> autos;
  for (auto& map : all_isomorphisms(g, g)) autos.push_back(Automorphism{std::move(map)});
  const Automorphism id = identity_automorphism(g);
  auto at = std::find(autos.begin(), autos.end(), id);
  if (at != autos.begin()) std::iter_swap(autos.begin(), at);
  return autos;
}

Automorphism inner_automorphism(const GroupTable& g, int a) {
  std::vector<int> map(static_cast<size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x)
    map[static_cast<size_t>(x)] = g.conjugate(a, x);
  return Automorphism{std::move(map)};
}

std::optional<Automorphism> automorphism_from_images(
    const GroupTable& g, const std::vector<std::pair<int, int>>& images) {
  auto hom = homomorphism_from_images(g, g, images);
  if (!hom) return std::nullopt;
  Automorphism f{std::move(*hom)};
  if (!is_automorphism(g, f)) return std::nullopt;
  return f;
}

std::string describe_automorphism(const GroupTable& g, const Automorphism& f) {
  std::string out;
  for (int gen : minimal_generating_set(g)) {
    if (!out.empty()) out += ";";
    out += g.label(gen) + "->" + g.label(f.apply(gen));
  }
  return out;
}

AutGroup aut_as_group(const GroupTable& g) {
  std::vector<Automorphism> autos = automorphism_group(g);
  const int n = static_cast<int>(autos.size());
  if (n > 256)
    throw std::invalid_argument("automorphism group too large for a table");
  std::map<std::vector<int>, int> position;
  for (int i = 0; i < n; ++i) position[autos[static_cast<size_t>(i)].map] = i;
  std::vector<std::string> labels(static_cast<size_t>(n));
  labels[0] = "e";
  for (int i = 1; i < n; ++i)
    labels[static_cast<size_t>(i)] =
        describe_automorphism(g, autos[static_cast<size_t>(i)]);
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<size_t>(i) * n + j] = position.at(
          compose(autos[static_cast<size_t>(i)], autos[static_cast<size_t>(j)]).map);
  return AutGroup{GroupTable(std::move(labels), std::move(table)),
                  std::move(autos)};
}

}  // namespace gray16
