#include "ordlim/samplers.hpp"

#include <algorithm>

namespace ordlim {

namespace {

// Transitive closure of a strict relation given as a bool matrix over an
// acyclic orientation.
void close(std::vector<std::uint8_t>& lt, int n) {
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (lt[i * n + k])
        for (int j = 0; j < n; ++j)
          if (lt[k * n + j]) lt[i * n + j] = 1;
}

PosetPtr poset_from_strict(const std::vector<std::uint8_t>& lt, int n, const std::string& stem) {
  PosetData data;
  for (int i = 0; i < n; ++i) data.labels.push_back(stem + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (lt[i * n + j]) data.pairs.emplace_back(i, j);
  return FinitePoset::make(std::move(data));
}

}  // namespace

PosetPtr random_poset(Rng& rng, int n, int edge_percent) {
  std::vector<std::uint8_t> lt(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.chance(static_cast<std::uint64_t>(edge_percent), 100)) lt[i * n + j] = 1;
  close(lt, n);
  return poset_from_strict(lt, n, "e");
}

PosetMap random_quotient_onto(Rng& rng, PosetPtr a, int domain_size) {
  const int na = a->size();
  if (domain_size < na) fail("random_quotient_onto: domain smaller than the base");

  // Fiber sizes: one each, extras spread at random.
  std::vector<int> fiber_of;
  for (int v = 0; v < na; ++v) fiber_of.push_back(v);
  for (int extra = 0; extra < domain_size - na; ++extra) fiber_of.push_back(rng.range(0, na - 1));
  std::sort(fiber_of.begin(), fiber_of.end());

  const int n = domain_size;
  std::vector<std::uint8_t> lt(static_cast<std::size_t>(n) * n, 0);
  // Within-fiber edges on index order.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (fiber_of[i] == fiber_of[j] && rng.chance(30, 100)) lt[i * n + j] = 1;
  // One mandatory witness pair per strict pair of the base, plus extras.
  for (auto [x, y] : a->strict_pairs()) {
    std::vector<int> fx, fy;
    for (int i = 0; i < n; ++i) {
      if (fiber_of[i] == x) fx.push_back(i);
      if (fiber_of[i] == y) fy.push_back(i);
    }
    int u = fx[rng.below(fx.size())];
    int v = fy[rng.below(fy.size())];
    lt[u * n + v] = 1;
    for (int i : fx)
      for (int j : fy)
        if (rng.chance(20, 100)) lt[i * n + j] = 1;
  }
  close(lt, n);

  PosetPtr domain = poset_from_strict(lt, n, "q");
  return PosetMap::make(std::move(domain), std::move(a), std::move(fiber_of));
}

TargetSystem random_target_system(Rng& rng, int count, int max_size) {
  TargetSystem ts;
  int size1 = rng.range(1, max_size);
  ts.levels.push_back(random_poset(rng, size1, 40));
  for (int k = 1; k < count; ++k) {
    int prev = ts.levels.back()->size();
    int size = rng.range(prev, max_size);
    PosetMap step = random_quotient_onto(rng, ts.levels.back(), size);
    ts.levels.push_back(step.domain_ptr());
    ts.steps.push_back(std::move(step));
  }
  return ts;
}

}  // namespace ordlim
