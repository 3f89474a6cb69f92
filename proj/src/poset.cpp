#include "ordlim/poset.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace ordlim {

std::string ValidationReport::message() const {
  auto pair_str = [&] {
    return "(" + std::to_string(witness.first) + ", " + std::to_string(witness.second) + ")";
  };
  switch (violation) {
    case Violation::none:
      return std::string("ok");
    case Violation::bad_index:
      return "relation pair out of range " + pair_str();
    case Violation::duplicate_labels:
      return "duplicate labels at indices " + pair_str();
    case Violation::reflexivity:
      return "reflexivity violated at " + pair_str();
    case Violation::antisymmetry:
      return "antisymmetry violated at " + pair_str();
    case Violation::transitivity:
      return "transitivity violated at " + pair_str() + " (related through an intermediate element)";
  }
  return "ok";
}

ValidationReport validate_poset(const PosetData& data) {
  const int n = static_cast<int>(data.labels.size());
  for (auto [i, j] : data.pairs)
    if (i < 0 || j < 0 || i >= n || j >= n)
      return {ValidationReport::Violation::bad_index, {i, j}};

  std::unordered_map<std::string_view, int> seen;
  for (int i = 0; i < n; ++i) {
    auto [it, inserted] = seen.emplace(data.labels[i], i);
    if (!inserted) return {ValidationReport::Violation::duplicate_labels, {it->second, i}};
  }

  std::vector<Bits> up(n, Bits(static_cast<std::size_t>(n)));
  for (auto [i, j] : data.pairs) up[i].set(j);

  for (int i = 0; i < n; ++i)
    if (!up[i].test(i)) return {ValidationReport::Violation::reflexivity, {i, i}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (up[i].test(j) && up[j].test(i)) return {ValidationReport::Violation::antisymmetry, {i, j}};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!up[i].test(j)) continue;
      // i <= j: everything above j must be above i.
      if (!up[j].is_subset_of(up[i])) {
        for (int k = 0; k < n; ++k)
          if (up[j].test(k) && !up[i].test(k))
            return {ValidationReport::Violation::transitivity, {i, k}};
      }
    }
  }
  return {};
}

PosetPtr FinitePoset::make(PosetData data) {
  const int n = static_cast<int>(data.labels.size());
  for (int i = 0; i < n; ++i) data.pairs.emplace_back(i, i);
  ValidationReport report = validate_poset(data);
  if (!report.ok()) fail("invalid poset: " + report.message());

  std::vector<Bits> up(n, Bits(static_cast<std::size_t>(n)));
  std::vector<Bits> down(n, Bits(static_cast<std::size_t>(n)));
  for (auto [i, j] : data.pairs) {
    up[i].set(j);
    down[j].set(i);
  }
  return PosetPtr(new FinitePoset(std::move(data.labels), std::move(up), std::move(down)));
}

PosetPtr FinitePoset::chain(int n) {
  if (n < 1) fail("chain requires n >= 1");
  PosetData data;
  for (int i = 0; i < n; ++i) data.labels.push_back(std::to_string(i + 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) data.pairs.emplace_back(i, j);
  return make(std::move(data));
}

PosetPtr FinitePoset::antichain(int n) {
  if (n < 1) fail("antichain requires n >= 1");
  PosetData data;
  for (int i = 0; i < n; ++i) data.labels.push_back(std::to_string(i + 1));
  return make(std::move(data));
}

std::optional<int> FinitePoset::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::vector<int> FinitePoset::isolated_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (isolated(i)) out.push_back(i);
  return out;
}

std::vector<std::pair<int, int>> FinitePoset::strict_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    up_[i].for_each([&](std::size_t j) {
      if (static_cast<int>(j) != i) out.emplace_back(i, static_cast<int>(j));
    });
  return out;
}

std::vector<std::pair<int, int>> FinitePoset::relation_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    up_[i].for_each([&](std::size_t j) { out.emplace_back(i, static_cast<int>(j)); });
  return out;
}

Bits FinitePoset::maximal_in(const Bits& subset) const {
  Bits out(subset.size());
  subset.for_each([&](std::size_t x) {
    Bits above = up_[x] & subset;
    above.reset(x);
    if (above.none()) out.set(x);
  });
  return out;
}

Bits FinitePoset::minimal_in(const Bits& subset) const {
  Bits out(subset.size());
  subset.for_each([&](std::size_t x) {
    Bits below = down_[x] & subset;
    below.reset(x);
    if (below.none()) out.set(x);
  });
  return out;
}

bool FinitePoset::is_two_component(int x, int y) const {
  if (!lt(x, y)) return false;
  return down_[x].count() == 1 && up_[y].count() == 1;
}

std::vector<std::pair<int, int>> FinitePoset::two_components() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < size(); ++x) {
    if (up_[x].count() != 2 || down_[x].count() != 1) continue;
    int y = -1;
    up_[x].for_each([&](std::size_t j) {
      if (static_cast<int>(j) != x) y = static_cast<int>(j);
    });
    if (up_[y].count() == 1 && down_[y].count() == 2) out.emplace_back(x, y);
  }
  return out;
}

std::vector<std::pair<int, int>> FinitePoset::hasse_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i) {
    up_[i].for_each([&](std::size_t j_) {
      int j = static_cast<int>(j_);
      if (j == i) return;
      // Cover: nothing strictly between i and j.
      bool cover = true;
      for (int k = 0; k < size() && cover; ++k)
        if (k != i && k != j && le(i, k) && le(k, j)) cover = false;
      if (cover) out.emplace_back(i, j);
    });
  }
  return out;
}

bool FinitePoset::equals(const FinitePoset& o) const {
  return labels_ == o.labels_ && up_ == o.up_;
}

namespace {

PosetPtr combine(const FinitePoset& a, const FinitePoset& b, bool sum) {
  PosetData data;
  for (int i = 0; i < a.size(); ++i) data.labels.push_back(a.label(i) + "@0");
  for (int i = 0; i < b.size(); ++i) data.labels.push_back(b.label(i) + "@1");
  const int off = a.size();
  for (auto [i, j] : a.strict_pairs()) data.pairs.emplace_back(i, j);
  for (auto [i, j] : b.strict_pairs()) data.pairs.emplace_back(i + off, j + off);
  if (sum)
    for (int i = 0; i < a.size(); ++i)
      for (int j = 0; j < b.size(); ++j) data.pairs.emplace_back(i, j + off);
  return FinitePoset::make(std::move(data));
}

}  // namespace

PosetPtr linear_sum(const FinitePoset& a, const FinitePoset& b) { return combine(a, b, true); }

PosetPtr disjoint_union(const FinitePoset& a, const FinitePoset& b) { return combine(a, b, false); }

namespace {

bool extend_iso(const FinitePoset& a, const FinitePoset& b, std::vector<int>& map, std::vector<bool>& used,
                int next) {
  const int n = a.size();
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    if (a.up(next).count() != b.up(cand).count() || a.down(next).count() != b.down(cand).count()) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev) {
      if (a.le(next, prev) != b.le(cand, map[prev])) ok = false;
      if (a.le(prev, next) != b.le(map[prev], cand)) ok = false;
    }
    if (!ok) continue;
    map[next] = cand;
    used[cand] = true;
    if (extend_iso(a, b, map, used, next + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

bool isomorphic(const FinitePoset& a, const FinitePoset& b) {
  if (a.size() > 10 || b.size() > 10)
    fail("isomorphism testing is bounded to 10 elements; got " +
         std::to_string(std::max(a.size(), b.size())));
  if (a.size() != b.size()) return false;
  std::vector<int> map(a.size(), -1);
  std::vector<bool> used(a.size(), false);
  return extend_iso(a, b, map, used, 0);
}

}  // namespace ordlim
