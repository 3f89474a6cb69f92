#include "ordlim/ideal.hpp"

#include <algorithm>
#include <deque>

namespace ordlim {

bool is_down_set(const FinitePoset& p, const Bits& members) {
  bool ok = true;
  members.for_each([&](std::size_t x) {
    if (ok && !p.down(static_cast<int>(x)).is_subset_of(members)) ok = false;
  });
  return ok;
}

Bits down_closure(const FinitePoset& p, const Bits& subset) {
  Bits out(subset.size());
  subset.for_each([&](std::size_t x) { out |= p.down(static_cast<int>(x)); });
  return out;
}

DownSet principal(PosetPtr p, int x) {
  if (x < 0 || x >= p->size()) fail("principal: element index out of range");
  return DownSet{p, p->down(x)};
}

std::vector<int> canonical_decomposition(const FinitePoset& p, const Bits& q) {
  return p.maximal_in(q).to_indices();
}

IdealLattice::IdealLattice(PosetPtr parent, std::vector<Bits> ideals)
    : parent_(std::move(parent)), ideals_(std::move(ideals)) {
  std::sort(ideals_.begin(), ideals_.end(), canonical_less);
  index_.reserve(ideals_.size());
  for (std::size_t i = 0; i < ideals_.size(); ++i) index_.emplace(ideals_[i], static_cast<int>(i));
}

std::optional<IdealLattice> IdealLattice::enumerate_up_to(PosetPtr parent, std::size_t max_ideals) {
  const std::size_t n = static_cast<std::size_t>(parent->size());
  std::unordered_map<Bits, int, BitsHash> seen;
  std::deque<Bits> queue;
  Bits empty(n);
  seen.emplace(empty, 0);
  queue.push_back(empty);
  std::vector<Bits> found{empty};
  while (!queue.empty()) {
    Bits cur = queue.front();
    queue.pop_front();
    // Successors: add a minimal element of the complement.
    Bits complement = Bits::full(n).minus(cur);
    Bits mins = parent->minimal_in(complement);
    bool overflow = false;
    mins.for_each([&](std::size_t x) {
      if (overflow) return;
      Bits next = cur;
      next.set(x);
      if (seen.emplace(next, 0).second) {
        if (found.size() >= max_ideals) {
          overflow = true;
          return;
        }
        found.push_back(next);
        queue.push_back(next);
      }
    });
    if (overflow) return std::nullopt;
  }
  return IdealLattice(std::move(parent), std::move(found));
}

IdealLattice IdealLattice::enumerate(PosetPtr parent, int size_bound) {
  if (parent->size() > size_bound)
    fail("ideal enumeration bounded to " + std::to_string(size_bound) + " elements; got " +
         std::to_string(parent->size()));
  auto result = enumerate_up_to(parent, std::size_t(1) << parent->size());
  return std::move(*result);
}

int IdealLattice::index_of(const Bits& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) fail("index_of: not a down-set of this lattice");
  return it->second;
}

PosetPtr IdealLattice::carrier() const {
  if (size() > 8192) fail("ideal lattice carrier materialization bounded to 8192 ideals");
  PosetData data;
  data.labels.reserve(size());
  for (const Bits& b : ideals_) {
    std::string label = "{";
    bool first = true;
    b.for_each([&](std::size_t x) {
      if (!first) label += ",";
      label += std::to_string(x);
      first = false;
    });
    label += "}";
    data.labels.push_back(std::move(label));
  }
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (i != j && ideals_[i].is_subset_of(ideals_[j]))
        data.pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return FinitePoset::make(std::move(data));
}

std::uint64_t count_antichains(const FinitePoset& p) {
  const int n = p.size();
  if (n > 20) fail("antichain counting oracle bounded to 20 elements");
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    bool antichain = true;
    for (int i = 0; i < n && antichain; ++i) {
      if (!((mask >> i) & 1)) continue;
      for (int j = i + 1; j < n && antichain; ++j)
        if (((mask >> j) & 1) && p.comparable(i, j)) antichain = false;
    }
    if (antichain) ++count;
  }
  return count;
}

}  // namespace ordlim
