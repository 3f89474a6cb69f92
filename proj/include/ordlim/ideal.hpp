#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "ordlim/bitset.hpp"
#include "ordlim/poset.hpp"

namespace ordlim {

// A down-set of a fixed parent poset, stored as a bitset over its indices.
struct DownSet {
  PosetPtr parent;
  Bits members;
};

bool is_down_set(const FinitePoset& p, const Bits& members);
// Downward closure of an arbitrary subset.
Bits down_closure(const FinitePoset& p, const Bits& subset);

// ↓x = {m : m <= x}.
DownSet principal(PosetPtr p, int x);

// Maximal elements of a down-set, ascending. The canonical decomposition of Q
// is {↓x : x among these}: the unique representation of Q as a union of
// pairwise incomparable principal down-sets.
std::vector<int> canonical_decomposition(const FinitePoset& p, const Bits& q);

// The lattice O(P) of all down-sets of a finite poset, ordered by inclusion.
// Ideals are enumerated by breadth-first closure from the empty set (adding
// minimal elements of the complement) and indexed by (cardinality, value) so
// index 0 is the empty set and the last index is all of P.
class IdealLattice {
 public:
  static IdealLattice enumerate(PosetPtr parent, int size_bound = 16);
  // As above but gives up once more than `max_ideals` are found.
  static std::optional<IdealLattice> enumerate_up_to(PosetPtr parent, std::size_t max_ideals);

  const FinitePoset& parent() const { return *parent_; }
  const PosetPtr& parent_ptr() const { return parent_; }

  std::size_t size() const { return ideals_.size(); }
  const Bits& ideal(std::size_t idx) const { return ideals_[idx]; }
  int index_of(const Bits& members) const;

  bool le(int i, int j) const { return ideals_[i].is_subset_of(ideals_[j]); }
  int join(int i, int j) const { return index_of(ideals_[i] | ideals_[j]); }
  int meet(int i, int j) const { return index_of(ideals_[i] & ideals_[j]); }
  int zero() const { return 0; }
  int one() const { return static_cast<int>(size()) - 1; }

  // The inclusion order materialized as a FinitePoset (labels are member-index
  // sets like "{0,2}"). Bounded to 8192 ideals.
  PosetPtr carrier() const;

 private:
  IdealLattice(PosetPtr parent, std::vector<Bits> ideals);

  PosetPtr parent_;
  std::vector<Bits> ideals_;
  std::unordered_map<Bits, int, BitsHash> index_;
};

// Independent counting oracle: down-sets of P correspond to antichains (their
// maximal elements), counted here by direct subset enumeration. Test-grade,
// bounded to 20 elements.
std::uint64_t count_antichains(const FinitePoset& p);

}  // namespace ordlim
