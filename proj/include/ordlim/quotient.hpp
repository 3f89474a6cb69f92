#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "ordlim/ideal.hpp"
#include "ordlim/poset_map.hpp"

namespace ordlim {

// A quotient from a disjoint union of 2-chains onto a poset. The domain has
// one 2-chain per strict pair (mapped endpoint to endpoint, pairs enumerated
// lexicographically) plus one per isolated point (collapsed onto it).
struct SticksCover {
  PosetPtr domain;  // elements "0".."2p-1", 2i < 2i+1
  PosetMap map;
  int components;
};

SticksCover sticks_cover(PosetPtr target);

// Amalgamation of two quotients f : B → A and g : C → A. D is the disjoint
// union of the sticks covers B' and C'; q is the identity on B' and routes
// each C' component through a witness in B' (symmetrically for p), giving
// f∘f'∘q = g∘g'∘p with all four new arrows quotients.
struct Amalgam {
  PosetPtr d;
  SticksCover b_cover;  // f' : B' → B
  SticksCover c_cover;  // g' : C' → C
  PosetMap q;           // D → B'
  PosetMap p;           // D → C'
};

Amalgam amalgamate(const PosetMap& f, const PosetMap& g);

// The induced map p̂ : O(Q) → O(P) of a quotient p : Q → P: empty to empty,
// ↓x ↦ ↓p(x), and unions of canonical-decomposition parts to unions. Applies
// lazily to raw member sets; the full table over enumerated lattices is built
// eagerly at construction when O(Q) has at most 10^4 ideals.
class InducedMap {
 public:
  static InducedMap make(PosetMap base);

  const PosetMap& base() const { return base_; }

  Bits apply(const Bits& downset) const;
  DownSet apply(const DownSet& downset) const;

  bool has_tables() const { return domain_lattice_ != nullptr; }
  const IdealLattice& domain_lattice() const;
  const IdealLattice& codomain_lattice() const;
  // Ideal index in O(Q) -> ideal index in O(P).
  const std::vector<int>& table() const;

 private:
  explicit InducedMap(PosetMap base);

  PosetMap base_;
  std::shared_ptr<const IdealLattice> domain_lattice_;
  std::shared_ptr<const IdealLattice> codomain_lattice_;
  std::vector<int> table_;
};

// Clause (3) of the meet-preservation criterion: whenever t <= p(x) and
// t <= p(y) there is z <= x, y with t <= p(z). Holds iff p̂ preserves all
// binary meets. The witness is (x, y, t) for a failure.
struct MeetCriterion {
  bool holds = true;
  std::array<int, 3> witness{-1, -1, -1};
};

MeetCriterion meet_preservation_criterion(const PosetMap& p);

}  // namespace ordlim
