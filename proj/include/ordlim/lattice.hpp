#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ordlim/ideal.hpp"
#include "ordlim/poset.hpp"
#include "ordlim/poset_map.hpp"

namespace ordlim {

// A finite lattice presented by explicit join/meet tables over a carrier
// poset. Constructed either from a poset (computing sups/infs, rejecting
// non-lattices with a witness pair) or from an ideal lattice (join = union,
// meet = intersection). The algebraic laws are checked on construction; the
// O(n^3) associativity check only for carriers up to 128 elements.
class FiniteLattice {
 public:
  static FiniteLattice from_poset(PosetPtr carrier);
  static FiniteLattice from_ideals(const IdealLattice& ideals);

  const FinitePoset& carrier() const { return *carrier_; }
  const PosetPtr& carrier_ptr() const { return carrier_; }
  int size() const { return carrier_->size(); }

  int join(int i, int j) const { return join_[idx(i, j)]; }
  int meet(int i, int j) const { return meet_[idx(i, j)]; }
  int zero() const { return zero_; }
  int one() const { return one_; }

  // First triple (x, y, z) with x∧(y∨z) != (x∧y)∨(x∧z), if any. Bounded to
  // 10^4 elements.
  std::optional<std::array<int, 3>> distributivity_violation() const;

  // Nonzero x with x = a∨b only trivially; ascending carrier indices.
  std::vector<int> join_irreducibles() const;
  // The induced subposet on a carrier index subset.
  PosetPtr induced_subposet(const std::vector<int>& elements) const;

  std::vector<int> atoms() const;
  bool is_atomic() const;

 private:
  FiniteLattice(PosetPtr carrier, std::vector<int> join, std::vector<int> meet);
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * size() + j; }
  void check_laws() const;

  PosetPtr carrier_;
  std::vector<int> join_;
  std::vector<int> meet_;
  int zero_ = -1;
  int one_ = -1;
};

struct BirkhoffResult {
  PosetPtr jposet;             // J(L) with the induced order
  std::vector<int> jelements;  // carrier indices of J(L), ascending
  IdealLattice ideals;         // O(J(L))
  std::vector<int> eta;        // carrier index -> ideal index, a ↦ {x ∈ J(L) : x <= a}
  bool isomorphism;            // bijective and order-preserving both ways
};

// Birkhoff duality η : L → O(J(L)). Rejects non-distributive input, naming a
// violating triple.
BirkhoffResult birkhoff_eta(const FiniteLattice& lattice);

// x ↦ ↓x as a PosetMap from P into the carrier of O(P).
PosetMap principal_embedding(PosetPtr p, const IdealLattice& ideals);

}  // namespace ordlim
