#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordlim/bitset.hpp"
#include "ordlim/lattice.hpp"
#include "ordlim/level.hpp"

namespace ordlim {

// T_n: the 2-component addresses of level n — words over {0,1,2,3} of
// length n whose first digit is 0 or 1. The rank of an address is its
// base-4 value (first digit restricted, so ranks fill [0, 2·4^(n-1))).
// Children refine an address: c⌢0 and c⌢1 are the two components over the
// parent pair, c⌢2 those over its lower endpoint, c⌢3 over its upper.
class ComponentIndex {
 public:
  explicit ComponentIndex(int n);

  int depth() const { return n_; }
  std::uint64_t size() const { return std::uint64_t(2) << (2 * (n_ - 1)); }

  std::string word(std::uint64_t rank) const;
  std::optional<std::uint64_t> parse_word(std::string_view s) const;

  // (lower, upper) endpoint words of the addressed component of P_n.
  std::pair<std::uint64_t, std::uint64_t> component(std::uint64_t rank) const;

 private:
  int n_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> components_;
};

// An element of {0,1,2}^{T_n}: per component, absent (0) / lower endpoint
// only (1) / whole pair (2). Join and meet are pointwise max and min.
struct TernaryFunction {
  int n = 0;
  std::vector<std::uint8_t> values;

  bool operator==(const TernaryFunction& o) const = default;
};

TernaryFunction ternary_zero(int n);
TernaryFunction ternary_join(const TernaryFunction& f, const TernaryFunction& g);
TernaryFunction ternary_meet(const TernaryFunction& f, const TernaryFunction& g);
bool ternary_le(const TernaryFunction& f, const TernaryFunction& g);
// Join-irreducible iff exactly one nonzero value.
bool ternary_join_irreducible(const TernaryFunction& f);

// The canonical isomorphism O(P_n) → {0,1,2}^{T_n} and its inverse.
TernaryFunction psi(const ComponentIndex& t, const Bits& downset);
Bits psi_inverse(const ComponentIndex& t, const TernaryFunction& f);

// The closed-form step map {0,1,2}^{T_{n+1}} → {0,1,2}^{T_n}:
// g(c) = max{f(c⌢0), f(c⌢1), min{f(c⌢2),1}, 2·min{f(c⌢3),1}}.
TernaryFunction q_step(const TernaryFunction& f);

struct SquareReport {
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  std::optional<Bits> first_offender;
};

// Checks q_step ∘ ψ_{n+1} = ψ_n ∘ p̂_n^{n+1} on O(P_{n+1}): exhaustively for
// n = 1, on seeded random down-sets otherwise.
SquareReport verify_square(int n, std::uint64_t samples, std::uint64_t seed);

// Down-sets of a level enumerated componentwise (3 states per 2-chain);
// only levels with at most 2 components^3 manageable (n <= 2).
std::vector<Bits> enumerate_level_ideals(int n);

struct QuotientIsoReport {
  bool holds = false;
  std::string detail;  // failed clause or "ok"
};

// The recognition criterion for induced quotient maps between finite
// distributive lattices: (i) the restriction to join-irreducibles is a
// quotient onto J(T), (ii) join-irreducibles map onto join-irreducibles,
// (iii) the map is a join-preserving quotient. When the clauses hold, the
// Birkhoff squares are built and p = B_T^{-1} ∘ p̂_0 ∘ B_L is verified
// pointwise.
QuotientIsoReport quotient_isomorphism_criterion(const FiniteLattice& l, const FiniteLattice& t,
                                                 const std::vector<int>& p);

}  // namespace ordlim
