#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordlim/level.hpp"
#include "ordlim/quotient.hpp"

namespace ordlim {

// A finite-depth inverse system of plain finite sets with consecutive step
// maps (steps[i] : level i+1 → level i). Composite maps are compositions of
// the steps, so the compatibility law holds by construction.
struct FiniteSystem {
  std::vector<std::vector<std::string>> levels;
  std::vector<std::vector<int>> steps;

  void validate() const;
  int depth() const { return static_cast<int>(levels.size()); }
};

struct ThreadSolveResult {
  std::vector<int> entries;                 // one element index per level
  std::vector<std::vector<int>> stabilized; // V_k: prefixes of full-depth threads
};

// Thread selection: computes the stabilized sets V_k (images of the deepest
// compatibility set under truncation) and walks through them, so dead-end
// elements are never entered. Reports the index of the first empty
// compatibility set when there is one (an empty level).
ThreadSolveResult solve_thread(const FiniteSystem& sys);

// Foil for tests: picks at each level the first preimage of the previous
// entry, without lookahead; returns nullopt when it dead-ends.
std::optional<std::vector<int>> naive_greedy_thread(const FiniteSystem& sys);

enum class Cmp { less, greater, equal, incomparable };
std::string cmp_name(Cmp c);

// A finite-depth thread through the P-system; entry n-1 is a word of P_n.
struct PThread {
  std::vector<std::uint64_t> entries;

  int depth() const { return static_cast<int>(entries.size()); }
};

void validate_p_thread(const PThread& t);
// Coordinatewise comparison at every level; requires equal depths.
Cmp thread_order(const PThread& a, const PThread& b);

// An eventually constant point prefix⌢tail^ω of the limit. Canonical form:
// the prefix never ends with the tail digit.
class SymbolicPoint {
 public:
  SymbolicPoint(std::vector<std::uint8_t> prefix, std::uint8_t tail);
  static SymbolicPoint parse(std::string_view text);  // "digits:tail", e.g. "012:2"

  const std::vector<std::uint8_t>& prefix() const { return prefix_; }
  std::uint8_t tail() const { return tail_; }
  int digit(std::size_t k) const {
    return k < prefix_.size() ? prefix_[k] : static_cast<int>(tail_);
  }
  std::string to_string() const;

  bool operator==(const SymbolicPoint& o) const = default;

 private:
  std::vector<std::uint8_t> prefix_;
  std::uint8_t tail_;
};

// Decides the limit order on eventually constant points by evaluating the
// order clauses over a window one past both prefixes (the constant tails
// make everything beyond it a single comparison).
Cmp symbolic_compare(const SymbolicPoint& x, const SymbolicPoint& y);

// Comparable points differ at exactly one position, so isolation is decided
// by quantifying symbolic_compare over the single-digit flips of x.
bool is_isolated(const SymbolicPoint& x);

// prefix⌢2^ω: an isolated point inside the given cylinder.
SymbolicPoint isolated_dense_witness(const std::vector<std::uint8_t>& cylinder_prefix);

// The inverse system 〈O(P_n), p̂_n^{n+1}〉 truncated at a fixed depth, with
// the levels materialized and the induced bonding maps validated.
class IdealSystem {
 public:
  explicit IdealSystem(int depth, const LevelConfig& cfg = {});

  int depth() const { return depth_; }
  const FinitePoset& level(int n) const { return *levels_[n - 1]; }  // P_n, 1-based
  const PosetPtr& level_ptr(int n) const { return levels_[n - 1]; }
  const InducedMap& step(int n) const { return induced_[n - 1]; }    // p̂_n^{n+1}

  // p̂_to^from image of a down-set of P_from (to <= from).
  Bits project(int from, int to, const Bits& downset) const;

 private:
  int depth_;
  std::vector<PosetPtr> levels_;
  std::vector<InducedMap> induced_;
};

// A bonding-compatible sequence of down-sets, coords[n-1] over P_n.
struct IdealThread {
  std::vector<Bits> coords;

  int depth() const { return static_cast<int>(coords.size()); }
  bool is_zero() const { return coords.empty() || coords.back().none(); }
};

// The unique thread with the given deepest coordinate.
IdealThread thread_from_top(const IdealSystem& sys, const Bits& top);
void validate_ideal_thread(const IdealSystem& sys, const IdealThread& t);
bool ideal_thread_leq(const IdealThread& a, const IdealThread& b);

// Coordinatewise union: the least upper bound.
IdealThread ideal_sup(const IdealSystem& sys, const IdealThread& a, const IdealThread& b);

// Greatest-first greedy infimum among depth-n threads, computed within
// depth-m threads (n <= m <= thread depth) and truncated to depth n. The
// greedy choices collapse to the images of the full projection preimage of
// the deepest common coordinate.
IdealThread ideal_inf(const IdealSystem& sys, const IdealThread& a, const IdealThread& b, int depth_n,
                      int lookahead_m);
// Convenience: lookahead = depth.
IdealThread ideal_inf(const IdealSystem& sys, const IdealThread& a, const IdealThread& b);

// Minimal-first greedy: an atom (at this depth) below a nonzero thread.
// Level-k candidates are the principal images ↓p_k(z) of elements z of the
// deepest coordinate; ties break to the least (cardinality, value).
IdealThread find_atom_below(const IdealSystem& sys, const IdealThread& a);

bool is_principal_thread(const IdealSystem& sys, const IdealThread& t);

// One principal thread per canonical-decomposition part of every coordinate:
// deeper coordinates are decomposition parts chosen through the part system
// (dead ends filtered), shallower ones are images. Their sup reproduces the
// input exactly; duplicates removed.
std::vector<IdealThread> principal_decomposition(const IdealSystem& sys, const IdealThread& a);

// The induced limit quotient determined by a level-map family: coordinate l
// of the image is the f̂_l-image of coordinate i_l. Join-preserving; maps
// principal threads to principal threads.
IdealThread induced_limit_quotient(const LevelMapFamily& family, const IdealThread& a);

}  // namespace ordlim
