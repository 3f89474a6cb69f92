#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordlim/bitset.hpp"
#include "ordlim/poset_map.hpp"

namespace ordlim {

// Levels P_n are built on request up to this bound; the default is
// deliberately small and overridable per call (CLI --depth).
struct LevelConfig {
  int depth_bound = 6;
};

// Dense FinitePoset materialization of a level stops here (P_6 has 4096
// elements); deeper levels are only handled through the implicit word API.
inline constexpr int kMaterializeBound = 6;
// Hard cap on implicit levels (assignment vectors of 4^n entries).
inline constexpr int kLevelHardBound = 12;

// Level n of the universal sequence: words over {0,1,2,3} of length n in
// lexicographic order. A word is its base-4 numeral with coordinate 0 as the
// most significant digit, so truncation to k coordinates is a right shift by
// 2(n-k). Two distinct words are comparable iff they differ at exactly one
// position: at the last 2/3 position (2 below 3) when everything after it is
// 0/1, or at position 0 (0 below 1) for all-0/1 words. Hence every element
// has exactly one comparable partner and P_n is a disjoint union of
// 2-chains.
class UniversalLevel {
 public:
  explicit UniversalLevel(int n);

  int depth() const { return n_; }
  std::uint64_t size() const { return std::uint64_t(1) << (2 * n_); }
  std::uint64_t component_count() const { return size() / 2; }

  int digit(std::uint64_t w, int pos) const { return static_cast<int>((w >> (2 * (n_ - 1 - pos))) & 3); }
  std::string word(std::uint64_t w) const;
  std::optional<std::uint64_t> parse_word(std::string_view s) const;

  bool le(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t partner(std::uint64_t x) const;
  bool lower_of_component(std::uint64_t x) const;

  // ↓w within this level: {w} for a lower endpoint, {partner, w} otherwise.
  void add_down_set(Bits& dst, std::uint64_t w) const;

  // Pairs (x, y) with x < y, in lexicographic order of the lower endpoint.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> two_components() const;

  bool is_down_set(const Bits& members) const;
  Bits down_closure(const Bits& subset) const;
  // Maximal elements of a down-set, ascending.
  std::vector<std::uint64_t> maximal_of(const Bits& downset) const;

 private:
  int n_;
};

// Materialized FinitePoset for level n (labels are the words). Cached and
// shared; population is mutex-guarded, later lookups hit the cache.
PosetPtr level_poset(int n, const LevelConfig& cfg = {});

// p_k^n : P_n → P_k as a PosetMap (materialized levels).
PosetMap projection(int n, int k, const LevelConfig& cfg = {});

// A map from level `level` into a finite poset, one value per word.
struct LevelMap {
  int level = 0;
  PosetPtr codomain;
  std::vector<std::int32_t> values;

  std::int32_t operator()(std::uint64_t w) const { return values[w]; }
  MapClassification classify() const;
  // this ∘ p_level^m.
  LevelMap after_projection(int m) const;
};

// p̂ of a level map applied to a down-set of its level.
Bits apply_level_induced(const LevelMap& f, const Bits& downset);
// p̂_k^n between levels, applied to a down-set of P_n.
Bits project_level_ideal(int n, const Bits& downset, int k);
// (p_k^n)^{-1} of a subset of P_k.
Bits level_point_preimage(int n, int k, const Bits& subset);

struct ExtensionResult {
  int m = 0;
  LevelMap g;
};

// Absorption instance: for a quotient p : H → P_k returns the least m > k
// with 2^(m-k-1) > |{(x,y) : x <= y in H}| and g : P_m → H assembled
// fiberwise by the classification rules, so that p ∘ g = p_k^m.
ExtensionResult solve_extension(const PosetMap& p, int k, const LevelConfig& cfg = {});
bool extension_commutes(const PosetMap& p, int k, const ExtensionResult& r);

// Extension instance: for quotients f : P_k → A (level map) and h : T → A,
// the least feasible m > k and g : P_m → T with h ∘ g = f ∘ p_k^m. Each
// fiber of P_m over a 2-component of P_k is routed into h^{-1} of the
// component's f-image by the same rules (or sticks-style when the image
// collapses to a point).
ExtensionResult extend_level_map(const LevelMap& f, const PosetMap& h, const LevelConfig& cfg = {});

struct WitnessU {
  int n = 0;
  LevelMap map;
};

// Cofinality witness: least n with 2·4^(n-1) >= the sticks-cover count of x,
// components routed per the cover and surplus components collapsed onto the
// first element of x.
WitnessU witness_u(PosetPtr x, const LevelConfig& cfg = {});

// Recovers h : P_i → L from a table constant on rank-i cylinders. The table
// has 4^R entries for some R >= i; rejects tables that are not constant per
// cylinder, not onto, or do not realize a quotient.
LevelMap factor_through_level(const std::vector<std::int32_t>& cylinder_table, PosetPtr codomain, int i,
                              const LevelConfig& cfg = {});

// A finite target system H_1 <- H_2 <- ... with quotient bonding maps
// (steps[i] : levels[i+1] → levels[i]).
struct TargetSystem {
  std::vector<PosetPtr> levels;
  std::vector<PosetMap> steps;

  void validate() const;
};

struct LevelMapFamily {
  std::vector<int> indices;   // i_1 < i_2 < ...
  std::vector<LevelMap> maps; // maps[l] : P_{indices[l]} → targets.levels[l]
};

// f_1 from the cofinality witness, then one extension step per bonding map;
// every square h_k∘f_{k+1} = f_k∘p commutes.
LevelMapFamily build_universal_quotient(const TargetSystem& targets, const LevelConfig& cfg = {});
bool family_squares_commute(const LevelMapFamily& family, const TargetSystem& targets);

struct LiftResult {
  int level = 0;
  LevelMap map;
};

// Given f = t ∘ p_{i1} onto A and a quotient g : B → A, a deeper level i2
// and l : P_{i2} → B with g ∘ l = t ∘ p_{i1}^{i2}.
LiftResult lift_through_quotient(const LevelMap& t, const PosetMap& g, const LevelConfig& cfg = {});

}  // namespace ordlim
