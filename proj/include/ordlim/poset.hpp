#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordlim/bitset.hpp"
#include "ordlim/error.hpp"

namespace ordlim {

// Raw poset description prior to validation. `pairs` holds (i, j) meaning
// element i <= element j; reflexive pairs may be omitted, but the relation
// must already be antisymmetric and transitive (no closure is inferred).
struct PosetData {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> pairs;
};

// Outcome of checking the poset axioms on a PosetData. Reports the first
// violated axiom together with a witness pair.
struct ValidationReport {
  enum class Violation { none, bad_index, duplicate_labels, reflexivity, antisymmetry, transitivity };

  Violation violation = Violation::none;
  std::pair<int, int> witness{-1, -1};

  bool ok() const { return violation == Violation::none; }
  std::string message() const;
};

ValidationReport validate_poset(const PosetData& data);

class FinitePoset;
using PosetPtr = std::shared_ptr<const FinitePoset>;

// A finite poset over opaque string labels. The full order relation (not its
// Hasse reduction) is kept as dense bit matrices, one row of elements above
// and one below each element, so every query is a bit test. Immutable after
// construction; safe to share across threads.
class FinitePoset {
 public:
  // Applies reflexive closure to `data`, validates the axioms, and builds.
  // Throws Error on violation.
  static PosetPtr make(PosetData data);
  static PosetPtr chain(int n);
  static PosetPtr antichain(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(std::string_view label) const;

  bool le(int i, int j) const { return up_[i].test(j); }
  bool lt(int i, int j) const { return i != j && le(i, j); }
  bool comparable(int i, int j) const { return le(i, j) || le(j, i); }

  const Bits& up(int i) const { return up_[i]; }      // {j : i <= j}
  const Bits& down(int i) const { return down_[i]; }  // {j : j <= i}

  bool isolated(int i) const { return up_[i].count() == 1 && down_[i].count() == 1; }
  std::vector<int> isolated_elements() const;

  // Strict pairs (i, j) with i < j, in lexicographic (i, j) order.
  std::vector<std::pair<int, int>> strict_pairs() const;
  // All related pairs including reflexive ones, lexicographically.
  std::vector<std::pair<int, int>> relation_pairs() const;

  // Elements of `subset` that have nothing of `subset` strictly above them.
  Bits maximal_in(const Bits& subset) const;
  Bits minimal_in(const Bits& subset) const;

  // The literal predicate: x < y, no z < x, no z > y.
  bool is_two_component(int x, int y) const;
  // Pairs (x, y), x < y, where x and y are comparable only with each other;
  // sorted by lower endpoint.
  std::vector<std::pair<int, int>> two_components() const;

  // Transitive reduction, for DOT export.
  std::vector<std::pair<int, int>> hasse_edges() const;

  bool equals(const FinitePoset& o) const;

 private:
  FinitePoset(std::vector<std::string> labels, std::vector<Bits> up, std::vector<Bits> down)
      : labels_(std::move(labels)), up_(std::move(up)), down_(std::move(down)) {}

  std::vector<std::string> labels_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
};

// Linear sum and disjoint union. Inputs are relabeled to disjoint copies
// ("x@0", "x@1") regardless of overlap.
PosetPtr linear_sum(const FinitePoset& a, const FinitePoset& b);
PosetPtr disjoint_union(const FinitePoset& a, const FinitePoset& b);

// Brute-force isomorphism test over degree-compatible bijections.
// Rejects inputs larger than 10 elements.
bool isomorphic(const FinitePoset& a, const FinitePoset& b);

}  // namespace ordlim
