#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ordlim/poset.hpp"

namespace ordlim {

// Result of classifying a map between finite posets. `witness` carries the
// first failing evidence in element order: a domain pair for a broken
// homomorphism, (c, c) for a missed codomain element, or the codomain pair
// that has no related preimage pair.
struct MapClassification {
  bool is_homomorphism = false;
  bool is_onto = false;
  bool is_quotient = false;
  std::optional<std::pair<int, int>> witness;
};

// A total function between finite posets, by domain index.
class PosetMap {
 public:
  static PosetMap make(PosetPtr domain, PosetPtr codomain, std::vector<int> assignment);
  static PosetMap identity(PosetPtr p);
  static PosetMap constant(PosetPtr domain, PosetPtr codomain, int value);

  const FinitePoset& domain() const { return *domain_; }
  const FinitePoset& codomain() const { return *codomain_; }
  const PosetPtr& domain_ptr() const { return domain_; }
  const PosetPtr& codomain_ptr() const { return codomain_; }

  int operator()(int i) const { return assignment_[i]; }
  const std::vector<int>& assignment() const { return assignment_; }

 private:
  PosetMap(PosetPtr domain, PosetPtr codomain, std::vector<int> assignment)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), assignment_(std::move(assignment)) {}

  PosetPtr domain_;
  PosetPtr codomain_;
  std::vector<int> assignment_;
};

MapClassification classify(const PosetMap& f);

// g ∘ f; requires f's codomain to equal g's domain (structurally).
PosetMap compose(const PosetMap& g, const PosetMap& f);

}  // namespace ordlim
