#include "ordlim/poset_map.hpp"

#include <numeric>

namespace ordlim {

PosetMap PosetMap::make(PosetPtr domain, PosetPtr codomain, std::vector<int> assignment) {
  if (static_cast<int>(assignment.size()) != domain->size())
    fail("assignment has " + std::to_string(assignment.size()) + " entries for a domain of size " +
         std::to_string(domain->size()));
  for (int v : assignment)
    if (v < 0 || v >= codomain->size()) fail("assignment value " + std::to_string(v) + " outside codomain");
  return PosetMap(std::move(domain), std::move(codomain), std::move(assignment));
}

PosetMap PosetMap::identity(PosetPtr p) {
  std::vector<int> ids(p->size());
  std::iota(ids.begin(), ids.end(), 0);
  return PosetMap(p, p, std::move(ids));
}

PosetMap PosetMap::constant(PosetPtr domain, PosetPtr codomain, int value) {
  std::vector<int> vals(domain->size(), value);
  return make(std::move(domain), std::move(codomain), std::move(vals));
}

MapClassification classify(const PosetMap& f) {
  MapClassification c;
  const FinitePoset& dom = f.domain();
  const FinitePoset& cod = f.codomain();

  c.is_homomorphism = true;
  for (int i = 0; i < dom.size() && c.is_homomorphism; ++i) {
    dom.up(i).for_each([&](std::size_t j) {
      if (c.is_homomorphism && !cod.le(f(i), f(static_cast<int>(j)))) {
        c.is_homomorphism = false;
        c.witness = {i, static_cast<int>(j)};
      }
    });
  }

  std::vector<bool> hit(cod.size(), false);
  for (int i = 0; i < dom.size(); ++i) hit[f(i)] = true;
  c.is_onto = true;
  for (int v = 0; v < cod.size(); ++v) {
    if (!hit[v]) {
      c.is_onto = false;
      if (!c.witness) c.witness = {v, v};
      break;
    }
  }

  if (!c.is_homomorphism || !c.is_onto) return c;

  // Lifting: every strictly related codomain pair must come from a related
  // domain pair. Reflexive pairs lift through any preimage.
  std::vector<Bits> lifted(cod.size(), Bits(static_cast<std::size_t>(cod.size())));
  for (auto [i, j] : dom.strict_pairs()) lifted[f(i)].set(f(j));
  c.is_quotient = true;
  for (auto [p, r] : cod.strict_pairs()) {
    if (!lifted[p].test(r)) {
      c.is_quotient = false;
      c.witness = {p, r};
      break;
    }
  }
  return c;
}

PosetMap compose(const PosetMap& g, const PosetMap& f) {
  if (f.codomain_ptr() != g.domain_ptr() && !f.codomain().equals(g.domain()))
    fail("compose: codomain of the inner map differs from domain of the outer map");
  std::vector<int> vals(f.domain().size());
  for (int i = 0; i < f.domain().size(); ++i) vals[i] = g(f(i));
  return PosetMap::make(f.domain_ptr(), g.codomain_ptr(), std::move(vals));
}

}  // namespace ordlim
