#include "ordlim/lattice.hpp"

#include <algorithm>

namespace ordlim {

FiniteLattice::FiniteLattice(PosetPtr carrier, std::vector<int> join, std::vector<int> meet)
    : carrier_(std::move(carrier)), join_(std::move(join)), meet_(std::move(meet)) {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(carrier_->down(i).count()) == n) one_ = i;
    if (static_cast<int>(carrier_->up(i).count()) == n) zero_ = i;
  }
  if (zero_ < 0 || one_ < 0) fail("lattice carrier lacks a least or greatest element");
  check_laws();
}

void FiniteLattice::check_laws() const {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (join(i, j) != join(j, i) || meet(i, j) != meet(j, i)) fail("lattice tables not commutative");
      if (join(i, meet(i, j)) != i || meet(i, join(i, j)) != i) fail("lattice absorption laws fail");
      bool le = carrier_->le(i, j);
      if (le != (join(i, j) == j)) fail("lattice tables inconsistent with the order");
    }
    if (join(i, i) != i || meet(i, i) != i) fail("lattice tables not idempotent");
  }
  if (n <= 128) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          if (join(i, join(j, k)) != join(join(i, j), k)) fail("join not associative");
          if (meet(i, meet(j, k)) != meet(meet(i, j), k)) fail("meet not associative");
        }
  }
}

FiniteLattice FiniteLattice::from_poset(PosetPtr carrier) {
  const int n = carrier->size();
  std::vector<int> join(static_cast<std::size_t>(n) * n, -1);
  std::vector<int> meet(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Bits ub = carrier->up(i) & carrier->up(j);
      Bits lub = carrier->minimal_in(ub);
      if (lub.count() != 1)
        fail("not a lattice: elements " + std::to_string(i) + " and " + std::to_string(j) +
             " lack a supremum");
      Bits lb = carrier->down(i) & carrier->down(j);
      Bits glb = carrier->maximal_in(lb);
      if (glb.count() != 1)
        fail("not a lattice: elements " + std::to_string(i) + " and " + std::to_string(j) +
             " lack an infimum");
      join[static_cast<std::size_t>(i) * n + j] = lub.to_indices()[0];
      meet[static_cast<std::size_t>(i) * n + j] = glb.to_indices()[0];
    }
  }
  return FiniteLattice(std::move(carrier), std::move(join), std::move(meet));
}

FiniteLattice FiniteLattice::from_ideals(const IdealLattice& ideals) {
  const int n = static_cast<int>(ideals.size());
  PosetPtr carrier = ideals.carrier();
  std::vector<int> join(static_cast<std::size_t>(n) * n);
  std::vector<int> meet(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      join[static_cast<std::size_t>(i) * n + j] = ideals.join(i, j);
      meet[static_cast<std::size_t>(i) * n + j] = ideals.meet(i, j);
    }
  return FiniteLattice(std::move(carrier), std::move(join), std::move(meet));
}

std::optional<std::array<int, 3>> FiniteLattice::distributivity_violation() const {
  const int n = size();
  if (n > 10000) fail("distributivity check bounded to 10^4 elements");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return std::array<int, 3>{x, y, z};
  return std::nullopt;
}

std::vector<int> FiniteLattice::join_irreducibles() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x) {
    if (x == zero_) continue;
    bool irreducible = true;
    for (int a = 0; a < size() && irreducible; ++a)
      for (int b = a + 1; b < size() && irreducible; ++b)
        if (a != x && b != x && join(a, b) == x) irreducible = false;
    if (irreducible) out.push_back(x);
  }
  return out;
}

PosetPtr FiniteLattice::induced_subposet(const std::vector<int>& elements) const {
  PosetData data;
  for (int e : elements) data.labels.push_back(carrier_->label(e));
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j)
      if (i != j && carrier_->le(elements[i], elements[j]))
        data.pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return FinitePoset::make(std::move(data));
}

std::vector<int> FiniteLattice::atoms() const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a) {
    if (a == zero_) continue;
    // a covers zero: nothing strictly between.
    Bits below = carrier_->down(a);
    if (below.count() == 2) out.push_back(a);
  }
  return out;
}

bool FiniteLattice::is_atomic() const {
  std::vector<int> at = atoms();
  for (int x = 0; x < size(); ++x) {
    if (x == zero_) continue;
    bool dominated = false;
    for (int a : at)
      if (carrier_->le(a, x)) {
        dominated = true;
        break;
      }
    if (!dominated) return false;
  }
  return true;
}

BirkhoffResult birkhoff_eta(const FiniteLattice& lattice) {
  if (auto triple = lattice.distributivity_violation()) {
    auto [x, y, z] = *triple;
    fail("birkhoff: lattice not distributive; x∧(y∨z) != (x∧y)∨(x∧z) at (" + std::to_string(x) + ", " +
         std::to_string(y) + ", " + std::to_string(z) + ")");
  }
  std::vector<int> jelems = lattice.join_irreducibles();
  PosetPtr jposet = lattice.induced_subposet(jelems);
  IdealLattice ideals = IdealLattice::enumerate(jposet, jposet->size());

  std::vector<int> eta(lattice.size());
  for (int a = 0; a < lattice.size(); ++a) {
    Bits members(jelems.size());
    for (std::size_t k = 0; k < jelems.size(); ++k)
      if (lattice.carrier().le(jelems[k], a)) members.set(k);
    eta[a] = ideals.index_of(members);
  }

  bool iso = lattice.size() == static_cast<int>(ideals.size());
  std::vector<bool> hit(ideals.size(), false);
  for (int a = 0; a < lattice.size() && iso; ++a) {
    if (hit[eta[a]]) iso = false;
    hit[eta[a]] = true;
  }
  for (int a = 0; a < lattice.size() && iso; ++a)
    for (int b = 0; b < lattice.size() && iso; ++b)
      if (lattice.carrier().le(a, b) != ideals.le(eta[a], eta[b])) iso = false;

  return BirkhoffResult{std::move(jposet), std::move(jelems), std::move(ideals), std::move(eta), iso};
}

PosetMap principal_embedding(PosetPtr p, const IdealLattice& ideals) {
  if (!ideals.parent().equals(*p)) fail("principal_embedding: lattice belongs to a different poset");
  PosetPtr carrier = ideals.carrier();
  std::vector<int> vals(p->size());
  for (int x = 0; x < p->size(); ++x) vals[x] = ideals.index_of(p->down(x));
  return PosetMap::make(std::move(p), std::move(carrier), std::move(vals));
}

}  // namespace ordlim
