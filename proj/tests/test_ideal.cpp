#include <doctest.h>

#include <set>

#include "ordlim/enumerate.hpp"
#include "ordlim/ideal.hpp"
#include "ordlim/level.hpp"
#include "ordlim/rng.hpp"
#include "ordlim/samplers.hpp"

using namespace ordlim;

TEST_CASE("down-set counts for chains, antichains and the first level") {
  CHECK(IdealLattice::enumerate(FinitePoset::chain(3)).size() == 4);
  CHECK(IdealLattice::enumerate(FinitePoset::antichain(2)).size() == 4);
  // P_1 is two disjoint 2-chains: 3 x 3 down-sets.
  CHECK(IdealLattice::enumerate(level_poset(1)).size() == 9);
}

TEST_CASE("enumeration agrees with the antichain counting oracle") {
  Rng rng(5);
  for (const PosetPtr& p : all_posets_up_to(4))
    CHECK(IdealLattice::enumerate(p).size() == count_antichains(*p));
  for (int trial = 0; trial < 10; ++trial) {
    PosetPtr p = random_poset(rng, rng.range(1, 7), 35);
    CHECK(IdealLattice::enumerate(p).size() == count_antichains(*p));
  }
}

TEST_CASE("ideals are sorted by cardinality then value, bounds enforced") {
  IdealLattice lattice = IdealLattice::enumerate(FinitePoset::antichain(3));
  CHECK(lattice.ideal(0).none());
  CHECK(lattice.ideal(lattice.size() - 1).count() == 3);
  for (std::size_t i = 1; i < lattice.size(); ++i)
    CHECK(canonical_less(lattice.ideal(i - 1), lattice.ideal(i)));
  CHECK_THROWS_AS(IdealLattice::enumerate(FinitePoset::antichain(17)), Error);
}

TEST_CASE("principal down-sets") {
  PosetPtr c3 = FinitePoset::chain(3);
  CHECK(principal(c3, 2).members == Bits::full(3));

  PosetPtr a2 = FinitePoset::antichain(2);
  CHECK(principal(a2, 0).members.to_indices() == std::vector<int>{0});

  PosetPtr v = FinitePoset::make({{"a", "b", "c"}, {{0, 2}, {1, 2}}});
  CHECK(principal(v, 2).members == Bits::full(3));
  CHECK_THROWS_AS(principal(v, 3), Error);

  // Monotone: x <= y iff down(x) within down(y).
  for (const PosetPtr& p : all_posets_of_size(4))
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) CHECK(p->le(x, y) == p->down(x).is_subset_of(p->down(y)));
}

TEST_CASE("canonical decomposition on the V-poset") {
  PosetPtr v = FinitePoset::make({{"a", "b", "c"}, {{0, 2}, {1, 2}}});
  Bits ab(3);
  ab.set(0);
  ab.set(1);
  CHECK(canonical_decomposition(*v, ab) == std::vector<int>{0, 1});
  CHECK(canonical_decomposition(*v, Bits::full(3)) == std::vector<int>{2});
  CHECK(canonical_decomposition(*v, Bits(3)).empty());
}

TEST_CASE("suprema of unions of down-set families") {
  // sup of a union of families equals the join of the suprema.
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    PosetPtr p = random_poset(rng, rng.range(1, 4), 40);
    IdealLattice lattice = IdealLattice::enumerate(p);
    const int m = static_cast<int>(lattice.size());
    auto sup_of = [&](const std::vector<int>& family) {
      Bits u(static_cast<std::size_t>(p->size()));
      for (int i : family) u |= lattice.ideal(i);
      return u;
    };
    for (int t2 = 0; t2 < 10; ++t2) {
      std::vector<int> fam1, fam2, both;
      for (int k = 0; k < 3; ++k) fam1.push_back(static_cast<int>(rng.below(m)));
      for (int k = 0; k < 3; ++k) fam2.push_back(static_cast<int>(rng.below(m)));
      both = fam1;
      both.insert(both.end(), fam2.begin(), fam2.end());
      CHECK(sup_of(both) == (sup_of(fam1) | sup_of(fam2)));
    }
  }
}

TEST_CASE("down-set closure helpers") {
  PosetPtr c3 = FinitePoset::chain(3);
  Bits top(3);
  top.set(2);
  CHECK_FALSE(is_down_set(*c3, top));
  CHECK(down_closure(*c3, top) == Bits::full(3));
}
