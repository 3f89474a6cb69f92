#include <doctest.h>

#include "ordlim/enumerate.hpp"
#include "ordlim/quotient.hpp"
#include "ordlim/rng.hpp"
#include "ordlim/samplers.hpp"

using namespace ordlim;

namespace {

PosetPtr point() { return FinitePoset::chain(1); }

}  // namespace

TEST_CASE("classification of the standard examples") {
  // Constant map from the 2-antichain onto the point: a quotient.
  PosetMap constant = PosetMap::constant(FinitePoset::antichain(2), point(), 0);
  CHECK(classify(constant).is_quotient);

  // Identity: a quotient.
  CHECK(classify(PosetMap::identity(FinitePoset::chain(3))).is_quotient);

  // Bijection from the 2-antichain onto the 2-chain: onto homomorphism but
  // the pair 1 <= 2 has no related preimage pair.
  PosetMap bijection = PosetMap::make(FinitePoset::antichain(2), FinitePoset::chain(2), {0, 1});
  MapClassification c = classify(bijection);
  CHECK(c.is_homomorphism);
  CHECK(c.is_onto);
  CHECK_FALSE(c.is_quotient);
  CHECK(c.witness == std::pair<int, int>{0, 1});

  // Non-homomorphism: chain 2 reversed onto itself.
  PosetMap reversed = PosetMap::make(FinitePoset::chain(2), FinitePoset::chain(2), {1, 0});
  CHECK_FALSE(classify(reversed).is_homomorphism);
}

TEST_CASE("quotients compose") {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    PosetPtr a = random_poset(rng, rng.range(1, 3), 40);
    PosetMap f = random_quotient_onto(rng, a, rng.range(a->size(), 4));
    PosetMap g = random_quotient_onto(rng, f.domain_ptr(), rng.range(f.domain().size(), 6));
    CHECK(classify(f).is_quotient);
    CHECK(classify(g).is_quotient);
    CHECK(classify(compose(f, g)).is_quotient);
  }
}

TEST_CASE("sticks cover counts") {
  SticksCover pt = sticks_cover(point());
  CHECK(pt.components == 1);
  CHECK(pt.map(0) == 0);
  CHECK(pt.map(1) == 0);

  CHECK(sticks_cover(FinitePoset::chain(2)).components == 1);
  // Chain 3 has the strict pairs (1,2), (1,3), (2,3).
  CHECK(sticks_cover(FinitePoset::chain(3)).components == 3);

  for (const PosetPtr& p : all_posets_up_to(4)) {
    SticksCover cover = sticks_cover(p);
    CHECK(cover.components ==
          static_cast<int>(p->strict_pairs().size() + p->isolated_elements().size()));
    CHECK(classify(cover.map).is_quotient);
  }
}

TEST_CASE("amalgamation of points gives two 2-chains") {
  PosetMap f = PosetMap::identity(point());
  Amalgam am = amalgamate(f, f);
  CHECK(am.d->size() == 4);
  CHECK(am.d->two_components().size() == 2);
  PosetMap left = compose(f, compose(am.b_cover.map, am.q));
  PosetMap right = compose(f, compose(am.c_cover.map, am.p));
  CHECK(left.assignment() == right.assignment());
}

TEST_CASE("amalgamation over the point with 2-chains commutes") {
  PosetMap f = PosetMap::constant(FinitePoset::chain(2), point(), 0);
  PosetMap g = PosetMap::constant(FinitePoset::chain(2), point(), 0);
  Amalgam am = amalgamate(f, g);
  CHECK(classify(am.q).is_quotient);
  CHECK(classify(am.p).is_quotient);
  PosetMap left = compose(f, compose(am.b_cover.map, am.q));
  PosetMap right = compose(g, compose(am.c_cover.map, am.p));
  CHECK(left.assignment() == right.assignment());
}

TEST_CASE("amalgamation rejects non-quotients") {
  PosetMap bad = PosetMap::make(FinitePoset::antichain(2), FinitePoset::chain(2), {0, 1});
  CHECK_THROWS_AS(amalgamate(bad, bad), Error);
}

TEST_CASE("the induced map of the antichain collapse does not preserve meets") {
  PosetPtr a2 = FinitePoset::antichain(2);
  PosetMap p = PosetMap::constant(a2, point(), 0);
  InducedMap induced = InducedMap::make(p);

  Bits d1(2), d2(2);
  d1.set(0);
  d2.set(1);
  Bits meet = d1 & d2;  // empty
  CHECK(induced.apply(meet).none());
  CHECK(induced.apply(d1) == Bits::full(1));
  CHECK(induced.apply(d2) == Bits::full(1));

  MeetCriterion mc = meet_preservation_criterion(p);
  CHECK_FALSE(mc.holds);
}

TEST_CASE("the induced map of the identity is the identity") {
  PosetPtr c3 = FinitePoset::chain(3);
  InducedMap induced = InducedMap::make(PosetMap::identity(c3));
  const IdealLattice& lattice = induced.domain_lattice();
  for (std::size_t i = 0; i < lattice.size(); ++i) CHECK(induced.apply(lattice.ideal(i)) == lattice.ideal(i));
}

TEST_CASE("induced maps compose") {
  Rng rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    PosetPtr a = random_poset(rng, rng.range(1, 3), 40);
    PosetMap q = random_quotient_onto(rng, a, rng.range(a->size(), 4));
    PosetMap p = random_quotient_onto(rng, q.domain_ptr(), rng.range(q.domain().size(), 5));
    InducedMap ip = InducedMap::make(p);
    InducedMap iq = InducedMap::make(q);
    InducedMap icomp = InducedMap::make(compose(q, p));
    const IdealLattice& lattice = ip.domain_lattice();
    for (std::size_t i = 0; i < lattice.size(); ++i)
      CHECK(icomp.apply(lattice.ideal(i)) == iq.apply(ip.apply(lattice.ideal(i))));
  }
}

TEST_CASE("induced maps preserve joins and are value-independent of the representation") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    PosetPtr a = random_poset(rng, rng.range(1, 3), 40);
    PosetMap p = random_quotient_onto(rng, a, rng.range(a->size(), 5));
    InducedMap induced = InducedMap::make(p);
    const IdealLattice& lattice = induced.domain_lattice();
    for (std::size_t i = 0; i < lattice.size(); ++i)
      for (std::size_t j = 0; j < lattice.size(); ++j)
        CHECK(induced.apply(lattice.ideal(i) | lattice.ideal(j)) ==
              (induced.apply(lattice.ideal(i)) | induced.apply(lattice.ideal(j))));
    // Applying through an arbitrary union-of-principals representation gives
    // the same value as the canonical decomposition.
    const FinitePoset& q = p.domain();
    for (int t2 = 0; t2 < 10; ++t2) {
      Bits u(static_cast<std::size_t>(q.size()));
      Bits expect(static_cast<std::size_t>(p.codomain().size()));
      for (int x = 0; x < q.size(); ++x)
        if (rng.chance(1, 2)) {
          u |= q.down(x);
          expect |= p.codomain().down(p(x));
        }
      if (u.none()) continue;
      CHECK(induced.apply(u) == expect);
    }
  }
}

TEST_CASE("meet criterion examples") {
  CHECK(meet_preservation_criterion(PosetMap::identity(FinitePoset::chain(3))).holds);
  // Chain 2 collapsed to the point: meets are preserved.
  PosetMap collapse = PosetMap::constant(FinitePoset::chain(2), point(), 0);
  CHECK(meet_preservation_criterion(collapse).holds);
  CHECK_THROWS_AS(meet_preservation_criterion(
                      PosetMap::make(FinitePoset::antichain(2), FinitePoset::chain(2), {0, 1})),
                  Error);
}

TEST_CASE("induce rejects non-quotients") {
  PosetMap bad = PosetMap::make(FinitePoset::antichain(2), FinitePoset::chain(2), {0, 1});
  CHECK_THROWS_AS(InducedMap::make(bad), Error);
}

TEST_CASE("the quotient enumerator agrees with a direct filter on tiny posets") {
  std::vector<PosetPtr> reps = all_posets_up_to(3);
  for (const PosetPtr& q : reps) {
    for (const PosetPtr& p : reps) {
      if (p->size() > q->size()) continue;
      std::size_t direct = 0;
      std::vector<int> vals(q->size(), 0);
      const std::uint64_t total = [&] {
        std::uint64_t t = 1;
        for (int i = 0; i < q->size(); ++i) t *= static_cast<std::uint64_t>(p->size());
        return t;
      }();
      for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (int i = 0; i < q->size(); ++i) {
          vals[i] = static_cast<int>(c % p->size());
          c /= p->size();
        }
        if (classify(PosetMap::make(q, p, vals)).is_quotient) ++direct;
      }
      CHECK(all_quotient_assignments(*q, *p).size() == direct);
    }
  }
}
