#include <doctest.h>

#include "ordlim/enumerate.hpp"
#include "ordlim/poset.hpp"
#include "ordlim/rng.hpp"
#include "ordlim/samplers.hpp"

using namespace ordlim;

namespace {

PosetPtr vee() {
  // a <= c, b <= c
  return FinitePoset::make({{"a", "b", "c"}, {{0, 2}, {1, 2}}});
}

}  // namespace

TEST_CASE("validation reports the first violated axiom with a witness") {
  PosetData chain3{{"1", "2", "3"}, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {0, 2}}};
  CHECK(validate_poset(chain3).ok());

  PosetData antisym{{"a", "b"}, {{0, 0}, {1, 1}, {0, 1}, {1, 0}}};
  ValidationReport r = validate_poset(antisym);
  CHECK(r.violation == ValidationReport::Violation::antisymmetry);
  CHECK(r.witness == std::pair<int, int>{0, 1});

  PosetData transitivity{{"a", "b", "c"}, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}}};
  r = validate_poset(transitivity);
  CHECK(r.violation == ValidationReport::Violation::transitivity);
  CHECK(r.witness == std::pair<int, int>{0, 2});

  PosetData dup{{"a", "a"}, {}};
  CHECK(validate_poset(dup).violation == ValidationReport::Violation::duplicate_labels);

  PosetData missing_reflexive{{"a"}, {}};
  CHECK(validate_poset(missing_reflexive).violation == ValidationReport::Violation::reflexivity);
}

TEST_CASE("chains and antichains") {
  PosetPtr c2 = FinitePoset::chain(2);
  CHECK(c2->size() == 2);
  CHECK(c2->relation_pairs().size() == 3);

  PosetPtr a2 = FinitePoset::antichain(2);
  CHECK(a2->size() == 2);
  CHECK(a2->relation_pairs().size() == 2);

  CHECK(isomorphic(*FinitePoset::chain(1), *FinitePoset::antichain(1)));
  CHECK_THROWS_AS(FinitePoset::chain(0), Error);
  CHECK_THROWS_AS(FinitePoset::antichain(0), Error);
}

TEST_CASE("linear sum and disjoint union match the arithmetic of chains") {
  CHECK(isomorphic(*linear_sum(*FinitePoset::chain(2), *FinitePoset::chain(2)), *FinitePoset::chain(4)));
  CHECK(isomorphic(*disjoint_union(*FinitePoset::antichain(2), *FinitePoset::antichain(2)),
                   *FinitePoset::antichain(4)));
  CHECK(isomorphic(*linear_sum(*FinitePoset::chain(1), *FinitePoset::chain(1)), *FinitePoset::chain(2)));
}

TEST_CASE("linear sum associativity and disjoint union commutativity up to isomorphism") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    PosetPtr a = random_poset(rng, rng.range(1, 3), 40);
    PosetPtr b = random_poset(rng, rng.range(1, 3), 40);
    PosetPtr c = random_poset(rng, rng.range(1, 3), 40);
    CHECK(isomorphic(*linear_sum(*linear_sum(*a, *b), *c), *linear_sum(*a, *linear_sum(*b, *c))));
    CHECK(isomorphic(*disjoint_union(*a, *b), *disjoint_union(*b, *a)));
  }
}

TEST_CASE("maximal elements") {
  PosetPtr c3 = FinitePoset::chain(3);
  CHECK(c3->maximal_in(Bits::full(3)).to_indices() == std::vector<int>{2});

  PosetPtr a3 = FinitePoset::antichain(3);
  CHECK(a3->maximal_in(Bits::full(3)).count() == 3);

  PosetPtr v = vee();
  Bits ab(3);
  ab.set(0);
  ab.set(1);
  CHECK(v->maximal_in(ab).to_indices() == std::vector<int>{0, 1});
}

TEST_CASE("maximal elements dominate the subset and form an antichain") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    PosetPtr p = random_poset(rng, rng.range(1, 6), 40);
    Bits subset(static_cast<std::size_t>(p->size()));
    for (int i = 0; i < p->size(); ++i)
      if (rng.chance(1, 2)) subset.set(i);
    Bits maxima = p->maximal_in(subset);
    std::vector<int> ms = maxima.to_indices();
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = i + 1; j < ms.size(); ++j) CHECK_FALSE(p->comparable(ms[i], ms[j]));
    subset.for_each([&](std::size_t q) {
      bool dominated = false;
      for (int m : ms)
        if (p->le(static_cast<int>(q), m)) dominated = true;
      CHECK(dominated);
    });
  }
}

TEST_CASE("the literal 2-component predicate vs the connected reading") {
  PosetPtr c2 = FinitePoset::chain(2);
  CHECK(c2->is_two_component(0, 1));
  CHECK(c2->two_components() == std::vector<std::pair<int, int>>{{0, 1}});

  PosetPtr two_sticks = disjoint_union(*FinitePoset::chain(2), *FinitePoset::chain(2));
  CHECK(two_sticks->two_components().size() == 2);

  // In the 3-chain the literal predicate admits (1, 3) although the pair is
  // not a connected block; the connected reading returns nothing.
  PosetPtr c3 = FinitePoset::chain(3);
  CHECK(c3->is_two_component(0, 2));
  CHECK_FALSE(c3->is_two_component(0, 1));
  CHECK(c3->two_components().empty());
}

TEST_CASE("isomorphism is an equivalence relation on samples and bounded") {
  Rng rng(3);
  std::vector<PosetPtr> sample;
  for (int i = 0; i < 8; ++i) sample.push_back(random_poset(rng, rng.range(1, 5), 40));
  for (const auto& a : sample) CHECK(isomorphic(*a, *a));
  for (const auto& a : sample)
    for (const auto& b : sample) {
      bool ab = isomorphic(*a, *b);
      CHECK(ab == isomorphic(*b, *a));
      if (ab)
        for (const auto& c : sample)
          if (isomorphic(*b, *c)) CHECK(isomorphic(*a, *c));
    }
  CHECK_THROWS_AS(isomorphic(*FinitePoset::chain(11), *FinitePoset::chain(11)), Error);
}

TEST_CASE("poset enumeration matches the known class counts") {
  CHECK(all_posets_of_size(1).size() == 1);
  CHECK(all_posets_of_size(2).size() == 2);
  CHECK(all_posets_of_size(3).size() == 5);
  CHECK(all_posets_of_size(4).size() == 16);
  CHECK(all_posets_of_size(5).size() == 63);
  for (const PosetPtr& p : all_posets_of_size(4))
    CHECK(validate_poset({p->labels(), p->relation_pairs()}).ok());
}

TEST_CASE("hasse edges are the transitive reduction") {
  PosetPtr c3 = FinitePoset::chain(3);
  CHECK(c3->hasse_edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}
