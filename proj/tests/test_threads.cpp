#include <doctest.h>

#include "ordlim/rng.hpp"
#include "ordlim/samplers.hpp"
#include "ordlim/ternary.hpp"
#include "ordlim/threads.hpp"

using namespace ordlim;

TEST_CASE("solve_thread on singleton levels returns the unique thread") {
  FiniteSystem sys;
  sys.levels = {{"a"}, {"b"}, {"c"}};
  sys.steps = {{0}, {0}};
  ThreadSolveResult r = solve_thread(sys);
  CHECK(r.entries == std::vector<int>{0, 0, 0});
}

TEST_CASE("solve_thread avoids dead ends where naive greedy fails") {
  FiniteSystem sys;
  sys.levels = {{"a'"}, {"b", "a"}, {"c"}};
  sys.steps = {{0, 0}, {1}};
  CHECK_FALSE(naive_greedy_thread(sys).has_value());
  ThreadSolveResult r = solve_thread(sys);
  CHECK(r.entries == std::vector<int>{0, 1, 0});
  CHECK(r.stabilized[1] == std::vector<int>{1});
}

TEST_CASE("solve_thread reports the empty compatibility set index") {
  FiniteSystem sys;
  sys.levels = {{"a"}, {}, {}};
  sys.steps = {{}, {}};
  CHECK_THROWS_WITH_AS(solve_thread(sys), doctest::Contains("T_1"), Error);
}

TEST_CASE("thread_order compares coordinatewise") {
  PThread x{{0, 0}};         // words "0", "00"
  CHECK(thread_order(x, x) == Cmp::equal);

  PThread a{{0, 0}};         // "0", "00"
  PThread b{{1, 4}};         // "1", "10"
  CHECK(thread_order(a, b) == Cmp::less);
  CHECK(thread_order(b, a) == Cmp::greater);

  PThread c{{2, 8}};         // "2", "20"
  CHECK(thread_order(a, c) == Cmp::incomparable);

  PThread bad{{0, 5}};
  CHECK_THROWS_AS(thread_order(a, bad), Error);
  PThread shallow{{0}};
  CHECK_THROWS_AS(thread_order(a, shallow), Error);
}

TEST_CASE("symbolic compare on eventually constant points") {
  CHECK(symbolic_compare(SymbolicPoint::parse("0:0"), SymbolicPoint::parse("1:0")) == Cmp::less);
  CHECK(symbolic_compare(SymbolicPoint::parse(":0"), SymbolicPoint::parse(":0")) == Cmp::equal);
  CHECK(symbolic_compare(SymbolicPoint::parse("2:1"), SymbolicPoint::parse("3:1")) == Cmp::less);
  // A tail of 2 never admits a comparable partner.
  SymbolicPoint w = SymbolicPoint::parse("01:2");
  CHECK(symbolic_compare(w, SymbolicPoint::parse("0:2")) == Cmp::incomparable);
  CHECK(symbolic_compare(w, SymbolicPoint::parse("010:2")) == Cmp::incomparable);
  CHECK(symbolic_compare(w, SymbolicPoint::parse("00:2")) == Cmp::incomparable);
}

TEST_CASE("canonical form strips trailing tail digits") {
  CHECK(SymbolicPoint::parse("0:0") == SymbolicPoint::parse(":0"));
  CHECK(SymbolicPoint::parse("012:2") == SymbolicPoint::parse("01:2"));
  CHECK(SymbolicPoint::parse("012:2").to_string() == "01:2");
  CHECK_THROWS_AS(SymbolicPoint::parse("04:2"), Error);
  CHECK_THROWS_AS(SymbolicPoint::parse("012"), Error);
}

TEST_CASE("isolation of symbolic points") {
  CHECK(is_isolated(SymbolicPoint::parse("012:2")));
  CHECK_FALSE(is_isolated(SymbolicPoint::parse(":0")));   // comparable with 1:0
  CHECK_FALSE(is_isolated(SymbolicPoint::parse("2:0")));  // comparable with 3:0
  CHECK(is_isolated(SymbolicPoint::parse(":3")));
  for (std::uint8_t a = 0; a < 4; ++a) {
    SymbolicPoint w = isolated_dense_witness({a});
    CHECK(is_isolated(w));
    CHECK(w.digit(0) == a);
  }
}

TEST_CASE("ideal threads: validation and bonding") {
  IdealSystem sys(3);
  Bits top(64);
  UniversalLevel l3(3);
  l3.add_down_set(top, 5);
  l3.add_down_set(top, 33);
  IdealThread t = thread_from_top(sys, top);
  validate_ideal_thread(sys, t);
  CHECK(t.depth() == 3);

  IdealThread broken = t;
  broken.coords[0] = Bits(4);
  CHECK_THROWS_AS(validate_ideal_thread(sys, broken), Error);
}

TEST_CASE("ideal sup and inf at depth 2 against small cases") {
  IdealSystem sys(2);
  UniversalLevel l2(2);

  auto principal_thread = [&](std::uint64_t w) {
    Bits top(16);
    l2.add_down_set(top, w);
    return thread_from_top(sys, top);
  };

  IdealThread zero = thread_from_top(sys, Bits(16));
  IdealThread a = principal_thread(1);

  CHECK(ideal_sup(sys, a, zero).coords == a.coords);
  CHECK(ideal_inf(sys, a, zero).coords == zero.coords);
  CHECK(ideal_inf(sys, a, a).coords == a.coords);

  // Principal threads over distinct components join coordinatewise.
  IdealThread b = principal_thread(9);
  IdealThread sup = ideal_sup(sys, a, b);
  CHECK(sup.coords[1] == (a.coords[1] | b.coords[1]));
  validate_ideal_thread(sys, sup);
}

TEST_CASE("ideal threads satisfy the lattice laws") {
  // Exhaustive at depth 1 (81 threads), sampled at depth 2.
  IdealSystem sys1(1);
  std::vector<IdealThread> all1;
  for (const Bits& top : enumerate_level_ideals(1)) all1.push_back(thread_from_top(sys1, top));
  REQUIRE(all1.size() == 9);
  for (const IdealThread& a : all1)
    for (const IdealThread& b : all1) {
      CHECK(ideal_sup(sys1, a, b).coords == ideal_sup(sys1, b, a).coords);
      CHECK(ideal_inf(sys1, a, b).coords == ideal_inf(sys1, b, a).coords);
      CHECK(ideal_sup(sys1, a, ideal_inf(sys1, a, b)).coords == a.coords);
      CHECK(ideal_inf(sys1, a, ideal_sup(sys1, a, b)).coords == a.coords);
      for (const IdealThread& c : all1) {
        CHECK(ideal_sup(sys1, a, ideal_sup(sys1, b, c)).coords ==
              ideal_sup(sys1, ideal_sup(sys1, a, b), c).coords);
        CHECK(ideal_inf(sys1, a, ideal_inf(sys1, b, c)).coords ==
              ideal_inf(sys1, ideal_inf(sys1, a, b), c).coords);
      }
    }

  IdealSystem sys2(2);
  UniversalLevel l2(2);
  Rng rng(59);
  auto random_thread = [&] {
    Bits b(16);
    for (std::uint64_t w = 0; w < 16; ++w)
      if (rng.chance(1, 3)) b.set(w);
    return thread_from_top(sys2, l2.down_closure(b));
  };
  for (int trial = 0; trial < 50; ++trial) {
    IdealThread a = random_thread(), b = random_thread(), c = random_thread();
    CHECK(ideal_sup(sys2, a, b).coords == ideal_sup(sys2, b, a).coords);
    CHECK(ideal_inf(sys2, a, b).coords == ideal_inf(sys2, b, a).coords);
    CHECK(ideal_sup(sys2, a, ideal_sup(sys2, b, c)).coords ==
          ideal_sup(sys2, ideal_sup(sys2, a, b), c).coords);
    CHECK(ideal_inf(sys2, a, ideal_inf(sys2, b, c)).coords ==
          ideal_inf(sys2, ideal_inf(sys2, a, b), c).coords);
    CHECK(ideal_sup(sys2, a, ideal_inf(sys2, a, b)).coords == a.coords);
    CHECK(ideal_inf(sys2, a, ideal_sup(sys2, a, b)).coords == a.coords);
  }
}

TEST_CASE("family suprema are coordinatewise unions of principal threads") {
  IdealSystem sys(2);
  UniversalLevel l2(2);
  Rng rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    // A sampled finite family of principal threads.
    std::vector<IdealThread> family;
    int count = rng.range(1, 6);
    for (int i = 0; i < count; ++i) {
      Bits top(16);
      l2.add_down_set(top, rng.below(16));
      family.push_back(thread_from_top(sys, top));
    }
    IdealThread sup = family.front();
    for (const IdealThread& t : family) sup = ideal_sup(sys, sup, t);
    validate_ideal_thread(sys, sup);
    // Least upper bound: coordinatewise union, below any other upper bound.
    for (int n = 0; n < 2; ++n) {
      Bits expect(sup.coords[n].size());
      for (const IdealThread& t : family) expect |= t.coords[n];
      CHECK(sup.coords[n] == expect);
    }
  }
}

TEST_CASE("lookahead infimum stabilizes on compatible inputs") {
  IdealSystem sys(3);
  UniversalLevel l3(3);
  Bits t1(64), t2(64);
  l3.add_down_set(t1, 1);
  l3.add_down_set(t1, 21);
  l3.add_down_set(t2, 21);
  l3.add_down_set(t2, 33);
  IdealThread a = thread_from_top(sys, t1);
  IdealThread b = thread_from_top(sys, t2);
  IdealThread base = ideal_inf(sys, a, b, 2, 2);
  IdealThread deeper = ideal_inf(sys, a, b, 2, 3);
  // Deeper lookahead can only shrink the depth-2 truncation.
  CHECK(ideal_thread_leq(deeper, base));
}

TEST_CASE("find_atom_below returns an atom below the input") {
  IdealSystem sys(2);
  Bits top = Bits::full(16);
  IdealThread all = thread_from_top(sys, top);
  IdealThread atom = find_atom_below(sys, all);
  validate_ideal_thread(sys, atom);
  CHECK(ideal_thread_leq(atom, all));
  // The deepest coordinate is a single minimal element.
  CHECK(atom.coords[1].count() == 1);
  CHECK_THROWS_AS(find_atom_below(sys, thread_from_top(sys, Bits(16))), Error);

  // An atom maps to itself.
  IdealThread again = find_atom_below(sys, atom);
  CHECK(again.coords == atom.coords);
}

TEST_CASE("principal decomposition reconstructs and is a singleton on principals") {
  IdealSystem sys(2);
  UniversalLevel l2(2);

  Bits top(16);
  l2.add_down_set(top, 1);
  IdealThread principal = thread_from_top(sys, top);
  std::vector<IdealThread> family = principal_decomposition(sys, principal);
  REQUIRE(family.size() == 1);
  CHECK(family[0].coords == principal.coords);

  Bits big(16);
  l2.add_down_set(big, 1);
  l2.add_down_set(big, 9);
  l2.add_down_set(big, 4);
  IdealThread t = thread_from_top(sys, big);
  family = principal_decomposition(sys, t);
  IdealThread acc = thread_from_top(sys, Bits(16));
  for (const IdealThread& u : family) {
    CHECK(is_principal_thread(sys, u));
    CHECK(ideal_thread_leq(u, t));
    for (int n = 0; n < t.depth(); ++n) acc.coords[n] |= u.coords[n];
  }
  CHECK(acc.coords == t.coords);
}

TEST_CASE("induced limit quotient: zero and principal threads") {
  LevelConfig cfg{8};
  IdealSystem sys(3, cfg);

  // Family onto the constant point system at levels 1 and 2.
  PosetPtr pt = FinitePoset::chain(1);
  TargetSystem ts;
  ts.levels = {pt, pt};
  ts.steps = {PosetMap::identity(pt)};
  LevelMapFamily family = build_universal_quotient(ts, cfg);
  REQUIRE(family.indices.size() == 2);
  REQUIRE(family.indices.back() <= 3);

  IdealThread zero = thread_from_top(sys, Bits(64));
  IdealThread image = induced_limit_quotient(family, zero);
  for (const Bits& c : image.coords) CHECK(c.none());

  UniversalLevel l3(3);
  Bits top(64);
  l3.add_down_set(top, 7);
  IdealThread principal = thread_from_top(sys, top);
  image = induced_limit_quotient(family, principal);
  for (const Bits& c : image.coords) CHECK(c.count() == 1);

  // Join preservation on samples.
  Rng rng(13);
  auto random_thread = [&] {
    Bits b(64);
    for (std::uint64_t w = 0; w < 64; ++w)
      if (rng.chance(1, 4)) b.set(w);
    return thread_from_top(sys, l3.down_closure(b));
  };
  for (int trial = 0; trial < 50; ++trial) {
    IdealThread a = random_thread();
    IdealThread b = random_thread();
    IdealThread lhs = induced_limit_quotient(family, ideal_sup(sys, a, b));
    IdealThread rhs_a = induced_limit_quotient(family, a);
    IdealThread rhs_b = induced_limit_quotient(family, b);
    for (std::size_t l = 0; l < lhs.coords.size(); ++l)
      CHECK(lhs.coords[l] == (rhs_a.coords[l] | rhs_b.coords[l]));
  }

  // Bonding compatibility of the image under the induced target steps.
  InducedMap step = InducedMap::make(ts.steps[0]);
  IdealThread a = random_thread();
  IdealThread img = induced_limit_quotient(family, a);
  CHECK(step.apply(img.coords[1]) == img.coords[0]);

  IdealThread shallow;
  shallow.coords = {Bits(4)};
  CHECK_THROWS_AS(induced_limit_quotient(family, shallow), Error);
}

TEST_CASE("induced limit quotient through a nontrivial family") {
  LevelConfig cfg{8};
  TargetSystem ts;
  ts.levels = {level_poset(1, cfg), level_poset(2, cfg)};
  ts.steps = {projection(2, 1, cfg)};
  LevelMapFamily family = build_universal_quotient(ts, cfg);
  REQUIRE(family_squares_commute(family, ts));

  const int depth = family.indices.back();
  IdealSystem sys(depth, cfg);
  UniversalLevel top(depth);
  InducedMap step = InducedMap::make(ts.steps[0]);

  Rng rng(101);
  auto random_thread = [&] {
    Bits b(top.size());
    for (std::uint64_t w = 0; w < top.size(); ++w)
      if (rng.chance(1, 5)) b.set(w);
    return thread_from_top(sys, top.down_closure(b));
  };

  for (int trial = 0; trial < 30; ++trial) {
    IdealThread a = random_thread();
    IdealThread img = induced_limit_quotient(family, a);
    // Image coordinates are down-sets of the targets and bonding-compatible.
    for (std::size_t l = 0; l < img.coords.size(); ++l)
      CHECK(is_down_set(*ts.levels[l], img.coords[l]));
    CHECK(step.apply(img.coords[1]) == img.coords[0]);
    // Joins are preserved.
    IdealThread b = random_thread();
    IdealThread lhs = induced_limit_quotient(family, ideal_sup(sys, a, b));
    IdealThread ra = induced_limit_quotient(family, a);
    IdealThread rb = induced_limit_quotient(family, b);
    for (std::size_t l = 0; l < lhs.coords.size(); ++l)
      CHECK(lhs.coords[l] == (ra.coords[l] | rb.coords[l]));
  }

  // Principal threads map to principal threads.
  Bits single(top.size());
  top.add_down_set(single, 3);
  IdealThread principal = thread_from_top(sys, single);
  REQUIRE(is_principal_thread(sys, principal));
  IdealThread img = induced_limit_quotient(family, principal);
  for (std::size_t l = 0; l < img.coords.size(); ++l)
    CHECK(ts.levels[l]->maximal_in(img.coords[l]).count() == 1);
}
