#include "ordlim/ternary.hpp"

#include <algorithm>

#include "ordlim/quotient.hpp"
#include "ordlim/rng.hpp"

namespace ordlim {

ComponentIndex::ComponentIndex(int n) : n_(n) {
  if (n < 1 || n > kLevelHardBound) fail("component index depth outside supported range");
  components_.resize(size());
  for (std::uint64_t rank = 0; rank < size(); ++rank) {
    // Digits of the address, most significant first.
    std::uint64_t lo = 0, hi = 0;
    for (int pos = 0; pos < n_; ++pos) {
      int d = static_cast<int>((rank >> (2 * (n_ - 1 - pos))) & 3);
      if (pos == 0) {
        // 0 addresses the component {0,1}, 1 addresses {2,3}.
        lo = (d == 0) ? 0 : 2;
        hi = (d == 0) ? 1 : 3;
      } else {
        switch (d) {
          case 0:
          case 1:
            lo = (lo << 2) | static_cast<std::uint64_t>(d);
            hi = (hi << 2) | static_cast<std::uint64_t>(d);
            break;
          case 2:
            hi = (lo << 2) | 3;
            lo = (lo << 2) | 2;
            break;
          default:  // 3
            lo = (hi << 2) | 2;
            hi = (hi << 2) | 3;
            break;
        }
      }
    }
    components_[rank] = {lo, hi};
  }
}

std::string ComponentIndex::word(std::uint64_t rank) const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int pos = 0; pos < n_; ++pos)
    s[pos] = static_cast<char>('0' + ((rank >> (2 * (n_ - 1 - pos))) & 3));
  return s;
}

std::optional<std::uint64_t> ComponentIndex::parse_word(std::string_view s) const {
  if (static_cast<int>(s.size()) != n_) return std::nullopt;
  if (s[0] != '0' && s[0] != '1') return std::nullopt;
  std::uint64_t rank = 0;
  for (char c : s) {
    if (c < '0' || c > '3') return std::nullopt;
    rank = (rank << 2) | static_cast<std::uint64_t>(c - '0');
  }
  return rank;
}

std::pair<std::uint64_t, std::uint64_t> ComponentIndex::component(std::uint64_t rank) const {
  if (rank >= size()) fail("component rank out of range");
  return components_[rank];
}

TernaryFunction ternary_zero(int n) {
  ComponentIndex t(n);
  return TernaryFunction{n, std::vector<std::uint8_t>(t.size(), 0)};
}

TernaryFunction ternary_join(const TernaryFunction& f, const TernaryFunction& g) {
  if (f.n != g.n) fail("ternary join: depth mismatch");
  TernaryFunction out = f;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = std::max(f.values[i], g.values[i]);
  return out;
}

TernaryFunction ternary_meet(const TernaryFunction& f, const TernaryFunction& g) {
  if (f.n != g.n) fail("ternary meet: depth mismatch");
  TernaryFunction out = f;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = std::min(f.values[i], g.values[i]);
  return out;
}

bool ternary_le(const TernaryFunction& f, const TernaryFunction& g) {
  if (f.n != g.n) fail("ternary order: depth mismatch");
  for (std::size_t i = 0; i < f.values.size(); ++i)
    if (f.values[i] > g.values[i]) return false;
  return true;
}

bool ternary_join_irreducible(const TernaryFunction& f) {
  int nonzero = 0;
  for (auto v : f.values)
    if (v) ++nonzero;
  return nonzero == 1;
}

TernaryFunction psi(const ComponentIndex& t, const Bits& downset) {
  TernaryFunction out{t.depth(), std::vector<std::uint8_t>(t.size(), 0)};
  for (std::uint64_t rank = 0; rank < t.size(); ++rank) {
    auto [lo, hi] = t.component(rank);
    if (downset.test(hi))
      out.values[rank] = 2;
    else if (downset.test(lo))
      out.values[rank] = 1;
  }
  return out;
}

Bits psi_inverse(const ComponentIndex& t, const TernaryFunction& f) {
  if (f.n != t.depth() || f.values.size() != t.size()) fail("psi_inverse: function does not match T_n");
  Bits out(std::size_t(1) << (2 * t.depth()));
  for (std::uint64_t rank = 0; rank < t.size(); ++rank) {
    auto [lo, hi] = t.component(rank);
    if (f.values[rank] >= 1) out.set(lo);
    if (f.values[rank] == 2) out.set(hi);
  }
  return out;
}

TernaryFunction q_step(const TernaryFunction& f) {
  if (f.n < 2) fail("q_step: needs depth at least 2");
  TernaryFunction out = ternary_zero(f.n - 1);
  for (std::uint64_t c = 0; c < out.values.size(); ++c) {
    std::uint8_t v0 = f.values[(c << 2) | 0];
    std::uint8_t v1 = f.values[(c << 2) | 1];
    std::uint8_t v2 = std::min<std::uint8_t>(f.values[(c << 2) | 2], 1);
    std::uint8_t v3 = static_cast<std::uint8_t>(2 * std::min<std::uint8_t>(f.values[(c << 2) | 3], 1));
    out.values[c] = std::max(std::max(v0, v1), std::max(v2, v3));
  }
  return out;
}

std::vector<Bits> enumerate_level_ideals(int n) {
  if (n > 2) fail("exhaustive level ideal enumeration limited to depth 2");
  UniversalLevel lvl(n);
  auto comps = lvl.two_components();
  std::vector<Bits> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < comps.size(); ++i) total *= 3;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    Bits b(lvl.size());
    std::uint64_t c = code;
    for (auto [lo, hi] : comps) {
      int state = static_cast<int>(c % 3);
      c /= 3;
      if (state >= 1) b.set(lo);
      if (state == 2) b.set(hi);
    }
    out.push_back(std::move(b));
  }
  return out;
}

namespace {

Bits random_level_ideal(const UniversalLevel& lvl, Rng& rng) {
  Bits b(lvl.size());
  for (auto [lo, hi] : lvl.two_components()) {
    switch (rng.below(3)) {
      case 2:
        b.set(hi);
        [[fallthrough]];
      case 1:
        b.set(lo);
        break;
      default:
        break;
    }
  }
  return b;
}

}  // namespace

SquareReport verify_square(int n, std::uint64_t samples, std::uint64_t seed) {
  if (n < 1 || n + 1 > kLevelHardBound) fail("verify_square: depth outside supported range");
  ComponentIndex tn(n), tn1(n + 1);
  UniversalLevel deep(n + 1);
  SquareReport report;

  auto check_one = [&](const Bits& ideal) {
    TernaryFunction via_q = q_step(psi(tn1, ideal));
    TernaryFunction via_hat = psi(tn, project_level_ideal(n + 1, ideal, n));
    ++report.checked;
    if (!(via_q == via_hat)) {
      ++report.mismatches;
      if (!report.first_offender) report.first_offender = ideal;
    }
  };

  if (n == 1) {
    for (const Bits& ideal : enumerate_level_ideals(2)) check_one(ideal);
  } else {
    Rng rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) check_one(random_level_ideal(deep, rng));
  }
  return report;
}

QuotientIsoReport quotient_isomorphism_criterion(const FiniteLattice& l, const FiniteLattice& t,
                                                 const std::vector<int>& p) {
  if (static_cast<int>(p.size()) != l.size()) fail("criterion: map size does not match the lattice");
  for (int v : p)
    if (v < 0 || v >= t.size()) fail("criterion: map value outside the target lattice");
  if (auto triple = l.distributivity_violation()) fail("criterion: source lattice is not distributive");
  if (auto triple = t.distributivity_violation()) fail("criterion: target lattice is not distributive");

  std::vector<int> jl = l.join_irreducibles();
  std::vector<int> jt = t.join_irreducibles();

  // (ii) join-irreducibles map onto join-irreducibles.
  std::vector<int> image;
  for (int x : jl) image.push_back(p[x]);
  std::vector<int> sorted_image = image;
  std::sort(sorted_image.begin(), sorted_image.end());
  sorted_image.erase(std::unique(sorted_image.begin(), sorted_image.end()), sorted_image.end());
  if (sorted_image != jt) return {false, "clause (ii): p(J(L)) != J(T)"};

  // (i) the restriction to join-irreducibles is a quotient map.
  PosetPtr jl_poset = l.induced_subposet(jl);
  PosetPtr jt_poset = t.induced_subposet(jt);
  std::vector<int> restriction(jl.size());
  for (std::size_t i = 0; i < jl.size(); ++i) {
    int target = p[jl[i]];
    restriction[i] =
        static_cast<int>(std::find(jt.begin(), jt.end(), target) - jt.begin());
  }
  PosetMap p0 = PosetMap::make(jl_poset, jt_poset, restriction);
  if (!classify(p0).is_quotient) return {false, "clause (i): restriction to J(L) is not a quotient"};

  // (iii) p is a join-preserving quotient.
  std::vector<int> full(p.begin(), p.end());
  PosetMap pmap = PosetMap::make(l.carrier_ptr(), t.carrier_ptr(), full);
  if (!classify(pmap).is_quotient) return {false, "clause (iii): p is not a quotient"};
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y)
      if (p[l.join(x, y)] != t.join(p[x], p[y])) return {false, "clause (iii): p does not preserve joins"};

  // Birkhoff squares: p = B_T^{-1} ∘ p̂_0 ∘ B_L pointwise.
  BirkhoffResult bl = birkhoff_eta(l);
  BirkhoffResult bt = birkhoff_eta(t);
  InducedMap p0_hat = InducedMap::make(p0);
  for (int a = 0; a < l.size(); ++a) {
    Bits image_ideal = p0_hat.apply(bl.ideals.ideal(bl.eta[a]));
    if (!(image_ideal == bt.ideals.ideal(bt.eta[p[a]])))
      return {false, "square: B_T(p(a)) != p̂_0(B_L(a)) at a=" + std::to_string(a)};
  }
  return {true, "ok"};
}

}  // namespace ordlim
