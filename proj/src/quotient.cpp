#include "ordlim/quotient.hpp"

namespace ordlim {

SticksCover sticks_cover(PosetPtr target) {
  if (target->size() == 0) fail("sticks_cover: target must be nonempty");
  std::vector<std::pair<int, int>> pairs = target->strict_pairs();
  std::vector<int> iso = target->isolated_elements();
  const int p = static_cast<int>(pairs.size() + iso.size());

  PosetData data;
  for (int i = 0; i < 2 * p; ++i) data.labels.push_back(std::to_string(i));
  for (int i = 0; i < p; ++i) data.pairs.emplace_back(2 * i, 2 * i + 1);
  PosetPtr domain = FinitePoset::make(std::move(data));

  std::vector<int> vals(static_cast<std::size_t>(2) * p);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    vals[2 * i] = pairs[i].first;
    vals[2 * i + 1] = pairs[i].second;
  }
  for (std::size_t k = 0; k < iso.size(); ++k) {
    std::size_t i = pairs.size() + k;
    vals[2 * i] = iso[k];
    vals[2 * i + 1] = iso[k];
  }
  PosetMap map = PosetMap::make(domain, std::move(target), std::move(vals));
  return SticksCover{std::move(domain), std::move(map), p};
}

namespace {

// Routes the components of `src_cover` (one side of D) into the other side's
// sticks domain, using the two-case rule of the amalgamation construction:
// collapse to the lexicographically least witness if the composite values
// agree, otherwise onto the least related witness pair.
void route_components(const SticksCover& src_cover, const PosetMap& src_to_a, const SticksCover& dst_cover,
                      const PosetMap& dst_to_a, int offset, std::vector<int>& vals) {
  const FinitePoset& dst = *dst_cover.domain;
  for (int comp = 0; comp < src_cover.components; ++comp) {
    int z = 2 * comp, v = 2 * comp + 1;
    int az = src_to_a(src_cover.map(z));
    int av = src_to_a(src_cover.map(v));
    if (az == av) {
      int witness = -1;
      for (int x = 0; x < dst.size() && witness < 0; ++x)
        if (dst_to_a(dst_cover.map(x)) == az) witness = x;
      vals[offset + z] = witness;
      vals[offset + v] = witness;
    } else {
      int wx = -1, wy = -1;
      for (int c = 0; c < dst_cover.components && wx < 0; ++c) {
        int x = 2 * c, y = 2 * c + 1;
        if (dst_to_a(dst_cover.map(x)) == az && dst_to_a(dst_cover.map(y)) == av) {
          wx = x;
          wy = y;
        }
      }
      vals[offset + z] = wx;
      vals[offset + v] = wy;
    }
  }
}

}  // namespace

Amalgam amalgamate(const PosetMap& f, const PosetMap& g) {
  if (!f.codomain().equals(g.codomain())) fail("amalgamate: maps must share a codomain");
  if (!classify(f).is_quotient) fail("amalgamate: f is not a quotient map");
  if (!classify(g).is_quotient) fail("amalgamate: g is not a quotient map");

  SticksCover b_cover = sticks_cover(f.domain_ptr());
  SticksCover c_cover = sticks_cover(g.domain_ptr());
  PosetPtr d = disjoint_union(*b_cover.domain, *c_cover.domain);
  const int nb = b_cover.domain->size();
  const int nc = c_cover.domain->size();

  // q : D → B'. Identity on the B' part; C' components routed by the
  // two-case rule through f∘f'.
  std::vector<int> qvals(static_cast<std::size_t>(nb + nc));
  for (int i = 0; i < nb; ++i) qvals[i] = i;
  route_components(c_cover, g, b_cover, f, nb, qvals);
  PosetMap q = PosetMap::make(d, b_cover.domain, std::move(qvals));

  // p : D → C', symmetrically.
  std::vector<int> pvals(static_cast<std::size_t>(nb + nc));
  for (int i = 0; i < nc; ++i) pvals[nb + i] = i;
  // Temporarily route B' components; route_components writes at offset 0.
  route_components(b_cover, f, c_cover, g, 0, pvals);
  PosetMap p = PosetMap::make(d, c_cover.domain, std::move(pvals));

  return Amalgam{std::move(d), std::move(b_cover), std::move(c_cover), std::move(q), std::move(p)};
}

InducedMap::InducedMap(PosetMap base) : base_(std::move(base)) {
  auto domain = IdealLattice::enumerate_up_to(base_.domain_ptr(), 10000);
  if (!domain) return;
  domain_lattice_ = std::make_shared<const IdealLattice>(std::move(*domain));
  codomain_lattice_ = std::make_shared<const IdealLattice>(
      IdealLattice::enumerate(base_.codomain_ptr(), base_.codomain().size()));
  table_.resize(domain_lattice_->size());
  for (std::size_t i = 0; i < domain_lattice_->size(); ++i)
    table_[i] = codomain_lattice_->index_of(apply(domain_lattice_->ideal(i)));
}

InducedMap InducedMap::make(PosetMap base) {
  if (!classify(base).is_quotient) fail("induce: base map is not a quotient");
  return InducedMap(std::move(base));
}

Bits InducedMap::apply(const Bits& downset) const {
  const FinitePoset& q = base_.domain();
  const FinitePoset& p = base_.codomain();
  Bits out(static_cast<std::size_t>(p.size()));
  for (int x : canonical_decomposition(q, downset)) out |= p.down(base_(x));
  return out;
}

DownSet InducedMap::apply(const DownSet& downset) const {
  return DownSet{base_.codomain_ptr(), apply(downset.members)};
}

const IdealLattice& InducedMap::domain_lattice() const {
  if (!domain_lattice_) fail("induced map has no eager tables (domain lattice exceeds 10^4 ideals)");
  return *domain_lattice_;
}

const IdealLattice& InducedMap::codomain_lattice() const {
  if (!codomain_lattice_) fail("induced map has no eager tables (domain lattice exceeds 10^4 ideals)");
  return *codomain_lattice_;
}

const std::vector<int>& InducedMap::table() const {
  if (!domain_lattice_) fail("induced map has no eager tables (domain lattice exceeds 10^4 ideals)");
  return table_;
}

MeetCriterion meet_preservation_criterion(const PosetMap& p) {
  if (!classify(p).is_quotient) fail("meet_preservation_criterion: map is not a quotient");
  const FinitePoset& q = p.domain();
  const FinitePoset& cod = p.codomain();
  for (int x = 0; x < q.size(); ++x) {
    for (int y = 0; y < q.size(); ++y) {
      Bits common = cod.down(p(x)) & cod.down(p(y));
      bool bad = false;
      int bad_t = -1;
      common.for_each([&](std::size_t t) {
        if (bad) return;
        // Need z <= x, z <= y with t <= p(z).
        Bits zs = q.down(x) & q.down(y);
        bool found = false;
        zs.for_each([&](std::size_t z) {
          if (!found && cod.le(static_cast<int>(t), p(static_cast<int>(z)))) found = true;
        });
        if (!found) {
          bad = true;
          bad_t = static_cast<int>(t);
        }
      });
      if (bad) return MeetCriterion{false, {x, y, bad_t}};
    }
  }
  return MeetCriterion{};
}

}  // namespace ordlim
