#include "ordlim/level.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace ordlim {

UniversalLevel::UniversalLevel(int n) : n_(n) {
  if (n < 1 || n > kLevelHardBound)
    fail("level depth " + std::to_string(n) + " outside supported range 1.." +
         std::to_string(kLevelHardBound));
}

std::string UniversalLevel::word(std::uint64_t w) const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int pos = 0; pos < n_; ++pos) s[pos] = static_cast<char>('0' + digit(w, pos));
  return s;
}

std::optional<std::uint64_t> UniversalLevel::parse_word(std::string_view s) const {
  if (static_cast<int>(s.size()) != n_) return std::nullopt;
  std::uint64_t w = 0;
  for (char c : s) {
    if (c < '0' || c > '3') return std::nullopt;
    w = (w << 2) | static_cast<std::uint64_t>(c - '0');
  }
  return w;
}

bool UniversalLevel::le(std::uint64_t x, std::uint64_t y) const {
  if (x == y) return true;
  int l = -1;
  for (int pos = 0; pos < n_; ++pos) {
    if (digit(x, pos) != digit(y, pos)) {
      l = pos;
      break;
    }
  }
  for (int pos = l + 1; pos < n_; ++pos) {
    int dx = digit(x, pos), dy = digit(y, pos);
    if (dx != dy || dx > 1) return false;
  }
  int dx = digit(x, l), dy = digit(y, l);
  if (dx == 2 && dy == 3) return true;
  return l == 0 && dx == 0 && dy == 1;
}

std::uint64_t UniversalLevel::partner(std::uint64_t x) const {
  for (int pos = n_ - 1; pos >= 0; --pos) {
    int d = digit(x, pos);
    if (d >= 2) {
      // Flip 2 <-> 3 at the last high digit.
      return x ^ (std::uint64_t(1) << (2 * (n_ - 1 - pos)));
    }
  }
  // All digits 0/1: flip coordinate 0.
  return x ^ (std::uint64_t(1) << (2 * (n_ - 1)));
}

bool UniversalLevel::lower_of_component(std::uint64_t x) const {
  for (int pos = n_ - 1; pos >= 0; --pos) {
    int d = digit(x, pos);
    if (d >= 2) return d == 2;
  }
  return digit(x, 0) == 0;
}

void UniversalLevel::add_down_set(Bits& dst, std::uint64_t w) const {
  dst.set(w);
  if (!lower_of_component(w)) dst.set(partner(w));
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> UniversalLevel::two_components() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  out.reserve(component_count());
  for (std::uint64_t w = 0; w < size(); ++w)
    if (lower_of_component(w)) out.emplace_back(w, partner(w));
  return out;
}

bool UniversalLevel::is_down_set(const Bits& members) const {
  bool ok = true;
  members.for_each([&](std::size_t w) {
    if (ok && !lower_of_component(w) && !members.test(partner(w))) ok = false;
  });
  return ok;
}

Bits UniversalLevel::down_closure(const Bits& subset) const {
  Bits out = subset;
  subset.for_each([&](std::size_t w) {
    if (!lower_of_component(w)) out.set(partner(w));
  });
  return out;
}

std::vector<std::uint64_t> UniversalLevel::maximal_of(const Bits& downset) const {
  std::vector<std::uint64_t> out;
  downset.for_each([&](std::size_t w) {
    // w is dominated only by its partner, and only when w is the lower end.
    if (lower_of_component(w) && downset.test(partner(w))) return;
    out.push_back(w);
  });
  return out;
}

PosetPtr level_poset(int n, const LevelConfig& cfg) {
  if (n < 1 || n > cfg.depth_bound)
    fail("level " + std::to_string(n) + " outside depth bound " + std::to_string(cfg.depth_bound));
  if (n > kMaterializeBound)
    fail("level " + std::to_string(n) + " cannot be materialized (bound " +
         std::to_string(kMaterializeBound) + ")");

  static std::mutex mu;
  static std::map<int, PosetPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  UniversalLevel lvl(n);
  PosetData data;
  data.labels.reserve(lvl.size());
  for (std::uint64_t w = 0; w < lvl.size(); ++w) data.labels.push_back(lvl.word(w));
  for (auto [x, y] : lvl.two_components())
    data.pairs.emplace_back(static_cast<int>(x), static_cast<int>(y));
  PosetPtr p = FinitePoset::make(std::move(data));
  cache.emplace(n, p);
  return p;
}

PosetMap projection(int n, int k, const LevelConfig& cfg) {
  if (k >= n || k < 1) fail("projection requires 1 <= k < n");
  PosetPtr dom = level_poset(n, cfg);
  PosetPtr cod = level_poset(k, cfg);
  std::vector<int> vals(dom->size());
  for (std::uint64_t w = 0; w < static_cast<std::uint64_t>(dom->size()); ++w)
    vals[w] = static_cast<int>(w >> (2 * (n - k)));
  return PosetMap::make(std::move(dom), std::move(cod), std::move(vals));
}

MapClassification LevelMap::classify() const {
  MapClassification c;
  UniversalLevel lvl(level);
  const FinitePoset& cod = *codomain;

  c.is_homomorphism = true;
  for (std::uint64_t u = 0; u < lvl.size() && c.is_homomorphism; ++u) {
    if (!lvl.lower_of_component(u)) continue;
    std::uint64_t v = lvl.partner(u);
    if (!cod.le(values[u], values[v])) {
      c.is_homomorphism = false;
      c.witness = {static_cast<int>(u), static_cast<int>(v)};
    }
  }

  std::vector<bool> hit(cod.size(), false);
  for (std::uint64_t u = 0; u < lvl.size(); ++u) hit[values[u]] = true;
  c.is_onto = true;
  for (int v = 0; v < cod.size(); ++v)
    if (!hit[v]) {
      c.is_onto = false;
      if (!c.witness) c.witness = {v, v};
      break;
    }
  if (!c.is_homomorphism || !c.is_onto) return c;

  std::vector<Bits> lifted(cod.size(), Bits(static_cast<std::size_t>(cod.size())));
  for (std::uint64_t u = 0; u < lvl.size(); ++u) {
    if (!lvl.lower_of_component(u)) continue;
    std::uint64_t v = lvl.partner(u);
    if (values[u] != values[v]) lifted[values[u]].set(values[v]);
  }
  c.is_quotient = true;
  for (auto [p, r] : cod.strict_pairs())
    if (!lifted[p].test(r)) {
      c.is_quotient = false;
      c.witness = {p, r};
      break;
    }
  return c;
}

LevelMap LevelMap::after_projection(int m) const {
  if (m < level) fail("after_projection: target level shallower than the map's level");
  UniversalLevel lvl(m);
  std::vector<std::int32_t> vals(lvl.size());
  const int shift = 2 * (m - level);
  for (std::uint64_t w = 0; w < lvl.size(); ++w) vals[w] = values[w >> shift];
  return LevelMap{m, codomain, std::move(vals)};
}

Bits apply_level_induced(const LevelMap& f, const Bits& downset) {
  UniversalLevel lvl(f.level);
  Bits out(static_cast<std::size_t>(f.codomain->size()));
  for (std::uint64_t w : lvl.maximal_of(downset)) out |= f.codomain->down(f(w));
  return out;
}

Bits project_level_ideal(int n, const Bits& downset, int k) {
  UniversalLevel from(n), to(k);
  Bits out(to.size());
  const int shift = 2 * (n - k);
  for (std::uint64_t w : from.maximal_of(downset)) to.add_down_set(out, w >> shift);
  return out;
}

Bits level_point_preimage(int n, int k, const Bits& subset) {
  UniversalLevel from(n);
  Bits out(from.size());
  const int shift = 2 * (n - k);
  subset.for_each([&](std::size_t v) {
    for (std::uint64_t t = 0; t < (std::uint64_t(1) << shift); ++t)
      out.set((static_cast<std::uint64_t>(v) << shift) | t);
  });
  return out;
}

namespace {

// Per-fiber routing data. For a 2-component (x, y) of P_k mapped onto (a, b)
// in the base, the target S is h^{-1}({a, b}) as an induced subposet of T:
// isolated elements and internal pairs are classified by their h-values
// (a-side / b-side / mixed). When a = b the fiber is routed sticks-style
// onto S = h^{-1}(a).
struct FiberPlan {
  bool collapsed = false;
  std::vector<int> li, ui;
  std::vector<std::pair<int, int>> lp, up, lup;
  std::vector<std::pair<int, int>> strict;
  std::vector<int> iso;
  int least = -1;
};

FiberPlan plan_fiber(const FinitePoset& t, const std::vector<int>& h, int a, int b) {
  FiberPlan plan;
  plan.collapsed = (a == b);
  std::vector<int> s;
  for (int z = 0; z < t.size(); ++z)
    if (h[z] == a || h[z] == b) s.push_back(z);
  plan.least = s.empty() ? -1 : s.front();

  auto isolated_in_s = [&](int z) {
    for (int w : s)
      if (w != z && (t.le(w, z) || t.le(z, w))) return false;
    return true;
  };

  for (int z : s) {
    if (!isolated_in_s(z)) continue;
    if (plan.collapsed)
      plan.iso.push_back(z);
    else if (h[z] == a)
      plan.li.push_back(z);
    else
      plan.ui.push_back(z);
  }
  for (int u : s)
    for (int v : s) {
      if (u == v || !t.le(u, v)) continue;
      if (plan.collapsed) {
        plan.strict.emplace_back(u, v);
      } else if (h[u] == a && h[v] == a) {
        plan.lp.emplace_back(u, v);
      } else if (h[u] == b && h[v] == b) {
        plan.up.emplace_back(u, v);
      } else {
        // h[u] = a, h[v] = b; the other mix would contradict a < b.
        plan.lup.emplace_back(u, v);
      }
    }
  return plan;
}

std::uint64_t l_type_pair_count(int d) {
  // All pairs within one endpoint's extension set: sum over the split
  // position of 4^l * 2^(d-1-l) = 2^(d-1) (2^d - 1).
  return (std::uint64_t(1) << (d - 1)) * ((std::uint64_t(1) << d) - 1);
}

bool fiber_feasible(const FiberPlan& plan, int d) {
  if (plan.collapsed)
    return plan.strict.size() + plan.iso.size() <= (std::uint64_t(1) << (2 * d));
  if (plan.lup.empty()) return false;
  std::uint64_t l_pairs = l_type_pair_count(d);
  return plan.li.size() + plan.lp.size() <= l_pairs && plan.ui.size() + plan.up.size() <= l_pairs &&
         plan.lup.size() <= (std::uint64_t(1) << d);
}

// Assembles g : P_m → T over the fiber of the component (x, y) of P_k.
// Pair fibers follow the eight routing rules: within-endpoint pairs are
// spent on isolated elements first, then on same-side pairs, then collapse
// onto the fixed mixed pair (r, b); cross pairs enumerate the mixed pairs
// and then repeat (r, b). Collapsed fibers are routed sticks-style.
void assemble_fiber(const UniversalLevel& deep, int k, std::uint64_t x, std::uint64_t y,
                    const FiberPlan& plan, std::vector<std::int32_t>& out) {
  const int d = deep.depth() - k;
  const std::uint64_t ext = std::uint64_t(1) << (2 * d);

  std::vector<std::pair<std::uint64_t, std::uint64_t>> lpairs, upairs, lupairs, all;
  for (std::uint64_t t = 0; t < ext; ++t) {
    std::uint64_t u = (x << (2 * d)) | t;
    if (!deep.lower_of_component(u)) continue;
    std::uint64_t v = deep.partner(u);
    if ((v >> (2 * d)) == x)
      lpairs.emplace_back(u, v);
    else
      lupairs.emplace_back(u, v);
  }
  for (std::uint64_t t = 0; t < ext; ++t) {
    std::uint64_t u = (y << (2 * d)) | t;
    if (!deep.lower_of_component(u)) continue;
    upairs.emplace_back(u, deep.partner(u));
  }

  if (plan.collapsed) {
    all.reserve(lpairs.size() + upairs.size() + lupairs.size());
    all.insert(all.end(), lpairs.begin(), lpairs.end());
    all.insert(all.end(), lupairs.begin(), lupairs.end());
    all.insert(all.end(), upairs.begin(), upairs.end());
    std::sort(all.begin(), all.end());
    for (std::size_t j = 0; j < all.size(); ++j) {
      auto [u, v] = all[j];
      if (j < plan.strict.size()) {
        out[u] = plan.strict[j].first;
        out[v] = plan.strict[j].second;
      } else if (j < plan.strict.size() + plan.iso.size()) {
        out[u] = out[v] = plan.iso[j - plan.strict.size()];
      } else {
        out[u] = out[v] = plan.least;
      }
    }
    return;
  }

  const int r = plan.lup.front().first;
  const int rb = plan.lup.front().second;
  for (std::size_t j = 0; j < lpairs.size(); ++j) {
    auto [u, v] = lpairs[j];
    if (j < plan.li.size()) {
      out[u] = out[v] = plan.li[j];
    } else if (j < plan.li.size() + plan.lp.size()) {
      auto [s1, s2] = plan.lp[j - plan.li.size()];
      out[u] = s1;
      out[v] = s2;
    } else {
      out[u] = out[v] = r;
    }
  }
  for (std::size_t j = 0; j < upairs.size(); ++j) {
    auto [u, v] = upairs[j];
    if (j < plan.ui.size()) {
      out[u] = out[v] = plan.ui[j];
    } else if (j < plan.ui.size() + plan.up.size()) {
      auto [s1, s2] = plan.up[j - plan.ui.size()];
      out[u] = s1;
      out[v] = s2;
    } else {
      out[u] = out[v] = rb;
    }
  }
  for (std::size_t j = 0; j < lupairs.size(); ++j) {
    auto [u, v] = lupairs[j];
    if (j < plan.lup.size()) {
      out[u] = plan.lup[j].first;
      out[v] = plan.lup[j].second;
    } else {
      out[u] = r;
      out[v] = rb;
    }
  }
}

LevelMap assemble_extension(int k, int m, PosetPtr target, const std::vector<FiberPlan>& plans) {
  UniversalLevel base(k), deep(m);
  std::vector<std::int32_t> vals(deep.size(), -1);
  auto comps = base.two_components();
  for (std::size_t i = 0; i < comps.size(); ++i)
    assemble_fiber(deep, k, comps[i].first, comps[i].second, plans[i], vals);
  for (std::int32_t v : vals)
    if (v < 0) fail("internal: extension assembly left an element unassigned");
  return LevelMap{m, std::move(target), std::move(vals)};
}

// A mixed class can only be empty for a non-quotient input; rejecting here
// keeps the feasibility search for m finite.
void require_mixed_classes(const std::vector<FiberPlan>& plans) {
  for (const FiberPlan& plan : plans)
    if (!plan.collapsed && plan.lup.empty())
      fail("internal: a component image admits no mixed pair");
}

}  // namespace

ExtensionResult solve_extension(const PosetMap& p, int k, const LevelConfig& cfg) {
  if (k < 1 || k > cfg.depth_bound) fail("solve_extension: k outside depth bound");
  if (!level_poset(k, cfg)->equals(p.codomain())) fail("solve_extension: codomain is not level " + std::to_string(k));
  if (!classify(p).is_quotient) fail("solve_extension: map is not a quotient");

  const std::size_t relations = p.domain().relation_pairs().size();
  int m = k + 1;
  while ((std::uint64_t(1) << (m - k - 1)) <= relations) ++m;
  if (m > cfg.depth_bound)
    fail("solve_extension: requires level m=" + std::to_string(m) + " beyond depth bound " +
         std::to_string(cfg.depth_bound));

  UniversalLevel base(k);
  std::vector<FiberPlan> plans;
  for (auto [x, y] : base.two_components()) {
    plans.push_back(plan_fiber(p.domain(), p.assignment(), static_cast<int>(x), static_cast<int>(y)));
  }
  require_mixed_classes(plans);
  for (const FiberPlan& plan : plans)
    if (!fiber_feasible(plan, m - k)) fail("solve_extension: internal fiber infeasibility");
  return ExtensionResult{m, assemble_extension(k, m, p.domain_ptr(), plans)};
}

bool extension_commutes(const PosetMap& p, int k, const ExtensionResult& r) {
  UniversalLevel deep(r.m);
  const int shift = 2 * (r.m - k);
  for (std::uint64_t w = 0; w < deep.size(); ++w)
    if (static_cast<std::uint64_t>(p(r.g(w))) != (w >> shift)) return false;
  return true;
}

ExtensionResult extend_level_map(const LevelMap& f, const PosetMap& h, const LevelConfig& cfg) {
  if (!h.codomain().equals(*f.codomain)) fail("extend_level_map: codomains do not match");
  if (!classify(h).is_quotient) fail("extend_level_map: h is not a quotient");
  if (!f.classify().is_quotient) fail("extend_level_map: f is not a quotient");

  const int k = f.level;
  UniversalLevel base(k);
  const FinitePoset& a = *f.codomain;

  std::vector<FiberPlan> plans;
  for (auto [x, y] : base.two_components()) {
    int av = f(x), bv = f(y);
    if (!a.le(av, bv)) fail("extend_level_map: level map is not order-preserving");
    plans.push_back(plan_fiber(h.domain(), h.assignment(), av, bv));
  }
  require_mixed_classes(plans);

  int d = 1;
  for (;; ++d) {
    bool ok = true;
    for (const auto& plan : plans)
      if (!fiber_feasible(plan, d)) {
        ok = false;
        break;
      }
    if (ok) break;
  }
  const int m = k + d;
  if (m > cfg.depth_bound)
    fail("extend_level_map: requires level m=" + std::to_string(m) + " beyond depth bound " +
         std::to_string(cfg.depth_bound));
  return ExtensionResult{m, assemble_extension(k, m, h.domain_ptr(), plans)};
}

WitnessU witness_u(PosetPtr x, const LevelConfig& cfg) {
  if (x->size() == 0) fail("witness_u: poset must be nonempty");
  std::vector<std::pair<int, int>> pairs = x->strict_pairs();
  std::vector<int> iso = x->isolated_elements();
  const std::uint64_t sticks = pairs.size() + iso.size();

  int n = 1;
  while (2 * (std::uint64_t(1) << (2 * (n - 1))) < sticks) ++n;
  if (n > cfg.depth_bound)
    fail("witness_u: requires level " + std::to_string(n) + " beyond depth bound " +
         std::to_string(cfg.depth_bound));

  UniversalLevel lvl(n);
  std::vector<std::int32_t> vals(lvl.size(), 0);
  auto comps = lvl.two_components();
  for (std::size_t j = 0; j < comps.size(); ++j) {
    auto [lo, hi] = comps[j];
    if (j < pairs.size()) {
      vals[lo] = pairs[j].first;
      vals[hi] = pairs[j].second;
    } else if (j < sticks) {
      vals[lo] = vals[hi] = iso[j - pairs.size()];
    } else {
      vals[lo] = vals[hi] = 0;
    }
  }
  return WitnessU{n, LevelMap{n, std::move(x), std::move(vals)}};
}

LevelMap factor_through_level(const std::vector<std::int32_t>& cylinder_table, PosetPtr codomain, int i,
                              const LevelConfig& cfg) {
  int rank = 0;
  while ((std::size_t(1) << (2 * rank)) < cylinder_table.size()) ++rank;
  if ((std::size_t(1) << (2 * rank)) != cylinder_table.size())
    fail("factor_through_level: table size is not a power of 4");
  if (i < 1 || i > rank) fail("factor_through_level: requested level outside 1..rank");
  if (i > cfg.depth_bound) fail("factor_through_level: level beyond depth bound");

  const int shift = 2 * (rank - i);
  for (std::size_t w = 0; w < cylinder_table.size(); ++w) {
    std::size_t head = (w >> shift) << shift;
    if (cylinder_table[w] != cylinder_table[head])
      fail("factor_through_level: table is not constant on rank-" + std::to_string(i) + " cylinders");
    if (cylinder_table[w] < 0 || cylinder_table[w] >= codomain->size())
      fail("factor_through_level: table value outside codomain");
  }

  UniversalLevel lvl(i);
  std::vector<std::int32_t> vals(lvl.size());
  for (std::uint64_t w = 0; w < lvl.size(); ++w) vals[w] = cylinder_table[w << shift];
  LevelMap h{i, std::move(codomain), std::move(vals)};
  MapClassification c = h.classify();
  if (!c.is_onto) fail("factor_through_level: table is not onto the codomain");
  if (!c.is_quotient) fail("factor_through_level: table does not realize a quotient");
  return h;
}

void TargetSystem::validate() const {
  if (levels.empty()) fail("target system must have at least one level");
  if (steps.size() + 1 != levels.size()) fail("target system needs one bonding map per adjacent pair");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (!steps[i].domain().equals(*levels[i + 1]) || !steps[i].codomain().equals(*levels[i]))
      fail("bonding map " + std::to_string(i) + " does not match its levels");
    if (!classify(steps[i]).is_quotient) fail("bonding map " + std::to_string(i) + " is not a quotient");
  }
}

LevelMapFamily build_universal_quotient(const TargetSystem& targets, const LevelConfig& cfg) {
  targets.validate();
  LevelMapFamily family;
  WitnessU w = witness_u(targets.levels[0], cfg);
  family.indices.push_back(w.n);
  family.maps.push_back(std::move(w.map));
  for (std::size_t l = 0; l < targets.steps.size(); ++l) {
    ExtensionResult step = extend_level_map(family.maps.back(), targets.steps[l], cfg);
    family.indices.push_back(step.m);
    family.maps.push_back(std::move(step.g));
  }
  return family;
}

bool family_squares_commute(const LevelMapFamily& family, const TargetSystem& targets) {
  for (std::size_t l = 0; l + 1 < family.maps.size(); ++l) {
    const LevelMap& fk = family.maps[l];
    const LevelMap& fn = family.maps[l + 1];
    const PosetMap& h = targets.steps[l];
    UniversalLevel deep(fn.level);
    const int shift = 2 * (fn.level - fk.level);
    for (std::uint64_t w = 0; w < deep.size(); ++w)
      if (h(fn(w)) != fk(w >> shift)) return false;
  }
  return true;
}

LiftResult lift_through_quotient(const LevelMap& t, const PosetMap& g, const LevelConfig& cfg) {
  ExtensionResult r = extend_level_map(t, g, cfg);
  return LiftResult{r.m, std::move(r.g)};
}

}  // namespace ordlim
