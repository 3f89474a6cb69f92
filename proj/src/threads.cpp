#include "ordlim/threads.hpp"

#include <algorithm>

namespace ordlim {

void FiniteSystem::validate() const {
  if (levels.empty()) fail("system must have at least one level");
  if (steps.size() + 1 != levels.size()) fail("system needs exactly one step map per adjacent pair");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].size() != levels[i + 1].size())
      fail("step " + std::to_string(i) + " has the wrong domain size");
    for (int v : steps[i])
      if (v < 0 || v >= static_cast<int>(levels[i].size()))
        fail("step " + std::to_string(i) + " maps outside its codomain");
  }
}

ThreadSolveResult solve_thread(const FiniteSystem& sys) {
  sys.validate();
  const int depth = sys.depth();
  for (int i = 0; i < depth; ++i)
    if (sys.levels[i].empty()) fail("compatibility set T_" + std::to_string(i) + " is empty at index " + std::to_string(i));

  // V_k = truncation image of the deepest compatibility set.
  std::vector<std::vector<int>> stabilized(depth);
  std::vector<bool> in(sys.levels[depth - 1].size(), true);
  for (int k = depth - 1; k >= 0; --k) {
    std::vector<int> vk;
    for (std::size_t z = 0; z < in.size(); ++z)
      if (in[z]) vk.push_back(static_cast<int>(z));
    stabilized[k] = vk;
    if (k > 0) {
      std::vector<bool> prev(sys.levels[k - 1].size(), false);
      for (int z : vk) prev[sys.steps[k - 1][z]] = true;
      in = std::move(prev);
    }
  }

  ThreadSolveResult result;
  result.stabilized = stabilized;
  result.entries.resize(depth);
  result.entries[0] = stabilized[0].front();
  for (int k = 1; k < depth; ++k) {
    int chosen = -1;
    for (int z : stabilized[k])
      if (sys.steps[k - 1][z] == result.entries[k - 1]) {
        chosen = z;
        break;
      }
    if (chosen < 0) fail("internal: stabilized sets do not project onto each other");
    result.entries[k] = chosen;
  }
  return result;
}

std::optional<std::vector<int>> naive_greedy_thread(const FiniteSystem& sys) {
  sys.validate();
  const int depth = sys.depth();
  std::vector<int> entries(depth, -1);
  if (sys.levels[0].empty()) return std::nullopt;
  entries[0] = 0;
  for (int k = 1; k < depth; ++k) {
    int chosen = -1;
    for (std::size_t z = 0; z < sys.levels[k].size(); ++z)
      if (sys.steps[k - 1][z] == entries[k - 1]) {
        chosen = static_cast<int>(z);
        break;
      }
    if (chosen < 0) return std::nullopt;
    entries[k] = chosen;
  }
  return entries;
}

std::string cmp_name(Cmp c) {
  switch (c) {
    case Cmp::less:
      return "<=";
    case Cmp::greater:
      return ">=";
    case Cmp::equal:
      return "=";
    case Cmp::incomparable:
      return "incomparable";
  }
  return "?";
}

void validate_p_thread(const PThread& t) {
  if (t.entries.empty()) fail("thread must have at least one entry");
  for (int n = 1; n <= t.depth(); ++n)
    if (t.entries[n - 1] >= (std::uint64_t(1) << (2 * n)))
      fail("thread entry at level " + std::to_string(n) + " out of range");
  for (int n = 1; n < t.depth(); ++n)
    if ((t.entries[n] >> 2) != t.entries[n - 1])
      fail("thread entries incompatible between levels " + std::to_string(n) + " and " + std::to_string(n + 1));
}

Cmp thread_order(const PThread& a, const PThread& b) {
  if (a.depth() != b.depth()) fail("thread_order: depth mismatch");
  validate_p_thread(a);
  validate_p_thread(b);
  bool leq = true, geq = true;
  for (int n = 1; n <= a.depth(); ++n) {
    UniversalLevel lvl(n);
    if (!lvl.le(a.entries[n - 1], b.entries[n - 1])) leq = false;
    if (!lvl.le(b.entries[n - 1], a.entries[n - 1])) geq = false;
  }
  if (leq && geq) return Cmp::equal;
  if (leq) return Cmp::less;
  if (geq) return Cmp::greater;
  return Cmp::incomparable;
}

SymbolicPoint::SymbolicPoint(std::vector<std::uint8_t> prefix, std::uint8_t tail)
    : prefix_(std::move(prefix)), tail_(tail) {
  if (tail_ > 3) fail("symbolic point digits must lie in 0..3");
  for (auto d : prefix_)
    if (d > 3) fail("symbolic point digits must lie in 0..3");
  while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

SymbolicPoint SymbolicPoint::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos || colon + 2 != text.size())
    fail_parse("symbolic point must look like \"<digits>:<tail digit>\", e.g. \"012:2\"");
  std::vector<std::uint8_t> prefix;
  for (char c : text.substr(0, colon)) {
    if (c < '0' || c > '3') fail_parse("symbolic point digits must lie in 0..3");
    prefix.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  char t = text[colon + 1];
  if (t < '0' || t > '3') fail_parse("symbolic point tail must lie in 0..3");
  return SymbolicPoint(std::move(prefix), static_cast<std::uint8_t>(t - '0'));
}

std::string SymbolicPoint::to_string() const {
  std::string s;
  for (auto d : prefix_) s += static_cast<char>('0' + d);
  s += ':';
  s += static_cast<char>('0' + tail_);
  return s;
}

namespace {

bool symbolic_leq(const SymbolicPoint& x, const SymbolicPoint& y) {
  const std::size_t window = std::max(x.prefix().size(), y.prefix().size()) + 2;
  std::size_t split = window;
  for (std::size_t k = 0; k < window; ++k)
    if (x.digit(k) != y.digit(k)) {
      split = k;
      break;
    }
  if (split == window) return true;  // equal
  for (std::size_t k = split + 1; k < window; ++k) {
    int dx = x.digit(k), dy = y.digit(k);
    if (dx != dy || dx > 1) return false;
  }
  int dx = x.digit(split), dy = y.digit(split);
  if (dx == 2 && dy == 3) return true;
  return split == 0 && dx == 0 && dy == 1;
}

}  // namespace

Cmp symbolic_compare(const SymbolicPoint& x, const SymbolicPoint& y) {
  if (x == y) return Cmp::equal;
  bool leq = symbolic_leq(x, y);
  bool geq = symbolic_leq(y, x);
  if (leq) return Cmp::less;
  if (geq) return Cmp::greater;
  return Cmp::incomparable;
}

bool is_isolated(const SymbolicPoint& x) {
  // Comparable points differ at exactly one position, and a flip at a pure
  // tail position beyond the window cannot satisfy either clause, so the
  // finitely many single-digit flips below decide isolation.
  const std::size_t window = x.prefix().size() + 2;
  for (std::size_t pos = 0; pos < window; ++pos) {
    std::vector<std::uint8_t> digits;
    std::size_t len = std::max(pos + 1, x.prefix().size());
    digits.reserve(len);
    for (std::size_t k = 0; k < len; ++k) digits.push_back(static_cast<std::uint8_t>(x.digit(k)));
    digits[pos] ^= 1;  // 0<->1 and 2<->3
    SymbolicPoint y(std::move(digits), x.tail());
    if (y == x) continue;
    if (symbolic_compare(x, y) != Cmp::incomparable) return false;
  }
  return true;
}

SymbolicPoint isolated_dense_witness(const std::vector<std::uint8_t>& cylinder_prefix) {
  return SymbolicPoint(cylinder_prefix, 2);
}

IdealSystem::IdealSystem(int depth, const LevelConfig& cfg) : depth_(depth) {
  if (depth < 1) fail("ideal system depth must be at least 1");
  for (int n = 1; n <= depth; ++n) levels_.push_back(level_poset(n, cfg));
  for (int n = 1; n < depth; ++n) induced_.push_back(InducedMap::make(projection(n + 1, n, cfg)));
}

Bits IdealSystem::project(int from, int to, const Bits& downset) const {
  if (to > from || from > depth_ || to < 1) fail("project: bad levels");
  if (to == from) return downset;
  return project_level_ideal(from, downset, to);
}

IdealThread thread_from_top(const IdealSystem& sys, const Bits& top) {
  int n = 0;
  while ((std::size_t(1) << (2 * (n + 1))) <= top.size()) ++n;
  if ((std::size_t(1) << (2 * n)) != top.size() || n < 1 || n > sys.depth())
    fail("thread_from_top: set size does not match a system level");
  if (!UniversalLevel(n).is_down_set(top)) fail("thread_from_top: not a down-set");
  IdealThread t;
  t.coords.resize(n);
  t.coords[n - 1] = top;
  for (int k = n - 1; k >= 1; --k) t.coords[k - 1] = sys.project(k + 1, k, t.coords[k]);
  return t;
}

void validate_ideal_thread(const IdealSystem& sys, const IdealThread& t) {
  if (t.depth() < 1 || t.depth() > sys.depth()) fail("ideal thread depth outside the system");
  for (int n = 1; n <= t.depth(); ++n) {
    if (t.coords[n - 1].size() != (std::size_t(1) << (2 * n)))
      fail("ideal thread coordinate " + std::to_string(n) + " has the wrong size");
    if (!UniversalLevel(n).is_down_set(t.coords[n - 1]))
      fail("ideal thread coordinate " + std::to_string(n) + " is not a down-set");
  }
  for (int n = 1; n < t.depth(); ++n)
    if (!(sys.project(n + 1, n, t.coords[n]) == t.coords[n - 1]))
      fail("ideal thread violates bonding at level " + std::to_string(n));
}

bool ideal_thread_leq(const IdealThread& a, const IdealThread& b) {
  if (a.depth() != b.depth()) fail("ideal threads have different depths");
  for (int n = 0; n < a.depth(); ++n)
    if (!a.coords[n].is_subset_of(b.coords[n])) return false;
  return true;
}

IdealThread ideal_sup(const IdealSystem&, const IdealThread& a, const IdealThread& b) {
  if (a.depth() != b.depth()) fail("ideal_sup: depth mismatch");
  IdealThread out;
  out.coords.reserve(a.coords.size());
  for (int n = 0; n < a.depth(); ++n) out.coords.push_back(a.coords[n] | b.coords[n]);
  return out;
}

IdealThread ideal_inf(const IdealSystem& sys, const IdealThread& a, const IdealThread& b, int depth_n,
                      int lookahead_m) {
  if (a.depth() != b.depth()) fail("ideal_inf: depth mismatch");
  if (depth_n < 1 || depth_n > lookahead_m || lookahead_m > a.depth())
    fail("ideal_inf: need 1 <= depth <= lookahead <= thread depth");
  // The greedy greatest-first choices collapse: the greatest realizable
  // coordinate at every level is the image of the deepest common coordinate.
  Bits common = a.coords[lookahead_m - 1] & b.coords[lookahead_m - 1];
  IdealThread out;
  out.coords.resize(depth_n);
  for (int n = 1; n <= depth_n; ++n) out.coords[n - 1] = sys.project(lookahead_m, n, common);
  return out;
}

IdealThread ideal_inf(const IdealSystem& sys, const IdealThread& a, const IdealThread& b) {
  return ideal_inf(sys, a, b, a.depth(), a.depth());
}

IdealThread find_atom_below(const IdealSystem&, const IdealThread& a) {
  if (a.is_zero()) fail("find_atom_below: thread is zero");
  const int depth = a.depth();
  std::vector<std::uint64_t> zs;
  a.coords[depth - 1].for_each([&](std::size_t w) { zs.push_back(w); });

  IdealThread out;
  out.coords.resize(depth);
  for (int k = 1; k <= depth; ++k) {
    UniversalLevel lvl(k);
    const int shift = 2 * (depth - k);
    // Candidate level-k coordinates: principal down-sets of the projections.
    std::vector<Bits> cands(zs.size(), Bits(lvl.size()));
    for (std::size_t i = 0; i < zs.size(); ++i) lvl.add_down_set(cands[i], zs[i] >> shift);
    int best = -1;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      bool minimal = true;
      for (std::size_t j = 0; j < cands.size() && minimal; ++j)
        if (!(cands[j] == cands[i]) && cands[j].is_subset_of(cands[i])) minimal = false;
      if (!minimal) continue;
      if (best < 0 || canonical_less(cands[i], cands[best])) best = static_cast<int>(i);
    }
    out.coords[k - 1] = cands[best];
    std::vector<std::uint64_t> kept;
    for (std::size_t i = 0; i < zs.size(); ++i)
      if (cands[i] == cands[best]) kept.push_back(zs[i]);
    zs = std::move(kept);
  }
  return out;
}

bool is_principal_thread(const IdealSystem&, const IdealThread& t) {
  if (t.is_zero()) return false;
  for (int n = 1; n <= t.depth(); ++n)
    if (UniversalLevel(n).maximal_of(t.coords[n - 1]).size() != 1) return false;
  return true;
}

std::vector<IdealThread> principal_decomposition(const IdealSystem& sys, const IdealThread& a) {
  if (a.is_zero()) fail("principal_decomposition: thread is zero");
  const int depth = a.depth();

  // Parts of each coordinate's canonical decomposition, as principal bitsets.
  std::vector<std::vector<Bits>> parts(depth);
  for (int n = 1; n <= depth; ++n) {
    UniversalLevel lvl(n);
    for (std::uint64_t w : lvl.maximal_of(a.coords[n - 1])) {
      Bits part(lvl.size());
      lvl.add_down_set(part, w);
      parts[n - 1].push_back(part);
    }
  }

  // Backward dead-end filter over the part system (every part lifts to a
  // part with exact image, so this keeps everything; it mirrors the thread
  // solver's stabilized sets).
  std::vector<std::vector<bool>> alive(depth);
  alive[depth - 1].assign(parts[depth - 1].size(), true);
  for (int n = depth - 1; n >= 1; --n) {
    alive[n - 1].assign(parts[n - 1].size(), false);
    for (std::size_t j = 0; j < parts[n].size(); ++j) {
      if (!alive[n][j]) continue;
      Bits img = sys.project(n + 1, n, parts[n][j]);
      for (std::size_t i = 0; i < parts[n - 1].size(); ++i)
        if (parts[n - 1][i] == img) alive[n - 1][i] = true;
    }
  }

  std::vector<IdealThread> family;
  auto push_unique = [&](IdealThread&& t) {
    for (const IdealThread& u : family)
      if (u.coords == t.coords) return;
    family.push_back(std::move(t));
  };

  for (int m = 1; m <= depth; ++m) {
    for (std::size_t pi = 0; pi < parts[m - 1].size(); ++pi) {
      if (!alive[m - 1][pi]) continue;
      IdealThread t;
      t.coords.resize(depth);
      t.coords[m - 1] = parts[m - 1][pi];
      bool ok = true;
      for (int i = m + 1; i <= depth && ok; ++i) {
        int chosen = -1;
        for (std::size_t j = 0; j < parts[i - 1].size(); ++j) {
          if (!alive[i - 1][j]) continue;
          if (!(sys.project(i, i - 1, parts[i - 1][j]) == t.coords[i - 2])) continue;
          if (chosen < 0 || canonical_less(parts[i - 1][j], parts[i - 1][chosen]))
            chosen = static_cast<int>(j);
        }
        if (chosen < 0) {
          ok = false;
          break;
        }
        t.coords[i - 1] = parts[i - 1][chosen];
      }
      if (!ok) continue;
      for (int i = m - 1; i >= 1; --i) t.coords[i - 1] = sys.project(i + 1, i, t.coords[i]);
      push_unique(std::move(t));
    }
  }
  return family;
}

IdealThread induced_limit_quotient(const LevelMapFamily& family, const IdealThread& a) {
  if (family.maps.empty()) fail("induced_limit_quotient: empty family");
  IdealThread out;
  out.coords.reserve(family.maps.size());
  for (std::size_t l = 0; l < family.maps.size(); ++l) {
    int il = family.indices[l];
    if (il > a.depth())
      fail("induced_limit_quotient: thread depth " + std::to_string(a.depth()) +
           " is insufficient for family level " + std::to_string(il));
    out.coords.push_back(apply_level_induced(family.maps[l], a.coords[il - 1]));
  }
  return out;
}

}  // namespace ordlim
