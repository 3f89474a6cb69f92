#include "ordlim/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_set>

namespace ordlim {

namespace {

// Strict relation encoded as an n*n bit matrix in a 64-bit word.
std::uint64_t relation_code(const std::vector<std::uint8_t>& lt, int n, const std::vector<int>& perm) {
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (lt[perm[i] * n + perm[j]]) code |= std::uint64_t(1) << (i * n + j);
  return code;
}

std::uint64_t canonical_code(const std::vector<std::uint8_t>& lt, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~0ull;
  do {
    best = std::min(best, relation_code(lt, n, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

PosetPtr poset_from_code(std::uint64_t code, int n) {
  PosetData data;
  for (int i = 0; i < n; ++i) data.labels.push_back("e" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((code >> (i * n + j)) & 1) data.pairs.emplace_back(i, j);
  return FinitePoset::make(std::move(data));
}

}  // namespace

std::vector<PosetPtr> all_posets_of_size(int n) {
  if (n < 1 || n > 6) fail("poset enumeration supported for 1..6 elements");
  const int npairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);

  std::uint64_t total = 1;
  for (int k = 0; k < npairs; ++k) total *= 3;

  std::unordered_set<std::uint64_t> classes;
  std::vector<std::uint64_t> codes;
  std::vector<std::uint8_t> lt(static_cast<std::size_t>(n) * n);
  for (std::uint64_t choice = 0; choice < total; ++choice) {
    std::fill(lt.begin(), lt.end(), 0);
    std::uint64_t c = choice;
    for (int k = 0; k < npairs; ++k) {
      int mode = static_cast<int>(c % 3);
      c /= 3;
      auto [i, j] = slots[k];
      if (mode == 1) lt[i * n + j] = 1;
      if (mode == 2) lt[j * n + i] = 1;
    }
    // Transitivity; antisymmetry holds by construction.
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (!lt[i * n + j]) continue;
        for (int k = 0; k < n; ++k)
          if (lt[j * n + k] && !lt[i * n + k]) {
            ok = false;
            break;
          }
      }
    if (!ok) continue;
    std::uint64_t canon = canonical_code(lt, n);
    if (classes.insert(canon).second) codes.push_back(canon);
  }
  std::sort(codes.begin(), codes.end());
  std::vector<PosetPtr> out;
  out.reserve(codes.size());
  for (std::uint64_t code : codes) out.push_back(poset_from_code(code, n));
  return out;
}

std::vector<PosetPtr> all_posets_up_to(int n) {
  std::vector<PosetPtr> out;
  for (int k = 1; k <= n; ++k) {
    auto batch = all_posets_of_size(k);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

namespace {

void extend_assignment(const FinitePoset& q, const FinitePoset& p, std::vector<int>& vals, int next,
                       std::vector<int>& cover, std::vector<std::vector<int>>& out) {
  const int n = q.size();
  const int m = p.size();
  if (next == n) {
    for (int v = 0; v < m; ++v)
      if (cover[v] == 0) return;
    // Lifting clause.
    std::vector<Bits> lifted(m, Bits(static_cast<std::size_t>(m)));
    for (auto [i, j] : q.strict_pairs()) lifted[vals[i]].set(vals[j]);
    for (auto [a, b] : p.strict_pairs())
      if (!lifted[a].test(b)) return;
    out.push_back(vals);
    return;
  }
  // Surjectivity pruning: remaining slots must cover the missed values.
  int missed = 0;
  for (int v = 0; v < m; ++v)
    if (cover[v] == 0) ++missed;
  if (missed > n - next) return;

  for (int v = 0; v < m; ++v) {
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev) {
      if (q.le(prev, next) && !p.le(vals[prev], v)) ok = false;
      if (q.le(next, prev) && !p.le(v, vals[prev])) ok = false;
    }
    if (!ok) continue;
    vals[next] = v;
    ++cover[v];
    extend_assignment(q, p, vals, next + 1, cover, out);
    --cover[v];
  }
}

}  // namespace

std::vector<std::vector<int>> all_quotient_assignments(const FinitePoset& q, const FinitePoset& p) {
  std::vector<std::vector<int>> out;
  if (p.size() > q.size()) return out;
  std::vector<int> vals(q.size(), -1);
  std::vector<int> cover(p.size(), 0);
  extend_assignment(q, p, vals, 0, cover, out);
  return out;
}

}  // namespace ordlim
