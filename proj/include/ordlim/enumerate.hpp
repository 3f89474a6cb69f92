#pragma once

#include <vector>

#include "ordlim/poset.hpp"

namespace ordlim {

// One representative of every isomorphism class of posets on exactly n
// elements (n <= 6). Counts follow the known sequence 1, 2, 5, 16, 63, ...
// Representatives are deterministic: least canonical relation code first.
std::vector<PosetPtr> all_posets_of_size(int n);

// All classes of sizes 1..n, concatenated.
std::vector<PosetPtr> all_posets_up_to(int n);

// Every quotient assignment from q onto p, enumerated by backtracking over
// the domain elements with partial homomorphism pruning. Assignments are in
// lexicographic order.
std::vector<std::vector<int>> all_quotient_assignments(const FinitePoset& q, const FinitePoset& p);

}  // namespace ordlim
