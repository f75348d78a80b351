#pragma once

#include <optional>
#include <vector>

namespace gradalg {

// Solves a x = b over Z/m.  Rows are reduced to Howell form (echelon form
// closed under annihilator multiples), so back substitution with free
// variables set to zero succeeds exactly when the system is solvable.
std::optional<std::vector<long long>> solve_mod(const std::vector<std::vector<long long>>& a,
                                                const std::vector<long long>& b, long long m);

// Exhaustive search over (Z/m)^n; only for tiny systems and testing.
std::optional<std::vector<long long>> solve_mod_exhaustive(const std::vector<std::vector<long long>>& a,
                                                           const std::vector<long long>& b, long long m,
                                                           long long max_candidates = 2000000);

}  // namespace gradalg
