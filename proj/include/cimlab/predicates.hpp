#pragma once

#include "cimlab/subgroup.hpp"

namespace cimlab {

bool is_abelian(const FiniteGroup& g);
bool is_abelian_subgroup(const Subgroup& s);

/// Least common multiple of element orders.
long long exponent_of(const FiniteGroup& g);

/// Abelian with square-free exponent (not necessarily a p-group).
bool is_elementary_abelian(const FiniteGroup& g);

/// Derived subgroup of S, computed inside S.
Subgroup derived_subgroup(const Subgroup& s);

/// G >= G' >= G'' >= ..., ending at the first repeated term.
std::vector<Subgroup> derived_series(const FiniteGroup& g);

bool is_soluble(const FiniteGroup& g);
bool is_metabelian(const FiniteGroup& g);

/// Greedy chain 1 = N_0 < N_1 < ... < N_k = G of subgroups normal in G with
/// factors cyclic of prime order; exists iff G is supersoluble.
bool is_supersoluble(const FiniteGroup& g);

} // namespace cimlab
