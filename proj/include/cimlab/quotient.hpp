#pragma once

#include <memory>

#include "cimlab/subgroup.hpp"

namespace cimlab {

/// G/N as a permutation group on the left cosets of N (N must be normal).
std::unique_ptr<PermutationGroup> quotient(const FiniteGroup& g, const Subgroup& n);

/// Invariant factors d_1 | d_2 | ... of an abelian group, ascending.
/// Throws UsageError on non-abelian input. The trivial group gives {}.
std::vector<long long> abelian_invariants(const FiniteGroup& g);

} // namespace cimlab
