#pragma once

#include "cimlab/structured.hpp"

namespace cimlab {

struct QabChoice {
    std::vector<long long> kernel_members; // indices into the input group
    long long quotient_order = 0;
    long long prime = 0;
    long long unit = 0;
};

struct QabResult {
    StructuredGroup group;
    std::vector<QabChoice> choices;
};

/// For a nontrivial finite abelian group A (given by cyclic factor orders),
/// builds a structured group G with G/F(G) isomorphic to A in which every
/// cyclic subgroup is an intersection of maximal subgroups. One doubled
/// module per chosen kernel, kernels reused greedily across the pairs
/// (a, b) with <a> proper and b outside <a>.
QabResult construct_with_quotient(const std::vector<long long>& abelian_orders,
                                  long long prime_ceiling = 1'000'000);

/// Cyclic complement of order 4 acting faithfully on modules of order 5 and
/// 13 with multiplicities d1, d2 >= 2. The module part is the unique proper
/// subgroup that is not an intersection of maximal subgroups.
StructuredGroup construct_solouno(int d1 = 2, int d2 = 2);

} // namespace cimlab
