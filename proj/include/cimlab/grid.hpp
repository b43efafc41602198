#pragma once

#include <string>
#include <vector>

#include "cimlab/structured.hpp"

namespace cimlab {

struct GridEntry {
    std::string id;
    StructuredGroup spec;
};

/// Deterministic census family: complements C2, C3, C4, C2xC2, C6; modules
/// over the primes 3..17 with multiplicity 1 or 2; one canonical action per
/// admissible action kernel (the closure behavior depends only on kernels).
/// Emits every valid spec whose order is at most max_order.
std::vector<GridEntry> structured_grid(long long max_order);

} // namespace cimlab
