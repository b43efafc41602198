#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace cimlab {

/// Group element payload. Interpretation depends on the owning group's
/// realization: permutation images, abelian residues, or semidirect
/// coordinates (module blocks followed by complement exponents).
/// Payloads are always kept reduced, so equality is plain vector equality.
using Elem = std::vector<long long>;

struct ElemHash {
    std::size_t operator()(const Elem& e) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (long long v : e) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

using ElemSet = std::unordered_set<Elem, ElemHash>;

template <typename V>
using ElemMap = std::unordered_map<Elem, V, ElemHash>;

} // namespace cimlab
