#pragma once

#include <span>

#include "cimlab/structured.hpp"

namespace cimlab {

/// Symbolic description of one maximal subgroup of a structured group.
///
/// Type 1 is F(G)K for K maximal in the complement H. Type 2 is W H^u for a
/// maximal submodule W with irreducible complement line U in block `module`
/// and a shift u in U; membership is the affine condition
///   f(v_block) = shift * (1 - s(h))   (mod p),
/// where f is the functional with kernel W normalized so f(u_dir) = 1.
struct MaximalDescriptor {
    enum class Kind { Type1, Type2 };
    Kind kind = Kind::Type1;

    // type 1
    HSpace::Mask k_mask;

    // type 2
    int module = -1;
    std::vector<long long> functional; // delta coefficients mod p
    std::vector<long long> u_dir;      // line direction, f(u_dir) = 1
    long long shift = 0;               // u = shift * u_dir

    std::string str() const;
};

std::vector<MaximalDescriptor> symbolic_maximals(const StructuredOps& ops);

bool descriptor_contains(const StructuredOps& ops, const MaximalDescriptor& d,
                         const StructuredElement& x);

/// Intersects symbolic maximal subgroups by constraint solving (complement
/// element loop plus per-block Gaussian elimination) without enumerating the
/// group. Independent of the closure-formula path. Descriptors are built
/// once and reused across queries.
class MidScaleEngine {
public:
    explicit MidScaleEngine(const StructuredOps& ops)
        : ops_(&ops), descs_(symbolic_maximals(ops)) {}

    const std::vector<MaximalDescriptor>& descriptors() const { return descs_; }

    /// Order of the intersection of all members containing every generator
    /// (the whole group if none does).
    long long closure_order(std::span<const StructuredElement> gens) const;
    long long closure_order(const StructuredElement& x) const {
        return closure_order(std::span<const StructuredElement>(&x, 1));
    }

private:
    const StructuredOps* ops_;
    std::vector<MaximalDescriptor> descs_;
};

long long mid_scale_closure_order(const StructuredOps& ops,
                                  std::span<const StructuredElement> gens);

inline long long mid_scale_closure_order(const StructuredOps& ops,
                                         const StructuredElement& x) {
    return mid_scale_closure_order(ops, std::span<const StructuredElement>(&x, 1));
}

} // namespace cimlab
