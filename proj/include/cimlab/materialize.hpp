#pragma once

#include <memory>

#include "cimlab/group.hpp"
#include "cimlab/structured.hpp"

namespace cimlab {

/// Concrete group with semidirect-product arithmetic; payload layout is the
/// module blocks followed by the complement exponents.
class StructuredProductGroup final : public FiniteGroup {
public:
    explicit StructuredProductGroup(StructuredGroup spec,
                                    long long cap = kDefaultElementCap);

    Realization realization() const override { return Realization::Structured; }
    Elem identity() const override;
    Elem multiply(const Elem& a, const Elem& b) const override;
    Elem inverse(const Elem& a) const override;
    std::string describe_element(const Elem& e) const override;

    const StructuredGroup& spec() const { return ops_.spec(); }
    const StructuredOps& ops() const { return ops_; }

    Elem pack(const StructuredElement& x) const;
    StructuredElement unpack(const Elem& e) const;

    /// Generators of the module part only (basis vectors of each block).
    std::vector<Elem> module_part_generators() const;

private:
    StructuredOps ops_;
};

/// Checks the order fits under the cap before enumeration is even attempted.
std::unique_ptr<StructuredProductGroup> materialize(const StructuredGroup& spec,
                                                    long long cap = kDefaultElementCap);

/// Fixed example specs: complement C8 acting on modules of order 5 (kernel
/// of order 2) and 17 (faithful), with multiplicities (2,2), (2,1), (1,2).
StructuredGroup example_g1();
StructuredGroup example_g2();
StructuredGroup example_g3();

} // namespace cimlab
