#include "cimlab/materialize.hpp"

namespace cimlab {

StructuredProductGroup::StructuredProductGroup(StructuredGroup spec, long long cap)
    : FiniteGroup(cap), ops_(spec) {
    const StructuredGroup& g = ops_.spec();
    int dim = g.module_dim();
    int hn = static_cast<int>(g.h_orders.size());
    int off = 0;
    for (const ModuleSpec& m : g.modules) {
        for (int c = 0; c < m.delta; ++c, ++off) {
            Elem e(dim + hn, 0);
            e[off] = 1;
            gens_.push_back(std::move(e));
        }
    }
    for (int k = 0; k < hn; ++k) {
        if (g.h_orders[k] <= 1) continue;
        Elem e(dim + hn, 0);
        e[dim + k] = 1;
        gens_.push_back(std::move(e));
    }
    if (gens_.empty()) gens_.push_back(Elem(dim + hn, 0));
}

Elem StructuredProductGroup::identity() const {
    return Elem(spec().module_dim() + spec().h_orders.size(), 0);
}

Elem StructuredProductGroup::pack(const StructuredElement& x) const {
    Elem e = x.vec;
    e.insert(e.end(), x.hpart.begin(), x.hpart.end());
    return e;
}

StructuredElement StructuredProductGroup::unpack(const Elem& e) const {
    int dim = spec().module_dim();
    StructuredElement x;
    x.vec.assign(e.begin(), e.begin() + dim);
    x.hpart.assign(e.begin() + dim, e.end());
    return x;
}

Elem StructuredProductGroup::multiply(const Elem& a, const Elem& b) const {
    return pack(ops_.multiply(unpack(a), unpack(b)));
}

Elem StructuredProductGroup::inverse(const Elem& a) const {
    return pack(ops_.inverse(unpack(a)));
}

std::string StructuredProductGroup::describe_element(const Elem& e) const {
    return ops_.element_str(unpack(e));
}

std::vector<Elem> StructuredProductGroup::module_part_generators() const {
    std::vector<Elem> out;
    int dim = spec().module_dim();
    int hn = static_cast<int>(spec().h_orders.size());
    for (int c = 0; c < dim; ++c) {
        Elem e(dim + hn, 0);
        e[c] = 1;
        out.push_back(std::move(e));
    }
    return out;
}

std::unique_ptr<StructuredProductGroup> materialize(const StructuredGroup& spec,
                                                    long long cap) {
    if (spec.order() > cap) throw EnumerationOverflow(cap);
    return std::make_unique<StructuredProductGroup>(spec, cap);
}

StructuredGroup example_g1() {
    // complement of order 8; unit 2 mod 5 (kernel of order 2), unit 2 mod 17
    // (faithful); both modules doubled
    return StructuredGroup{{8}, {{5, 2, {2}}, {17, 2, {2}}}};
}

StructuredGroup example_g2() {
    return StructuredGroup{{8}, {{5, 2, {2}}, {17, 1, {2}}}};
}

StructuredGroup example_g3() {
    return StructuredGroup{{8}, {{5, 1, {2}}, {17, 2, {2}}}};
}

} // namespace cimlab
