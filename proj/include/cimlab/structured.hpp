#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cimlab/elem.hpp"
#include "cimlab/errors.hpp"

namespace cimlab {

/// One module block V^delta: V of prime order p, with the complement group
/// acting blockwise by the scalar unit action[k] per cyclic factor k.
struct ModuleSpec {
    long long p = 0;
    int delta = 1;
    std::vector<long long> action;
};

/// A semidirect product (V_1^{d1} x ... x V_r^{dr}) x| H with H abelian
/// (cyclic factor orders h_orders) and each V_i of prime order.
struct StructuredGroup {
    std::vector<long long> h_orders;
    std::vector<ModuleSpec> modules;

    long long h_order() const;
    long long module_part_order() const;
    long long order() const { return module_part_order() * h_order(); }
    int module_dim() const;
    std::string id() const;
};

/// An element (vec, hpart): one residue block of length delta_i per module,
/// plus the exponent tuple in H.
struct StructuredElement {
    std::vector<long long> vec;
    std::vector<long long> hpart;
    bool operator==(const StructuredElement&) const = default;
};

struct Violation {
    std::string code;
    std::string detail;
};

/// Shape rules: prime module orders, pairwise distinct, none dividing |H|,
/// actions are homomorphisms, and the actions' kernels meet trivially.
std::vector<Violation> validate(const StructuredGroup& g);
bool is_valid(const StructuredGroup& g);
void require_valid(const StructuredGroup& g);

/// Does the description at least define a group (actions are homomorphisms,
/// orders positive)? Shape violations beyond that are tolerated.
std::vector<Violation> validate_arithmetic(const StructuredGroup& g);

/// The abelian complement H with elements addressed by a single index
/// (mixed radix, first factor most significant, so index order is
/// lexicographic tuple order). Subgroups are membership masks.
class HSpace {
public:
    using Mask = std::vector<char>;

    explicit HSpace(std::vector<long long> orders);

    long long size() const { return size_; }
    const std::vector<long long>& orders() const { return orders_; }

    long long add(long long a, long long b) const;
    long long neg(long long a) const;
    std::vector<long long> decode(long long idx) const;
    long long encode(const std::vector<long long>& tuple) const;
    long long order_of(long long a) const;
    bool generates(long long a) const { return order_of(a) == size_; }

    Mask whole() const { return Mask(size_, 1); }
    Mask trivial() const;
    Mask cyclic(long long a) const;
    Mask generated(const std::vector<long long>& elems) const;
    static long long mask_order(const Mask& m);
    static Mask mask_and(const Mask& a, const Mask& b);

    /// Maximal subgroups = kernels of the surjections onto prime cyclic
    /// groups, one per projective hom class.
    const std::vector<Mask>& maximal_subgroups() const { return maximals_; }

    /// Intersection of the maximal subgroups containing h; the whole group
    /// when h generates it.
    Mask m_of(long long h) const;

    /// All subgroups (join closure of cyclic ones).
    std::vector<Mask> all_subgroups() const;

    /// Is the quotient by the subgroup `sub` cyclic?
    bool quotient_cyclic(const Mask& sub) const;
    long long coset_order(long long a, const Mask& sub) const;

    std::string tuple_str(long long idx) const;

private:
    std::vector<long long> orders_;
    long long size_ = 1;
    std::vector<Mask> maximals_;
};

struct FastClosure {
    long long cyclic_order = 0;  // |<x>|
    long long closure_order = 0; // order of the intersection of maximals over <x>
    bool closed = false;
    bool h_generates = false;   // the complement part of x generates H
    long long module_order = 0; // |y| after normalization
    HSpace::Mask c_mask;        // the complement-side factor C of the closure
    std::vector<int> j_used;    // indices that entered the intersection
    std::string description;
};

struct CimCheck {
    bool is_cim = true;
    long long witness_h = -1; // first failing complement element, lexicographic
    std::vector<std::string> audit; // J/M_H trace per tested element
};

/// Precomputed fast engine for one structured group: scalar actions, kernel
/// masks, the closure formula, and the whole-group test derived from it.
class StructuredOps {
public:
    explicit StructuredOps(const StructuredGroup& g); // requires arithmetic validity

    const StructuredGroup& spec() const { return spec_; }
    const HSpace& h() const { return h_; }

    long long scalar(int module, long long hidx) const {
        return scalars_[module][hidx];
    }
    bool acts_trivially(int module, long long hidx) const {
        return scalars_[module][hidx] == 1;
    }
    const HSpace::Mask& kernel_mask(int module) const { return kernels_[module]; }

    StructuredElement identity_element() const;
    StructuredElement multiply(const StructuredElement& a, const StructuredElement& b) const;
    StructuredElement inverse(const StructuredElement& a) const;
    long long cyclic_order(const StructuredElement& x) const;
    long long module_order(const StructuredElement& x) const; // product of block primes hit

    HSpace::Mask m_of(long long hidx) const { return h_.m_of(hidx); }

    /// J(h): modules h centralizes that carry multiplicity >= 2.
    std::vector<int> j_set(long long hidx) const;

    /// J~(x) for a normalized x = (y, h): modules h centralizes where the
    /// block of y is zero or the multiplicity is >= 2. Throws UsageError on
    /// unnormalized input.
    std::vector<int> j_tilde(const StructuredElement& x) const;

    /// Conjugate of x with zero module components on every block its
    /// complement part moves.
    StructuredElement normalize(const StructuredElement& x) const;
    bool is_normalized(const StructuredElement& x) const;

    FastClosure fast_mi_closure(const StructuredElement& x) const; // requires full validity
    CimCheck fast_is_cim() const;                                  // requires full validity

    std::string element_str(const StructuredElement& x) const;

private:
    void check_element(const StructuredElement& x) const;

    StructuredGroup spec_;
    HSpace h_;
    std::vector<std::vector<long long>> scalars_; // [module][h index]
    std::vector<HSpace::Mask> kernels_;
};

} // namespace cimlab
