#pragma once

#include <span>
#include <vector>

#include "cimlab/group.hpp"

namespace cimlab {

/// An element set inside a parent group together with a generator witness.
struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<Elem> gens;
    ElemSet elems;

    long long order() const { return static_cast<long long>(elems.size()); }
    bool contains(const Elem& e) const { return elems.count(e) > 0; }

    /// Elements in a deterministic (lexicographic) order.
    std::vector<Elem> sorted_elements() const;
};

Subgroup subgroup_generated(const FiniteGroup& g, std::vector<Elem> generators);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_subgroup(const FiniteGroup& g);

bool subgroup_equal(const Subgroup& a, const Subgroup& b);
bool subgroup_leq(const Subgroup& a, const Subgroup& b);

long long order_of(const FiniteGroup& g, const Elem& x);
Elem power(const FiniteGroup& g, const Elem& x, long long k);
Elem conjugate_elem(const FiniteGroup& g, const Elem& x, const Elem& by);
Elem commutator(const FiniteGroup& g, const Elem& a, const Elem& b);

/// {g in G : gt = tg for all t in targets}. Requires G enumerable.
Subgroup centralizer(const FiniteGroup& g, std::span<const Elem> targets);

Subgroup conjugate_subgroup(const Subgroup& h, const Elem& by);

/// Normality of H in its parent (checked on generators).
bool is_normal(const Subgroup& h);

/// Normality of X in Y; X must be contained in Y.
bool is_normal_in(const Subgroup& x, const Subgroup& y);

/// Smallest normal subgroup of G containing the seed elements.
Subgroup normal_closure(const FiniteGroup& g, std::span<const Elem> seed);

} // namespace cimlab
