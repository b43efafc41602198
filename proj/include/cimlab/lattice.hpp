#pragma once

#include <string>
#include <unordered_map>

#include "cimlab/indexed.hpp"
#include "cimlab/rational.hpp"
#include "cimlab/subgroup.hpp"

namespace cimlab {

inline constexpr std::size_t kDefaultSubgroupCap = 100'000;

/// The full subgroup lattice of a desk-scale group: every subgroup appears
/// exactly once, as a bitset over element indices. Built by enumerating all
/// cyclic subgroups and closing under join with cyclic atoms.
class SubgroupLattice {
public:
    static SubgroupLattice build(const FiniteGroup& g,
                                 std::size_t cap = kDefaultSubgroupCap);

    const IndexedGroup& indexed() const { return idx_; }
    const FiniteGroup& group() const { return idx_.group(); }

    int count() const { return static_cast<int>(sets_.size()); }
    const DynBitset& member_set(int i) const { return sets_[i]; }
    const std::vector<int>& witness(int i) const { return gens_[i]; }
    long long subgroup_order(int i) const { return orders_[i]; }
    int trivial_index() const { return trivial_; }
    int full_index() const { return full_; }

    /// inner <= outer as sets.
    bool contains(int outer, int inner) const {
        return sets_[inner].subset_of(sets_[outer]);
    }

    const std::vector<int>& maximal_indices() const { return maximal_; }

    int find(const DynBitset& set) const;
    int meet(int i, int j) const;
    int join(int i, int j) const;

    /// Intersection of the maximal subgroups containing subgroup i
    /// (the whole group when none does).
    int mi_closure(int i) const;
    int frattini() const { return mi_closure(trivial_); }
    int fitting() const;

    bool cyclic(int i) const { return cyclic_[i]; }
    bool abelian(int i) const;
    bool normal(int i) const { return normal_[i]; }
    bool normal_within(int inner, int outer) const;
    bool nilpotent(int i) const;

    std::vector<int> cyclic_subgroup_indices() const;
    std::vector<int> normal_subgroup_indices() const;

    /// Proper subgroups (including the trivial one) that are not
    /// intersections of maximal subgroups.
    std::vector<int> non_closed() const;
    std::vector<int> non_closed_cyclic() const;

    bool is_im() const { return non_closed().empty(); }
    bool is_cim() const { return non_closed_cyclic().empty(); }
    bool is_aim() const;
    bool is_t_group() const;

    /// Fraction of proper subgroups that are MI-closed; parent must have a
    /// proper subgroup.
    Rational p_im() const;

    Subgroup to_subgroup(int i) const;
    std::string describe(int i) const;

private:
    explicit SubgroupLattice(const FiniteGroup& g) : idx_(g) {}

    IndexedGroup idx_;
    std::vector<DynBitset> sets_;
    std::vector<std::vector<int>> gens_;
    std::vector<long long> orders_;
    std::vector<bool> cyclic_;
    std::vector<bool> normal_;
    std::vector<int> maximal_;
    int trivial_ = -1;
    int full_ = -1;
    std::unordered_map<DynBitset, int, DynBitset::Hash> by_set_;
};

/// Independent IM oracle: some normal elementary abelian Hall subgroup N has
/// elementary abelian quotient and all its subgroups normal in G.
bool is_im_structural(const SubgroupLattice& lat);

} // namespace cimlab
