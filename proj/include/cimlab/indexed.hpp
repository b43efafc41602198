#pragma once

#include <span>

#include "cimlab/bitset.hpp"
#include "cimlab/group.hpp"

namespace cimlab {

/// Enumerated group with integer element handles. Groups up to a size
/// threshold get a full multiplication table; larger ones multiply through
/// payloads with a hash lookup.
class IndexedGroup {
public:
    explicit IndexedGroup(const FiniteGroup& g);

    const FiniteGroup& group() const { return *g_; }
    int size() const { return n_; }
    int identity() const { return id_; }

    int mul(int a, int b) const {
        if (!table_.empty()) return table_[static_cast<std::size_t>(a) * n_ + b];
        return index_.at(g_->multiply(elems_[a], elems_[b]));
    }
    int inv(int a) const { return inv_[a]; }
    int conj(int x, int by) const { return mul(mul(inv(by), x), by); }

    long long order_of_index(int a) const { return ord_[a]; }

    const Elem& element(int i) const { return elems_[i]; }
    int index_of(const Elem& e) const { return index_.at(e); }
    const std::vector<int>& generator_indices() const { return gen_idx_; }

    /// Subgroup closure of the given generator indices.
    DynBitset close(std::span<const int> gens) const;

private:
    const FiniteGroup* g_;
    int n_ = 0;
    int id_ = 0;
    std::vector<Elem> elems_;
    ElemMap<int> index_;
    std::vector<int32_t> table_; // empty when above the table threshold
    std::vector<int32_t> inv_;
    std::vector<int32_t> ord_;
    std::vector<int> gen_idx_;
};

} // namespace cimlab
