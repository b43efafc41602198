#include "cimlab/indexed.hpp"

namespace cimlab {

namespace {
constexpr int kTableThreshold = 2100;
}

IndexedGroup::IndexedGroup(const FiniteGroup& g) : g_(&g) {
    elems_ = g.elements();
    n_ = static_cast<int>(elems_.size());
    index_.reserve(elems_.size() * 2);
    for (int i = 0; i < n_; ++i) index_.emplace(elems_[i], i);
    id_ = index_.at(g.identity());

    if (n_ <= kTableThreshold) {
        table_.resize(static_cast<std::size_t>(n_) * n_);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                table_[static_cast<std::size_t>(a) * n_ + b] =
                    index_.at(g.multiply(elems_[a], elems_[b]));
    }
    inv_.resize(n_);
    for (int a = 0; a < n_; ++a) inv_[a] = index_.at(g.inverse(elems_[a]));

    ord_.resize(n_);
    for (int a = 0; a < n_; ++a) {
        int cur = a;
        int k = 1;
        while (cur != id_) {
            cur = mul(cur, a);
            ++k;
        }
        ord_[a] = k;
    }
    for (const Elem& e : g.generators()) gen_idx_.push_back(index_.at(e));
}

DynBitset IndexedGroup::close(std::span<const int> gens) const {
    DynBitset bs(n_);
    std::vector<int> stack;
    stack.reserve(64);
    bs.set(id_);
    stack.push_back(id_);
    for (std::size_t pos = 0; pos < stack.size(); ++pos) {
        int x = stack[pos];
        for (int gidx : gens) {
            int y = mul(x, gidx);
            if (!bs.test(y)) {
                bs.set(y);
                stack.push_back(y);
            }
        }
    }
    return bs;
}

} // namespace cimlab
