#include "cimlab/quotient.hpp"

#include <algorithm>

#include "cimlab/predicates.hpp"

namespace cimlab {

std::unique_ptr<PermutationGroup> quotient(const FiniteGroup& g, const Subgroup& n) {
    if (n.parent != &g) throw UsageError("quotient: subgroup has a different parent");
    if (!is_normal(n)) throw UsageError("quotient: subgroup is not normal");
    const auto& elems = g.elements();
    ElemMap<int> coset_of;
    std::vector<Elem> reps;
    for (const Elem& e : elems) {
        if (coset_of.count(e)) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(e);
        for (const Elem& x : n.elems) coset_of.emplace(g.multiply(e, x), id);
    }
    int degree = static_cast<int>(reps.size());
    std::vector<Elem> gens;
    for (const Elem& s : g.generators()) {
        Elem img(degree);
        for (int i = 0; i < degree; ++i) img[i] = coset_of.at(g.multiply(s, reps[i]));
        gens.push_back(std::move(img));
    }
    return std::make_unique<PermutationGroup>(degree, std::move(gens), g.element_cap());
}

namespace {

std::vector<long long> invariants_rec(const FiniteGroup& g, std::vector<Elem> members) {
    if (members.size() <= 1) return {};
    // extract an element of maximal order
    long long best = 0;
    const Elem* gen = nullptr;
    std::vector<long long> orders(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        orders[i] = order_of(g, members[i]);
        if (orders[i] > best) {
            best = orders[i];
            gen = &members[i];
        }
    }
    long long size = static_cast<long long>(members.size());
    if (best == size) {
        return {best};
    }
    ElemSet gen_powers;
    {
        Elem cur = g.identity();
        for (long long k = 0; k < best; ++k) {
            gen_powers.insert(cur);
            cur = g.multiply(cur, *gen);
        }
    }
    // greedy complement: grow K keeping K meet <gen> trivial
    std::vector<Elem> k_gens;
    ElemSet k_set;
    k_set.insert(g.identity());
    long long target = size / best;
    for (const Elem& x : members) {
        if (static_cast<long long>(k_set.size()) == target) break;
        if (k_set.count(x)) continue;
        std::vector<Elem> cand = k_gens;
        cand.push_back(x);
        Subgroup s = subgroup_generated(g, cand);
        bool trivial_meet = true;
        for (const Elem& e : s.elems) {
            if (e != g.identity() && gen_powers.count(e)) {
                trivial_meet = false;
                break;
            }
        }
        if (!trivial_meet) continue;
        k_gens = std::move(cand);
        k_set = std::move(s.elems);
    }
    if (static_cast<long long>(k_set.size()) != target)
        throw UsageError("abelian_invariants: complement search failed (non-abelian input?)");
    std::vector<Elem> k_members(k_set.begin(), k_set.end());
    std::sort(k_members.begin(), k_members.end());
    auto out = invariants_rec(g, std::move(k_members));
    out.push_back(best);
    return out;
}

} // namespace

std::vector<long long> abelian_invariants(const FiniteGroup& g) {
    if (!is_abelian(g)) throw UsageError("abelian_invariants: group is not abelian");
    std::vector<Elem> members = g.elements();
    std::sort(members.begin(), members.end());
    return invariants_rec(g, std::move(members));
}

} // namespace cimlab
