#include "cimlab/predicates.hpp"

#include <numeric>

#include "cimlab/numth.hpp"

namespace cimlab {

bool is_abelian(const FiniteGroup& g) {
    const auto& gens = g.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (g.multiply(gens[i], gens[j]) != g.multiply(gens[j], gens[i])) return false;
    return true;
}

bool is_abelian_subgroup(const Subgroup& s) {
    const FiniteGroup& g = *s.parent;
    for (std::size_t i = 0; i < s.gens.size(); ++i)
        for (std::size_t j = i + 1; j < s.gens.size(); ++j)
            if (g.multiply(s.gens[i], s.gens[j]) != g.multiply(s.gens[j], s.gens[i]))
                return false;
    return true;
}

long long exponent_of(const FiniteGroup& g) {
    if (is_abelian(g)) {
        long long e = 1;
        for (const Elem& x : g.generators()) e = std::lcm(e, order_of(g, x));
        return e;
    }
    long long e = 1;
    for (const Elem& x : g.elements()) e = std::lcm(e, order_of(g, x));
    return e;
}

bool is_elementary_abelian(const FiniteGroup& g) {
    return is_abelian(g) && is_squarefree(exponent_of(g));
}

Subgroup derived_subgroup(const Subgroup& s) {
    const FiniteGroup& g = *s.parent;
    std::vector<Elem> comms;
    for (std::size_t i = 0; i < s.gens.size(); ++i)
        for (std::size_t j = 0; j < s.gens.size(); ++j)
            if (i != j) comms.push_back(commutator(g, s.gens[i], s.gens[j]));
    // normal closure within s
    Subgroup h = subgroup_generated(g, std::move(comms));
    while (true) {
        std::vector<Elem> extra;
        for (const Elem& t : s.gens)
            for (const Elem& x : h.gens) {
                Elem c = conjugate_elem(g, x, t);
                if (!h.contains(c)) extra.push_back(std::move(c));
            }
        if (extra.empty()) return h;
        std::vector<Elem> gens = h.gens;
        gens.insert(gens.end(), extra.begin(), extra.end());
        h = subgroup_generated(g, std::move(gens));
    }
}

std::vector<Subgroup> derived_series(const FiniteGroup& g) {
    std::vector<Subgroup> series;
    series.push_back(whole_subgroup(g));
    while (true) {
        Subgroup next = derived_subgroup(series.back());
        if (next.order() == series.back().order()) break;
        series.push_back(std::move(next));
        if (series.back().order() == 1) break;
    }
    return series;
}

bool is_soluble(const FiniteGroup& g) { return derived_series(g).back().order() == 1; }

bool is_metabelian(const FiniteGroup& g) {
    auto series = derived_series(g);
    // G'' = 1 <=> the series reaches 1 within two steps
    if (series.back().order() != 1) return false;
    return series.size() <= 3;
}

bool is_supersoluble(const FiniteGroup& g) {
    const auto& elems = g.elements();
    const long long n = g.order();
    ElemSet chain; // current normal subgroup N
    chain.insert(g.identity());
    while (static_cast<long long>(chain.size()) < n) {
        bool extended = false;
        for (const Elem& x : elems) {
            if (chain.count(x)) continue;
            // order of the coset xN
            long long m = 1;
            Elem cur = x;
            while (!chain.count(cur)) {
                cur = g.multiply(cur, x);
                ++m;
            }
            for (long long q : prime_divisors(m)) {
                Elem y = power(g, x, m / q); // coset of prime order q
                Elem yinv = g.inverse(y);
                auto in_extension = [&](const Elem& e) {
                    Elem c = e;
                    for (long long j = 0; j < q; ++j) {
                        if (chain.count(c)) return true;
                        c = g.multiply(c, yinv);
                    }
                    return false;
                };
                bool normal = true;
                for (const Elem& t : g.generators()) {
                    if (!in_extension(conjugate_elem(g, y, t))) {
                        normal = false;
                        break;
                    }
                }
                if (!normal) continue;
                // extend N by the q cosets of <yN>
                std::vector<Elem> base(chain.begin(), chain.end());
                Elem pw = y;
                for (long long j = 1; j < q; ++j) {
                    for (const Elem& e : base) chain.insert(g.multiply(pw, e));
                    pw = g.multiply(pw, y);
                }
                extended = true;
                break;
            }
            if (extended) break;
        }
        if (!extended) return false;
    }
    return true;
}

} // namespace cimlab
