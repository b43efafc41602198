#include "cimlab/subgroup.hpp"

#include <algorithm>

namespace cimlab {

std::vector<Elem> Subgroup::sorted_elements() const {
    std::vector<Elem> out(elems.begin(), elems.end());
    std::sort(out.begin(), out.end());
    return out;
}

Subgroup subgroup_generated(const FiniteGroup& g, std::vector<Elem> generators) {
    Subgroup s;
    s.parent = &g;
    Elem id = g.identity();
    std::vector<Elem> queue;
    s.elems.insert(id);
    queue.push_back(std::move(id));
    // drop identity generators from the witness
    for (Elem& gen : generators)
        if (!s.elems.count(gen)) s.gens.push_back(gen);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (const Elem& gen : s.gens) {
            Elem x = g.multiply(queue[i], gen);
            if (s.elems.insert(x).second) {
                if (static_cast<long long>(queue.size()) + 1 > g.element_cap())
                    throw EnumerationOverflow(g.element_cap());
                queue.push_back(std::move(x));
            }
        }
    }
    if (s.gens.empty()) s.gens.push_back(g.identity());
    return s;
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
    Subgroup s;
    s.parent = &g;
    s.gens.push_back(g.identity());
    s.elems.insert(g.identity());
    return s;
}

Subgroup whole_subgroup(const FiniteGroup& g) {
    Subgroup s;
    s.parent = &g;
    s.gens = g.generators();
    for (const Elem& e : g.elements()) s.elems.insert(e);
    return s;
}

bool subgroup_equal(const Subgroup& a, const Subgroup& b) {
    return a.parent == b.parent && a.elems == b.elems;
}

bool subgroup_leq(const Subgroup& a, const Subgroup& b) {
    if (a.parent != b.parent || a.order() > b.order()) return false;
    for (const Elem& e : a.elems)
        if (!b.contains(e)) return false;
    return true;
}

long long order_of(const FiniteGroup& g, const Elem& x) {
    Elem id = g.identity();
    Elem cur = x;
    long long k = 1;
    while (cur != id) {
        cur = g.multiply(cur, x);
        ++k;
        if (k > g.element_cap()) throw EnumerationOverflow(g.element_cap());
    }
    return k;
}

Elem power(const FiniteGroup& g, const Elem& x, long long k) {
    Elem base = x;
    if (k < 0) {
        base = g.inverse(x);
        k = -k;
    }
    Elem r = g.identity();
    while (k > 0) {
        if (k & 1) r = g.multiply(r, base);
        base = g.multiply(base, base);
        k >>= 1;
    }
    return r;
}

Elem conjugate_elem(const FiniteGroup& g, const Elem& x, const Elem& by) {
    return g.multiply(g.multiply(g.inverse(by), x), by);
}

Elem commutator(const FiniteGroup& g, const Elem& a, const Elem& b) {
    return g.multiply(g.multiply(g.inverse(a), g.inverse(b)), g.multiply(a, b));
}

Subgroup centralizer(const FiniteGroup& g, std::span<const Elem> targets) {
    std::vector<Elem> found;
    for (const Elem& e : g.elements()) {
        bool ok = true;
        for (const Elem& t : targets) {
            if (g.multiply(e, t) != g.multiply(t, e)) {
                ok = false;
                break;
            }
        }
        if (ok) found.push_back(e);
    }
    Subgroup s;
    s.parent = &g;
    for (Elem& e : found) s.elems.insert(std::move(e));
    // witness: greedy generating chain
    Subgroup built = trivial_subgroup(g);
    for (const Elem& e : s.elems) {
        if (!built.contains(e)) {
            std::vector<Elem> gens = built.gens;
            gens.push_back(e);
            built = subgroup_generated(g, gens);
        }
        if (built.order() == s.order()) break;
    }
    s.gens = built.gens;
    return s;
}

Subgroup conjugate_subgroup(const Subgroup& h, const Elem& by) {
    const FiniteGroup& g = *h.parent;
    Subgroup s;
    s.parent = h.parent;
    for (const Elem& e : h.elems) s.elems.insert(conjugate_elem(g, e, by));
    for (const Elem& e : h.gens) s.gens.push_back(conjugate_elem(g, e, by));
    return s;
}

bool is_normal(const Subgroup& h) {
    const FiniteGroup& g = *h.parent;
    for (const Elem& t : g.generators())
        for (const Elem& x : h.gens)
            if (!h.contains(conjugate_elem(g, x, t))) return false;
    return true;
}

bool is_normal_in(const Subgroup& x, const Subgroup& y) {
    const FiniteGroup& g = *x.parent;
    for (const Elem& t : y.gens)
        for (const Elem& e : x.gens)
            if (!x.contains(conjugate_elem(g, e, t))) return false;
    return true;
}

Subgroup normal_closure(const FiniteGroup& g, std::span<const Elem> seed) {
    Subgroup h = subgroup_generated(g, {seed.begin(), seed.end()});
    while (true) {
        std::vector<Elem> extra;
        for (const Elem& t : g.generators())
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

} // namespace cimlab
