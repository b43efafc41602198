#include "cimlab/construct.hpp"

#include <algorithm>
#include <set>

#include "cimlab/numth.hpp"

namespace cimlab {

namespace {

struct KernelCandidate {
    HSpace::Mask mask;
    long long order;
    long long quotient_order;
};

std::vector<KernelCandidate> cyclic_quotient_kernels(const HSpace& h) {
    std::vector<KernelCandidate> out;
    for (HSpace::Mask& m : h.all_subgroups()) {
        if (!h.quotient_cyclic(m)) continue;
        long long o = HSpace::mask_order(m);
        out.push_back({std::move(m), o, h.size() / o});
    }
    std::sort(out.begin(), out.end(), [](const KernelCandidate& a, const KernelCandidate& b) {
        if (a.order != b.order) return a.order > b.order; // largest kernel first
        return a.mask < b.mask;
    });
    return out;
}

/// Action units realizing the hom A -> <g> with the given kernel: the k-th
/// generator of A maps to g^(discrete log of its coset).
std::vector<long long> action_units_for_kernel(const HSpace& h, const HSpace::Mask& kernel,
                                               long long m, long long g, long long p) {
    // generator coset of the cyclic quotient
    long long t = -1;
    for (long long a = 0; a < h.size(); ++a)
        if (h.coset_order(a, kernel) == m) {
            t = a;
            break;
        }
    if (t < 0) throw UsageError("kernel quotient is not cyclic");
    std::vector<long long> units;
    for (std::size_t k = 0; k < h.orders().size(); ++k) {
        std::vector<long long> tup(h.orders().size(), 0);
        if (h.orders()[k] > 1) tup[k] = 1;
        long long ek = h.encode(tup);
        long long j = 0, cur = 0; // find j with ek - j*t in kernel
        while (!kernel[h.add(ek, h.neg(cur))]) {
            cur = h.add(cur, t);
            ++j;
            if (j > m) throw UsageError("discrete log failed in cyclic quotient");
        }
        units.push_back(mod_pow(g, j, p));
    }
    return units;
}

} // namespace

QabResult construct_with_quotient(const std::vector<long long>& abelian_orders,
                                  long long prime_ceiling) {
    long long total = 1;
    for (long long d : abelian_orders) {
        if (d < 1) throw UsageError("construct_with_quotient: invalid factor order");
        total *= d;
    }
    if (total <= 1) throw UsageError("construct_with_quotient: the quotient must be nontrivial");

    HSpace a(abelian_orders);
    auto candidates = cyclic_quotient_kernels(a);

    // pairs (x, y): <x> proper, y outside <x>; reuse kernels greedily
    std::vector<HSpace::Mask> chosen;
    for (long long x = 0; x < a.size(); ++x) {
        HSpace::Mask cx = a.cyclic(x);
        if (HSpace::mask_order(cx) == a.size()) continue;
        for (long long y = 0; y < a.size(); ++y) {
            if (cx[y]) continue;
            bool covered = false;
            for (const auto& c : chosen)
                if (c[x] && !c[y]) {
                    covered = true;
                    break;
                }
            if (covered) continue;
            bool found = false;
            for (const auto& cand : candidates) {
                if (cand.mask[x] && !cand.mask[y]) {
                    chosen.push_back(cand.mask);
                    found = true;
                    break;
                }
            }
            if (!found)
                throw UsageError("construct_with_quotient: no separating kernel for a pair");
        }
    }

    QabResult out;
    out.group.h_orders = abelian_orders;
    std::set<long long> avoid;
    for (long long q : prime_divisors(total)) avoid.insert(q);
    for (const auto& kernel : chosen) {
        long long m = a.size() / HSpace::mask_order(kernel);
        long long p = next_prime_congruent_one(m, avoid, prime_ceiling);
        avoid.insert(p);
        long long g = smallest_unit_of_order(m, p);
        ModuleSpec mod;
        mod.p = p;
        mod.delta = 2;
        mod.action = action_units_for_kernel(a, kernel, m, g, p);
        out.group.modules.push_back(std::move(mod));
        QabChoice choice;
        for (long long i = 0; i < a.size(); ++i)
            if (kernel[i]) choice.kernel_members.push_back(i);
        choice.quotient_order = m;
        choice.prime = p;
        choice.unit = g;
        out.choices.push_back(std::move(choice));
    }
    require_valid(out.group);
    return out;
}

StructuredGroup construct_solouno(int d1, int d2) {
    if (d1 < 2 || d2 < 2)
        throw UsageError("construct_solouno: multiplicities must be at least 2");
    StructuredGroup g;
    g.h_orders = {4};
    g.modules.push_back({5, d1, {smallest_unit_of_order(4, 5)}});
    g.modules.push_back({13, d2, {smallest_unit_of_order(4, 13)}});
    require_valid(g);
    return g;
}

} // namespace cimlab
