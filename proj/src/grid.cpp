#include "cimlab/grid.hpp"

#include <algorithm>

#include "cimlab/numth.hpp"

namespace cimlab {

namespace {

struct KernelAction {
    long long quotient_order;
    std::vector<long long> units; // per complement factor, for one prime
};

// canonical action units for every subgroup kernel with cyclic quotient of
// order dividing p-1
std::vector<KernelAction> kernel_actions(const HSpace& h, long long p) {
    struct Cand {
        HSpace::Mask mask;
        long long order;
    };
    std::vector<Cand> kernels;
    for (HSpace::Mask& m : h.all_subgroups()) {
        if (!h.quotient_cyclic(m)) continue;
        kernels.push_back({std::move(m), HSpace::mask_order(m)});
    }
    std::sort(kernels.begin(), kernels.end(), [](const Cand& a, const Cand& b) {
        if (a.order != b.order) return a.order > b.order;
        return a.mask < b.mask;
    });
    std::vector<KernelAction> out;
    for (const Cand& c : kernels) {
        long long m = h.size() / c.order;
        if ((p - 1) % m != 0) continue;
        long long g = smallest_unit_of_order(m, p);
        long long t = -1;
        for (long long a = 0; a < h.size(); ++a)
            if (h.coset_order(a, c.mask) == m) {
                t = a;
                break;
            }
        std::vector<long long> units;
        for (std::size_t k = 0; k < h.orders().size(); ++k) {
            std::vector<long long> tup(h.orders().size(), 0);
            if (h.orders()[k] > 1) tup[k] = 1;
            long long ek = h.encode(tup);
            long long j = 0, cur = 0;
            while (!c.mask[h.add(ek, h.neg(cur))]) {
                cur = h.add(cur, t);
                ++j;
            }
            units.push_back(mod_pow(g, j, p));
        }
        out.push_back({m, std::move(units)});
    }
    return out;
}

} // namespace

std::vector<GridEntry> structured_grid(long long max_order) {
    const std::vector<std::vector<long long>> h_list = {{2}, {3}, {4}, {2, 2}, {6}};
    const std::vector<long long> primes = {3, 5, 7, 11, 13, 17};
    std::vector<GridEntry> out;
    for (const auto& h_orders : h_list) {
        HSpace h(h_orders);
        if (h.size() > max_order) continue;
        // per prime: the usable actions and multiplicities
        struct Option {
            int delta;
            std::vector<long long> units;
        };
        std::vector<std::vector<Option>> options(primes.size());
        for (std::size_t pi = 0; pi < primes.size(); ++pi) {
            if (h.size() % primes[pi] == 0) continue; // would break coprimality
            for (const KernelAction& ka : kernel_actions(h, primes[pi]))
                for (int delta = 1; delta <= 2; ++delta)
                    options[pi].push_back({delta, ka.units});
        }
        // nonempty prime subsets, ascending bitmask
        for (unsigned mask = 1; mask < (1u << primes.size()); ++mask) {
            std::vector<std::size_t> used;
            long long base = h.size();
            bool feasible = true;
            for (std::size_t pi = 0; pi < primes.size(); ++pi) {
                if (!(mask & (1u << pi))) continue;
                if (options[pi].empty()) {
                    feasible = false;
                    break;
                }
                used.push_back(pi);
                base *= primes[pi]; // delta >= 1
            }
            if (!feasible || base > max_order) continue;
            // odometer over the per-prime options
            std::vector<std::size_t> pick(used.size(), 0);
            while (true) {
                StructuredGroup spec;
                spec.h_orders = h_orders;
                long long order = h.size();
                for (std::size_t u = 0; u < used.size(); ++u) {
                    const Option& o = options[used[u]][pick[u]];
                    spec.modules.push_back({primes[used[u]], o.delta, o.units});
                    for (int d = 0; d < o.delta; ++d) order *= primes[used[u]];
                }
                if (order <= max_order && is_valid(spec))
                    out.push_back({spec.id(), std::move(spec)});
                std::size_t pos = 0;
                while (pos < used.size() && pick[pos] + 1 == options[used[pos]].size())
                    pick[pos++] = 0;
                if (pos == used.size()) break;
                ++pick[pos];
            }
        }
    }
    return out;
}

} // namespace cimlab
