#include "cimlab/numth.hpp"

#include <algorithm>
#include <map>

#include "cimlab/errors.hpp"

namespace cimlab {

long long mod_pow(long long base, long long exp, long long m) {
    base %= m;
    if (base < 0) base += m;
    long long r = 1 % m;
    while (exp > 0) {
        if (exp & 1) r = (__int128)r * base % m;
        base = (__int128)base * base % m;
        exp >>= 1;
    }
    return r;
}

long long mod_inv(long long a, long long m) {
    long long g = m, x = 0, x1 = 1, a1 = a % m;
    if (a1 < 0) a1 += m;
    while (a1 != 0) {
        long long q = g / a1;
        g -= q * a1;
        std::swap(g, a1);
        x -= q * x1;
        std::swap(x, x1);
    }
    if (g != 1) throw UsageError("mod_inv: arguments are not coprime");
    x %= m;
    if (x < 0) x += m;
    return x;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> out;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<long long> prime_divisors(long long n) {
    std::vector<long long> out;
    for (auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

bool is_squarefree(long long n) {
    for (auto& [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

long long multiplicative_order(long long a, long long p) {
    a %= p;
    if (a <= 0) a += p;
    if (a == 0) throw UsageError("multiplicative_order: a divisible by p");
    long long ord = p - 1;
    for (long long q : prime_divisors(p - 1)) {
        while (ord % q == 0 && mod_pow(a, ord / q, p) == 1) ord /= q;
    }
    return ord;
}

long long smallest_unit_of_order(long long m, long long p) {
    if ((p - 1) % m != 0) throw UsageError("smallest_unit_of_order: m does not divide p-1");
    if (m == 1) return 1;
    for (long long a = 2; a < p; ++a)
        if (multiplicative_order(a, p) == m) return a;
    throw UsageError("smallest_unit_of_order: no unit found");
}

long long next_prime_congruent_one(long long m, const std::set<long long>& avoid,
                                   long long ceiling) {
    for (long long p = m + 1;; p += m) {
        if (p > ceiling)
            throw UsageError("prime search ceiling " + std::to_string(ceiling) +
                             " exceeded for p = 1 mod " + std::to_string(m));
        if (is_prime(p) && !avoid.count(p)) return p;
    }
}

std::vector<long long> invariant_factors_from_orders(std::vector<long long> orders) {
    std::map<long long, std::vector<int>> exps; // prime -> exponents, one per factor
    for (long long d : orders) {
        if (d <= 0) throw UsageError("invariant_factors_from_orders: nonpositive order");
        for (auto& [p, e] : factorize(d)) exps[p].push_back(e);
    }
    std::size_t k = 0;
    for (auto& [p, es] : exps) {
        std::sort(es.begin(), es.end(), std::greater<int>());
        k = std::max(k, es.size());
    }
    std::vector<long long> out(k, 1);
    for (auto& [p, es] : exps) {
        for (std::size_t i = 0; i < es.size(); ++i) {
            long long pw = 1;
            for (int j = 0; j < es[i]; ++j) pw *= p;
            out[i] *= pw; // out[0] = largest invariant factor
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

} // namespace cimlab
