#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace cimlab {

long long mod_pow(long long base, long long exp, long long m);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
long long mod_inv(long long a, long long m);

bool is_prime(long long n);
std::vector<std::pair<long long, int>> factorize(long long n);
std::vector<long long> prime_divisors(long long n);
bool is_squarefree(long long n);

/// Order of a in the multiplicative group modulo p (p prime, p does not divide a).
long long multiplicative_order(long long a, long long p);

/// Least unit of multiplicative order exactly m modulo p; requires m | p-1.
long long smallest_unit_of_order(long long m, long long p);

/// Least prime p with p = 1 (mod m), p not in `avoid`, p <= ceiling.
/// Throws UsageError if the search ceiling is exceeded.
long long next_prime_congruent_one(long long m, const std::set<long long>& avoid,
                                   long long ceiling);

/// Invariant factors d_1 | d_2 | ... of the abelian group C_{orders[0]} x ...,
/// returned ascending. Trivial factors are dropped; the trivial group gives {}.
std::vector<long long> invariant_factors_from_orders(std::vector<long long> orders);

} // namespace cimlab
