#pragma once

#include <numeric>
#include <string>

namespace cimlab {

/// Reduced fraction with non-negative denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

} // namespace cimlab
