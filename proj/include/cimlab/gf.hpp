#pragma once

#include <vector>

#include "cimlab/errors.hpp"

namespace cimlab {

/// Dense matrix over GF(p), row-major.
struct ModMatrix {
    int rows = 0;
    int cols = 0;
    long long p = 2;
    std::vector<long long> a;

    ModMatrix() = default;
    ModMatrix(int r, int c, long long prime)
        : rows(r), cols(c), p(prime), a(static_cast<std::size_t>(r) * c, 0) {}

    long long& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    long long at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static ModMatrix identity(int n, long long p);
    static ModMatrix from_rows(const std::vector<std::vector<long long>>& rows,
                               long long p);

    bool operator==(const ModMatrix&) const = default;
};

ModMatrix mat_mul(const ModMatrix& x, const ModMatrix& y);
ModMatrix mat_pow(const ModMatrix& x, long long e);
ModMatrix mat_add(const ModMatrix& x, const ModMatrix& y);
ModMatrix mat_scale(const ModMatrix& x, long long c);
std::vector<long long> mat_apply(const ModMatrix& x, const std::vector<long long>& v);

int mat_rank(ModMatrix m);
long long mat_det(ModMatrix m);
ModMatrix mat_inverse(const ModMatrix& m); // throws UsageError if singular

/// Basis of {v : m v = 0}, in reduced echelon form.
std::vector<std::vector<long long>> kernel_basis(ModMatrix m);

/// Incremental solver for a system of affine equations over GF(p).
class LinearSolver {
public:
    LinearSolver(int vars, long long p) : vars_(vars), p_(p) {}

    /// Returns false once the system is inconsistent.
    bool add_equation(const std::vector<long long>& coeffs, long long rhs);

    bool consistent() const { return consistent_; }
    int rank() const { return static_cast<int>(pivots_.size()); }

    /// Number of solutions (0 if inconsistent, else p^(vars - rank)).
    long long solution_count() const;

private:
    int vars_;
    long long p_;
    bool consistent_ = true;
    std::vector<std::pair<int, std::vector<long long>>> pivots_; // (col, row|rhs)
};

} // namespace cimlab
