#include "cimlab/gf.hpp"

#include "cimlab/numth.hpp"

namespace cimlab {

ModMatrix ModMatrix::identity(int n, long long p) {
    ModMatrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1 % p;
    return m;
}

ModMatrix ModMatrix::from_rows(const std::vector<std::vector<long long>>& rows,
                               long long p) {
    ModMatrix m(static_cast<int>(rows.size()),
                rows.empty() ? 0 : static_cast<int>(rows[0].size()), p);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            long long v = rows[i][j] % p;
            if (v < 0) v += p;
            m.at(i, j) = v;
        }
    return m;
}

ModMatrix mat_mul(const ModMatrix& x, const ModMatrix& y) {
    if (x.cols != y.rows || x.p != y.p) throw UsageError("mat_mul: shape mismatch");
    ModMatrix r(x.rows, y.cols, x.p);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            long long v = x.at(i, k);
            if (!v) continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) = (r.at(i, j) + v * y.at(k, j)) % x.p;
        }
    return r;
}

ModMatrix mat_pow(const ModMatrix& x, long long e) {
    ModMatrix r = ModMatrix::identity(x.rows, x.p);
    ModMatrix base = x;
    while (e > 0) {
        if (e & 1) r = mat_mul(r, base);
        base = mat_mul(base, base);
        e >>= 1;
    }
    return r;
}

ModMatrix mat_add(const ModMatrix& x, const ModMatrix& y) {
    ModMatrix r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = (r.a[i] + y.a[i]) % r.p;
    return r;
}

ModMatrix mat_scale(const ModMatrix& x, long long c) {
    ModMatrix r = x;
    c %= r.p;
    if (c < 0) c += r.p;
    for (auto& v : r.a) v = v * c % r.p;
    return r;
}

std::vector<long long> mat_apply(const ModMatrix& x, const std::vector<long long>& v) {
    std::vector<long long> r(x.rows, 0);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r[i] = (r[i] + x.at(i, j) * v[j]) % x.p;
    return r;
}

namespace {

// in-place row echelon; returns (rank, det sign ignored)
int echelon(ModMatrix& m, long long* det = nullptr) {
    long long d = 1 % m.p;
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows; ++i)
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) {
            d = 0;
            continue;
        }
        if (pivot != rank) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
            d = (m.p - d) % m.p;
        }
        long long inv = mod_inv(m.at(rank, col), m.p);
        d = d * m.at(rank, col) % m.p;
        for (int j = col; j < m.cols; ++j) m.at(rank, j) = m.at(rank, j) * inv % m.p;
        for (int i = 0; i < m.rows; ++i) {
            if (i == rank || m.at(i, col) == 0) continue;
            long long f = m.at(i, col);
            for (int j = col; j < m.cols; ++j)
                m.at(i, j) = (m.at(i, j) + (m.p - f) * m.at(rank, j)) % m.p;
        }
        ++rank;
    }
    if (det) *det = (rank == m.rows && m.rows == m.cols) ? d : 0;
    return rank;
}

} // namespace

int mat_rank(ModMatrix m) { return echelon(m); }

long long mat_det(ModMatrix m) {
    if (m.rows != m.cols) throw UsageError("mat_det: non-square matrix");
    long long d = 0;
    echelon(m, &d);
    return d;
}

ModMatrix mat_inverse(const ModMatrix& m) {
    if (m.rows != m.cols) throw UsageError("mat_inverse: non-square matrix");
    ModMatrix aug(m.rows, 2 * m.cols, m.p);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols + i) = 1;
    }
    int rank = echelon(aug);
    if (rank != m.rows) throw UsageError("mat_inverse: singular matrix");
    ModMatrix r(m.rows, m.cols, m.p);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.at(i, j) = aug.at(i, m.cols + j);
    return r;
}

std::vector<std::vector<long long>> kernel_basis(ModMatrix m) {
    int n = m.cols;
    echelon(m);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(n, false);
    for (int i = 0; i < m.rows; ++i) {
        int col = -1;
        for (int j = 0; j < n; ++j)
            if (m.at(i, j) != 0) {
                col = j;
                break;
            }
        if (col >= 0) {
            pivot_col.push_back(col);
            is_pivot[col] = true;
        }
    }
    std::vector<std::vector<long long>> basis;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<long long> v(n, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = (m.p - m.at(static_cast<int>(i), f)) % m.p;
        basis.push_back(std::move(v));
    }
    return basis;
}

bool LinearSolver::add_equation(const std::vector<long long>& coeffs, long long rhs) {
    if (!consistent_) return false;
    std::vector<long long> row(vars_ + 1);
    for (int j = 0; j < vars_; ++j) {
        row[j] = coeffs[j] % p_;
        if (row[j] < 0) row[j] += p_;
    }
    row[vars_] = ((rhs % p_) + p_) % p_;
    for (auto& [col, prow] : pivots_) {
        if (row[col] == 0) continue;
        long long f = row[col];
        for (int j = 0; j <= vars_; ++j) row[j] = (row[j] + (p_ - f) * prow[j]) % p_;
    }
    int col = -1;
    for (int j = 0; j < vars_; ++j)
        if (row[j] != 0) {
            col = j;
            break;
        }
    if (col < 0) {
        if (row[vars_] != 0) consistent_ = false;
        return consistent_;
    }
    long long inv = mod_inv(row[col], p_);
    for (int j = 0; j <= vars_; ++j) row[j] = row[j] * inv % p_;
    pivots_.emplace_back(col, std::move(row));
    return true;
}

long long LinearSolver::solution_count() const {
    if (!consistent_) return 0;
    long long c = 1;
    for (int k = rank(); k < vars_; ++k) c *= p_;
    return c;
}

} // namespace cimlab
