#pragma once

/* Dense linear algebra modulo small machine-word numbers.
 *
 * FpMat holds entries reduced into [0, mod). Row reduction, rank, kernels
 * and the incremental span helper require a prime modulus; plain
 * multiplication and traces are also used with prime power moduli (the
 * integer lifted arithmetic behind the radical chain), where no division
 * ever happens. All moduli here stay far below 2^31 so products fit in
 * int64.
 */

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ordlat {

using i64 = long long;

class FpMat {
public:
    FpMat() = default;
    FpMat(size_t r, size_t c, i64 mod) : r_(r), c_(c), mod_(mod), a_(r * c, 0) {
        if (mod < 2) throw std::runtime_error("FpMat: modulus must be at least 2");
    }

    static FpMat identity(size_t n, i64 mod) {
        FpMat m(n, n, mod);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    i64 mod() const { return mod_; }
    i64& at(size_t i, size_t j) { return a_[i * c_ + j]; }
    i64 at(size_t i, size_t j) const { return a_[i * c_ + j]; }

    std::vector<i64> row(size_t i) const {
        return std::vector<i64>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
    }
    void set_row(size_t i, const std::vector<i64>& r) {
        for (size_t j = 0; j < c_; ++j) at(i, j) = ((r[j] % mod_) + mod_) % mod_;
    }

private:
    size_t r_ = 0, c_ = 0;
    i64 mod_ = 2;
    std::vector<i64> a_;
};

inline FpMat fp_mul(const FpMat& A, const FpMat& B) {
    if (A.cols() != B.rows() || A.mod() != B.mod())
        throw std::runtime_error("fp_mul: shape or modulus mismatch");
    FpMat C(A.rows(), B.cols(), A.mod());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t k = 0; k < A.cols(); ++k) {
            i64 a = A.at(i, k);
            if (a == 0) continue;
            for (size_t j = 0; j < B.cols(); ++j)
                C.at(i, j) = (C.at(i, j) + a * B.at(k, j)) % A.mod();
        }
    return C;
}

inline i64 fp_inverse(i64 a, i64 p) {
    // extended euclid; p prime, a nonzero mod p
    i64 t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
    while (nr != 0) {
        i64 q = r / nr;
        i64 tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::runtime_error("fp_inverse: not invertible");
    return ((t % p) + p) % p;
}

/* Incremental row span over F_p: rows are kept fully reduced (each pivot 1,
 * pivot columns cleared everywhere else). */
class FpSpan {
public:
    FpSpan() = default;
    FpSpan(size_t cols, i64 p) : cols_(cols), p_(p) {}

    size_t dim() const { return rows_.size(); }
    size_t cols() const { return cols_; }

    // Reduces v against the span in place; afterwards v is the residual.
    void reduce(std::vector<i64>& v) const {
        for (size_t t = 0; t < rows_.size(); ++t) {
            i64 c = v[pivots_[t]] % p_;
            if (c == 0) continue;
            const auto& r = rows_[t];
            for (size_t j = 0; j < cols_; ++j)
                if (r[j] != 0) v[j] = ((v[j] - c * r[j]) % p_ + p_) % p_;
        }
        for (i64& x : v) x = ((x % p_) + p_) % p_;
    }

    bool member(std::vector<i64> v) const {
        reduce(v);
        for (i64 x : v)
            if (x != 0) return false;
        return true;
    }

    // Returns true if v enlarged the span.
    bool insert(std::vector<i64> v) {
        reduce(v);
        size_t piv = cols_;
        for (size_t j = 0; j < cols_; ++j)
            if (v[j] != 0) {
                piv = j;
                break;
            }
        if (piv == cols_) return false;
        i64 inv = fp_inverse(v[piv], p_);
        for (i64& x : v) x = (x * inv) % p_;
        // clear this column in the existing rows
        for (size_t t = 0; t < rows_.size(); ++t) {
            i64 c = rows_[t][piv];
            if (c == 0) continue;
            for (size_t j = 0; j < cols_; ++j)
                rows_[t][j] = ((rows_[t][j] - c * v[j]) % p_ + p_) % p_;
        }
        // keep rows ordered by pivot column
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
        rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
        pivots_.insert(pivots_.begin() + static_cast<long>(pos), piv);
        return true;
    }

    const std::vector<std::vector<i64>>& rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    FpMat matrix() const {
        FpMat m(rows_.size(), cols_, p_);
        for (size_t i = 0; i < rows_.size(); ++i) m.set_row(i, rows_[i]);
        return m;
    }

private:
    size_t cols_ = 0;
    i64 p_ = 2;
    std::vector<std::vector<i64>> rows_;
    std::vector<size_t> pivots_;
};

// Basis rows of { x : A x^T = 0 } over F_p (prime modulus).
inline std::vector<std::vector<i64>> fp_nullspace(const FpMat& A) {
    size_t r = A.rows(), c = A.cols();
    i64 p = A.mod();
    FpSpan span(c, p);
    for (size_t i = 0; i < r; ++i) span.insert(A.row(i));
    // rref rows with pivot columns; free columns parameterize the kernel
    const auto& rows = span.rows();
    const auto& piv = span.pivots();
    std::vector<bool> is_pivot(c, false);
    for (size_t t : piv) is_pivot[t] = true;
    std::vector<std::vector<i64>> kernel;
    for (size_t f = 0; f < c; ++f) {
        if (is_pivot[f]) continue;
        std::vector<i64> v(c, 0);
        v[f] = 1;
        for (size_t t = 0; t < rows.size(); ++t)
            v[piv[t]] = ((-rows[t][f]) % p + p) % p;
        kernel.push_back(std::move(v));
    }
    return kernel;
}

inline size_t fp_rank(const FpMat& A) {
    FpSpan span(A.cols(), A.mod());
    for (size_t i = 0; i < A.rows(); ++i) span.insert(A.row(i));
    return span.dim();
}

}  // namespace ordlat
