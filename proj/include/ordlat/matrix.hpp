#pragma once

/* Exact dense integer matrices (GMP) and the row Hermite normal form.
 *
 * Conventions:
 *   * matrices are row major, entry (i, j) via at(i, j)
 *   * HNF here is the row version: pivots move right as rows go down,
 *     every pivot is positive, and entries above a pivot are reduced into
 *     [0, pivot); a full rank n x n HNF matrix is upper triangular
 *   * lattices elsewhere store a basis as HNF rows over a common positive
 *     denominator, so everything in this file stays in Z
 */

#include <cstddef>
#include <gmpxx.h>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordlat {

using Z = mpz_class;
using Q = mpq_class;

using error = std::runtime_error;

class ZMat {
public:
    ZMat() = default;
    ZMat(size_t r, size_t c) : r_(r), c_(c), a_(r * c) {}

    static ZMat identity(size_t n) {
        ZMat m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static ZMat from_rows(const std::vector<std::vector<Z>>& rows, size_t cols) {
        ZMat m(rows.size(), cols);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw error("ZMat: ragged rows");
            for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    Z& at(size_t i, size_t j) { return a_[i * c_ + j]; }
    const Z& at(size_t i, size_t j) const { return a_[i * c_ + j]; }

    std::vector<Z> row(size_t i) const {
        return std::vector<Z>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
    }

    std::vector<std::vector<Z>> to_rows() const {
        std::vector<std::vector<Z>> out;
        out.reserve(r_);
        for (size_t i = 0; i < r_; ++i) out.push_back(row(i));
        return out;
    }

    ZMat transpose() const {
        ZMat t(c_, r_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool operator==(const ZMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

private:
    size_t r_ = 0, c_ = 0;
    std::vector<Z> a_;
};

inline ZMat mul(const ZMat& A, const ZMat& B) {
    if (A.cols() != B.rows()) throw error("ZMat: dimension mismatch in product");
    ZMat C(A.rows(), B.cols());
    Z t;
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t k = 0; k < A.cols(); ++k) {
            const Z& aik = A.at(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < B.cols(); ++j) {
                t = aik * B.at(k, j);
                C.at(i, j) += t;
            }
        }
    return C;
}

/* Incremental row HNF. Rows are fed one at a time and folded into the
 * current basis with extended gcd steps. Stored rows always have their
 * first nonzero entry at their pivot column. After each insertion only the
 * pivot columns that actually changed are re-reduced, which keeps entry
 * growth tame without quadratic sweeps; take() does one final full
 * canonical pass. */
class HnfBuilder {
public:
    explicit HnfBuilder(size_t cols) : cols_(cols) {}

    void add_row(std::vector<Z> r) {
        if (r.size() != cols_) throw error("HnfBuilder: wrong row length");
        std::vector<size_t> touched;
        for (size_t col = 0; col < cols_; ++col) {
            if (r[col] == 0) continue;
            auto it = rows_.find(col);
            if (it == rows_.end()) {
                if (r[col] < 0)
                    for (Z& x : r) x = -x;
                rows_.emplace(col, std::move(r));
                touched.push_back(col);
                break;
            }
            std::vector<Z>& piv = it->second;
            if (mpz_divisible_p(r[col].get_mpz_t(), piv[col].get_mpz_t())) {
                Z q = r[col] / piv[col];
                for (size_t j = col; j < cols_; ++j)
                    if (piv[j] != 0) r[j] -= q * piv[j];
            } else {
                Z g, u, v;
                mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), piv[col].get_mpz_t(),
                           r[col].get_mpz_t());
                Z a = piv[col] / g, b = r[col] / g;
                std::vector<Z> np(cols_), nr(cols_);
                for (size_t j = col; j < cols_; ++j) {
                    np[j] = u * piv[j] + v * r[j];
                    nr[j] = a * r[j] - b * piv[j];
                }
                piv = std::move(np);
                r = std::move(nr);
                touched.push_back(col);
            }
        }
        for (size_t col : touched) reduce_around(col);
    }

    void add_rows(const std::vector<std::vector<Z>>& rows) {
        for (const auto& r : rows) add_row(r);
    }

    size_t rank() const { return rows_.size(); }

    // Canonical HNF rows in pivot order plus the pivot columns.
    std::pair<ZMat, std::vector<size_t>> take() {
        full_reduce();
        std::vector<std::vector<Z>> out;
        std::vector<size_t> pivots;
        for (auto& [col, row] : rows_) {
            pivots.push_back(col);
            out.push_back(std::move(row));
        }
        rows_.clear();
        return {ZMat::from_rows(out, cols_), std::move(pivots)};
    }

private:
    // Shrink the row with pivot at `col` against pivots to its right, then
    // shrink every earlier row's entry in column `col`.
    void reduce_around(size_t col) {
        auto it = rows_.find(col);
        std::vector<Z>& piv = it->second;
        for (auto jt = std::next(it); jt != rows_.end(); ++jt)
            reduce_entry(piv, jt->second, jt->first);
        for (auto jt = rows_.begin(); jt != it; ++jt) reduce_entry(jt->second, piv, col);
    }

    void reduce_entry(std::vector<Z>& row, const std::vector<Z>& piv, size_t col) {
        if (row[col] == 0) return;
        Z q;
        mpz_fdiv_q(q.get_mpz_t(), row[col].get_mpz_t(), piv[col].get_mpz_t());
        if (q == 0) return;
        for (size_t j = col; j < cols_; ++j)
            if (piv[j] != 0) row[j] -= q * piv[j];
    }

    void full_reduce() {
        for (auto& [col, piv] : rows_)
            for (auto& [col2, other] : rows_) {
                if (col2 >= col) break;
                reduce_entry(other, piv, col);
            }
    }

    size_t cols_;
    std::map<size_t, std::vector<Z>> rows_;  // pivot column -> row
};

inline std::pair<ZMat, std::vector<size_t>> row_hnf(const std::vector<std::vector<Z>>& rows,
                                                    size_t cols) {
    HnfBuilder b(cols);
    b.add_rows(rows);
    return b.take();
}

inline Z det_upper_triangular(const ZMat& T) {
    if (T.rows() != T.cols()) throw error("det: not square");
    Z d = 1;
    for (size_t i = 0; i < T.rows(); ++i) d *= T.at(i, i);
    return d;
}

/* Adjugate of an invertible upper triangular integer matrix, computed by
 * exact back substitution on T X = det(T) I. Every division below is exact
 * because the true solution is the integral adjugate. */
inline ZMat upper_triangular_adjugate(const ZMat& T, const Z& det) {
    size_t n = T.rows();
    if (T.cols() != n) throw error("adjugate: not square");
    ZMat X(n, n);
    Z acc, q, rem;
    for (size_t col = 0; col < n; ++col) {
        for (size_t i = n; i-- > 0;) {
            acc = (i == col) ? det : Z(0);
            for (size_t k = i + 1; k < n; ++k)
                if (T.at(i, k) != 0 && X.at(k, col) != 0) acc -= T.at(i, k) * X.at(k, col);
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(), T.at(i, i).get_mpz_t());
            if (rem != 0) throw error("adjugate: inexact division, matrix not triangular?");
            X.at(i, col) = q;
        }
    }
    return X;
}

// Fraction free determinant (Bareiss). Works on any square integer matrix.
inline Z bareiss_det(ZMat A) {
    size_t n = A.rows();
    if (A.cols() != n) throw error("det: not square");
    if (n == 0) return 1;
    int sign = 1;
    Z prev = 1, t;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (A.at(k, k) == 0) {
            size_t r = k + 1;
            while (r < n && A.at(r, k) == 0) ++r;
            if (r == n) return 0;
            for (size_t j = k; j < n; ++j) std::swap(A.at(k, j), A.at(r, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                t = A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j);
                mpz_divexact(A.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            A.at(i, k) = 0;
        }
        prev = A.at(k, k);
    }
    return sign < 0 ? Z(-A.at(n - 1, n - 1)) : A.at(n - 1, n - 1);
}

/* Solves z B = c exactly over Z for a row c in the integer row span of the
 * HNF matrix B (pivot columns given). Throws if c is not in the span. */
inline std::vector<Z> solve_int_row(const ZMat& B, const std::vector<size_t>& pivots,
                                    std::vector<Z> c) {
    std::vector<Z> z(B.rows());
    for (size_t t = 0; t < B.rows(); ++t) {
        size_t col = pivots[t];
        if (c[col] == 0) continue;
        if (!mpz_divisible_p(c[col].get_mpz_t(), B.at(t, col).get_mpz_t()))
            throw error("solve_int_row: not in the integer row span");
        mpz_divexact(z[t].get_mpz_t(), c[col].get_mpz_t(), B.at(t, col).get_mpz_t());
        for (size_t j = col; j < c.size(); ++j)
            if (B.at(t, j) != 0) c[j] -= z[t] * B.at(t, j);
    }
    for (const Z& x : c)
        if (x != 0) throw error("solve_int_row: not in the integer row span");
    return z;
}

inline unsigned long vp(const Z& x, unsigned long p) {
    if (x == 0) throw error("vp: valuation of zero");
    Z tmp, pz(static_cast<unsigned long>(p));
    return mpz_remove(tmp.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
}

inline long vp(const Q& x, unsigned long p) {
    if (x == 0) throw error("vp: valuation of zero");
    return static_cast<long>(vp(Z(x.get_num()), p)) - static_cast<long>(vp(Z(x.get_den()), p));
}

}  // namespace ordlat
