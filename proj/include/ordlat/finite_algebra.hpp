#pragma once

/* Finite dimensional F_p-algebras presented by structure constants, the
 * Jacobson radical, and semisimple quotients.
 *
 * An algebra usually arrives as Lambda/p Lambda for an order lattice
 * Lambda. Its structure constants are then genuine integers (coordinates
 * of basis products inside the lattice) stored modulo p^L, L chosen with
 * p^(L-1) >= dim.
 *
 * The radical is cut out by integer lifted trace forms: with V_0 = A,
 *
 *   V_{k+1} = { x in V_k : tr( (X Y)^(p^k) ) / p^k = 0 mod p  for all y in V_k },
 *
 * where X, Y are integer matrix lifts of left multiplication by x and y,
 * and the chain runs to the first l with p^l >= dim; V_{l+1} is the
 * radical. Traces of p^k-th powers of a fixed integer matrix are well
 * defined modulo p^(k+1) no matter which lift is chosen, so this works for
 * quotient algebras with representative lifts just as well as for exact
 * order reductions.
 */

#include <string>
#include <vector>

#include "ordlat/fpmat.hpp"
#include "ordlat/group.hpp"
#include "ordlat/lattice.hpp"

namespace ordlat {

struct FiniteAlgebra {
    unsigned long p = 2;
    unsigned lift_exp = 1;  // arithmetic modulus for lifted traces is p^lift_exp
    i64 modL = 2;
    size_t dim = 0;
    std::vector<i64> sc;    // dim^3 structure constants mod modL: e_i e_j = sum_k sc(i,j,k) e_k
    std::vector<i64> unit;  // coordinates of the identity mod modL

    i64 sc_at(size_t i, size_t j, size_t k) const { return sc[(i * dim + j) * dim + k]; }

    void set_moduli(unsigned long prime, size_t d) {
        p = prime;
        dim = d;
        lift_exp = 1;
        i64 pw = static_cast<i64>(p);
        while (pw < static_cast<i64>(d)) {
            pw *= static_cast<i64>(p);
            ++lift_exp;
        }
        ++lift_exp;  // one more than the chain depth
        modL = 1;
        for (unsigned i = 0; i < lift_exp; ++i) modL *= static_cast<i64>(p);
    }

    // x y via structure constants, modulo modL. Exact only when sc came
    // from an actual order; use for coordinate bookkeeping, not traces.
    std::vector<i64> mul(const std::vector<i64>& x, const std::vector<i64>& y) const {
        std::vector<i64> z(dim, 0);
        for (size_t i = 0; i < dim; ++i) {
            if (x[i] == 0) continue;
            for (size_t j = 0; j < dim; ++j) {
                if (y[j] == 0) continue;
                i64 c = (x[i] * y[j]) % modL;
                const i64* row = &sc[(i * dim + j) * dim];
                for (size_t k = 0; k < dim; ++k)
                    if (row[k] != 0) z[k] = (z[k] + c * row[k]) % modL;
            }
        }
        return z;
    }

    /* Matrix of left multiplication by x in row convention (row j holds the
     * coordinates of x e_j), entries modulo m. */
    FpMat left_matrix(const std::vector<i64>& x, i64 m) const {
        FpMat R(dim, dim, m);
        for (size_t i = 0; i < dim; ++i) {
            if (x[i] % m == 0) continue;
            i64 xi = ((x[i] % m) + m) % m;
            for (size_t j = 0; j < dim; ++j) {
                const i64* row = &sc[(i * dim + j) * dim];
                for (size_t k = 0; k < dim; ++k)
                    if (row[k] != 0) R.at(j, k) = (R.at(j, k) + xi * row[k]) % m;
            }
        }
        return R;
    }
};

/* Lambda/p Lambda for a lattice that is closed under multiplication and
 * contains the given identity element. Works for non-full lattices too
 * (component algebras); dimension is the lattice rank. */
inline FiniteAlgebra algebra_from_ring_lattice(const GroupLattice& L, const AlgebraElement& unit,
                                               unsigned long p) {
    const Group& G = L.group();
    size_t r = L.rank(), n = G.order();
    FiniteAlgebra A;
    A.set_moduli(p, r);
    A.sc.assign(r * r * r, 0);
    A.unit.assign(r, 0);
    if (r == 0) return A;
    Z modz(static_cast<unsigned long>(A.modL));
    auto store = [&](i64* dst, const std::vector<Z>& y) {
        for (size_t k = 0; k < r; ++k) {
            Z m = y[k] % modz;
            if (m < 0) m += modz;
            dst[k] = static_cast<i64>(m.get_ui());
        }
    };
    /* Basis products live in (1/den^2) conv(row_i, row_j); closure under
     * multiplication makes conv/den an integer vector in the row span, so
     * the coordinates come from one exact division and one triangular
     * integer solve per pair. */
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            std::vector<Z> c(n);
            for (size_t a = 0; a < n; ++a) {
                const Z& xa = L.basis().at(i, a);
                if (xa == 0) continue;
                for (size_t b = 0; b < n; ++b) {
                    const Z& yb = L.basis().at(j, b);
                    if (yb == 0) continue;
                    c[G.mul(static_cast<uint16_t>(a), static_cast<uint16_t>(b))] += xa * yb;
                }
            }
            for (Z& x : c) {
                if (!mpz_divisible_p(x.get_mpz_t(), L.den().get_mpz_t()))
                    throw error("algebra: lattice is not closed under multiplication");
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), L.den().get_mpz_t());
            }
            std::vector<Z> y = solve_int_row(L.basis(), L.pivots(), std::move(c));
            store(&A.sc[(i * r + j) * r], y);
        }
    std::vector<Z> uc(n);
    for (size_t a = 0; a < n; ++a) {
        Q q = unit.coef[a] * Q(L.den());
        if (q.get_den() != 1) throw error("algebra: identity not in the lattice");
        uc[a] = q.get_num();
    }
    std::vector<Z> u = solve_int_row(L.basis(), L.pivots(), std::move(uc));
    store(A.unit.data(), u);
    return A;
}

inline FiniteAlgebra algebra_mod_p(const GroupLattice& order, unsigned long p) {
    return algebra_from_ring_lattice(order, AlgebraElement::one(order.group()), p);
}

/* The lattice (1 - e_N) Z[G] for a normal subgroup N: the part of Z[G]
 * that the central idempotent e_N = (1/|N|) Tr(N) kills. */
inline GroupLattice complement_component_lattice(const Group& G, const Subgroup& N) {
    if (!G.is_normal(N)) throw error("component: subgroup must be normal");
    size_t n = G.order();
    Z m(static_cast<unsigned long>(N.order()));
    std::vector<std::vector<Z>> rows;
    for (uint16_t g = 0; g < n; ++g) {
        std::vector<Z> row(n);
        row[g] += m;
        for (uint16_t h : N.elems) row[G.mul(g, h)] -= 1;
        rows.push_back(std::move(row));
    }
    return GroupLattice::from_int_rows(G, rows, m);
}

inline FiniteAlgebra component_algebra(const Group& G, const Subgroup& N, unsigned long p) {
    GroupLattice C = complement_component_lattice(G, N);
    AlgebraElement u = AlgebraElement::one(G) - AlgebraElement::idempotent_of(G, N);
    return algebra_from_ring_lattice(C, u, p);
}

/* F_p basis of the Jacobson radical, as fully reduced rows in the
 * algebra's coordinates. */
inline std::vector<std::vector<i64>> radical_basis(const FiniteAlgebra& A) {
    if (A.dim == 0) return {};
    i64 p = static_cast<i64>(A.p);
    unsigned l = A.lift_exp - 1;  // p^l >= dim
    std::vector<std::vector<i64>> V;
    for (size_t i = 0; i < A.dim; ++i) {
        std::vector<i64> e(A.dim, 0);
        e[i] = 1;
        V.push_back(std::move(e));
    }
    for (unsigned k = 0; k <= l && !V.empty(); ++k) {
        i64 pk = 1;
        for (unsigned t = 0; t < k; ++t) pk *= p;
        size_t m = V.size();
        // lifted left multiplication matrices for the current basis
        std::vector<FpMat> R;
        R.reserve(m);
        for (const auto& v : V) R.push_back(A.left_matrix(v, A.modL));
        FpMat T(m, m, p);
        for (size_t jy = 0; jy < m; ++jy)
            for (size_t ix = 0; ix < m; ++ix) {
                FpMat P = fp_mul(R[ix], R[jy]);
                // P^(p^k) by repeated squaring on the exponent
                i64 e = pk;
                FpMat acc = FpMat::identity(A.dim, A.modL);
                FpMat base = P;
                while (e > 0) {
                    if (e & 1) acc = fp_mul(acc, base);
                    e >>= 1;
                    if (e > 0) base = fp_mul(base, base);
                }
                i64 tr = 0;
                for (size_t d = 0; d < A.dim; ++d) tr = (tr + acc.at(d, d)) % A.modL;
                if (tr % pk != 0) throw error("radical: trace divisibility failed");
                T.at(jy, ix) = (tr / pk) % p;
            }
        std::vector<std::vector<i64>> coeffs = fp_nullspace(T);
        FpSpan next(A.dim, p);
        for (const auto& c : coeffs) {
            std::vector<i64> w(A.dim, 0);
            for (size_t t = 0; t < m; ++t) {
                if (c[t] == 0) continue;
                for (size_t d = 0; d < A.dim; ++d) w[d] = (w[d] + c[t] * V[t][d]) % p;
            }
            next.insert(std::move(w));
        }
        V = next.rows();
    }
    return V;
}

/* The semisimple quotient B = A/rad. basis_cols names the complement
 * coordinates (non pivot columns of the radical span); lifting a B vector
 * back to A places its entries at those columns. */
struct SemisimpleQuotient {
    FiniteAlgebra B;
    std::vector<size_t> basis_cols;
    FpSpan radspan;

    SemisimpleQuotient() = default;
    SemisimpleQuotient(size_t cols, i64 p) : radspan(cols, p) {}

    std::vector<i64> project(std::vector<i64> v) const {
        radspan.reduce(v);
        std::vector<i64> out;
        out.reserve(basis_cols.size());
        for (size_t c : basis_cols) out.push_back(v[c]);
        return out;
    }

    std::vector<i64> lift(const std::vector<i64>& w) const {
        std::vector<i64> v(radspan.cols(), 0);
        for (size_t t = 0; t < basis_cols.size(); ++t) v[basis_cols[t]] = w[t];
        return v;
    }
};

inline SemisimpleQuotient quotient_by_radical(const FiniteAlgebra& A,
                                              const std::vector<std::vector<i64>>& rad) {
    i64 p = static_cast<i64>(A.p);
    SemisimpleQuotient Qt(A.dim, p);
    for (const auto& r : rad) Qt.radspan.insert(r);
    std::vector<bool> is_pivot(A.dim, false);
    for (size_t c : Qt.radspan.pivots()) is_pivot[c] = true;
    for (size_t c = 0; c < A.dim; ++c)
        if (!is_pivot[c]) Qt.basis_cols.push_back(c);
    size_t q = Qt.basis_cols.size();
    Qt.B.set_moduli(A.p, q);
    Qt.B.sc.assign(q * q * q, 0);
    Qt.B.unit.assign(q, 0);
    for (size_t a = 0; a < q; ++a)
        for (size_t b = 0; b < q; ++b) {
            std::vector<i64> prod(A.dim);
            for (size_t k = 0; k < A.dim; ++k)
                prod[k] = A.sc_at(Qt.basis_cols[a], Qt.basis_cols[b], k) % p;
            std::vector<i64> w = Qt.project(std::move(prod));
            for (size_t k = 0; k < q; ++k) Qt.B.sc[(a * q + b) * q + k] = w[k];
        }
    std::vector<i64> u(A.dim);
    for (size_t k = 0; k < A.dim; ++k) u[k] = A.unit[k] % p;
    Qt.B.unit = Qt.project(std::move(u));
    return Qt;
}

}  // namespace ordlat
