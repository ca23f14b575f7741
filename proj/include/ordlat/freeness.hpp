#pragma once

/* Local freeness of a full lattice M over an order Lambda acting on it
 * from the left, decided by exact computations modulo p.
 *
 * With J the radical of Lambda/p Lambda, B = (Lambda/p Lambda)/J and
 * X = M/(JM + pM), the lattice M is free of rank one over the
 * localization of Lambda exactly when X and B are isomorphic B-modules:
 * a generator of X lifts to a generator of M by Nakayama, and a cyclic
 * full lattice with zero annihilator is free. Whether X and B are
 * isomorphic is read off from hom dimensions, since for modules over a
 * semisimple algebra
 *
 *   hom(X,X) - 2 hom(X,B) + hom(B,B) = sum_i (x_i - b_i)^2 d_i >= 0,
 *
 * with equality exactly at equal multiplicities. Hom spaces are computed
 * from a generating set of the source and module generators of the
 * relation kernel, which keeps the linear systems small.
 */

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ordlat/finite_algebra.hpp"
#include "ordlat/lattice.hpp"

namespace ordlat {

// Reduction of one order modulo p: the algebra, its radical, and the
// semisimple quotient, computed once per (order, p).
struct OrderModP {
    FiniteAlgebra alg;
    std::vector<std::vector<i64>> rad;
    SemisimpleQuotient ss;
};

inline const OrderModP& order_mod_p(const GroupLattice& order, unsigned long p) {
    static std::map<std::string, std::shared_ptr<OrderModP>> cache;
    std::string key = order.key() + "#" + std::to_string(p);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto d = std::make_shared<OrderModP>();
        d->alg = algebra_mod_p(order, p);
        d->rad = radical_basis(d->alg);
        d->ss = quotient_by_radical(d->alg, d->rad);
        it = cache.emplace(key, std::move(d)).first;
    }
    return *it->second;
}

/* Action of the order's basis on M/pM: row j of the i-th matrix holds the
 * coordinates of (basis_i of the order) * (basis_j of M) in the basis of
 * M, modulo p. Requires order * M <= M. */
inline const std::vector<FpMat>& module_action(const GroupLattice& order, const GroupLattice& M,
                                               unsigned long p) {
    static std::map<std::string, std::shared_ptr<std::vector<FpMat>>> cache;
    std::string key = order.key() + "|" + M.key() + "#" + std::to_string(p);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    if (&order.group() != &M.group()) throw error("module_action: different groups");
    const Group& G = M.group();
    size_t n = G.order(), r = order.rank(), rm = M.rank();
    i64 pm = static_cast<i64>(p);
    auto mats = std::make_shared<std::vector<FpMat>>();
    mats->reserve(r);
    for (size_t i = 0; i < r; ++i) {
        FpMat R(rm, rm, pm);
        for (size_t j = 0; j < rm; ++j) {
            std::vector<Z> c(n);
            for (size_t a = 0; a < n; ++a) {
                const Z& xa = order.basis().at(i, a);
                if (xa == 0) continue;
                for (size_t b = 0; b < n; ++b) {
                    const Z& yb = M.basis().at(j, b);
                    if (yb == 0) continue;
                    c[G.mul(static_cast<uint16_t>(a), static_cast<uint16_t>(b))] += xa * yb;
                }
            }
            // (row_i/dO)(row_j/dM) lands in M, so conv/dO is in the span
            std::vector<Z> y;
            try {
                for (Z& x : c) {
                    if (!mpz_divisible_p(x.get_mpz_t(), order.den().get_mpz_t()))
                        throw error("divisibility");
                    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), order.den().get_mpz_t());
                }
                y = solve_int_row(M.basis(), M.pivots(), std::move(c));
            } catch (const error&) {
                throw error("module_action: lattice is not a module over the order");
            }
            std::vector<i64> row(rm);
            Z pz = Z(static_cast<unsigned long>(p));
            for (size_t k = 0; k < rm; ++k) {
                Z m = y[k] % pz;
                if (m < 0) m += pz;
                row[k] = static_cast<i64>(m.get_ui());
            }
            R.set_row(j, row);
        }
        mats->push_back(std::move(R));
    }
    it = cache.emplace(key, std::move(mats)).first;
    return *it->second;
}

/* dim Hom_B(X, Y) over F_p for left modules given by action matrices in
 * row convention (row j of act[t] = coordinates of b_t . e_j). actB is the
 * action of B on itself. The source is presented by a generating set and
 * maps are pinned down by module generators of the relation kernel. */
inline size_t hom_dim(const std::vector<FpMat>& actX, size_t dimX, const std::vector<FpMat>& actY,
                      size_t dimY, const std::vector<FpMat>& actB, size_t dimB, i64 p) {
    if (dimX == 0 || dimY == 0) return 0;
    // module generators of X: greedy over the standard basis
    FpSpan span(dimX, p);
    std::vector<size_t> gens;
    for (size_t j = 0; j < dimX; ++j) {
        std::vector<i64> e(dimX, 0);
        e[j] = 1;
        if (span.member(e)) continue;
        gens.push_back(j);
        for (size_t t = 0; t < dimB; ++t) span.insert(actX[t].row(j));
    }
    size_t k = gens.size();
    // Phi : B^k -> X, (w_1..w_k) -> sum w_j . g_j, as a matrix on rows
    FpMat Phi(k * dimB, dimX, p);
    for (size_t j = 0; j < k; ++j)
        for (size_t t = 0; t < dimB; ++t) Phi.set_row(j * dimB + t, actX[t].row(gens[j]));
    FpMat PhiT(dimX, k * dimB, p);
    for (size_t i = 0; i < Phi.rows(); ++i)
        for (size_t j = 0; j < dimX; ++j) PhiT.at(j, i) = Phi.at(i, j);
    std::vector<std::vector<i64>> kernel = fp_nullspace(PhiT);
    // module generators of the kernel inside B^k (blockwise B-action)
    FpSpan kspan(k * dimB, p);
    std::vector<std::vector<i64>> kgens;
    for (auto& w : kernel) {
        if (kspan.member(w)) continue;
        kgens.push_back(w);
        for (size_t s = 0; s < dimB; ++s) {
            std::vector<i64> img(k * dimB, 0);
            for (size_t j = 0; j < k; ++j)
                for (size_t a = 0; a < dimB; ++a) {
                    i64 wa = w[j * dimB + a];
                    if (wa == 0) continue;
                    for (size_t b = 0; b < dimB; ++b)
                        img[j * dimB + b] = (img[j * dimB + b] + wa * actB[s].at(a, b)) % p;
                }
            kspan.insert(std::move(img));
        }
    }
    /* A map B^k -> Y is a tuple (y_1..y_k); it descends to X exactly when
     * it kills the kernel generators. Unknowns are the entries of the y_j,
     * one block of equations per generator and output coordinate. */
    FpMat C(kgens.size() * dimY, k * dimY, p);
    for (size_t g = 0; g < kgens.size(); ++g)
        for (size_t j = 0; j < k; ++j) {
            FpMat W(dimY, dimY, p);
            for (size_t s = 0; s < dimB; ++s) {
                i64 ws = kgens[g][j * dimB + s];
                if (ws == 0) continue;
                for (size_t a = 0; a < dimY; ++a)
                    for (size_t b = 0; b < dimY; ++b)
                        W.at(a, b) = (W.at(a, b) + ws * actY[s].at(a, b)) % p;
            }
            for (size_t t = 0; t < dimY; ++t)
                for (size_t scol = 0; scol < dimY; ++scol)
                    C.at(g * dimY + scol, j * dimY + t) = W.at(t, scol);
        }
    return k * dimY - fp_rank(C);
}

struct FreenessReport {
    unsigned long p = 2;
    bool free = false;
    size_t dim_algebra = 0;    // Lambda/p Lambda
    size_t dim_radical = 0;    // its radical
    size_t dim_semisimple = 0;  // B
    size_t dim_fiber = 0;       // X = M/(JM + pM)
    size_t hom_xx = 0, hom_xb = 0, hom_bb = 0;
};

/* Decides whether M is locally free of rank one at p over the given order
 * (which must act on M). When the order is the associated order of M this
 * settles local freeness outright; for a smaller order a negative answer
 * only rules that order out. */
inline FreenessReport is_free_over(const GroupLattice& M, const GroupLattice& order,
                                   unsigned long p) {
    const OrderModP& D = order_mod_p(order, p);
    const std::vector<FpMat>& R = module_action(order, M, p);
    i64 pm = static_cast<i64>(p);
    size_t rm = M.rank();

    FreenessReport rep;
    rep.p = p;
    rep.dim_algebra = D.alg.dim;
    rep.dim_radical = D.rad.size();
    rep.dim_semisimple = D.ss.basis_cols.size();

    // span of J(M/pM): images of the basis of M under each radical element
    FpSpan jm(rm, pm);
    for (const auto& xi : D.rad) {
        FpMat A(rm, rm, pm);
        for (size_t i = 0; i < xi.size(); ++i) {
            if (xi[i] == 0) continue;
            for (size_t a = 0; a < rm; ++a)
                for (size_t b = 0; b < rm; ++b)
                    A.at(a, b) = (A.at(a, b) + xi[i] * R[i].at(a, b)) % pm;
        }
        for (size_t j = 0; j < rm; ++j) jm.insert(A.row(j));
    }
    std::vector<bool> ispiv(rm, false);
    for (size_t c : jm.pivots()) ispiv[c] = true;
    std::vector<size_t> xcols;
    for (size_t c = 0; c < rm; ++c)
        if (!ispiv[c]) xcols.push_back(c);
    size_t dx = xcols.size();
    size_t db = D.ss.basis_cols.size();
    rep.dim_fiber = dx;

    // action of the B-basis on X; a basis vector of B lifts to the order
    // basis vector at its column, and radical lifts act by zero on X
    std::vector<FpMat> actX(db, FpMat(dx, dx, pm));
    for (size_t t = 0; t < db; ++t) {
        size_t lam = D.ss.basis_cols[t];
        for (size_t a = 0; a < dx; ++a) {
            std::vector<i64> v = R[lam].row(xcols[a]);
            jm.reduce(v);
            for (size_t b = 0; b < dx; ++b) actX[t].at(a, b) = v[xcols[b]];
        }
    }
    std::vector<FpMat> actB(db, FpMat(db, db, pm));
    for (size_t t = 0; t < db; ++t)
        for (size_t a = 0; a < db; ++a)
            for (size_t b = 0; b < db; ++b) actB[t].at(a, b) = D.ss.B.sc_at(t, a, b) % pm;

    rep.hom_xx = hom_dim(actX, dx, actX, dx, actB, db, pm);
    rep.hom_xb = hom_dim(actX, dx, actB, db, actB, db, pm);
    rep.hom_bb = hom_dim(actB, db, actB, db, actB, db, pm);
    long long defect = static_cast<long long>(rep.hom_xx) + static_cast<long long>(rep.hom_bb) -
                       2 * static_cast<long long>(rep.hom_xb);
    rep.free = (defect == 0);
    return rep;
}

inline FreenessReport is_free_at_p(const GroupLattice& M, unsigned long p) {
    return is_free_over(M, associated_order(M), p);
}

/* One-sided maximality certificate: an order whose reduction mod p is
 * semisimple is maximal at p. A nonzero radical proves nothing either
 * way. */
struct MaximalityReport {
    bool certified = false;
    size_t dim_radical = 0;
};

inline MaximalityReport maximality_certificate(const GroupLattice& order, unsigned long p) {
    const OrderModP& D = order_mod_p(order, p);
    MaximalityReport rep;
    rep.dim_radical = D.rad.size();
    rep.certified = D.rad.empty();
    return rep;
}

/* Away-from-N maximality: when p does not divide |N|, semisimplicity of
 * the reduction of (1 - e_N) Z[G] certifies that the projection onto that
 * component is maximal at p. Returns false when nothing is certified. */
inline bool hybrid_component_maximal(const Group& G, const Subgroup& N, unsigned long p) {
    static std::map<std::string, bool> cache;
    std::string key = G.name() + "#" + std::to_string(p) + "#";
    for (uint16_t h : N.elems) key += std::to_string(h) + ",";
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    bool ok = false;
    if (N.order() % p != 0) {
        FiniteAlgebra A = component_algebra(G, N, p);
        ok = (A.dim == 0) || radical_basis(A).empty();
    }
    cache.emplace(key, ok);
    return ok;
}

/* Randomized search for x with M x = N locally at p. Every witness lies in
 * the colon lattice {x : M x <= N}; candidates are its basis rows followed
 * by random mod p combinations, filtered by a determinant valuation test
 * before the exact comparison. */
struct IsoSearchResult {
    enum class Status { found, distinct_orders, inconclusive };
    Status status = Status::inconclusive;
    std::optional<AlgebraElement> witness;
    unsigned long attempts = 0;
};

inline IsoSearchResult find_local_isomorphism(const GroupLattice& M, const GroupLattice& N,
                                              unsigned long p, unsigned long max_attempts = 10000,
                                              unsigned long seed = 1) {
    if (&M.group() != &N.group()) throw error("iso search: different groups");
    if (!M.full() || !N.full()) throw error("iso search: lattices must be full rank");
    IsoSearchResult res;
    // right multiplication by a unit never changes the associated order
    if (!equal_at_p(associated_order(M), associated_order(N), p)) {
        res.status = IsoSearchResult::Status::distinct_orders;
        return res;
    }
    const Group& G = M.group();
    size_t n = G.order();
    GroupLattice H = right_colon(N, M);  // {x : M x <= N}

    /* M x = N at p forces v_p(det rho(x)) to match the covolume gap, and
     * integer candidates y = denH * x then need v_p(det rho(y)) equal to a
     * fixed target. */
    long tM = static_cast<long>(vp(det_upper_triangular(M.basis()), p)) -
              static_cast<long>(n * vp(M.den(), p));
    long tN = static_cast<long>(vp(det_upper_triangular(N.basis()), p)) -
              static_cast<long>(n * vp(N.den(), p));
    long target = tN - tM + static_cast<long>(n * vp(H.den(), p));
    if (target < 0) return res;

    std::mt19937_64 rng(seed);
    size_t r = H.rank();
    for (unsigned long att = 0; att < max_attempts; ++att) {
        std::vector<Z> y(n);
        if (att < r) {
            for (size_t j = 0; j < n; ++j) y[j] = H.basis().at(att, j);
        } else {
            bool all0 = true;
            for (size_t t = 0; t < r; ++t) {
                unsigned long c = rng() % p;
                if (c == 0) continue;
                all0 = false;
                Z cz(c);
                for (size_t j = 0; j < n; ++j)
                    if (H.basis().at(t, j) != 0) y[j] += cz * H.basis().at(t, j);
            }
            if (all0) continue;
        }
        ++res.attempts;
        Z det = bareiss_det(right_mul_matrix(G, y));
        if (det == 0) continue;
        if (static_cast<long>(vp(det, p)) != target) continue;
        AlgebraElement x = AlgebraElement::one(G);
        for (size_t j = 0; j < n; ++j) {
            x.coef[j] = Q(y[j]) / Q(H.den());
            x.coef[j].canonicalize();
        }
        if (equal_at_p(mul_right(M, x), N, p)) {
            res.status = IsoSearchResult::Status::found;
            res.witness = x;
            return res;
        }
    }
    return res;
}

}  // namespace ordlat
