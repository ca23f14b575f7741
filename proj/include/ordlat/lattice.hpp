#pragma once

/* Lattices in Q[G].
 *
 * A lattice is stored as an integer basis in row HNF over one positive
 * denominator: L = (1/den) * rowspan_Z(basis). The pair (den, basis) is
 * canonical (gcd of all basis entries and den is 1), so two lattices are
 * equal iff their stored forms are identical. Most operations reduce to
 * HNF plus the dual
 *     dual(L) = { v : <v, u> in Z for all u in L },
 * whose basis rows for a full lattice are den * (basis^-1)^T. Colon
 * lattices { x : x N <= M } come out as duals of stacked multiplication
 * matrices, and intersections as duals of sums of duals.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ordlat/algebra.hpp"
#include "ordlat/group.hpp"
#include "ordlat/matrix.hpp"

namespace ordlat {

class GroupLattice {
public:
    GroupLattice() = default;

    static GroupLattice from_int_rows(const Group& G, const std::vector<std::vector<Z>>& rows,
                                      Z den) {
        if (den <= 0) throw error("GroupLattice: denominator must be positive");
        auto [mat, pivots] = row_hnf(rows, G.order());
        GroupLattice L;
        L.G_ = &G;
        L.den_ = std::move(den);
        L.basis_ = std::move(mat);
        L.pivots_ = std::move(pivots);
        L.reduce_content();
        return L;
    }

    static GroupLattice from_elements(const Group& G, const std::vector<AlgebraElement>& gens) {
        auto [rows, den] = common_denominator(gens);
        return from_int_rows(G, rows, den);
    }

    /* Z[G]-module generated by the given elements: the Z-span of g * x over
     * all group elements g and generators x. */
    static GroupLattice from_module_generators(const Group& G,
                                               const std::vector<AlgebraElement>& gens) {
        auto [rows, den] = common_denominator(gens);
        std::vector<std::vector<Z>> all;
        for (const auto& r : rows)
            for (uint16_t g = 0; g < G.order(); ++g) {
                std::vector<Z> row(G.order());
                for (size_t i = 0; i < G.order(); ++i)
                    if (r[i] != 0) row[G.mul(g, static_cast<uint16_t>(i))] = r[i];
                all.push_back(std::move(row));
            }
        return from_int_rows(G, all, den);
    }

    static GroupLattice zg(const Group& G) {
        GroupLattice L;
        L.G_ = &G;
        L.den_ = 1;
        L.basis_ = ZMat::identity(G.order());
        L.pivots_.resize(G.order());
        for (size_t i = 0; i < G.order(); ++i) L.pivots_[i] = i;
        return L;
    }

    const Group& group() const { return *G_; }

    /* The same basis over another instance of the same group. Element order
     * is canonical per name, so the module transfers verbatim. */
    GroupLattice over(const Group& g) const {
        if (G_ && (g.name() != G_->name() || g.order() != G_->order()))
            throw error("over: lattice belongs to a different group");
        GroupLattice L = *this;
        L.G_ = &g;
        return L;
    }

    /* The same data bound to no group, safe to keep in caches that outlive
     * the instance it was computed over; rebind with over() before use. */
    GroupLattice detached() const {
        GroupLattice L = *this;
        L.G_ = nullptr;
        return L;
    }

    const ZMat& basis() const { return basis_; }
    const Z& den() const { return den_; }
    const std::vector<size_t>& pivots() const { return pivots_; }
    size_t rank() const { return basis_.rows(); }
    bool full() const { return G_ && rank() == G_->order(); }

    AlgebraElement basis_element(size_t i) const {
        AlgebraElement x(*G_);
        for (size_t j = 0; j < G_->order(); ++j) {
            x.coef[j] = Q(basis_.at(i, j)) / Q(den_);
            x.coef[j].canonicalize();
        }
        return x;
    }

    std::vector<AlgebraElement> basis_elements() const {
        std::vector<AlgebraElement> out;
        for (size_t i = 0; i < rank(); ++i) out.push_back(basis_element(i));
        return out;
    }

    bool contains_vector(const std::vector<Q>& v) const {
        std::vector<Z> w(v.size());
        for (size_t i = 0; i < v.size(); ++i) {
            Q t = v[i] * den_;
            t.canonicalize();
            if (t.get_den() != 1) return false;
            w[i] = t.get_num();
        }
        return reduces_to_zero(std::move(w));
    }

    bool contains_element(const AlgebraElement& x) const { return contains_vector(x.coef); }

    bool contains(const GroupLattice& sub) const {
        if (G_ != sub.G_) throw error("contains: different groups");
        // this >= sub: each basis row of sub, over sub's denominator, lies here
        for (size_t i = 0; i < sub.rank(); ++i) {
            std::vector<Z> w(basis_.cols());
            Q t;
            bool ok = true;
            for (size_t j = 0; j < basis_.cols(); ++j) {
                t = Q(sub.basis_.at(i, j)) * Q(den_) / Q(sub.den_);
                t.canonicalize();
                if (t.get_den() != 1) {
                    ok = false;
                    break;
                }
                w[j] = t.get_num();
            }
            if (!ok || !reduces_to_zero(std::move(w))) return false;
        }
        return true;
    }

    bool operator==(const GroupLattice& o) const {
        return G_ == o.G_ && den_ == o.den_ && basis_ == o.basis_;
    }
    bool operator!=(const GroupLattice& o) const { return !(*this == o); }

    // Stable text form for cache keys and debug dumps.
    std::string key() const {
        std::string s = G_->name() + "|" + den_.get_str() + "|";
        for (size_t i = 0; i < basis_.rows(); ++i)
            for (size_t j = 0; j < basis_.cols(); ++j) s += basis_.at(i, j).get_str() + ",";
        return s;
    }

private:
    bool reduces_to_zero(std::vector<Z> w) const {
        for (size_t t = 0; t < pivots_.size(); ++t) {
            size_t c = pivots_[t];
            if (w[c] == 0) continue;
            if (!mpz_divisible_p(w[c].get_mpz_t(), basis_.at(t, c).get_mpz_t())) return false;
            Z q;
            mpz_divexact(q.get_mpz_t(), w[c].get_mpz_t(), basis_.at(t, c).get_mpz_t());
            for (size_t j = c; j < w.size(); ++j)
                if (basis_.at(t, j) != 0) w[j] -= q * basis_.at(t, j);
        }
        for (const Z& x : w)
            if (x != 0) return false;
        return true;
    }

    void reduce_content() {
        Z g = den_;
        for (size_t i = 0; i < basis_.rows() && g != 1; ++i)
            for (size_t j = 0; j < basis_.cols() && g != 1; ++j)
                if (basis_.at(i, j) != 0)
                    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), basis_.at(i, j).get_mpz_t());
        if (basis_.rows() == 0) g = den_;  // zero lattice: normalize den to 1
        if (g != 1) {
            for (size_t i = 0; i < basis_.rows(); ++i)
                for (size_t j = 0; j < basis_.cols(); ++j)
                    if (basis_.at(i, j) != 0)
                        mpz_divexact(basis_.at(i, j).get_mpz_t(), basis_.at(i, j).get_mpz_t(),
                                     g.get_mpz_t());
            mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
        }
    }

    const Group* G_ = nullptr;
    Z den_ = 1;
    ZMat basis_;
    std::vector<size_t> pivots_;
};

inline GroupLattice sum(const GroupLattice& A, const GroupLattice& B) {
    if (&A.group() != &B.group()) throw error("sum: different groups");
    Z l;
    mpz_lcm(l.get_mpz_t(), A.den().get_mpz_t(), B.den().get_mpz_t());
    Z fa = l / A.den(), fb = l / B.den();
    std::vector<std::vector<Z>> rows;
    for (size_t i = 0; i < A.rank(); ++i) {
        auto r = A.basis().row(i);
        for (Z& x : r) x *= fa;
        rows.push_back(std::move(r));
    }
    for (size_t i = 0; i < B.rank(); ++i) {
        auto r = B.basis().row(i);
        for (Z& x : r) x *= fb;
        rows.push_back(std::move(r));
    }
    return GroupLattice::from_int_rows(A.group(), rows, l);
}

inline GroupLattice dual(const GroupLattice& L) {
    if (!L.full()) throw error("dual: lattice is not full rank");
    Z D = det_upper_triangular(L.basis());
    ZMat adjT = upper_triangular_adjugate(L.basis(), D).transpose();
    std::vector<std::vector<Z>> rows = adjT.to_rows();
    for (auto& r : rows)
        for (Z& x : r) x *= L.den();
    return GroupLattice::from_int_rows(L.group(), rows, D);
}

inline GroupLattice intersect(const GroupLattice& A, const GroupLattice& B) {
    return dual(sum(dual(A), dual(B)));
}

inline GroupLattice scale(const GroupLattice& L, const Q& s) {
    if (s == 0) throw error("scale: zero scalar");
    Z num = s.get_num() < 0 ? Z(-s.get_num()) : Z(s.get_num());
    std::vector<std::vector<Z>> rows = L.basis().to_rows();
    for (auto& r : rows)
        for (Z& x : r) x *= num;
    return GroupLattice::from_int_rows(L.group(), rows, L.den() * s.get_den());
}

// L * x, the image of L under right multiplication by x.
inline GroupLattice mul_right(const GroupLattice& L, const AlgebraElement& x) {
    auto [xr, xd] = common_denominator({x});
    ZMat R = right_mul_matrix(L.group(), xr[0]);
    ZMat M = mul(L.basis(), R.transpose());
    return GroupLattice::from_int_rows(L.group(), M.to_rows(), L.den() * xd);
}

// x * L.
inline GroupLattice mul_left(const AlgebraElement& x, const GroupLattice& L) {
    auto [xr, xd] = common_denominator({x});
    ZMat M = mul(L.basis(), left_mul_matrix(L.group(), xr[0]).transpose());
    return GroupLattice::from_int_rows(L.group(), M.to_rows(), L.den() * xd);
}

// g L g^-1, a coordinate permutation.
inline GroupLattice conjugate(const GroupLattice& L, uint16_t g) {
    const Group& G = L.group();
    std::vector<std::vector<Z>> rows(L.rank(), std::vector<Z>(G.order()));
    for (size_t i = 0; i < L.rank(); ++i)
        for (size_t j = 0; j < G.order(); ++j)
            if (L.basis().at(i, j) != 0)
                rows[i][G.conj(g, static_cast<uint16_t>(j))] = L.basis().at(i, j);
    return GroupLattice::from_int_rows(G, rows, L.den());
}

// Z-span of all pairwise products of basis elements of A and B.
inline GroupLattice product(const GroupLattice& A, const GroupLattice& B) {
    if (&A.group() != &B.group()) throw error("product: different groups");
    const Group& G = A.group();
    size_t n = G.order();
    HnfBuilder hb(n);
    for (size_t i = 0; i < A.rank(); ++i)
        for (size_t j = 0; j < B.rank(); ++j) {
            std::vector<Z> row(n);
            for (size_t a = 0; a < n; ++a) {
                const Z& xa = A.basis().at(i, a);
                if (xa == 0) continue;
                for (size_t b = 0; b < n; ++b) {
                    const Z& yb = B.basis().at(j, b);
                    if (yb == 0) continue;
                    row[G.mul(static_cast<uint16_t>(a), static_cast<uint16_t>(b))] += xa * yb;
                }
            }
            hb.add_row(std::move(row));
        }
    auto [mat, pivots] = hb.take();
    return GroupLattice::from_int_rows(G, mat.to_rows(), A.den() * B.den());
}

/* { x in Q[G] : x N <= M } for full lattices M, N. Writing the membership
 * conditions against every basis row of N and clearing denominators turns
 * the set into the dual of an explicit stacked lattice. */
inline GroupLattice left_colon(const GroupLattice& M, const GroupLattice& N) {
    if (&M.group() != &N.group()) throw error("colon: different groups");
    if (!M.full() || !N.full()) throw error("colon: lattices must be full rank");
    const Group& G = M.group();
    Z D = det_upper_triangular(M.basis());
    ZMat adjT = upper_triangular_adjugate(M.basis(), D).transpose();
    std::vector<std::vector<Z>> stacked;
    for (size_t j = 0; j < N.rank(); ++j) {
        ZMat S = mul(adjT, right_mul_matrix(G, N.basis().row(j)));
        for (size_t i = 0; i < S.rows(); ++i) {
            auto r = S.row(i);
            for (Z& x : r) x *= M.den();
            stacked.push_back(std::move(r));
        }
    }
    return dual(GroupLattice::from_int_rows(G, stacked, D * N.den()));
}

// { x in Q[G] : N x <= M }.
inline GroupLattice right_colon(const GroupLattice& M, const GroupLattice& N) {
    if (&M.group() != &N.group()) throw error("colon: different groups");
    if (!M.full() || !N.full()) throw error("colon: lattices must be full rank");
    const Group& G = M.group();
    Z D = det_upper_triangular(M.basis());
    ZMat adjT = upper_triangular_adjugate(M.basis(), D).transpose();
    std::vector<std::vector<Z>> stacked;
    for (size_t j = 0; j < N.rank(); ++j) {
        ZMat S = mul(adjT, left_mul_matrix(G, N.basis().row(j)));
        for (size_t i = 0; i < S.rows(); ++i) {
            auto r = S.row(i);
            for (Z& x : r) x *= M.den();
            stacked.push_back(std::move(r));
        }
    }
    return dual(GroupLattice::from_int_rows(G, stacked, D * N.den()));
}

/* The associated order { x : x M <= M }, the largest subring of Q[G] that M
 * is a module over. Results are memoized; the cache key assumes a group's
 * name identifies its construction, which holds for groups built through
 * make_group and subgroup_as_group with distinct names. */
inline GroupLattice associated_order(const GroupLattice& M) {
    static std::map<std::string, GroupLattice> cache;
    std::string k = M.key();
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, left_colon(M, M).detached()).first;
    return it->second.over(M.group());
}

inline bool is_unital_ring(const GroupLattice& L) {
    if (!L.contains_element(AlgebraElement::one(L.group()))) return false;
    const Group& G = L.group();
    size_t n = G.order();
    for (size_t i = 0; i < L.rank(); ++i)
        for (size_t j = 0; j < L.rank(); ++j) {
            std::vector<Q> prod(n, Q(0));
            for (size_t a = 0; a < n; ++a) {
                const Z& xa = L.basis().at(i, a);
                if (xa == 0) continue;
                for (size_t b = 0; b < n; ++b) {
                    const Z& yb = L.basis().at(j, b);
                    if (yb == 0) continue;
                    prod[G.mul(static_cast<uint16_t>(a), static_cast<uint16_t>(b))] += Q(xa * yb);
                }
            }
            Q d2 = Q(L.den()) * Q(L.den());
            for (Q& c : prod) {
                c /= d2;
                c.canonicalize();
            }
            if (!L.contains_vector(prod)) return false;
        }
    return true;
}

// [sup : sub] for full lattices with sub <= sup.
inline Z index_in(const GroupLattice& sub, const GroupLattice& sup) {
    if (!sub.full() || !sup.full()) throw error("index: lattices must be full rank");
    size_t n = sub.group().order();
    Q ratio = Q(det_upper_triangular(sub.basis())) / Q(det_upper_triangular(sup.basis()));
    for (size_t i = 0; i < n; ++i) ratio *= Q(sup.den()) / Q(sub.den());
    ratio.canonicalize();
    if (ratio.get_den() != 1) throw error("index: not a sublattice");
    return ratio.get_num();
}

inline unsigned long index_valuation(const GroupLattice& sub, const GroupLattice& sup,
                                     unsigned long p) {
    Z idx = index_in(sub, sup);
    if (idx == 1) return 0;
    return vp(idx, p);
}

/* A <= B after localizing at p: every basis vector of A must be a
 * combination of B's basis with p-integral rational coefficients. */
inline bool contained_at_p(const GroupLattice& A, const GroupLattice& B, unsigned long p) {
    if (&A.group() != &B.group()) throw error("contained_at_p: different groups");
    size_t n = A.group().order();
    for (size_t i = 0; i < A.rank(); ++i) {
        std::vector<Q> rhs(n);
        for (size_t j = 0; j < n; ++j) {
            rhs[j] = Q(A.basis().at(i, j)) * Q(B.den()) / Q(A.den());
            rhs[j].canonicalize();
        }
        std::vector<Q> y(B.rank(), Q(0));
        for (size_t t = 0; t < B.rank(); ++t) {
            size_t c = B.pivots()[t];
            if (rhs[c] == 0) continue;
            y[t] = rhs[c] / Q(B.basis().at(t, c));
            y[t].canonicalize();
            for (size_t j = c; j < n; ++j)
                if (B.basis().at(t, j) != 0) rhs[j] -= y[t] * Q(B.basis().at(t, j));
        }
        for (const Q& r : rhs)
            if (r != 0) return false;  // not even in the rational span
        for (const Q& v : y)
            if (v != 0 && vp(v, p) < 0) return false;
    }
    return true;
}

inline bool equal_at_p(const GroupLattice& A, const GroupLattice& B, unsigned long p) {
    return contained_at_p(A, B, p) && contained_at_p(B, A, p);
}

/* Coordinates of v with respect to the basis elements (rows/den) of L.
 * Throws unless v really lies in L, so the result is always integral. */
inline std::vector<Z> coordinates_in_basis(const GroupLattice& L, const std::vector<Q>& v) {
    size_t n = L.basis().cols();
    if (v.size() != n) throw error("coordinates: wrong length");
    std::vector<Q> rhs(n);
    for (size_t j = 0; j < n; ++j) {
        rhs[j] = v[j] * Q(L.den());
        rhs[j].canonicalize();
    }
    std::vector<Z> y(L.rank());
    for (size_t t = 0; t < L.rank(); ++t) {
        size_t c = L.pivots()[t];
        if (rhs[c] == 0) {
            y[t] = 0;
            continue;
        }
        Q q = rhs[c] / Q(L.basis().at(t, c));
        q.canonicalize();
        if (q.get_den() != 1) throw error("coordinates: vector not in lattice");
        y[t] = q.get_num();
        for (size_t j = c; j < n; ++j)
            if (L.basis().at(t, j) != 0) rhs[j] -= q * Q(L.basis().at(t, j));
    }
    for (const Q& r : rhs)
        if (r != 0) throw error("coordinates: vector not in lattice");
    return y;
}

inline std::string dump(const GroupLattice& L) {
    std::string s = "1/" + L.den().get_str() + " * rows {\n";
    for (size_t i = 0; i < L.rank(); ++i) {
        s += "  [";
        for (size_t j = 0; j < L.basis().cols(); ++j) {
            if (j) s += " ";
            s += L.basis().at(i, j).get_str();
        }
        s += "]\n";
    }
    return s + "}";
}

}  // namespace ordlat
