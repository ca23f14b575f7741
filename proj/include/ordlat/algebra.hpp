#pragma once

/* Elements of the rational group algebra Q[G].
 *
 * An element is its coefficient vector in the group element basis, indexed
 * the way the Group orders its elements (identity first). Multiplication is
 * convolution through the group's multiplication table. Text form is a sum
 * of coefficient * permutation terms, e.g. "1/2*() + (1,2)(3,4)".
 */

#include <cctype>
#include <gmpxx.h>
#include <string>
#include <vector>

#include "ordlat/group.hpp"
#include "ordlat/matrix.hpp"

namespace ordlat {

struct AlgebraElement {
    const Group* G = nullptr;
    std::vector<Q> coef;

    AlgebraElement() = default;
    explicit AlgebraElement(const Group& g) : G(&g), coef(g.order(), Q(0)) {}

    static AlgebraElement one(const Group& g) {
        AlgebraElement x(g);
        x.coef[g.identity()] = 1;
        return x;
    }

    static AlgebraElement basis(const Group& g, uint16_t idx) {
        AlgebraElement x(g);
        x.coef[idx] = 1;
        return x;
    }

    // Sum of the elements of H.
    static AlgebraElement trace_of(const Group& g, const Subgroup& H) {
        AlgebraElement x(g);
        for (uint16_t h : H.elems) x.coef[h] = 1;
        return x;
    }

    // (1/|H|) * trace_of(H), the central idempotent when H is normal.
    static AlgebraElement idempotent_of(const Group& g, const Subgroup& H) {
        AlgebraElement x = trace_of(g, H);
        Q s(1, static_cast<unsigned long>(H.order()));
        s.canonicalize();
        for (Q& c : x.coef) c *= s;
        return x;
    }

    bool is_zero() const {
        for (const Q& c : coef)
            if (c != 0) return false;
        return true;
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        for (size_t i = 0; i < coef.size(); ++i) coef[i] += o.coef[i];
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        for (size_t i = 0; i < coef.size(); ++i) coef[i] -= o.coef[i];
        return *this;
    }
    AlgebraElement& operator*=(const Q& s) {
        for (Q& c : coef) c *= s;
        return *this;
    }

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const Q& s) { return a *= s; }

    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
        AlgebraElement c(*a.G);
        Q t;
        for (size_t i = 0; i < a.coef.size(); ++i) {
            if (a.coef[i] == 0) continue;
            for (size_t j = 0; j < b.coef.size(); ++j) {
                if (b.coef[j] == 0) continue;
                t = a.coef[i] * b.coef[j];
                c.coef[a.G->mul(static_cast<uint16_t>(i), static_cast<uint16_t>(j))] += t;
            }
        }
        return c;
    }

    bool operator==(const AlgebraElement& o) const { return G == o.G && coef == o.coef; }

    std::string str() const {
        std::string out;
        for (size_t i = 0; i < coef.size(); ++i) {
            if (coef[i] == 0) continue;
            Q c = coef[i];
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (c < 0) c = -c;
            std::string perm = G->elem(static_cast<uint16_t>(i)).str();
            if (c == 1) out += perm;
            else out += c.get_str() + "*" + perm;
        }
        return out.empty() ? "0" : out;
    }
};

/* Common denominator form: integer coefficient rows over one positive
 * denominator. Used to hand elements to the lattice layer. */
inline std::pair<std::vector<std::vector<Z>>, Z> common_denominator(
    const std::vector<AlgebraElement>& xs) {
    Z den = 1;
    for (const AlgebraElement& x : xs)
        for (const Q& c : x.coef) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<std::vector<Z>> rows;
    for (const AlgebraElement& x : xs) {
        std::vector<Z> r;
        r.reserve(x.coef.size());
        for (const Q& c : x.coef) {
            Q v = c * den;
            v.canonicalize();
            if (v.get_den() != 1) throw error("common_denominator: internal");
            r.push_back(v.get_num());
        }
        rows.push_back(std::move(r));
    }
    return {std::move(rows), den};
}

/* Right multiplication matrix of the integer coefficient vector b: column j
 * holds the coefficients of g_j * b. For x with row vector v, row(x * b) =
 * v * rmul(b)^T. */
inline ZMat right_mul_matrix(const Group& G, const std::vector<Z>& b) {
    size_t n = G.order();
    ZMat R(n, n);
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i)
            if (b[i] != 0)
                R.at(G.mul(static_cast<uint16_t>(j), static_cast<uint16_t>(i)), j) = b[i];
    return R;
}

// Left multiplication matrix: column j holds the coefficients of b * g_j.
inline ZMat left_mul_matrix(const Group& G, const std::vector<Z>& b) {
    size_t n = G.order();
    ZMat L(n, n);
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i)
            if (b[i] != 0)
                L.at(G.mul(static_cast<uint16_t>(i), static_cast<uint16_t>(j)), j) = b[i];
    return L;
}

namespace detail {

inline Q parse_rational(const std::string& s) {
    if (s.empty()) throw error("parse element: empty coefficient");
    Q q;
    if (q.set_str(s, 10) != 0) throw error("parse element: bad coefficient \"" + s + "\"");
    q.canonicalize();
    return q;
}

}  // namespace detail

/* Parses "1/2*() + (1,2)(3,4) - 3*(1,2,3)". Terms are separated by top
 * level +/- and each term is coefficient, permutation, or both joined
 * with '*'. The identity permutation is "()" or "e". */
inline AlgebraElement parse_element(const Group& G, const std::string& text) {
    AlgebraElement out(G);
    size_t i = 0, n = text.size();
    auto skip_ws = [&] {
        while (i < n && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    if (i == n) throw error("parse element: empty input");
    bool first = true;
    while (true) {
        skip_ws();
        if (i == n) break;
        Q sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw error("parse element: expected + or - near \"" + text.substr(i) + "\"");
        }
        first = false;
        // term: [rational] ['*'] [perm]
        Q coef = 1;
        bool have_coef = false, have_perm = false;
        Perm perm(G.degree());
        if (i < n && (isdigit(static_cast<unsigned char>(text[i])))) {
            size_t j = i;
            while (j < n && (isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/')) ++j;
            coef = detail::parse_rational(text.substr(i, j - i));
            have_coef = true;
            i = j;
            skip_ws();
            if (i < n && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        if (i < n && text[i] == '(') {
            size_t j = i, depth = 0;
            while (j < n) {
                if (text[j] == '(') ++depth;
                if (text[j] == ')' && --depth == 0) {
                    ++j;
                    // pull in consecutive cycles
                    size_t k = j;
                    while (k < n && text[k] == ' ') ++k;
                    if (k < n && text[k] == '(') {
                        j = k;
                        continue;
                    }
                    break;
                }
                ++j;
            }
            perm = Perm::parse(text.substr(i, j - i), G.degree());
            have_perm = true;
            i = j;
        } else if (i < n && text[i] == 'e' && (i + 1 == n || !isalnum(static_cast<unsigned char>(text[i + 1])))) {
            ++i;
            have_perm = true;
        }
        if (!have_coef && !have_perm)
            throw error("parse element: bad term near \"" + text.substr(i) + "\"");
        out.coef[G.index_of(perm)] += sign * coef;
    }
    return out;
}

}  // namespace ordlat
