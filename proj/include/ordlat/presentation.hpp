#pragma once

/* Trace presentations. These are the lattices of the shape
 *
 *     L  =  sum_i  p^(-n_i) Z[G] Tr(P_i),    Tr(P) = sum of the elements of P,
 *
 * always carrying the base term (0, {e}) so that Z[G] <= L. Orders of
 * interest and the modules they act on all arrive in this shape, and the
 * text form "<1, 1/2*Tr(V2), 1/4*Tr(C4)>" is the canonical way they are
 * printed and parsed. A presentation lattice is a ring iff every P_i is
 * normal in G.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ordlat/group.hpp"
#include "ordlat/lattice.hpp"

namespace ordlat {

struct TraceTerm {
    unsigned n = 0;
    Subgroup P;

    bool operator==(const TraceTerm& o) const { return n == o.n && P == o.P; }
};

struct TracePresentation {
    const Group* G = nullptr;
    unsigned long p = 0;
    std::vector<TraceTerm> terms;

    TracePresentation() = default;
    TracePresentation(const Group& g, unsigned long prime) : G(&g), p(prime) {
        terms.push_back({0, g.trivial_subgroup()});
    }

    void add_term(unsigned n, Subgroup P) {
        for (TraceTerm& t : terms)
            if (t.P.elems == P.elems) {
                t.n = std::max(t.n, n);
                sort_terms();
                return;
            }
        terms.push_back({n, std::move(P)});
        sort_terms();
    }

    void sort_terms() {
        std::sort(terms.begin(), terms.end(), [](const TraceTerm& a, const TraceTerm& b) {
            if (a.n != b.n) return a.n < b.n;
            if (a.P.order() != b.P.order()) return a.P.order() < b.P.order();
            return a.P.elems < b.P.elems;
        });
    }

    GroupLattice lattice() const {
        if (!G || terms.empty()) throw error("presentation: empty");
        unsigned maxn = 0;
        for (const TraceTerm& t : terms) maxn = std::max(maxn, t.n);
        Z den = 1;
        for (unsigned i = 0; i < maxn; ++i) den *= static_cast<unsigned long>(p);
        size_t n = G->order();
        std::vector<std::vector<Z>> rows;
        rows.reserve(terms.size() * n);
        for (const TraceTerm& t : terms) {
            Z scale = 1;
            for (unsigned i = 0; i < maxn - t.n; ++i) scale *= static_cast<unsigned long>(p);
            for (uint16_t g = 0; g < n; ++g) {
                std::vector<Z> row(n);
                for (uint16_t h : t.P.elems) row[G->mul(g, h)] = scale;
                rows.push_back(std::move(row));
            }
        }
        return GroupLattice::from_int_rows(*G, rows, den);
    }

    bool all_terms_normal() const {
        for (const TraceTerm& t : terms)
            if (!G->is_normal(t.P)) return false;
        return true;
    }

    /* Chain shape: base term first, then strictly increasing levels with
     * nested subgroups, each level at most the p-valuation of its subgroup
     * order. The closed forms produced elsewhere all live in this shape. */
    bool is_chain() const {
        if (terms.empty() || terms[0].n != 0 || terms[0].P.order() != 1) return false;
        for (size_t i = 1; i < terms.size(); ++i) {
            if (terms[i].n <= terms[i - 1].n) return false;
            if (i >= 2 && !terms[i].P.contains(terms[i - 1].P)) return false;
            size_t m = terms[i].P.order();
            unsigned v = 0;
            while (m % p == 0) {
                m /= p;
                ++v;
            }
            if (terms[i].n > v) return false;
        }
        return true;
    }

    std::string str() const {
        std::string out = "<";
        for (size_t i = 0; i < terms.size(); ++i) {
            if (i) out += ", ";
            const TraceTerm& t = terms[i];
            std::string coeff;
            if (t.n > 0) {
                Z q = 1;
                for (unsigned k = 0; k < t.n; ++k) q *= static_cast<unsigned long>(p);
                coeff = "1/" + q.get_str();
            }
            if (t.P.order() == 1) {
                out += coeff.empty() ? "1" : coeff;
            } else {
                std::string tr = "Tr(" + G->subgroup_name(t.P) + ")";
                out += coeff.empty() ? tr : coeff + "*" + tr;
            }
        }
        return out + ">";
    }
};

/* Parses the text form: a comma separated list, optionally in <...>, of
 * "1", "1/q", "Tr(X)", "1/q*Tr(X)" where q is a power of p and X names a
 * subgroup (catalog name or generator list). */
inline TracePresentation parse_presentation(const Group& G, unsigned long p,
                                            const std::string& text) {
    std::string s = text;
    auto trim = [](std::string& x) {
        while (!x.empty() && (x.front() == ' ' || x.front() == '\t')) x.erase(x.begin());
        while (!x.empty() && (x.back() == ' ' || x.back() == '\t')) x.pop_back();
    };
    trim(s);
    if (!s.empty() && s.front() == '<' && s.back() == '>') {
        s = s.substr(1, s.size() - 2);
        trim(s);
    }
    TracePresentation pres(G, p);
    for (std::string part : split_perm_list(s)) {
        trim(part);
        if (part.empty()) continue;
        unsigned n = 0;
        std::string body = part;
        if (part[0] == '1' && (part.size() == 1 || part[1] == '/' || part[1] == ' ')) {
            size_t slash = part.find('/');
            if (slash == std::string::npos) continue;  // base term, already planted
            size_t star = part.find('*');
            std::string qs = part.substr(slash + 1, star == std::string::npos
                                                        ? std::string::npos
                                                        : star - slash - 1);
            trim(qs);
            Z q(qs, 10);
            if (q <= 0) throw error("presentation: bad denominator in \"" + part + "\"");
            Z pw = 1;
            while (pw < q) {
                pw *= p;
                ++n;
            }
            if (pw != q)
                throw error("presentation: denominator " + qs + " is not a power of " +
                            std::to_string(p));
            if (star == std::string::npos) {
                pres.add_term(n, G.trivial_subgroup());
                continue;
            }
            body = part.substr(star + 1);
            trim(body);
        }
        if (body.rfind("Tr(", 0) != 0 || body.back() != ')')
            throw error("presentation: bad term \"" + part + "\"");
        std::string inner = body.substr(3, body.size() - 4);
        pres.add_term(n, G.parse_subgroup(inner));
    }
    return pres;
}

/* Tries to write a lattice as a trace presentation at p. Candidate terms
 * are found per subgroup by pushing the level as deep as membership
 * allows; the candidate sum must reproduce the lattice exactly, and terms
 * that other terms absorb are pruned largest subgroup first, so the
 * irreplaceable generators survive. */
inline std::optional<TracePresentation> reconstruct_presentation(const GroupLattice& L,
                                                                 unsigned long p) {
    const Group& G = L.group();
    if (!L.full()) return std::nullopt;
    GroupLattice ZG = GroupLattice::zg(G);
    if (!L.contains(ZG)) return std::nullopt;
    // the denominator of a presentation lattice is a power of p
    Z rem = L.den();
    unsigned long cap = 0;
    while (rem > 1) {
        if (!mpz_divisible_ui_p(rem.get_mpz_t(), p)) return std::nullopt;
        mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
        ++cap;
    }

    TracePresentation pres(G, p);
    auto piece_contained = [&](const Subgroup& P, unsigned n) {
        AlgebraElement tr = AlgebraElement::trace_of(G, P);
        Z q = 1;
        for (unsigned i = 0; i < n; ++i) q *= p;
        Q s = Q(1) / Q(q);
        s.canonicalize();
        AlgebraElement x = tr * s;
        for (uint16_t g = 0; g < G.order(); ++g) {
            AlgebraElement gx = AlgebraElement::basis(G, g) * x;
            if (!L.contains_element(gx)) return false;
        }
        return true;
    };
    for (const Subgroup& P : G.all_subgroups()) {
        for (unsigned long n = cap; n >= 1; --n) {
            if (piece_contained(P, static_cast<unsigned>(n))) {
                pres.add_term(static_cast<unsigned>(n), P);
                break;
            }
        }
    }

    auto sum_of = [&](const std::vector<TraceTerm>& terms) {
        TracePresentation q(G, p);
        for (const TraceTerm& t : terms) q.add_term(t.n, t.P);
        return q.lattice();
    };
    if (!(sum_of(pres.terms) == L)) return std::nullopt;

    /* Prune absorbed terms, trying large subgroups first: traces over
     * large subgroups factor through traces over subgroups below them, so
     * the survivors are the small irreplaceable generators of each level,
     * which is the canonical chain form. */
    std::vector<TraceTerm> kept = pres.terms;
    std::stable_sort(kept.begin(), kept.end(), [](const TraceTerm& a, const TraceTerm& b) {
        if (a.P.order() != b.P.order()) return a.P.order() > b.P.order();
        if (a.n != b.n) return a.n < b.n;
        return a.P.elems < b.P.elems;
    });
    for (size_t i = 0; i < kept.size();) {
        std::vector<TraceTerm> without = kept;
        without.erase(without.begin() + static_cast<long>(i));
        if (!without.empty() && sum_of(without) == L) {
            kept = std::move(without);
        } else {
            ++i;
        }
    }
    TracePresentation out(G, p);
    for (const TraceTerm& t : kept) out.add_term(t.n, t.P);
    if (!(out.lattice() == L)) return std::nullopt;
    return out;
}

}  // namespace ordlat
