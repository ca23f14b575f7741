#pragma once

/* Ramification profiles. A profile records, for one rational prime p and a
 * Galois group G, the decomposition group D of a chosen prime above p and
 * the lower numbering ramification filtration
 *
 *     G_0 >= G_1 >= G_2 >= ...   (subgroups of D, eventually trivial),
 *
 * which is all the artifact ever needs to know about the extension: the
 * completion above p is Galois over Q_p with group D, the ramification
 * index is e = |G_0|, the wild part G_1 is a p-group, G_0/G_1 is cyclic of
 * order prime to p, and the different has valuation sum_i (|G_i| - 1).
 *
 * Profiles are inputs, never computed from field data. From a profile the
 * cascade in local_presentation emits the associated order of the completed
 * extension as a trace presentation over D, together with whether the ring
 * of integers of the completion is free over that order. The supported
 * shapes are exactly the ones the decision rules downstream consume; an
 * unsupported shape is an explicit error, never a guess.
 */

#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "ordlat/group.hpp"
#include "ordlat/matrix.hpp"
#include "ordlat/presentation.hpp"

namespace ordlat {

inline bool is_prime_ul(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Normality of S inside a subgroup D of the ambient group (both over G).
inline bool normal_in(const Group& G, const Subgroup& D, const Subgroup& S) {
    for (uint16_t g : D.elems)
        for (uint16_t h : S.elems)
            if (!S.contains(G.conj(g, h))) return false;
    return true;
}

/* Every subgroup H with A <= H <= B, found by closing A under one extra
 * element of B at a time. A and B themselves are included. */
inline std::vector<Subgroup> subgroups_between(const Group& G, const Subgroup& A,
                                               const Subgroup& B) {
    if (!B.contains(A)) throw error("subgroups_between: lower bound not inside upper bound");
    std::set<std::vector<uint16_t>> found;
    std::vector<std::vector<uint16_t>> queue{A.elems};
    found.insert(A.elems);
    for (size_t i = 0; i < queue.size(); ++i) {
        for (uint16_t x : B.elems) {
            if (std::binary_search(queue[i].begin(), queue[i].end(), x)) continue;
            std::vector<uint16_t> gens = queue[i];
            gens.push_back(x);
            std::vector<uint16_t> J = G.subgroup_from_indices(std::move(gens)).elems;
            if (found.insert(J).second) queue.push_back(std::move(J));
        }
    }
    std::vector<Subgroup> out;
    for (const auto& v : found) {
        Subgroup H;
        H.parent = &G;
        H.elems = v;
        out.push_back(std::move(H));
    }
    return out;
}

struct RamificationProfile {
    const Group* G = nullptr;
    unsigned long p = 0;
    Subgroup D;
    std::vector<Subgroup> filtration;  // G_0, G_1, ... ; entries past the end are trivial

    const Group& group() const {
        if (!G) throw error("profile: no group");
        return *G;
    }

    Subgroup G_at(size_t i) const {
        if (i < filtration.size()) return filtration[i];
        return group().trivial_subgroup();
    }

    size_t e() const { return G_at(0).order(); }
    size_t e_wild() const { return G_at(1).order(); }
    bool unramified() const { return e() == 1; }
    bool tame() const { return e_wild() == 1; }
    bool wild() const { return !tame(); }
    bool weak() const { return G_at(2).order() == 1; }
    bool totally_ramified() const { return e() == D.order(); }

    // valuation of the different of the completion over Q_p
    long different_valuation() const {
        long s = 0;
        for (const Subgroup& Gi : filtration) s += static_cast<long>(Gi.order()) - 1;
        return s;
    }

    /* The same sum for the subextension fixed pointwise under H: lower
     * numbering restricts to subgroups, so the i-th ramification group of
     * the completion over the fixed field of H is G_i intersect H. */
    long subextension_different(const Subgroup& H) const {
        if (H.parent != G) throw error("profile: subgroup over a different group");
        if (!D.contains(H)) throw error("profile: subgroup not inside the decomposition group");
        long s = 0;
        for (const Subgroup& Gi : filtration)
            s += static_cast<long>(group().intersect(Gi, H).order()) - 1;
        return s;
    }

    /* Whether (1/r) Tr_H lies in the associated order of the completion:
     * the different of the subextension under H must absorb e * v_p(r). */
    bool trace_quotient_in_order(const Subgroup& H, const Z& r) const {
        if (r <= 0) throw error("profile: trace denominator must be positive");
        long need = static_cast<long>(e()) * static_cast<long>(vp(r, p));
        return subextension_different(H) >= need;
    }

    /* Almost-maximal ramification: every subgroup H squeezed between two
     * consecutive ramification groups G_{t+1} <= H <= G_t with t >= 1
     * satisfies the trace bound for r = |H|. */
    bool almost_maximal() const {
        std::set<std::vector<uint16_t>> seen;
        for (size_t t = 1; t <= filtration.size(); ++t) {
            Subgroup B = G_at(t);
            if (B.order() == 1) break;
            for (const Subgroup& H : subgroups_between(group(), G_at(t + 1), B))
                seen.insert(H.elems);
        }
        for (const auto& v : seen) {
            Subgroup H;
            H.parent = G;
            H.elems = v;
            if (!trace_quotient_in_order(H, Z(static_cast<unsigned long>(H.order())))) return false;
        }
        return true;
    }

    void validate() const {
        const Group& g = group();
        if (!is_prime_ul(p)) throw error("profile: p must be prime");
        if (D.parent != &g) throw error("profile: decomposition group over a different group");
        const Subgroup* prev = &D;
        for (size_t i = 0; i < filtration.size(); ++i) {
            const Subgroup& Gi = filtration[i];
            if (Gi.parent != &g) throw error("profile: filtration entry over a different group");
            if (!prev->contains(Gi))
                throw error("profile: ramification filtration must be decreasing inside D");
            if (!normal_in(g, D, Gi))
                throw error("profile: ramification groups must be normal in the decomposition group");
            prev = &filtration[i];
        }
        size_t w = e_wild();
        while (w % p == 0) w /= p;
        if (w != 1) throw error("profile: wild inertia must be a p-group");
        Subgroup G0 = G_at(0), G1 = G_at(1);
        size_t idx = G0.order() / G1.order();
        if (idx % p == 0) throw error("profile: tame quotient must have order prime to p");
        bool cyclic = false;
        for (uint16_t x : G0.elems) {
            std::vector<uint16_t> gens = G1.elems;
            gens.push_back(x);
            if (g.subgroup_from_indices(std::move(gens)).order() == G0.order()) {
                cyclic = true;
                break;
            }
        }
        if (!cyclic) throw error("profile: tame quotient must be cyclic");
    }

    std::string str() const {
        const Group& g = group();
        std::string s = g.name() + " p=" + std::to_string(p) + " D=" + g.subgroup_name(D) +
                        " filtration=[";
        for (size_t i = 0; i < filtration.size(); ++i) {
            if (i) s += ", ";
            s += g.subgroup_name(filtration[i]);
        }
        return s + "]";
    }
};

/* ------------------------------------------------------------------ */
/* JSON input format:                                                  */
/*   { "group": "S4", "p": 2,                                          */
/*     "decomposition": "D8",                                          */
/*     "filtration": ["D8", "D8", "C4", "C4", "V2", "V2", "V2", "V2"] }*/
/* Subgroup specs are catalog names, generator strings, or arrays of   */
/* permutation strings; an empty filtration means unramified.          */
/* ------------------------------------------------------------------ */

inline Subgroup subgroup_from_json(const Group& G, const nlohmann::json& v) {
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s.empty() || s == "1" || s == "C1") return G.trivial_subgroup();
        return G.parse_subgroup(s);
    }
    if (v.is_array()) {
        if (v.empty()) return G.trivial_subgroup();
        std::string joined;
        for (const auto& item : v) {
            if (!item.is_string()) throw error("profile: subgroup generators must be strings");
            if (!joined.empty()) joined += ",";
            joined += item.get<std::string>();
        }
        return G.parse_subgroup(joined);
    }
    throw error("profile: subgroup spec must be a string or an array of strings");
}

inline std::string profile_group_label(const nlohmann::json& j) {
    if (!j.contains("group")) throw error("profile: missing \"group\"");
    return j.at("group").get<std::string>();
}

inline RamificationProfile profile_from_json(const Group& G, const nlohmann::json& j) {
    RamificationProfile pr;
    pr.G = &G;
    if (!j.contains("p")) throw error("profile: missing \"p\"");
    pr.p = j.at("p").get<unsigned long>();
    if (j.contains("group")) {
        std::string lbl = j.at("group").get<std::string>();
        if (lbl != G.name())
            throw error("profile: group label \"" + lbl + "\" does not match " + G.name());
    }
    pr.D = j.contains("decomposition") ? subgroup_from_json(G, j.at("decomposition"))
                                       : G.full_subgroup();
    if (j.contains("filtration"))
        for (const auto& v : j.at("filtration")) pr.filtration.push_back(subgroup_from_json(G, v));
    pr.validate();
    return pr;
}

inline nlohmann::json profile_to_json(const RamificationProfile& pr) {
    const Group& g = pr.group();
    nlohmann::json j;
    j["group"] = g.name();
    j["p"] = pr.p;
    j["decomposition"] = g.subgroup_name(pr.D);
    nlohmann::json f = nlohmann::json::array();
    for (const Subgroup& Gi : pr.filtration) f.push_back(g.subgroup_name(Gi));
    j["filtration"] = f;
    j["e"] = pr.e();
    j["tame"] = pr.tame();
    j["weak"] = pr.weak();
    j["almost_maximal"] = pr.almost_maximal();
    j["different_valuation"] = pr.different_valuation();
    return j;
}

/* The decomposition group as a standalone group, so presentations over it
 * can be induced up to G. */
inline Group promote_decomposition(const RamificationProfile& pr) {
    const Group& g = pr.group();
    std::string nm = g.subgroup_name(pr.D);
    if (nm == "G") nm = g.name();
    return subgroup_as_group(pr.D, nm);
}

// A subgroup of the ambient group, re-indexed over the promoted group Dg.
inline Subgroup restrict_subgroup(const Group& Dg, const Group& parent, const Subgroup& S) {
    Subgroup R;
    R.parent = &Dg;
    for (uint16_t e : S.elems) R.elems.push_back(Dg.index_of(parent.elem(e)));
    std::sort(R.elems.begin(), R.elems.end());
    return R;
}

/* ------------------------------------------------------------------ */
/* Local presentation cascade                                          */
/* ------------------------------------------------------------------ */

enum class DShape {
    trivial,
    c2,            // order 2
    cyclic_p,      // order p, p odd
    c4,            // cyclic of order 4
    klein,         // C2 x C2
    d8,            // dihedral of order 8
    dihedral_2p,   // dihedral of order 2p, p odd
    a4_like,       // order 12 with three involutions
    other,
};

inline size_t element_order(const Group& G, uint16_t x) {
    size_t n = 1;
    uint16_t y = x;
    while (y != G.identity()) {
        y = G.mul(y, x);
        ++n;
    }
    return n;
}

inline DShape decomposition_shape(const Group& Dg, unsigned long p) {
    size_t n = Dg.order();
    if (n == 1) return DShape::trivial;
    bool abelian = true;
    for (uint16_t a = 0; a < n && abelian; ++a)
        for (uint16_t b = a + 1; b < n; ++b)
            if (Dg.mul(a, b) != Dg.mul(b, a)) {
                abelian = false;
                break;
            }
    size_t invol = 0;
    for (uint16_t a = 1; a < n; ++a)
        if (Dg.mul(a, a) == Dg.identity()) ++invol;
    if (n == 2) return DShape::c2;
    if (n == 4 && abelian) return invol == 3 ? DShape::klein : DShape::c4;
    if (p > 2 && n == p) return DShape::cyclic_p;
    if (n == 8 && !abelian && invol == 5) return DShape::d8;
    if (p > 2 && n == 2 * p && !abelian) return DShape::dihedral_2p;
    if (n == 12 && !abelian && invol == 3) return DShape::a4_like;
    return DShape::other;
}

/* The associated order of the completion, as a presentation over the
 * promoted decomposition group, plus whether the ring of integers of the
 * completion is free over it. presentable is false on the one branch where
 * the ring of integers is not free over its own associated order; there no
 * presentation is emitted and nothing can be induced. */
struct LocalPresentation {
    std::string rule;
    std::string detail;
    bool locally_free = true;
    bool presentable = true;
    TracePresentation pres;
};

inline LocalPresentation local_presentation(const RamificationProfile& pr, const Group& Dg) {
    pr.validate();
    const Group& g = pr.group();
    if (Dg.order() != pr.D.order())
        throw error("local_presentation: promoted group does not match the decomposition group");
    LocalPresentation out;
    out.pres = TracePresentation(Dg, pr.p);

    if (pr.tame()) {
        out.rule = "tame-group-ring";
        out.detail = "tamely ramified: the group ring is the associated order and the ring of "
                     "integers is free over it";
        return out;
    }

    Subgroup G0 = restrict_subgroup(Dg, g, pr.G_at(0));

    if (pr.weak()) {
        out.rule = "weak-inertia-trace";
        out.detail = "wildly and weakly ramified: the associated order adjoins (1/p)Tr over the "
                     "inertia group and the ring of integers is free over it";
        out.pres.add_term(1, G0);
        return out;
    }

    // wild and not weak: dispatch on the shape of the decomposition group
    DShape shape = decomposition_shape(Dg, pr.p);
    auto chain_from_filtration = [&]() {
        for (size_t t = 1; t < pr.filtration.size(); ++t) {
            const Subgroup& Gt = pr.filtration[t];
            if (Gt.order() == 1) break;
            unsigned n = static_cast<unsigned>(vp(Z(static_cast<unsigned long>(Gt.order())), pr.p));
            out.pres.add_term(n, restrict_subgroup(Dg, g, Gt));
        }
        if (!out.pres.is_chain())
            throw error("local_presentation: filtration does not produce a chain presentation");
    };

    switch (shape) {
    case DShape::c2:
    case DShape::cyclic_p:
        // prime degree, wild beyond the weak bound: the unique order above
        // the group ring, which is the maximal order
        out.rule = "prime-cyclic-maximal-order";
        out.detail = "wild non-weak completion of prime degree: the associated order is the "
                     "maximal order and the ring of integers is free over it";
        out.pres.add_term(1, Dg.full_subgroup());
        return out;
    case DShape::c4:
    case DShape::klein:
        if (pr.e() == 2) {
            out.rule = "abelian-quartic-e2";
            out.detail = "abelian quartic completion with order-2 wild inertia: the associated "
                         "order adjoins (1/2)Tr over the inertia group";
            out.pres.add_term(1, G0);
            return out;
        }
        if (!pr.almost_maximal()) {
            if (shape == DShape::c4)
                throw error("local_presentation: a totally ramified cyclic quartic 2-adic "
                            "profile that is not almost-maximal has no integral jump structure; "
                            "profile rejected");
            throw error("local_presentation: a totally ramified biquadratic 2-adic profile "
                        "that is not almost-maximal must be weakly ramified; profile rejected");
        }
        out.rule = "abelian-quartic-chain";
        out.detail = "totally ramified abelian quartic completion, almost-maximally ramified: "
                     "the associated order is the idempotent chain over the ramification groups";
        chain_from_filtration();
        return out;
    case DShape::d8:
        if (pr.almost_maximal()) {
            out.rule = "dihedral-almost-maximal-chain";
            out.detail = "dihedral octic completion, almost-maximally ramified: the associated "
                         "order is the idempotent chain over the ramification groups";
            chain_from_filtration();
            return out;
        }
        out.rule = "dihedral-not-almost-maximal";
        out.detail = "dihedral octic completion, wild, neither weakly nor almost-maximally "
                     "ramified: the ring of integers is not free over its associated order";
        out.locally_free = false;
        out.presentable = false;
        return out;
    case DShape::dihedral_2p:
        if (pr.almost_maximal()) {
            out.rule = "dihedral-almost-maximal-chain";
            out.detail = "dihedral completion of degree 2p, almost-maximally ramified: the "
                         "associated order adjoins (1/p)Tr over the wild inertia group";
            chain_from_filtration();
            return out;
        }
        throw error("local_presentation: a wild dihedral degree-2p profile that is not "
                    "almost-maximal must be weakly and totally ramified; non-weak profile "
                    "rejected");
    case DShape::a4_like:
        throw error("local_presentation: a wild tetrahedral 2-adic completion is weakly "
                    "ramified; non-weak profile rejected");
    default:
        throw error("local_presentation: unsupported decomposition group shape for a wild "
                    "non-weak profile");
    }
}

}  // namespace ordlat
