#pragma once

/* Induction of lattices from a subgroup H up to G, and the closed forms it
 * obeys.
 *
 * H is handled as a standalone Group whose elements are permutations of the
 * same degree as G's (built by subgroup_as_group), so the inclusion of
 * group algebras is just an index relabeling. For a lattice M <= Q[H],
 *
 *     Ind M  =  (+)  r * M   over left coset representatives r of H in G,
 *
 * a lattice in Q[G]. Trace presentations push through induction unchanged,
 * the associated order of an induced presentation lattice is obtained by
 * replacing each subgroup with its normal closure in G (deeper levels win
 * when closures collide), and the same order is reached from the other
 * side as the intersection of all conjugates of Ind A(M).
 */

#include <map>
#include <string>
#include <vector>

#include "ordlat/group.hpp"
#include "ordlat/lattice.hpp"
#include "ordlat/presentation.hpp"

namespace ordlat {

inline Subgroup embed_subgroup(const Group& G, const Group& H) {
    std::vector<uint16_t> idx;
    for (uint16_t i = 0; i < H.order(); ++i) idx.push_back(G.index_of(H.elem(i)));
    std::sort(idx.begin(), idx.end());
    Subgroup S;
    S.parent = &G;
    S.elems = std::move(idx);
    return S;
}

inline Subgroup map_subgroup(const Group& G, const Group& H, const Subgroup& P) {
    if (P.parent != &H) throw error("map_subgroup: subgroup not over H");
    Subgroup S;
    S.parent = &G;
    for (uint16_t i : P.elems) S.elems.push_back(G.index_of(H.elem(i)));
    std::sort(S.elems.begin(), S.elems.end());
    return S;
}

inline GroupLattice induce_lattice(const Group& G, const Group& H, const GroupLattice& M) {
    if (&M.group() != &H) throw error("induce: lattice not over H");
    Subgroup HinG = embed_subgroup(G, H);
    std::vector<uint16_t> emb;
    for (uint16_t i = 0; i < H.order(); ++i) emb.push_back(G.index_of(H.elem(i)));
    std::vector<std::vector<Z>> rows;
    for (uint16_t r : G.left_coset_reps(HinG)) {
        for (size_t i = 0; i < M.rank(); ++i) {
            std::vector<Z> row(G.order());
            for (size_t j = 0; j < H.order(); ++j)
                if (M.basis().at(i, j) != 0)
                    row[G.mul(r, emb[j])] = M.basis().at(i, j);
            rows.push_back(std::move(row));
        }
    }
    return GroupLattice::from_int_rows(G, rows, M.den());
}

// Induction keeps every term: Ind of sum p^-n Z[H] Tr(P) is sum p^-n Z[G] Tr(P).
inline TracePresentation induce_presentation(const Group& G, const Group& H,
                                             const TracePresentation& pres) {
    TracePresentation out(G, pres.p);
    for (const TraceTerm& t : pres.terms)
        if (t.P.order() > 1) out.add_term(t.n, map_subgroup(G, H, t.P));
        else if (t.n > 0) out.add_term(t.n, G.trivial_subgroup());
    return out;
}

/* Closed form for the associated order of an induced presentation lattice:
 * each subgroup is replaced by its normal closure in G, and when two terms
 * land on the same closure only the deeper level survives. */
inline TracePresentation induced_order_form(const Group& G, const Group& H,
                                            const TracePresentation& pres) {
    TracePresentation out(G, pres.p);
    for (const TraceTerm& t : pres.terms) {
        if (t.n == 0 && t.P.order() == 1) continue;
        Subgroup inG = map_subgroup(G, H, t.P);
        out.add_term(t.n, G.normal_closure(inG));  // add_term keeps the max level
    }
    return out;
}

/* Intersection of all conjugates g (Ind A) g^-1. For A the associated
 * order of M over H this meets induced_order_form from the other side:
 * both equal the associated order of Ind M. */
inline GroupLattice conjugate_intersection(const Group& G, const GroupLattice& indA) {
    std::map<std::string, GroupLattice> distinct;
    for (uint16_t g = 0; g < G.order(); ++g) {
        GroupLattice c = conjugate(indA, g);
        distinct.emplace(c.key(), std::move(c));
    }
    GroupLattice acc;
    bool first = true;
    for (auto& [k, L] : distinct) {
        if (first) {
            acc = dual(L);
            first = false;
        } else {
            acc = sum(acc, dual(L));
        }
    }
    return dual(acc);
}

struct InductionReport {
    GroupLattice induced;                  // Ind M
    TracePresentation induced_pres;        // same terms over G
    TracePresentation order_closed_form;   // normal closure form
    GroupLattice order_computed;           // associated_order(Ind M), exact
    GroupLattice order_conjugates;         // conjugate_intersection(Ind A(M))
    bool closed_form_matches = false;
    bool conjugates_match = false;
};

inline InductionReport run_induction(const Group& G, const Group& H,
                                     const TracePresentation& pres) {
    InductionReport rep;
    GroupLattice M = pres.lattice();
    rep.induced = induce_lattice(G, H, M);
    rep.induced_pres = induce_presentation(G, H, pres);
    if (!(rep.induced_pres.lattice() == rep.induced))
        throw error("induction: induced lattice disagrees with induced presentation");
    rep.order_closed_form = induced_order_form(G, H, pres);
    rep.order_computed = associated_order(rep.induced);
    rep.order_conjugates =
        conjugate_intersection(G, induce_lattice(G, H, associated_order(M)));
    rep.closed_form_matches = rep.order_closed_form.lattice() == rep.order_computed;
    rep.conjugates_match = rep.order_conjugates == rep.order_computed;
    return rep;
}

}  // namespace ordlat
