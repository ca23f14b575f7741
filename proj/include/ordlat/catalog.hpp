#pragma once

/* Named fixtures: the ramification profiles behind every supported
 * classification shape, together with the expected presentation strings and
 * verdicts of the full pipeline. Tests and the reproduce command both
 * consume these, so the expectations live in exactly one place.
 *
 * Conventions: profiles list the filtration G_0, G_1, ... up to the last
 * nontrivial group; presentation strings are the canonical text forms over
 * the ambient group (induced/order) and over the promoted decomposition
 * group (local), where "G" names the full group of the algebra at hand.
 */

#include <map>
#include <string>
#include <vector>

#include "ordlat/group.hpp"
#include "ordlat/ramification.hpp"

namespace ordlat {

// One stable instance per label, so subgroup handles and caches stay valid.
inline Group& catalog_group(const std::string& label) {
    static std::map<std::string, Group> cache;
    auto it = cache.find(label);
    if (it == cache.end()) it = cache.emplace(label, make_group(label)).first;
    return it->second;
}

struct ProfileFixture {
    std::string id;
    std::string group;
    unsigned long p = 2;
    std::string D;
    std::vector<std::string> filtration;
    std::string expect_local;   // presentation over the decomposition group
    std::string expect_ind;     // induced presentation over the ambient group
    std::string expect_order;   // associated order of the induced lattice
    bool expect_free = false;   // verdict for the induced lattice at p
};

inline RamificationProfile fixture_profile(const Group& G, const ProfileFixture& fx) {
    if (G.name() != fx.group) throw error("fixture_profile: group mismatch for " + fx.id);
    RamificationProfile pr;
    pr.G = &G;
    pr.p = fx.p;
    pr.D = G.parse_subgroup(fx.D);
    for (const std::string& s : fx.filtration) pr.filtration.push_back(G.parse_subgroup(s));
    pr.validate();
    return pr;
}

/* Octahedral shapes at p = 2 where the ring of integers is not free: the
 * ten induced-order / associated-order pairs, keyed i..x. */
inline const std::vector<ProfileFixture>& table1_fixtures() {
    static const std::vector<ProfileFixture> rows = {
        {"i", "S4", 2, "D8", {"D8", "D8", "C4", "C4", "V2", "V2", "V2", "V2"},
         "<1, 1/2*Tr(V2), 1/4*Tr(C4), 1/8*Tr(G)>",
         "<1, 1/2*Tr(V2), 1/4*Tr(C4), 1/8*Tr(D8)>",
         "<1, 1/2*Tr(V4), 1/8*Tr(G)>", false},
        {"ii", "S4", 2, "D8", {"D8", "D8", "V4", "V4", "V2", "V2", "V2", "V2"},
         "<1, 1/2*Tr(V2), 1/4*Tr(V4), 1/8*Tr(G)>",
         "<1, 1/2*Tr(V2), 1/4*Tr(V4), 1/8*Tr(D8)>",
         "<1, 1/4*Tr(V4), 1/8*Tr(G)>", false},
        {"iii", "S4", 2, "D8", {"D8", "D8", "C22", "C22", "V2", "V2", "V2", "V2"},
         "<1, 1/2*Tr(V2), 1/4*Tr(C22), 1/8*Tr(G)>",
         "<1, 1/2*Tr(V2), 1/4*Tr(C22), 1/8*Tr(D8)>",
         "<1, 1/2*Tr(V4), 1/8*Tr(G)>", false},
        {"iv", "S4", 2, "C4", {"C4", "C4", "V2", "V2"},
         "<1, 1/2*Tr(V2), 1/4*Tr(G)>",
         "<1, 1/2*Tr(V2), 1/4*Tr(C4)>",
         "<1, 1/2*Tr(V4), 1/4*Tr(G)>", false},
        {"v", "S4", 2, "V4", {"V4", "V4", "V2", "V2"},
         "<1, 1/2*Tr(V2), 1/4*Tr(G)>",
         "<1, 1/2*Tr(V2), 1/4*Tr(V4)>",
         "<1, 1/4*Tr(V4)>", false},
        {"vi", "S4", 2, "C22", {"C22", "C22", "V2", "V2"},
         "<1, 1/2*Tr(V2), 1/4*Tr(G)>",
         "<1, 1/2*Tr(V2), 1/4*Tr(C22)>",
         "<1, 1/2*Tr(V4), 1/4*Tr(G)>", false},
        {"vii", "S4", 2, "C22", {"C22", "C22", "W2", "W2"},
         "<1, 1/2*Tr(W2), 1/4*Tr(G)>",
         "<1, 1/2*Tr(W2), 1/4*Tr(C22)>",
         "<1, 1/4*Tr(G)>", false},
        {"viii", "S4", 2, "D8", {"C22", "C22"},
         "<1, 1/2*Tr(C22)>",
         "<1, 1/2*Tr(C22)>",
         "<1, 1/2*Tr(G)>", false},
        {"ix", "S4", 2, "D8", {"V2", "V2"},
         "<1, 1/2*Tr(V2)>",
         "<1, 1/2*Tr(V2)>",
         "<1, 1/2*Tr(V4)>", false},
        {"x", "S4", 2, "C22", {"W2", "W2"},
         "<1, 1/2*Tr(W2)>",
         "<1, 1/2*Tr(W2)>",
         "<1, 1/2*Tr(G)>", false},
    };
    return rows;
}

// Icosahedral shapes at p = 2; none of them are free.
inline const std::vector<ProfileFixture>& table2_fixtures() {
    static const std::vector<ProfileFixture> rows = {
        {"i", "A5", 2, "C2", {"C2", "C2"},
         "<1, 1/2*Tr(G)>", "<1, 1/2*Tr(C2)>", "<1, 1/2*Tr(G)>", false},
        {"ii", "A5", 2, "C22", {"C22", "C22", "C2", "C2"},
         "<1, 1/2*Tr(C2), 1/4*Tr(G)>",
         "<1, 1/2*Tr(C2), 1/4*Tr(C22)>",
         "<1, 1/4*Tr(G)>", false},
        {"iii", "A5", 2, "C22", {"C22", "C22"},
         "<1, 1/2*Tr(G)>", "<1, 1/2*Tr(C22)>", "<1, 1/2*Tr(G)>", false},
    };
    return rows;
}

/* Icosahedral shapes at p = 3 and p = 5: cyclic inertia (and its
 * almost-maximal dihedral variant) is never free, full dihedral weak
 * inertia always is. */
inline const std::vector<ProfileFixture>& table3_fixtures() {
    static const std::vector<ProfileFixture> rows = {
        {"3.i", "A5", 3, "C3", {"C3", "C3"},
         "<1, 1/3*Tr(G)>", "<1, 1/3*Tr(C3)>", "<1, 1/3*Tr(G)>", false},
        {"3.i-am", "A5", 3, "D6", {"D6", "C3", "C3"},
         "<1, 1/3*Tr(C3)>", "<1, 1/3*Tr(C3)>", "<1, 1/3*Tr(G)>", false},
        {"3.ii", "A5", 3, "D6", {"D6", "C3"},
         "<1, 1/3*Tr(G)>", "<1, 1/3*Tr(D6)>", "<1, 1/3*Tr(G)>", true},
        {"5.i", "A5", 5, "C5", {"C5", "C5"},
         "<1, 1/5*Tr(G)>", "<1, 1/5*Tr(C5)>", "<1, 1/5*Tr(G)>", false},
        {"5.i-am", "A5", 5, "D10", {"D10", "C5", "C5"},
         "<1, 1/5*Tr(C5)>", "<1, 1/5*Tr(C5)>", "<1, 1/5*Tr(G)>", false},
        {"5.ii", "A5", 5, "D10", {"D10", "C5"},
         "<1, 1/5*Tr(G)>", "<1, 1/5*Tr(D10)>", "<1, 1/5*Tr(G)>", true},
    };
    return rows;
}

// The four tetrahedral shapes at p = 2 with wild ramification.
inline const std::vector<ProfileFixture>& a4_fixtures() {
    static const std::vector<ProfileFixture> rows = {
        {"full", "A4", 2, "G", {"V4", "V4"},
         "<1, 1/2*Tr(V4)>", "<1, 1/2*Tr(V4)>", "<1, 1/2*Tr(V4)>", true},
        {"jumps13", "A4", 2, "V4", {"V4", "V4", "C2", "C2"},
         "<1, 1/2*Tr(C2), 1/4*Tr(G)>",
         "<1, 1/2*Tr(C2), 1/4*Tr(V4)>",
         "<1, 1/4*Tr(V4)>", false},
        {"weak-v4c2", "A4", 2, "V4", {"C2", "C2"},
         "<1, 1/2*Tr(C2)>", "<1, 1/2*Tr(C2)>", "<1, 1/2*Tr(V4)>", false},
        {"weak-c2", "A4", 2, "C2", {"C2", "C2"},
         "<1, 1/2*Tr(G)>", "<1, 1/2*Tr(C2)>", "<1, 1/2*Tr(V4)>", false},
    };
    return rows;
}

// The octahedral shapes at p = 2 where the ring of integers is free.
inline const std::vector<ProfileFixture>& s4_free_fixtures() {
    static const std::vector<ProfileFixture> rows = {
        {"tame", "S4", 2, "S3", {"(1,2,3)"},
         "<1>", "<1>", "<1>", true},
        {"order12", "S4", 2, "A4", {"V4", "V4"},
         "<1, 1/2*Tr(V4)>", "<1, 1/2*Tr(V4)>", "<1, 1/2*Tr(V4)>", true},
        {"full-v4", "S4", 2, "G", {"V4", "V4"},
         "<1, 1/2*Tr(V4)>", "<1, 1/2*Tr(V4)>", "<1, 1/2*Tr(V4)>", true},
        {"full-a4", "S4", 2, "G", {"A4", "V4"},
         "<1, 1/2*Tr(A4)>", "<1, 1/2*Tr(A4)>", "<1, 1/2*Tr(A4)>", true},
        {"octic-v4", "S4", 2, "D8", {"V4", "V4"},
         "<1, 1/2*Tr(V4)>", "<1, 1/2*Tr(V4)>", "<1, 1/2*Tr(V4)>", true},
    };
    return rows;
}

/* The octic profile with ramification jumps at 1, 3 and 5: wild, neither
 * weakly nor almost-maximally ramified, so the local ring of integers is
 * not free over its associated order and nothing is induced. */
inline ProfileFixture d8_jumps135_fixture() {
    return {"d8-jumps135", "S4", 2, "D8", {"D8", "D8", "C4", "C4", "V2", "V2"},
            "", "", "", false};
}

/* Pairs (M, A) with A the associated order of M, and whether M is free
 * over A at p. */
struct PairFixture {
    std::string m_name, a_name;
    std::string m_pres, a_pres;
    unsigned long p = 2;
    bool expect_free = false;
};

// Octahedral pairs at p = 2: the ten table rows plus the one free pair.
inline const std::vector<PairFixture>& s4_pairs() {
    static const std::vector<PairFixture> rows = {
        {"M1", "A1", "<1, 1/2*Tr(V2), 1/4*Tr(C4), 1/8*Tr(D8)>",
         "<1, 1/2*Tr(V4), 1/8*Tr(G)>", 2, false},
        {"M2", "A2", "<1, 1/2*Tr(V2), 1/4*Tr(V4), 1/8*Tr(D8)>",
         "<1, 1/4*Tr(V4), 1/8*Tr(G)>", 2, false},
        {"M3", "A3", "<1, 1/2*Tr(V2), 1/4*Tr(C22), 1/8*Tr(D8)>",
         "<1, 1/2*Tr(V4), 1/8*Tr(G)>", 2, false},
        {"M4", "A4", "<1, 1/2*Tr(V2), 1/4*Tr(C4)>",
         "<1, 1/2*Tr(V4), 1/4*Tr(G)>", 2, false},
        {"M5", "A5", "<1, 1/2*Tr(V2), 1/4*Tr(V4)>",
         "<1, 1/4*Tr(V4)>", 2, false},
        {"M6", "A6", "<1, 1/2*Tr(V2), 1/4*Tr(C22)>",
         "<1, 1/2*Tr(V4), 1/4*Tr(G)>", 2, false},
        {"M7", "A7", "<1, 1/2*Tr(W2), 1/4*Tr(C22)>",
         "<1, 1/4*Tr(G)>", 2, false},
        {"M8", "A8", "<1, 1/2*Tr(C22)>", "<1, 1/2*Tr(G)>", 2, false},
        {"M9", "A9", "<1, 1/2*Tr(V2)>", "<1, 1/2*Tr(V4)>", 2, false},
        {"M10", "A10", "<1, 1/2*Tr(W2)>", "<1, 1/2*Tr(G)>", 2, false},
        {"M11", "A11", "<1, 1/4*Tr(V4), 1/8*Tr(D8)>",
         "<1, 1/4*Tr(V4), 1/8*Tr(G)>", 2, true},
    };
    return rows;
}

// Icosahedral pairs at p = 2, 3, 5.
inline const std::vector<PairFixture>& a5_pairs() {
    static const std::vector<PairFixture> rows = {
        {"M1", "A1", "<1, 1/2*Tr(C2)>", "<1, 1/2*Tr(G)>", 2, false},
        {"M2", "A2", "<1, 1/2*Tr(C2), 1/4*Tr(C22)>", "<1, 1/4*Tr(G)>", 2, false},
        {"M3", "A3", "<1, 1/2*Tr(C22)>", "<1, 1/2*Tr(G)>", 2, false},
        {"M4", "A4", "<1, 1/3*Tr(C3)>", "<1, 1/3*Tr(G)>", 3, false},
        {"M5", "A5", "<1, 1/3*Tr(D6)>", "<1, 1/3*Tr(G)>", 3, true},
        {"M6", "A6", "<1, 1/5*Tr(C5)>", "<1, 1/5*Tr(G)>", 5, false},
        {"M7", "A7", "<1, 1/5*Tr(D10)>", "<1, 1/5*Tr(G)>", 5, true},
        {"M8", "A8", "<1, 1/2*Tr(Alt4)>", "<1, 1/2*Tr(G)>", 2, true},
    };
    return rows;
}

struct HybridFixture {
    std::string group, N;
    unsigned long p = 2;
    bool expect = false;
};

/* Hybrid splittings: the projection away from N is a maximal order at p.
 * True for the standard examples, false whenever p divides |N|. */
inline const std::vector<HybridFixture>& hybrid_fixtures() {
    static const std::vector<HybridFixture> rows = {
        {"A4", "V4", 3, true},
        {"S4", "V4", 3, true},
        {"D6", "C3", 2, true},
        {"D10", "C5", 2, true},
        {"D14", "C7", 2, true},
        {"D18", "C9", 2, true},
        {"D22", "C11", 2, true},
        {"D26", "C13", 2, true},
        {"D30", "C15", 2, true},
        {"A4", "V4", 2, false},
        {"S4", "A4", 2, false},
        {"D6", "C3", 3, false},
    };
    return rows;
}

}  // namespace ordlat
