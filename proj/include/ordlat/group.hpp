#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "ordlat/perm.hpp"

namespace ordlat {

class Group;

/* Subset of a parent group's element indices, always sorted, closed under
 * the group operation by construction. */
struct Subgroup {
    const Group* parent = nullptr;
    std::vector<uint16_t> elems;

    size_t order() const { return elems.size(); }
    bool contains(uint16_t idx) const {
        return std::binary_search(elems.begin(), elems.end(), idx);
    }
    bool contains(const Subgroup& other) const {
        for (uint16_t e : other.elems)
            if (!contains(e)) return false;
        return true;
    }
    bool operator==(const Subgroup& o) const { return parent == o.parent && elems == o.elems; }
    bool operator<(const Subgroup& o) const { return elems < o.elems; }
};

/* Finite permutation group, table-driven and immutable after construction.
 * Elements are sorted lexicographically by image vector, which puts the
 * identity at index 0 and fixes every downstream coordinate convention. */
class Group {
public:
    static constexpr size_t kClosureBound = 10000;

    /* Catalog subgroups point back at their group, so copies and moves
     * re-parent the stored entries. Subgroup values handed out by the
     * accessors stay valid as long as the instance they came from does. */
    Group(const Group& o)
        : name_(o.name_), degree_(o.degree_), elems_(o.elems_), mul_(o.mul_), inv_(o.inv_),
          named_(o.named_) {
        adopt();
    }
    Group(Group&& o) noexcept
        : name_(std::move(o.name_)), degree_(o.degree_), elems_(std::move(o.elems_)),
          mul_(std::move(o.mul_)), inv_(std::move(o.inv_)), named_(std::move(o.named_)) {
        adopt();
    }
    Group& operator=(const Group& o) {
        if (this != &o) {
            Group tmp(o);
            *this = std::move(tmp);
        }
        return *this;
    }
    Group& operator=(Group&& o) noexcept {
        name_ = std::move(o.name_);
        degree_ = o.degree_;
        elems_ = std::move(o.elems_);
        mul_ = std::move(o.mul_);
        inv_ = std::move(o.inv_);
        named_ = std::move(o.named_);
        adopt();
        return *this;
    }

    static Group from_generators(std::vector<Perm> gens, std::string name,
                                 size_t bound = kClosureBound) {
        if (gens.empty()) throw error("Group: no generators");
        unsigned deg = gens[0].degree();
        for (const Perm& g : gens)
            if (g.degree() != deg) throw error("Group: generator degree mismatch");
        std::set<Perm> seen;
        std::vector<Perm> queue{Perm(deg)};
        seen.insert(Perm(deg));
        for (size_t i = 0; i < queue.size(); ++i) {
            for (const Perm& g : gens) {
                Perm h = g * queue[i];
                if (seen.insert(h).second) {
                    queue.push_back(h);
                    if (queue.size() > bound) throw error("Group: closure exceeds element bound");
                }
            }
        }
        Group G;
        G.name_ = std::move(name);
        G.degree_ = deg;
        G.elems_.assign(seen.begin(), seen.end());
        G.finish();
        return G;
    }

    const std::string& name() const { return name_; }
    unsigned degree() const { return degree_; }
    size_t order() const { return elems_.size(); }
    const Perm& elem(uint16_t i) const { return elems_[i]; }
    uint16_t identity() const { return 0; }

    uint16_t mul(uint16_t a, uint16_t b) const { return mul_[a * elems_.size() + b]; }
    uint16_t inv(uint16_t a) const { return inv_[a]; }
    uint16_t conj(uint16_t g, uint16_t x) const { return mul(mul(g, x), inv(g)); }

    uint16_t index_of(const Perm& p) const {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
        if (it == elems_.end() || !(*it == p)) throw error("Group: element not in group: " + p.str());
        return static_cast<uint16_t>(it - elems_.begin());
    }
    bool has_elem(const Perm& p) const {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
        return it != elems_.end() && *it == p;
    }

    Subgroup full_subgroup() const {
        Subgroup H;
        H.parent = this;
        H.elems.resize(order());
        std::iota(H.elems.begin(), H.elems.end(), 0);
        return H;
    }

    Subgroup trivial_subgroup() const {
        Subgroup H;
        H.parent = this;
        H.elems = {0};
        return H;
    }

    Subgroup subgroup_from_indices(std::vector<uint16_t> gens) const {
        std::set<uint16_t> seen{identity()};
        std::vector<uint16_t> queue{identity()};
        for (size_t i = 0; i < queue.size(); ++i)
            for (uint16_t g : gens) {
                uint16_t h = mul(g, queue[i]);
                if (seen.insert(h).second) queue.push_back(h);
            }
        Subgroup H;
        H.parent = this;
        H.elems.assign(seen.begin(), seen.end());
        return H;
    }

    Subgroup subgroup_from_perms(const std::vector<Perm>& gens) const {
        std::vector<uint16_t> idx;
        for (const Perm& p : gens) idx.push_back(index_of(p));
        return subgroup_from_indices(std::move(idx));
    }

    // "sub: (1,2)(3,4), (1,3)" or a bare generator list, or a catalog name.
    Subgroup parse_subgroup(const std::string& spec) const {
        std::string s = spec;
        if (s.rfind("sub:", 0) == 0) s = s.substr(4);
        while (!s.empty() && s.front() == ' ') s.erase(s.begin());
        while (!s.empty() && s.back() == ' ') s.pop_back();
        if (s == "G" || s == name_) return full_subgroup();
        auto it = named_.find(s);
        if (it != named_.end()) return it->second;
        if (s.find('(') == std::string::npos)
            throw error("Group " + name_ + ": unknown subgroup \"" + spec + "\"");
        if (!s.empty() && s.front() == '<' && s.back() == '>') s = s.substr(1, s.size() - 2);
        std::vector<Perm> gens;
        for (const std::string& part : split_perm_list(s)) gens.push_back(Perm::parse(part, degree_));
        return subgroup_from_perms(gens);
    }

    // Subgroup generated by all conjugates, the smallest normal subgroup
    // containing H.
    Subgroup normal_closure(const Subgroup& H) const {
        std::vector<uint16_t> gens;
        for (uint16_t h : H.elems)
            for (uint16_t g = 0; g < order(); ++g) gens.push_back(conj(g, h));
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        return subgroup_from_indices(std::move(gens));
    }

    bool is_normal(const Subgroup& H) const {
        for (uint16_t g = 0; g < order(); ++g)
            for (uint16_t h : H.elems)
                if (!H.contains(conj(g, h))) return false;
        return true;
    }

    Subgroup conjugate_subgroup(const Subgroup& H, uint16_t g) const {
        Subgroup R;
        R.parent = this;
        for (uint16_t h : H.elems) R.elems.push_back(conj(g, h));
        std::sort(R.elems.begin(), R.elems.end());
        return R;
    }

    /* Left coset representatives of H: the identity first, then the
     * smallest-index element of each remaining coset, in index order. */
    std::vector<uint16_t> left_coset_reps(const Subgroup& H) const {
        std::vector<bool> covered(order(), false);
        std::vector<uint16_t> reps;
        for (uint16_t g = 0; g < static_cast<uint16_t>(order()); ++g) {
            if (covered[g]) continue;
            reps.push_back(g);
            for (uint16_t h : H.elems) covered[mul(g, h)] = true;
        }
        return reps;
    }

    Subgroup intersect(const Subgroup& A, const Subgroup& B) const {
        Subgroup R;
        R.parent = this;
        std::set_intersection(A.elems.begin(), A.elems.end(), B.elems.begin(), B.elems.end(),
                              std::back_inserter(R.elems));
        return R;
    }

    /* Every subgroup, found by closing the cyclic subgroups under pairwise
     * join. Only used on groups of order <= 60. */
    std::vector<Subgroup> all_subgroups() const {
        std::set<std::vector<uint16_t>> found;
        found.insert({identity()});
        for (uint16_t g = 1; g < order(); ++g)
            found.insert(subgroup_from_indices({g}).elems);
        std::vector<std::vector<uint16_t>> cyclic(found.begin(), found.end());
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::vector<uint16_t>> snapshot(found.begin(), found.end());
            for (const auto& A : snapshot)
                for (const auto& C : cyclic) {
                    std::vector<uint16_t> gens = A;
                    gens.insert(gens.end(), C.begin(), C.end());
                    auto J = subgroup_from_indices(std::move(gens)).elems;
                    if (found.insert(J).second) grew = true;
                }
        }
        std::vector<Subgroup> out;
        for (auto& v : found) {
            Subgroup H;
            H.parent = this;
            H.elems = v;
            out.push_back(std::move(H));
        }
        std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
            if (a.order() != b.order()) return a.order() < b.order();
            return a.elems < b.elems;
        });
        return out;
    }

    const std::map<std::string, Subgroup>& named_subgroups() const { return named_; }

    // Catalog name if the member set matches one, "G" for the full group,
    // otherwise a generator list.
    std::string subgroup_name(const Subgroup& H) const {
        if (H.order() == order()) return "G";
        for (const auto& [nm, sub] : named_)
            if (sub.elems == H.elems) return nm;
        std::string s = "<";
        Subgroup probe = trivial_subgroup();
        bool first = true;
        for (uint16_t e : H.elems) {
            if (probe.contains(e)) continue;
            if (!first) s += ",";
            s += elems_[e].str();
            first = false;
            std::vector<uint16_t> gens = probe.elems;
            gens.push_back(e);
            probe = subgroup_from_indices(std::move(gens));
        }
        return s + ">";
    }

    void add_named_subgroup(const std::string& nm, const std::string& gens) {
        named_[nm] = parse_subgroup(gens);
    }
    void add_named_subgroup(const std::string& nm, Subgroup sub) {
        if (sub.parent != this) throw error("add_named_subgroup: foreign subgroup");
        named_[nm] = std::move(sub);
    }

private:
    Group() = default;

    void adopt() {
        for (auto& kv : named_) kv.second.parent = this;
    }

    void finish() {
        std::sort(elems_.begin(), elems_.end());
        size_t n = elems_.size();
        mul_.resize(n * n);
        inv_.resize(n);
        for (size_t a = 0; a < n; ++a) {
            for (size_t b = 0; b < n; ++b) {
                Perm p = elems_[a] * elems_[b];
                auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
                mul_[a * n + b] = static_cast<uint16_t>(it - elems_.begin());
                if (p.is_identity()) inv_[a] = static_cast<uint16_t>(b);
            }
        }
    }

    std::string name_;
    unsigned degree_ = 0;
    std::vector<Perm> elems_;
    std::vector<uint16_t> mul_;
    std::vector<uint16_t> inv_;
    std::map<std::string, Subgroup> named_;
};

namespace detail {

inline std::vector<Perm> parse_gens(const std::string& list, unsigned degree) {
    std::vector<Perm> gens;
    for (const std::string& part : split_perm_list(list)) gens.push_back(Perm::parse(part, degree));
    return gens;
}

inline Group make_sym(unsigned n, const std::string& name) {
    std::vector<uint8_t> t(n), c(n);
    for (unsigned i = 0; i < n; ++i) t[i] = static_cast<uint8_t>(i);
    std::swap(t[0], t[1]);
    for (unsigned i = 0; i < n; ++i) c[i] = static_cast<uint8_t>((i + 1) % n);
    return Group::from_generators({Perm(std::move(t)), Perm(std::move(c))}, name);
}

inline Group make_alt(unsigned n, const std::string& name) {
    std::vector<Perm> gens;
    gens.push_back(Perm::parse("(1,2,3)", n));
    if (n >= 4) gens.push_back(n % 2 == 0 ? Perm::parse("(1,2)(3,4)", n)
                                          : Perm::parse("(3,4,5)", n));
    if (n == 5) gens.push_back(Perm::parse("(1,2,3,4,5)", n));
    return Group::from_generators(std::move(gens), name);
}

/* Q8 through its left regular representation on 8 points. Element indices:
 * 0:1  1:-1  2:i  3:-i  4:j  5:-j  6:k  7:-k. */
inline Group make_q8() {
    auto neg = [](int a) { return a ^ 1; };
    auto mul_idx = [&](int a, int b) {
        int sign = (a & 1) ^ (b & 1);
        int ua = a & ~1, ub = b & ~1;
        int prod;
        bool extra_neg = false;
        if (ua == 0) prod = ub;
        else if (ub == 0) prod = ua;
        else if (ua == ub) {
            prod = 0;
            extra_neg = true;  // i*i = j*j = k*k = -1
        } else if (ua == 2 && ub == 4) prod = 6;   // i*j = k
        else if (ua == 4 && ub == 6) prod = 2;     // j*k = i
        else if (ua == 6 && ub == 2) prod = 4;     // k*i = j
        else if (ua == 4 && ub == 2) { prod = 6; extra_neg = true; }
        else if (ua == 6 && ub == 4) { prod = 2; extra_neg = true; }
        else { prod = 4; extra_neg = true; }       // i*k = -j
        if (sign) prod = neg(prod);
        if (extra_neg) prod = neg(prod);
        return prod;
    };
    std::vector<Perm> gens;
    for (int g : {2, 4}) {
        std::vector<uint8_t> img(8);
        for (int x = 0; x < 8; ++x) img[x] = static_cast<uint8_t>(mul_idx(g, x));
        gens.emplace_back(std::move(img));
    }
    return Group::from_generators(std::move(gens), "Q8");
}

/* Dihedral group of order 2m on m points: rotation (1..m) plus the
 * reflection fixing point 1. D8 is pinned to <(1,2,3,4),(1,3)> so its
 * named subgroups match the S4 catalog; D2 and D4 get extra points since
 * fewer than three points cannot carry them faithfully. */
inline Group make_dihedral(unsigned m, const std::string& name) {
    if (m == 1) return Group::from_generators({Perm::parse("(1,2)", 2)}, name);
    if (m == 2)
        return Group::from_generators({Perm::parse("(1,2)", 4), Perm::parse("(3,4)", 4)}, name);
    if (m == 4) return Group::from_generators(parse_gens("(1,2,3,4),(1,3)", 4), name);
    std::vector<uint8_t> rot(m), ref(m);
    for (unsigned i = 0; i < m; ++i) rot[i] = static_cast<uint8_t>((i + 1) % m);
    for (unsigned i = 0; i < m; ++i) ref[i] = static_cast<uint8_t>((m - i) % m);
    return Group::from_generators({Perm(std::move(rot)), Perm(std::move(ref))}, name);
}

}  // namespace detail

/* Builds a group from a label (C<n>, D<order> dihedral, V4, S3, A4, S4, A5,
 * Q8) or from "perm-gens: (1,2,3)(4,5), ..." with 1-based cycles. Named
 * labels carry a catalog of named subgroups with fixed generator choices:
 *   S4: W2=<(1,3)>  V2=<(1,3)(2,4)>  C4=<(1,2,3,4)>  V4=<(1,3)(2,4),(1,2)(3,4)>
 *       C22=<(1,3),(2,4)>  D8=<(1,2,3,4),(1,3)>  A4=<(1,2)(3,4),(1,2,3)>
 *   A5: C2=<(1,2)(3,4)>  C22=<(1,2)(3,4),(1,3)(2,4)>  C3=<(1,2,3)>
 *       D6=<(1,2)(4,5),(1,2,3)>  C5=<(1,2,3,4,5)>  D10=<(2,5)(3,4),(1,2,3,4,5)>
 *       Alt4=<(1,2)(3,4),(1,2,3)>
 *   A4: C2=<(1,2)(3,4)>  C3=<(1,2,3)>  V4=<(1,2)(3,4),(1,3)(2,4)>
 *   S3: C2=<(1,2)>  C3=<(1,2,3)>
 *   D8: same V2/C4/V4/C22/W2 member sets as inside S4
 *   V4: C2a=<(1,3)(2,4)>  C2b=<(1,2)(3,4)>  C2c=<(1,4)(2,3)>
 *   D<2m>: C<m> = rotation subgroup; for odd m also named N (index 2). */
inline Group make_group(const std::string& spec) {
    const std::string kGens = "perm-gens:";
    if (spec.rfind(kGens, 0) == 0) {
        std::string list = spec.substr(kGens.size());
        auto parts = split_perm_list(list);
        if (parts.empty()) throw error("make_group: no generators in \"" + spec + "\"");
        unsigned deg = 0;
        for (const std::string& part : parts)
            for (size_t i = 0; i < part.size(); ++i)
                if (part[i] >= '0' && part[i] <= '9') {
                    unsigned v = 0;
                    while (i < part.size() && part[i] >= '0' && part[i] <= '9')
                        v = v * 10 + static_cast<unsigned>(part[i++] - '0');
                    deg = std::max(deg, v);
                }
        std::vector<Perm> gens;
        for (const std::string& part : parts) gens.push_back(Perm::parse(part, deg));
        return Group::from_generators(std::move(gens), spec);
    }

    if (spec == "S4") {
        Group G = detail::make_sym(4, "S4");
        G.add_named_subgroup("W2", "(1,3)");
        G.add_named_subgroup("V2", "(1,3)(2,4)");
        G.add_named_subgroup("C4", "(1,2,3,4)");
        G.add_named_subgroup("V4", "(1,3)(2,4),(1,2)(3,4)");
        G.add_named_subgroup("C22", "(1,3),(2,4)");
        G.add_named_subgroup("D8", "(1,2,3,4),(1,3)");
        G.add_named_subgroup("A4", "(1,2)(3,4),(1,2,3)");
        G.add_named_subgroup("S3", "(1,2),(1,2,3)");
        return G;
    }
    if (spec == "A5") {
        Group G = detail::make_alt(5, "A5");
        G.add_named_subgroup("C2", "(1,2)(3,4)");
        G.add_named_subgroup("C22", "(1,2)(3,4),(1,3)(2,4)");
        G.add_named_subgroup("C3", "(1,2,3)");
        G.add_named_subgroup("D6", "(1,2)(4,5),(1,2,3)");
        G.add_named_subgroup("C5", "(1,2,3,4,5)");
        G.add_named_subgroup("D10", "(2,5)(3,4),(1,2,3,4,5)");
        G.add_named_subgroup("Alt4", "(1,2)(3,4),(1,2,3)");
        return G;
    }
    if (spec == "S3") {
        Group G = detail::make_sym(3, "S3");
        G.add_named_subgroup("C2", "(1,2)");
        G.add_named_subgroup("C3", "(1,2,3)");
        return G;
    }
    if (spec == "A4") {
        Group G = detail::make_alt(4, "A4");
        G.add_named_subgroup("C2", "(1,2)(3,4)");
        G.add_named_subgroup("C3", "(1,2,3)");
        G.add_named_subgroup("V4", "(1,2)(3,4),(1,3)(2,4)");
        return G;
    }
    if (spec == "V4") {
        Group G = Group::from_generators(detail::parse_gens("(1,3)(2,4),(1,2)(3,4)", 4), "V4");
        G.add_named_subgroup("C2a", "(1,3)(2,4)");
        G.add_named_subgroup("C2b", "(1,2)(3,4)");
        G.add_named_subgroup("C2c", "(1,4)(2,3)");
        return G;
    }
    if (spec == "Q8") return detail::make_q8();
    if (spec.size() >= 2 && spec[0] == 'C' && spec[1] >= '0' && spec[1] <= '9') {
        unsigned n = static_cast<unsigned>(std::stoul(spec.substr(1)));
        if (n == 0) throw error("make_group: bad label " + spec);
        if (n == 1) return Group::from_generators({Perm(1)}, "C1");
        std::vector<uint8_t> c(n);
        for (unsigned i = 0; i < n; ++i) c[i] = static_cast<uint8_t>((i + 1) % n);
        return Group::from_generators({Perm(std::move(c))}, spec);
    }
    if (spec.size() >= 2 && spec[0] == 'D' && spec[1] >= '0' && spec[1] <= '9') {
        unsigned k = static_cast<unsigned>(std::stoul(spec.substr(1)));
        if (k == 0 || k % 2 != 0)
            throw error("make_group: dihedral label is D<order> with even order");
        unsigned m = k / 2;
        Group G = detail::make_dihedral(m, spec);
        if (m >= 3) {
            std::string cyc = "(";
            for (unsigned i = 1; i <= m; ++i) cyc += std::to_string(i) + (i < m ? "," : ")");
            G.add_named_subgroup("C" + std::to_string(m), cyc);
            if (m % 2 == 1) G.add_named_subgroup("N", cyc);
            if (m == 4) {
                G.add_named_subgroup("V2", "(1,3)(2,4)");
                G.add_named_subgroup("C4", "(1,2,3,4)");
                G.add_named_subgroup("V4", "(1,3)(2,4),(1,2)(3,4)");
                G.add_named_subgroup("C22", "(1,3),(2,4)");
                G.add_named_subgroup("W2", "(1,3)");
            }
        } else if (m == 2) {
            G.add_named_subgroup("C2a", "(1,2)");
            G.add_named_subgroup("C2b", "(3,4)");
            G.add_named_subgroup("C2c", "(1,2)(3,4)");
        }
        return G;
    }
    throw error("make_group: unknown group spec \"" + spec + "\"");
}

/* A subgroup as a standalone Group. Elements keep their permutation form
 * and the parent's degree, so inclusion into the parent is the identity map
 * on permutations. Parent catalog names are inherited for proper subgroups
 * contained in H. */
inline Group subgroup_as_group(const Subgroup& H, const std::string& name) {
    const Group& P = *H.parent;
    std::vector<Perm> gens;
    for (uint16_t e : H.elems) gens.push_back(P.elem(e));
    Group G = Group::from_generators(std::move(gens), name);
    if (G.order() != H.order()) throw error("subgroup_as_group: subset not closed");
    for (const auto& [nm, sub] : P.named_subgroups()) {
        if (sub.order() <= 1 || sub.order() >= H.order() || !H.contains(sub)) continue;
        Subgroup local;
        local.parent = &G;
        for (uint16_t e : sub.elems) local.elems.push_back(G.index_of(P.elem(e)));
        std::sort(local.elems.begin(), local.elems.end());
        G.add_named_subgroup(nm, std::move(local));
    }
    return G;
}

}  // namespace ordlat
