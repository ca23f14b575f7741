/* ordlat command line tool.
 *
 * Exact arithmetic for full lattices in rational group algebras Q[G]:
 * associated orders, induction from subgroups, p-local freeness over a
 * given order, hybrid maximality certificates, and classification of
 * rings of integers from ramification data.
 *
 * Lattice specs use the form
 *
 *     Z[S4] + (1/2)Z[S4]Tr(V2) + (1/4)Z[S4]Tr(C4)
 *
 * with one group label throughout, every denominator a power of a single
 * prime (inferred when --prime is absent), and subgroups given by catalog
 * name or generator list. Where the group is already fixed by flags, the
 * angle form "<1, 1/2*Tr(V2), ...>" works as well. Any spec argument may
 * be written @file to substitute the contents of that file.
 */

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ordlat/catalog.hpp"
#include "ordlat/classify.hpp"

namespace {

using nlohmann::json;
using namespace ordlat;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot read file \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// "@path" pulls the argument text from a file; anything else passes through.
std::string resolve_spec(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::string s = read_file(arg.substr(1));
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' ||
                          s.back() == '\t'))
        s.pop_back();
    return s;
}

// Profile arguments: inline JSON, @file, or a plain path to a JSON file.
std::string profile_text(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') return read_file(arg.substr(1));
    if (!arg.empty() && arg[0] == '{') return arg;
    return read_file(arg);
}

unsigned long smallest_prime_factor(const Z& qz, size_t pos) {
    if (!qz.fits_ulong_p() || qz.get_ui() > 1000000000000UL)
        throw error("spec: denominator " + qz.get_str() + " too large at position " +
                    std::to_string(pos));
    unsigned long q = qz.get_ui();
    for (unsigned long f = 2; f * f <= q; ++f)
        if (q % f == 0) return f;
    return q;
}

unsigned exponent_of(const Z& q, unsigned long p, size_t pos) {
    Z pw = 1;
    unsigned n = 0;
    while (pw < q) {
        pw *= p;
        ++n;
    }
    if (pw != q)
        throw error("spec: denominator " + q.get_str() + " is not a power of " +
                    std::to_string(p) + " at position " + std::to_string(pos));
    return n;
}

/* The Z[G] spec grammar: term (+ term)*, where a term is an optional
 * coefficient "(1/q)" followed by "Z[label]" and an optional "Tr(...)".
 * Parse errors carry the character position. */
struct SpecTerm {
    Z q = 1;
    std::string sub;  // inside Tr(...), empty when absent
    size_t pos = 0;
};

struct LatticeSpec {
    std::string label;
    std::vector<SpecTerm> terms;
};

LatticeSpec parse_zg_spec(const std::string& text) {
    LatticeSpec out;
    size_t i = 0;
    const size_t n = text.size();
    auto skip = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](size_t at, const std::string& what) {
        throw error("spec: " + what + " at position " + std::to_string(at));
    };
    skip();
    if (i >= n) fail(0, "empty spec");
    while (true) {
        SpecTerm t;
        t.pos = i;
        if (i < n && text[i] == '(') {
            ++i;
            skip();
            if (!(i < n && text[i] == '1')) fail(i, "expected \"1\" in coefficient");
            ++i;
            skip();
            if (!(i < n && text[i] == '/')) fail(i, "expected \"/\" in coefficient");
            ++i;
            skip();
            size_t d0 = i;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == d0) fail(i, "expected digits after \"1/\"");
            t.q = Z(text.substr(d0, i - d0), 10);
            skip();
            if (!(i < n && text[i] == ')')) fail(i, "expected \")\" after coefficient");
            ++i;
            skip();
            if (t.q <= 1) fail(d0, "coefficient denominator must exceed 1");
        }
        if (text.compare(i, 2, "Z[") != 0) fail(i, "expected \"Z[\"");
        i += 2;
        size_t l0 = i;
        while (i < n && text[i] != ']') ++i;
        if (i == n) fail(l0, "unterminated group label");
        std::string label = text.substr(l0, i - l0);
        while (!label.empty() && label.front() == ' ') label.erase(label.begin());
        while (!label.empty() && label.back() == ' ') label.pop_back();
        if (label.empty()) fail(l0, "empty group label");
        ++i;
        skip();
        if (out.label.empty())
            out.label = label;
        else if (out.label != label)
            fail(l0, "group label changed from " + out.label + " to " + label);
        if (text.compare(i, 3, "Tr(") == 0) {
            i += 3;
            size_t s0 = i;
            int depth = 1;
            while (i < n && depth > 0) {
                if (text[i] == '(') ++depth;
                else if (text[i] == ')') --depth;
                ++i;
            }
            if (depth != 0) fail(s0, "unterminated Tr(");
            t.sub = text.substr(s0, i - s0 - 1);
            skip();
        }
        out.terms.push_back(std::move(t));
        if (i >= n) break;
        if (text[i] != '+') fail(i, "expected \"+\" between terms");
        ++i;
        skip();
        if (i >= n) fail(i, "trailing \"+\"");
    }
    return out;
}

/* Prime inference for angle form specs: the smallest prime factor of the
 * first denominator found after a "/", or 0 when there is none. */
unsigned long infer_prime_any(const std::string& text) {
    for (size_t i = 0; i + 1 < text.size(); ++i) {
        if (text[i] != '/') continue;
        size_t j = i + 1;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i + 1) continue;
        Z q(text.substr(i + 1, j - i - 1), 10);
        if (q > 1) return smallest_prime_factor(q, i + 1);
    }
    return 0;
}

struct ParsedLattice {
    const Group* G = nullptr;
    unsigned long p = 2;
    TracePresentation pres;
};

ParsedLattice lattice_from_zg_spec(const std::string& text, unsigned long prime_flag) {
    LatticeSpec sp = parse_zg_spec(text);
    Group& G = catalog_group(sp.label);
    unsigned long p = prime_flag;
    if (p == 0)
        for (const SpecTerm& t : sp.terms)
            if (t.q > 1) {
                p = smallest_prime_factor(t.q, t.pos);
                break;
            }
    if (p == 0) p = 2;
    ParsedLattice out{&G, p, TracePresentation(G, p)};
    for (const SpecTerm& t : sp.terms) {
        unsigned lvl = t.q > 1 ? exponent_of(t.q, p, t.pos) : 0;
        if (t.sub.empty()) {
            if (lvl > 0) out.pres.add_term(lvl, G.trivial_subgroup());
        } else {
            out.pres.add_term(lvl, G.parse_subgroup(t.sub));
        }
    }
    return out;
}

// Presentation over a group fixed by flags: angle form or a Z[...] spec
// whose label must match that group.
TracePresentation presentation_over(const Group& G, unsigned long p, const std::string& text) {
    if (text.find("Z[") != std::string::npos) {
        ParsedLattice pl = lattice_from_zg_spec(text, p);
        if (pl.G != &G)
            throw error("spec: group label " + pl.G->name() + " does not match " + G.name());
        return pl.pres;
    }
    return parse_presentation(G, p, text);
}

std::string zg_str(const TracePresentation& pres) {
    const Group& G = *pres.G;
    std::string out = "Z[" + G.name() + "]";
    for (const TraceTerm& t : pres.terms) {
        if (t.n == 0 && t.P.order() == 1) continue;
        Z q = 1;
        for (unsigned k = 0; k < t.n; ++k) q *= static_cast<unsigned long>(pres.p);
        out += " + (1/" + q.get_str() + ")Z[" + G.name() + "]";
        if (t.P.order() > 1) out += "Tr(" + G.subgroup_name(t.P) + ")";
    }
    return out;
}

// Canonical dump: denominator line, then the HNF basis rows.
std::string lattice_dump(const GroupLattice& L) {
    std::string s = "den " + L.den().get_str() + "\n";
    for (size_t i = 0; i < L.rank(); ++i) {
        for (size_t j = 0; j < L.basis().cols(); ++j) {
            if (j) s += " ";
            s += L.basis().at(i, j).get_str();
        }
        s += "\n";
    }
    return s;
}

std::string order_str(const GroupLattice& A, unsigned long p) {
    std::optional<TracePresentation> rp = reconstruct_presentation(A, p);
    return rp ? rp->str() : "(no trace presentation)";
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- assoc-order

int cmd_assoc_order(const std::string& spec, unsigned long prime_flag,
                    const std::string& format) {
    ParsedLattice pl = lattice_from_zg_spec(resolve_spec(spec), prime_flag);
    GroupLattice L = pl.pres.lattice();
    GroupLattice A = associated_order(L);
    std::optional<TracePresentation> rp = reconstruct_presentation(A, pl.p);
    if (format == "json") {
        json j;
        j["group"] = pl.G->name();
        j["p"] = pl.p;
        j["lattice"] = zg_str(pl.pres);
        if (rp) j["associated_order"] = zg_str(*rp);
        else j["associated_order"] = nullptr;
        j["den"] = A.den().get_str();
        json rows = json::array();
        for (size_t i = 0; i < A.rank(); ++i) {
            json row = json::array();
            for (size_t c = 0; c < A.basis().cols(); ++c) row.push_back(A.basis().at(i, c).get_str());
            rows.push_back(std::move(row));
        }
        j["rows"] = std::move(rows);
        emit_json(j);
    } else {
        std::cout << "group: " << pl.G->name() << "\n";
        std::cout << "p: " << pl.p << "\n";
        std::cout << "lattice: " << zg_str(pl.pres) << "\n";
        std::cout << "associated order: " << (rp ? zg_str(*rp) : "(no trace presentation)")
                  << "\n";
        std::cout << lattice_dump(A);
    }
    return 0;
}

// ----------------------------------------------------------------------- free

int cmd_free(const std::string& spec, const std::string& order_spec, unsigned long prime_flag,
             unsigned long attempts, unsigned long seed, const std::string& format) {
    ParsedLattice pl = lattice_from_zg_spec(resolve_spec(spec), prime_flag);
    GroupLattice M = pl.pres.lattice();
    GroupLattice A = order_spec.empty() ? associated_order(M)
                                        : presentation_over(*pl.G, pl.p, resolve_spec(order_spec))
                                              .lattice();
    FreenessReport rep = is_free_over(M, A, pl.p);

    // The witness search is meaningful on the certified path only: x with
    // M x = A(M) locally at p exists exactly when the verdict is free.
    std::optional<AlgebraElement> witness;
    unsigned long tried = 0;
    if (rep.free && order_spec.empty()) {
        IsoSearchResult iso = find_local_isomorphism(M, A, pl.p, attempts, seed);
        tried = iso.attempts;
        if (iso.status == IsoSearchResult::Status::found) witness = iso.witness;
    }

    std::string lat_s = pl.pres.str();
    std::string ord_s = order_str(A, pl.p);
    if (format == "json") {
        json j;
        j["lattice"] = lat_s;
        j["order"] = ord_s;
        j["p"] = pl.p;
        j["radical_dim"] = rep.dim_radical;
        j["hom_dims"] = {rep.hom_xx, rep.hom_xb, rep.hom_bb};
        j["verdict"] = rep.free;
        if (witness) j["witness"] = witness->str();
        emit_json(j);
    } else {
        std::cout << "group: " << pl.G->name() << "\n";
        std::cout << "lattice: " << lat_s << "\n";
        std::cout << "order: " << ord_s
                  << (order_spec.empty() ? " (associated order)" : "") << "\n";
        std::cout << "p: " << pl.p << "\n";
        std::cout << "radical dim: " << rep.dim_radical << "\n";
        std::cout << "hom dims: h_XX=" << rep.hom_xx << " h_XB=" << rep.hom_xb
                  << " h_BB=" << rep.hom_bb << "\n";
        std::cout << "verdict: " << (rep.free ? "free" : "not free") << "\n";
        if (witness) std::cout << "witness: " << witness->str() << "\n";
        else if (rep.free && order_spec.empty())
            std::cout << "witness: none found in " << tried << " attempts (inconclusive)\n";
    }
    return 0;
}

// --------------------------------------------------------------------- induce

int cmd_induce(const std::string& group, const std::string& sub, const std::string& pres_spec,
               unsigned long prime_flag, const std::string& format) {
    Group& G = catalog_group(group);
    Subgroup S = G.parse_subgroup(resolve_spec(sub));
    Group H = subgroup_as_group(S, G.subgroup_name(S));
    std::string text = resolve_spec(pres_spec);
    unsigned long p = prime_flag ? prime_flag : infer_prime_any(text);
    if (p == 0) p = 2;
    TracePresentation pres = presentation_over(H, p, text);
    InductionReport rep = run_induction(G, H, pres);
    bool ok = rep.closed_form_matches && rep.conjugates_match;

    std::string computed_s = order_str(rep.order_computed, p);
    if (format == "json") {
        json j;
        j["group"] = G.name();
        j["subgroup"] = H.name();
        j["p"] = p;
        j["input"] = pres.str();
        j["induced"] = rep.induced_pres.str();
        j["order_closed_form"] = rep.order_closed_form.str();
        j["order_computed"] = computed_s;
        j["closed_form_matches"] = rep.closed_form_matches;
        j["conjugates_match"] = rep.conjugates_match;
        j["induced_is_ring"] = is_unital_ring(rep.induced);
        emit_json(j);
    } else {
        std::cout << "group: " << G.name() << "\n";
        std::cout << "subgroup: " << H.name() << " (order " << H.order() << ")\n";
        std::cout << "p: " << p << "\n";
        std::cout << "input: " << pres.str() << "\n";
        std::cout << "induced: " << rep.induced_pres.str() << "\n";
        std::cout << "order closed form: " << rep.order_closed_form.str() << "\n";
        std::cout << "order computed: " << computed_s << "\n";
        std::cout << "closed form matches: " << bool_str(rep.closed_form_matches) << "\n";
        std::cout << "conjugates match: " << bool_str(rep.conjugates_match) << "\n";
        std::cout << "induced is ring: " << bool_str(is_unital_ring(rep.induced)) << "\n";
    }
    return ok ? 0 : 1;
}

// ------------------------------------------------------------ classify, check

RamificationProfile profile_from_arg(const std::string& arg, Group*& G_out) {
    json j = json::parse(profile_text(arg));
    Group& G = catalog_group(profile_group_label(j));
    G_out = &G;
    return profile_from_json(G, j);
}

int cmd_classify(const std::vector<std::string>& args, const std::string& group_flag,
                 bool assume, const std::string& format) {
    Group* G = group_flag.empty() ? nullptr : &catalog_group(group_flag);
    std::vector<RamificationProfile> profiles;
    for (const std::string& a : args) {
        Group* g = nullptr;
        profiles.push_back(profile_from_arg(a, g));
        if (G && G != g) throw error("classify: profiles name different groups");
        G = g;
    }
    if (!G) throw error("classify: pass profiles or --group");
    Verdict v = classify(*G, profiles, assume);
    if (format == "json") emit_json(v.to_json());
    else std::cout << v.str();
    return 0;
}

int cmd_check(const std::vector<std::string>& args, const std::string& format) {
    bool all_ok = true;
    json out = json::array();
    for (const std::string& a : args) {
        Group* G = nullptr;
        RamificationProfile pr = profile_from_arg(a, G);
        EndToEndReport r = end_to_end_check(*G, pr);
        bool ok = r.agree && r.closed_form_matches && r.conjugates_match;
        all_ok = all_ok && ok;
        if (format == "json") {
            json j;
            j["profile"] = profile_to_json(pr);
            j["rule"] = r.rule;
            j["theorem_free"] = r.theorem_free;
            j["engine_free"] = r.verdict_engine;
            j["agree"] = r.agree;
            j["closed_form_matches"] = r.closed_form_matches;
            j["conjugates_match"] = r.conjugates_match;
            j["local"] = r.local_pres;
            j["induced"] = r.induced_pres;
            j["order"] = r.order_pres;
            out.push_back(std::move(j));
        } else {
            std::cout << "profile: " << pr.str() << "\n";
            std::cout << "rule: " << r.rule << "\n";
            std::cout << "theorem: " << (r.theorem_free ? "free" : "not free") << "\n";
            std::cout << "engine: " << (r.verdict_engine ? "free" : "not free") << "\n";
            std::cout << "local: " << r.local_pres << "\n";
            std::cout << "induced: " << r.induced_pres << "\n";
            std::cout << "order: " << r.order_pres << "\n";
            std::cout << "closed form matches: " << bool_str(r.closed_form_matches) << "\n";
            std::cout << "conjugates match: " << bool_str(r.conjugates_match) << "\n";
            std::cout << "agree: " << bool_str(r.agree) << "\n\n";
        }
    }
    if (format == "json") emit_json(out);
    return all_ok ? 0 : 1;
}

// --------------------------------------------------------------------- hybrid

int cmd_hybrid(const std::string& group, const std::string& normal, unsigned long p,
               const std::string& format) {
    Group& G = catalog_group(group);
    Subgroup N = G.parse_subgroup(resolve_spec(normal));
    if (!G.is_normal(N)) throw error("hybrid: subgroup is not normal in " + G.name());
    bool ok = hybrid_component_maximal(G, N, p);
    if (format == "json") {
        json j;
        j["group"] = G.name();
        j["normal"] = G.subgroup_name(N);
        j["p"] = p;
        j["hybrid"] = ok;
        emit_json(j);
    } else {
        std::cout << "group: " << G.name() << "\n";
        std::cout << "normal: " << G.subgroup_name(N) << " (order " << N.order() << ")\n";
        std::cout << "p: " << p << "\n";
        std::cout << "hybrid: " << bool_str(ok) << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------ reproduce

struct RepCase {
    std::string name;
    std::string expected;  // transcribed from the named fixtures
    std::string computed;  // engine output
};

std::string table_line(const std::string& id, const std::string& local, const std::string& ind,
                       const std::string& order, bool free, bool agree) {
    return id + " local=" + local + " induced=" + ind + " order=" + order +
           " free=" + bool_str(free) + " agree=" + bool_str(agree);
}

std::vector<RepCase> reproduce_cases(const std::string& target) {
    std::vector<RepCase> cases;
    auto pair_cases = [&](const std::vector<PairFixture>& rows, const std::string& glabel) {
        Group& G = catalog_group(glabel);
        for (const PairFixture& fx : rows) {
            GroupLattice M = parse_presentation(G, fx.p, fx.m_pres).lattice();
            GroupLattice A = parse_presentation(G, fx.p, fx.a_pres).lattice();
            FreenessReport rep = is_free_over(M, A, fx.p);
            cases.push_back({fx.m_name, fx.m_name + " " + bool_str(fx.expect_free),
                             fx.m_name + " " + bool_str(rep.free)});
        }
    };
    auto table_cases = [&](const std::vector<ProfileFixture>& rows) {
        for (const ProfileFixture& fx : rows) {
            Group& G = catalog_group(fx.group);
            RamificationProfile pr = fixture_profile(G, fx);
            EndToEndReport r = end_to_end_check(G, pr);
            cases.push_back({fx.id,
                             table_line(fx.id, fx.expect_local, fx.expect_ind, fx.expect_order,
                                        fx.expect_free, true),
                             table_line(fx.id, r.local_pres, r.induced_pres, r.order_pres,
                                        r.verdict_engine, r.agree)});
        }
    };
    if (target == "a2") {
        pair_cases(s4_pairs(), "S4");
    } else if (target == "a3") {
        pair_cases(a5_pairs(), "A5");
    } else if (target == "table1") {
        table_cases(table1_fixtures());
    } else if (target == "table2") {
        table_cases(table2_fixtures());
    } else if (target == "table3") {
        table_cases(table3_fixtures());
    } else if (target == "examples45") {
        for (const HybridFixture& fx : hybrid_fixtures()) {
            Group& G = catalog_group(fx.group);
            Subgroup N = G.parse_subgroup(fx.N);
            bool got = hybrid_component_maximal(G, N, fx.p);
            std::string name = fx.group + " " + fx.N + " p=" + std::to_string(fx.p);
            cases.push_back({name, name + " " + bool_str(fx.expect),
                             name + " " + bool_str(got)});
        }
    } else {
        throw error("reproduce: unknown target \"" + target + "\"");
    }
    return cases;
}

int cmd_reproduce(const std::string& target, const std::string& golden_dir, bool write_golden,
                  const std::string& format) {
    std::string path = golden_dir + "/" + target + ".txt";
    std::vector<RepCase> cases = reproduce_cases(target);

    if (write_golden) {
        // Freezes the fixture expectations, never the engine output, so the
        // comparison below stays a real check.
        std::ofstream out(path, std::ios::binary);
        if (!out) throw error("cannot write golden file \"" + path + "\"");
        for (const RepCase& c : cases) out << c.expected << "\n";
        std::cout << "wrote " << cases.size() << " lines to " << path << "\n";
        return 0;
    }

    std::vector<std::string> golden;
    {
        std::istringstream in(read_file(path));
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) golden.push_back(line);
        }
    }

    size_t mismatches = 0;
    json jcases = json::array();
    for (size_t i = 0; i < cases.size() || i < golden.size(); ++i) {
        std::string want = i < golden.size() ? golden[i] : "(missing)";
        std::string got = i < cases.size() ? cases[i].computed : "(missing)";
        std::string name = i < cases.size() ? cases[i].name : "(extra golden line)";
        bool ok = want == got;
        if (!ok) ++mismatches;
        if (format == "json") {
            json j;
            j["name"] = name;
            j["expected"] = want;
            j["computed"] = got;
            j["ok"] = ok;
            jcases.push_back(std::move(j));
        } else if (ok) {
            std::cout << "[ok] " << got << "\n";
        } else {
            std::cout << "[MISMATCH] " << name << "\n";
            std::cout << "  expected: " << want << "\n";
            std::cout << "  computed: " << got << "\n";
        }
    }
    if (format == "json") {
        json j;
        j["target"] = target;
        j["cases"] = std::move(jcases);
        j["mismatches"] = mismatches;
        emit_json(j);
    } else {
        std::cout << target << ": " << std::max(cases.size(), golden.size()) << " cases, "
                  << mismatches << " mismatches\n";
    }
    return mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "ordlat: associated orders, induction, and p-local freeness of lattices in Q[G]"};
    app.require_subcommand(1);
    app.footer(
        "groups and canonical generators:\n"
        "  S4, S3: natural action; A4, A5: even permutations; C<n>: (1,2,...,n)\n"
        "  D<2m>: (1,...,m) with a reflection, D8 = <(1,2,3,4),(1,3)>; V4 = <(1,3)(2,4),(1,2)(3,4)>\n"
        "  perm-gens:(...),(...)  builds the closure of explicit generators\n"
        "named subgroups:\n"
        "  S4: W2=<(1,3)> V2=<(1,3)(2,4)> C4=<(1,2,3,4)> V4=<(1,3)(2,4),(1,2)(3,4)>\n"
        "      C22=<(1,3),(2,4)> D8=<(1,2,3,4),(1,3)> A4 S3=<(1,2),(1,2,3)>\n"
        "  A5: C2=<(1,2)(3,4)> C22=<(1,2)(3,4),(1,3)(2,4)> C3=<(1,2,3)> D6=<(1,2)(4,5),(1,2,3)>\n"
        "      C5=<(1,2,3,4,5)> D10=<(2,5)(3,4),(1,2,3,4,5)> Alt4=<(1,2)(3,4),(1,2,3)>\n"
        "  A4: C2=<(1,2)(3,4)> C3=<(1,2,3)> V4=<(1,2)(3,4),(1,3)(2,4)>\n"
        "  D<2m>: C<m> (rotations, also named N for odd m); D8 adds V2, C4, V4, C22, W2\n"
        "subgroup specs also accept generator lists like \"(1,2),(3,4)\", and \"G\" means\n"
        "the whole group. Any spec argument may be @file.");

    std::string format = "text";
    unsigned long prime = 0;
    unsigned long seed = 1;
    unsigned long attempts = 10000;
    unsigned jobs = 1;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    std::string ao_spec;
    CLI::App* ao = app.add_subcommand("assoc-order",
                                      "associated order of a lattice given by a Z[G] spec");
    ao->add_option("spec", ao_spec, "lattice spec, e.g. \"Z[S4] + (1/2)Z[S4]Tr(V2)\"")
        ->required();
    ao->add_option("--prime", prime, "prime p (default: inferred from denominators)");
    add_format(ao);

    std::string fr_spec, fr_order;
    CLI::App* fr = app.add_subcommand("free",
                                      "p-local freeness of a lattice over its associated order");
    fr->add_option("spec", fr_spec, "lattice spec")->required();
    fr->add_option("--order", fr_order,
                   "test over this order instead (angle form or Z[G] spec)");
    fr->add_option("--prime", prime, "prime p (default: inferred from denominators)");
    fr->add_option("--seed", seed, "witness search seed")->capture_default_str();
    fr->add_option("--attempts", attempts, "witness search attempt budget")
        ->capture_default_str();
    add_format(fr);

    std::string in_group, in_sub, in_pres;
    CLI::App* in = app.add_subcommand("induce",
                                      "induce a lattice from a subgroup and compare the "
                                      "computed associated order with the closed forms");
    in->add_option("--group", in_group, "ambient group label")->required();
    in->add_option("--sub", in_sub, "subgroup (catalog name or generators)")->required();
    in->add_option("--presentation", in_pres, "presentation over the subgroup")->required();
    in->add_option("--prime", prime, "prime p (default: inferred from denominators)");
    add_format(in);

    std::vector<std::string> cl_profiles;
    std::string cl_group;
    bool cl_assume = false;
    CLI::App* cl = app.add_subcommand("classify",
                                      "freeness verdict for a ring of integers from "
                                      "ramification profiles (JSON)");
    cl->add_option("profiles", cl_profiles, "profile JSON: inline, @file, or path")
        ->expected(-1);
    cl->add_option("--group", cl_group,
                   "group label, needed only when no profile is required (degree 2p "
                   "dihedral)");
    cl->add_flag("--assume-hypotheses", cl_assume,
                 "accept dihedral degrees outside the verified list, marking the verdict "
                 "conditional");
    add_format(cl);

    std::vector<std::string> ck_profiles;
    CLI::App* ck = app.add_subcommand("check",
                                      "run the classification rules and the lattice engine "
                                      "on each profile and compare verdicts");
    ck->add_option("profiles", ck_profiles, "profile JSON: inline, @file, or path")
        ->required()
        ->expected(-1);
    add_format(ck);

    std::string hy_group, hy_normal;
    CLI::App* hy = app.add_subcommand("hybrid",
                                      "certify that the projection away from a normal "
                                      "subgroup is a maximal order at p");
    hy->add_option("--group", hy_group, "group label")->required();
    hy->add_option("--normal", hy_normal, "normal subgroup")->required();
    hy->add_option("--prime", prime, "prime p")->required();
    add_format(hy);

    std::string rp_target, rp_dir = "data/golden";
    bool rp_write = false;
    CLI::App* rp = app.add_subcommand("reproduce",
                                      "recompute a named case list and compare against its "
                                      "golden file");
    rp->add_option("target", rp_target, "a2, a3, table1, table2, table3, or examples45")
        ->required()
        ->check(CLI::IsMember({"a2", "a3", "table1", "table2", "table3", "examples45"}));
    rp->add_option("--golden-dir", rp_dir, "directory of golden files")->capture_default_str();
    rp->add_flag("--write-golden", rp_write,
                 "write the fixture expectations to the golden file and exit");
    rp->add_option("--jobs", jobs, "case parallelism cap (cases run in order)")
        ->check(CLI::PositiveNumber);
    add_format(rp);

    int rc = 0;
    ao->callback([&] { rc = cmd_assoc_order(ao_spec, prime, format); });
    fr->callback([&] { rc = cmd_free(fr_spec, fr_order, prime, attempts, seed, format); });
    in->callback([&] { rc = cmd_induce(in_group, in_sub, in_pres, prime, format); });
    cl->callback([&] { rc = cmd_classify(cl_profiles, cl_group, cl_assume, format); });
    ck->callback([&] { rc = cmd_check(ck_profiles, format); });
    hy->callback([&] { rc = cmd_hybrid(hy_group, hy_normal, prime, format); });
    rp->callback([&] { rc = cmd_reproduce(rp_target, rp_dir, rp_write, format); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
