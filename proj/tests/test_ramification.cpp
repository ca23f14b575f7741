#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <map>
#include <set>

#include "ordlat/catalog.hpp"
#include "ordlat/ramification.hpp"

using namespace ordlat;

namespace {

std::string thrown(const std::function<void()>& f) {
    try {
        f();
    } catch (const error& e) {
        return e.what();
    }
    return "";
}

bool mentions(const std::string& msg, const std::string& part) {
    return msg.find(part) != std::string::npos;
}

// Unvalidated profile, so the error paths of validate() can be poked directly.
RamificationProfile mk(const Group& G, unsigned long p, const std::string& D,
                       const std::vector<std::string>& filt) {
    RamificationProfile pr;
    pr.G = &G;
    pr.p = p;
    pr.D = (D == "1") ? G.trivial_subgroup() : G.parse_subgroup(D);
    for (const auto& s : filt)
        pr.filtration.push_back(s == "1" ? G.trivial_subgroup() : G.parse_subgroup(s));
    return pr;
}

const ProfileFixture& by_id(const std::vector<ProfileFixture>& v, const std::string& id) {
    for (const ProfileFixture& f : v)
        if (f.id == id) return f;
    throw error("no fixture " + id);
}

}  // namespace

TEST_CASE("profile validation names the violated invariant") {
    Group& S4g = catalog_group("S4");

    CHECK(mentions(thrown([&] { mk(S4g, 6, "D8", {"V2"}).validate(); }), "p must be prime"));
    CHECK(mentions(thrown([&] { mk(S4g, 2, "D8", {"V2", "V4"}).validate(); }), "decreasing"));
    CHECK(mentions(thrown([&] { mk(S4g, 2, "V2", {"V4"}).validate(); }), "decreasing"));
    CHECK(mentions(thrown([&] { mk(S4g, 2, "D8", {"D8", "D8", "W2"}).validate(); }),
                   "normal in the decomposition group"));
    CHECK(mentions(thrown([&] { mk(S4g, 2, "S3", {"S3", "(1,2,3)"}).validate(); }), "p-group"));
    CHECK(mentions(thrown([&] { mk(S4g, 2, "D8", {"D8", "C4"}).validate(); }), "prime to p"));
    CHECK(mentions(thrown([&] { mk(S4g, 5, "V4", {"V4"}).validate(); }), "cyclic"));

    Group& A4g = catalog_group("A4");
    RamificationProfile foreign = mk(S4g, 2, "D8", {});
    foreign.G = &A4g;
    CHECK(mentions(thrown([&] { foreign.validate(); }), "different group"));

    RamificationProfile pr = fixture_profile(S4g, by_id(table1_fixtures(), "ix"));
    CHECK(mentions(thrown([&] { pr.subextension_different(S4g.parse_subgroup("A4")); }),
                   "not inside the decomposition group"));
    CHECK(mentions(thrown([&] { pr.subextension_different(A4g.full_subgroup()); }),
                   "different group"));
    CHECK(mentions(thrown([&] { pr.trace_quotient_in_order(S4g.parse_subgroup("V2"), Z(0)); }),
                   "positive"));
}

TEST_CASE("ramification predicates and different valuations") {
    Group& S4g = catalog_group("S4");
    Group& A5g = catalog_group("A5");

    RamificationProfile deep = fixture_profile(S4g, by_id(table1_fixtures(), "i"));
    CHECK(deep.e() == 8);
    CHECK(deep.e_wild() == 8);
    CHECK(deep.wild());
    CHECK_FALSE(deep.weak());
    CHECK_FALSE(deep.tame());
    CHECK(deep.totally_ramified());
    CHECK(deep.different_valuation() == 24);

    RamificationProfile weak = fixture_profile(S4g, by_id(table1_fixtures(), "viii"));
    CHECK(weak.e() == 4);
    CHECK(weak.weak());
    CHECK_FALSE(weak.totally_ramified());
    CHECK(weak.different_valuation() == 6);

    RamificationProfile d6 = fixture_profile(A5g, by_id(table3_fixtures(), "3.ii"));
    CHECK(d6.e() == 6);
    CHECK(d6.e_wild() == 3);
    CHECK(d6.weak());
    CHECK(d6.different_valuation() == 7);

    RamificationProfile unram = mk(A5g, 7, "D6", {});
    unram.validate();
    CHECK(unram.unramified());
    CHECK(unram.tame());
    CHECK(unram.e() == 1);
    CHECK(unram.different_valuation() == 0);

    RamificationProfile tame = fixture_profile(S4g, by_id(s4_free_fixtures(), "tame"));
    CHECK(tame.tame());
    CHECK(tame.e() == 3);
    CHECK(tame.different_valuation() == 2);
}

TEST_CASE("trace bounds for the biquadratic chain with jumps at one and three") {
    Group& A4g = catalog_group("A4");
    RamificationProfile pr = fixture_profile(A4g, by_id(a4_fixtures(), "jumps13"));
    Subgroup C2 = A4g.parse_subgroup("C2");
    Subgroup V4 = A4g.parse_subgroup("V4");

    CHECK(pr.subextension_different(C2) == 4);
    CHECK(pr.subextension_different(V4) == 8);
    CHECK(pr.trace_quotient_in_order(C2, Z(2)));
    CHECK(pr.trace_quotient_in_order(V4, Z(4)));
    CHECK_FALSE(pr.trace_quotient_in_order(V4, Z(8)));
    CHECK(pr.trace_quotient_in_order(A4g.trivial_subgroup(), Z(1)));
    CHECK(pr.almost_maximal());
}

TEST_CASE("almost maximal ramification across the catalog") {
    for (const auto& fx : table1_fixtures()) {
        INFO("S4 row " << fx.id);
        bool am = fixture_profile(catalog_group("S4"), fx).almost_maximal();
        CHECK(am == (fx.id != "viii"));
    }

    const std::map<std::string, bool> t2{{"i", true}, {"ii", true}, {"iii", false}};
    for (const auto& fx : table2_fixtures()) {
        INFO("A5 row " << fx.id);
        CHECK(fixture_profile(catalog_group("A5"), fx).almost_maximal() == t2.at(fx.id));
    }

    const std::map<std::string, bool> t3{{"3.i", true},  {"3.i-am", true}, {"3.ii", false},
                                         {"5.i", true},  {"5.i-am", true}, {"5.ii", false}};
    for (const auto& fx : table3_fixtures()) {
        INFO("A5 row " << fx.id);
        CHECK(fixture_profile(catalog_group("A5"), fx).almost_maximal() == t3.at(fx.id));
    }

    const std::map<std::string, bool> a4{
        {"full", false}, {"jumps13", true}, {"weak-v4c2", true}, {"weak-c2", true}};
    for (const auto& fx : a4_fixtures()) {
        INFO("A4 shape " << fx.id);
        CHECK(fixture_profile(catalog_group("A4"), fx).almost_maximal() == a4.at(fx.id));
    }

    ProfileFixture bad = d8_jumps135_fixture();
    CHECK_FALSE(fixture_profile(catalog_group("S4"), bad).almost_maximal());
}

TEST_CASE("local presentation cascade on the catalog") {
    auto run = [](const ProfileFixture& fx, const std::string& rule) {
        Group& G = catalog_group(fx.group);
        RamificationProfile pr = fixture_profile(G, fx);
        Group Dg = promote_decomposition(pr);
        LocalPresentation lp = local_presentation(pr, Dg);
        INFO(fx.group << " " << fx.id);
        CHECK(lp.presentable);
        CHECK(lp.locally_free);
        CHECK(lp.rule == rule);
        CHECK(lp.pres.str() == fx.expect_local);
    };

    const std::map<std::string, std::string> t1{
        {"i", "dihedral-almost-maximal-chain"}, {"ii", "dihedral-almost-maximal-chain"},
        {"iii", "dihedral-almost-maximal-chain"}, {"iv", "abelian-quartic-chain"},
        {"v", "abelian-quartic-chain"}, {"vi", "abelian-quartic-chain"},
        {"vii", "abelian-quartic-chain"}, {"viii", "weak-inertia-trace"},
        {"ix", "weak-inertia-trace"}, {"x", "weak-inertia-trace"}};
    for (const auto& fx : table1_fixtures()) run(fx, t1.at(fx.id));

    const std::map<std::string, std::string> t2{{"i", "weak-inertia-trace"},
                                                {"ii", "abelian-quartic-chain"},
                                                {"iii", "weak-inertia-trace"}};
    for (const auto& fx : table2_fixtures()) run(fx, t2.at(fx.id));

    const std::map<std::string, std::string> t3{
        {"3.i", "weak-inertia-trace"}, {"3.i-am", "dihedral-almost-maximal-chain"},
        {"3.ii", "weak-inertia-trace"}, {"5.i", "weak-inertia-trace"},
        {"5.i-am", "dihedral-almost-maximal-chain"}, {"5.ii", "weak-inertia-trace"}};
    for (const auto& fx : table3_fixtures()) run(fx, t3.at(fx.id));

    const std::map<std::string, std::string> a4{{"full", "weak-inertia-trace"},
                                                {"jumps13", "abelian-quartic-chain"},
                                                {"weak-v4c2", "weak-inertia-trace"},
                                                {"weak-c2", "weak-inertia-trace"}};
    for (const auto& fx : a4_fixtures()) run(fx, a4.at(fx.id));

    const std::map<std::string, std::string> s4{
        {"tame", "tame-group-ring"}, {"order12", "weak-inertia-trace"},
        {"full-v4", "weak-inertia-trace"}, {"full-a4", "weak-inertia-trace"},
        {"octic-v4", "weak-inertia-trace"}};
    for (const auto& fx : s4_free_fixtures()) run(fx, s4.at(fx.id));
}

TEST_CASE("cascade branches beyond the catalog") {
    Group& S4g = catalog_group("S4");
    Group& A5g = catalog_group("A5");

    // wild non-weak completions of prime degree get the maximal order
    {
        RamificationProfile pr = mk(A5g, 2, "C2", {"C2", "C2", "C2"});
        pr.validate();
        Group Dg = promote_decomposition(pr);
        LocalPresentation lp = local_presentation(pr, Dg);
        CHECK(lp.rule == "prime-cyclic-maximal-order");
        CHECK(lp.pres.str() == "<1, 1/2*Tr(G)>");
    }
    {
        RamificationProfile pr = mk(A5g, 3, "C3", {"C3", "C3", "C3"});
        pr.validate();
        Group Dg = promote_decomposition(pr);
        LocalPresentation lp = local_presentation(pr, Dg);
        CHECK(lp.rule == "prime-cyclic-maximal-order");
        CHECK(lp.pres.str() == "<1, 1/3*Tr(G)>");
    }

    // the one supported shape that is not free locally: no presentation
    {
        ProfileFixture fx = d8_jumps135_fixture();
        RamificationProfile pr = fixture_profile(S4g, fx);
        Group Dg = promote_decomposition(pr);
        LocalPresentation lp = local_presentation(pr, Dg);
        CHECK_FALSE(lp.locally_free);
        CHECK_FALSE(lp.presentable);
        CHECK(lp.rule == "dihedral-not-almost-maximal");
    }

    auto cascade_error = [&](const Group& G, unsigned long p, const std::string& D,
                             const std::vector<std::string>& filt) {
        RamificationProfile pr = mk(G, p, D, filt);
        pr.validate();
        Group Dg = promote_decomposition(pr);
        return thrown([&] { local_presentation(pr, Dg); });
    };

    CHECK(mentions(cascade_error(S4g, 2, "C4", {"C4", "C4", "V2"}),
                   "no integral jump structure"));
    CHECK(mentions(cascade_error(S4g, 2, "C22", {"C22", "C22", "V2"}),
                   "must be weakly ramified"));
    CHECK(mentions(cascade_error(S4g, 2, "A4", {"A4", "V4", "V4"}), "tetrahedral"));
    CHECK(mentions(cascade_error(catalog_group("Q8"), 2, "G", {"G", "G", "G"}),
                   "unsupported decomposition group shape"));

    RamificationProfile pr = fixture_profile(S4g, by_id(table1_fixtures(), "i"));
    CHECK(mentions(thrown([&] { local_presentation(pr, catalog_group("A4")); }),
                   "does not match the decomposition group"));
}

TEST_CASE("profile json round trip") {
    Group& S4g = catalog_group("S4");
    RamificationProfile pr = fixture_profile(S4g, by_id(table1_fixtures(), "i"));

    nlohmann::json j = profile_to_json(pr);
    CHECK(j.at("group") == "S4");
    CHECK(j.at("p") == 2);
    CHECK(j.at("decomposition") == "D8");
    CHECK(j.at("filtration") ==
          nlohmann::json({"D8", "D8", "C4", "C4", "V2", "V2", "V2", "V2"}));
    CHECK(j.at("e") == 8);
    CHECK(j.at("tame") == false);
    CHECK(j.at("weak") == false);
    CHECK(j.at("almost_maximal") == true);
    CHECK(j.at("different_valuation") == 24);

    RamificationProfile back = profile_from_json(S4g, j);
    CHECK(back.p == pr.p);
    CHECK(back.D.elems == pr.D.elems);
    REQUIRE(back.filtration.size() == pr.filtration.size());
    for (size_t i = 0; i < back.filtration.size(); ++i)
        CHECK(back.filtration[i].elems == pr.filtration[i].elems);

    // generator arrays, trivial markers, defaulted decomposition group
    RamificationProfile gens = profile_from_json(
        S4g, nlohmann::json{{"group", "S4"},
                            {"p", 2},
                            {"decomposition", nlohmann::json::array({"(1,2,3,4)", "(1,3)"})},
                            {"filtration", nlohmann::json::array(
                                               {nlohmann::json::array({"(1,3)(2,4)"}), "V2"})}});
    CHECK(gens.D.elems == S4g.parse_subgroup("D8").elems);
    CHECK(gens.e() == 2);
    CHECK(gens.weak());

    RamificationProfile trail = profile_from_json(
        S4g, nlohmann::json{{"p", 2}, {"decomposition", "V2"}, {"filtration", {"V2", "V2", "1"}}});
    CHECK(trail.e_wild() == 2);
    CHECK(trail.weak());

    Group& A5g = catalog_group("A5");
    RamificationProfile full = profile_from_json(A5g, nlohmann::json{{"p", 7}});
    CHECK(full.D.order() == 60);
    CHECK(full.unramified());

    CHECK(mentions(thrown([&] { profile_from_json(S4g, nlohmann::json{{"group", "S4"}}); }),
                   "missing \"p\""));
    CHECK(mentions(
        thrown([&] { profile_from_json(S4g, nlohmann::json{{"group", "A5"}, {"p", 2}}); }),
        "does not match"));
    CHECK(mentions(thrown([&] {
                       profile_from_json(
                           S4g, nlohmann::json{{"p", 2}, {"decomposition", 7}});
                   }),
                   "string or an array"));
    CHECK(mentions(thrown([&] { profile_group_label(nlohmann::json::object()); }),
                   "missing \"group\""));
    CHECK(profile_group_label(nlohmann::json{{"group", "A5"}}) == "A5");
}

TEST_CASE("subgroups between two nested subgroups") {
    Group& S4g = catalog_group("S4");
    CHECK(subgroups_between(S4g, S4g.trivial_subgroup(), S4g.parse_subgroup("V4")).size() == 5);
    CHECK(subgroups_between(S4g, S4g.parse_subgroup("V2"), S4g.parse_subgroup("D8")).size() == 5);
    CHECK(subgroups_between(S4g, S4g.parse_subgroup("C4"), S4g.parse_subgroup("D8")).size() == 2);
    CHECK(subgroups_between(S4g, S4g.parse_subgroup("V4"), S4g.parse_subgroup("V4")).size() == 1);
    CHECK(mentions(thrown([&] {
                       subgroups_between(S4g, S4g.parse_subgroup("C4"),
                                         S4g.parse_subgroup("V4"));
                   }),
                   "not inside"));
}

TEST_CASE("decomposition group shapes") {
    auto shape = [](const std::string& g, const std::string& sub, unsigned long p) {
        Group& G = catalog_group(g);
        Subgroup H = (sub == "1") ? G.trivial_subgroup() : G.parse_subgroup(sub);
        return decomposition_shape(subgroup_as_group(H, "X"), p);
    };
    CHECK(shape("A4", "C2", 2) == DShape::c2);
    CHECK(shape("S4", "C4", 2) == DShape::c4);
    CHECK(shape("S4", "V4", 2) == DShape::klein);
    CHECK(shape("S4", "C22", 2) == DShape::klein);
    CHECK(shape("S4", "D8", 2) == DShape::d8);
    CHECK(shape("A5", "C3", 3) == DShape::cyclic_p);
    CHECK(shape("A5", "D6", 3) == DShape::dihedral_2p);
    CHECK(shape("A5", "D10", 5) == DShape::dihedral_2p);
    CHECK(shape("S4", "A4", 2) == DShape::a4_like);
    CHECK(shape("S4", "G", 2) == DShape::other);
    CHECK(shape("S4", "1", 2) == DShape::trivial);
    CHECK(decomposition_shape(catalog_group("Q8"), 2) == DShape::other);

    Group C4g = subgroup_as_group(catalog_group("S4").parse_subgroup("C4"), "C4");
    std::multiset<size_t> ords;
    for (uint16_t i = 0; i < C4g.order(); ++i) ords.insert(element_order(C4g, i));
    CHECK(ords == std::multiset<size_t>{1, 2, 4, 4});
}

TEST_CASE("promoted decomposition groups keep catalog names") {
    Group& S4g = catalog_group("S4");
    RamificationProfile pr = fixture_profile(S4g, by_id(table1_fixtures(), "i"));
    Group Dg = promote_decomposition(pr);
    CHECK(Dg.name() == "D8");
    CHECK(Dg.order() == 8);

    Subgroup v2 = restrict_subgroup(Dg, S4g, S4g.parse_subgroup("V2"));
    CHECK(v2.order() == 2);
    CHECK(Dg.subgroup_name(v2) == "V2");
    CHECK(Dg.subgroup_name(restrict_subgroup(Dg, S4g, S4g.parse_subgroup("C4"))) == "C4");

    RamificationProfile full = mk(S4g, 2, "G", {"V4", "V4"});
    full.validate();
    Group Fg = promote_decomposition(full);
    CHECK(Fg.name() == "S4");
    CHECK(Fg.order() == 24);

    CHECK(pr.str() == "S4 p=2 D=D8 filtration=[D8, D8, C4, C4, V2, V2, V2, V2]");
}
