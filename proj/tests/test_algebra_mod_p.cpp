#include <catch2/catch_amalgamated.hpp>

#include "ordlat/freeness.hpp"

using namespace ordlat;

static size_t rad_dim(const std::string& spec, unsigned long p) {
    Group G = make_group(spec);
    FiniteAlgebra A = algebra_mod_p(GroupLattice::zg(G), p);
    return radical_basis(A).size();
}

TEST_CASE("radical of group algebras, semisimple cases") {
    // p coprime to the group order
    REQUIRE(rad_dim("C2", 3) == 0);
    REQUIRE(rad_dim("C4", 3) == 0);
    REQUIRE(rad_dim("C3", 2) == 0);
    REQUIRE(rad_dim("S3", 5) == 0);
    REQUIRE(rad_dim("D8", 3) == 0);
    REQUIRE(rad_dim("Q8", 5) == 0);
}

TEST_CASE("radical of group algebras, p-groups") {
    // for a p-group the radical is the augmentation ideal
    REQUIRE(rad_dim("C2", 2) == 1);
    REQUIRE(rad_dim("C4", 2) == 3);
    REQUIRE(rad_dim("V4", 2) == 3);
    REQUIRE(rad_dim("D8", 2) == 7);
    REQUIRE(rad_dim("Q8", 2) == 7);
    REQUIRE(rad_dim("C3", 3) == 2);
    REQUIRE(rad_dim("C9", 3) == 8);
}

TEST_CASE("radical of group algebras, mixed order") {
    REQUIRE(rad_dim("S3", 2) == 1);   // F2 x M2(F2) semisimple part
    REQUIRE(rad_dim("S3", 3) == 4);   // semisimple part F3[C2]
    REQUIRE(rad_dim("C6", 2) == 3);
    REQUIRE(rad_dim("C6", 3) == 4);
    REQUIRE(rad_dim("A4", 2) == 9);   // F2[A4]/J = F2 x F4, dimension 3
    REQUIRE(rad_dim("A4", 3) == 2);   // the 3-dim simple sits in a defect zero block
    REQUIRE(rad_dim("S4", 2) == 19);  // F2[S4]/J = F2 x M2(F2)
    REQUIRE(rad_dim("S4", 3) == 4);   // two 3-dim defect zero blocks survive
}

TEST_CASE("semisimple quotient has zero radical") {
    for (auto [spec, p] : std::vector<std::pair<const char*, unsigned long>>{
             {"C4", 2}, {"S3", 2}, {"S3", 3}, {"A4", 2}, {"S4", 3}, {"Q8", 2}}) {
        Group G = make_group(spec);
        FiniteAlgebra A = algebra_mod_p(GroupLattice::zg(G), p);
        auto rad = radical_basis(A);
        SemisimpleQuotient Qt = quotient_by_radical(A, rad);
        REQUIRE(Qt.B.dim == A.dim - rad.size());
        REQUIRE(radical_basis(Qt.B).empty());
        // the projected identity really is the identity of B
        for (size_t j = 0; j < Qt.B.dim; ++j) {
            std::vector<i64> e(Qt.B.dim, 0);
            e[j] = 1;
            std::vector<i64> ue = Qt.B.mul(Qt.B.unit, e);
            for (size_t t = 0; t < Qt.B.dim; ++t) {
                i64 want = (j == t) ? 1 : 0;
                REQUIRE(((ue[t] - want) % static_cast<i64>(Qt.B.p)) == 0);
            }
        }
    }
}

TEST_CASE("radical elements are nilpotent as operators") {
    Group G = make_group("S3");
    FiniteAlgebra A = algebra_mod_p(GroupLattice::zg(G), 3);
    auto rad = radical_basis(A);
    REQUIRE(rad.size() == 4);
    for (const auto& x : rad) {
        FpMat R = A.left_matrix(x, static_cast<i64>(A.p));
        FpMat P = R;
        for (int i = 0; i < 6; ++i) P = fp_mul(P, R);
        for (size_t a = 0; a < P.rows(); ++a)
            for (size_t b = 0; b < P.cols(); ++b) REQUIRE(P.at(a, b) == 0);
    }
}

TEST_CASE("component algebra away from a normal subgroup") {
    Group s3 = make_group("S3");
    Subgroup c3 = s3.parse_subgroup("C3");
    GroupLattice C = complement_component_lattice(s3, c3);
    REQUIRE(C.rank() == 4);
    FiniteAlgebra A = component_algebra(s3, c3, 2);
    REQUIRE(A.dim == 4);
    REQUIRE(radical_basis(A).empty());  // M2(F2)

    REQUIRE(hybrid_component_maximal(s3, c3, 2));
    REQUIRE(!hybrid_component_maximal(s3, c3, 3));

    Group s4 = make_group("S4");
    REQUIRE(hybrid_component_maximal(s4, s4.parse_subgroup("V4"), 3));
    REQUIRE(!hybrid_component_maximal(s4, s4.parse_subgroup("V4"), 2));
}

TEST_CASE("maximality certificates") {
    Group c2 = make_group("C2");
    GroupLattice zg = GroupLattice::zg(c2);
    AlgebraElement eplus = AlgebraElement::idempotent_of(c2, c2.full_subgroup());
    GroupLattice O = GroupLattice::from_elements(c2, {AlgebraElement::one(c2), eplus});

    REQUIRE(!maximality_certificate(zg, 2).certified);
    REQUIRE(maximality_certificate(O, 2).certified);
    REQUIRE(maximality_certificate(zg, 3).certified);

    Group s3 = make_group("S3");
    REQUIRE(maximality_certificate(GroupLattice::zg(s3), 5).certified);
    REQUIRE(!maximality_certificate(GroupLattice::zg(s3), 2).certified);
}

TEST_CASE("module action of the group ring on itself") {
    Group G = make_group("S3");
    GroupLattice zg = GroupLattice::zg(G);
    const auto& R = module_action(zg, zg, 5);
    REQUIRE(R.size() == 6);
    for (uint16_t i = 0; i < 6; ++i)
        for (uint16_t j = 0; j < 6; ++j)
            for (uint16_t k = 0; k < 6; ++k)
                REQUIRE(R[i].at(j, k) == ((G.mul(i, j) == k) ? 1 : 0));
}

TEST_CASE("group rings are free over themselves") {
    for (auto [spec, p] : std::vector<std::pair<const char*, unsigned long>>{
             {"C2", 2}, {"S3", 2}, {"S3", 3}, {"A4", 2}, {"S4", 2}, {"S4", 3}}) {
        Group G = make_group(spec);
        FreenessReport rep = is_free_at_p(GroupLattice::zg(G), p);
        INFO(spec << " at " << p);
        REQUIRE(rep.free);
        REQUIRE(rep.dim_fiber == rep.dim_semisimple);
        REQUIRE(rep.hom_bb == rep.dim_semisimple);
        REQUIRE(rep.hom_xx == rep.hom_bb);
        REQUIRE(rep.hom_xb == rep.hom_bb);
    }
}

TEST_CASE("maximal order of Q[C2] is free over itself") {
    Group G = make_group("C2");
    AlgebraElement eplus = AlgebraElement::idempotent_of(G, G.full_subgroup());
    GroupLattice O = GroupLattice::from_elements(G, {AlgebraElement::one(G), eplus});
    FreenessReport rep = is_free_at_p(O, 2);
    REQUIRE(rep.free);
    REQUIRE(rep.dim_radical == 0);
}

TEST_CASE("freeness is invariant under scaling and unit translation") {
    Group G = make_group("S3");
    GroupLattice zg = GroupLattice::zg(G);
    REQUIRE(is_free_at_p(scale(zg, Q(1, 3)), 2).free);
    AlgebraElement u = parse_element(G, "1 + 2*(1,2,3)");
    REQUIRE(is_free_at_p(mul_right(zg, u), 5).free);
}

TEST_CASE("witness search finds translations") {
    Group G = make_group("C2");
    GroupLattice zg = GroupLattice::zg(G);
    AlgebraElement x = parse_element(G, "1 + 2*(1,2)");
    GroupLattice N = mul_right(zg, x);
    IsoSearchResult r = find_local_isomorphism(zg, N, 2, 50, 7);
    REQUIRE(r.status == IsoSearchResult::Status::found);
    REQUIRE(r.witness.has_value());
    REQUIRE(equal_at_p(mul_right(zg, *r.witness), N, 2));

    // distinct associated orders rule isomorphism out
    AlgebraElement eplus = AlgebraElement::idempotent_of(G, G.full_subgroup());
    GroupLattice O = GroupLattice::from_elements(G, {AlgebraElement::one(G), eplus});
    REQUIRE(find_local_isomorphism(zg, O, 2, 50, 7).status ==
            IsoSearchResult::Status::distinct_orders);
    // and at a prime where the orders agree a witness appears
    REQUIRE(find_local_isomorphism(zg, O, 3, 50, 7).status == IsoSearchResult::Status::found);
}

TEST_CASE("witness search on S4 lattices") {
    Group G = make_group("S4");
    GroupLattice zg = GroupLattice::zg(G);
    // 1 + 2t for an involution t acts with eigenvalues 3 and -1: a unit
    AlgebraElement x = parse_element(G, "1 + 2*(1,2)");
    Z d = bareiss_det(right_mul_matrix(G, [&] {
        std::vector<Z> v(G.order());
        for (size_t i = 0; i < v.size(); ++i) v[i] = x.coef[i].get_num();
        return v;
    }()));
    REQUIRE(d != 0);
    GroupLattice N = mul_right(zg, x);
    IsoSearchResult r = find_local_isomorphism(zg, N, 2, 200, 11);
    REQUIRE(r.status == IsoSearchResult::Status::found);
    REQUIRE(equal_at_p(mul_right(zg, *r.witness), N, 2));
}
