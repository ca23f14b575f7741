#include <catch2/catch_amalgamated.hpp>

#include "ordlat/lattice.hpp"
#include "ordlat/presentation.hpp"

using namespace ordlat;

TEST_CASE("row HNF canonical form") {
    auto [H, piv] = row_hnf({{Z(2), Z(0)}, {Z(0), Z(2)}, {Z(1), Z(1)}}, 2);
    REQUIRE(H.rows() == 2);
    REQUIRE(H.at(0, 0) == 1);
    REQUIRE(H.at(0, 1) == 1);
    REQUIRE(H.at(1, 0) == 0);
    REQUIRE(H.at(1, 1) == 2);
    REQUIRE(piv == std::vector<size_t>{0, 1});

    // negative rows normalize to positive pivots with reduced entries above
    auto [H2, piv2] = row_hnf({{Z(-3), Z(7)}, {Z(0), Z(-5)}}, 2);
    REQUIRE(H2.at(0, 0) == 3);
    REQUIRE(H2.at(1, 1) == 5);
    REQUIRE(H2.at(0, 1) >= 0);
    REQUIRE(H2.at(0, 1) < 5);
}

TEST_CASE("bareiss determinant") {
    ZMat A = ZMat::from_rows({{Z(1), Z(2)}, {Z(3), Z(4)}}, 2);
    REQUIRE(bareiss_det(A) == -2);
    ZMat B = ZMat::from_rows({{Z(0), Z(1)}, {Z(1), Z(0)}}, 2);
    REQUIRE(bareiss_det(B) == -1);
    ZMat C = ZMat::from_rows({{Z(2), Z(4)}, {Z(1), Z(2)}}, 2);
    REQUIRE(bareiss_det(C) == 0);
    ZMat D = ZMat::from_rows(
        {{Z(2), Z(0), Z(1)}, {Z(0), Z(3), Z(0)}, {Z(1), Z(0), Z(2)}}, 3);
    REQUIRE(bareiss_det(D) == 9);
}

TEST_CASE("integer triangular solve") {
    ZMat B = ZMat::from_rows({{Z(2), Z(1), Z(0)}, {Z(0), Z(3), Z(1)}}, 3);
    std::vector<size_t> piv{0, 1};
    std::vector<Z> c{Z(4), Z(5), Z(1)};  // 2*row0 + row1
    auto z = solve_int_row(B, piv, c);
    REQUIRE(z == std::vector<Z>{Z(2), Z(1)});
    REQUIRE_THROWS(solve_int_row(B, piv, {Z(1), Z(0), Z(0)}));
    REQUIRE_THROWS(solve_int_row(B, piv, {Z(2), Z(1), Z(5)}));
}

TEST_CASE("algebra elements over C2") {
    Group G = make_group("C2");
    AlgebraElement e = AlgebraElement::idempotent_of(G, G.full_subgroup());
    REQUIRE((e * e) == e);
    AlgebraElement parsed = parse_element(G, "1/2 + 1/2*(1,2)");
    REQUIRE(parsed == e);
    REQUIRE(parse_element(G, "(1,2)") == AlgebraElement::basis(G, 1));
    REQUIRE(parse_element(G, "2 - (1,2)").str() == "2*() - (1,2)");
}

TEST_CASE("lattice arithmetic in Q[C2]") {
    Group G = make_group("C2");
    GroupLattice zg = GroupLattice::zg(G);
    AlgebraElement eplus = AlgebraElement::idempotent_of(G, G.full_subgroup());
    GroupLattice O = GroupLattice::from_elements(G, {AlgebraElement::one(G), eplus});

    REQUIRE(O.contains(zg));
    REQUIRE(!zg.contains(O));
    REQUIRE(index_in(zg, O) == 2);
    REQUIRE(sum(zg, O) == O);
    REQUIRE(intersect(zg, O) == zg);
    REQUIRE(dual(dual(O)) == O);
    REQUIRE(dual(dual(zg)) == zg);
    REQUIRE(product(O, O) == O);
    REQUIRE(product(zg, O) == O);
    REQUIRE(mul_right(O, AlgebraElement::basis(G, 1)) == O);
    REQUIRE(scale(scale(O, Q(3)), Q(1, 3)) == O);

    REQUIRE(is_unital_ring(zg));
    REQUIRE(is_unital_ring(O));
    REQUIRE(!is_unital_ring(scale(zg, Q(1, 2))));

    REQUIRE(associated_order(zg) == zg);
    REQUIRE(associated_order(O) == O);
    // the conductor of Z[C2] inside the maximal order
    REQUIRE(left_colon(zg, O) == scale(O, Q(2)));
    // and colon against a scaled copy
    REQUIRE(left_colon(scale(zg, Q(1, 2)), zg) == scale(zg, Q(1, 2)));

    REQUIRE(equal_at_p(zg, O, 3));
    REQUIRE(!equal_at_p(zg, O, 2));
    REQUIRE(contained_at_p(zg, O, 2));
    REQUIRE(!contained_at_p(O, zg, 2));
    REQUIRE(index_valuation(zg, O, 2) == 1);
}

TEST_CASE("rank one module lattices") {
    Group G = make_group("C2");
    AlgebraElement eplus = AlgebraElement::idempotent_of(G, G.full_subgroup());
    GroupLattice L = mul_right(GroupLattice::zg(G), eplus);
    REQUIRE(L.rank() == 1);
    REQUIRE(L.contains_element(eplus));
    REQUIRE(!L.full());
    auto y = coordinates_in_basis(L, eplus.coef);
    REQUIRE(y.size() == 1);
}

TEST_CASE("associated order of the group ring") {
    Group G = make_group("S4");
    REQUIRE(associated_order(GroupLattice::zg(G)) == GroupLattice::zg(G));
}

TEST_CASE("trace presentations round trip") {
    Group G = make_group("S4");
    TracePresentation P = parse_presentation(G, 2, "<1, 1/2*Tr(V4)>");
    REQUIRE(P.str() == "<1, 1/2*Tr(V4)>");
    GroupLattice L = P.lattice();
    REQUIRE(L.contains(GroupLattice::zg(G)));
    auto R = reconstruct_presentation(L, 2);
    REQUIRE(R.has_value());
    REQUIRE(R->str() == "<1, 1/2*Tr(V4)>");

    TracePresentation P2 = parse_presentation(G, 2, "<1, 1/4*Tr(V4), 1/8*Tr(G)>");
    REQUIRE(P2.all_terms_normal());
    REQUIRE(P2.is_chain());
    auto R2 = reconstruct_presentation(P2.lattice(), 2);
    REQUIRE(R2.has_value());
    REQUIRE(R2->str() == "<1, 1/4*Tr(V4), 1/8*Tr(G)>");

    TracePresentation P3 = parse_presentation(G, 2, "<1, 1/4*Tr(V4), 1/8*Tr(D8)>");
    REQUIRE(!P3.all_terms_normal());
    REQUIRE(P3.is_chain());
    REQUIRE(reconstruct_presentation(P3.lattice(), 2).has_value());

    REQUIRE(reconstruct_presentation(GroupLattice::zg(G), 2).has_value());
    REQUIRE(reconstruct_presentation(GroupLattice::zg(G), 2)->str() == "<1>");

    // denominator not a power of p: no presentation
    REQUIRE(!reconstruct_presentation(scale(GroupLattice::zg(G), Q(1, 3)), 2).has_value());
}
