#include "polyspec/weyl.hpp"

#include <random>

#include "doctest.h"
#include "polyspec/errors.hpp"

using namespace polyspec;

TEST_CASE("Weyl group orders match the classical counts") {
    CHECK(make_weyl_group(make_a2_family(1.0).rs).elements.size() == 6);
    CHECK(make_weyl_group(make_b2_so2n(4)).elements.size() == 8);
    CHECK(make_weyl_group(make_product_a1({1.0})).elements.size() == 2);
    CHECK(make_weyl_group(make_product_a1({1.0, 2.0})).elements.size() == 4);
    CHECK(make_weyl_group(make_product_a1({1.0, 1.0, 1.0})).elements.size() == 8);
}

TEST_CASE("enumeration starts at the identity and stays orthogonal") {
    RootSystem rs = make_b2_so2n(5);
    WeylGroup w = make_weyl_group(rs);
    CHECK(w.elements[0].isIdentity(1e-12));
    for (const auto& e : w.elements)
        CHECK((e.transpose() * e - Eigen::MatrixXd::Identity(2, 2)).lpNorm<Eigen::Infinity>() <
              1e-10);
}

TEST_CASE("element cap raises a resource error") {
    CHECK_THROWS_AS(make_weyl_group(make_b2_so2n(3), 4), ResourceError);
}

TEST_CASE("longest element sends rho to minus rho") {
    for (const RootSystem& rs :
         {make_a2_family(2.0).rs, make_b2_so2n(3), make_product_a1({0.5, 1.5})}) {
        WeylGroup w = make_weyl_group(rs);
        Eigen::VectorXd image = w.elements[w.longest] * rs.rho.std_coords;
        CHECK((image + rs.rho.std_coords).lpNorm<Eigen::Infinity>() < 1e-9);
    }
}

TEST_CASE("dominant projection picks the unique dominant orbit representative") {
    RootSystem rs = make_a2_family(1.0).rs;
    WeylGroup w = make_weyl_group(rs);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        Eigen::VectorXd v(2);
        v << dist(rng), dist(rng);
        Functional f = rs.from_std(v);
        DominantProjection proj = dominant_project(rs, w, f);
        CHECK(rs.is_dominant(proj.value));
        // the witness actually maps f onto the projection
        Functional mapped = weyl_apply(rs, w, proj.witness, f);
        CHECK((mapped.std_coords - proj.value.std_coords).lpNorm<Eigen::Infinity>() < 1e-9);
        // already-dominant inputs are fixed with the identity witness
        DominantProjection again = dominant_project(rs, w, proj.value);
        CHECK(again.witness == 0);
    }
}

TEST_CASE("opposition swaps the A2 simple roots and fixes B2 and products") {
    RootSystem a2 = make_a2_family(1.0).rs;
    WeylGroup wa = make_weyl_group(a2);
    Eigen::VectorXd c(2);
    c << 2.0, 1.0;
    Functional f = a2.from_root_coords(c);
    Functional img = opposition(a2, wa, f);
    CHECK(img.root_coords(0) == doctest::Approx(1.0));
    CHECK(img.root_coords(1) == doctest::Approx(2.0));

    for (const RootSystem& rs : {make_b2_so2n(5), make_product_a1({1.0, 2.0})}) {
        WeylGroup w = make_weyl_group(rs);
        Eigen::VectorXd v(2);
        v << 1.7, 0.3;
        Functional g = rs.from_std(v);
        Functional fixed = opposition(rs, w, g);
        CHECK((fixed.std_coords - g.std_coords).lpNorm<Eigen::Infinity>() < 1e-9);
    }
}

TEST_CASE("Hermitian dominant functionals are the opposition-fixed ones") {
    RootSystem a2 = make_a2_family(4.0).rs;
    WeylGroup wa = make_weyl_group(a2);
    CHECK(is_hermitian_dominant(a2, wa, a2.rho));
    Eigen::VectorXd c(2);
    c << 2.0, 1.0;
    CHECK(!is_hermitian_dominant(a2, wa, a2.from_root_coords(c)));

    // every dominant functional is Hermitian for B2 (w0 = -1)
    RootSystem b2 = make_b2_so2n(3);
    WeylGroup wb = make_weyl_group(b2);
    Eigen::VectorXd v(2);
    v << 3.0, 1.0;
    CHECK(is_hermitian_dominant(b2, wb, b2.from_std(v)));

    Eigen::VectorXd nd(2);
    nd << 1.0, 3.0;
    CHECK_THROWS_AS(is_hermitian_dominant(b2, wb, b2.from_std(nd)), PreconditionError);
}

TEST_CASE("limit-cone criterion applicability by preset") {
    CHECK(!limit_cone_criterion_applicable(make_a2_family(1.0).rs));
    CHECK(limit_cone_criterion_applicable(make_b2_so2n(3)));
    CHECK(limit_cone_criterion_applicable(make_product_a1({1.0, 1.0})));
    CHECK(!limit_cone_criterion_applicable(make_product_a1({1.0})));
}
