#include <doctest.h>

#include "support.hpp"

using namespace riskcone;

TEST_CASE("cone membership by exact simplex") {
    RMatrix gens(3, 2);
    gens << 1, 0, 0, 1, 1, 1;
    CHECK(lp::in_cone(gens, RVector::Zero(2)));
    RVector x(2);
    x << 3, 2;
    CHECK(lp::in_cone(gens, x));
    x << -1, 0;
    CHECK_FALSE(lp::in_cone(gens, x));

    RMatrix empty(0, 2);
    CHECK(lp::in_cone(empty, RVector::Zero(2)));
    x << 1, 0;
    CHECK_FALSE(lp::in_cone(empty, x));
}

TEST_CASE("polytope membership") {
    RMatrix verts(3, 2);
    verts << 0, 0, 1, 0, 0, 1;
    RVector x(2);
    x << Rational(1, 3), Rational(1, 3);
    CHECK(lp::in_polytope(verts, x));
    x << Rational(2, 3), Rational(2, 3);
    CHECK_FALSE(lp::in_polytope(verts, x));
    x << 1, 0;
    CHECK(lp::in_polytope(verts, x));
}

TEST_CASE("general feasibility with free variables and inequality mix") {
    lp::Problem p;
    p.vars = 2;
    p.nonneg = {0, 0};
    lp::Constraint c1{RVector(2), lp::Rel::Ge, 1};
    c1.coeffs << 1, 1;
    lp::Constraint c2{RVector(2), lp::Rel::Le, Rational(-1, 2)};
    c2.coeffs << 1, -1;
    lp::Constraint c3{RVector(2), lp::Rel::Eq, Rational(5, 2)};
    c3.coeffs << 0, 1;
    p.rows = {c1, c2, c3};
    auto sol = lp::solve_feasible(p);
    REQUIRE(sol.has_value());
    CHECK((*sol)[1] == Rational(5, 2));
    CHECK((*sol)[0] + (*sol)[1] >= 1);
    CHECK((*sol)[0] - (*sol)[1] <= Rational(-1, 2));

    // infeasible: x >= 0 with x <= -1
    lp::Problem q;
    q.vars = 1;
    q.nonneg = {1};
    lp::Constraint r{RVector(1), lp::Rel::Le, -1};
    r.coeffs << 1;
    q.rows = {r};
    CHECK_FALSE(lp::solve_feasible(q).has_value());
}

TEST_CASE("cone coefficients reproduce the point") {
    testing::Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        Index n = 3;
        RMatrix gens(4, n);
        for (Index i = 0; i < gens.rows(); ++i)
            gens.row(i) = testing::rand_vector(rng, n, -4, 4).transpose();
        RVector lambda = testing::rand_vector(rng, 4, 0, 3, 2);
        RVector x = gens.transpose() * lambda;
        auto coeffs = lp::cone_coefficients(gens, x);
        REQUIRE(coeffs.has_value());
        CHECK(gens.transpose() * *coeffs == x);
        for (Index i = 0; i < coeffs->size(); ++i) CHECK((*coeffs)[i] >= 0);
    }
}
