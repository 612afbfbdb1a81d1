#include <doctest.h>

#include "support.hpp"

using namespace riskcone;
using riskcone::testing::Rng;

namespace {

RVector rvec(std::initializer_list<Rational> xs) {
    RVector v(static_cast<Index>(xs.size()));
    Index i = 0;
    for (const Rational& x : xs) v[i++] = x;
    return v;
}

// two-branch binary tree with the pair test set used across the suite
RiskMeasure tree_pair_rm() {
    FilteredSpace sp(4, {{{0, 1, 2, 3}}, {{0, 1}, {2, 3}}, {{0}, {1}, {2}, {3}}});
    std::vector<Measure> verts;
    verts.push_back(Measure(rvec({Rational(1, 3), Rational(1, 6), Rational(1, 4), Rational(1, 4)})));
    verts.push_back(
        Measure(rvec({Rational(1, 2), Rational(1, 8), Rational(3, 16), Rational(3, 16)})));
    return RiskMeasure{TestSet(sp, std::move(verts), 0)};
}

RiskMeasure quad_rm() {
    FilteredSpace sp(4, {{{0, 1, 2, 3}}, {{0, 1}, {2, 3}}, {{0}, {1}, {2}, {3}}});
    std::vector<Measure> verts;
    verts.push_back(Measure(rvec({Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)})));
    verts.push_back(Measure(rvec({Rational(1, 4), Rational(1, 4), Rational(3, 8), Rational(1, 8)})));
    verts.push_back(Measure(rvec({Rational(3, 8), Rational(1, 8), Rational(1, 4), Rational(1, 4)})));
    verts.push_back(Measure(rvec({Rational(3, 8), Rational(1, 8), Rational(3, 8), Rational(1, 8)})));
    return RiskMeasure{TestSet(sp, std::move(verts), 0)};
}

}  // namespace

TEST_CASE("risk values on the two-branch tree") {
    RiskMeasure rm = tree_pair_rm();
    RVector x = rvec({3, 4, 0, 0});

    // vertex maxima: 5/3 under the first vertex, 2 under the second
    CHECK(rho(rm, x, 0) == RVector::Constant(4, 2));
    RVector r1 = rho(rm, x, 1);
    CHECK(r1 == rvec({Rational(10, 3), Rational(10, 3), 0, 0}));
    CHECK(rho(rm, r1, 0) == RVector::Constant(4, Rational(25, 12)));

    // nonpositive claims are acceptable at every level
    RVector neg = rvec({-1, 0, Rational(-1, 2), -2});
    for (int t = 0; t <= 2; ++t)
        for (int s = 0; s < 4; ++s) CHECK(rho(rm, neg, t)[s] <= 0);
}

TEST_CASE("acceptance cone rows and membership") {
    RiskMeasure rm = tree_pair_rm();
    PolyCone a0 = acceptance_cone(rm, 0);
    CHECK(a0.h().rows() == 2);
    CHECK(a0.dim() == 4);

    RVector x = rvec({3, 4, 0, 0});
    CHECK_FALSE(member(x, a0));
    // shifting by the first-vertex price makes that row tight
    RVector shifted = x - RVector::Constant(4, Rational(5, 3));
    Rational q1_row = Rational(1, 3) * shifted[0] + Rational(1, 6) * shifted[1] +
                      Rational(1, 4) * shifted[2] + Rational(1, 4) * shifted[3];
    CHECK(q1_row == 0);

    CHECK(acceptance_cone(quad_rm(), 1).h().rows() == 8);
    CHECK(contains_negative_orthant(a0));
}

TEST_CASE("acceptance cone of a relevant singleton at the discrete level") {
    FilteredSpace sp(2, {{{0, 1}}, {{0}, {1}}});
    RiskMeasure rm{TestSet(sp, {Measure(rvec({Rational(1, 2), Rational(1, 2)}))}, 0)};
    PolyCone at = acceptance_cone(rm, 1);
    CHECK(equal(at, PolyCone::from_h(2, RMatrix::Identity(2, 2))));
}

TEST_CASE("numeraire detection and the floor profile") {
    RiskMeasure rm = tree_pair_rm();
    RVector ones = RVector::Constant(4, 1);
    auto unit = make_numeraire(rm, ones);
    REQUIRE(unit.has_value());
    for (int t = 0; t <= 2; ++t) CHECK(unit->lambda_profile[t] == ones);

    RVector v = rvec({2, 1, 1, 1});
    auto nv = make_numeraire(rm, v);
    REQUIRE(nv.has_value());
    CHECK(lambda(rm, v, 0) == RVector::Constant(4, Rational(4, 3)));

    RVector degenerate = rvec({0, 1, 1, 1});
    CHECK_FALSE(is_numeraire(rm, degenerate));
}

TEST_CASE("denominated risk values") {
    RiskMeasure rm = tree_pair_rm();
    RVector v = rvec({2, 1, 1, 1});
    auto nv = make_numeraire(rm, v);
    REQUIRE(nv.has_value());
    auto unit = make_numeraire(rm, RVector::Constant(4, 1));

    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        RVector x = testing::rand_vector(rng, 4, -5, 5);
        for (int t = 0; t <= 2; ++t) CHECK(rho_v(rm, x, *unit, t) == rho(rm, x, t));
        // horizon: X / v pointwise
        RVector top = rho_v(rm, x, *nv, 2);
        for (int s = 0; s < 4; ++s) CHECK(top[s] == x[s] / v[s]);
    }

    // the v-multiple claim prices back to itself one step out
    RVector x = rvec({3, 4, 0, 0});
    Rational xt = (x[2] + x[3]) / 2;
    RVector scale = rvec({x[0] - x[1], x[0] - x[1], x[0] + xt - 2 * x[1], x[0] + xt - 2 * x[1]});
    RVector zx = scale.cwiseProduct(v);
    RVector priced = rho_v(rm, zx, *nv, 1);
    CHECK(v.cwiseProduct(priced) == zx);
}

TEST_CASE("level-0 equivalence of numeraires") {
    RiskMeasure rm = tree_pair_rm();
    auto unit = make_numeraire(rm, RVector::Constant(4, 1));
    auto v = make_numeraire(rm, rvec({2, 1, 1, 1}));
    auto v2 = make_numeraire(rm, rvec({4, 2, 2, 2}));
    REQUIRE((unit && v && v2));

    CHECK(equivalent_numeraires(rm, *v, *v));
    CHECK(equivalent_numeraires(rm, *v, *v2));  // positive level-0 scalar multiple
    CHECK_FALSE(equivalent_numeraires(rm, *unit, *v));
    CHECK(rho_v(rm, v->v, *unit, 0)[0] == Rational(3, 2));
    CHECK(rho_v(rm, unit->v, *v, 0)[0] == Rational(3, 4));
}

TEST_CASE("coherence axioms on random instances") {
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        FilteredSpace sp = testing::rand_space(rng);
        RiskMeasure rm{testing::rand_testset(rng, sp)};
        int t = std::uniform_int_distribution<int>(0, sp.horizon())(rng);
        RVector x = testing::rand_vector(rng, sp.states(), -5, 5);
        RVector y = testing::rand_vector(rng, sp.states(), -5, 5);

        RVector rx = rho(rm, x, t);
        RVector ry = rho(rm, y, t);
        RVector rxy = rho(rm, RVector(x + y), t);
        for (int s = 0; s < sp.states(); ++s) CHECK(rxy[s] <= rx[s] + ry[s]);

        // monotonicity
        RVector bigger = x + testing::rand_vector(rng, sp.states(), 0, 3);
        RVector rb = rho(rm, bigger, t);
        for (int s = 0; s < sp.states(); ++s) CHECK(rx[s] <= rb[s]);

        // F_t-measurable translation and positive homogeneity
        RVector shift = rho(rm, y, t);  // any F_t-measurable field
        RVector rshift = rho(rm, RVector(x + shift), t);
        for (int s = 0; s < sp.states(); ++s) CHECK(rshift[s] == rx[s] + shift[s]);
        Rational a = testing::rand_rational(rng, 0, 3, 2);
        CHECK(rho(rm, RVector(a * x), t) == RVector(a * rx));
    }
}

TEST_CASE("acceptance consistency between rho and the cone") {
    Rng rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        FilteredSpace sp = testing::rand_space(rng);
        RiskMeasure rm{testing::rand_testset(rng, sp)};
        int t = std::uniform_int_distribution<int>(0, sp.horizon())(rng);
        RVector x = testing::rand_vector(rng, sp.states(), -4, 4);
        bool priced_ok = true;
        RVector r = rho(rm, x, t);
        for (int s = 0; s < sp.states(); ++s) priced_ok = priced_ok && r[s] <= 0;
        CHECK(priced_ok == member(x, acceptance_cone(rm, t)));
    }
}

TEST_CASE("numeraire algebra inequalities on random instances") {
    Rng rng(31);
    int done = 0;
    while (done < 200) {
        FilteredSpace sp = testing::rand_space(rng, 4, 2);
        RiskMeasure rm{testing::rand_testset(rng, sp, 3)};
        RVector xv = testing::rand_vector(rng, sp.states(), -4, 4);
        auto u = make_numeraire(rm, testing::rand_positive_vector(rng, sp.states()));
        auto v = make_numeraire(rm, testing::rand_positive_vector(rng, sp.states()));
        auto w = make_numeraire(rm, testing::rand_positive_vector(rng, sp.states()));
        if (!u || !v || !w) continue;
        ++done;

        // zero sets of denominated prices agree across numeraires
        RVector ru = rho_v(rm, xv, *u, 0);
        RVector rv = rho_v(rm, xv, *v, 0);
        for (int s = 0; s < sp.states(); ++s) CHECK((ru[s] == 0) == (rv[s] == 0));

        // chain inequality through an intermediate numeraire
        RVector vu = rho_v(rm, u->v, *v, 0);
        RVector vw = rho_v(rm, w->v, *v, 0);
        RVector wu = rho_v(rm, u->v, *w, 0);
        for (int s = 0; s < sp.states(); ++s) CHECK(vu[s] <= vw[s] * wu[s]);

        // parallel-sum bound, with equality exactly for equivalent numeraires
        auto vpw = make_numeraire(rm, RVector(v->v + w->v));
        REQUIRE(vpw.has_value());
        RVector rsum = rho_v(rm, xv, *vpw, 0);
        RVector rw = rho_v(rm, xv, *w, 0);
        bool equality_everywhere = true;
        for (int s = 0; s < sp.states(); ++s) {
            Rational denom = rv[s] + rw[s];
            Rational bound = denom == 0 ? Rational(0) : Rational(rv[s] * rw[s] / denom);
            CHECK(rsum[s] <= bound);
            if (rsum[s] != bound) equality_everywhere = false;
        }
        if (equivalent_numeraires(rm, *v, *w)) CHECK(equality_everywhere);

        // one-step aggregation bound in the unit numeraire
        if (sp.horizon() >= 1) {
            RVector x1 = testing::rand_vector(rng, sp.states(), -3, 3);
            RVector x2 = xv - x1;
            RVector inner = rho_v(rm, x1, *v, 1).cwiseProduct(v->v) +
                            rho_v(rm, x2, *w, 1).cwiseProduct(w->v);
            RVector lhs = rho_v(rm, xv, *u, 0);
            RVector rhs = rho_v(rm, inner, *u, 0);
            for (int s = 0; s < sp.states(); ++s) CHECK(lhs[s] <= rhs[s]);
        }

        // v-translation invariance
        if (sp.horizon() >= 0) {
            RVector y = rho(rm, testing::rand_vector(rng, sp.states(), -2, 2), 0);
            RVector lhs = rho_v(rm, RVector(xv + y.cwiseProduct(v->v)), *v, 0);
            RVector rhs = rho_v(rm, xv, *v, 0) + y;
            CHECK(lhs == rhs);
        }
    }
}
