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

RiskMeasure tree_pair_rm() {
    FilteredSpace sp(4, {{{0, 1, 2, 3}}, {{0, 1}, {2, 3}}, {{0}, {1}, {2}, {3}}});
    std::vector<Measure> verts;
    verts.push_back(Measure(rvec({Rational(1, 3), Rational(1, 6), Rational(1, 4), Rational(1, 4)})));
    verts.push_back(
        Measure(rvec({Rational(1, 2), Rational(1, 8), Rational(3, 16), Rational(3, 16)})));
    return RiskMeasure{TestSet(sp, std::move(verts), 0)};
}

PortfolioSpec pair_portfolio(const RiskMeasure& rm) {
    return portfolio_from_columns(rm, {RVector::Constant(4, 1), rvec({2, 1, 1, 1})});
}

}  // namespace

TEST_CASE("portfolio cone shape and the swap directions") {
    RiskMeasure rm = tree_pair_rm();
    PortfolioSpec v = pair_portfolio(rm);
    PolyCone cone = portfolio_cone(rm, v);
    CHECK(cone.h().rows() == 2);
    CHECK(cone.dim() == 8);

    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        // alpha (v_i e_j - v_j e_i) pairs to zero against X.V rows
        RVector alpha = testing::rand_vector(rng, 4, 0, 4, 2);
        RMatrix field = RMatrix::Zero(4, 2);
        for (int s = 0; s < 4; ++s) {
            field(s, 1) = alpha[s] * v.assets()(s, 0);
            field(s, 0) = -alpha[s] * v.assets()(s, 1);
        }
        CHECK(member(flatten_field(field), cone));
        CHECK(member(RVector(-flatten_field(field)), cone));
    }
}

TEST_CASE("scalar portfolio reduces to the acceptance cone") {
    RiskMeasure rm = tree_pair_rm();
    PortfolioSpec unit = portfolio_from_columns(rm, {RVector::Constant(4, 1)});
    CHECK(equal(portfolio_cone(rm, unit), acceptance_cone(rm, 0)));
}

TEST_CASE("polar identity for portfolios") {
    RiskMeasure rm = tree_pair_rm();
    CHECK(polar_portfolio_identity(rm, pair_portfolio(rm)));
    CHECK(polar_portfolio_identity(rm, portfolio_from_columns(rm, {RVector::Constant(4, 1)})));

    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        FilteredSpace sp = testing::rand_space(rng, 4, 2);
        RiskMeasure r{testing::rand_testset(rng, sp)};
        CHECK(polar_portfolio_identity(r, testing::rand_portfolio(rng, r)));
    }
}

TEST_CASE("one-period pieces and their monotone inclusions") {
    RiskMeasure rm = tree_pair_rm();
    PortfolioSpec v = pair_portfolio(rm);

    // the centered tail claim sits in the weak piece at t = 1
    RVector x = rvec({3, 4, 1, 5});
    Rational spread = (x[2] - x[3]) / 2;
    RVector delta = rvec({0, 0, spread, -spread});
    RMatrix field = RMatrix::Zero(4, 2);
    field.col(0) = delta;
    PolyCone k11 = kt_eta(rm, v, 1, 1);
    CHECK(lp::in_cone(k11.v(), flatten_field(field)));
    for (int s = 0; s < 4; ++s) CHECK(rho(rm, delta, 1)[s] <= 0);

    for (int t = 0; t <= 1; ++t) {
        PolyCone strong = kt_eta(rm, v, t, 0);
        PolyCone weak = kt_eta(rm, v, t, 1);
        PolyCone at = a_t_cone(rm, v, t);
        PolyCone weak_full = dd_convert(weak);
        CHECK(contains(dd_convert(at), weak));
        CHECK(contains(weak_full, strong));
    }

    PolyCone dec0 = decomposed_cone(rm, v, 0);
    PolyCone dec1 = decomposed_cone(rm, v, 1);
    PolyCone port = portfolio_cone(rm, v);
    CHECK(contains(port, dec0));
    CHECK(contains(port, dec1));
    CHECK(contains(dd_convert(dec1), dec0));
}

TEST_CASE("a_t_cone equals the portfolio cone on a trivial atom at the top") {
    FilteredSpace sp(2, {{{0, 1}}, {{0}, {1}}});
    RiskMeasure rm{TestSet(sp, {Measure(rvec({Rational(1, 2), Rational(1, 2)}))}, 0)};
    PortfolioSpec v = portfolio_from_columns(rm, {RVector::Constant(2, 1), rvec({1, 2})});
    CHECK(equal(a_t_cone(rm, v, 0), portfolio_cone(rm, v)));
    // and the strong piece at the top level is the F_T-measurable part
    PolyCone k = kt_eta(rm, v, 1, 0);
    CHECK(contains(dd_convert(a_t_cone(rm, v, 1)), k));
}

TEST_CASE("representation verdicts on the frozen fixtures") {
    RiskMeasure rm = tree_pair_rm();
    PortfolioSpec pair = pair_portfolio(rm);
    PortfolioSpec unit = portfolio_from_columns(rm, {RVector::Constant(4, 1)});

    CHECK(is_represented(rm, pair, 1));
    CHECK_FALSE(is_represented(rm, unit, 1));

    // four-vertex set: weakly represented by the unit alone
    FilteredSpace sp(4, {{{0, 1, 2, 3}}, {{0, 1}, {2, 3}}, {{0}, {1}, {2}, {3}}});
    std::vector<Measure> verts;
    verts.push_back(Measure(rvec({Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)})));
    verts.push_back(Measure(rvec({Rational(1, 4), Rational(1, 4), Rational(3, 8), Rational(1, 8)})));
    verts.push_back(Measure(rvec({Rational(3, 8), Rational(1, 8), Rational(1, 4), Rational(1, 4)})));
    verts.push_back(Measure(rvec({Rational(3, 8), Rational(1, 8), Rational(3, 8), Rational(1, 8)})));
    RiskMeasure quad{TestSet(sp, std::move(verts), 0)};
    CHECK(is_represented(quad, portfolio_from_columns(quad, {RVector::Constant(4, 1)}), 1));

    // two-state singleton: strongly represented by (1, v)
    FilteredSpace two(2, {{{0, 1}}, {{0}, {1}}});
    RiskMeasure single{TestSet(two, {Measure(rvec({Rational(1, 2), Rational(1, 2)}))}, 0)};
    PortfolioSpec sv = portfolio_from_columns(single, {RVector::Constant(2, 1), rvec({1, 2})});
    CHECK(is_represented(single, sv, 0));
}

TEST_CASE("largest decomposable subcone") {
    RiskMeasure rm = tree_pair_rm();
    PortfolioSpec unit = portfolio_from_columns(rm, {RVector::Constant(4, 1)});
    PolyCone port = portfolio_cone(rm, unit);
    PolyCone sub = b_eta(rm.space(), port, 1, 1);

    // strict subcone exactly because the unit portfolio does not represent
    CHECK(contains(port, sub));
    CHECK_FALSE(equal(port, sub));
    PolyCone again = b_eta(rm.space(), sub, 1, 1);
    CHECK(equal(again, sub));

    PortfolioSpec pair = pair_portfolio(rm);
    PolyCone port2 = portfolio_cone(rm, pair);
    CHECK(equal(b_eta(rm.space(), port2, 2, 1), port2));
}

TEST_CASE("t-cone profile of the split-support fixture") {
    FilteredSpace sp(4, {{{0, 1, 2, 3}}, {{0, 1}, {2, 3}}, {{0}, {1}, {2}, {3}}});
    std::vector<Measure> verts;
    verts.push_back(Measure(rvec({Rational(1, 2), Rational(1, 2), 0, 0})));
    verts.push_back(Measure(rvec({0, 0, Rational(1, 2), Rational(1, 2)})));
    verts.push_back(Measure(rvec({Rational(1, 3), Rational(1, 6), Rational(1, 6), Rational(1, 3)})));
    verts.push_back(Measure(rvec({Rational(1, 6), Rational(1, 3), Rational(1, 3), Rational(1, 6)})));
    RiskMeasure rm{TestSet(sp, std::move(verts), 2)};

    RMatrix assets(4, 2);
    assets.col(0) = RVector::Constant(4, 1);
    assets.col(1) = rvec({1, 0, 1, 0});
    TConeProfile prof = t_cone_profile(rm, PortfolioSpec::relaxed(assets));
    CHECK(prof.identity_holds);

    auto cone_of = [](std::initializer_list<std::pair<int, int>> gens) {
        RMatrix m(static_cast<Index>(gens.size()), 2);
        Index i = 0;
        for (auto [a, b] : gens) {
            m(i, 0) = a;
            m(i, 1) = b;
            ++i;
        }
        return PolyCone::from_v(2, m);
    };
    CHECK(equal(prof.cones[0][0], cone_of({{2, 1}})));
    CHECK(equal(prof.cones[1][0], cone_of({{3, 1}, {3, 2}})));
    CHECK(equal(prof.cones[1][1], cone_of({{3, 1}, {3, 2}})));
    CHECK(equal(prof.cones[2][0], cone_of({{1, 1}})));
    CHECK(equal(prof.cones[2][1], cone_of({{1, 0}})));
    CHECK(equal(prof.cones[2][2], cone_of({{1, 1}})));
    CHECK(equal(prof.cones[2][3], cone_of({{1, 0}})));
}

TEST_CASE("t-cone profile of a martingale singleton") {
    FilteredSpace sp(4, {{{0, 1, 2, 3}}, {{0, 1}, {2, 3}}, {{0}, {1}, {2}, {3}}});
    RiskMeasure rm{TestSet(sp, {Measure(RVector::Constant(4, Rational(1, 4)))}, 0)};
    RVector st = rvec({2, 1, Rational(3, 4), Rational(1, 4)});
    PortfolioSpec v = portfolio_from_columns(rm, {RVector::Constant(4, 1), st});

    TConeProfile prof = t_cone_profile(rm, v);
    CHECK(prof.identity_holds);
    // each level cone is the ray through (1, S_t) on its atom
    RMatrix g0(1, 2);
    g0 << 1, 1;
    CHECK(equal(prof.cones[0][0], PolyCone::from_v(2, g0)));
    RMatrix g10(1, 2), g11(1, 2);
    g10 << 2, 3;
    g11 << 2, 1;
    CHECK(equal(prof.cones[1][0], PolyCone::from_v(2, g10)));
    CHECK(equal(prof.cones[1][1], PolyCone::from_v(2, g11)));
    for (int s = 0; s < 4; ++s) {
        RMatrix g(1, 2);
        g << 1, st[s];
        CHECK(equal(prof.cones[2][s], PolyCone::from_v(2, g)));
    }
}

TEST_CASE("t-cone profile reports a mismatch certificate when not represented") {
    RiskMeasure rm = tree_pair_rm();
    PortfolioSpec unit = portfolio_from_columns(rm, {RVector::Constant(4, 1)});
    TConeProfile prof = t_cone_profile(rm, unit);
    // weak representation fails here and strong implies weak
    CHECK_FALSE(prof.identity_holds);
    REQUIRE(prof.mismatch.has_value());
    CHECK_FALSE(lp::in_cone(rm.q.vertex_matrix(), *prof.mismatch));
}

TEST_CASE("theorem-as-oracle: polar identity on random instances") {
    Rng rng(501);
    for (int trial = 0; trial < 10; ++trial) {
        FilteredSpace sp = testing::rand_space(rng, 4, 2);
        RiskMeasure rm{testing::rand_testset(rng, sp, 4)};
        PortfolioSpec v = testing::rand_portfolio(rng, rm, 3);
        CHECK(polar_portfolio_identity(rm, v));
    }
}
