#include <doctest.h>

#include "support.hpp"

using namespace riskcone;
using riskcone::testing::Rng;

namespace {

FilteredSpace tree4() {
    return FilteredSpace(4, {{{0, 1, 2, 3}}, {{0, 1}, {2, 3}}, {{0}, {1}, {2}, {3}}});
}

FilteredSpace pruned3() {
    return FilteredSpace(3, {{{0, 1, 2}}, {{0, 1}, {2}}, {{0}, {1}, {2}}});
}

RVector rvec(std::initializer_list<Rational> xs) {
    RVector v(static_cast<Index>(xs.size()));
    Index i = 0;
    for (const Rational& x : xs) v[i++] = x;
    return v;
}

}  // namespace

TEST_CASE("space construction and validation") {
    FilteredSpace sp = tree4();
    CHECK(sp.states() == 4);
    CHECK(sp.horizon() == 2);
    CHECK(sp.atom_count(1) == 2);
    CHECK(sp.atom_of(1, 2) == 1);

    FilteredSpace single(1, {{{0}}});
    CHECK(single.horizon() == 0);

    FilteredSpace pr = pruned3();
    CHECK(pr.atom_count(1) == 2);

    // non-refining second level
    CHECK_THROWS_AS(FilteredSpace(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}}), RefinementError);
    CHECK_THROWS_AS(FilteredSpace(3, {{{0, 1}}}), EmptyAtomError);
    CHECK_THROWS_AS(FilteredSpace(2, {{{0, 1}, {}}}), EmptyAtomError);
    CHECK_THROWS_AS(FilteredSpace(2, {{{0, 1}, {1}}}), ShapeError);
}

TEST_CASE("conditional expectation on the two-branch tree") {
    FilteredSpace sp = tree4();
    Measure q1(rvec({Rational(1, 3), Rational(1, 6), Rational(1, 4), Rational(1, 4)}));
    RVector x = rvec({3, 4, 0, 0});

    Conditional c = cond_exp(sp, x, q1, 1);
    CHECK(c.everywhere_defined());
    CHECK(c.value == rvec({Rational(10, 3), Rational(10, 3), 0, 0}));

    // constants are fixed points at every level
    RVector k = RVector::Constant(4, Rational(7, 5));
    for (int t = 0; t <= 2; ++t) CHECK(cond_exp(sp, k, q1, t).value == k);
}

TEST_CASE("conditional expectation on the pruned tree") {
    FilteredSpace sp = pruned3();
    Measure q(rvec({Rational(1, 2), Rational(1, 3), Rational(1, 6)}));
    RVector v = rvec({2, 1, 1});
    Conditional c = cond_exp(sp, v, q, 1);
    CHECK(c.value == rvec({Rational(8, 5), Rational(8, 5), 1}));
}

TEST_CASE("null atoms carry an explicit undefined marker") {
    FilteredSpace sp = tree4();
    Measure q(rvec({Rational(1, 2), Rational(1, 2), 0, 0}));
    Conditional c = cond_exp(sp, rvec({1, 2, 3, 4}), q, 1);
    CHECK(c.defined[0]);
    CHECK_FALSE(c.defined[1]);
    CHECK_FALSE(c.defined_at_state(sp, 3));
}

TEST_CASE("densities on the pruned tree") {
    FilteredSpace sp = pruned3();
    Measure p = uniform_measure(sp);
    Measure q(rvec({Rational(1, 2), Rational(1, 3), Rational(1, 6)}));

    CHECK(density(q, p) == rvec({Rational(3, 2), 1, Rational(1, 2)}));
    CHECK(density(p, p) == RVector::Constant(3, 1));
    CHECK(restrict_density(sp, q, p, 1) == rvec({Rational(5, 4), Rational(5, 4), Rational(1, 2)}));
    // discrete top level recovers the full density
    CHECK(restrict_density(sp, q, p, 2) == density(q, p));

    Measure zero_point(rvec({Rational(1, 2), Rational(1, 2), 0}));
    CHECK_THROWS_AS(density(q, zero_point), DivisionByZero);
}

TEST_CASE("tower, linearity and positivity on random instances") {
    Rng rng(20260809);
    for (int trial = 0; trial < 200; ++trial) {
        FilteredSpace sp = testing::rand_space(rng);
        Measure q = testing::rand_measure(rng, sp.states(), true);
        RVector x = testing::rand_vector(rng, sp.states(), -6, 6);
        RVector y = testing::rand_vector(rng, sp.states(), -6, 6);
        int t = std::uniform_int_distribution<int>(0, sp.horizon())(rng);
        int s = std::uniform_int_distribution<int>(0, t)(rng);

        Conditional inner = cond_exp(sp, x, q, t);
        Conditional outer = cond_exp(sp, inner.value, q, s);
        Conditional direct = cond_exp(sp, x, q, s);
        for (int st = 0; st < sp.states(); ++st) {
            // tower holds wherever all conditionals are defined
            if (outer.defined_at_state(sp, st) && direct.defined_at_state(sp, st) &&
                inner.defined_at_state(sp, st))
                CHECK(outer.value[st] == direct.value[st]);
        }

        Rational a = testing::rand_rational(rng, -3, 3, 3);
        Rational b = testing::rand_rational(rng, -3, 3, 3);
        Conditional lin = cond_exp(sp, RVector(a * x + b * y), q, t);
        Conditional cx = cond_exp(sp, x, q, t);
        Conditional cy = cond_exp(sp, y, q, t);
        for (int st = 0; st < sp.states(); ++st)
            if (lin.defined_at_state(sp, st))
                CHECK(lin.value[st] == a * cx.value[st] + b * cy.value[st]);

        RVector pos = x.cwiseAbs();
        Conditional cp = cond_exp(sp, pos, q, t);
        for (int st = 0; st < sp.states(); ++st)
            if (cp.defined_at_state(sp, st)) CHECK(cp.value[st] >= 0);
    }
}

TEST_CASE("restricted density at the finest level equals the density") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        FilteredSpace sp = testing::rand_space(rng);
        Measure p = testing::rand_positive_measure(rng, sp.states());
        Measure q = testing::rand_measure(rng, sp.states(), true);
        RVector full = density(q, p);
        RVector rd = restrict_density(sp, q, p, sp.horizon());
        // equality holds exactly when the top partition is discrete
        bool discrete = sp.atom_count(sp.horizon()) == sp.states();
        if (discrete) CHECK(rd == full);
        // and the level-0 restriction averages to the atom masses either way
        RVector r0 = restrict_density(sp, q, p, 0);
        for (int a = 0; a < sp.atom_count(0); ++a) {
            const auto& atom = sp.atom(0, a);
            CHECK(r0[atom.front()] == q.atom_mass(atom) / p.atom_mass(atom));
        }
    }
}
