#pragma once

#include <random>
#include <vector>

#include "riskcone/market.hpp"
#include "riskcone/stability.hpp"

namespace riskcone::testing {

using Rng = std::mt19937;

inline Rational rand_rational(Rng& rng, int num_lo, int num_hi, int den_hi) {
    std::uniform_int_distribution<int> num(num_lo, num_hi);
    std::uniform_int_distribution<int> den(1, den_hi);
    return Rational(num(rng), den(rng));
}

inline RVector rand_vector(Rng& rng, Index n, int num_lo, int num_hi, int den_hi = 4) {
    RVector v(n);
    for (Index i = 0; i < n; ++i) v[i] = rand_rational(rng, num_lo, num_hi, den_hi);
    return v;
}

// random refining partition sequence over n states, T+1 levels
inline FilteredSpace rand_space(Rng& rng, int max_states = 5, int max_horizon = 2) {
    std::uniform_int_distribution<int> nd(2, max_states);
    std::uniform_int_distribution<int> td(1, max_horizon);
    int n = nd(rng);
    int horizon = td(rng);

    std::vector<std::vector<std::vector<int>>> parts(horizon + 1);
    // last level: random partition into 1..n blocks, built by random merge of singletons
    std::vector<std::vector<int>> atoms;
    for (int s = 0; s < n; ++s) atoms.push_back({s});
    auto coarsen = [&](std::vector<std::vector<int>> fine, int target) {
        while (static_cast<int>(fine.size()) > target) {
            std::uniform_int_distribution<size_t> pick(0, fine.size() - 1);
            size_t a = pick(rng), b = pick(rng);
            if (a == b) continue;
            fine[a].insert(fine[a].end(), fine[b].begin(), fine[b].end());
            fine.erase(fine.begin() + b);
        }
        return fine;
    };
    std::uniform_int_distribution<int> blocks(std::max(1, n - 1), n);
    parts[horizon] = coarsen(atoms, blocks(rng));
    for (int t = horizon - 1; t >= 0; --t) {
        int target = 1 + (static_cast<int>(parts[t + 1].size()) - 1) * t / std::max(1, horizon);
        parts[t] = coarsen(parts[t + 1], std::max(1, target));
    }
    return FilteredSpace(n, parts);
}

inline Measure rand_positive_measure(Rng& rng, Index n) {
    RVector m(n);
    Rational total = 0;
    std::uniform_int_distribution<int> w(1, 8);
    for (Index i = 0; i < n; ++i) {
        m[i] = w(rng);
        total += m[i];
    }
    return Measure(RVector(m / total));
}

inline Measure rand_measure(Rng& rng, Index n, bool allow_zero) {
    RVector m(n);
    Rational total = 0;
    std::uniform_int_distribution<int> w(allow_zero ? 0 : 1, 8);
    while (total == 0) {
        total = 0;
        for (Index i = 0; i < n; ++i) {
            m[i] = w(rng);
            total += m[i];
        }
    }
    return Measure(RVector(m / total));
}

inline TestSet rand_testset(Rng& rng, const FilteredSpace& sp, int max_vertices = 4) {
    std::uniform_int_distribution<int> kd(1, max_vertices);
    int k = kd(rng);
    std::vector<Measure> verts;
    verts.push_back(rand_positive_measure(rng, sp.states()));
    for (int i = 1; i < k; ++i) verts.push_back(rand_measure(rng, sp.states(), true));
    return TestSet(sp, std::move(verts), 0);
}

inline RVector rand_positive_vector(Rng& rng, Index n, int hi = 4) {
    RVector v(n);
    std::uniform_int_distribution<int> num(1, hi);
    std::uniform_int_distribution<int> den(1, 3);
    for (Index i = 0; i < n; ++i) v[i] = Rational(num(rng), den(rng));
    return v;
}

inline PortfolioSpec rand_portfolio(Rng& rng, const RiskMeasure& rm, int max_d = 3) {
    std::uniform_int_distribution<int> dd(1, max_d);
    int d = dd(rng);
    RMatrix m(rm.space().states(), d);
    m.col(0) = RVector::Constant(rm.space().states(), 1);
    for (int j = 1; j < d; ++j) m.col(j) = rand_positive_vector(rng, rm.space().states());
    return PortfolioSpec::make(rm, std::move(m));
}

// arbitrage-free bid-ask process from strictly positive martingale shadow
// prices with a per-atom friction factor
inline BidAskProcess rand_bidask(Rng& rng, const FilteredSpace& sp, Index d,
                                 const Measure& p, bool with_friction = true) {
    // terminal shadow prices, then martingale backward
    RMatrix terminal(sp.states(), d);
    terminal.col(0) = RVector::Constant(sp.states(), 1);
    for (Index j = 1; j < d; ++j) terminal.col(j) = rand_positive_vector(rng, sp.states());

    std::vector<std::vector<RMatrix>> pi(sp.horizon() + 1);
    std::uniform_int_distribution<int> fric(0, with_friction ? 2 : 0);
    for (int t = 0; t <= sp.horizon(); ++t) {
        pi[t].resize(sp.atom_count(t));
        for (int a = 0; a < sp.atom_count(t); ++a) {
            const auto& atom = sp.atom(t, a);
            RVector price(d);
            Rational pa = p.atom_mass(atom);
            for (Index j = 0; j < d; ++j) {
                Rational sum = 0;
                for (int s : atom) sum += p(s) * terminal(s, j);
                price[j] = sum / pa;
            }
            Rational phi = Rational(fric(rng), 10);
            RMatrix m(d, d);
            for (Index i = 0; i < d; ++i)
                for (Index j = 0; j < d; ++j)
                    m(i, j) = i == j ? Rational(1) : Rational((price[j] / price[i]) * (1 + phi));
            pi[t][a] = std::move(m);
        }
    }
    return BidAskProcess(sp, d, std::move(pi));
}

}  // namespace riskcone::testing
