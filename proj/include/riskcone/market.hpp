#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riskcone/portfolio.hpp"
#include "riskcone/testset.hpp"

namespace riskcone {

/// Adapted bid-ask process: pi[t][atom] is a d x d matrix of exact positive
/// entries, unit diagonal, with no advantageous chains (pi^{i0,in} bounded by
/// every product along the chain; chains up to length d are checked, which
/// extends to all chains by induction).
class BidAskProcess {
public:
    BidAskProcess(FilteredSpace space, Index d, std::vector<std::vector<RMatrix>> pi);

    const FilteredSpace& space() const { return space_; }
    Index d() const { return d_; }
    const RMatrix& pi(int t, int atom) const;

    /// bid and ask against the unit asset at the horizon, per state:
    /// ask(s, j) = pi_T^{1,j+1}, bid(s, j) = 1 / pi_T^{j+1,1}; column 0 is 1.
    RMatrix terminal_ask() const;
    RMatrix terminal_bid() const;

private:
    FilteredSpace space_;
    Index d_ = 0;
    std::vector<std::vector<RMatrix>> pi_;
};

/// K_t: per-atom generators 1_A (e_j - pi^{ij} e_i) and 1_A (-e_k),
/// as a cone of d-vector fields in flattened state coordinates.
PolyCone trading_cone(const BidAskProcess& pi, int t);

/// B(pi) = K_0 + ... + K_T.
PolyCone claims_cone(const BidAskProcess& pi);

/// Closed consistent-price cone over terminal values Z (F_T-measurable,
/// flattened): E_P[Z|F_t](A) . g <= 0 for every generator g of K_t(A).
/// Strict positivity is a property of individual members, checked by LP.
PolyCone consistent_price_cone(const BidAskProcess& pi, const Measure& p);

/// A strictly positive member of the consistent-price cone (scaled to >= 1
/// coordinatewise), when one exists.
std::optional<RVector> find_positive_cpp(const BidAskProcess& pi, const Measure& p);
bool is_arbitrage_free(const BidAskProcess& pi, const Measure& p);

/// Adapted price process generated by a terminal value via conditional
/// expectation under the storage measure.
struct PriceProcess {
    std::vector<RMatrix> z;  // z[t]: atom_count(t) x d
    bool consistent = false;
    bool strictly_positive = false;
};
PriceProcess make_price_process(const BidAskProcess& pi, const Measure& p,
                                const RVector& terminal_flat);

/// One extra frictionless period with corner prices Y on the product space
/// Omega x {0,1}^{d-1}; state (s, label) maps to index s * labels + label.
struct AugmentedMarket {
    BidAskProcess base;
    Measure base_p;
    Rational epsilon;
    int labels = 1;           // 2^{d-1}
    FilteredSpace space;      // levels 0..T+1
    Measure phat;             // base_p tensor uniform labels
    RMatrix y;                // (states * labels) x d corner prices
};
AugmentedMarket augment(const BidAskProcess& pi, const Rational& epsilon, const Measure& p);

/// Barycentric weights of a consistent terminal price vector over the corner
/// prices: one weight per (state, label), summing to 1 per state, with
/// sum_label lambda * Y = zbar exactly.  zbar is states x d with column 0
/// identically 1 and the other columns inside [bid, ask].
RVector lambda_decomposition(const RMatrix& zbar, const AugmentedMarket& am);

/// Finite realization of the dual test set: extreme rays of the closed
/// consistent-price cone, localized per F_0-atom, glued with a strictly
/// positive reference member and pushed through the barycentric weights.
struct MarketQSet {
    AugmentedMarket am;
    TestSet testset;
    std::vector<char> strictly_positive;  // per vertex
    std::vector<RVector> rays;            // terminal extreme rays used
    RVector reference_cpp;
};
MarketQSet risk_q_set(const BidAskProcess& pi, const Rational& epsilon, const Measure& p,
                      int budget = kDdBudget);

/// Desk-scale check of both inclusion directions of the acceptance identity
/// for the claims cone; `drop_vertex` >= 0 removes that non-reference vertex
/// first (negative control: direction (b) must then fail).
struct Thm83Report {
    bool direction_a = true;
    bool direction_b = true;
    int rays_checked = 0;
    std::vector<std::string> failures;
};
Thm83Report verify_thm_8_3(const BidAskProcess& pi, const Rational& epsilon, const Measure& p,
                           int drop_vertex = -1, int budget = kDdBudget);

/// F_T-measurable section of the augmented terminal trading cone, expressed
/// in base-market coordinates (per F_T-atom intersection of the corner
/// cones).  Used to check that it embeds into the base claims cone.
PolyCone augmented_terminal_ft_section(const AugmentedMarket& am, int budget = kDdBudget);

}  // namespace riskcone
