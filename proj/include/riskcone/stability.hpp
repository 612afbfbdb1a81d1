#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riskcone/portfolio.hpp"

namespace riskcone {

inline constexpr long kFalsifierBudget = 200000;

/// Two-block pasting certificate: the pasted density X matches the
/// conditional asset prices of `target` on every F_t-atom yet lies outside
/// the test polytope.  On F (a union of F_t-atoms) X is `alpha` times
/// `donor`; off F it is `beta` times `target`, with alpha and beta
/// F_{t+1-eta}-measurable nonnegative fields.
struct PastingWitness {
    int t = 0;
    int eta = 1;
    RVector target;            // Z
    RVector donor;             // W
    std::vector<int> f_atoms;  // F as level-t atom indices
    RVector alpha;             // per F_{t+1-eta}-atom
    RVector beta;              // per F_{t+1-eta}-atom
    RVector pasted;            // X
};

struct StabilityVerdict {
    bool stable = true;
    int eta = 1;
    std::string method = "duality";
    std::optional<PastingWitness> witness;
    std::string diagnostic;  // set when unstable and no witness was produced
};

/// Certified verdict via the representation duality; when unstable, the
/// pasting search is run to attach an independently re-verifiable witness.
StabilityVerdict is_m_stable(const RiskMeasure& rm, const PortfolioSpec& u, int eta,
                             long budget = kFalsifierBudget, int dd_budget = kDdBudget);

/// Direct pasting search.  Complete at finite scale: donors range over
/// polytope vertices (membership is convex and the pasted density is
/// multi-affine in the donors, so interior-donor violations imply
/// vertex-donor violations) and the per-level scaling fields range over
/// their full feasibility polytopes, scanned exactly by vertex enumeration.
std::optional<PastingWitness> falsify_m_stability(const RiskMeasure& rm, const PortfolioSpec& u,
                                                  int eta, long budget = kFalsifierBudget,
                                                  int dd_budget = kDdBudget);

/// Replays a witness: reconstructs X from (t, F, donor, target, alpha, beta),
/// re-checks the price constraints and the non-membership LP.
bool verify_witness(const RiskMeasure& rm, const PortfolioSpec& u, const PastingWitness& w);

/// U = {1} union {1 + 1_w : w}; strong representation holds for every risk
/// measure on the space with this portfolio.
PortfolioSpec finite_strong_assets(const RiskMeasure& rm);

/// Builds the pasted measure from the density quotient formula at a stopping
/// time (levels per state, adapted) and returns polytope membership; the
/// conditional-price premise is checked first and failure is vacuous truth.
bool check_pasting_density(const RiskMeasure& rm, const PortfolioSpec& u, int q_idx,
                           int qprime_idx, const std::vector<int>& tau);

}  // namespace riskcone
