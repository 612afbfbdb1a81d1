#pragma once

#include <optional>
#include <vector>

#include "riskcone/risk.hpp"

namespace riskcone {

/// Fixed portfolio of scalar assets. Strict portfolios carry the unit of
/// account first and every asset is a validated numeraire; relaxed ones only
/// require the first asset to be strictly positive (enough for the polar
/// identity, used by the t-cone fixtures and change-of-numeraire checks).
class PortfolioSpec {
public:
    static PortfolioSpec make(const RiskMeasure& rm, RMatrix assets);
    static PortfolioSpec relaxed(RMatrix assets);

    const RMatrix& assets() const { return assets_; }
    Index d() const { return assets_.cols(); }
    Index states() const { return assets_.rows(); }
    bool strict() const { return strict_; }
    RVector asset(Index j) const { return assets_.col(j); }

private:
    PortfolioSpec(RMatrix assets, bool strict) : assets_(std::move(assets)), strict_(strict) {}
    RMatrix assets_;
    bool strict_ = false;
};

/// Builds a strict portfolio from scalar asset vectors, unit first.
PortfolioSpec portfolio_from_columns(const RiskMeasure& rm, const std::vector<RVector>& cols);

/// Vector fields X over the sample set are flattened state-major:
/// coordinate of (state s, component j) is s*d + j.
inline Index flat_index(Index s, Index j, Index d) { return s * d + j; }
RVector flatten_field(const RMatrix& field);
RMatrix unflatten_field(const RVector& x, Index d);

/// A(V) = {X : X.V in A}: one inequality row per test vertex.
PolyCone portfolio_cone(const RiskMeasure& rm, const PortfolioSpec& v);

/// A_t(V): rows localized per F_t-atom (zero-mass rows dropped).
PolyCone a_t_cone(const RiskMeasure& rm, const PortfolioSpec& v, int t);

/// K_t^eta(A,V) = A_t(V) cut to F_{t+eta}-measurable fields; measurability is
/// imposed by identifying coordinates across each F_{t+eta}-atom before the
/// double description runs, and the generators are expanded back afterwards.
PolyCone kt_eta(const RiskMeasure& rm, const PortfolioSpec& v, int t, int eta,
                int budget = kDdBudget);

/// Sum of the K_t^eta over t = 0..T-eta (polyhedral, hence closed).
PolyCone decomposed_cone(const RiskMeasure& rm, const PortfolioSpec& v, int eta,
                         int budget = kDdBudget);

/// eta-representation verdict: decomposed_cone == portfolio_cone.  The
/// forward inclusion always holds and is asserted; the verdict checks every
/// extreme generator of the portfolio cone for membership in the sum.
bool is_represented(const RiskMeasure& rm, const PortfolioSpec& v, int eta,
                    int budget = kDdBudget);

/// Exact equality A(V)* = A*V, both sides computed independently.
bool polar_portfolio_identity(const RiskMeasure& rm, const PortfolioSpec& v,
                              int budget = kDdBudget);

/// Largest eta-decomposable subcone of an acceptance-type cone of d-vector
/// fields, built from the cone's own inequality rows.
PolyCone b_eta(const FilteredSpace& space, const PolyCone& c, Index d, int eta,
               int budget = kDdBudget);

/// Per-level moment cones H_t (one cone in R^d per F_t-atom) generated by the
/// conditional asset moments of the polar generators, plus the intersection
/// identity verdict and a mismatch certificate when it fails.
struct TConeProfile {
    std::vector<std::vector<PolyCone>> cones;  // [t][atom], ambient R^d
    bool identity_holds = false;
    std::optional<RVector> mismatch;  // scalar-field functional outside A*
};
TConeProfile t_cone_profile(const RiskMeasure& rm, const PortfolioSpec& v,
                            int budget = kDdBudget);

}  // namespace riskcone
