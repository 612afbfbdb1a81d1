#pragma once

#include <optional>
#include <vector>

#include "riskcone/cone.hpp"
#include "riskcone/testset.hpp"

namespace riskcone {

/// Conditional coherent risk measure rho_t(X) = ess-sup_Q E_Q(X | F_t),
/// realized by per-atom vertex maximization over the test polytope.
/// Vertex optimization suffices: on each atom E_Q(X|A) is linear-fractional
/// in the vertex weights, so the extremum sits at a polytope vertex.
struct RiskMeasure {
    TestSet q;

    const FilteredSpace& space() const { return q.space(); }
};

/// rho_t(X) as an F_t-measurable state vector.  Vertices with zero mass on
/// an atom are excluded there; the strictly positive reference vertex keeps
/// the admissible set nonempty on every atom.
RVector rho(const RiskMeasure& rm, const RVector& x, int t);

/// lambda_t(v) = ess-inf_Q E_Q(v|F_t) = -rho_t(-v); per-atom vertex minimum.
RVector lambda(const RiskMeasure& rm, const RVector& v, int t);

/// Strictly positive claim usable as a unit of account at every level,
/// with its cached lambda profile.
struct Numeraire {
    RVector v;
    std::vector<RVector> lambda_profile;  // one F_t-measurable vector per level
};

/// Validates v > 0 pointwise and lambda_t(v) > 0 on every atom for all t
/// (the bounded-reciprocal condition is vacuous on a finite space).
std::optional<Numeraire> make_numeraire(const RiskMeasure& rm, const RVector& v);
bool is_numeraire(const RiskMeasure& rm, const RVector& v);

/// v-denominated measure rho_t^v(X) = ess-sup_Q E_Q(X|F_t)/E_Q(v|F_t);
/// at the horizon this is X/v pointwise.
RVector rho_v(const RiskMeasure& rm, const RVector& x, const Numeraire& v, int t);

/// F_0-equivalence of numeraires via rho_0^v(w) rho_0^w(v) = 1 per atom.
bool equivalent_numeraires(const RiskMeasure& rm, const Numeraire& v, const Numeraire& w);

/// Acceptance cone A_t = {X : E_Q(X|F_t) <= 0 for all Q} as inequality rows,
/// one per (vertex, atom) pair with positive atom mass.
PolyCone acceptance_cone(const RiskMeasure& rm, int t);

}  // namespace riskcone
