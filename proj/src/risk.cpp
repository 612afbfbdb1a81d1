#include "riskcone/risk.hpp"

#include "riskcone/errors.hpp"

namespace riskcone {
namespace {

enum class Extremum { Max, Min };

RVector atomwise_opt(const RiskMeasure& rm, const RVector& x, int t, Extremum kind) {
    const FilteredSpace& sp = rm.space();
    if (x.size() != sp.states()) throw ShapeError("claim does not match state count");
    sp.check_level(t);

    RVector out = RVector::Zero(sp.states());
    for (int a = 0; a < sp.atom_count(t); ++a) {
        const auto& atom = sp.atom(t, a);
        bool seen = false;
        Rational best;
        for (const Measure& q : rm.q.vertices()) {
            Rational mass = q.atom_mass(atom);
            if (mass == 0) continue;
            Rational num = 0;
            for (int s : atom) num += q(s) * x[s];
            Rational val = num / mass;
            if (!seen || (kind == Extremum::Max ? val > best : val < best)) {
                best = val;
                seen = true;
            }
        }
        // the reference vertex is strictly positive, so every atom has mass
        for (int s : atom) out[s] = best;
    }
    return out;
}

}  // namespace

RVector rho(const RiskMeasure& rm, const RVector& x, int t) {
    return atomwise_opt(rm, x, t, Extremum::Max);
}

RVector lambda(const RiskMeasure& rm, const RVector& v, int t) {
    return atomwise_opt(rm, v, t, Extremum::Min);
}

std::optional<Numeraire> make_numeraire(const RiskMeasure& rm, const RVector& v) {
    const FilteredSpace& sp = rm.space();
    if (v.size() != sp.states()) throw ShapeError("asset does not match state count");
    for (Index s = 0; s < v.size(); ++s)
        if (v[s] <= 0) return std::nullopt;

    Numeraire n;
    n.v = v;
    for (int t = 0; t <= sp.horizon(); ++t) {
        RVector lt = lambda(rm, v, t);
        for (Index s = 0; s < lt.size(); ++s)
            if (lt[s] <= 0) return std::nullopt;
        n.lambda_profile.push_back(std::move(lt));
    }
    return n;
}

bool is_numeraire(const RiskMeasure& rm, const RVector& v) {
    return make_numeraire(rm, v).has_value();
}

RVector rho_v(const RiskMeasure& rm, const RVector& x, const Numeraire& v, int t) {
    const FilteredSpace& sp = rm.space();
    if (x.size() != sp.states()) throw ShapeError("claim does not match state count");
    sp.check_level(t);

    RVector out = RVector::Zero(sp.states());
    for (int a = 0; a < sp.atom_count(t); ++a) {
        const auto& atom = sp.atom(t, a);
        bool seen = false;
        Rational best;
        for (const Measure& q : rm.q.vertices()) {
            Rational mass = q.atom_mass(atom);
            if (mass == 0) continue;
            Rational num = 0, den = 0;
            for (int s : atom) {
                num += q(s) * x[s];
                den += q(s) * v.v[s];
            }
            Rational val = num / den;  // den > 0: v strictly positive
            if (!seen || val > best) {
                best = val;
                seen = true;
            }
        }
        for (int s : atom) out[s] = best;
    }
    return out;
}

bool equivalent_numeraires(const RiskMeasure& rm, const Numeraire& v, const Numeraire& w) {
    RVector vw = rho_v(rm, w.v, v, 0);
    RVector wv = rho_v(rm, v.v, w, 0);
    for (Index s = 0; s < vw.size(); ++s)
        if (vw[s] * wv[s] != 1) return false;
    return true;
}

PolyCone acceptance_cone(const RiskMeasure& rm, int t) {
    const FilteredSpace& sp = rm.space();
    sp.check_level(t);
    std::vector<RVector> rows;
    for (const Measure& q : rm.q.vertices()) {
        for (int a = 0; a < sp.atom_count(t); ++a) {
            const auto& atom = sp.atom(t, a);
            if (q.atom_mass(atom) == 0) continue;  // degenerate 0 <= 0 row
            RVector row = RVector::Zero(sp.states());
            for (int s : atom) row[s] = q(s);
            rows.push_back(primitive(row));
        }
    }
    RMatrix m(static_cast<Index>(rows.size()), sp.states());
    for (size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Index>(i)) = rows[i];
    return PolyCone::from_h(sp.states(), std::move(m));
}

}  // namespace riskcone
