#include "riskcone/prob.hpp"

#include "riskcone/errors.hpp"

namespace riskcone {

Measure::Measure(RVector mass) : mass_(std::move(mass)) {
    Rational total = 0;
    for (Index i = 0; i < mass_.size(); ++i) {
        if (mass_[i] < 0) throw RangeError("negative mass");
        total += mass_[i];
    }
    if (total != 1) throw RangeError("masses sum to " + to_string(total) + ", not 1");
}

Rational Measure::atom_mass(const std::vector<int>& atom) const {
    Rational m = 0;
    for (int s : atom) m += mass_[s];
    return m;
}

bool Measure::strictly_positive() const {
    for (Index i = 0; i < mass_.size(); ++i)
        if (mass_[i] <= 0) return false;
    return true;
}

Measure uniform_measure(const FilteredSpace& space) {
    RVector m = RVector::Constant(space.states(), Rational(1, space.states()));
    return Measure(std::move(m));
}

Conditional cond_exp(const FilteredSpace& space, const RVector& x, const Measure& q, int t) {
    if (x.size() != space.states() || q.states() != space.states())
        throw ShapeError("cond_exp: state count mismatch");
    space.check_level(t);

    Conditional out;
    out.level = t;
    out.value = RVector::Zero(space.states());
    out.defined.assign(space.atom_count(t), 0);
    for (int a = 0; a < space.atom_count(t); ++a) {
        const auto& atom = space.atom(t, a);
        Rational mass = q.atom_mass(atom);
        if (mass == 0) continue;
        Rational sum = 0;
        for (int s : atom) sum += q(s) * x[s];
        Rational v = sum / mass;
        for (int s : atom) out.value[s] = v;
        out.defined[a] = 1;
    }
    return out;
}

RVector density(const Measure& q, const Measure& p) {
    if (q.states() != p.states()) throw ShapeError("density: state count mismatch");
    RVector out(q.states());
    for (Index s = 0; s < q.states(); ++s) {
        if (p(static_cast<int>(s)) == 0) throw DivisionByZero("reference measure has a zero mass point");
        out[s] = q(static_cast<int>(s)) / p(static_cast<int>(s));
    }
    return out;
}

RVector restrict_density(const FilteredSpace& space, const Measure& q, const Measure& p, int t) {
    space.check_level(t);
    if (!p.strictly_positive()) throw DivisionByZero("reference measure has a zero mass point");
    RVector out(space.states());
    for (int a = 0; a < space.atom_count(t); ++a) {
        const auto& atom = space.atom(t, a);
        Rational v = q.atom_mass(atom) / p.atom_mass(atom);
        for (int s : atom) out[s] = v;
    }
    return out;
}

}  // namespace riskcone
