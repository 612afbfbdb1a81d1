#pragma once

#include <optional>
#include <vector>

#include "riskcone/filtration.hpp"
#include "riskcone/types.hpp"

namespace riskcone {

/// Probability measure as exact masses per state (nonnegative, summing to 1).
class Measure {
public:
    explicit Measure(RVector mass);

    const RVector& mass() const { return mass_; }
    Rational operator()(int state) const { return mass_[state]; }
    Index states() const { return mass_.size(); }

    Rational atom_mass(const std::vector<int>& atom) const;
    bool strictly_positive() const;

    bool operator==(const Measure& o) const { return mass_ == o.mass_; }

private:
    RVector mass_;
};

Measure uniform_measure(const FilteredSpace& space);

/// Random variable or d-vector field over the sample set; column j holds
/// component j.  `meas_level`, when set, asserts F_t-measurability (checked
/// by the scenario layer, not here).
struct RandomVec {
    RMatrix values;
    std::optional<int> meas_level;

    RandomVec() = default;
    explicit RandomVec(RMatrix v, std::optional<int> level = std::nullopt)
        : values(std::move(v)), meas_level(level) {}
    explicit RandomVec(RVector v, std::optional<int> level = std::nullopt)
        : values(std::move(v)), meas_level(level) {}

    Index states() const { return values.rows(); }
    Index dim() const { return values.cols(); }
    bool scalar() const { return values.cols() == 1; }
    RVector col() const { return values.col(0); }
};

/// F_t-measurable conditional value with an explicit defined/undefined flag
/// per level-t atom (undefined exactly on atoms of conditioning mass zero;
/// the stored value there is 0 and must not be read).
struct Conditional {
    RVector value;              // per state, constant on level-t atoms
    std::vector<char> defined;  // per atom at level t
    int level = 0;

    bool defined_at_state(const FilteredSpace& space, int state) const {
        return defined[space.atom_of(level, state)] != 0;
    }
    bool everywhere_defined() const {
        for (char d : defined)
            if (!d) return false;
        return true;
    }
};

/// E_Q(X | F_t) on each atom A with Q(A) > 0; marked undefined where Q(A) = 0.
Conditional cond_exp(const FilteredSpace& space, const RVector& x, const Measure& q, int t);

/// Radon-Nikodym derivative dQ/dP per state; requires P strictly positive.
RVector density(const Measure& q, const Measure& p);

/// Density of Q restricted to F_t, i.e. E_P[dQ/dP | F_t].
RVector restrict_density(const FilteredSpace& space, const Measure& q, const Measure& p, int t);

}  // namespace riskcone
