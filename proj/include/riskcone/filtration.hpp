#pragma once

#include <vector>

#include "riskcone/types.hpp"

namespace riskcone {

/// Finite filtered sample space: a refining sequence of partitions of
/// {0, ..., states-1} for t = 0..T.  The level-0 partition need not be
/// trivial and the level-T partition need not be discrete.
class FilteredSpace {
public:
    /// `partitions[t]` lists the atoms at level t as 0-based state index sets.
    FilteredSpace(int states, std::vector<std::vector<std::vector<int>>> partitions);

    int states() const { return states_; }
    int horizon() const { return static_cast<int>(levels_.size()) - 1; }

    int atom_count(int t) const { return static_cast<int>(level(t).atoms.size()); }
    const std::vector<int>& atom(int t, int a) const { return level(t).atoms[a]; }
    int atom_of(int t, int state) const { return level(t).atom_of[state]; }

    /// Children (level t+1 atom indices) of atom a at level t.
    const std::vector<int>& children(int t, int a) const { return level(t).children[a]; }

    bool is_measurable(const RVector& x, int t) const;
    bool is_measurable(const RMatrix& x, int t) const;

    /// Averages nothing; just checks t against the horizon.
    void check_level(int t) const;

    bool operator==(const FilteredSpace& other) const;

private:
    struct Level {
        std::vector<std::vector<int>> atoms;
        std::vector<int> atom_of;
        std::vector<std::vector<int>> children;  // empty at the last level
    };
    const Level& level(int t) const {
        check_level(t);
        return levels_[t];
    }

    int states_ = 0;
    std::vector<Level> levels_;
};

/// Validated construction, named after what it does in the scenario layer.
FilteredSpace make_space(int states, std::vector<std::vector<std::vector<int>>> partitions);

/// Space of a binary branching tree with the discrete partition at the last
/// of `depth` refinements of the trivial one; states = 2^depth.
FilteredSpace binary_tree_space(int depth);

}  // namespace riskcone
