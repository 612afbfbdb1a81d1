#include "riskcone/filtration.hpp"

#include <algorithm>

#include "riskcone/errors.hpp"

namespace riskcone {

FilteredSpace::FilteredSpace(int states, std::vector<std::vector<std::vector<int>>> partitions)
    : states_(states) {
    if (states <= 0) throw EmptyAtomError("space needs at least one state");
    if (partitions.empty()) throw ShapeError("at least the level-0 partition is required");

    levels_.resize(partitions.size());
    for (size_t t = 0; t < partitions.size(); ++t) {
        Level& lv = levels_[t];
        lv.atoms = std::move(partitions[t]);
        lv.atom_of.assign(states, -1);
        for (size_t a = 0; a < lv.atoms.size(); ++a) {
            if (lv.atoms[a].empty())
                throw EmptyAtomError("empty atom at level " + std::to_string(t));
            std::sort(lv.atoms[a].begin(), lv.atoms[a].end());
            for (int s : lv.atoms[a]) {
                if (s < 0 || s >= states)
                    throw ShapeError("state index out of range at level " + std::to_string(t));
                if (lv.atom_of[s] != -1)
                    throw ShapeError("state appears in two atoms at level " + std::to_string(t));
                lv.atom_of[s] = static_cast<int>(a);
            }
        }
        for (int s = 0; s < states; ++s)
            if (lv.atom_of[s] == -1)
                throw EmptyAtomError("state " + std::to_string(s + 1) +
                                     " missing from partition at level " + std::to_string(t));
    }

    // refinement: each atom at t+1 sits inside one atom at t
    for (size_t t = 0; t + 1 < levels_.size(); ++t) {
        levels_[t].children.resize(levels_[t].atoms.size());
        for (size_t b = 0; b < levels_[t + 1].atoms.size(); ++b) {
            const auto& atom = levels_[t + 1].atoms[b];
            int parent = levels_[t].atom_of[atom.front()];
            for (int s : atom)
                if (levels_[t].atom_of[s] != parent)
                    throw RefinementError("partition at level " + std::to_string(t + 1) +
                                          " does not refine level " + std::to_string(t));
            levels_[t].children[parent].push_back(static_cast<int>(b));
        }
    }
}

void FilteredSpace::check_level(int t) const {
    if (t < 0 || t >= static_cast<int>(levels_.size()))
        throw LevelOutOfRange("level " + std::to_string(t) + " outside 0.." +
                              std::to_string(horizon()));
}

bool FilteredSpace::is_measurable(const RVector& x, int t) const {
    if (x.size() != states_) throw ShapeError("vector does not match state count");
    for (int a = 0; a < atom_count(t); ++a) {
        const auto& at = atom(t, a);
        for (size_t i = 1; i < at.size(); ++i)
            if (x[at[i]] != x[at[0]]) return false;
    }
    return true;
}

bool FilteredSpace::is_measurable(const RMatrix& x, int t) const {
    if (x.rows() != states_) throw ShapeError("field does not match state count");
    for (Index j = 0; j < x.cols(); ++j)
        if (!is_measurable(RVector(x.col(j)), t)) return false;
    return true;
}

bool FilteredSpace::operator==(const FilteredSpace& other) const {
    if (states_ != other.states_ || levels_.size() != other.levels_.size()) return false;
    for (size_t t = 0; t < levels_.size(); ++t)
        if (levels_[t].atom_of != other.levels_[t].atom_of) return false;
    return true;
}

FilteredSpace make_space(int states, std::vector<std::vector<std::vector<int>>> partitions) {
    return FilteredSpace(states, std::move(partitions));
}

FilteredSpace binary_tree_space(int depth) {
    int n = 1 << depth;
    std::vector<std::vector<std::vector<int>>> parts;
    for (int t = 0; t <= depth; ++t) {
        std::vector<std::vector<int>> level;
        int width = n >> t;
        for (int a = 0; a < (1 << t); ++a) {
            std::vector<int> atom(width);
            for (int i = 0; i < width; ++i) atom[i] = a * width + i;
            level.push_back(std::move(atom));
        }
        parts.push_back(std::move(level));
    }
    return FilteredSpace(n, std::move(parts));
}

}  // namespace riskcone
