#pragma once

#include <vector>

#include "riskcone/prob.hpp"

namespace riskcone {

/// Polytope of test probability measures given by its vertex list, with a
/// designated strictly positive reference vertex (relevance).
class TestSet {
public:
    TestSet(FilteredSpace space, std::vector<Measure> vertices, int reference_index);

    const FilteredSpace& space() const { return space_; }
    const std::vector<Measure>& vertices() const { return vertices_; }
    const Measure& vertex(int i) const { return vertices_[i]; }
    int size() const { return static_cast<int>(vertices_.size()); }
    int reference_index() const { return reference_; }
    const Measure& reference() const { return vertices_[reference_]; }

    /// Vertex masses as a (vertices x states) matrix.
    RMatrix vertex_matrix() const;

private:
    FilteredSpace space_;
    std::vector<Measure> vertices_;
    int reference_ = 0;
};

}  // namespace riskcone
