#include "riskcone/testset.hpp"

#include "riskcone/errors.hpp"

namespace riskcone {

TestSet::TestSet(FilteredSpace space, std::vector<Measure> vertices, int reference_index)
    : space_(std::move(space)), vertices_(std::move(vertices)), reference_(reference_index) {
    if (vertices_.empty()) throw ShapeError("test set needs at least one vertex");
    for (const Measure& m : vertices_)
        if (m.states() != space_.states()) throw ShapeError("vertex state count mismatch");
    if (reference_ < 0 || reference_ >= static_cast<int>(vertices_.size()))
        throw ShapeError("reference vertex index out of range");
    if (!vertices_[reference_].strictly_positive())
        throw RangeError("reference vertex must be strictly positive");
}

RMatrix TestSet::vertex_matrix() const {
    RMatrix m(size(), space_.states());
    for (int i = 0; i < size(); ++i) m.row(i) = vertices_[i].mass().transpose();
    return m;
}

}  // namespace riskcone
