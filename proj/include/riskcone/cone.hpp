#pragma once

#include <optional>
#include <vector>

#include "riskcone/lp.hpp"
#include "riskcone/types.hpp"

namespace riskcone {

inline constexpr int kDdBudget = 5000;

/// Polyhedral cone in R^dim carrying an inequality representation
/// (rows h: h.x <= 0), a generator representation (rows v), or both.
/// Lineality directions appear as +/- generator pairs and equalities as
/// +/- row pairs, so both matrices describe honest cones.
class PolyCone {
public:
    static PolyCone from_h(Index dim, RMatrix rows);
    static PolyCone from_v(Index dim, RMatrix gens);
    static PolyCone from_both(Index dim, RMatrix rows, RMatrix gens);

    Index dim() const { return dim_; }
    bool has_h() const { return h_.has_value(); }
    bool has_v() const { return v_.has_value(); }
    const RMatrix& h() const;
    const RMatrix& v() const;

private:
    PolyCone(Index dim) : dim_(dim) {}
    Index dim_ = 0;
    std::optional<RMatrix> h_;
    std::optional<RMatrix> v_;
};

/// Minimal generator description: extreme rays modulo the lineality space
/// plus a basis of that space.
struct DD {
    RMatrix rays;
    RMatrix lineality;
};

/// Double description of {x : rows.x <= 0}.  Throws RepresentationUnavailable
/// when the intermediate generator count exceeds the budget.
DD extreme_rays(const RMatrix& rows, Index dim, int budget = kDdBudget);

/// Fills the missing representation (pure; returns a cone with both).
PolyCone dd_convert(const PolyCone& c, int budget = kDdBudget);

/// Swaps the roles of generators and inequality rows.
PolyCone polar(const PolyCone& c);

bool member(const RVector& x, const PolyCone& c, int budget = kDdBudget);
/// outer contains inner?
bool contains(const PolyCone& outer, const PolyCone& inner, int budget = kDdBudget);
bool equal(const PolyCone& a, const PolyCone& b, int budget = kDdBudget);

PolyCone sum(const std::vector<PolyCone>& cones, int budget = kDdBudget);
PolyCone intersect(const std::vector<PolyCone>& cones);

/// Canonical form: lineality in reduced row-echelon form and extreme rays
/// projected onto the lineality complement, primitive and sorted.
DD canonical_form(const PolyCone& c, int budget = kDdBudget);

/// Does the cone contain -e_i for every coordinate (acceptance-type shape)?
bool contains_negative_orthant(const PolyCone& c, int budget = kDdBudget);

/// Vertex enumeration for a (possibly unbounded) polyhedron given by
/// generic linear constraints, via homogenization.
struct PolyhedronVertices {
    RMatrix vertices;
    RMatrix rays;
    RMatrix lineality;
};
PolyhedronVertices enumerate_polyhedron(const std::vector<lp::Constraint>& rows, Index vars,
                                        int budget = kDdBudget);

namespace linalg {
/// In-place exact reduced row echelon form; returns the rank.
Index rref(RMatrix& m);
/// Component of each row of `rows` orthogonal to the row space of `basis`.
RMatrix project_off(const RMatrix& rows, const RMatrix& basis);
}  // namespace linalg

}  // namespace riskcone
