#pragma once

#include <optional>
#include <vector>

#include "riskcone/types.hpp"

namespace riskcone::lp {

enum class Rel { Le, Eq, Ge };

struct Constraint {
    RVector coeffs;
    Rel rel = Rel::Eq;
    Rational rhs = 0;
};

/// Exact feasibility problem.  Variables are nonnegative unless listed free.
struct Problem {
    Index vars = 0;
    std::vector<Constraint> rows;
    std::vector<char> nonneg;  // size vars; 1 = x_i >= 0, 0 = free
};

/// Phase-I simplex with Bland's rule over exact rationals.
/// Returns a feasible point, or nullopt when the system is infeasible.
std::optional<RVector> solve_feasible(const Problem& p);

/// x in cone(rows of gens)?  Solves gens^T lambda = x, lambda >= 0.
bool in_cone(const RMatrix& gens, const RVector& x);
std::optional<RVector> cone_coefficients(const RMatrix& gens, const RVector& x);

/// x in conv(rows of verts)?
bool in_polytope(const RMatrix& verts, const RVector& x);

}  // namespace riskcone::lp
