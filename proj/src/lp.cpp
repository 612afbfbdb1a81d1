#include "riskcone/lp.hpp"

#include "riskcone/errors.hpp"

namespace riskcone::lp {
namespace {

// Phase-I tableau: min sum of artificials s.t. Ax = b, x >= 0, b >= 0.
// Returns the structural solution when the optimum is zero.
std::optional<RVector> phase1(RMatrix a, RVector b) {
    const Index m = a.rows();
    const Index n = a.cols();
    const Index total = n + m;  // structural + one artificial per row

    RMatrix tab(m, total + 1);
    tab.setZero();
    tab.block(0, 0, m, n) = a;
    for (Index i = 0; i < m; ++i) {
        tab(i, n + i) = 1;
        tab(i, total) = b[i];
    }

    // reduced-cost row for the artificial-sum objective
    RVector cost = RVector::Zero(total + 1);
    for (Index j = 0; j <= total; ++j) {
        Rational s = 0;
        for (Index i = 0; i < m; ++i) s += tab(i, j);
        if (j < n)
            cost[j] = -s;
        else if (j == total)
            cost[j] = -s;
        // artificial columns start with reduced cost 0 (1 - 1)
    }

    std::vector<Index> basis(m);
    for (Index i = 0; i < m; ++i) basis[i] = n + i;

    while (true) {
        // Bland: smallest-index entering column with negative reduced cost.
        Index enter = -1;
        for (Index j = 0; j < total; ++j) {
            if (j >= n) continue;  // artificials never re-enter
            if (cost[j] < 0) { enter = j; break; }
        }
        if (enter < 0) break;

        Index leave = -1;
        Rational best;
        for (Index i = 0; i < m; ++i) {
            if (tab(i, enter) <= 0) continue;
            Rational ratio = tab(i, total) / tab(i, enter);
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0)
            throw Error("phase-1 objective unbounded; inconsistent tableau");

        // pivot on (leave, enter)
        Rational piv = tab(leave, enter);
        tab.row(leave) /= piv;
        for (Index i = 0; i < m; ++i) {
            if (i == leave) continue;
            Rational f = tab(i, enter);
            if (f == 0) continue;
            tab.row(i) -= f * tab.row(leave);
        }
        if (cost[enter] != 0) {
            Rational f = cost[enter];
            for (Index j = 0; j <= total; ++j) cost[j] -= f * tab(leave, j);
        }
        basis[leave] = enter;
    }

    if (-cost[total] != 0) return std::nullopt;  // artificial mass left over

    RVector x = RVector::Zero(n);
    for (Index i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = tab(i, total);
    return x;
}

}  // namespace

std::optional<RVector> solve_feasible(const Problem& p) {
    std::vector<char> nonneg = p.nonneg;
    if (nonneg.empty()) nonneg.assign(p.vars, 1);
    if (static_cast<Index>(nonneg.size()) != p.vars)
        throw ShapeError("nonneg flag count mismatch");

    // free variables split into two nonnegative halves
    std::vector<Index> split_col(p.vars, -1);
    Index extra = 0;
    for (Index v = 0; v < p.vars; ++v)
        if (!nonneg[v]) split_col[v] = p.vars + extra++;

    const Index n = p.vars + extra;
    const Index m = static_cast<Index>(p.rows.size());
    RMatrix a = RMatrix::Zero(m, n);
    RVector b(m);
    for (Index i = 0; i < m; ++i) {
        const Constraint& c = p.rows[i];
        if (c.coeffs.size() != p.vars) throw ShapeError("constraint width mismatch");
        for (Index v = 0; v < p.vars; ++v) {
            a(i, v) = c.coeffs[v];
            if (split_col[v] >= 0) a(i, split_col[v]) = -c.coeffs[v];
        }
        b[i] = c.rhs;
    }

    // slacks, then normalize rhs signs
    Index slacks = 0;
    for (const Constraint& c : p.rows)
        if (c.rel != Rel::Eq) ++slacks;
    RMatrix full = RMatrix::Zero(m, n + slacks);
    full.block(0, 0, m, n) = a;
    Index s = n;
    for (Index i = 0; i < m; ++i) {
        if (p.rows[i].rel == Rel::Le) full(i, s++) = 1;
        else if (p.rows[i].rel == Rel::Ge) full(i, s++) = -1;
    }
    for (Index i = 0; i < m; ++i) {
        if (b[i] < 0) {
            full.row(i) = -full.row(i);
            b[i] = -b[i];
        }
    }

    auto sol = phase1(std::move(full), std::move(b));
    if (!sol) return std::nullopt;
    RVector x(p.vars);
    for (Index v = 0; v < p.vars; ++v)
        x[v] = split_col[v] >= 0 ? (*sol)[v] - (*sol)[split_col[v]] : (*sol)[v];
    return x;
}

std::optional<RVector> cone_coefficients(const RMatrix& gens, const RVector& x) {
    if (gens.cols() != x.size()) throw ShapeError("generator width mismatch");
    Problem p;
    p.vars = gens.rows();
    p.nonneg.assign(p.vars, 1);
    for (Index j = 0; j < x.size(); ++j) {
        Constraint c;
        c.coeffs = gens.col(j);
        c.rel = Rel::Eq;
        c.rhs = x[j];
        p.rows.push_back(std::move(c));
    }
    return solve_feasible(p);
}

bool in_cone(const RMatrix& gens, const RVector& x) {
    if (gens.rows() == 0) return x.isZero();
    return cone_coefficients(gens, x).has_value();
}

bool in_polytope(const RMatrix& verts, const RVector& x) {
    if (verts.rows() == 0) return false;
    if (verts.cols() != x.size()) throw ShapeError("vertex width mismatch");
    Problem p;
    p.vars = verts.rows();
    p.nonneg.assign(p.vars, 1);
    for (Index j = 0; j < x.size(); ++j) {
        Constraint c;
        c.coeffs = verts.col(j);
        c.rel = Rel::Eq;
        c.rhs = x[j];
        p.rows.push_back(std::move(c));
    }
    Constraint mass;
    mass.coeffs = RVector::Constant(p.vars, 1);
    mass.rel = Rel::Eq;
    mass.rhs = 1;
    p.rows.push_back(std::move(mass));
    return solve_feasible(p).has_value();
}

}  // namespace riskcone::lp
