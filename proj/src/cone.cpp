#include "riskcone/cone.hpp"

#include <algorithm>
#include <cstdint>

#include "riskcone/errors.hpp"

namespace riskcone {

PolyCone PolyCone::from_h(Index dim, RMatrix rows) {
    if (rows.size() > 0 && rows.cols() != dim) throw ShapeError("h-rep width mismatch");
    PolyCone c(dim);
    if (rows.rows() == 0) rows = RMatrix(0, dim);
    c.h_ = std::move(rows);
    return c;
}

PolyCone PolyCone::from_v(Index dim, RMatrix gens) {
    if (gens.size() > 0 && gens.cols() != dim) throw ShapeError("v-rep width mismatch");
    PolyCone c(dim);
    if (gens.rows() == 0) gens = RMatrix(0, dim);
    c.v_ = std::move(gens);
    return c;
}

PolyCone PolyCone::from_both(Index dim, RMatrix rows, RMatrix gens) {
    PolyCone c = from_h(dim, std::move(rows));
    PolyCone g = from_v(dim, std::move(gens));
    c.v_ = g.v();
    return c;
}

const RMatrix& PolyCone::h() const {
    if (!h_) throw RepresentationUnavailable("inequality representation not present");
    return *h_;
}

const RMatrix& PolyCone::v() const {
    if (!v_) throw RepresentationUnavailable("generator representation not present");
    return *v_;
}

namespace {

using Bits = std::vector<std::uint64_t>;

Bits bits_make(size_t n) { return Bits((n + 63) / 64, 0); }
void bits_set(Bits& b, size_t i) { b[i / 64] |= (std::uint64_t{1} << (i % 64)); }
Bits bits_and(const Bits& a, const Bits& b) {
    Bits r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
    return r;
}
bool bits_superset(const Bits& big, const Bits& small) {
    for (size_t i = 0; i < small.size(); ++i)
        if ((big[i] & small[i]) != small[i]) return false;
    return true;
}

struct Ray {
    RVector dir;
    Bits zero;
};

RMatrix stack_rows(const std::vector<RVector>& rows, Index dim) {
    RMatrix m(static_cast<Index>(rows.size()), dim);
    for (size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Index>(i)) = rows[i];
    return m;
}

}  // namespace

namespace linalg {

Index rref(RMatrix& m) {
    Index rank = 0;
    for (Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
        Index piv = -1;
        for (Index r = rank; r < m.rows(); ++r)
            if (m(r, col) != 0) { piv = r; break; }
        if (piv < 0) continue;
        m.row(piv).swap(m.row(rank));
        Rational lead = m(rank, col);
        m.row(rank) /= lead;
        for (Index r = 0; r < m.rows(); ++r) {
            if (r == rank) continue;
            Rational f = m(r, col);
            if (f == 0) continue;
            m.row(r) -= f * m.row(rank);
        }
        ++rank;
    }
    m.conservativeResize(rank, m.cols());
    return rank;
}

RMatrix project_off(const RMatrix& rows, const RMatrix& basis) {
    if (basis.rows() == 0) return rows;
    // Gram matrix solve: p = r - B^T (B B^T)^{-1} B r, all exact.
    RMatrix g = basis * basis.transpose();
    RMatrix rhs = basis * rows.transpose();  // k x n_rows
    // Gaussian elimination on [g | rhs]
    Index k = g.rows();
    RMatrix aug(k, k + rhs.cols());
    aug << g, rhs;
    for (Index col = 0; col < k; ++col) {
        Index piv = -1;
        for (Index r = col; r < k; ++r)
            if (aug(r, col) != 0) { piv = r; break; }
        if (piv < 0) throw Error("degenerate lineality basis");
        aug.row(piv).swap(aug.row(col));
        Rational lead = aug(col, col);
        aug.row(col) /= lead;
        for (Index r = 0; r < k; ++r) {
            if (r == col) continue;
            Rational f = aug(r, col);
            if (f == 0) continue;
            aug.row(r) -= f * aug.row(col);
        }
    }
    RMatrix y = aug.block(0, k, k, rhs.cols());
    return rows - (basis.transpose() * y).transpose();
}

}  // namespace linalg

DD extreme_rays(const RMatrix& rows, Index dim, int budget) {
    if (dim <= 0) throw ShapeError("cone dimension must be positive");
    if (rows.rows() > budget)
        throw RepresentationUnavailable("row count exceeds conversion budget");

    // nonzero rows only, primitive-scaled
    std::vector<RVector> work;
    for (Index i = 0; i < rows.rows(); ++i) {
        RVector r = primitive(rows.row(i).transpose());
        if (!r.isZero()) work.push_back(std::move(r));
    }
    const size_t total = work.size();

    std::vector<RVector> lin;
    lin.reserve(dim);
    for (Index i = 0; i < dim; ++i) {
        RVector e = RVector::Zero(dim);
        e[i] = 1;
        lin.push_back(std::move(e));
    }
    std::vector<Ray> rays;

    for (size_t step = 0; step < total; ++step) {
        const RVector& a = work[step];

        Index pivot = -1;
        std::vector<Rational> dlin(lin.size());
        for (size_t i = 0; i < lin.size(); ++i) {
            dlin[i] = a.dot(lin[i]);
            if (pivot < 0 && dlin[i] != 0) pivot = static_cast<Index>(i);
        }

        if (pivot >= 0) {
            RVector p = lin[pivot];
            Rational dp = dlin[pivot];
            std::vector<RVector> nlin;
            for (size_t i = 0; i < lin.size(); ++i) {
                if (static_cast<Index>(i) == pivot) continue;
                nlin.push_back(primitive(lin[i] - (dlin[i] / dp) * p));
            }
            lin = std::move(nlin);
            for (Ray& r : rays) {
                Rational dr = a.dot(r.dir);
                if (dr != 0) r.dir = primitive(r.dir - (dr / dp) * p);
                bits_set(r.zero, step);
            }
            Ray fresh;
            fresh.dir = primitive(dp < 0 ? p : RVector(-p));
            fresh.zero = bits_make(total);
            for (size_t j = 0; j < step; ++j) bits_set(fresh.zero, j);
            rays.push_back(std::move(fresh));
            continue;
        }

        std::vector<size_t> plus, minus;
        for (size_t i = 0; i < rays.size(); ++i) {
            Rational d = a.dot(rays[i].dir);
            if (d > 0) plus.push_back(i);
            else if (d < 0) minus.push_back(i);
        }
        if (plus.empty()) {
            for (Ray& r : rays)
                if (a.dot(r.dir) == 0) bits_set(r.zero, step);
            continue;
        }

        std::vector<Ray> next;
        for (size_t i = 0; i < rays.size(); ++i) {
            Rational d = a.dot(rays[i].dir);
            if (d > 0) continue;
            Ray kept = rays[i];
            if (d == 0) bits_set(kept.zero, step);
            next.push_back(std::move(kept));
        }
        for (size_t pi : plus) {
            for (size_t ni : minus) {
                Bits common = bits_and(rays[pi].zero, rays[ni].zero);
                bool adjacent = true;
                for (size_t k = 0; k < rays.size(); ++k) {
                    if (k == pi || k == ni) continue;
                    if (bits_superset(rays[k].zero, common)) { adjacent = false; break; }
                }
                if (!adjacent) continue;
                Rational dp = a.dot(rays[pi].dir);
                Rational dn = a.dot(rays[ni].dir);
                Ray combo;
                combo.dir = primitive(dp * rays[ni].dir - dn * rays[pi].dir);
                combo.zero = common;
                bits_set(combo.zero, step);
                next.push_back(std::move(combo));
            }
        }
        rays = std::move(next);
        if (static_cast<int>(rays.size()) > budget)
            throw RepresentationUnavailable("generator count exceeds conversion budget");
    }

    DD out;
    std::vector<RVector> rdirs;
    rdirs.reserve(rays.size());
    for (Ray& r : rays) rdirs.push_back(std::move(r.dir));
    out.rays = stack_rows(rdirs, dim);
    out.lineality = stack_rows(lin, dim);
    return out;
}

namespace {

RMatrix dd_to_gens(const DD& dd, Index dim) {
    RMatrix g(dd.rays.rows() + 2 * dd.lineality.rows(), dim);
    g.topRows(dd.rays.rows()) = dd.rays;
    g.middleRows(dd.rays.rows(), dd.lineality.rows()) = dd.lineality;
    g.bottomRows(dd.lineality.rows()) = -dd.lineality;
    return g;
}

}  // namespace

PolyCone dd_convert(const PolyCone& c, int budget) {
    if (c.has_h() && c.has_v()) return c;
    if (c.has_h()) {
        DD dd = extreme_rays(c.h(), c.dim(), budget);
        return PolyCone::from_both(c.dim(), c.h(), dd_to_gens(dd, c.dim()));
    }
    // generators given: the polar has H-rep = generators; its generators
    // are the inequality rows of the original cone.
    DD dd = extreme_rays(c.v(), c.dim(), budget);
    return PolyCone::from_both(c.dim(), dd_to_gens(dd, c.dim()), c.v());
}

PolyCone polar(const PolyCone& c) {
    if (c.has_h() && c.has_v()) return PolyCone::from_both(c.dim(), c.v(), c.h());
    if (c.has_h()) return PolyCone::from_v(c.dim(), c.h());
    return PolyCone::from_h(c.dim(), c.v());
}

bool member(const RVector& x, const PolyCone& c, int budget) {
    if (x.size() != c.dim()) throw ShapeError("member: dimension mismatch");
    if (c.has_h()) {
        const RMatrix& h = c.h();
        for (Index i = 0; i < h.rows(); ++i)
            if (h.row(i).dot(x.transpose()) > 0) return false;
        return true;
    }
    (void)budget;
    return lp::in_cone(c.v(), x);
}

bool contains(const PolyCone& outer, const PolyCone& inner, int budget) {
    if (outer.dim() != inner.dim()) throw ShapeError("contains: dimension mismatch");
    PolyCone in = inner.has_v() ? inner : dd_convert(inner, budget);
    const RMatrix& gens = in.v();
    if (outer.has_h()) {
        const RMatrix& h = outer.h();
        for (Index g = 0; g < gens.rows(); ++g)
            for (Index r = 0; r < h.rows(); ++r)
                if (h.row(r).dot(gens.row(g)) > 0) return false;
        return true;
    }
    for (Index g = 0; g < gens.rows(); ++g)
        if (!lp::in_cone(outer.v(), gens.row(g).transpose())) return false;
    return true;
}

DD canonical_form(const PolyCone& c, int budget) {
    DD dd;
    if (c.has_h()) {
        dd = extreme_rays(c.h(), c.dim(), budget);
    } else {
        // two conversions: generators -> inequality rows -> minimal generators
        DD pol = extreme_rays(c.v(), c.dim(), budget);
        dd = extreme_rays(dd_to_gens(pol, c.dim()), c.dim(), budget);
    }
    RMatrix lin = dd.lineality;
    linalg::rref(lin);
    for (Index i = 0; i < lin.rows(); ++i)
        lin.row(i) = primitive(lin.row(i).transpose()).transpose();

    RMatrix proj = linalg::project_off(dd.rays, lin);
    std::vector<RVector> rows;
    for (Index i = 0; i < proj.rows(); ++i) {
        RVector r = primitive(proj.row(i).transpose());
        if (!r.isZero()) rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end(),
              [](const RVector& a, const RVector& b) { return lex_compare(a, b) < 0; });
    rows.erase(std::unique(rows.begin(), rows.end(),
                           [](const RVector& a, const RVector& b) { return a == b; }),
               rows.end());

    DD out;
    out.rays = stack_rows(rows, c.dim());
    out.lineality = lin;
    return out;
}

bool equal(const PolyCone& a, const PolyCone& b, int budget) {
    if (a.dim() != b.dim()) return false;
    DD ca = canonical_form(a, budget);
    DD cb = canonical_form(b, budget);
    if (ca.lineality == cb.lineality && ca.rays == cb.rays) return true;
    // canonical forms differ; mutual containment settles it
    PolyCone fa = dd_convert(a, budget);
    PolyCone fb = dd_convert(b, budget);
    return contains(fa, fb, budget) && contains(fb, fa, budget);
}

PolyCone sum(const std::vector<PolyCone>& cones, int budget) {
    if (cones.empty()) throw ShapeError("sum of zero cones");
    Index dim = cones.front().dim();
    std::vector<RVector> gens;
    for (const PolyCone& c : cones) {
        if (c.dim() != dim) throw ShapeError("sum: dimension mismatch");
        PolyCone cc = c.has_v() ? c : dd_convert(c, budget);
        const RMatrix& v = cc.v();
        for (Index i = 0; i < v.rows(); ++i) gens.push_back(v.row(i).transpose());
    }
    return PolyCone::from_v(dim, stack_rows(gens, dim));
}

PolyCone intersect(const std::vector<PolyCone>& cones) {
    if (cones.empty()) throw ShapeError("intersection of zero cones");
    Index dim = cones.front().dim();
    std::vector<RVector> rows;
    for (const PolyCone& c : cones) {
        if (c.dim() != dim) throw ShapeError("intersect: dimension mismatch");
        const RMatrix& h = c.h();
        for (Index i = 0; i < h.rows(); ++i) rows.push_back(h.row(i).transpose());
    }
    return PolyCone::from_h(dim, stack_rows(rows, dim));
}

bool contains_negative_orthant(const PolyCone& c, int budget) {
    for (Index i = 0; i < c.dim(); ++i) {
        RVector e = RVector::Zero(c.dim());
        e[i] = -1;
        if (!member(e, c, budget)) return false;
    }
    return true;
}

PolyhedronVertices enumerate_polyhedron(const std::vector<lp::Constraint>& rows, Index vars,
                                        int budget) {
    std::vector<RVector> hom;
    auto add = [&](const RVector& a, const Rational& b) {
        RVector r(vars + 1);
        r.head(vars) = a;
        r[vars] = -b;
        hom.push_back(std::move(r));
    };
    for (const lp::Constraint& c : rows) {
        if (c.coeffs.size() != vars) throw ShapeError("polyhedron row width mismatch");
        if (c.rel == lp::Rel::Le) {
            add(c.coeffs, c.rhs);
        } else if (c.rel == lp::Rel::Ge) {
            add(-c.coeffs, -c.rhs);
        } else {
            add(c.coeffs, c.rhs);
            add(-c.coeffs, -c.rhs);
        }
    }
    {
        RVector s = RVector::Zero(vars + 1);
        s[vars] = -1;
        hom.push_back(std::move(s));  // homogenizing coordinate >= 0
    }

    DD dd = extreme_rays(stack_rows(hom, vars + 1), vars + 1, budget);

    std::vector<RVector> verts, rec, lin;
    for (Index i = 0; i < dd.rays.rows(); ++i) {
        RVector r = dd.rays.row(i).transpose();
        Rational s = r[vars];
        if (s > 0)
            verts.push_back(RVector(r.head(vars) / s));
        else
            rec.push_back(RVector(r.head(vars)));
    }
    for (Index i = 0; i < dd.lineality.rows(); ++i) {
        RVector l = dd.lineality.row(i).transpose();
        // lineality cannot carry homogenizing mass (s >= 0 on both signs)
        lin.push_back(RVector(l.head(vars)));
    }
    PolyhedronVertices out;
    out.vertices = stack_rows(verts, vars);
    out.rays = stack_rows(rec, vars);
    out.lineality = stack_rows(lin, vars);
    return out;
}

}  // namespace riskcone
