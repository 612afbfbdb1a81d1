#include "riskcone/portfolio.hpp"

#include <atomic>

#include "riskcone/errors.hpp"
#include "riskcone/parallel.hpp"

namespace riskcone {

PortfolioSpec PortfolioSpec::make(const RiskMeasure& rm, RMatrix assets) {
    if (assets.cols() < 1) throw ShapeError("portfolio needs at least one asset");
    if (assets.rows() != rm.space().states())
        throw ShapeError("portfolio assets do not match state count");
    for (Index s = 0; s < assets.rows(); ++s)
        if (assets(s, 0) != 1) throw RangeError("first portfolio asset must be the unit");
    for (Index j = 0; j < assets.cols(); ++j)
        if (!is_numeraire(rm, assets.col(j)))
            throw RangeError("portfolio asset " + std::to_string(j + 1) + " is not a numeraire");
    return PortfolioSpec(std::move(assets), true);
}

PortfolioSpec PortfolioSpec::relaxed(RMatrix assets) {
    if (assets.cols() < 1) throw ShapeError("portfolio needs at least one asset");
    for (Index s = 0; s < assets.rows(); ++s)
        if (assets(s, 0) <= 0)
            throw RangeError("first asset of a relaxed portfolio must be strictly positive");
    return PortfolioSpec(std::move(assets), false);
}

PortfolioSpec portfolio_from_columns(const RiskMeasure& rm, const std::vector<RVector>& cols) {
    if (cols.empty()) throw ShapeError("portfolio needs at least one asset");
    RMatrix m(cols.front().size(), static_cast<Index>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) m.col(static_cast<Index>(j)) = cols[j];
    return PortfolioSpec::make(rm, std::move(m));
}

RVector flatten_field(const RMatrix& field) {
    RVector x(field.rows() * field.cols());
    for (Index s = 0; s < field.rows(); ++s)
        for (Index j = 0; j < field.cols(); ++j) x[flat_index(s, j, field.cols())] = field(s, j);
    return x;
}

RMatrix unflatten_field(const RVector& x, Index d) {
    if (x.size() % d != 0) throw ShapeError("flattened field length not divisible by d");
    RMatrix field(x.size() / d, d);
    for (Index s = 0; s < field.rows(); ++s)
        for (Index j = 0; j < d; ++j) field(s, j) = x[flat_index(s, j, d)];
    return field;
}

namespace {

// Functional row of "pair X.V against the measure masses, localized to atom".
RVector pairing_row(const Measure& q, const RMatrix& assets, const std::vector<int>& atom) {
    const Index d = assets.cols();
    RVector row = RVector::Zero(assets.rows() * d);
    for (int s : atom)
        for (Index j = 0; j < d; ++j) row[flat_index(s, j, d)] = q(s) * assets(s, j);
    return row;
}

std::vector<int> whole_space_atom(const FilteredSpace& sp) {
    std::vector<int> all(sp.states());
    for (int s = 0; s < sp.states(); ++s) all[s] = s;
    return all;
}

RMatrix rows_to_matrix(const std::vector<RVector>& rows, Index dim) {
    RMatrix m(static_cast<Index>(rows.size()), dim);
    for (size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Index>(i)) = rows[i];
    return m;
}

// Collapse a functional row to one coordinate per (level atom, component).
RVector reduce_row(const FilteredSpace& sp, const RVector& row, int level, Index d) {
    RVector out = RVector::Zero(sp.atom_count(level) * d);
    for (Index s = 0; s < sp.states(); ++s) {
        Index b = sp.atom_of(level, static_cast<int>(s));
        for (Index j = 0; j < d; ++j) out[b * d + j] += row[flat_index(s, j, d)];
    }
    return out;
}

RVector expand_generator(const FilteredSpace& sp, const RVector& gen, int level, Index d) {
    RVector out(sp.states() * d);
    for (Index s = 0; s < sp.states(); ++s) {
        Index b = sp.atom_of(level, static_cast<int>(s));
        for (Index j = 0; j < d; ++j) out[flat_index(s, j, d)] = gen[b * d + j];
    }
    return out;
}

// DD in measurability-reduced coordinates, expanded back to state space.
PolyCone measurable_cone_from_rows(const FilteredSpace& sp, const std::vector<RVector>& rows,
                                   int level, Index d, int budget) {
    std::vector<RVector> reduced;
    reduced.reserve(rows.size());
    for (const RVector& r : rows) reduced.push_back(reduce_row(sp, r, level, d));
    DD dd = extreme_rays(rows_to_matrix(reduced, sp.atom_count(level) * d),
                         sp.atom_count(level) * d, budget);
    std::vector<RVector> gens;
    for (Index i = 0; i < dd.rays.rows(); ++i)
        gens.push_back(expand_generator(sp, dd.rays.row(i).transpose(), level, d));
    for (Index i = 0; i < dd.lineality.rows(); ++i) {
        RVector g = expand_generator(sp, dd.lineality.row(i).transpose(), level, d);
        gens.push_back(g);
        gens.push_back(-g);
    }
    return PolyCone::from_v(sp.states() * d, rows_to_matrix(gens, sp.states() * d));
}

}  // namespace

PolyCone portfolio_cone(const RiskMeasure& rm, const PortfolioSpec& v) {
    const FilteredSpace& sp = rm.space();
    std::vector<int> all = whole_space_atom(sp);
    std::vector<RVector> rows;
    for (const Measure& q : rm.q.vertices()) rows.push_back(primitive(pairing_row(q, v.assets(), all)));
    return PolyCone::from_h(sp.states() * v.d(), rows_to_matrix(rows, sp.states() * v.d()));
}

PolyCone a_t_cone(const RiskMeasure& rm, const PortfolioSpec& v, int t) {
    const FilteredSpace& sp = rm.space();
    sp.check_level(t);
    std::vector<RVector> rows;
    for (const Measure& q : rm.q.vertices()) {
        for (int a = 0; a < sp.atom_count(t); ++a) {
            if (q.atom_mass(sp.atom(t, a)) == 0) continue;
            rows.push_back(primitive(pairing_row(q, v.assets(), sp.atom(t, a))));
        }
    }
    return PolyCone::from_h(sp.states() * v.d(), rows_to_matrix(rows, sp.states() * v.d()));
}

PolyCone kt_eta(const RiskMeasure& rm, const PortfolioSpec& v, int t, int eta, int budget) {
    if (eta != 0 && eta != 1) throw LevelOutOfRange("eta must be 0 or 1");
    const FilteredSpace& sp = rm.space();
    if (t < 0 || t + eta > sp.horizon())
        throw LevelOutOfRange("kt_eta level outside 0..T-eta");
    const PolyCone at = a_t_cone(rm, v, t);
    std::vector<RVector> rows;
    for (Index i = 0; i < at.h().rows(); ++i) rows.push_back(at.h().row(i).transpose());
    return measurable_cone_from_rows(sp, rows, t + eta, v.d(), budget);
}

PolyCone decomposed_cone(const RiskMeasure& rm, const PortfolioSpec& v, int eta, int budget) {
    const FilteredSpace& sp = rm.space();
    std::vector<PolyCone> pieces;
    for (int t = 0; t + eta <= sp.horizon(); ++t) pieces.push_back(kt_eta(rm, v, t, eta, budget));
    return sum(pieces, budget);
}

bool is_represented(const RiskMeasure& rm, const PortfolioSpec& v, int eta, int budget) {
    PolyCone port = portfolio_cone(rm, v);
    PolyCone dec = decomposed_cone(rm, v, eta, budget);

    const RMatrix& h = port.h();
    const RMatrix& dgens = dec.v();
    for (Index g = 0; g < dgens.rows(); ++g)
        for (Index r = 0; r < h.rows(); ++r)
            if (h.row(r).dot(dgens.row(g)) > 0)
                throw Error("decomposition escaped the portfolio cone");

    PolyCone portv = dd_convert(port, budget);
    const RMatrix& pgens = portv.v();
    std::vector<char> inside(pgens.rows(), 0);
    parallel_for(static_cast<size_t>(pgens.rows()), [&](size_t i) {
        inside[i] = lp::in_cone(dgens, pgens.row(static_cast<Index>(i)).transpose()) ? 1 : 0;
    });
    for (char c : inside)
        if (!c) return false;
    return true;
}

bool polar_portfolio_identity(const RiskMeasure& rm, const PortfolioSpec& v, int budget) {
    const FilteredSpace& sp = rm.space();
    PolyCone left = polar(dd_convert(portfolio_cone(rm, v), budget));

    // right side: minimal generators of the scalar polar, times the assets
    PolyCone polar_a = PolyCone::from_v(sp.states(), rm.q.vertex_matrix());
    DD mini = canonical_form(polar_a, budget);
    std::vector<RVector> gens;
    for (Index i = 0; i < mini.rays.rows(); ++i) {
        RVector z = mini.rays.row(i).transpose();
        RVector g(sp.states() * v.d());
        for (Index s = 0; s < sp.states(); ++s)
            for (Index j = 0; j < v.d(); ++j) g[flat_index(s, j, v.d())] = z[s] * v.assets()(s, j);
        gens.push_back(std::move(g));
    }
    PolyCone right = PolyCone::from_v(sp.states() * v.d(), rows_to_matrix(gens, sp.states() * v.d()));
    return equal(left, right, budget);
}

PolyCone b_eta(const FilteredSpace& space, const PolyCone& c, Index d, int eta, int budget) {
    if (eta != 0 && eta != 1) throw LevelOutOfRange("eta must be 0 or 1");
    if (c.dim() != space.states() * d) throw ShapeError("cone does not match space and d");
    PolyCone ch = c.has_h() ? c : dd_convert(c, budget);

    std::vector<PolyCone> pieces;
    for (int t = 0; t + eta <= space.horizon(); ++t) {
        std::vector<RVector> rows;
        for (Index i = 0; i < ch.h().rows(); ++i) {
            for (int a = 0; a < space.atom_count(t); ++a) {
                RVector localized = RVector::Zero(c.dim());
                bool nonzero = false;
                for (int s : space.atom(t, a)) {
                    for (Index j = 0; j < d; ++j) {
                        Rational val = ch.h()(i, flat_index(s, j, d));
                        if (val != 0) nonzero = true;
                        localized[flat_index(s, j, d)] = val;
                    }
                }
                if (nonzero) rows.push_back(primitive(localized));
            }
        }
        pieces.push_back(measurable_cone_from_rows(space, rows, t + eta, d, budget));
    }
    PolyCone out = sum(pieces, budget);

    const RMatrix& gens = out.v();
    for (Index g = 0; g < gens.rows(); ++g)
        for (Index r = 0; r < ch.h().rows(); ++r)
            if (ch.h().row(r).dot(gens.row(g)) > 0)
                throw Error("b_eta escaped the source cone");
    return out;
}

TConeProfile t_cone_profile(const RiskMeasure& rm, const PortfolioSpec& v, int budget) {
    const FilteredSpace& sp = rm.space();
    const Index d = v.d();

    PolyCone polar_a = PolyCone::from_v(sp.states(), rm.q.vertex_matrix());
    DD mini = canonical_form(polar_a, budget);
    if (mini.lineality.rows() != 0) throw Error("scalar polar cone unexpectedly has lineality");

    TConeProfile out;
    std::vector<RVector> rhs_rows;
    for (int t = 0; t <= sp.horizon(); ++t) {
        std::vector<PolyCone> level;
        for (int a = 0; a < sp.atom_count(t); ++a) {
            const auto& atom = sp.atom(t, a);
            std::vector<RVector> gens;
            for (Index i = 0; i < mini.rays.rows(); ++i) {
                RVector g = RVector::Zero(d);
                for (int s : atom)
                    for (Index j = 0; j < d; ++j) g[j] += mini.rays(i, s) * v.assets()(s, j);
                if (!g.isZero()) gens.push_back(primitive(g));
            }
            PolyCone ht = dd_convert(PolyCone::from_v(d, rows_to_matrix(gens, d)), budget);
            for (Index r = 0; r < ht.h().rows(); ++r) {
                RVector row = RVector::Zero(sp.states());
                for (int s : atom)
                    for (Index j = 0; j < d; ++j) row[s] += ht.h()(r, j) * v.assets()(s, j);
                if (!row.isZero()) rhs_rows.push_back(primitive(row));
            }
            level.push_back(std::move(ht));
        }
        out.cones.push_back(std::move(level));
    }

    PolyCone rhs = PolyCone::from_h(sp.states(), rows_to_matrix(rhs_rows, sp.states()));
    out.identity_holds = equal(polar_a, rhs, budget);
    if (!out.identity_holds) {
        PolyCone rhsv = dd_convert(rhs, budget);
        for (Index g = 0; g < rhsv.v().rows(); ++g) {
            RVector cand = rhsv.v().row(g).transpose();
            if (!lp::in_cone(rm.q.vertex_matrix(), cand)) {
                out.mismatch = cand;
                break;
            }
        }
    }
    return out;
}

}  // namespace riskcone
