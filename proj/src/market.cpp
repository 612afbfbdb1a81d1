#include "riskcone/market.hpp"

#include <algorithm>

#include "riskcone/errors.hpp"
#include "riskcone/parallel.hpp"

namespace riskcone {
namespace {

RMatrix rows_to_matrix(const std::vector<RVector>& rows, Index dim) {
    RMatrix m(static_cast<Index>(rows.size()), dim);
    for (size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Index>(i)) = rows[i];
    return m;
}

// d-dimensional generator directions of a single-atom trading cone.
std::vector<RVector> atom_cone_dirs(const RMatrix& pi) {
    const Index d = pi.rows();
    std::vector<RVector> dirs;
    for (Index i = 0; i < d; ++i) {
        for (Index j = 0; j < d; ++j) {
            if (i == j) continue;
            RVector g = RVector::Zero(d);
            g[j] = 1;
            g[i] = -pi(i, j);
            dirs.push_back(std::move(g));
        }
    }
    for (Index k = 0; k < d; ++k) {
        RVector g = RVector::Zero(d);
        g[k] = -1;
        dirs.push_back(std::move(g));
    }
    return dirs;
}

}  // namespace

BidAskProcess::BidAskProcess(FilteredSpace space, Index d, std::vector<std::vector<RMatrix>> pi)
    : space_(std::move(space)), d_(d), pi_(std::move(pi)) {
    if (d_ < 1) throw ShapeError("asset count must be at least 1");
    if (static_cast<int>(pi_.size()) != space_.horizon() + 1)
        throw ShapeError("bid-ask process must cover levels 0..T");
    for (int t = 0; t <= space_.horizon(); ++t) {
        if (static_cast<int>(pi_[t].size()) != space_.atom_count(t))
            throw ShapeError("bid-ask matrices do not match atoms at level " + std::to_string(t));
        for (const RMatrix& m : pi_[t]) {
            if (m.rows() != d_ || m.cols() != d_) throw ShapeError("bid-ask matrix is not d x d");
            for (Index i = 0; i < d_; ++i) {
                if (m(i, i) != 1) throw RangeError("bid-ask diagonal must be 1");
                for (Index j = 0; j < d_; ++j)
                    if (m(i, j) <= 0) throw RangeError("bid-ask entries must be positive");
            }
            // netted-out chains: min products over up to d factors
            RMatrix best = m;
            for (Index len = 2; len <= d_; ++len) {
                RMatrix next = best;
                for (Index i = 0; i < d_; ++i)
                    for (Index j = 0; j < d_; ++j)
                        for (Index k = 0; k < d_; ++k) {
                            Rational prod = best(i, k) * m(k, j);
                            if (prod < next(i, j)) next(i, j) = prod;
                        }
                for (Index i = 0; i < d_; ++i)
                    for (Index j = 0; j < d_; ++j)
                        if (m(i, j) > next(i, j))
                            throw RangeError("advantageous chain in bid-ask matrix");
                best = next;
            }
        }
    }
}

const RMatrix& BidAskProcess::pi(int t, int atom) const {
    space_.check_level(t);
    return pi_[t][atom];
}

RMatrix BidAskProcess::terminal_ask() const {
    const int t = space_.horizon();
    RMatrix ask(space_.states(), d_);
    for (int s = 0; s < space_.states(); ++s) {
        const RMatrix& m = pi_[t][space_.atom_of(t, s)];
        ask(s, 0) = 1;
        for (Index j = 1; j < d_; ++j) ask(s, j) = m(0, j);
    }
    return ask;
}

RMatrix BidAskProcess::terminal_bid() const {
    const int t = space_.horizon();
    RMatrix bid(space_.states(), d_);
    for (int s = 0; s < space_.states(); ++s) {
        const RMatrix& m = pi_[t][space_.atom_of(t, s)];
        bid(s, 0) = 1;
        for (Index j = 1; j < d_; ++j) bid(s, j) = Rational(1) / m(j, 0);
    }
    return bid;
}

PolyCone trading_cone(const BidAskProcess& pi, int t) {
    const FilteredSpace& sp = pi.space();
    sp.check_level(t);
    const Index d = pi.d();
    std::vector<RVector> gens;
    for (int a = 0; a < sp.atom_count(t); ++a) {
        for (const RVector& dir : atom_cone_dirs(pi.pi(t, a))) {
            RVector g = RVector::Zero(sp.states() * d);
            for (int s : sp.atom(t, a))
                for (Index j = 0; j < d; ++j) g[flat_index(s, j, d)] = dir[j];
            gens.push_back(primitive(g));
        }
    }
    return PolyCone::from_v(sp.states() * d, rows_to_matrix(gens, sp.states() * d));
}

PolyCone claims_cone(const BidAskProcess& pi) {
    std::vector<PolyCone> cones;
    for (int t = 0; t <= pi.space().horizon(); ++t) cones.push_back(trading_cone(pi, t));
    return sum(cones);
}

PolyCone consistent_price_cone(const BidAskProcess& pi, const Measure& p) {
    const FilteredSpace& sp = pi.space();
    if (!p.strictly_positive()) throw DivisionByZero("storage measure must be strictly positive");
    const Index d = pi.d();
    const int T = sp.horizon();
    std::vector<RVector> rows;
    for (int t = 0; t <= T; ++t) {
        for (int a = 0; a < sp.atom_count(t); ++a) {
            for (const RVector& dir : atom_cone_dirs(pi.pi(t, a))) {
                RVector row = RVector::Zero(sp.states() * d);
                for (int s : sp.atom(t, a))
                    for (Index j = 0; j < d; ++j) row[flat_index(s, j, d)] = p(s) * dir[j];
                rows.push_back(primitive(row));
            }
        }
    }
    // F_T-measurability as equality pairs
    for (int a = 0; a < sp.atom_count(T); ++a) {
        const auto& atom = sp.atom(T, a);
        for (size_t i = 1; i < atom.size(); ++i) {
            for (Index j = 0; j < d; ++j) {
                RVector row = RVector::Zero(sp.states() * d);
                row[flat_index(atom[i], j, d)] = 1;
                row[flat_index(atom[0], j, d)] = -1;
                rows.push_back(row);
                rows.push_back(-row);
            }
        }
    }
    return PolyCone::from_h(sp.states() * d, rows_to_matrix(rows, sp.states() * d));
}

std::optional<RVector> find_positive_cpp(const BidAskProcess& pi, const Measure& p) {
    PolyCone cone = consistent_price_cone(pi, p);
    lp::Problem prob;
    prob.vars = cone.dim();
    prob.nonneg.assign(prob.vars, 0);
    for (Index r = 0; r < cone.h().rows(); ++r) {
        lp::Constraint c;
        c.coeffs = cone.h().row(r).transpose();
        c.rel = lp::Rel::Le;
        c.rhs = 0;
        prob.rows.push_back(std::move(c));
    }
    for (Index v = 0; v < prob.vars; ++v) {
        lp::Constraint c;
        c.coeffs = RVector::Zero(prob.vars);
        c.coeffs[v] = 1;
        c.rel = lp::Rel::Ge;
        c.rhs = 1;
        prob.rows.push_back(std::move(c));
    }
    return lp::solve_feasible(prob);
}

bool is_arbitrage_free(const BidAskProcess& pi, const Measure& p) {
    return find_positive_cpp(pi, p).has_value();
}

PriceProcess make_price_process(const BidAskProcess& pi, const Measure& p,
                                const RVector& terminal_flat) {
    const FilteredSpace& sp = pi.space();
    const Index d = pi.d();
    if (terminal_flat.size() != sp.states() * d) throw ShapeError("terminal value size mismatch");
    if (!sp.is_measurable(unflatten_field(terminal_flat, d), sp.horizon()))
        throw ShapeError("terminal value is not F_T-measurable");

    PriceProcess out;
    out.consistent = true;
    out.strictly_positive = true;
    for (int t = 0; t <= sp.horizon(); ++t) {
        RMatrix zt(sp.atom_count(t), d);
        for (int a = 0; a < sp.atom_count(t); ++a) {
            const auto& atom = sp.atom(t, a);
            Rational pa = p.atom_mass(atom);
            for (Index j = 0; j < d; ++j) {
                Rational sum = 0;
                for (int s : atom) sum += p(s) * terminal_flat[flat_index(s, j, d)];
                zt(a, j) = sum / pa;
            }
            for (const RVector& dir : atom_cone_dirs(pi.pi(t, a)))
                if (zt.row(a).dot(dir.transpose()) > 0) out.consistent = false;
            for (Index j = 0; j < d; ++j)
                if (zt(a, j) <= 0) out.strictly_positive = false;
        }
        out.z.push_back(std::move(zt));
    }
    return out;
}

AugmentedMarket augment(const BidAskProcess& pi, const Rational& epsilon, const Measure& p) {
    if (epsilon <= 0) throw RangeError("epsilon must be positive");
    const FilteredSpace& sp = pi.space();
    const Index d = pi.d();
    const int T = sp.horizon();
    const int labels = 1 << (d - 1);
    const int nhat = sp.states() * labels;

    std::vector<std::vector<std::vector<int>>> parts;
    for (int t = 0; t <= T; ++t) {
        std::vector<std::vector<int>> level;
        for (int a = 0; a < sp.atom_count(t); ++a) {
            std::vector<int> atom;
            for (int s : sp.atom(t, a))
                for (int l = 0; l < labels; ++l) atom.push_back(s * labels + l);
            level.push_back(std::move(atom));
        }
        parts.push_back(std::move(level));
    }
    {
        std::vector<std::vector<int>> level;
        for (int a = 0; a < sp.atom_count(T); ++a) {
            for (int l = 0; l < labels; ++l) {
                std::vector<int> atom;
                for (int s : sp.atom(T, a)) atom.push_back(s * labels + l);
                level.push_back(std::move(atom));
            }
        }
        parts.push_back(std::move(level));
    }
    FilteredSpace aug(nhat, std::move(parts));

    RVector phat(nhat);
    for (int s = 0; s < sp.states(); ++s)
        for (int l = 0; l < labels; ++l) phat[s * labels + l] = p(s) / labels;

    RMatrix ask = pi.terminal_ask();
    RMatrix bid = pi.terminal_bid();
    RMatrix y(nhat, d);
    for (int s = 0; s < sp.states(); ++s) {
        for (int l = 0; l < labels; ++l) {
            y(s * labels + l, 0) = 1;
            for (Index j = 1; j < d; ++j) {
                bool up = (l >> (j - 1)) & 1;
                y(s * labels + l, j) = up ? Rational((1 + epsilon) * ask(s, j))
                                          : Rational((1 - epsilon) * bid(s, j));
            }
        }
    }

    return AugmentedMarket{pi, p, epsilon, labels, std::move(aug), Measure(std::move(phat)),
                           std::move(y)};
}

RVector lambda_decomposition(const RMatrix& zbar, const AugmentedMarket& am) {
    const FilteredSpace& sp = am.base.space();
    const Index d = am.base.d();
    if (zbar.rows() != sp.states() || zbar.cols() != d) throw ShapeError("zbar shape mismatch");
    RMatrix ask = am.base.terminal_ask();
    RMatrix bid = am.base.terminal_bid();

    RVector lam(sp.states() * am.labels);
    for (int s = 0; s < sp.states(); ++s) {
        if (zbar(s, 0) != 1) throw RangeError("first coordinate of a normalized price is 1");
        std::vector<Rational> theta(d);
        for (Index j = 1; j < d; ++j) {
            if (zbar(s, j) < bid(s, j) || zbar(s, j) > ask(s, j))
                throw RangeError("normalized price outside its bid-ask interval");
            Rational lo = (1 - am.epsilon) * bid(s, j);
            Rational hi = (1 + am.epsilon) * ask(s, j);
            theta[j] = (zbar(s, j) - lo) / (hi - lo);
        }
        for (int l = 0; l < am.labels; ++l) {
            Rational v = 1;
            for (Index j = 1; j < d; ++j) {
                bool up = (l >> (j - 1)) & 1;
                v *= up ? theta[j] : 1 - theta[j];
            }
            lam[s * am.labels + l] = v;
        }
    }
    return lam;
}

namespace {

// Pushes a terminal cone member through the barycentric map, localized to one
// F_0-atom, with `fill` supplying the conditional masses off that atom.
RVector vertex_from_ray(const AugmentedMarket& am, const RVector& ray_flat, int f0_atom,
                        const RVector& fill_masses) {
    const FilteredSpace& sp = am.base.space();
    const Measure& p = am.base_p;
    const Index d = am.base.d();
    const auto& atom = sp.atom(0, f0_atom);

    Rational denom = 0;
    for (int s : atom) denom += p(s) * ray_flat[flat_index(s, 0, d)];
    if (denom == 0) throw Error("ray carries no mass on the requested atom");
    Rational pa = p.atom_mass(atom);

    RVector out = fill_masses;
    for (int s : atom) {
        Rational z1 = ray_flat[flat_index(s, 0, d)];
        if (z1 == 0) {
            for (int l = 0; l < am.labels; ++l) out[s * am.labels + l] = 0;
            continue;
        }
        RMatrix zbar_row(1, d);
        std::vector<Rational> theta(d);
        RMatrix bid = am.base.terminal_bid();
        RMatrix ask = am.base.terminal_ask();
        for (Index j = 1; j < d; ++j) {
            Rational zb = ray_flat[flat_index(s, j, d)] / z1;
            Rational lo = (1 - am.epsilon) * bid(s, j);
            Rational hi = (1 + am.epsilon) * ask(s, j);
            theta[j] = (zb - lo) / (hi - lo);
        }
        for (int l = 0; l < am.labels; ++l) {
            Rational lam = 1;
            for (Index j = 1; j < d; ++j) {
                bool up = (l >> (j - 1)) & 1;
                lam *= up ? theta[j] : 1 - theta[j];
            }
            out[s * am.labels + l] = p(s) * z1 * lam * pa / denom;
        }
    }
    return out;
}

}  // namespace

MarketQSet risk_q_set(const BidAskProcess& pi, const Rational& epsilon, const Measure& p,
                      int budget) {
    auto positive = find_positive_cpp(pi, p);
    if (!positive) throw NoCPPError("no strictly positive consistent price process exists");

    AugmentedMarket am = augment(pi, epsilon, p);
    const FilteredSpace& sp = pi.space();

    PolyCone cpp = consistent_price_cone(pi, p);
    DD dd = canonical_form(cpp, budget);
    if (dd.lineality.rows() != 0) throw Error("consistent-price cone unexpectedly has lineality");

    // reference: the strictly positive member, normalized per F_0-atom
    RVector ref = RVector::Zero(sp.states() * am.labels);
    for (int a = 0; a < sp.atom_count(0); ++a) ref = vertex_from_ray(am, *positive, a, ref);

    std::vector<RVector> rays;
    std::vector<Measure> vertices;
    std::vector<char> positive_flag;
    for (Index i = 0; i < dd.rays.rows(); ++i) {
        RVector ray = dd.rays.row(i).transpose();
        rays.push_back(ray);
        for (int a = 0; a < sp.atom_count(0); ++a) {
            Rational mass_on_atom = 0;
            for (int s : sp.atom(0, a)) mass_on_atom += p(s) * ray[flat_index(s, 0, pi.d())];
            if (mass_on_atom == 0) continue;
            RVector masses = vertex_from_ray(am, ray, a, ref);
            bool strict = true;
            for (Index x = 0; x < masses.size(); ++x)
                if (masses[x] <= 0) { strict = false; break; }
            Measure m(masses);
            bool dup = false;
            for (const Measure& v : vertices)
                if (v == m) { dup = true; break; }
            if (dup) continue;
            vertices.push_back(std::move(m));
            positive_flag.push_back(strict ? 1 : 0);
        }
    }
    vertices.push_back(Measure(ref));
    positive_flag.push_back(1);

    TestSet ts(am.space, std::move(vertices), static_cast<int>(positive_flag.size()) - 1);
    return MarketQSet{std::move(am), std::move(ts), std::move(positive_flag), std::move(rays),
                      *positive};
}

Thm83Report verify_thm_8_3(const BidAskProcess& pi, const Rational& epsilon, const Measure& p,
                           int drop_vertex, int budget) {
    Thm83Report report;
    MarketQSet qs = risk_q_set(pi, epsilon, p, budget);
    const FilteredSpace& sp = pi.space();
    const Index d = pi.d();
    const int T = sp.horizon();
    const int labels = qs.am.labels;

    std::vector<Measure> verts = qs.testset.vertices();
    if (drop_vertex >= 0) {
        if (drop_vertex >= static_cast<int>(verts.size()) - 1)
            throw ShapeError("drop index must name a non-reference vertex");
        verts.erase(verts.begin() + drop_vertex);
    }

    PolyCone claims = claims_cone(pi);
    const RMatrix& gens = claims.v();

    // (a) every attainable claim prices nonpositively under every vertex
    for (Index g = 0; g < gens.rows(); ++g) {
        for (size_t i = 0; i < verts.size(); ++i) {
            Rational val = 0;
            for (int s = 0; s < sp.states(); ++s)
                for (int l = 0; l < labels; ++l) {
                    Rational mass = verts[i](s * labels + l);
                    if (mass == 0) continue;
                    for (Index j = 0; j < d; ++j)
                        val += mass * qs.am.y(s * labels + l, j) * gens(g, flat_index(s, j, d));
                }
            if (val > 0) {
                report.direction_a = false;
                report.failures.push_back("claims generator " + std::to_string(g) +
                                          " prices positively under vertex " + std::to_string(i));
            }
        }
    }

    // (b) per F_0-atom: acceptance-cone extreme rays must be attainable
    for (int a0 = 0; a0 < sp.atom_count(0); ++a0) {
        std::vector<int> atoms_t;  // F_T-atoms inside this F_0-atom
        for (int a = 0; a < sp.atom_count(T); ++a)
            if (sp.atom_of(0, sp.atom(T, a).front()) == a0) atoms_t.push_back(a);
        const Index red = static_cast<Index>(atoms_t.size()) * d;

        std::vector<RVector> rows;
        for (const Measure& q : verts) {
            RVector row = RVector::Zero(red);
            for (size_t bi = 0; bi < atoms_t.size(); ++bi)
                for (int s : sp.atom(T, atoms_t[bi]))
                    for (int l = 0; l < labels; ++l) {
                        Rational mass = q(s * labels + l);
                        if (mass == 0) continue;
                        for (Index j = 0; j < d; ++j)
                            row[static_cast<Index>(bi) * d + j] += mass * qs.am.y(s * labels + l, j);
                    }
            if (!row.isZero()) rows.push_back(primitive(row));
        }
        DD acc = extreme_rays(rows_to_matrix(rows, red), red, budget);

        std::vector<RVector> to_check;
        for (Index i = 0; i < acc.rays.rows(); ++i) to_check.push_back(acc.rays.row(i).transpose());
        for (Index i = 0; i < acc.lineality.rows(); ++i) {
            to_check.push_back(acc.lineality.row(i).transpose());
            to_check.push_back(RVector(-acc.lineality.row(i).transpose()));
        }

        std::vector<char> ok(to_check.size(), 0);
        parallel_for(to_check.size(), [&](size_t i) {
            RVector full = RVector::Zero(sp.states() * d);
            for (size_t bi = 0; bi < atoms_t.size(); ++bi)
                for (int s : sp.atom(T, atoms_t[bi]))
                    for (Index j = 0; j < d; ++j)
                        full[flat_index(s, j, d)] = to_check[i][static_cast<Index>(bi) * d + j];
            ok[i] = lp::in_cone(gens, full) ? 1 : 0;
        });
        report.rays_checked += static_cast<int>(to_check.size());
        for (size_t i = 0; i < to_check.size(); ++i) {
            if (!ok[i]) {
                report.direction_b = false;
                report.failures.push_back("acceptance ray " + std::to_string(i) +
                                          " on level-0 atom " + std::to_string(a0) +
                                          " is not attainable");
            }
        }
    }
    return report;
}

PolyCone augmented_terminal_ft_section(const AugmentedMarket& am, int budget) {
    const FilteredSpace& sp = am.base.space();
    const Index d = am.base.d();
    const int T = sp.horizon();

    std::vector<RVector> gens;
    for (int a = 0; a < sp.atom_count(T); ++a) {
        // intersection over labels of the frictionless corner cones {x : Y.x <= 0}
        std::vector<RVector> rows;
        for (int l = 0; l < am.labels; ++l) {
            int s0 = sp.atom(T, a).front();
            rows.push_back(am.y.row(s0 * am.labels + l).transpose());
        }
        DD dd = extreme_rays(rows_to_matrix(rows, d), d, budget);
        auto lift = [&](const RVector& dir) {
            RVector g = RVector::Zero(sp.states() * d);
            for (int s : sp.atom(T, a))
                for (Index j = 0; j < d; ++j) g[flat_index(s, j, d)] = dir[j];
            return g;
        };
        for (Index i = 0; i < dd.rays.rows(); ++i) gens.push_back(lift(dd.rays.row(i).transpose()));
        for (Index i = 0; i < dd.lineality.rows(); ++i) {
            gens.push_back(lift(dd.lineality.row(i).transpose()));
            gens.push_back(lift(RVector(-dd.lineality.row(i).transpose())));
        }
    }
    return PolyCone::from_v(sp.states() * d, rows_to_matrix(gens, sp.states() * d));
}

}  // namespace riskcone
