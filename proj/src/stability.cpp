#include "riskcone/stability.hpp"

#include <algorithm>

#include "riskcone/errors.hpp"

namespace riskcone {
namespace {

Rational atom_pairing(const RVector& mass, const RVector& u, const std::vector<int>& atom) {
    Rational s = 0;
    for (int x : atom) s += mass[x] * u[x];
    return s;
}

RMatrix rows_to_matrix(const std::vector<RVector>& rows, Index dim) {
    RMatrix m(static_cast<Index>(rows.size()), dim);
    for (size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Index>(i)) = rows[i];
    return m;
}

// H-rep of cone{vertex masses restricted to the atom} in R^{|atom|}.
RMatrix restricted_cone_rows(const RiskMeasure& rm, const std::vector<int>& atom, int dd_budget) {
    const int k = rm.q.size();
    RMatrix gens(k, static_cast<Index>(atom.size()));
    for (int i = 0; i < k; ++i)
        for (size_t s = 0; s < atom.size(); ++s) gens(i, static_cast<Index>(s)) = rm.q.vertex(i)(atom[s]);
    DD dd = extreme_rays(gens, static_cast<Index>(atom.size()), dd_budget);
    RMatrix rows(dd.rays.rows() + 2 * dd.lineality.rows(), static_cast<Index>(atom.size()));
    rows.topRows(dd.rays.rows()) = dd.rays;
    rows.middleRows(dd.rays.rows(), dd.lineality.rows()) = dd.lineality;
    rows.bottomRows(dd.lineality.rows()) = -dd.lineality;
    return rows;
}

struct Candidate {
    RVector pasted;                    // X masses
    RVector target;                    // Z masses
    std::vector<RVector> donor;        // per F_t-atom polytope member
    std::vector<RVector> alpha_field;  // per F_t-atom: scale per fine atom inside
};

std::vector<RVector> sorted_rows(const RMatrix& m) {
    std::vector<RVector> rows;
    for (Index i = 0; i < m.rows(); ++i) rows.push_back(m.row(i).transpose());
    std::sort(rows.begin(), rows.end(),
              [](const RVector& a, const RVector& b) { return lex_compare(a, b) < 0; });
    return rows;
}

// Walks the prefix chain of a multi-block pasting and emits the first
// two-block step that leaves the cone (Thm-style induction order).
std::optional<PastingWitness> to_two_block_witness(const RiskMeasure& rm, const PortfolioSpec& u,
                                                   int t, int eta, const Candidate& cand) {
    const FilteredSpace& sp = rm.space();
    const RMatrix verts = rm.q.vertex_matrix();
    const int fine = t + 1 - eta;
    const int m = sp.atom_count(t);

    RVector prev = cand.target;
    for (int l = 0; l < m; ++l) {
        RVector cur = prev;
        for (int s : sp.atom(t, l)) {
            int b = sp.atom_of(fine, s);
            cur[s] = cand.alpha_field[l][b] * cand.donor[l][s];
        }
        if (!lp::in_cone(verts, cur)) {
            PastingWitness w;
            w.t = t;
            w.eta = eta;
            w.target = prev;
            w.donor = cand.donor[l];
            w.f_atoms = {l};
            w.alpha = RVector::Zero(sp.atom_count(fine));
            w.beta = RVector::Constant(sp.atom_count(fine), 1);
            for (int s : sp.atom(t, l)) w.alpha[sp.atom_of(fine, s)] = cand.alpha_field[l][sp.atom_of(fine, s)];
            w.pasted = cur;
            if (!verify_witness(rm, u, w)) throw Error("witness failed its own replay");
            return w;
        }
        prev = cur;
    }
    return std::nullopt;  // every prefix stayed inside; candidate was spurious
}

// eta = 1: one feasibility region per level; per-atom donors are exactly the
// localized vertex cones, so a single polyhedron captures every legal pasting.
std::optional<PastingWitness> search_weak_level(const RiskMeasure& rm, const PortfolioSpec& u,
                                                int t, long& budget, int dd_budget) {
    const FilteredSpace& sp = rm.space();
    const int n = sp.states();
    const int k = rm.q.size();
    const Index vars = n + k;

    std::vector<lp::Constraint> rows;
    for (int a = 0; a < sp.atom_count(t); ++a) {
        const auto& atom = sp.atom(t, a);
        RMatrix local = restricted_cone_rows(rm, atom, dd_budget);
        for (Index r = 0; r < local.rows(); ++r) {
            lp::Constraint c;
            c.coeffs = RVector::Zero(vars);
            for (size_t s = 0; s < atom.size(); ++s) c.coeffs[atom[s]] = local(r, static_cast<Index>(s));
            c.rel = lp::Rel::Le;
            c.rhs = 0;
            rows.push_back(std::move(c));
        }
        for (Index j = 0; j < u.d(); ++j) {
            lp::Constraint c;
            c.coeffs = RVector::Zero(vars);
            for (int s : atom) c.coeffs[s] = u.assets()(s, j);
            for (int i = 0; i < k; ++i)
                c.coeffs[n + i] = -atom_pairing(rm.q.vertex(i).mass(), u.asset(j), atom);
            c.rel = lp::Rel::Eq;
            c.rhs = 0;
            rows.push_back(std::move(c));
        }
    }
    for (int i = 0; i < k; ++i) {
        lp::Constraint c;
        c.coeffs = RVector::Zero(vars);
        c.coeffs[n + i] = -1;
        c.rel = lp::Rel::Le;
        c.rhs = 0;
        rows.push_back(std::move(c));
    }
    {
        lp::Constraint c;
        c.coeffs = RVector::Zero(vars);
        for (int i = 0; i < k; ++i) c.coeffs[n + i] = 1;
        c.rel = lp::Rel::Eq;
        c.rhs = 1;
        rows.push_back(std::move(c));
    }

    PolyhedronVertices region = enumerate_polyhedron(rows, vars, dd_budget);
    if (region.rays.rows() != 0 || region.lineality.rows() != 0)
        throw Error("pasting region unexpectedly unbounded");

    const RMatrix verts = rm.q.vertex_matrix();
    for (const RVector& point : sorted_rows(region.vertices)) {
        if (--budget < 0) throw BudgetExhausted("pasting search budget exhausted");
        RVector x = point.head(n);
        if (lp::in_cone(verts, x)) continue;

        Candidate cand;
        cand.pasted = x;
        cand.target = RVector::Zero(n);
        for (int i = 0; i < k; ++i) cand.target += point[n + i] * rm.q.vertex(i).mass();
        for (int a = 0; a < sp.atom_count(t); ++a) {
            const auto& atom = sp.atom(t, a);
            RMatrix gens(k, static_cast<Index>(atom.size()));
            RVector xa(static_cast<Index>(atom.size()));
            for (size_t s = 0; s < atom.size(); ++s) {
                xa[static_cast<Index>(s)] = x[atom[s]];
                for (int i = 0; i < k; ++i) gens(i, static_cast<Index>(s)) = rm.q.vertex(i)(atom[s]);
            }
            auto coeffs = lp::cone_coefficients(gens, xa);
            if (!coeffs) throw Error("per-atom recovery LP failed");
            Rational total = coeffs->sum();
            RVector donor = cand.target;
            if (total > 0) {
                donor = RVector::Zero(n);
                for (int i = 0; i < k; ++i) donor += (*coeffs)[i] * rm.q.vertex(i).mass();
                donor /= total;
            }
            cand.donor.push_back(std::move(donor));
            cand.alpha_field.push_back(RVector::Constant(sp.atom_count(t), total));
        }
        if (auto w = to_two_block_witness(rm, u, t, 1, cand)) return w;
    }
    return std::nullopt;
}

// eta = 0: donors are one vertex per level-t atom (complete by the
// multi-affine argument); the alpha field over level t+1 atoms and the
// target weights form the feasibility polytope scanned per donor map.
std::optional<PastingWitness> search_strong_level(const RiskMeasure& rm, const PortfolioSpec& u,
                                                  int t, long& budget, int dd_budget) {
    const FilteredSpace& sp = rm.space();
    const int n = sp.states();
    const int k = rm.q.size();
    const int m = sp.atom_count(t);
    const int fine = sp.atom_count(t + 1);
    const Index vars = fine + k;
    const RMatrix verts = rm.q.vertex_matrix();

    std::vector<int> donor_map(m, 0);
    while (true) {
        if (--budget < 0) throw BudgetExhausted("pasting search budget exhausted");

        std::vector<lp::Constraint> rows;
        for (int a = 0; a < m; ++a) {
            const Measure& donor = rm.q.vertex(donor_map[a]);
            for (Index j = 0; j < u.d(); ++j) {
                lp::Constraint c;
                c.coeffs = RVector::Zero(vars);
                for (int b : sp.children(t, a))
                    c.coeffs[b] = atom_pairing(donor.mass(), u.asset(j), sp.atom(t + 1, b));
                for (int i = 0; i < k; ++i)
                    c.coeffs[fine + i] =
                        -atom_pairing(rm.q.vertex(i).mass(), u.asset(j), sp.atom(t, a));
                c.rel = lp::Rel::Eq;
                c.rhs = 0;
                rows.push_back(std::move(c));
            }
            for (int b : sp.children(t, a)) {
                lp::Constraint c;
                c.coeffs = RVector::Zero(vars);
                c.coeffs[b] = donor.atom_mass(sp.atom(t + 1, b)) == 0 ? 1 : -1;
                c.rel = donor.atom_mass(sp.atom(t + 1, b)) == 0 ? lp::Rel::Eq : lp::Rel::Le;
                c.rhs = 0;
                rows.push_back(std::move(c));
            }
        }
        for (int i = 0; i < k; ++i) {
            lp::Constraint c;
            c.coeffs = RVector::Zero(vars);
            c.coeffs[fine + i] = -1;
            c.rel = lp::Rel::Le;
            c.rhs = 0;
            rows.push_back(std::move(c));
        }
        {
            lp::Constraint c;
            c.coeffs = RVector::Zero(vars);
            for (int i = 0; i < k; ++i) c.coeffs[fine + i] = 1;
            c.rel = lp::Rel::Eq;
            c.rhs = 1;
            rows.push_back(std::move(c));
        }

        PolyhedronVertices region = enumerate_polyhedron(rows, vars, dd_budget);
        if (region.rays.rows() != 0 || region.lineality.rows() != 0)
            throw Error("pasting region unexpectedly unbounded");

        for (const RVector& point : sorted_rows(region.vertices)) {
            if (--budget < 0) throw BudgetExhausted("pasting search budget exhausted");
            RVector x = RVector::Zero(n);
            for (int s = 0; s < n; ++s) {
                int a = sp.atom_of(t, s);
                int b = sp.atom_of(t + 1, s);
                x[s] = point[b] * rm.q.vertex(donor_map[a])(s);
            }
            if (lp::in_cone(verts, x)) continue;

            Candidate cand;
            cand.pasted = x;
            cand.target = RVector::Zero(n);
            for (int i = 0; i < k; ++i) cand.target += point[fine + i] * rm.q.vertex(i).mass();
            for (int a = 0; a < m; ++a) {
                cand.donor.push_back(rm.q.vertex(donor_map[a]).mass());
                RVector af = RVector::Zero(fine);
                for (int b : sp.children(t, a)) af[b] = point[b];
                cand.alpha_field.push_back(std::move(af));
            }
            if (auto w = to_two_block_witness(rm, u, t, 0, cand)) return w;
        }

        // next donor map (lexicographic base-k counter)
        int pos = m - 1;
        while (pos >= 0 && donor_map[pos] == k - 1) donor_map[pos--] = 0;
        if (pos < 0) break;
        ++donor_map[pos];
    }
    return std::nullopt;
}

}  // namespace

std::optional<PastingWitness> falsify_m_stability(const RiskMeasure& rm, const PortfolioSpec& u,
                                                  int eta, long budget, int dd_budget) {
    if (eta != 0 && eta != 1) throw LevelOutOfRange("eta must be 0 or 1");
    const FilteredSpace& sp = rm.space();
    const int t_max = sp.horizon() - 1 + eta;
    for (int t = 0; t <= t_max; ++t) {
        auto w = eta == 1 ? search_weak_level(rm, u, t, budget, dd_budget)
                          : search_strong_level(rm, u, t, budget, dd_budget);
        if (w) return w;
    }
    return std::nullopt;
}

bool verify_witness(const RiskMeasure& rm, const PortfolioSpec& u, const PastingWitness& w) {
    const FilteredSpace& sp = rm.space();
    const int fine = w.t + 1 - w.eta;
    if (w.eta != 0 && w.eta != 1) return false;
    if (w.t < 0 || w.t > sp.horizon() - 1 + w.eta || fine > sp.horizon()) return false;
    if (w.alpha.size() != sp.atom_count(fine) || w.beta.size() != sp.atom_count(fine)) return false;
    for (Index i = 0; i < w.alpha.size(); ++i)
        if (w.alpha[i] < 0 || w.beta[i] < 0) return false;

    std::vector<char> in_f(sp.atom_count(w.t), 0);
    for (int a : w.f_atoms) {
        if (a < 0 || a >= sp.atom_count(w.t)) return false;
        in_f[a] = 1;
    }

    RVector x(sp.states());
    for (int s = 0; s < sp.states(); ++s) {
        int b = sp.atom_of(fine, s);
        x[s] = in_f[sp.atom_of(w.t, s)] ? w.alpha[b] * w.donor[s] : w.beta[b] * w.target[s];
    }
    if (x != w.pasted) return false;

    for (int a = 0; a < sp.atom_count(w.t); ++a)
        for (Index j = 0; j < u.d(); ++j)
            if (atom_pairing(x, u.asset(j), sp.atom(w.t, a)) !=
                atom_pairing(w.target, u.asset(j), sp.atom(w.t, a)))
                return false;

    return !lp::in_cone(rm.q.vertex_matrix(), x);
}

StabilityVerdict is_m_stable(const RiskMeasure& rm, const PortfolioSpec& u, int eta, long budget,
                             int dd_budget) {
    StabilityVerdict v;
    v.eta = eta;
    v.method = "duality";
    v.stable = is_represented(rm, u, eta, dd_budget);
    if (v.stable) return v;
    try {
        v.witness = falsify_m_stability(rm, u, eta, budget, dd_budget);
        if (!v.witness) v.diagnostic = "pasting search exhausted without a witness";
    } catch (const BudgetExhausted& e) {
        v.diagnostic = e.what();
    }
    return v;
}

PortfolioSpec finite_strong_assets(const RiskMeasure& rm) {
    const FilteredSpace& sp = rm.space();
    std::vector<RVector> cols;
    cols.push_back(RVector::Constant(sp.states(), 1));
    for (int s = 0; s < sp.states(); ++s) {
        RVector v = RVector::Constant(sp.states(), 1);
        v[s] = 2;
        cols.push_back(std::move(v));
    }
    return portfolio_from_columns(rm, cols);
}

bool check_pasting_density(const RiskMeasure& rm, const PortfolioSpec& u, int q_idx,
                           int qprime_idx, const std::vector<int>& tau) {
    const FilteredSpace& sp = rm.space();
    if (q_idx < 0 || q_idx >= rm.q.size() || qprime_idx < 0 || qprime_idx >= rm.q.size())
        throw ShapeError("vertex index out of range");
    const Measure& q = rm.q.vertex(q_idx);
    const Measure& qp = rm.q.vertex(qprime_idx);
    if (!qp.strictly_positive())
        throw RangeError("the quotient measure must be strictly positive");
    if (static_cast<int>(tau.size()) != sp.states()) throw ShapeError("tau size mismatch");

    // adapted: each stopped region {tau = t} is a union of level-t atoms
    for (int s = 0; s < sp.states(); ++s) {
        int t = tau[s];
        if (t < 0 || t > sp.horizon()) throw LevelOutOfRange("tau outside 0..T");
        for (int s2 : sp.atom(t, sp.atom_of(t, s)))
            if (tau[s2] != t) throw ShapeError("tau is not a stopping time");
    }

    // premise: conditional asset prices agree at tau wherever q charges the atom
    for (int s = 0; s < sp.states(); ++s) {
        const auto& atom = sp.atom(tau[s], sp.atom_of(tau[s], s));
        Rational qa = q.atom_mass(atom);
        if (qa == 0) continue;
        Rational qpa = qp.atom_mass(atom);
        for (Index j = 0; j < u.d(); ++j) {
            if (atom_pairing(q.mass(), u.asset(j), atom) * qpa !=
                atom_pairing(qp.mass(), u.asset(j), atom) * qa)
                return true;  // premise fails: vacuous truth
        }
    }

    RVector pasted(sp.states());
    for (int s = 0; s < sp.states(); ++s) {
        const auto& atom = sp.atom(tau[s], sp.atom_of(tau[s], s));
        pasted[s] = qp(s) * q.atom_mass(atom) / qp.atom_mass(atom);
    }
    return lp::in_polytope(rm.q.vertex_matrix(), pasted);
}

}  // namespace riskcone
