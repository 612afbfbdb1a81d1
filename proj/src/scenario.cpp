#include "riskcone/scenario.hpp"

#include <chrono>
#include <fstream>

#include "riskcone/errors.hpp"

namespace riskcone {

using nlohmann::json;

RVector parse_rational_vector(const json& arr, const std::string& where) {
    if (!arr.is_array()) throw SchemaError(where + ": expected an array of rational strings");
    RVector v(arr.size());
    for (size_t i = 0; i < arr.size(); ++i) {
        if (arr[i].is_number_integer())
            v[static_cast<Index>(i)] = Rational(arr[i].get<long>());
        else if (arr[i].is_string())
            v[static_cast<Index>(i)] = parse_rational(arr[i].get<std::string>());
        else
            throw SchemaError(where + "/" + std::to_string(i) + ": expected rational string");
    }
    return v;
}

namespace {

json vector_to_json(const RVector& v) {
    json arr = json::array();
    for (Index i = 0; i < v.size(); ++i) arr.push_back(to_string(v[i]));
    return arr;
}

json matrix_to_json(const RMatrix& m) {
    json arr = json::array();
    for (Index i = 0; i < m.rows(); ++i) arr.push_back(vector_to_json(m.row(i).transpose()));
    return arr;
}

FilteredSpace parse_space(const json& doc) {
    if (!doc.contains("states") || !doc.contains("partitions"))
        throw SchemaError("/space: needs states and partitions");
    int n = doc["states"].get<int>();
    std::vector<std::vector<std::vector<int>>> parts;
    for (const auto& level : doc["partitions"]) {
        std::vector<std::vector<int>> atoms;
        for (const auto& atom : level) {
            std::vector<int> a;
            for (const auto& s : atom) a.push_back(s.get<int>() - 1);  // 1-based on the wire
            atoms.push_back(std::move(a));
        }
        parts.push_back(std::move(atoms));
    }
    return FilteredSpace(n, std::move(parts));
}

}  // namespace

std::string atom_key(const FilteredSpace& sp, int t, int atom) {
    std::string key;
    for (int s : sp.atom(t, atom)) {
        if (!key.empty()) key += ",";
        key += std::to_string(s + 1);
    }
    return key;
}

RVector resolve_vector(const Scenario& sc, const std::string& name, bool claim_ok) {
    if (name == "1") return RVector::Constant(sc.space.states(), 1);
    auto a = sc.assets.find(name);
    if (a != sc.assets.end()) return a->second;
    if (claim_ok) {
        auto c = sc.claims.find(name);
        if (c != sc.claims.end()) return c->second;
    }
    throw SchemaError("unknown vector name: " + name);
}

PortfolioSpec resolve_portfolio(const Scenario& sc, const RiskMeasure& rm,
                                const std::vector<std::string>& names, bool relaxed) {
    if (names.empty()) throw SchemaError("portfolio needs at least one asset name");
    RMatrix m(sc.space.states(), static_cast<Index>(names.size()));
    for (size_t j = 0; j < names.size(); ++j)
        m.col(static_cast<Index>(j)) = resolve_vector(sc, names[j], false);
    return relaxed ? PortfolioSpec::relaxed(std::move(m)) : PortfolioSpec::make(rm, std::move(m));
}

Scenario parse_scenario(const json& doc) {
    if (!doc.contains("format") || doc["format"].get<int>() != 1)
        throw SchemaError("/format: expected 1");
    Scenario sc;
    sc.id = doc.value("id", "scenario");
    if (!doc.contains("space")) throw SchemaError("/space: required");
    sc.space = parse_space(doc["space"]);

    if (doc.contains("p"))
        sc.p = Measure(parse_rational_vector(doc["p"], "/p"));
    else
        sc.p = uniform_measure(sc.space);
    if (!sc.p.strictly_positive()) throw SchemaError("/p: must be strictly positive");

    if (doc.contains("testset")) {
        const json& ts = doc["testset"];
        if (!ts.contains("vertices")) throw SchemaError("/testset/vertices: required");
        std::vector<Measure> verts;
        for (const auto& row : ts["vertices"])
            verts.push_back(Measure(parse_rational_vector(row, "/testset/vertices")));
        sc.testset = TestSet(sc.space, std::move(verts), ts.value("reference", 0));
    }

    if (doc.contains("bidask")) {
        const json& ba = doc["bidask"];
        Index d = ba.at("d").get<int>();
        std::vector<std::vector<RMatrix>> pi(sc.space.horizon() + 1);
        for (int t = 0; t <= sc.space.horizon(); ++t)
            pi[t].assign(sc.space.atom_count(t), RMatrix());
        for (const auto& entry : ba.at("pi")) {
            int t = entry.at("t").get<int>();
            int atom = entry.at("atom").get<int>();
            const json& rows = entry.at("matrix");
            RMatrix m(d, d);
            for (Index i = 0; i < d; ++i) {
                RVector r = parse_rational_vector(rows[i], "/bidask/pi/matrix");
                if (r.size() != d) throw SchemaError("/bidask/pi/matrix: not d x d");
                m.row(i) = r.transpose();
            }
            if (t < 0 || t > sc.space.horizon() || atom < 0 || atom >= sc.space.atom_count(t))
                throw SchemaError("/bidask/pi: level or atom out of range");
            pi[t][atom] = std::move(m);
        }
        for (int t = 0; t <= sc.space.horizon(); ++t)
            for (int a = 0; a < sc.space.atom_count(t); ++a)
                if (pi[t][a].rows() == 0)
                    throw SchemaError("/bidask/pi: missing matrix for level " + std::to_string(t) +
                                      " atom " + std::to_string(a));
        sc.bidask = BidAskProcess(sc.space, d, std::move(pi));
    }

    for (const std::string& section : {"assets", "claims"}) {
        if (!doc.contains(section)) continue;
        for (auto it = doc[section].begin(); it != doc[section].end(); ++it) {
            RVector v = parse_rational_vector(it.value(), "/" + section + "/" + it.key());
            if (v.size() != sc.space.states())
                throw SchemaError("/" + section + "/" + it.key() + ": length mismatch");
            (section == "assets" ? sc.assets : sc.claims)[it.key()] = std::move(v);
        }
    }

    if (doc.contains("tasks")) {
        int seq = 0;
        for (const auto& t : doc["tasks"]) {
            Task task;
            task.op = t.at("op").get<std::string>();
            task.id = t.value("id", task.op + "-" + std::to_string(seq));
            task.params = t;
            sc.tasks.push_back(std::move(task));
            ++seq;
        }
    }
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open scenario file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    return parse_scenario(doc);
}

namespace {

std::vector<std::string> names_param(const json& params, const std::string& key) {
    std::vector<std::string> names;
    for (const auto& n : params.at(key)) names.push_back(n.get<std::string>());
    return names;
}

const RiskMeasure require_rm(const Scenario& sc) {
    if (!sc.testset) throw SchemaError("task requires a testset section");
    return RiskMeasure{*sc.testset};
}

const BidAskProcess& require_market(const Scenario& sc) {
    if (!sc.bidask) throw SchemaError("task requires a bidask section");
    return *sc.bidask;
}

// expected per-atom values: single string, array in atom order, or object
bool match_level_values(const FilteredSpace& sp, int t, const RVector& values,
                        const json& expect) {
    if (expect.is_string()) {
        Rational e = parse_rational(expect.get<std::string>());
        for (int a = 0; a < sp.atom_count(t); ++a)
            if (values[sp.atom(t, a).front()] != e) return false;
        return true;
    }
    if (expect.is_array()) {
        if (static_cast<int>(expect.size()) != sp.atom_count(t)) return false;
        for (int a = 0; a < sp.atom_count(t); ++a)
            if (values[sp.atom(t, a).front()] != parse_rational(expect[a].get<std::string>()))
                return false;
        return true;
    }
    if (expect.is_object()) {
        for (int a = 0; a < sp.atom_count(t); ++a) {
            std::string key = atom_key(sp, t, a);
            if (!expect.contains(key)) return false;
            if (values[sp.atom(t, a).front()] != parse_rational(expect[key].get<std::string>()))
                return false;
        }
        return true;
    }
    return false;
}

struct TaskContext {
    const Scenario& sc;
    const RunOptions& opts;
};

TaskReport run_task(const TaskContext& ctx, const Task& task) {
    const Scenario& sc = ctx.sc;
    const json& p = task.params;
    TaskReport rep;
    rep.id = task.id;
    rep.op = task.op;

    if (task.op == "rho") {
        RiskMeasure rm = require_rm(sc);
        RVector x = resolve_vector(sc, p.at("claim").get<std::string>(), true);
        if (p.contains("inner_t")) x = rho(rm, x, p["inner_t"].get<int>());
        int t = p.at("t").get<int>();
        RVector val;
        if (p.contains("asset")) {
            auto num = make_numeraire(rm, resolve_vector(sc, p["asset"].get<std::string>(), false));
            if (!num) throw RangeError("asset in task " + task.id + " is not a numeraire");
            val = rho_v(rm, x, *num, t);
        } else {
            val = rho(rm, x, t);
        }
        json values = json::object();
        for (int a = 0; a < sc.space.atom_count(t); ++a)
            values[atom_key(sc.space, t, a)] = to_string(val[sc.space.atom(t, a).front()]);
        rep.data["values"] = values;
        rep.data["vertices_used"] = rm.q.size();
        if (p.contains("expect")) {
            rep.verdict_task = true;
            rep.pass = match_level_values(sc.space, t, val, p["expect"]);
        }
    } else if (task.op == "numeraire-check") {
        RiskMeasure rm = require_rm(sc);
        RVector v = resolve_vector(sc, p.at("asset").get<std::string>(), false);
        auto num = make_numeraire(rm, v);
        rep.data["is_numeraire"] = num.has_value();
        if (num) {
            json prof = json::object();
            for (int t = 0; t <= sc.space.horizon(); ++t) {
                json lt = json::object();
                for (int a = 0; a < sc.space.atom_count(t); ++a)
                    lt[atom_key(sc.space, t, a)] =
                        to_string(num->lambda_profile[t][sc.space.atom(t, a).front()]);
                prof[std::to_string(t)] = lt;
            }
            rep.data["lambda"] = prof;
        }
        if (p.contains("expect")) {
            rep.verdict_task = true;
            rep.pass = num.has_value() == p["expect"].get<bool>();
        }
    } else if (task.op == "equiv-check") {
        RiskMeasure rm = require_rm(sc);
        auto v = make_numeraire(rm, resolve_vector(sc, p.at("v").get<std::string>(), false));
        auto w = make_numeraire(rm, resolve_vector(sc, p.at("w").get<std::string>(), false));
        if (!v || !w) throw RangeError("equiv-check arguments must be numeraires");
        bool eq = equivalent_numeraires(rm, *v, *w);
        rep.data["equivalent"] = eq;
        if (p.contains("expect")) {
            rep.verdict_task = true;
            rep.pass = eq == p["expect"].get<bool>();
        }
    } else if (task.op == "represent") {
        RiskMeasure rm = require_rm(sc);
        PortfolioSpec v = resolve_portfolio(sc, rm, names_param(p, "assets"), false);
        bool rep_holds = is_represented(rm, v, p.at("eta").get<int>(), ctx.opts.dd_budget);
        rep.data["represented"] = rep_holds;
        if (p.contains("expect")) {
            rep.verdict_task = true;
            rep.pass = rep_holds == p["expect"].get<bool>();
        }
    } else if (task.op == "polar-identity") {
        RiskMeasure rm = require_rm(sc);
        PortfolioSpec v = resolve_portfolio(sc, rm, names_param(p, "assets"), false);
        bool holds = polar_portfolio_identity(rm, v, ctx.opts.dd_budget);
        rep.data["identity"] = holds;
        rep.verdict_task = true;
        rep.pass = holds == p.value("expect", true);
    } else if (task.op == "b-eta") {
        RiskMeasure rm = require_rm(sc);
        PortfolioSpec v = resolve_portfolio(sc, rm, names_param(p, "assets"), false);
        int eta = p.at("eta").get<int>();
        PolyCone port = portfolio_cone(rm, v);
        PolyCone sub = b_eta(sc.space, port, v.d(), eta, ctx.opts.dd_budget);
        bool fixed = equal(port, sub, ctx.opts.dd_budget);
        rep.data["fixed_point"] = fixed;
        DD canon = canonical_form(sub, ctx.opts.dd_budget);
        rep.data["cone"] = {{"v_rep", matrix_to_json(canon.rays)},
                            {"lineality", matrix_to_json(canon.lineality)}};
        if (p.contains("expect_fixed_point")) {
            rep.verdict_task = true;
            rep.pass = fixed == p["expect_fixed_point"].get<bool>();
        }
    } else if (task.op == "t-cones") {
        RiskMeasure rm = require_rm(sc);
        PortfolioSpec v =
            resolve_portfolio(sc, rm, names_param(p, "assets"), p.value("relaxed", false));
        TConeProfile prof = t_cone_profile(rm, v, ctx.opts.dd_budget);
        json cones = json::array();
        for (int t = 0; t < static_cast<int>(prof.cones.size()); ++t) {
            for (int a = 0; a < static_cast<int>(prof.cones[t].size()); ++a) {
                DD canon = canonical_form(prof.cones[t][a], ctx.opts.dd_budget);
                cones.push_back({{"t", t},
                                 {"atom", atom_key(sc.space, t, a)},
                                 {"generators", matrix_to_json(canon.rays)},
                                 {"lineality", matrix_to_json(canon.lineality)}});
            }
        }
        rep.data["cones"] = cones;
        rep.data["identity_holds"] = prof.identity_holds;
        if (prof.mismatch) rep.data["mismatch"] = vector_to_json(*prof.mismatch);
        if (p.contains("expect")) {
            rep.verdict_task = true;
            rep.pass = true;
            for (const auto& e : p["expect"]) {
                int t = e.at("t").get<int>();
                std::string key = e.at("atom").get<std::string>();
                int atom = -1;
                for (int a = 0; a < sc.space.atom_count(t); ++a)
                    if (atom_key(sc.space, t, a) == key) atom = a;
                if (atom < 0) { rep.pass = false; break; }
                RMatrix gens(e.at("generators").size(), v.d());
                for (size_t i = 0; i < e["generators"].size(); ++i)
                    gens.row(static_cast<Index>(i)) =
                        parse_rational_vector(e["generators"][i], "expect generators").transpose();
                if (!equal(prof.cones[t][atom], PolyCone::from_v(v.d(), gens), ctx.opts.dd_budget))
                    rep.pass = false;
            }
            if (p.contains("expect_identity") &&
                prof.identity_holds != p["expect_identity"].get<bool>())
                rep.pass = false;
        }
    } else if (task.op == "stability") {
        RiskMeasure rm = require_rm(sc);
        std::vector<std::string> names = names_param(p, "assets");
        PortfolioSpec u = resolve_portfolio(sc, rm, names, p.value("relaxed", false));
        long budget = p.value("budget", ctx.opts.budget);
        StabilityVerdict v = is_m_stable(rm, u, p.at("eta").get<int>(), budget, ctx.opts.dd_budget);
        rep.data["stable"] = v.stable;
        rep.data["method"] = v.method;
        if (!v.diagnostic.empty()) rep.data["diagnostic"] = v.diagnostic;
        if (v.witness) {
            rep.data["witness"] = witness_to_json(sc, names, *v.witness);
            rep.data["witness_valid"] = verify_witness(rm, u, *v.witness);
        }
        if (p.contains("expect")) {
            rep.verdict_task = true;
            rep.pass = v.stable == p["expect"].get<bool>();
            if (!v.stable && (!v.witness || rep.data["witness_valid"] != true)) rep.pass = false;
        }
    } else if (task.op == "check-pasting") {
        RiskMeasure rm = require_rm(sc);
        PortfolioSpec u = resolve_portfolio(sc, rm, names_param(p, "assets"), false);
        std::vector<int> tau;
        for (const auto& x : p.at("tau")) tau.push_back(x.get<int>());
        bool member = check_pasting_density(rm, u, p.at("q").get<int>(),
                                            p.at("qprime").get<int>(), tau);
        rep.data["member"] = member;
        if (p.contains("expect")) {
            rep.verdict_task = true;
            rep.pass = member == p["expect"].get<bool>();
        }
    } else if (task.op == "strong-universe") {
        RiskMeasure rm = require_rm(sc);
        PortfolioSpec u = finite_strong_assets(rm);
        bool rep_holds = is_represented(rm, u, 0, ctx.opts.dd_budget);
        rep.data["assets"] = static_cast<int>(u.d());
        rep.data["represented"] = rep_holds;
        rep.verdict_task = true;
        rep.pass = rep_holds == p.value("expect", true);
    } else if (task.op == "market-validate") {
        const BidAskProcess& pi = require_market(sc);
        rep.data["d"] = static_cast<int>(pi.d());
        rep.data["levels"] = pi.space().horizon() + 1;
        rep.data["valid"] = true;
    } else if (task.op == "market-cpp") {
        const BidAskProcess& pi = require_market(sc);
        auto z = find_positive_cpp(pi, sc.p);
        rep.data["arbitrage_free"] = z.has_value();
        if (z) {
            PriceProcess proc = make_price_process(pi, sc.p, *z);
            json levels = json::array();
            for (const RMatrix& zt : proc.z) levels.push_back(matrix_to_json(zt));
            rep.data["price_process"] = levels;
            rep.data["consistent"] = proc.consistent;
            rep.data["strictly_positive"] = proc.strictly_positive;
        }
        if (p.contains("expect")) {
            rep.verdict_task = true;
            rep.pass = z.has_value() == p["expect"].get<bool>();
        }
    } else if (task.op == "market-augment") {
        const BidAskProcess& pi = require_market(sc);
        Rational eps = parse_rational(p.at("eps").get<std::string>());
        AugmentedMarket am = augment(pi, eps, sc.p);
        rep.data["labels"] = am.labels;
        rep.data["states"] = am.space.states();
        rep.data["y"] = matrix_to_json(am.y);
    } else if (task.op == "market-verify83") {
        const BidAskProcess& pi = require_market(sc);
        Rational eps = parse_rational(p.at("eps").get<std::string>());
        Thm83Report r = verify_thm_8_3(pi, eps, sc.p, p.value("drop", -1), ctx.opts.dd_budget);
        rep.data["direction_a"] = r.direction_a;
        rep.data["direction_b"] = r.direction_b;
        rep.data["rays_checked"] = r.rays_checked;
        rep.data["failures"] = r.failures;
        if (p.contains("expect_a") || p.contains("expect_b")) {
            rep.verdict_task = true;
            rep.pass = r.direction_a == p.value("expect_a", true) &&
                       r.direction_b == p.value("expect_b", true);
        }
    } else {
        throw SchemaError("unknown op: " + task.op);
    }
    return rep;
}

}  // namespace

std::vector<TaskReport> run_scenario(const Scenario& sc, const RunOptions& opts) {
    std::vector<TaskReport> out;
    bool perturb_pending = opts.perturb;
    for (const Task& task : sc.tasks) {
        if (!opts.filter.empty() && sc.id.find(opts.filter) == std::string::npos &&
            task.id.find(opts.filter) == std::string::npos)
            continue;
        Task effective = task;
        if (perturb_pending && task.params.contains("expect")) {
            json& e = effective.params["expect"];
            if (e.is_boolean())
                e = !e.get<bool>();
            else
                e = "999999999";  // no rational value in the corpus equals this
            perturb_pending = false;
        }
        auto start = std::chrono::steady_clock::now();
        TaskReport rep;
        try {
            rep = run_task(TaskContext{sc, opts}, effective);
        } catch (const BudgetExhausted& e) {
            throw BudgetExhausted("task " + task.id + ": " + e.what());
        }
        rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                     .count();
        out.push_back(std::move(rep));
    }
    return out;
}

int reports_exit_code(const std::vector<TaskReport>& reports) {
    for (const TaskReport& r : reports)
        if (r.verdict_task && !r.pass) return 1;
    return 0;
}

json report_to_json(const TaskReport& r) {
    json out;
    out["task"] = r.id;
    out["op"] = r.op;
    if (r.verdict_task) out["pass"] = r.pass;
    out["data"] = r.data;
    out["ms"] = r.ms;
    return out;
}

json witness_to_json(const Scenario& sc, const std::vector<std::string>& asset_names,
                     const PastingWitness& w) {
    json doc;
    doc["format"] = 1;
    doc["kind"] = "pasting-witness";
    json space;
    space["states"] = sc.space.states();
    json parts = json::array();
    for (int t = 0; t <= sc.space.horizon(); ++t) {
        json level = json::array();
        for (int a = 0; a < sc.space.atom_count(t); ++a) {
            json atom = json::array();
            for (int s : sc.space.atom(t, a)) atom.push_back(s + 1);
            level.push_back(atom);
        }
        parts.push_back(level);
    }
    space["partitions"] = parts;
    doc["space"] = space;
    doc["p"] = vector_to_json(sc.p.mass());
    json verts = json::array();
    if (sc.testset)
        for (const Measure& m : sc.testset->vertices()) verts.push_back(vector_to_json(m.mass()));
    doc["vertices"] = verts;
    doc["reference"] = sc.testset ? sc.testset->reference_index() : 0;
    json assets = json::array();
    for (const std::string& n : asset_names) assets.push_back(vector_to_json(resolve_vector(sc, n, false)));
    doc["assets"] = assets;

    json jw;
    jw["t"] = w.t;
    jw["eta"] = w.eta;
    jw["f_atoms"] = w.f_atoms;
    jw["target"] = vector_to_json(w.target);
    jw["donor"] = vector_to_json(w.donor);
    jw["alpha"] = vector_to_json(w.alpha);
    jw["beta"] = vector_to_json(w.beta);
    jw["pasted"] = vector_to_json(w.pasted);
    doc["witness"] = jw;
    return doc;
}

bool replay_witness_file(const json& doc) {
    if (doc.value("kind", "") != "pasting-witness") throw SchemaError("not a witness file");
    FilteredSpace sp = parse_space(doc.at("space"));
    std::vector<Measure> verts;
    for (const auto& row : doc.at("vertices"))
        verts.push_back(Measure(parse_rational_vector(row, "/vertices")));
    TestSet ts(sp, std::move(verts), doc.value("reference", 0));
    RiskMeasure rm{ts};

    const json& assets = doc.at("assets");
    RMatrix m(sp.states(), static_cast<Index>(assets.size()));
    for (size_t j = 0; j < assets.size(); ++j)
        m.col(static_cast<Index>(j)) = parse_rational_vector(assets[j], "/assets");
    PortfolioSpec u = PortfolioSpec::relaxed(std::move(m));

    const json& jw = doc.at("witness");
    PastingWitness w;
    w.t = jw.at("t").get<int>();
    w.eta = jw.at("eta").get<int>();
    for (const auto& a : jw.at("f_atoms")) w.f_atoms.push_back(a.get<int>());
    w.target = parse_rational_vector(jw.at("target"), "/witness/target");
    w.donor = parse_rational_vector(jw.at("donor"), "/witness/donor");
    w.alpha = parse_rational_vector(jw.at("alpha"), "/witness/alpha");
    w.beta = parse_rational_vector(jw.at("beta"), "/witness/beta");
    w.pasted = parse_rational_vector(jw.at("pasted"), "/witness/pasted");
    return verify_witness(rm, u, w);
}

std::string schema_text() {
    return R"({
  "$comment": "scenario schema, format 1; rationals are 'p/q' strings in lowest terms",
  "type": "object",
  "required": ["format", "space"],
  "properties": {
    "format": {"const": 1},
    "id": {"type": "string"},
    "space": {
      "type": "object",
      "required": ["states", "partitions"],
      "properties": {
        "states": {"type": "integer", "minimum": 1},
        "partitions": {
          "type": "array",
          "items": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
          "$comment": "one partition per level t = 0..T; atoms list 1-based state indices"
        }
      }
    },
    "p": {"type": "array", "items": {"type": "string"}},
    "testset": {
      "type": "object",
      "required": ["vertices"],
      "properties": {
        "vertices": {"type": "array", "items": {"type": "array", "items": {"type": "string"}}},
        "reference": {"type": "integer"}
      }
    },
    "bidask": {
      "type": "object",
      "required": ["d", "pi"],
      "properties": {
        "d": {"type": "integer", "minimum": 1},
        "pi": {
          "type": "array",
          "items": {
            "type": "object",
            "required": ["t", "atom", "matrix"],
            "properties": {
              "t": {"type": "integer"},
              "atom": {"type": "integer"},
              "matrix": {"type": "array", "items": {"type": "array", "items": {"type": "string"}}}
            }
          }
        }
      }
    },
    "assets": {"type": "object", "additionalProperties": {"type": "array", "items": {"type": "string"}}},
    "claims": {"type": "object", "additionalProperties": {"type": "array", "items": {"type": "string"}}},
    "tasks": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["op"],
        "properties": {
          "id": {"type": "string"},
          "op": {"enum": ["rho", "numeraire-check", "equiv-check", "represent", "polar-identity",
                           "b-eta", "t-cones", "stability", "check-pasting", "strong-universe",
                           "market-validate", "market-cpp", "market-augment", "market-verify83"]}
        }
      }
    }
  }
})";
}

}  // namespace riskcone
