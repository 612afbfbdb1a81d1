#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "riskcone/corpus.hpp"
#include "riskcone/errors.hpp"
#include "riskcone/scenario.hpp"

using nlohmann::json;
using namespace riskcone;

namespace {

int emit_reports(const std::string& scenario_id, const std::vector<TaskReport>& reports) {
    for (const TaskReport& r : reports) {
        json line = report_to_json(r);
        line["scenario"] = scenario_id;
        std::cout << line.dump() << "\n";
        if (r.verdict_task && !r.pass)
            std::cerr << "FAIL " << scenario_id << "/" << r.id << "\n";
    }
    return reports_exit_code(reports);
}

int run_file(const std::string& path, const RunOptions& opts) {
    Scenario sc = load_scenario(path);
    return emit_reports(sc.id, run_scenario(sc, opts));
}

int run_single(const std::string& path, json task, const RunOptions& opts) {
    Scenario sc = load_scenario(path);
    sc.tasks.clear();
    Task t;
    t.op = task.at("op").get<std::string>();
    t.id = t.op;
    t.params = std::move(task);
    sc.tasks.push_back(std::move(t));
    return emit_reports(sc.id, run_scenario(sc, opts));
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"riskcone: exact workbench for coherent risk measures, "
                 "polyhedral acceptance cones and proportional-cost markets"};
    app.require_subcommand(0, 1);

    bool print_schema = false;
    app.add_flag("--schema", print_schema, "print the scenario JSON schema and exit");

    RunOptions opts;

    auto* run_cmd = app.add_subcommand("run", "run the tasks of a scenario file");
    std::string run_path;
    run_cmd->add_option("file", run_path, "scenario JSON file")->required();
    run_cmd->add_option("--filter", opts.filter, "only run tasks whose id matches");
    run_cmd->add_option("--budget", opts.budget, "pasting search budget");

    auto* corpus_cmd = app.add_subcommand("corpus", "run the built-in regression fixtures");
    corpus_cmd->add_option("--filter", opts.filter, "only run fixtures/tasks whose id matches");
    corpus_cmd->add_flag("--perturb", opts.perturb,
                         "testing mode: inject one wrong expectation (must fail)");

    std::string path, claim, asset, vname, wname, assets_csv, eps, witness_path;
    int level = 0, inner_t = -1, eta = 1, drop = -1;
    bool relaxed = false;

    auto* rho_cmd = app.add_subcommand("rho", "conditional risk value of a claim");
    rho_cmd->add_option("file", path)->required();
    rho_cmd->add_option("--claim", claim)->required();
    rho_cmd->add_option("--t", level)->required();
    rho_cmd->add_option("--asset", asset, "denominate in this numeraire");
    rho_cmd->add_option("--inner-t", inner_t, "apply rho at this level first");

    auto* num_cmd = app.add_subcommand("numeraire-check", "validate an asset as a numeraire");
    num_cmd->add_option("file", path)->required();
    num_cmd->add_option("--asset", asset)->required();

    auto* equiv_cmd = app.add_subcommand("equiv-check", "level-0 equivalence of two numeraires");
    equiv_cmd->add_option("file", path)->required();
    equiv_cmd->add_option("--v", vname)->required();
    equiv_cmd->add_option("--w", wname)->required();

    auto* repr_cmd = app.add_subcommand("represent", "representation verdict for a portfolio");
    repr_cmd->add_option("file", path)->required();
    repr_cmd->add_option("--eta", eta)->required();
    repr_cmd->add_option("--assets", assets_csv, "comma-separated asset names")->required();

    auto* beta_cmd = app.add_subcommand("b-eta", "largest eta-decomposable subcone");
    beta_cmd->add_option("file", path)->required();
    beta_cmd->add_option("--eta", eta)->required();
    beta_cmd->add_option("--assets", assets_csv)->required();

    auto* tcone_cmd = app.add_subcommand("t-cones", "per-level moment cones");
    tcone_cmd->add_option("file", path)->required();
    tcone_cmd->add_option("--assets", assets_csv)->required();
    tcone_cmd->add_flag("--relaxed", relaxed, "skip numeraire validation of the assets");

    auto* stab_cmd = app.add_subcommand("stability", "m-stability verdict or witness replay");
    stab_cmd->add_option("file", path);
    stab_cmd->add_option("--eta", eta);
    stab_cmd->add_option("--assets", assets_csv);
    stab_cmd->add_option("--budget", opts.budget);
    stab_cmd->add_option("--verify-witness", witness_path, "replay a witness file");

    auto* mkt_cmd = app.add_subcommand("market", "bid-ask market operations");
    std::string mkt_op;
    mkt_cmd->add_option("file", path)->required();
    mkt_cmd->add_option("op", mkt_op, "validate | cpp | augment | verify83")->required();
    mkt_cmd->add_option("--eps", eps, "augmentation epsilon, p/q");
    mkt_cmd->add_option("--drop", drop, "drop a vertex (negative control)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (print_schema) {
            std::cout << schema_text() << "\n";
            return 0;
        }
        if (run_cmd->parsed()) return run_file(run_path, opts);
        if (corpus_cmd->parsed()) {
            int code = 0;
            for (const Scenario& sc : corpus()) {
                auto reports = run_scenario(sc, opts);  // filter matches fixture or task ids
                if (!reports.empty()) code = std::max(code, emit_reports(sc.id, reports));
            }
            return code;
        }
        if (rho_cmd->parsed()) {
            json t{{"op", "rho"}, {"claim", claim}, {"t", level}};
            if (!asset.empty()) t["asset"] = asset;
            if (inner_t >= 0) t["inner_t"] = inner_t;
            return run_single(path, t, opts);
        }
        if (num_cmd->parsed())
            return run_single(path, json{{"op", "numeraire-check"}, {"asset", asset}}, opts);
        if (equiv_cmd->parsed())
            return run_single(path, json{{"op", "equiv-check"}, {"v", vname}, {"w", wname}}, opts);
        if (repr_cmd->parsed())
            return run_single(path, json{{"op", "represent"}, {"eta", eta},
                                         {"assets", split_csv(assets_csv)}}, opts);
        if (beta_cmd->parsed())
            return run_single(path, json{{"op", "b-eta"}, {"eta", eta},
                                         {"assets", split_csv(assets_csv)}}, opts);
        if (tcone_cmd->parsed())
            return run_single(path, json{{"op", "t-cones"}, {"assets", split_csv(assets_csv)},
                                         {"relaxed", relaxed}}, opts);
        if (stab_cmd->parsed()) {
            if (!witness_path.empty()) {
                std::ifstream in(witness_path);
                if (!in) throw SchemaError("cannot open witness file: " + witness_path);
                json doc;
                in >> doc;
                bool ok = replay_witness_file(doc);
                std::cout << json{{"witness_valid", ok}}.dump() << "\n";
                return ok ? 0 : 1;
            }
            if (path.empty() || assets_csv.empty())
                throw SchemaError("stability needs a scenario file and --assets");
            return run_single(path, json{{"op", "stability"}, {"eta", eta},
                                         {"assets", split_csv(assets_csv)},
                                         {"budget", opts.budget}}, opts);
        }
        if (mkt_cmd->parsed()) {
            json t;
            if (mkt_op == "validate") t = json{{"op", "market-validate"}};
            else if (mkt_op == "cpp") t = json{{"op", "market-cpp"}};
            else if (mkt_op == "augment") t = json{{"op", "market-augment"}, {"eps", eps}};
            else if (mkt_op == "verify83") {
                t = json{{"op", "market-verify83"}, {"eps", eps}};
                if (drop >= 0) t["drop"] = drop;
            } else {
                throw SchemaError("unknown market op: " + mkt_op);
            }
            return run_single(path, t, opts);
        }
        std::cout << app.help() << "\n";
        return 0;
    } catch (const BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
