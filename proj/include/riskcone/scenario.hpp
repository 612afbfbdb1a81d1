#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "riskcone/market.hpp"
#include "riskcone/stability.hpp"

namespace riskcone {

struct Task {
    std::string id;
    std::string op;
    nlohmann::json params;
};

/// Parsed scenario: a space plus whichever of test set / bid-ask process the
/// file provides, named scalar vectors, and an ordered task list.
struct Scenario {
    std::string id;
    FilteredSpace space{1, {{{0}}}};
    Measure p{RVector::Constant(1, 1)};
    std::optional<TestSet> testset;
    std::optional<BidAskProcess> bidask;
    std::map<std::string, RVector> assets;
    std::map<std::string, RVector> claims;
    std::vector<Task> tasks;
};

struct TaskReport {
    std::string id;
    std::string op;
    bool verdict_task = false;
    bool pass = true;
    nlohmann::json data;
    double ms = 0;
};

struct RunOptions {
    std::string filter;
    long budget = kFalsifierBudget;
    int dd_budget = kDdBudget;
    bool perturb = false;  // testing mode: inject one wrong expectation
};

Scenario parse_scenario(const nlohmann::json& doc);
Scenario load_scenario(const std::string& path);

std::vector<TaskReport> run_scenario(const Scenario& sc, const RunOptions& opts);

/// 0 all pass, 1 some verdict failed (input errors and budget exhaustion are
/// thrown and mapped to exit codes 2 and 3 by the tool).
int reports_exit_code(const std::vector<TaskReport>& reports);

nlohmann::json report_to_json(const TaskReport& r);

/// Self-contained witness file: replay context plus the certificate.
nlohmann::json witness_to_json(const Scenario& sc, const std::vector<std::string>& asset_names,
                               const PastingWitness& w);
bool replay_witness_file(const nlohmann::json& doc);

std::string schema_text();

/// Helpers shared with the corpus and the CLI.
RVector parse_rational_vector(const nlohmann::json& arr, const std::string& where);
std::string atom_key(const FilteredSpace& sp, int t, int atom);
RVector resolve_vector(const Scenario& sc, const std::string& name, bool claim_ok);
PortfolioSpec resolve_portfolio(const Scenario& sc, const RiskMeasure& rm,
                                const std::vector<std::string>& names, bool relaxed);

}  // namespace riskcone
