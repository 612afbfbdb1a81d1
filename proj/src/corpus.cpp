#include "riskcone/corpus.hpp"

namespace riskcone {
namespace {

const char* kBinaryPair = R"({
  "format": 1,
  "id": "t2-binary-pair",
  "space": {"states": 4, "partitions": [[[1,2,3,4]], [[1,2],[3,4]], [[1],[2],[3],[4]]]},
  "testset": {"vertices": [["1/3","1/6","1/4","1/4"], ["1/2","1/8","3/16","3/16"]], "reference": 0},
  "assets": {"v": ["2","1","1","1"]},
  "claims": {"X": ["3","4","0","0"]},
  "tasks": [
    {"id": "rho0", "op": "rho", "claim": "X", "t": 0, "expect": "2"},
    {"id": "rho1", "op": "rho", "claim": "X", "t": 1, "expect": ["10/3", "0"]},
    {"id": "rho-compose", "op": "rho", "claim": "X", "inner_t": 1, "t": 0, "expect": "25/12"},
    {"id": "weak-unit", "op": "represent", "eta": 1, "assets": ["1"], "expect": false},
    {"id": "weak-pair", "op": "represent", "eta": 1, "assets": ["1", "v"], "expect": true},
    {"id": "stab-unit", "op": "stability", "eta": 1, "assets": ["1"], "expect": false},
    {"id": "stab-pair", "op": "stability", "eta": 1, "assets": ["1", "v"], "expect": true},
    {"id": "numeraire-v", "op": "numeraire-check", "asset": "v", "expect": true},
    {"id": "equiv-1v", "op": "equiv-check", "v": "1", "w": "v", "expect": false},
    {"id": "pasting-tail", "op": "check-pasting", "q": 0, "qprime": 1, "tau": [2,2,1,1],
     "assets": ["1", "v"], "expect": true},
    {"id": "universe", "op": "strong-universe", "expect": true},
    {"id": "polar-id", "op": "polar-identity", "assets": ["1", "v"], "expect": true}
  ]
})";

const char* kTwoState = R"({
  "format": 1,
  "id": "t1-two-state",
  "space": {"states": 2, "partitions": [[[1,2]], [[1],[2]]]},
  "testset": {"vertices": [["1/2","1/2"]], "reference": 0},
  "assets": {"s": ["1","2"]},
  "tasks": [
    {"id": "strong-pair", "op": "represent", "eta": 0, "assets": ["1", "s"], "expect": true},
    {"id": "stab-strong", "op": "stability", "eta": 0, "assets": ["1", "s"], "expect": true},
    {"id": "weak-unit", "op": "represent", "eta": 1, "assets": ["1"], "expect": true}
  ]
})";

const char* kBinaryQuad = R"({
  "format": 1,
  "id": "t2-binary-quad",
  "space": {"states": 4, "partitions": [[[1,2,3,4]], [[1,2],[3,4]], [[1],[2],[3],[4]]]},
  "testset": {"vertices": [["1/4","1/4","1/4","1/4"], ["1/4","1/4","3/8","1/8"],
                            ["3/8","1/8","1/4","1/4"], ["3/8","1/8","3/8","1/8"]],
              "reference": 0},
  "tasks": [
    {"id": "weak-unit", "op": "represent", "eta": 1, "assets": ["1"], "expect": true},
    {"id": "stab-weak", "op": "stability", "eta": 1, "assets": ["1"], "expect": true},
    {"id": "universe", "op": "strong-universe", "expect": true}
  ]
})";

const char* kSplitSupport = R"({
  "format": 1,
  "id": "t2-split-support",
  "space": {"states": 4, "partitions": [[[1,2,3,4]], [[1,2],[3,4]], [[1],[2],[3],[4]]]},
  "testset": {"vertices": [["1/2","1/2","0","0"], ["0","0","1/2","1/2"],
                            ["1/3","1/6","1/6","1/3"], ["1/6","1/3","1/3","1/6"]],
              "reference": 2},
  "assets": {"v": ["2","1","2","1"], "w": ["1","0","1","0"]},
  "tasks": [
    {"id": "stab-strong", "op": "stability", "eta": 0, "assets": ["1", "v"], "expect": true},
    {"id": "tcones", "op": "t-cones", "assets": ["1", "w"], "relaxed": true,
     "expect_identity": true,
     "expect": [
       {"t": 0, "atom": "1,2,3,4", "generators": [["2","1"]]},
       {"t": 1, "atom": "1,2", "generators": [["3","1"],["3","2"]]},
       {"t": 1, "atom": "3,4", "generators": [["3","1"],["3","2"]]},
       {"t": 2, "atom": "1", "generators": [["1","1"]]},
       {"t": 2, "atom": "2", "generators": [["1","0"]]},
       {"t": 2, "atom": "3", "generators": [["1","1"]]},
       {"t": 2, "atom": "4", "generators": [["1","0"]]}
     ]}
  ]
})";

const char* kPruned = R"({
  "format": 1,
  "id": "t2-pruned",
  "space": {"states": 3, "partitions": [[[1,2,3]], [[1,2],[3]], [[1],[2],[3]]]},
  "testset": {"vertices": [["1/2","1/3","1/6"], ["1/3","2/9","4/9"]], "reference": 0},
  "assets": {"v": ["2","1","1"]},
  "claims": {"c": ["2","1","1"]},
  "tasks": [
    {"id": "stab-strong", "op": "stability", "eta": 0, "assets": ["1", "v"], "expect": true},
    {"id": "strong-pair", "op": "represent", "eta": 0, "assets": ["1", "v"], "expect": true},
    {"id": "universe", "op": "strong-universe", "expect": true}
  ]
})";

const char* kPairedTails = R"({
  "format": 1,
  "id": "t2-paired-tails",
  "space": {"states": 4, "partitions": [[[1,2,3,4]], [[1,2],[3,4]], [[1],[2],[3],[4]]]},
  "p": ["1/3","1/3","1/6","1/6"],
  "testset": {"vertices": [["1/3","1/3","1/6","1/6"], ["1/2","1/4","1/8","1/8"]], "reference": 0},
  "tasks": [
    {"id": "universe", "op": "strong-universe", "expect": true},
    {"id": "strong-unit", "op": "represent", "eta": 0, "assets": ["1"], "expect": false}
  ]
})";

const char* kFriction2 = R"({
  "format": 1,
  "id": "mkt-friction-2",
  "space": {"states": 2, "partitions": [[[1,2]], [[1],[2]]]},
  "bidask": {"d": 2, "pi": [
    {"t": 0, "atom": 0, "matrix": [["1","33/20"],["11/15","1"]]},
    {"t": 1, "atom": 0, "matrix": [["1","2"],["1/2","1"]]},
    {"t": 1, "atom": 1, "matrix": [["1","1"],["1","1"]]}
  ]},
  "tasks": [
    {"id": "validate", "op": "market-validate"},
    {"id": "cpp", "op": "market-cpp", "expect": true},
    {"id": "v83", "op": "market-verify83", "eps": "1/10", "expect_a": true, "expect_b": true},
    {"id": "v83-neg", "op": "market-verify83", "eps": "1/10", "drop": 0,
     "expect_a": true, "expect_b": false}
  ]
})";

const char* kBinomFrictionless = R"({
  "format": 1,
  "id": "mkt-binom-frictionless",
  "space": {"states": 4, "partitions": [[[1,2,3,4]], [[1,2],[3,4]], [[1],[2],[3],[4]]]},
  "bidask": {"d": 2, "pi": [
    {"t": 0, "atom": 0, "matrix": [["1","1"],["1","1"]]},
    {"t": 1, "atom": 0, "matrix": [["1","3/2"],["2/3","1"]]},
    {"t": 1, "atom": 1, "matrix": [["1","1/2"],["2","1"]]},
    {"t": 2, "atom": 0, "matrix": [["1","2"],["1/2","1"]]},
    {"t": 2, "atom": 1, "matrix": [["1","1"],["1","1"]]},
    {"t": 2, "atom": 2, "matrix": [["1","3/4"],["4/3","1"]]},
    {"t": 2, "atom": 3, "matrix": [["1","1/4"],["4","1"]]}
  ]},
  "tasks": [
    {"id": "cpp", "op": "market-cpp", "expect": true},
    {"id": "v83", "op": "market-verify83", "eps": "1/4", "expect_a": true, "expect_b": true}
  ]
})";

const char* kThreeAsset = R"({
  "format": 1,
  "id": "mkt-three-asset",
  "space": {"states": 1, "partitions": [[[1]]]},
  "bidask": {"d": 3, "pi": [
    {"t": 0, "atom": 0, "matrix": [["1","12/5","18/5"],["3/5","1","9/5"],["2/5","4/5","1"]]}
  ]},
  "tasks": [
    {"id": "cpp", "op": "market-cpp", "expect": true},
    {"id": "augment", "op": "market-augment", "eps": "1/10"},
    {"id": "v83", "op": "market-verify83", "eps": "1/10", "expect_a": true, "expect_b": true}
  ]
})";

}  // namespace

std::vector<std::pair<std::string, std::string>> corpus_documents() {
    return {
        {"t2-binary-pair", kBinaryPair},
        {"t1-two-state", kTwoState},
        {"t2-binary-quad", kBinaryQuad},
        {"t2-split-support", kSplitSupport},
        {"t2-pruned", kPruned},
        {"t2-paired-tails", kPairedTails},
        {"mkt-friction-2", kFriction2},
        {"mkt-binom-frictionless", kBinomFrictionless},
        {"mkt-three-asset", kThreeAsset},
    };
}

std::vector<Scenario> corpus() {
    std::vector<Scenario> out;
    for (const auto& [id, text] : corpus_documents())
        out.push_back(parse_scenario(nlohmann::json::parse(text)));
    return out;
}

}  // namespace riskcone
