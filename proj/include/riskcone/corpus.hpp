#pragma once

#include <vector>

#include "riskcone/scenario.hpp"

namespace riskcone {

/// Built-in regression fixtures: scenario-tree risk measures and desk-scale
/// bid-ask markets with frozen expected values, run by `riskcone corpus`.
std::vector<Scenario> corpus();

/// Raw fixture documents (id -> JSON text), also used to ship scenario files.
std::vector<std::pair<std::string, std::string>> corpus_documents();

}  // namespace riskcone
