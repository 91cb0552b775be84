#pragma once

#include <limits>
#include <utility>
#include <vector>

namespace mmb {

// Marks a pair that may not be matched (association gate, zero overlap).
inline constexpr double kUnmatchable = std::numeric_limits<double>::infinity();

struct Matching {
    std::vector<std::pair<int, int>> pairs;  // (row, col), sorted by row
    double total_cost = 0.0;                 // over admissible pairs only
};

// Minimum-cost one-to-one matching for a rectangular cost matrix, found with
// the Hungarian algorithm (shortest augmenting paths over row/column
// potentials, O(n^3)). Inadmissible entries are excluded; among matchings of
// maximal admissible cardinality the total cost is minimal. Deterministic:
// cost ties resolve by scan order, so equal inputs give equal outputs.
Matching min_cost_matching(const std::vector<std::vector<double>>& cost);

}  // namespace mmb
