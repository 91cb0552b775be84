#include "mmb/hungarian.hpp"

#include <algorithm>
#include <stdexcept>

namespace mmb {

namespace {

// Large finite stand-in for inadmissible or padded entries. One such
// assignment outweighs any realistic sum of admissible costs, so the
// optimizer maximizes admissible cardinality first.
constexpr double kBig = 1e9;

}  // namespace

Matching min_cost_matching(const std::vector<std::vector<double>>& cost) {
    const int rows = static_cast<int>(cost.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(cost[0].size());
    for (const auto& row : cost)
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("min_cost_matching: ragged cost matrix");
    if (rows == 0 || cols == 0) return {};

    const int n = std::max(rows, cols);
    auto entry = [&](int i, int j) -> double {
        if (i >= rows || j >= cols) return kBig;
        const double c = cost[i][j];
        if (!(c < kUnmatchable)) return kBig;
        if (c >= kBig) throw std::invalid_argument("min_cost_matching: cost too large");
        if (c < 0.0) throw std::invalid_argument("min_cost_matching: negative cost");
        return c;
    };

    // Potentials u, v; p[j] = row matched to column j (1-based, 0 = none).
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, kUnmatchable);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = 0;
            double delta = kUnmatchable;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = entry(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    Matching result;
    for (int j = 1; j <= n; ++j) {
        const int i = p[j];
        if (i == 0) continue;
        const int r = i - 1, c = j - 1;
        if (r >= rows || c >= cols) continue;
        const double real = cost[r][c];
        if (!(real < kUnmatchable)) continue;  // matched through padding only
        result.pairs.emplace_back(r, c);
        result.total_cost += real;
    }
    std::sort(result.pairs.begin(), result.pairs.end());
    return result;
}

}  // namespace mmb
