#pragma once

#include "temo/tensor.hpp"

#include <vector>

namespace temo {

/// Non-domination ranks (0 = best front) and the last admitted rank.
struct RankResult {
    std::vector<Index> rank;
    /// sort(rank)[n - 1]: ranks below `last` fill fewer than n slots, ranks up to
    /// and including it fill at least n.
    Index last = 0;
    /// Number of peeling iterations (max rank + 1).
    Index iterations = 0;
};

/// D(i, j) = 1 iff row i Pareto-dominates row j (minimisation): <= in every
/// objective and < in at least one. Exact comparison, zero diagonal.
/// Throws std::invalid_argument if F contains NaN.
Mask dominance_matrix(const Matrix& f);

/// Tensorised non-dominated sort by iterative peeling of the dominance
/// matrix. Requires rows(F) >= n >= 1.
RankResult rank_assign(const Matrix& f, Index n);

/// Sequential domination-count sort (dominated sets plus counters), used as
/// the reference for rank_assign. `last` is computed the same way.
RankResult ndsort_oracle(const Matrix& f, Index n);

/// Indices of rows no other row dominates, ascending. Sort-and-archive scan;
/// suited to large point clouds where an N x N matrix is too big.
IndexVector nondominated_indices(const Matrix& f);

/// sort(rank)[n - 1].
Index last_rank(std::span<const Index> rank, Index n);

} // namespace temo
