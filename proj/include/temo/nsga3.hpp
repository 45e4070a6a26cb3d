#pragma once

#include "temo/population.hpp"
#include "temo/rng.hpp"
#include "temo/tensor.hpp"

#include <vector>

namespace temo::nsga3 {

struct NormalizedObjectives {
    /// (F - ideal) / intercepts; NaN rows stay NaN.
    Matrix normalized;
    RowVector ideal;
    /// Hyperplane intercepts measured from the ideal point (strictly positive).
    RowVector intercepts;
    /// True when the extreme-point system was rejected and the column maxima were used.
    bool fallback = false;

    /// Absolute nadir estimate, ideal + intercepts.
    [[nodiscard]] RowVector nadir() const { return ideal + intercepts; }
};

/// Rows that are entirely NaN are treated as excluded. Throws
/// std::invalid_argument when no finite row remains.
NormalizedObjectives normalize(const Matrix& f);

struct AssociationResult {
    IndexVector direction;
    Vector distance;
};

/// D(i, j) = |F'_i| * sqrt(1 - cos^2) between row i and direction j.
/// Zero-norm rows get distance 0 to every direction.
Matrix perpendicular_distances(const Matrix& fp, const Matrix& reference);

AssociationResult associate(const Matrix& fp, const Matrix& reference);

struct NicheState {
    /// Members with rank < last associated with each direction.
    std::vector<Index> rho;
    /// Members with rank == last associated with each direction.
    std::vector<Index> rho_last;
    /// sum(rho).
    Index selected = 0;
};

NicheState niche_counts(std::span<const Index> rank, std::span<const Index> direction, Index last, Index directions);

struct NicheSelection {
    std::vector<Index> rank;
    /// Promoted individuals, in promotion order.
    IndexVector promoted;
    /// Selected count after promotion.
    Index selected = 0;
};

/// Batched niche filling: every direction with an empty niche and at least
/// one rank-`last` member promotes its closest such member to rank last-1.
/// Filled niches leave the empty set, so a single batched pass reaches the
/// fixed point; each individual belongs to one niche, so claims never collide.
NicheSelection niche_select(const NicheState& state, std::span<const Index> rank, std::span<const Index> direction,
                            const Vector& distance, Index last);

/// Balances the selection to exactly `n` members of rank < last.
/// n_dif > 0 promotes the n_dif lowest-index remaining rank-`last` rows;
/// n_dif < 0 demotes the |n_dif| most recently promoted rows.
/// Throws std::logic_error if there are not enough candidates.
std::vector<Index> update_rank(std::span<const Index> rank, std::span<const Index> promoted, Index n_dif, Index last);

/// Indices of the n survivors of F (rows already shuffled), ascending.
IndexVector select_indices(const Matrix& f, const Matrix& reference, Index n);

/// Shuffles the merged population with `rng`, then selects n survivors.
IndexVector environmental_selection_indices(const Matrix& f, const Matrix& reference, Index n, RngStream& rng);

Population environmental_selection(const Population& merged, const Matrix& reference, Index n, RngStream& rng);

} // namespace temo::nsga3
