#pragma once

#include "temo/population.hpp"
#include "temo/rng.hpp"
#include "temo/tensor.hpp"

namespace temo::hype {

struct HvEstimateParams {
    RowVector v_ref;
    /// Fitness parameter: number of joint removals considered.
    Index k = 1;
    Index samples = 1;
};

/// alpha[j] for j = 0..k-1 (zero-based: alpha[j] weights a sample whose
/// dominator set has j + 1 members, already divided by j + 1).
Vector alpha_weights(Index n1, Index k);

/// Monte-Carlo HypE fitness of every row of F. Samples are drawn uniformly
/// in [colmin F, v_ref]; a sample counts as dominated by row i when
/// F_i <= sample componentwise. A degenerate sampling box gives zeros.
/// Throws std::invalid_argument for s < 1, k outside [1, n1], NaN input or
/// a reference point of the wrong width.
Vector hv_estimate(const Matrix& f, const HvEstimateParams& params, RngStream& rng);

/// Exact HypE fitness by integrating over the grid cells induced by the
/// point coordinates. Limited to n1 <= 8 and m <= 3.
Vector exact_hype_fitness_oracle(const Matrix& f, const RowVector& v_ref, Index k);

/// Reference point used by the algorithm loop: column max plus 10% of the
/// column range (a zero range counts as 1).
RowVector default_reference(const Matrix& f);

/// Indices of the n survivors, in lexsort(rank, -contribution) order.
IndexVector environmental_selection_indices(const Matrix& f, const RowVector& v_ref, Index n, Index samples,
                                            RngStream& rng);

Population environmental_selection(const Population& merged, const RowVector& v_ref, Index n, Index samples,
                                   RngStream& rng);

} // namespace temo::hype
