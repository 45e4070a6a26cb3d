#pragma once

#include "temo/population.hpp"
#include "temo/problems.hpp"
#include "temo/reference.hpp"
#include "temo/rng.hpp"
#include "temo/variation.hpp"

namespace temo::moead {

struct PbiOptions {
    double theta = 5.0;
    /// Project onto w / |w| when forming the orthogonal residual d2. Turning this
    /// off uses d2 = |(f - z) - d1 * w| literally.
    bool normalized_direction = true;
};

/// Penalty-based boundary intersection d1 + theta * d2.
/// Throws std::invalid_argument for a zero weight vector.
double pbi(const RowVector& f, const RowVector& w, const RowVector& z, const PbiOptions& options = {});

/// Default neighbourhood size: max(2, ceil(0.1 n)) capped at 20.
Index default_neighborhood(Index n);

struct MoeadState {
    Population pop;
    /// Ideal point z; never above the column minima of pop.f.
    RowVector ideal;
    Matrix weights;
    NeighborTable neighbors;
    PbiOptions pbi;

    static MoeadState init(Population pop, Matrix weights, Index neighborhood, PbiOptions options = {});
};

struct CompareUpdate {
    /// n x n. Row i is the subpopulation index vector after offspring i has been
    /// compared with its neighbourhood: column j holds j, or -1 where
    /// offspring i replaces (ties included) the incumbent of subproblem j.
    IndexMatrix update;
    RowVector ideal;
};

/// z_min = min(z, F1, F2); every row i compares offspring i against its
/// neighbours' incumbents under the neighbours' weights.
CompareUpdate compare_update(const MoeadState& state, const Matrix& f2);

/// Per direction j, the PBI-best candidate from column j of `update`:
/// offspring i where update(i, j) == -1, otherwise incumbent j. Ties go to
/// the lowest candidate row.
Population elite_select(const MoeadState& state, const Population& offspring, const IndexMatrix& update,
                        const RowVector& ideal);

/// All random input of one reproduction round.
struct OffspringDraws {
    /// n x 2 uniforms choosing two distinct neighbour slots.
    Matrix pick;
    Matrix sbx_mu;
    /// Mixing draws; empty unless per-gene mixing is on.
    Matrix skip;
    Matrix flip;
    Mask mutate;
    Matrix mutation_mu;

    static OffspringDraws sample(RngStream& rng, Index n, Index d, const VariationParams& params);
};

/// Offspring i is the first SBX child of two distinct neighbours of i, then
/// mutated. Returns only decision vectors. Throws std::invalid_argument for T < 2.
Matrix offspring_decisions(const MoeadState& state, const OffspringDraws& draws, const VariationParams& params);

Population offspring(const MoeadState& state, RngStream& rng, const ProblemSpec& problem, const VariationParams& params);

/// One generation: offspring, compare_update, elite_select, z <- z_min.
void step(MoeadState& state, RngStream& rng, const ProblemSpec& problem, const VariationParams& params);

} // namespace temo::moead
