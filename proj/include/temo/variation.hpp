#pragma once

#include "temo/rng.hpp"
#include "temo/tensor.hpp"

namespace temo {

struct VariationParams {
    double eta_c = 20.0;
    double eta_m = 20.0;
    /// Per-gene mutation probability; negative means 1/d.
    double p_m = -1.0;
    RowVector lower;
    RowVector upper;
    /// Per-gene mixing as in common SBX implementations: half the genes skip
    /// crossover and children swap at random per gene. Off by default.
    bool per_gene_mixing = false;

    static VariationParams for_bounds(RowVector lower, RowVector upper);
    [[nodiscard]] double mutation_probability() const;
    /// Throws std::invalid_argument on eta <= 0, p_m > 1 or lower >= upper.
    void validate() const;
};

struct ParentPairs {
    IndexVector first;
    IndexVector second;
};

/// Random mating: a uniform permutation of 0..n-1 split into two halves of
/// floor(n/2). Throws std::invalid_argument for n < 2.
ParentPairs pair_parents(RngStream& rng, Index n);

/// `count` parent indices drawn uniformly with replacement from 0..n-1.
IndexVector random_mating_pool(RngStream& rng, Index n, Index count);

/// Spread factors from uniform draws M.
Matrix sbx_spread(const Matrix& mu, double eta_c);

/// Per-gene mixing: beta is kept where skip >= 0.5 (else 1, no crossover),
/// then negated where flip >= 0.5, which swaps the children's genes.
Matrix mix_spread(const Matrix& beta, const Matrix& skip, const Matrix& flip);

/// Children [c1; c2] for spread factors B, without clipping.
Matrix sbx_children(const Matrix& x1, const Matrix& x2, const Matrix& beta);

/// SBX with explicit uniform draws; output is clipped to the bounds.
Matrix sbx(const Matrix& x1, const Matrix& x2, const Matrix& mu, const VariationParams& params);
/// SBX drawing its uniforms (and the optional mixing masks) from `rng`.
Matrix sbx(RngStream& rng, const Matrix& x1, const Matrix& x2, const VariationParams& params);

/// Polynomial mutation step sizes (before the per-gene mutation mask).
Matrix polynomial_step(const Matrix& xc, const Matrix& mu, const VariationParams& params);

/// Xc + mask ⊙ step ⊙ (U - L), clipped to the bounds.
Matrix polynomial_mutation(const Matrix& xc, const Mask& mutate, const Matrix& mu, const VariationParams& params);
Matrix polynomial_mutation(RngStream& rng, const Matrix& xc, const VariationParams& params);

/// Clamp every row of x into [lower, upper].
Matrix clip_to_bounds(const Matrix& x, const RowVector& lower, const RowVector& upper);

/// Random pairing, SBX, polynomial mutation: 2*floor(n/2) offspring.
Matrix reproduce(RngStream& rng, const Matrix& population, const VariationParams& params);

} // namespace temo
