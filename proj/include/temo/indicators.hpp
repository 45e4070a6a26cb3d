#pragma once

#include "temo/rng.hpp"
#include "temo/tensor.hpp"

#include <cstdint>

namespace temo {

/// Mean distance from each reference-front point to its nearest solution.
/// Throws std::invalid_argument for empty inputs or mismatched widths.
double igd(const Matrix& f, const Matrix& front);

struct HvResult {
    double value = 0.0;
    /// False when the value is a Monte-Carlo estimate (m > 3).
    bool exact = true;
};

inline constexpr Index kHvMonteCarloSamples = 1'000'000;

/// Hypervolume dominated by F and bounded by `ref` (minimisation). Rows with
/// any coordinate >= ref are discarded first. Exact for m <= 3; for larger m
/// a Monte-Carlo estimate over the bounding box with a fixed stream.
HvResult hv_indicator(const Matrix& f, const RowVector& ref, Index mc_samples = kHvMonteCarloSamples,
                      std::uint64_t mc_seed = 0x5eed);

enum class UtilitySense { minimize, maximize };
enum class EuForm {
    /// Mean over weights of the best weighted utility over solutions.
    standard,
    /// Mean over weights and solutions of the largest single weighted
    /// objective utility, max_i w_i * u(f_i).
    literal,
};

/// Expected utility; u(f) = -f when minimising, f when maximising.
double eu(const Matrix& f, const Matrix& weights, UtilitySense sense = UtilitySense::minimize,
          EuForm form = EuForm::standard);

} // namespace temo
