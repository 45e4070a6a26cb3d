#pragma once

#include "temo/population.hpp"
#include "temo/reference.hpp"
#include "temo/tensor.hpp"

namespace temo::rvea {

struct ApdParams {
    double alpha = 2.0;
    double t = 0.0;
    double t_max = 1.0;

    /// Throws std::invalid_argument unless 0 <= t <= t_max, t_max > 0, alpha > 0.
    void validate() const;
};

/// Angles between the rows of F' (already translated) and the directions.
/// A zero row has cosine 0 to every direction (angle pi/2).
Matrix angles(const Matrix& fp, const Matrix& v);

/// gamma_j: smallest angle from direction j to any other direction; pi/2 when r = 1.
Vector direction_spread(const Matrix& v);

/// Elite index per direction, or -1 for a direction whose partition is empty.
IndexVector apd_elites(const Matrix& f, const Matrix& v, const ApdParams& params);

/// Elite indices of the non-empty partitions in direction order.
IndexVector apd_select_indices(const Matrix& f, const Matrix& v, const ApdParams& params);

Population apd_select(const Population& pop, const DirectionSet& v, const ApdParams& params);

} // namespace temo::rvea
