#pragma once

#include "temo/tensor.hpp"

#include <cstdint>

namespace temo {

enum class DirectionKind { simplex, unit_norm };

/// r x m reference / weight directions.
struct DirectionSet {
    Matrix weights;
    DirectionKind kind = DirectionKind::simplex;

    [[nodiscard]] Index size() const noexcept { return weights.rows(); }
    [[nodiscard]] Index objectives() const noexcept { return weights.cols(); }
    /// Same directions rescaled to unit Euclidean norm.
    [[nodiscard]] DirectionSet normalized() const;
};

/// C(h + m - 1, m - 1). Throws std::overflow_error if it does not fit in 64 bits.
std::uint64_t simplex_lattice_size(Index m, Index h);

/// Das-Dennis simplex lattice: every composition of h into m non-negative
/// parts, divided by h. Rows are ordered with the first coordinate
/// ascending (then the second, ...), and each row sums to 1.
DirectionSet das_dennis(Index m, Index h);

/// Largest h whose lattice has at most `max_count` rows (at least 1).
Index divisions_for_count(Index m, Index max_count);

/// n x T table; row i lists the T directions nearest to direction i by
/// Euclidean distance, nearest first, ties broken by lower index.
struct NeighborTable {
    IndexMatrix index;
    [[nodiscard]] Index size() const noexcept { return index.cols(); }
};

NeighborTable neighbors(const DirectionSet& w, Index t);

} // namespace temo
