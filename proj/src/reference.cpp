#include "temo/reference.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace temo {

DirectionSet DirectionSet::normalized() const
{
    Matrix unit = weights.array().colwise() / row_norms(weights).array();
    return {std::move(unit), DirectionKind::unit_norm};
}

std::uint64_t simplex_lattice_size(Index m, Index h)
{
    if (m < 1 || h < 0) throw std::invalid_argument("simplex_lattice_size: invalid arguments");
    // C(h + m - 1, k) with k = m - 1, built incrementally; every prefix is itself a binomial.
    const auto k = static_cast<std::uint64_t>(m - 1);
    const auto top = static_cast<std::uint64_t>(h) + k;
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (top - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max()) {
            throw std::overflow_error("simplex lattice size overflows 64 bits");
        }
    }
    return static_cast<std::uint64_t>(acc);
}

DirectionSet das_dennis(Index m, Index h)
{
    if (m < 2) throw std::invalid_argument("das_dennis: need m >= 2");
    if (h < 1) throw std::invalid_argument("das_dennis: need h >= 1");
    const std::uint64_t count = simplex_lattice_size(m, h);
    if (count > static_cast<std::uint64_t>(std::numeric_limits<Index>::max() / m)) {
        throw std::overflow_error("das_dennis: lattice too large");
    }

    Matrix w(static_cast<Index>(count), m);
    std::vector<Index> parts(static_cast<std::size_t>(m), 0);
    Index row = 0;
    // Odometer over the first m-1 parts; the last part takes the remainder.
    while (true) {
        Index used = 0;
        for (Index j = 0; j < m - 1; ++j) used += parts[static_cast<std::size_t>(j)];
        parts.back() = h - used;
        for (Index j = 0; j < m; ++j) {
            w(row, j) = static_cast<double>(parts[static_cast<std::size_t>(j)]) / static_cast<double>(h);
        }
        ++row;

        Index pos = m - 2;
        while (pos >= 0) {
            ++parts[static_cast<std::size_t>(pos)];
            Index s = 0;
            for (Index j = 0; j <= pos; ++j) s += parts[static_cast<std::size_t>(j)];
            if (s <= h) break;
            parts[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return {std::move(w), DirectionKind::simplex};
}

Index divisions_for_count(Index m, Index max_count)
{
    Index h = 1;
    while (simplex_lattice_size(m, h + 1) <= static_cast<std::uint64_t>(max_count)) ++h;
    return h;
}

NeighborTable neighbors(const DirectionSet& w, Index t)
{
    const Index r = w.size();
    if (t < 1 || t > r) {
        throw std::invalid_argument("neighbors: T=" + std::to_string(t) + " outside [1, " + std::to_string(r) + "]");
    }
    const Matrix dist = pairwise_distances(w.weights, w.weights);
    IndexMatrix table(r, t);
#pragma omp parallel for schedule(static)
    for (Index i = 0; i < r; ++i) {
        const Vector row = dist.row(i).transpose();
        const IndexVector order = argsort_stable(row);
        for (Index k = 0; k < t; ++k) table(i, k) = order[static_cast<std::size_t>(k)];
    }
    return {std::move(table)};
}

} // namespace temo
