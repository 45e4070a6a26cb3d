#pragma once

#include "temo/tensor.hpp"

namespace temo {

/// Decision matrix X (n x d) with its objective matrix F (n x m).
struct Population {
    Matrix x;
    Matrix f;

    [[nodiscard]] Index size() const noexcept { return x.rows(); }
    [[nodiscard]] Population take(std::span<const Index> idx) const { return {gather_rows(x, idx), gather_rows(f, idx)}; }
};

/// Row-wise concatenation [a; b].
Population merge(const Population& a, const Population& b);

} // namespace temo
