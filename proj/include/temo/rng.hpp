#pragma once

#include "temo/tensor.hpp"

#include <cstdint>
#include <initializer_list>

namespace temo {

/// Counter-based, splittable random stream.
///
/// Draw number p of a stream is a pure function of (key, p): the SplitMix64
/// finalizer applied to key + (p + 1) * golden-gamma. Batched fills therefore
/// produce exactly the values a sequential loop would, in any execution
/// order. Child streams are keyed by hashing the parent key with a child id,
/// so a path of ids names a reproducible sub-stream.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed = 0);

    /// Independent child stream; does not advance this stream.
    [[nodiscard]] RngStream split(std::uint64_t id) const;
    [[nodiscard]] RngStream split(std::initializer_list<std::uint64_t> path) const;

    std::uint64_t next_u64();
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();

    Vector uniform_vector(Index n);
    Matrix uniform_matrix(Index rows, Index cols);

    /// Uniform random permutation of 0..n-1 (argsort of n uniform keys).
    IndexVector permutation(Index n);

    [[nodiscard]] std::uint64_t key() const noexcept { return key_; }
    [[nodiscard]] std::uint64_t position() const noexcept { return counter_; }

    /// Value of draw `position` without touching the stream state.
    [[nodiscard]] static std::uint64_t draw_at(std::uint64_t key, std::uint64_t position) noexcept;
    [[nodiscard]] static double to_unit(std::uint64_t bits) noexcept;

private:
    RngStream(std::uint64_t key, std::uint64_t counter, int) : key_(key), counter_(counter) {}

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace temo
