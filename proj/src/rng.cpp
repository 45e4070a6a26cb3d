#include "temo/rng.hpp"

namespace temo {

namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

RngStream::RngStream(std::uint64_t seed) : key_(mix64(seed ^ 0x5851f42d4c957f2dULL)) {}

RngStream RngStream::split(std::uint64_t id) const
{
    return RngStream(mix64(key_ ^ mix64(id + kGamma)) + kGamma, 0, 0);
}

RngStream RngStream::split(std::initializer_list<std::uint64_t> path) const
{
    RngStream out = *this;
    for (auto id : path) out = out.split(id);
    return out;
}

std::uint64_t RngStream::draw_at(std::uint64_t key, std::uint64_t position) noexcept
{
    return mix64(key + (position + 1) * kGamma);
}

double RngStream::to_unit(std::uint64_t bits) noexcept
{
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::next_u64()
{
    return draw_at(key_, counter_++);
}

double RngStream::uniform()
{
    return to_unit(next_u64());
}

Vector RngStream::uniform_vector(Index n)
{
    Vector out(n);
    const std::uint64_t base = counter_;
#pragma omp parallel for schedule(static)
    for (Index i = 0; i < n; ++i) {
        out(i) = to_unit(draw_at(key_, base + static_cast<std::uint64_t>(i)));
    }
    counter_ += static_cast<std::uint64_t>(n);
    return out;
}

Matrix RngStream::uniform_matrix(Index rows, Index cols)
{
    Matrix out(rows, cols);
    const std::uint64_t base = counter_;
#pragma omp parallel for schedule(static)
    for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) {
            out(i, j) = to_unit(draw_at(key_, base + static_cast<std::uint64_t>(i * cols + j)));
        }
    }
    counter_ += static_cast<std::uint64_t>(rows * cols);
    return out;
}

IndexVector RngStream::permutation(Index n)
{
    return argsort_stable(uniform_vector(n));
}

} // namespace temo
