#include "temo/tensor.hpp"

#include <cmath>

namespace temo {

std::string shape_string(Index rows, Index cols)
{
    return "(" + std::to_string(rows) + "x" + std::to_string(cols) + ")";
}

Mask heaviside(const Matrix& a)
{
    return (a.array() >= 0.0).cast<std::uint8_t>();
}

MaskVector heaviside(const Vector& a)
{
    return (a.array() >= 0.0).cast<std::uint8_t>();
}

IndexVector row_argmin(const Matrix& a)
{
    IndexVector out(static_cast<std::size_t>(a.rows()), 0);
#pragma omp parallel for schedule(static)
    for (Index i = 0; i < a.rows(); ++i) {
        Index best = 0;
        double best_v = std::numeric_limits<double>::infinity();
        bool found = false;
        for (Index j = 0; j < a.cols(); ++j) {
            const double v = a(i, j);
            if (std::isnan(v)) continue;
            if (!found || v < best_v) {
                best = j;
                best_v = v;
                found = true;
            }
        }
        out[static_cast<std::size_t>(i)] = best;
    }
    return out;
}

IndexVector col_argmin(const Matrix& a)
{
    IndexVector out(static_cast<std::size_t>(a.cols()), 0);
    for (Index j = 0; j < a.cols(); ++j) {
        Index best = 0;
        double best_v = 0.0;
        bool found = false;
        for (Index i = 0; i < a.rows(); ++i) {
            const double v = a(i, j);
            if (std::isnan(v)) continue;
            if (!found || v < best_v) {
                best = i;
                best_v = v;
                found = true;
            }
        }
        out[static_cast<std::size_t>(j)] = best;
    }
    return out;
}

namespace {

template <class Better>
RowVector nan_col_reduce(const Matrix& a, Better better)
{
    RowVector out = RowVector::Constant(a.cols(), std::numeric_limits<double>::quiet_NaN());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            const double v = a(i, j);
            if (std::isnan(v)) continue;
            if (std::isnan(out(j)) || better(v, out(j))) out(j) = v;
        }
    }
    return out;
}

} // namespace

RowVector nan_col_min(const Matrix& a)
{
    return nan_col_reduce(a, [](double x, double y) { return x < y; });
}

RowVector nan_col_max(const Matrix& a)
{
    return nan_col_reduce(a, [](double x, double y) { return x > y; });
}

IndexVector segment_argmin(std::span<const Index> segment, const Vector& value, Index segments)
{
    if (static_cast<Index>(segment.size()) != value.size()) throw ShapeError("segment_argmin: length mismatch");
    IndexVector best(static_cast<std::size_t>(segments), -1);
    for (std::size_t i = 0; i < segment.size(); ++i) {
        const Index s = segment[i];
        if (s < 0 || s >= segments) continue;
        Index& b = best[static_cast<std::size_t>(s)];
        const auto ii = static_cast<Index>(i);
        if (b < 0 || value(ii) < value(b)) b = ii;
    }
    return best;
}

std::vector<Index> segment_count(std::span<const Index> segment, Index segments)
{
    std::vector<Index> count(static_cast<std::size_t>(segments), 0);
    for (Index s : segment) {
        if (s >= 0 && s < segments) ++count[static_cast<std::size_t>(s)];
    }
    return count;
}

Matrix gather_rows(const Matrix& a, std::span<const Index> idx)
{
    Matrix out(static_cast<Index>(idx.size()), a.cols());
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] < 0 || idx[k] >= a.rows()) {
            throw ShapeError("gather_rows: index " + std::to_string(idx[k]) + " out of range for " +
                             shape_string(a.rows(), a.cols()));
        }
        out.row(static_cast<Index>(k)) = a.row(idx[k]);
    }
    return out;
}

Vector row_norms(const Matrix& a)
{
    return a.rowwise().norm();
}

Matrix pairwise_distances(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.cols()) {
        throw ShapeError("pairwise_distances: column counts differ");
    }
    Matrix d(a.rows(), b.rows());
#pragma omp parallel for schedule(static)
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < b.rows(); ++j) {
            d(i, j) = (a.row(i) - b.row(j)).norm();
        }
    }
    return d;
}

} // namespace temo
