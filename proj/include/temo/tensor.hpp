#pragma once

// Data-parallel primitives shared by every selection operator.
//
// Algorithm modules are written against this small vocabulary (masks,
// blends, batched row maps, stable sorts, masked reductions) so that they
// contain no per-individual branching. Dense storage is Eigen, row-major,
// 64-bit floating point.

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <exception>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace temo {

using Index = Eigen::Index;

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using RowVector = Eigen::RowVectorXd;
using IndexMatrix = Eigen::Matrix<Index, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using IndexVector = std::vector<Index>;

/// 0/1 mask. Kept distinct from real tensors so that "apply H to a boolean"
/// never goes through the >= 0 rule.
using Mask = Eigen::Array<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MaskVector = Eigen::Array<std::uint8_t, Eigen::Dynamic, 1>;

/// Largest finite double. Stands in for "infinity" in masked reductions so
/// that sentinel arithmetic (0 * inf, inf - inf) never yields NaN.
inline constexpr double kSentinel = std::numeric_limits<double>::max();
inline constexpr Index kIndexSentinel = std::numeric_limits<Index>::max();

class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string shape_string(Index rows, Index cols);

// ---------------------------------------------------------------------------
// Elementwise

/// H(A): 1 where A_ij >= 0, else 0. NaN maps to 0.
Mask heaviside(const Matrix& a);
MaskVector heaviside(const Vector& a);

namespace detail {

inline Index broadcast_extent(Index a, Index b, Index c, const char* what)
{
    Index out = std::max({a, b, c});
    for (Index e : {a, b, c}) {
        if (e != out && e != 1) {
            throw ShapeError(std::string("masked_blend: incompatible ") + what + " extents");
        }
    }
    return out;
}

inline Index bidx(Index extent, Index i) { return extent == 1 ? 0 : i; }

} // namespace detail

/// M ⊙ A + (1 − M) ⊙ B with numpy-style broadcasting of unit extents.
/// Selection is exact (no arithmetic on the unselected operand), so a
/// sentinel in B never leaks into positions where M = 1.
template <class MaskT, class DerivedA, class DerivedB>
auto masked_blend(const MaskT& m, const Eigen::DenseBase<DerivedA>& a, const Eigen::DenseBase<DerivedB>& b)
{
    using Scalar = typename DerivedA::Scalar;
    static_assert(std::is_same_v<Scalar, typename DerivedB::Scalar>, "masked_blend operands must share a scalar type");
    const Index rows = detail::broadcast_extent(m.rows(), a.rows(), b.rows(), "row");
    const Index cols = detail::broadcast_extent(m.cols(), a.cols(), b.cols(), "column");
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> out(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) {
            const bool take_a = m(detail::bidx(m.rows(), i), detail::bidx(m.cols(), j)) != 0;
            out(i, j) = take_a ? a.derived()(detail::bidx(a.rows(), i), detail::bidx(a.cols(), j))
                               : b.derived()(detail::bidx(b.rows(), i), detail::bidx(b.cols(), j));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Batched map

/// vmap(f)(A): applies f to every row of A and stacks the results.
///
/// f receives a row as Eigen::Ref<const RowVector> and must return something
/// convertible to RowVector. Rows are evaluated independently (in parallel
/// when OpenMP is enabled); the output is identical to a sequential loop.
template <class Fn>
Matrix batched_map(Fn&& f, const Matrix& a)
{
    if (a.rows() < 1) {
        throw ShapeError("batched_map: input must have at least one row");
    }
    const Index n = a.rows();
    std::vector<RowVector> rows(static_cast<std::size_t>(n));
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (Index i = 0; i < n; ++i) {
        try {
            rows[static_cast<std::size_t>(i)] = f(Eigen::Ref<const RowVector>(a.row(i)));
        } catch (...) {
#pragma omp critical(temo_batched_map)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    const Index width = rows.front().size();
    Matrix out(n, width);
    for (Index i = 0; i < n; ++i) {
        if (rows[static_cast<std::size_t>(i)].size() != width) {
            throw ShapeError("batched_map: row function returned inconsistent widths");
        }
        out.row(i) = rows[static_cast<std::size_t>(i)];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Sorting. All sorts are stable; ties go to the lower original index.

template <class T>
IndexVector argsort_stable(std::span<const T> v)
{
    IndexVector idx(v.size());
    std::iota(idx.begin(), idx.end(), Index{0});
    std::stable_sort(idx.begin(), idx.end(), [&](Index x, Index y) { return v[x] < v[y]; });
    return idx;
}

inline IndexVector argsort_stable(const Vector& v)
{
    return argsort_stable(std::span<const double>(v.data(), static_cast<std::size_t>(v.size())));
}

/// Indices ordered by `primary` ascending, then `secondary` ascending.
template <class P, class S>
IndexVector lexsort(std::span<const P> primary, std::span<const S> secondary)
{
    if (primary.size() != secondary.size()) {
        throw ShapeError("lexsort: key lengths differ");
    }
    IndexVector idx(primary.size());
    std::iota(idx.begin(), idx.end(), Index{0});
    std::stable_sort(idx.begin(), idx.end(), [&](Index x, Index y) {
        if (primary[x] != primary[y]) return primary[x] < primary[y];
        return secondary[x] < secondary[y];
    });
    return idx;
}

// ---------------------------------------------------------------------------
// Reductions and gathers used throughout the selection operators.

/// Row-wise argmin; ties resolve to the lowest column. NaN entries never win.
IndexVector row_argmin(const Matrix& a);
/// Column-wise argmin; ties resolve to the lowest row. NaN entries never win.
IndexVector col_argmin(const Matrix& a);

/// Column-wise min/max over rows, skipping NaN. A column with no finite entry yields NaN.
RowVector nan_col_min(const Matrix& a);
RowVector nan_col_max(const Matrix& a);

/// Per-segment argmin: out[s] is the index i with segment[i] == s that
/// minimises value[i] (ties to the lowest i), or -1 when segment s is empty.
/// Entries with a segment id outside [0, segments) are ignored.
IndexVector segment_argmin(std::span<const Index> segment, const Vector& value, Index segments);

/// Per-segment counts of entries whose segment id lies in [0, segments).
std::vector<Index> segment_count(std::span<const Index> segment, Index segments);

Matrix gather_rows(const Matrix& a, std::span<const Index> idx);

/// Per-row Euclidean norms.
Vector row_norms(const Matrix& a);

/// Pairwise Euclidean distances between the rows of `a` and the rows of `b`.
Matrix pairwise_distances(const Matrix& a, const Matrix& b);

} // namespace temo
