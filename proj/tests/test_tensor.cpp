#include "doctest.h"

#include "temo/rng.hpp"
#include "temo/tensor.hpp"

#include <algorithm>
#include <cmath>

using namespace temo;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<double>> rows)
{
    Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
    Index i = 0;
    for (const auto& r : rows) {
        Index j = 0;
        for (double v : r) m(i, j++) = v;
        ++i;
    }
    return m;
}

} // namespace

TEST_CASE("heaviside follows the >= 0 rule")
{
    const Matrix a = mat({{-1.0, 0.0, 2.0}});
    const Mask h = heaviside(a);
    CHECK(h(0, 0) == 0);
    CHECK(h(0, 1) == 1);
    CHECK(h(0, 2) == 1);

    CHECK((heaviside(Matrix(Matrix::Zero(3, 4))) == 1).all());

    const Vector v = (Vector(3) << -0.5, 0.0, 1e-300).finished();
    const MaskVector hv = heaviside(v);
    CHECK(hv(0) == 0);
    CHECK(hv(1) == 1);
    CHECK(hv(2) == 1);

    Matrix nan_in = Matrix::Constant(1, 1, std::nan(""));
    CHECK(heaviside(nan_in)(0, 0) == 0);
}

TEST_CASE("heaviside matches a scalar comparison loop and H(A) + H(-A) >= 1")
{
    RngStream rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix a = (rng.uniform_matrix(4, 4).array() - 0.5).matrix();
        a(trial % 4, (trial / 4) % 4) = 0.0;
        const Mask h = heaviside(a);
        const Mask hn = heaviside(Matrix(-a));
        for (Index i = 0; i < 4; ++i) {
            for (Index j = 0; j < 4; ++j) {
                CHECK(h(i, j) == (a(i, j) >= 0.0 ? 1 : 0));
                CHECK(h(i, j) + hn(i, j) >= 1);
                CHECK((h(i, j) + hn(i, j) == 1) == (a(i, j) != 0.0));
            }
        }
    }
}

TEST_CASE("masked_blend selects exactly and broadcasts unit extents")
{
    const Matrix a = Matrix::Constant(2, 3, 5.0);
    const Matrix b = Matrix::Constant(2, 3, 7.0);
    CHECK(masked_blend(Mask::Ones(2, 3), a, b) == a);
    CHECK(masked_blend(Mask::Zero(2, 3), a, b) == b);

    Mask m(1, 2);
    m << 1, 0;
    const Matrix r = masked_blend(m, Matrix::Constant(1, 2, 5.0), Matrix::Constant(1, 2, 7.0));
    CHECK(r(0, 0) == 5.0);
    CHECK(r(0, 1) == 7.0);

    // Sentinel never leaks where the mask picks A.
    const Matrix big = Matrix::Constant(2, 3, kSentinel);
    CHECK(masked_blend(Mask::Ones(2, 3), a, big) == a);

    // Row mask broadcast over columns, column vector broadcast over rows.
    Mask col(2, 1);
    col << 1, 0;
    const Matrix bc = masked_blend(col, a, Matrix::Constant(1, 3, -1.0));
    CHECK(bc.row(0) == a.row(0));
    CHECK((bc.row(1).array() == -1.0).all());

    CHECK_THROWS_AS(masked_blend(Mask::Ones(2, 2), a, b), ShapeError);
}

TEST_CASE("masked_blend equals an elementwise if/else")
{
    RngStream rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix a = rng.uniform_matrix(3, 5);
        const Matrix b = rng.uniform_matrix(3, 5);
        const Mask m = (rng.uniform_matrix(3, 5).array() < 0.5).cast<std::uint8_t>();
        const Matrix r = masked_blend(m, a, b);
        for (Index i = 0; i < 3; ++i)
            for (Index j = 0; j < 5; ++j) CHECK(r(i, j) == (m(i, j) ? a(i, j) : b(i, j)));
    }
}

TEST_CASE("batched_map equals a sequential loop")
{
    const Matrix a = mat({{1, 2}, {3, 4}});
    const Matrix sums = batched_map([](const Eigen::Ref<const RowVector>& r) { return RowVector::Constant(1, r.sum()); }, a);
    CHECK(sums(0, 0) == 3.0);
    CHECK(sums(1, 0) == 7.0);
    CHECK(batched_map([](const Eigen::Ref<const RowVector>& r) { return RowVector(r); }, a) == a);

    RngStream rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const Index rows = 1 + trial % 7;
        const Index cols = 1 + trial % 4;
        const Matrix x = rng.uniform_matrix(rows, cols);
        const double c = rng.uniform();
        auto f = [c, trial](const Eigen::Ref<const RowVector>& r) -> RowVector {
            switch (trial % 4) {
            case 0: return (r.array() * c).matrix();
            case 1: return RowVector::Constant(2, r.maxCoeff() - c);
            case 2: return r.array().sin().matrix();
            default: return r.reverse();
            }
        };
        const Matrix got = batched_map(f, x);
        for (Index i = 0; i < rows; ++i) CHECK(got.row(i) == f(x.row(i)));
    }
}

TEST_CASE("batched_map errors")
{
    CHECK_THROWS_AS(batched_map([](const Eigen::Ref<const RowVector>& r) { return RowVector(r); }, Matrix(0, 2)), ShapeError);
    const Matrix a = mat({{1, 2}, {3, 4}});
    auto ragged = [](const Eigen::Ref<const RowVector>& r) { return RowVector::Zero(r(0) > 2.0 ? 2 : 1); };
    CHECK_THROWS_AS(batched_map(ragged, a), ShapeError);
    auto throwing = [](const Eigen::Ref<const RowVector>&) -> RowVector { throw std::runtime_error("boom"); };
    CHECK_THROWS_AS(batched_map(throwing, a), std::runtime_error);
}

TEST_CASE("argsort_stable and lexsort")
{
    const std::vector<double> v{3, 1, 2};
    CHECK(argsort_stable(std::span<const double>(v)) == IndexVector{1, 2, 0});
    const std::vector<double> same{5, 5, 5};
    CHECK(argsort_stable(std::span<const double>(same)) == IndexVector{0, 1, 2});
    const std::vector<double> inf{kSentinel, 0.0, kSentinel};
    CHECK(argsort_stable(std::span<const double>(inf)) == IndexVector{1, 0, 2});

    const std::vector<Index> p{0, 0, 1};
    const std::vector<double> s{2, 1, 0};
    CHECK(lexsort(std::span<const Index>(p), std::span<const double>(s)) == IndexVector{1, 0, 2});
    const std::vector<Index> flat{4, 4, 4};
    CHECK(lexsort(std::span<const Index>(flat), std::span<const double>(v)) == IndexVector{1, 2, 0});
    const std::vector<double> shortv{1.0};
    CHECK_THROWS_AS(lexsort(std::span<const Index>(p), std::span<const double>(shortv)), ShapeError);
}

TEST_CASE("sorts match comparison oracles on data with duplicates")
{
    RngStream rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const Index n = 1 + trial;
        std::vector<double> a(static_cast<std::size_t>(n));
        std::vector<Index> p(static_cast<std::size_t>(n));
        for (Index i = 0; i < n; ++i) {
            a[static_cast<std::size_t>(i)] = std::floor(rng.uniform() * 5.0);
            p[static_cast<std::size_t>(i)] = static_cast<Index>(rng.uniform() * 3.0);
        }
        const IndexVector idx = argsort_stable(std::span<const double>(a));
        IndexVector sorted = idx;
        std::sort(sorted.begin(), sorted.end());
        for (Index i = 0; i < n; ++i) CHECK(sorted[static_cast<std::size_t>(i)] == i);
        for (std::size_t i = 1; i < idx.size(); ++i) {
            const double x = a[static_cast<std::size_t>(idx[i - 1])];
            const double y = a[static_cast<std::size_t>(idx[i])];
            CHECK((x < y || (x == y && idx[i - 1] < idx[i])));
        }
        const IndexVector lx = lexsort(std::span<const Index>(p), std::span<const double>(a));
        for (std::size_t i = 1; i < lx.size(); ++i) {
            const auto u = static_cast<std::size_t>(lx[i - 1]);
            const auto w = static_cast<std::size_t>(lx[i]);
            const bool ordered = p[u] < p[w] || (p[u] == p[w] && (a[u] < a[w] || (a[u] == a[w] && u < w)));
            CHECK(ordered);
        }
    }
}

TEST_CASE("reductions resolve ties to the lowest index and skip NaN")
{
    const double nan = std::nan("");
    const Matrix a = mat({{2, 1, 1}, {nan, 3, 0}, {0, 0, nan}});
    CHECK(row_argmin(a) == IndexVector{1, 2, 0});
    CHECK(col_argmin(a) == IndexVector{2, 2, 1});
    const RowVector lo = nan_col_min(a);
    const RowVector hi = nan_col_max(a);
    CHECK(lo(0) == 0.0);
    CHECK(hi(0) == 2.0);
    CHECK(hi(2) == 1.0);
    const Matrix all_nan = Matrix::Constant(2, 1, nan);
    CHECK(std::isnan(nan_col_min(all_nan)(0)));

    const std::vector<Index> seg{1, 0, 1, 3, -1, 1};
    const Vector val = (Vector(6) << 5, 2, 1, 9, -100, 1).finished();
    CHECK(segment_argmin(seg, val, 3) == IndexVector{1, 2, -1});
    CHECK(segment_count(seg, 3) == std::vector<Index>{1, 3, 0});
}

TEST_CASE("gathers, norms and distances")
{
    const Matrix a = mat({{3, 4}, {0, 0}, {1, 0}});
    const std::vector<Index> idx{2, 0, 2};
    const Matrix g = gather_rows(a, idx);
    CHECK(g.row(0) == a.row(2));
    CHECK(g.row(1) == a.row(0));
    CHECK(g.row(2) == a.row(2));
    const Vector n = row_norms(a);
    CHECK(n(0) == doctest::Approx(5.0));
    CHECK(n(1) == 0.0);
    const Matrix d = pairwise_distances(a, a);
    CHECK(d(0, 1) == doctest::Approx(5.0));
    CHECK(d(1, 0) == doctest::Approx(5.0));
    CHECK(d(0, 0) == doctest::Approx(0.0));
    CHECK(d(0, 2) == doctest::Approx(std::sqrt(20.0)));
}
