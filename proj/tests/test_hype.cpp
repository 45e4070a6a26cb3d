#include "doctest.h"

#include "oracles.hpp"
#include "temo/hype.hpp"
#include "temo/ndsort.hpp"

#include <cmath>
#include <set>

using namespace temo;
using namespace temo::hype;

namespace {

// Mutually non-dominated points on a noisy line, coordinates in (0, 1).
Matrix front_points(RngStream& rng, Index n, Index m)
{
    Matrix f = rng.uniform_matrix(n, m) * 0.8;
    for (Index i = 0; i < n; ++i) f(i, m - 1) = 0.9 - f.row(i).head(m - 1).mean();
    return f;
}

Vector exact_k(const Matrix& f, const RowVector& v_ref, Index k)
{
    const auto mom = oracle::hype_moments(f, v_ref, k);
    return Eigen::Map<const Vector>(mom.mean.data(), static_cast<Index>(mom.mean.size()));
}

} // namespace

TEST_CASE("alpha weights")
{
    const Vector a = alpha_weights(5, 3);
    REQUIRE(a.size() == 3);
    CHECK(a(0) == 1.0);
    CHECK((a.array() >= 0.0).all());
    CHECK(a(1) == doctest::Approx(0.5 * 2.0 / 4.0));
    CHECK(a(2) == doctest::Approx((2.0 / 4.0) * (1.0 / 3.0) / 3.0));
    CHECK(alpha_weights(4, 1).size() == 1);
}

TEST_CASE("single point estimate is the box volume")
{
    RngStream rng(1);
    const Matrix f = Matrix::Zero(1, 2);
    const Vector v = hv_estimate(f, {RowVector::Ones(2), 1, 10000}, rng);
    CHECK(v(0) == 1.0);
    const Matrix g = Matrix::Ones(1, 2);
    CHECK(hv_estimate(g, {RowVector::Ones(2), 1, 100}, rng)(0) == 0.0);
}

TEST_CASE("argument checks")
{
    RngStream rng(2);
    const Matrix f = Matrix::Zero(2, 2);
    CHECK_THROWS_AS(hv_estimate(f, {RowVector::Ones(2), 1, 0}, rng), std::invalid_argument);
    CHECK_THROWS_AS(hv_estimate(f, {RowVector::Ones(2), 3, 10}, rng), std::invalid_argument);
    CHECK_THROWS_AS(hv_estimate(f, {RowVector::Ones(3), 1, 10}, rng), ShapeError);
    Matrix bad = f;
    bad(0, 0) = std::nan("");
    CHECK_THROWS_AS(hv_estimate(bad, {RowVector::Ones(2), 1, 10}, rng), std::invalid_argument);
}

TEST_CASE("exact fitness examples")
{
    const RowVector ref = RowVector::Ones(2);
    const Matrix one = (Matrix(1, 2) << 0.25, 0.5).finished();
    CHECK(exact_hype_fitness_oracle(one, ref, 1)(0) == doctest::Approx(0.375));

    // Exclusive area 0.25 each plus half of the shared 0.25.
    const Matrix two = (Matrix(2, 2) << 0.0, 0.5, 0.5, 0.0).finished();
    const Vector e = exact_hype_fitness_oracle(two, ref, 2);
    CHECK(e(0) == doctest::Approx(0.375));
    CHECK(e(1) == doctest::Approx(0.375));
    const Vector e1 = exact_hype_fitness_oracle(two, ref, 1);
    CHECK(e1(0) == doctest::Approx(0.25));
}

TEST_CASE("exact fitness agrees with inclusion-exclusion and a midpoint grid")
{
    RngStream rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Index m = 2 + trial % 2;
        const Index n1 = 2 + trial % 5;
        const Index k = 1 + trial % n1;
        const Matrix f = (rng.uniform_matrix(n1, m).array() * 16.0).floor().matrix() / 16.0;
        const RowVector ref = RowVector::Ones(m);
        const Vector cells = exact_hype_fitness_oracle(f, ref, k);
        const Vector ie = exact_k(f, ref, k);
        CHECK((cells - ie).cwiseAbs().maxCoeff() < 1e-12);
        // Coordinates on a 1/16 lattice align exactly with a 64-cell grid.
        const auto grid = oracle::hype_grid(f, ref, k, 64, RowVector::Zero(m));
        for (Index i = 0; i < n1; ++i) CHECK(std::abs(grid[static_cast<std::size_t>(i)] - cells(i)) < 1e-3);
    }
}

TEST_CASE("estimates lie within three standard errors of the exact fitness")
{
    RngStream rng(4);
    int outside = 0;
    int total = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const Index m = 2 + trial % 2;
        const Index n1 = 2 + trial % 4;
        const Matrix f = front_points(rng, n1, m);
        const RowVector ref = RowVector::Ones(m);
        const Index s = 200000;
        const Vector est = hv_estimate(f, {ref, n1, s}, rng);
        const auto mom = oracle::hype_moments(f, ref, n1);
        for (Index i = 0; i < n1; ++i) {
            const double se = mom.sample_sd[static_cast<std::size_t>(i)] / std::sqrt(static_cast<double>(s));
            CHECK(est(i) >= 0.0);
            CHECK(est(i) <= (ref - f.colwise().minCoeff()).prod());
            outside += std::abs(est(i) - mom.mean[static_cast<std::size_t>(i)]) > 3.0 * se ? 1 : 0;
            ++total;
        }
    }
    // Under the null roughly 0.3% of points fall outside 3 SE.
    CHECK(outside <= 1);
    MESSAGE(outside << " of " << total << " estimates outside 3 SE");
}

TEST_CASE("the k = 1 estimator is unbiased")
{
    const RowVector ref = RowVector::Ones(2);
    const Matrix g = (Matrix(2, 2) << 0.2, 0.4, 0.6, 0.1).finished();
    const double exact = exact_hype_fitness_oracle(g, ref, 1)(0);
    const auto mom = oracle::hype_moments(g, ref, 1);
    const Index s = 1000;
    double sum = 0.0;
    for (std::uint64_t stream = 0; stream < 50; ++stream) {
        RngStream rng = RngStream(5).split(stream);
        sum += hv_estimate(g, {ref, 1, s}, rng)(0);
    }
    const double sigma = mom.sample_sd[0] / std::sqrt(static_cast<double>(s));
    CHECK(std::abs(sum / 50.0 - exact) < 3.0 * sigma / std::sqrt(50.0));
}

TEST_CASE("doubling the sample count shrinks the spread by about 1/sqrt(2)")
{
    RngStream root(6);
    const Matrix f = front_points(root, 5, 2);
    const RowVector ref = RowVector::Ones(2);
    const Vector exact = exact_k(f, ref, 5);
    auto spread = [&](Index s, std::uint64_t salt) {
        // Pooled over the five points, 30 repeats each.
        double ss = 0.0;
        for (std::uint64_t r = 0; r < 30; ++r) {
            RngStream rng = root.split({salt, r});
            ss += (hv_estimate(f, {ref, 5, s}, rng) - exact).squaredNorm();
        }
        return std::sqrt(ss / 150.0);
    };
    const double ratio = spread(4000, 1) / spread(2000, 2);
    CHECK(ratio >= 0.6);
    CHECK(ratio <= 0.82);
}

TEST_CASE("default reference point")
{
    const Matrix f = (Matrix(2, 2) << 0, 1, 2, 1).finished();
    const RowVector r = default_reference(f);
    CHECK(r(0) == doctest::Approx(2.2));
    CHECK(r(1) == doctest::Approx(1.1));
}

TEST_CASE("selection examples")
{
    RngStream rng(7);
    // The middle point has by far the smallest exclusive area.
    const Matrix f = (Matrix(3, 2) << 0.0, 1.0, 0.9, 0.9, 1.0, 0.0).finished();
    IndexVector idx = environmental_selection_indices(f, RowVector::Constant(2, 1.1), 2, 20000, rng);
    std::sort(idx.begin(), idx.end());
    CHECK(idx == IndexVector{0, 2});

    const Matrix g = (Matrix(4, 2) << 0, 1, 1, 0, 2, 2, 3, 3).finished();
    idx = environmental_selection_indices(g, RowVector::Constant(2, 4.0), 2, 100, rng);
    std::sort(idx.begin(), idx.end());
    CHECK(idx == IndexVector{0, 1});
}

TEST_CASE("selection agrees with exact-fitness selection")
{
    RngStream rng(8);
    int agree = 0;
    const int trials = 200;
    for (int t = 0; t < trials; ++t) {
        const Index rows = 5 + t % 3;
        const Index n = rows - 2;
        const Matrix f = rng.uniform_matrix(rows, 2);
        const RowVector ref = default_reference(f);
        RngStream sel = rng.split(static_cast<std::uint64_t>(t));
        IndexVector got = environmental_selection_indices(f, ref, n, 100000, sel);

        const RankResult r = rank_assign(f, n);
        Index admitted = 0;
        for (Index v : r.rank) admitted += v <= r.last ? 1 : 0;
        const Index k = admitted - n;
        const Vector fit = k >= 1 ? exact_hype_fitness_oracle(f, ref, k) : Vector(Vector::Zero(rows));
        std::vector<double> key(static_cast<std::size_t>(rows));
        for (Index i = 0; i < rows; ++i) key[static_cast<std::size_t>(i)] = r.rank[static_cast<std::size_t>(i)] <= r.last ? -fit(i) : kSentinel;
        IndexVector want = lexsort(std::span<const Index>(r.rank), std::span<const double>(key));
        want.resize(static_cast<std::size_t>(n));
        agree += std::set<Index>(got.begin(), got.end()) == std::set<Index>(want.begin(), want.end()) ? 1 : 0;
    }
    CHECK(agree >= 190);
    MESSAGE(agree << " of " << trials << " selections agree");
}
