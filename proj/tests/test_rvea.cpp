#include "doctest.h"

#include "oracles.hpp"
#include "temo/reference.hpp"
#include "temo/rvea.hpp"

#include <cmath>
#include <numbers>
#include <set>

using namespace temo;
using namespace temo::rvea;

TEST_CASE("parameter validation")
{
    CHECK_NOTHROW(ApdParams{}.validate());
    CHECK_THROWS_AS((ApdParams{0.0, 0.0, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ApdParams{2.0, 2.0, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ApdParams{2.0, 0.0, 0.0}.validate()), std::invalid_argument);
}

TEST_CASE("angles and spread")
{
    const Matrix v = (Matrix(2, 2) << 1, 0, 0, 1).finished();
    const Matrix a = angles((Matrix(2, 2) << 1, 1, 0, 0).finished(), v);
    CHECK(a(0, 0) == doctest::Approx(std::numbers::pi / 4.0));
    CHECK(a(1, 0) == doctest::Approx(std::numbers::pi / 2.0));
    CHECK(direction_spread(v)(0) == doctest::Approx(std::numbers::pi / 2.0));
    CHECK(direction_spread(Matrix::Ones(1, 3))(0) == doctest::Approx(std::numbers::pi / 2.0));
}

TEST_CASE("t = 0 keeps the smallest translated norm in each partition")
{
    const Matrix v = (Matrix(2, 2) << 1, 0, 0, 1).finished();
    // Column minimum is (0, 0.1); rows 0 and 1 fall to direction 0, rows 2 and 3 to direction 1.
    const Matrix f = (Matrix(4, 2) << 3, 1, 2, 0.1, 0, 2, 0.5, 4).finished();
    const IndexVector e = apd_elites(f, v, {2.0, 0.0, 10.0});
    CHECK(e == IndexVector{1, 2});
}

TEST_CASE("a collinear member has APD equal to its norm")
{
    const Matrix v = (Matrix(2, 2) << 1, 0, 0, 1).finished();
    const Matrix f = (Matrix(3, 2) << 0, 0, 2, 0, 1.9, 0.3).finished();
    // Row 1 lies on direction 0 with APD 2 for every t; row 2 pays an angle penalty.
    CHECK(apd_elites(f, v, {2.0, 1.0, 1.0})[0] == 0);
    const Matrix g = (Matrix(3, 2) << 0, 5, 2, 0, 1.9, 0.3).finished();
    CHECK(apd_elites(g, v, {2.0, 1.0, 1.0})[0] == 1);
    CHECK(apd_elites(g, v, {2.0, 0.0, 1.0})[0] == 2);
}

TEST_CASE("empty partitions are reported and skipped")
{
    const Matrix v = das_dennis(2, 4).weights;
    const Matrix f = (Matrix(2, 2) << 0, 1, 1, 0).finished();
    const IndexVector e = apd_elites(f, v, {});
    CHECK(e == IndexVector{0, -1, -1, -1, 1});
    CHECK(apd_select_indices(f, v, {}) == IndexVector{0, 1});
}

TEST_CASE("elites equal the sequential scan and never share a direction")
{
    RngStream rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const Index m = 2 + trial % 3;
        const Index n = 1 + static_cast<Index>(rng.uniform() * 32.0);
        const Index r = 1 + static_cast<Index>(rng.uniform() * 16.0);
        const Matrix f = rng.uniform_matrix(n, m);
        const Matrix v = rng.uniform_matrix(r, m).array() + 0.01;
        const double t = trial % 4 == 0 ? 0.0 : rng.uniform() * 50.0;
        const IndexVector got = apd_elites(f, v, {2.0, t, 50.0});
        const std::vector<Index> want = oracle::rvea_scan(f, v, 2.0, t, 50.0);
        CHECK(got == IndexVector(want.begin(), want.end()));
        const IndexVector sel = apd_select_indices(f, v, {2.0, t, 50.0});
        CHECK(static_cast<Index>(sel.size()) <= r);
        CHECK(std::set<Index>(sel.begin(), sel.end()).size() == sel.size());
    }
}

TEST_CASE("scaling all objectives by a constant keeps the elites")
{
    RngStream rng(2);
    const Matrix v = das_dennis(3, 5).weights;
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix f = rng.uniform_matrix(40, 3);
        const ApdParams p{2.0, 7.0, 10.0};
        CHECK(apd_elites(f, v, p) == apd_elites(f * 8.0, v, p));
    }
}

TEST_CASE("apd_select gathers population rows")
{
    RngStream rng(3);
    const Population pop{rng.uniform_matrix(10, 4), rng.uniform_matrix(10, 2)};
    const DirectionSet v = das_dennis(2, 3);
    const Population out = apd_select(pop, v, {});
    const IndexVector idx = apd_select_indices(pop.f, v.weights, {});
    REQUIRE(out.size() == static_cast<Index>(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) CHECK(out.x.row(static_cast<Index>(k)) == pop.x.row(idx[k]));
}
