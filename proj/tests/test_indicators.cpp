#include "doctest.h"

#include "oracles.hpp"
#include "temo/indicators.hpp"
#include "temo/reference.hpp"

#include <cmath>

using namespace temo;

TEST_CASE("igd examples")
{
    RngStream rng(1);
    const Matrix f = rng.uniform_matrix(10, 3);
    CHECK(igd(f, f) == 0.0);
    CHECK(igd((Matrix(1, 2) << 3, 4).finished(), Matrix::Zero(1, 2)) == doctest::Approx(5.0));
    CHECK_THROWS_AS(igd(Matrix(0, 2), f.leftCols(2)), std::invalid_argument);
    CHECK_THROWS(igd(f, Matrix::Zero(3, 2)));
}

TEST_CASE("igd matches the double loop")
{
    RngStream rng(2);
    for (int trial = 0; trial < 30; ++trial) {
        const Matrix f = rng.uniform_matrix(5 + trial, 3);
        const Matrix front = rng.uniform_matrix(40, 3);
        CHECK(std::abs(igd(f, front) - oracle::igd(f, front)) < 1e-12);
    }
}

TEST_CASE("hv examples")
{
    const RowVector ref = RowVector::Ones(2);
    CHECK(hv_indicator(Matrix::Zero(1, 2), ref).value == 1.0);
    const Matrix two = (Matrix(2, 2) << 0, 0.5, 0.5, 0).finished();
    CHECK(hv_indicator(two, ref).value == doctest::Approx(0.75));
    CHECK(hv_indicator((Matrix(1, 2) << 1.0, 0.2).finished(), ref).value == 0.0);
    CHECK(hv_indicator((Matrix(1, 3) << 0.5, 0.5, 0.5).finished(), RowVector::Ones(3)).value == doctest::Approx(0.125));
}

TEST_CASE("exact m = 3 hypervolume equals grid integration")
{
    RngStream rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Index n = 1 + trial % 10;
        // A 1/20 lattice puts every box face on a grid line.
        const Matrix f = (rng.uniform_matrix(n, 3).array() * 20.0).floor().matrix() / 20.0;
        const RowVector ref = RowVector::Ones(3);
        const HvResult hv = hv_indicator(f, ref);
        CHECK(hv.exact);
        const double grid = oracle::hv_grid(f, ref, 100, RowVector::Zero(3));
        CHECK(std::abs(hv.value - grid) <= 1e-3 * std::max(grid, 1e-12));
    }
}

TEST_CASE("hypervolume properties")
{
    RngStream rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix f = rng.uniform_matrix(8, 3);
        const RowVector ref = RowVector::Constant(3, 1.1);
        const double base = hv_indicator(f, ref).value;
        Matrix more(9, 3);
        more.topRows(8) = f;
        more.row(8) = rng.uniform_matrix(1, 3).row(0);
        CHECK(hv_indicator(more, ref).value >= base - 1e-15);
        // A point dominated by an existing one adds nothing.
        more.row(8) = f.row(0).array() + 0.01;
        CHECK(hv_indicator(more, ref).value == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("m = 2 hypervolume equals grid integration")
{
    RngStream rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix f = (rng.uniform_matrix(12, 2).array() * 50.0).floor().matrix() / 50.0;
        const double grid = oracle::hv_grid(f, RowVector::Ones(2), 500, RowVector::Zero(2));
        CHECK(std::abs(hv_indicator(f, RowVector::Ones(2)).value - grid) <= 1e-3 * std::max(grid, 1e-12));
    }
}

TEST_CASE("m > 3 falls back to a flagged Monte-Carlo estimate")
{
    const Matrix f = Matrix::Constant(1, 4, 0.5);
    const HvResult hv = hv_indicator(f, RowVector::Ones(4));
    CHECK_FALSE(hv.exact);
    CHECK(hv.value == doctest::Approx(0.0625).epsilon(0.02));
    CHECK(hv_indicator(f, RowVector::Ones(4)).value == hv.value);
}

TEST_CASE("expected utility examples")
{
    const Matrix w = (Matrix(1, 2) << 1, 0).finished();
    CHECK(eu((Matrix(1, 2) << 2, 9).finished(), w, UtilitySense::maximize) == 2.0);
    RngStream rng(6);
    const Matrix f = rng.uniform_matrix(6, 3);
    Matrix dup(12, 3);
    dup << f, f;
    const Matrix weights = das_dennis(3, 4).weights;
    CHECK(eu(dup, weights) == eu(f, weights));
}

TEST_CASE("expected utility matches the loop oracle")
{
    RngStream rng(7);
    const Matrix weights = das_dennis(3, 6).weights;
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix f = rng.uniform_matrix(10, 3);
        CHECK(eu(f, weights) == doctest::Approx(oracle::eu(f, weights, true)).epsilon(1e-12));
        CHECK(eu(f, weights, UtilitySense::maximize) == doctest::Approx(oracle::eu(f, weights, false)).epsilon(1e-12));
    }
}

TEST_CASE("literal expected utility averages the largest weighted term")
{
    const Matrix f = (Matrix(2, 2) << 1, 3, 2, 2).finished();
    const Matrix w = (Matrix(1, 2) << 0.5, 0.5).finished();
    // max(0.5, 1.5) = 1.5 and max(1, 1) = 1, averaged.
    CHECK(eu(f, w, UtilitySense::maximize, EuForm::literal) == doctest::Approx(1.25));
}
