#include "temo/variation.hpp"

#include <cmath>
#include <stdexcept>

namespace temo {

namespace {

void check_same_shape(const Matrix& a, const Matrix& b, const char* who)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError(std::string(who) + ": shape mismatch " + shape_string(a.rows(), a.cols()) + " vs " +
                         shape_string(b.rows(), b.cols()));
    }
}

void check_bounds_width(const Matrix& x, const VariationParams& params, const char* who)
{
    if (x.cols() != params.lower.size() || x.cols() != params.upper.size()) {
        throw ShapeError(std::string(who) + ": bounds do not match decision dimension");
    }
}

} // namespace

VariationParams VariationParams::for_bounds(RowVector lower, RowVector upper)
{
    VariationParams p;
    p.lower = std::move(lower);
    p.upper = std::move(upper);
    return p;
}

double VariationParams::mutation_probability() const
{
    return p_m < 0.0 ? 1.0 / static_cast<double>(lower.size()) : p_m;
}

void VariationParams::validate() const
{
    if (!(eta_c > 0.0) || !(eta_m > 0.0)) throw std::invalid_argument("distribution indices must be positive");
    if (p_m > 1.0) throw std::invalid_argument("mutation probability must be at most 1");
    if (lower.size() != upper.size() || lower.size() == 0) throw std::invalid_argument("bounds must be non-empty and equal length");
    if (!(lower.array() < upper.array()).all()) throw std::invalid_argument("lower bound must be below upper bound");
}

ParentPairs pair_parents(RngStream& rng, Index n)
{
    if (n < 2) throw std::invalid_argument("pair_parents: need n >= 2");
    const IndexVector perm = rng.permutation(n);
    const auto half = static_cast<std::ptrdiff_t>(n / 2);
    return {IndexVector(perm.begin(), perm.begin() + half), IndexVector(perm.begin() + half, perm.begin() + 2 * half)};
}

IndexVector random_mating_pool(RngStream& rng, Index n, Index count)
{
    if (n < 1) throw std::invalid_argument("random_mating_pool: empty population");
    const Vector u = rng.uniform_vector(count);
    IndexVector pool(static_cast<std::size_t>(count));
    for (Index i = 0; i < count; ++i) {
        pool[static_cast<std::size_t>(i)] = std::min<Index>(n - 1, static_cast<Index>(u(i) * static_cast<double>(n)));
    }
    return pool;
}

Matrix sbx_spread(const Matrix& mu, double eta_c)
{
    const double e = 1.0 / (eta_c + 1.0);
    const Mask lower_half = heaviside(Matrix((0.5 - mu.array()).matrix()));
    const Matrix left = (2.0 * mu.array()).pow(e).matrix();
    const Matrix right = (1.0 / (2.0 - 2.0 * mu.array())).pow(e).matrix();
    return masked_blend(lower_half, left, right);
}

Matrix mix_spread(const Matrix& beta, const Matrix& skip, const Matrix& flip)
{
    check_same_shape(beta, skip, "mix_spread");
    check_same_shape(beta, flip, "mix_spread");
    Matrix out = masked_blend(heaviside(Matrix((skip.array() - 0.5).matrix())), beta, Matrix::Ones(beta.rows(), beta.cols()));
    return masked_blend(heaviside(Matrix((flip.array() - 0.5).matrix())), Matrix(-out), out);
}

Matrix sbx_children(const Matrix& x1, const Matrix& x2, const Matrix& beta)
{
    check_same_shape(x1, x2, "sbx");
    check_same_shape(x1, beta, "sbx");
    Matrix out(2 * x1.rows(), x1.cols());
    out.topRows(x1.rows()) = (((1.0 + beta.array()) * x1.array() + (1.0 - beta.array()) * x2.array()) / 2.0).matrix();
    out.bottomRows(x1.rows()) = (((1.0 - beta.array()) * x1.array() + (1.0 + beta.array()) * x2.array()) / 2.0).matrix();
    return out;
}

Matrix sbx(const Matrix& x1, const Matrix& x2, const Matrix& mu, const VariationParams& params)
{
    check_bounds_width(x1, params, "sbx");
    return clip_to_bounds(sbx_children(x1, x2, sbx_spread(mu, params.eta_c)), params.lower, params.upper);
}

Matrix sbx(RngStream& rng, const Matrix& x1, const Matrix& x2, const VariationParams& params)
{
    check_same_shape(x1, x2, "sbx");
    check_bounds_width(x1, params, "sbx");
    const Matrix mu = rng.uniform_matrix(x1.rows(), x1.cols());
    Matrix beta = sbx_spread(mu, params.eta_c);
    if (params.per_gene_mixing) {
        const Matrix skip = rng.uniform_matrix(x1.rows(), x1.cols());
        const Matrix flip = rng.uniform_matrix(x1.rows(), x1.cols());
        beta = mix_spread(beta, skip, flip);
    }
    return clip_to_bounds(sbx_children(x1, x2, beta), params.lower, params.upper);
}

Matrix polynomial_step(const Matrix& xc, const Matrix& mu, const VariationParams& params)
{
    check_same_shape(xc, mu, "polynomial_mutation");
    check_bounds_width(xc, params, "polynomial_mutation");
    const double eta = params.eta_m + 1.0;
    const auto span = (params.upper - params.lower).array();
    const Eigen::ArrayXXd d1 = (xc.array().rowwise() - params.lower.array()).rowwise() / span;
    const Eigen::ArrayXXd d2 = (-(xc.array().rowwise() - params.upper.array())).rowwise() / span;
    const auto m = mu.array();

    const Matrix step1 = ((2.0 * m + (1.0 - 2.0 * m) * (1.0 - d1).pow(eta)).pow(1.0 / eta) - 1.0).matrix();
    const Matrix step2 = (1.0 - (2.0 - 2.0 * m + (2.0 * m - 1.0) * (1.0 - d2).pow(eta)).pow(1.0 / eta)).matrix();
    return masked_blend(heaviside(Matrix((0.5 - m).matrix())), step1, step2);
}

Matrix polynomial_mutation(const Matrix& xc, const Mask& mutate, const Matrix& mu, const VariationParams& params)
{
    if (mutate.rows() != xc.rows() || mutate.cols() != xc.cols()) throw ShapeError("polynomial_mutation: mask shape mismatch");
    const Matrix step = polynomial_step(xc, mu, params);
    const Matrix zero = Matrix::Zero(xc.rows(), xc.cols());
    const Matrix applied = masked_blend(mutate, step, zero);
    const Matrix moved = (xc.array() + applied.array().rowwise() * (params.upper - params.lower).array()).matrix();
    return clip_to_bounds(moved, params.lower, params.upper);
}

Matrix polynomial_mutation(RngStream& rng, const Matrix& xc, const VariationParams& params)
{
    const Matrix gate = rng.uniform_matrix(xc.rows(), xc.cols());
    const Matrix mu = rng.uniform_matrix(xc.rows(), xc.cols());
    const Mask mutate = (gate.array() < params.mutation_probability()).cast<std::uint8_t>();
    return polynomial_mutation(xc, mutate, mu, params);
}

Matrix clip_to_bounds(const Matrix& x, const RowVector& lower, const RowVector& upper)
{
    const Index n = x.rows();
    return x.array().max(lower.replicate(n, 1).array()).min(upper.replicate(n, 1).array()).matrix();
}

Matrix reproduce(RngStream& rng, const Matrix& population, const VariationParams& params)
{
    const ParentPairs pairs = pair_parents(rng, population.rows());
    const Matrix children = sbx(rng, gather_rows(population, pairs.first), gather_rows(population, pairs.second), params);
    return polynomial_mutation(rng, children, params);
}

} // namespace temo
