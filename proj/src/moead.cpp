#include "temo/moead.hpp"

#include <cmath>
#include <stdexcept>

namespace temo::moead {

double pbi(const RowVector& f, const RowVector& w, const RowVector& z, const PbiOptions& options)
{
    const double wnorm = w.norm();
    if (!(wnorm > 0.0)) throw std::invalid_argument("pbi: zero weight vector");
    const RowVector diff = f - z;
    const double d1 = std::abs(diff.dot(w)) / wnorm;
    const RowVector along = options.normalized_direction ? RowVector(d1 * w / wnorm) : RowVector(d1 * w);
    const double d2 = (diff - along).norm();
    return d1 + options.theta * d2;
}

Index default_neighborhood(Index n)
{
    const auto tenth = static_cast<Index>(std::ceil(0.1 * static_cast<double>(n)));
    return std::min<Index>(20, std::max<Index>(2, tenth));
}

MoeadState MoeadState::init(Population pop, Matrix weights, Index neighborhood, PbiOptions options)
{
    if (pop.size() != weights.rows()) throw std::invalid_argument("moead: population size must equal the number of weights");
    MoeadState s;
    s.ideal = pop.f.colwise().minCoeff();
    s.neighbors = temo::neighbors(DirectionSet{weights, DirectionKind::simplex}, neighborhood);
    s.pop = std::move(pop);
    s.weights = std::move(weights);
    s.pbi = options;
    return s;
}

CompareUpdate compare_update(const MoeadState& state, const Matrix& f2)
{
    const Index n = state.pop.size();
    const Index t = state.neighbors.size();
    if (f2.rows() != n || f2.cols() != state.pop.f.cols()) throw ShapeError("compare_update: offspring objective shape");

    CompareUpdate out;
    out.ideal = state.ideal.cwiseMin(state.pop.f.colwise().minCoeff()).cwiseMin(f2.colwise().minCoeff());

    // f_op1 over rows of (I_nb, F2): start from I_sub = [0..n-1] and blend in -1
    // wherever H(g_old - g_new) fires.
    out.update.resize(n, n);
#pragma omp parallel for schedule(static)
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) out.update(i, j) = j;
        const RowVector child = f2.row(i);
        for (Index k = 0; k < t; ++k) {
            const Index j = state.neighbors.index(i, k);
            const RowVector w = state.weights.row(j);
            const double g_old = pbi(state.pop.f.row(j), w, out.ideal, state.pbi);
            const double g_new = pbi(child, w, out.ideal, state.pbi);
            if (g_old - g_new >= 0.0) out.update(i, j) = -1;
        }
    }
    return out;
}

Population elite_select(const MoeadState& state, const Population& offspring, const IndexMatrix& update,
                        const RowVector& ideal)
{
    const Index n = state.pop.size();
    if (update.rows() != n || update.cols() != n) throw ShapeError("elite_select: update matrix shape");
    if (offspring.size() != n) throw ShapeError("elite_select: offspring count");

    // f_op2 over columns of I_new: candidate row i is offspring i where the
    // entry is -1, else incumbent j.
    IndexVector winner(static_cast<std::size_t>(n));
    std::vector<std::uint8_t> from_offspring(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
    for (Index j = 0; j < n; ++j) {
        const RowVector w = state.weights.row(j);
        const double g_incumbent = pbi(state.pop.f.row(j), w, ideal, state.pbi);
        Index best = -1;
        double best_g = 0.0;
        bool best_child = false;
        for (Index i = 0; i < n; ++i) {
            const bool child = update(i, j) == -1;
            const double g = child ? pbi(offspring.f.row(i), w, ideal, state.pbi) : g_incumbent;
            if (best < 0 || g < best_g) {
                best = i;
                best_g = g;
                best_child = child;
            }
        }
        winner[static_cast<std::size_t>(j)] = best;
        from_offspring[static_cast<std::size_t>(j)] = best_child ? 1 : 0;
    }

    Population next{Matrix(n, state.pop.x.cols()), Matrix(n, state.pop.f.cols())};
    for (Index j = 0; j < n; ++j) {
        const auto jj = static_cast<std::size_t>(j);
        if (from_offspring[jj]) {
            next.x.row(j) = offspring.x.row(winner[jj]);
            next.f.row(j) = offspring.f.row(winner[jj]);
        } else {
            next.x.row(j) = state.pop.x.row(j);
            next.f.row(j) = state.pop.f.row(j);
        }
    }
    return next;
}

OffspringDraws OffspringDraws::sample(RngStream& rng, Index n, Index d, const VariationParams& params)
{
    OffspringDraws draws;
    draws.pick = rng.uniform_matrix(n, 2);
    draws.sbx_mu = rng.uniform_matrix(n, d);
    if (params.per_gene_mixing) {
        draws.skip = rng.uniform_matrix(n, d);
        draws.flip = rng.uniform_matrix(n, d);
    }
    draws.mutate = (rng.uniform_matrix(n, d).array() < params.mutation_probability()).cast<std::uint8_t>();
    draws.mutation_mu = rng.uniform_matrix(n, d);
    return draws;
}

Matrix offspring_decisions(const MoeadState& state, const OffspringDraws& draws, const VariationParams& params)
{
    const Index n = state.pop.size();
    const Index t = state.neighbors.size();
    if (t < 2) throw std::invalid_argument("moead: neighbourhood size must be at least 2 to pick two parents");

    IndexVector first(static_cast<std::size_t>(n));
    IndexVector second(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        const auto a = std::min<Index>(t - 1, static_cast<Index>(draws.pick(i, 0) * static_cast<double>(t)));
        auto b = std::min<Index>(t - 2, static_cast<Index>(draws.pick(i, 1) * static_cast<double>(t - 1)));
        if (b >= a) ++b;
        first[static_cast<std::size_t>(i)] = state.neighbors.index(i, a);
        second[static_cast<std::size_t>(i)] = state.neighbors.index(i, b);
    }
    Matrix beta = sbx_spread(draws.sbx_mu, params.eta_c);
    if (draws.skip.size() > 0) beta = mix_spread(beta, draws.skip, draws.flip);
    const Matrix children = clip_to_bounds(
        sbx_children(gather_rows(state.pop.x, first), gather_rows(state.pop.x, second), beta), params.lower, params.upper);
    return polynomial_mutation(children.topRows(n), draws.mutate, draws.mutation_mu, params);
}

Population offspring(const MoeadState& state, RngStream& rng, const ProblemSpec& problem, const VariationParams& params)
{
    const auto draws = OffspringDraws::sample(rng, state.pop.size(), state.pop.x.cols(), params);
    Matrix o = offspring_decisions(state, draws, params);
    Matrix f = evaluate(problem, o);
    return {std::move(o), std::move(f)};
}

void step(MoeadState& state, RngStream& rng, const ProblemSpec& problem, const VariationParams& params)
{
    const Population kids = offspring(state, rng, problem, params);
    const CompareUpdate cu = compare_update(state, kids.f);
    state.pop = elite_select(state, kids, cu.update, cu.ideal);
    state.ideal = cu.ideal;
}

} // namespace temo::moead
