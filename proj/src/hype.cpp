#include "temo/hype.hpp"

#include "temo/ndsort.hpp"

#include <algorithm>
#include <stdexcept>

namespace temo::hype {

namespace {

constexpr Index kSampleBlock = 4096;

void check_inputs(const Matrix& f, const RowVector& v_ref)
{
    if (f.rows() < 1) throw ShapeError("hype: empty objective matrix");
    if (v_ref.size() != f.cols()) throw ShapeError("hype: reference point width " + std::to_string(v_ref.size()) +
                                                   " for " + shape_string(f.rows(), f.cols()) + " objectives");
    if (f.hasNaN() || v_ref.hasNaN()) throw std::invalid_argument("hype: NaN in objectives or reference point");
}

} // namespace

Vector alpha_weights(Index n1, Index k)
{
    if (k < 0 || k > n1) throw std::invalid_argument("alpha_weights: k must lie in [0, n1]");
    Vector alpha(k);
    double prod = 1.0;
    for (Index j = 0; j < k; ++j) {
        // lambda_1 = 1, lambda_{j+1} = (k - j) / (n1 - j)
        if (j > 0) prod *= static_cast<double>(k - j) / static_cast<double>(n1 - j);
        alpha(j) = prod / static_cast<double>(j + 1);
    }
    return alpha;
}

Vector hv_estimate(const Matrix& f, const HvEstimateParams& params, RngStream& rng)
{
    check_inputs(f, params.v_ref);
    const Index n1 = f.rows();
    const Index m = f.cols();
    if (params.samples < 1) throw std::invalid_argument("hv_estimate: sample count must be positive");
    if (params.k < 1 || params.k > n1) throw std::invalid_argument("hv_estimate: k must lie in [1, n1]");

    const RowVector lo = f.colwise().minCoeff();
    const RowVector width = params.v_ref - lo;
    Vector out = Vector::Zero(n1);
    if ((width.array() <= 0.0).any()) return out;

    const Vector alpha = alpha_weights(n1, params.k);
    const Index s = params.samples;

    for (Index start = 0; start < s; start += kSampleBlock) {
        const Index len = std::min(kSampleBlock, s - start);
        Matrix samples = rng.uniform_matrix(len, m);
        samples = (samples.array().rowwise() * width.array()).rowwise() + lo.array();

        // T_pds(i, j) = 1 iff row i dominates-or-equals sample j.
        Mask t(n1, len);
#pragma omp parallel for schedule(static)
        for (Index i = 0; i < n1; ++i) {
            for (Index j = 0; j < len; ++j) {
                t(i, j) = (f.row(i).array() <= samples.row(j).array()).all() ? 1 : 0;
            }
        }
        // delta = dominators - 1; dominated samples with delta >= k add nothing.
        const Eigen::Array<Index, 1, Eigen::Dynamic> ds =
            (t.cast<Index>().colwise().sum() - 1).cwiseMax(Index{0});
#pragma omp parallel for schedule(static)
        for (Index i = 0; i < n1; ++i) {
            double acc = 0.0;
            for (Index j = 0; j < len; ++j) {
                if (t(i, j) != 0 && ds(j) < params.k) acc += alpha(ds(j));
            }
            out(i) += acc;
        }
    }
    return out * (width.prod() / static_cast<double>(s));
}

Vector exact_hype_fitness_oracle(const Matrix& f, const RowVector& v_ref, Index k)
{
    check_inputs(f, v_ref);
    const Index n1 = f.rows();
    const Index m = f.cols();
    if (n1 > 8 || m > 3) throw std::invalid_argument("exact_hype_fitness_oracle: limited to 8 points and 3 objectives");
    if (k < 1 || k > n1) throw std::invalid_argument("exact_hype_fitness_oracle: k must lie in [1, n1]");

    const RowVector lo = f.colwise().minCoeff();
    Vector out = Vector::Zero(n1);
    if (((v_ref - lo).array() <= 0.0).any()) return out;
    const Vector alpha = alpha_weights(n1, k);

    std::vector<std::vector<double>> cuts(static_cast<std::size_t>(m));
    for (Index c = 0; c < m; ++c) {
        auto& axis = cuts[static_cast<std::size_t>(c)];
        for (Index i = 0; i < n1; ++i) {
            if (f(i, c) < v_ref(c)) axis.push_back(f(i, c));
        }
        axis.push_back(v_ref(c));
        std::sort(axis.begin(), axis.end());
        axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
    }

    std::vector<std::size_t> cell(static_cast<std::size_t>(m), 0);
    while (true) {
        double vol = 1.0;
        RowVector corner(m);
        for (Index c = 0; c < m; ++c) {
            const auto& axis = cuts[static_cast<std::size_t>(c)];
            const auto at = cell[static_cast<std::size_t>(c)];
            corner(c) = axis[at];
            vol *= axis[at + 1] - axis[at];
        }
        std::vector<Index> dominators;
        for (Index i = 0; i < n1; ++i) {
            if ((f.row(i).array() <= corner.array()).all()) dominators.push_back(i);
        }
        const auto u = static_cast<Index>(dominators.size());
        if (u >= 1 && u <= k) {
            for (Index i : dominators) out(i) += vol * alpha(u - 1);
        }

        Index c = 0;
        for (; c < m; ++c) {
            auto& at = cell[static_cast<std::size_t>(c)];
            if (++at + 1 < cuts[static_cast<std::size_t>(c)].size()) break;
            at = 0;
        }
        if (c == m) break;
    }
    return out;
}

RowVector default_reference(const Matrix& f)
{
    const RowVector hi = f.colwise().maxCoeff();
    RowVector range = hi - f.colwise().minCoeff();
    range = (range.array() > 0.0).select(range, 1.0);
    return hi + 0.1 * range;
}

IndexVector environmental_selection_indices(const Matrix& f, const RowVector& v_ref, Index n, Index samples,
                                            RngStream& rng)
{
    const RankResult ranks = rank_assign(f, n);
    const Index n1 = f.rows();
    Index admitted = 0;
    for (Index r : ranks.rank) admitted += r <= ranks.last ? 1 : 0;
    const Index k = admitted - n;

    Vector hv = Vector::Zero(n1);
    if (k >= 1) hv = hv_estimate(f, HvEstimateParams{v_ref, k, samples}, rng);

    // Sort key -d: -contribution for admitted rows, +inf (here the sentinel) otherwise.
    std::vector<double> neg_d(static_cast<std::size_t>(n1));
    for (Index i = 0; i < n1; ++i) {
        neg_d[static_cast<std::size_t>(i)] = ranks.rank[static_cast<std::size_t>(i)] <= ranks.last ? -hv(i) : kSentinel;
    }
    IndexVector order = lexsort(std::span<const Index>(ranks.rank), std::span<const double>(neg_d));
    order.resize(static_cast<std::size_t>(n));
    return order;
}

Population environmental_selection(const Population& merged, const RowVector& v_ref, Index n, Index samples,
                                   RngStream& rng)
{
    return merged.take(environmental_selection_indices(merged.f, v_ref, n, samples, rng));
}

} // namespace temo::hype
