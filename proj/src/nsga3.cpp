#include "temo/nsga3.hpp"

#include "temo/ndsort.hpp"

#include <cmath>
#include <stdexcept>

namespace temo::nsga3 {

namespace {

constexpr double kAxisEpsilon = 1e-6;
constexpr double kMaxCondition = 1e8;
constexpr double kMinIntercept = 1e-10;

RowVector fallback_intercepts(const Matrix& shifted)
{
    RowVector a = nan_col_max(shifted);
    // A column with zero spread normalises to 0 whatever the divisor.
    for (Index j = 0; j < a.size(); ++j) {
        if (!(a(j) > kMinIntercept)) a(j) = 1.0;
    }
    return a;
}

} // namespace

NormalizedObjectives normalize(const Matrix& f)
{
    const Index m = f.cols();
    NormalizedObjectives out;
    out.ideal = nan_col_min(f);
    if (out.ideal.array().isNaN().any()) {
        throw std::invalid_argument("normalize: no retained rows");
    }
    const Matrix shifted = f.rowwise() - out.ideal;

    // Extreme point per axis: argmin over rows of max_j F_ij / w_j with w = e_k (+ eps).
    Matrix extremes(m, m);
    for (Index k = 0; k < m; ++k) {
        RowVector w = RowVector::Constant(m, kAxisEpsilon);
        w(k) = 1.0;
        Matrix asf = (shifted.array().rowwise() / w.array()).rowwise().maxCoeff().matrix();
        for (Index i = 0; i < f.rows(); ++i) {
            if (shifted.row(i).hasNaN()) asf(i, 0) = std::numeric_limits<double>::quiet_NaN();
        }
        extremes.row(k) = shifted.row(col_argmin(asf).front());
    }

    bool ok = false;
    RowVector intercepts(m);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(extremes);
    const auto& sv = svd.singularValues();
    if (sv(m - 1) > 0.0 && sv(0) / sv(m - 1) <= kMaxCondition) {
        // E b = 1, intercepts a = 1 / b.
        const Eigen::VectorXd b = Eigen::MatrixXd(extremes).fullPivLu().solve(Eigen::VectorXd::Ones(m));
        intercepts = b.cwiseInverse().transpose();
        ok = intercepts.allFinite() && (intercepts.array() > kMinIntercept).all();
    }
    out.fallback = !ok;
    out.intercepts = ok ? intercepts : fallback_intercepts(shifted);
    out.normalized = shifted.array().rowwise() / out.intercepts.array();
    return out;
}

Matrix perpendicular_distances(const Matrix& fp, const Matrix& reference)
{
    if (fp.cols() != reference.cols()) throw ShapeError("associate: objective count mismatch");
    const Vector fnorm = row_norms(fp);
    const Vector rnorm = row_norms(reference);
    const Matrix cosine = ((fp * reference.transpose()).array().colwise() / fnorm.array()).rowwise() /
                          rnorm.transpose().array();
    Matrix d = ((1.0 - cosine.array().square()).max(0.0).sqrt().colwise() * fnorm.array()).matrix();
    for (Index i = 0; i < fp.rows(); ++i) {
        if (fnorm(i) == 0.0) d.row(i).setZero();
    }
    return d;
}

AssociationResult associate(const Matrix& fp, const Matrix& reference)
{
    const Matrix d = perpendicular_distances(fp, reference);
    AssociationResult out;
    out.direction = row_argmin(d);
    out.distance.resize(d.rows());
    for (Index i = 0; i < d.rows(); ++i) {
        out.distance(i) = d(i, out.direction[static_cast<std::size_t>(i)]);
    }
    return out;
}

NicheState niche_counts(std::span<const Index> rank, std::span<const Index> direction, Index last, Index directions)
{
    if (rank.size() != direction.size()) throw ShapeError("niche_counts: length mismatch");
    std::vector<Index> below(direction.size());
    std::vector<Index> at(direction.size());
    for (std::size_t i = 0; i < rank.size(); ++i) {
        below[i] = rank[i] < last ? direction[i] : -1;
        at[i] = rank[i] == last ? direction[i] : -1;
    }
    NicheState state;
    state.rho = segment_count(below, directions);
    state.rho_last = segment_count(at, directions);
    for (Index c : state.rho) state.selected += c;
    return state;
}

NicheSelection niche_select(const NicheState& state, std::span<const Index> rank, std::span<const Index> direction,
                            const Vector& distance, Index last)
{
    const auto directions = static_cast<Index>(state.rho.size());
    // Only rank-`last` members whose niche is empty and fillable compete.
    std::vector<Index> segment(rank.size());
    for (std::size_t i = 0; i < rank.size(); ++i) {
        const Index j = direction[i];
        const bool open = j >= 0 && j < directions && state.rho[static_cast<std::size_t>(j)] == 0 &&
                          state.rho_last[static_cast<std::size_t>(j)] > 0;
        segment[i] = rank[i] == last && open ? j : -1;
    }
    const IndexVector winner = segment_argmin(segment, distance, directions);

    NicheSelection out;
    out.rank.assign(rank.begin(), rank.end());
    out.selected = state.selected;
    for (Index q : winner) {
        if (q < 0) continue;
        out.rank[static_cast<std::size_t>(q)] = last - 1;
        out.promoted.push_back(q);
        ++out.selected;
    }
    return out;
}

std::vector<Index> update_rank(std::span<const Index> rank, std::span<const Index> promoted, Index n_dif, Index last)
{
    std::vector<Index> out(rank.begin(), rank.end());
    if (n_dif > 0) {
        Index left = n_dif;
        for (std::size_t i = 0; i < out.size() && left > 0; ++i) {
            if (out[i] == last) {
                out[i] = last - 1;
                --left;
            }
        }
        if (left > 0) throw std::logic_error("update_rank: not enough last-front candidates to promote");
    } else if (n_dif < 0) {
        const auto drop = static_cast<std::size_t>(-n_dif);
        if (drop > promoted.size()) throw std::logic_error("update_rank: cannot demote more than were promoted");
        for (std::size_t k = promoted.size() - drop; k < promoted.size(); ++k) {
            out[static_cast<std::size_t>(promoted[k])] = last;
        }
    }
    return out;
}

IndexVector select_indices(const Matrix& f, const Matrix& reference, Index n)
{
    const RankResult ranking = rank_assign(f, n);
    const Index last = ranking.last;

    Matrix masked = f;
    for (Index i = 0; i < f.rows(); ++i) {
        if (ranking.rank[static_cast<std::size_t>(i)] > last) {
            masked.row(i).setConstant(std::numeric_limits<double>::quiet_NaN());
        }
    }
    const NormalizedObjectives norm = normalize(masked);
    const AssociationResult assoc = associate(norm.normalized, reference);
    const NicheState state = niche_counts(ranking.rank, assoc.direction, last, reference.rows());
    const NicheSelection niche = niche_select(state, ranking.rank, assoc.direction, assoc.distance, last);
    const std::vector<Index> rank = update_rank(niche.rank, niche.promoted, n - niche.selected, last);

    IndexVector next;
    next.reserve(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < rank.size(); ++i) {
        if (rank[i] < last) next.push_back(static_cast<Index>(i));
    }
    if (static_cast<Index>(next.size()) != n) throw std::logic_error("nsga3: selection size mismatch");
    return next;
}

IndexVector environmental_selection_indices(const Matrix& f, const Matrix& reference, Index n, RngStream& rng)
{
    const IndexVector perm = rng.permutation(f.rows());
    const IndexVector local = select_indices(gather_rows(f, perm), reference, n);
    IndexVector out(local.size());
    for (std::size_t k = 0; k < local.size(); ++k) out[k] = perm[static_cast<std::size_t>(local[k])];
    return out;
}

Population environmental_selection(const Population& merged, const Matrix& reference, Index n, RngStream& rng)
{
    return merged.take(environmental_selection_indices(merged.f, reference, n, rng));
}

} // namespace temo::nsga3
