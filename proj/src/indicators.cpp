#include "temo/indicators.hpp"

#include <algorithm>
#include <stdexcept>

namespace temo {

namespace {

void check_pair(const Matrix& a, const Matrix& b, const char* what)
{
    if (a.rows() < 1 || b.rows() < 1) throw std::invalid_argument(std::string(what) + ": empty input");
    if (a.cols() != b.cols()) throw ShapeError(std::string(what) + ": widths differ");
}

/// Union area of boxes [p, ref] for 2-D points already strictly inside ref.
double sweep_2d(std::vector<std::pair<double, double>> pts, double rx, double ry)
{
    std::sort(pts.begin(), pts.end());
    double area = 0.0;
    double floor_y = ry;
    for (const auto& [x, y] : pts) {
        if (y < floor_y) {
            area += (rx - x) * (floor_y - y);
            floor_y = y;
        }
    }
    return area;
}

double exact_hv(const Matrix& f, const RowVector& ref)
{
    const Index n = f.rows();
    const Index m = f.cols();
    if (m == 1) return ref(0) - f.col(0).minCoeff();
    if (m == 2) {
        std::vector<std::pair<double, double>> pts;
        for (Index i = 0; i < n; ++i) pts.emplace_back(f(i, 0), f(i, 1));
        return sweep_2d(std::move(pts), ref(0), ref(1));
    }
    // m == 3: slice along the last objective.
    const IndexVector order = argsort_stable(Vector(f.col(2)));
    std::vector<std::pair<double, double>> active;
    double volume = 0.0;
    for (std::size_t s = 0; s < order.size(); ++s) {
        const Index i = order[s];
        active.emplace_back(f(i, 0), f(i, 1));
        const double z_hi = s + 1 < order.size() ? f(order[s + 1], 2) : ref(2);
        const double depth = z_hi - f(i, 2);
        if (depth > 0.0) volume += depth * sweep_2d(active, ref(0), ref(1));
    }
    return volume;
}

} // namespace

double igd(const Matrix& f, const Matrix& front)
{
    check_pair(f, front, "igd");
    const Matrix d = pairwise_distances(front, f);
    return d.rowwise().minCoeff().mean();
}

HvResult hv_indicator(const Matrix& f, const RowVector& ref, Index mc_samples, std::uint64_t mc_seed)
{
    if (ref.size() != f.cols()) throw ShapeError("hv_indicator: reference point width");
    IndexVector keep;
    for (Index i = 0; i < f.rows(); ++i) {
        if ((f.row(i).array() < ref.array()).all()) keep.push_back(i);
    }
    const Index m = f.cols();
    if (keep.empty()) return {0.0, m <= 3};
    const Matrix g = gather_rows(f, keep);
    if (m <= 3) return {exact_hv(g, ref), true};

    if (mc_samples < 1) throw std::invalid_argument("hv_indicator: sample count must be positive");
    const RowVector lo = g.colwise().minCoeff();
    const RowVector width = ref - lo;
    RngStream rng(mc_seed);
    constexpr Index block = 8192;
    Index hits = 0;
    for (Index start = 0; start < mc_samples; start += block) {
        const Index len = std::min(block, mc_samples - start);
        Matrix s = rng.uniform_matrix(len, m);
        s = (s.array().rowwise() * width.array()).rowwise() + lo.array();
        Index local = 0;
#pragma omp parallel for schedule(static) reduction(+ : local)
        for (Index j = 0; j < len; ++j) {
            for (Index i = 0; i < g.rows(); ++i) {
                if ((g.row(i).array() <= s.row(j).array()).all()) {
                    ++local;
                    break;
                }
            }
        }
        hits += local;
    }
    return {width.prod() * static_cast<double>(hits) / static_cast<double>(mc_samples), false};
}

double eu(const Matrix& f, const Matrix& weights, UtilitySense sense, EuForm form)
{
    check_pair(f, weights, "eu");
    const Matrix u = sense == UtilitySense::minimize ? Matrix(-f) : f;
    if (form == EuForm::standard) {
        const Matrix score = weights * u.transpose();
        return score.rowwise().maxCoeff().mean();
    }
    double total = 0.0;
    for (Index w = 0; w < weights.rows(); ++w) {
        const Matrix scaled = u.array().rowwise() * weights.row(w).array();
        total += scaled.rowwise().maxCoeff().mean();
    }
    return total / static_cast<double>(weights.rows());
}

} // namespace temo
