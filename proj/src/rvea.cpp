#include "temo/rvea.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace temo::rvea {

void ApdParams::validate() const
{
    if (!(alpha > 0.0)) throw std::invalid_argument("rvea: alpha must be positive");
    if (!(t_max > 0.0)) throw std::invalid_argument("rvea: t_max must be positive");
    if (!(t >= 0.0 && t <= t_max)) throw std::invalid_argument("rvea: generation t outside [0, t_max]");
}

Matrix angles(const Matrix& fp, const Matrix& v)
{
    if (fp.cols() != v.cols()) throw ShapeError("rvea: objective and direction widths differ");
    const Vector fn = row_norms(fp);
    const Vector vn = row_norms(v);
    Matrix cosine = fp * v.transpose();
    for (Index i = 0; i < cosine.rows(); ++i) {
        for (Index j = 0; j < cosine.cols(); ++j) {
            const double denom = fn(i) * vn(j);
            cosine(i, j) = denom > 0.0 ? std::clamp(cosine(i, j) / denom, -1.0, 1.0) : 0.0;
        }
    }
    return cosine.array().acos().matrix();
}

Vector direction_spread(const Matrix& v)
{
    const Index r = v.rows();
    Vector gamma = Vector::Constant(r, std::numbers::pi / 2.0);
    if (r < 2) return gamma;
    Matrix a = angles(v, v);
    a.diagonal().setConstant(kSentinel);
    return a.rowwise().minCoeff();
}

IndexVector apd_elites(const Matrix& f, const Matrix& v, const ApdParams& params)
{
    params.validate();
    if (f.rows() < 1) throw ShapeError("apd_select: empty population");
    if (v.rows() < 1) throw ShapeError("apd_select: empty direction set");
    const Index m = f.cols();

    const Matrix fp = f.rowwise() - f.colwise().minCoeff();
    const Matrix theta = angles(fp, v);
    const IndexVector partition = row_argmin(theta);
    const Vector gamma = direction_spread(v);
    const Vector norm = row_norms(fp);
    const double scale = static_cast<double>(m) * std::pow(params.t / params.t_max, params.alpha);

    Vector apd(f.rows());
    for (Index i = 0; i < f.rows(); ++i) {
        const Index j = partition[static_cast<std::size_t>(i)];
        apd(i) = (1.0 + scale * theta(i, j) / gamma(j)) * norm(i);
    }
    return segment_argmin(partition, apd, v.rows());
}

IndexVector apd_select_indices(const Matrix& f, const Matrix& v, const ApdParams& params)
{
    IndexVector out;
    for (Index e : apd_elites(f, v, params)) {
        if (e >= 0) out.push_back(e);
    }
    return out;
}

Population apd_select(const Population& pop, const DirectionSet& v, const ApdParams& params)
{
    return pop.take(apd_select_indices(pop.f, v.weights, params));
}

} // namespace temo::rvea
