#include "temo/problems.hpp"

#include "temo/ndsort.hpp"
#include "temo/reference.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace temo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDtlz4Alpha = 100.0;

double g_rastrigin(const Eigen::Ref<const RowVector>& tail)
{
    const double k = static_cast<double>(tail.size());
    double sum = 0.0;
    for (Index i = 0; i < tail.size(); ++i) {
        const double t = tail(i) - 0.5;
        sum += t * t - std::cos(20.0 * kPi * t);
    }
    return 100.0 * (k + sum);
}

double g_sphere(const Eigen::Ref<const RowVector>& tail)
{
    return (tail.array() - 0.5).square().sum();
}

/// f_j = (1 + g) * prod cos(theta_i) * sin(theta_{m-j}) over angles in radians.
void spherical(const RowVector& theta, double scale, Eigen::Ref<RowVector> f)
{
    const Index m = f.size();
    for (Index j = 0; j < m; ++j) {
        double v = scale;
        for (Index i = 0; i < m - 1 - j; ++i) v *= std::cos(theta(i));
        if (j > 0) v *= std::sin(theta(m - 1 - j));
        f(j) = v;
    }
}

RowVector evaluate_row(const ProblemSpec& spec, const Eigen::Ref<const RowVector>& row)
{
    // Own, aligned copy: vectorised reductions then sum in the same order
    // whatever the alignment of the caller's row.
    const RowVector x = row;
    const Index m = spec.objectives;
    const Index d = spec.dim;
    const auto tail = x.tail(d - m + 1);
    RowVector f(m);

    switch (spec.name) {
    case ProblemName::dtlz1: {
        const double scale = 0.5 * (1.0 + g_rastrigin(tail));
        for (Index j = 0; j < m; ++j) {
            double v = scale;
            for (Index i = 0; i < m - 1 - j; ++i) v *= x(i);
            if (j > 0) v *= 1.0 - x(m - 1 - j);
            f(j) = v;
        }
        break;
    }
    case ProblemName::dtlz2:
    case ProblemName::dtlz3:
    case ProblemName::dtlz4: {
        const double g = spec.name == ProblemName::dtlz3 ? g_rastrigin(tail) : g_sphere(tail);
        RowVector theta(m - 1);
        for (Index i = 0; i < m - 1; ++i) {
            const double xi = spec.name == ProblemName::dtlz4 ? std::pow(x(i), kDtlz4Alpha) : x(i);
            theta(i) = xi * kPi / 2.0;
        }
        spherical(theta, 1.0 + g, f);
        break;
    }
    case ProblemName::dtlz5:
    case ProblemName::dtlz6: {
        double g = 0.0;
        if (spec.name == ProblemName::dtlz5) {
            g = g_sphere(tail);
        } else {
            for (Index i = 0; i < tail.size(); ++i) g += std::pow(tail(i), 0.1);
        }
        RowVector theta(m - 1);
        theta(0) = x(0) * kPi / 2.0;
        for (Index i = 1; i < m - 1; ++i) {
            theta(i) = kPi / (4.0 * (1.0 + g)) * (1.0 + 2.0 * g * x(i));
        }
        spherical(theta, 1.0 + g, f);
        break;
    }
    case ProblemName::dtlz7: {
        const double g = 1.0 + 9.0 * tail.sum() / static_cast<double>(tail.size());
        double h = static_cast<double>(m);
        for (Index j = 0; j < m - 1; ++j) {
            f(j) = x(j);
            h -= f(j) / (1.0 + g) * (1.0 + std::sin(3.0 * kPi * f(j)));
        }
        f(m - 1) = (1.0 + g) * h;
        break;
    }
    }
    return f;
}

Matrix dtlz7_front(Index m, Index count)
{
    // Grid over the m-1 free objectives, then keep the non-dominated rows.
    // Roughly a quarter of the grid survives for m = 2, 3.
    const Index free = m - 1;
    const double target = static_cast<double>(count) * 4.0;
    const Index per_axis = std::max<Index>(2, static_cast<Index>(std::ceil(std::pow(target, 1.0 / static_cast<double>(free)))));
    Index total = 1;
    for (Index i = 0; i < free; ++i) total *= per_axis;

    Matrix grid(total, m);
    for (Index row = 0; row < total; ++row) {
        Index rest = row;
        double h = static_cast<double>(m);
        for (Index j = 0; j < free; ++j) {
            const double v = static_cast<double>(rest % per_axis) / static_cast<double>(per_axis - 1);
            rest /= per_axis;
            grid(row, j) = v;
            h -= v / 2.0 * (1.0 + std::sin(3.0 * kPi * v));
        }
        grid(row, m - 1) = 2.0 * h;
    }
    return gather_rows(grid, nondominated_indices(grid));
}

} // namespace

std::string to_string(ProblemName name)
{
    return "dtlz" + std::to_string(static_cast<int>(name) + 1);
}

ProblemName parse_problem_name(std::string_view text)
{
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    for (int i = 0; i < 7; ++i) {
        const auto name = static_cast<ProblemName>(i);
        if (lower == to_string(name)) return name;
    }
    throw std::invalid_argument("unknown problem '" + std::string(text) + "'");
}

Index default_dimension(ProblemName name, Index objectives)
{
    switch (name) {
    case ProblemName::dtlz1: return objectives + 4;
    case ProblemName::dtlz7: return objectives + 19;
    default: return objectives + 9;
    }
}

ProblemSpec ProblemSpec::make(ProblemName name, Index objectives, std::optional<Index> dim)
{
    ProblemSpec spec{name, dim.value_or(default_dimension(name, objectives)), objectives};
    spec.validate();
    return spec;
}

void ProblemSpec::validate() const
{
    if (objectives < 2) throw std::invalid_argument("problem needs at least 2 objectives");
    if (dim < objectives) {
        throw std::invalid_argument(to_string(name) + ": decision dimension " + std::to_string(dim) +
                                    " must be at least the objective count " + std::to_string(objectives));
    }
}

Matrix evaluate(const ProblemSpec& spec, const Matrix& x)
{
    spec.validate();
    if (x.cols() != spec.dim) {
        throw ShapeError(to_string(spec.name) + ": expected " + std::to_string(spec.dim) + " columns, got " +
                         std::to_string(x.cols()));
    }
    if (x.rows() == 0) return Matrix(0, spec.objectives);
    return batched_map([&](const Eigen::Ref<const RowVector>& row) { return evaluate_row(spec, row); }, x);
}

Matrix true_front(const ProblemSpec& spec, Index count)
{
    spec.validate();
    const Index m = spec.objectives;
    if (count < m) {
        throw std::invalid_argument("true_front: count must be at least the objective count");
    }

    switch (spec.name) {
    case ProblemName::dtlz1: {
        const Index h = m == 2 ? count - 1 : divisions_for_count(m, count);
        return das_dennis(m, h).weights * 0.5;
    }
    case ProblemName::dtlz2:
    case ProblemName::dtlz3:
    case ProblemName::dtlz4: {
        const Index h = m == 2 ? count - 1 : divisions_for_count(m, count);
        Matrix w = das_dennis(m, h).weights;
        return w.array().colwise() / row_norms(w).array();
    }
    case ProblemName::dtlz5:
    case ProblemName::dtlz6: {
        // On the front g = 0, so every angle after the first is pi/4.
        Matrix front(count, m);
        RowVector theta = RowVector::Constant(m - 1, kPi / 4.0);
        for (Index i = 0; i < count; ++i) {
            theta(0) = static_cast<double>(i) / static_cast<double>(count - 1) * kPi / 2.0;
            RowVector f(m);
            spherical(theta, 1.0, f);
            front.row(i) = f;
        }
        return front;
    }
    case ProblemName::dtlz7:
        return dtlz7_front(m, count);
    }
    throw std::invalid_argument("true_front: unsupported problem");
}

} // namespace temo
