#pragma once

#include "temo/tensor.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace temo {

enum class ProblemName { dtlz1, dtlz2, dtlz3, dtlz4, dtlz5, dtlz6, dtlz7 };

std::string to_string(ProblemName name);
/// Case-insensitive ("dtlz2", "DTLZ2"). Throws std::invalid_argument on unknown names.
ProblemName parse_problem_name(std::string_view text);

/// Canonical decision dimension: m + 4 (DTLZ1), m + 9 (DTLZ2-6), m + 19 (DTLZ7).
Index default_dimension(ProblemName name, Index objectives);

/// A DTLZ instance. The domain is [0, 1]^d.
struct ProblemSpec {
    ProblemName name = ProblemName::dtlz2;
    Index dim = 12;
    Index objectives = 3;

    /// Spec with the canonical dimension when `dim` is not given.
    static ProblemSpec make(ProblemName name, Index objectives, std::optional<Index> dim = std::nullopt);

    /// Throws std::invalid_argument unless objectives >= 2 and dim >= objectives.
    void validate() const;

    [[nodiscard]] RowVector lower() const { return RowVector::Zero(dim); }
    [[nodiscard]] RowVector upper() const { return RowVector::Ones(dim); }
};

/// Batch evaluation: X is n x d, result is n x m. Rows are evaluated
/// independently, so evaluate(X).row(i) == evaluate(X.row(i)) bit for bit.
Matrix evaluate(const ProblemSpec& spec, const Matrix& x);

/// Approximately `count` points on the analytic Pareto front.
///
/// DTLZ1: simplex lattice scaled to sum 0.5. DTLZ2-4: the lattice projected
/// onto the unit sphere. DTLZ5-6: the degenerate front curve, parameterised
/// by the first position variable. DTLZ7: a grid over the first m-1
/// objectives followed by a non-dominated filter. For lattice-based fronts
/// with m > 2 the largest lattice not exceeding `count` is used.
Matrix true_front(const ProblemSpec& spec, Index count);

} // namespace temo
