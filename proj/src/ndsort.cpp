#include "temo/ndsort.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace temo {

namespace {

void check_finite_rows(const Matrix& f, const char* who)
{
    if (f.array().isNaN().any()) {
        throw std::invalid_argument(std::string(who) + ": objective matrix contains NaN");
    }
}

bool dominates(const Matrix& f, Index a, Index b)
{
    bool strict = false;
    for (Index k = 0; k < f.cols(); ++k) {
        if (f(a, k) > f(b, k)) return false;
        strict = strict || f(a, k) < f(b, k);
    }
    return strict;
}

} // namespace

Index last_rank(std::span<const Index> rank, Index n)
{
    if (n < 1 || n > static_cast<Index>(rank.size())) {
        throw std::invalid_argument("last_rank: n out of range");
    }
    std::vector<Index> sorted(rank.begin(), rank.end());
    std::nth_element(sorted.begin(), sorted.begin() + (n - 1), sorted.end());
    return sorted[static_cast<std::size_t>(n - 1)];
}

Mask dominance_matrix(const Matrix& f)
{
    check_finite_rows(f, "dominance_matrix");
    const Index N = f.rows();
    const Index m = f.cols();
    Mask d(N, N);
    // (F_i <= F_j).all() & (F_i < F_j).any(), broadcast over (i, j).
#pragma omp parallel for schedule(static)
    for (Index i = 0; i < N; ++i) {
        for (Index j = 0; j < N; ++j) {
            bool all_le = true;
            bool any_lt = false;
            for (Index k = 0; k < m; ++k) {
                all_le &= f(i, k) <= f(j, k);
                any_lt |= f(i, k) < f(j, k);
            }
            d(i, j) = static_cast<std::uint8_t>(all_le && any_lt);
        }
    }
    return d;
}

RankResult rank_assign(const Matrix& f, Index n)
{
    const Index N = f.rows();
    if (n < 1 || n > N) {
        throw std::invalid_argument("rank_assign: need rows(F) >= n >= 1, got rows=" + std::to_string(N) +
                                    " n=" + std::to_string(n));
    }
    const Mask d = dominance_matrix(f);

    // c_j: number of rows dominating j (column sums).
    Eigen::Matrix<Index, Eigen::Dynamic, 1> count = d.cast<Index>().colwise().sum().transpose();
    std::vector<Index> rank(static_cast<std::size_t>(N), 0);
    MaskVector front = (count.array() == 0).cast<std::uint8_t>();

    Index k = 0;
    while (front.any()) {
        if (k >= N) throw std::logic_error("rank_assign: peeling did not terminate");
        for (Index i = 0; i < N; ++i) {
            if (front(i)) rank[static_cast<std::size_t>(i)] = k;
        }
        // c <- c - p^T D - p; ranked rows drop to -1 and never re-enter.
        Eigen::Matrix<Index, Eigen::Dynamic, 1> removed = Eigen::Matrix<Index, Eigen::Dynamic, 1>::Zero(N);
        for (Index i = 0; i < N; ++i) {
            if (!front(i)) continue;
            removed += d.row(i).cast<Index>().transpose().matrix();
        }
        count -= removed + front.cast<Index>().matrix();
        front = (count.array() == 0).cast<std::uint8_t>();
        ++k;
    }

    RankResult out;
    out.rank = std::move(rank);
    out.last = last_rank(out.rank, n);
    out.iterations = k;
    return out;
}

RankResult ndsort_oracle(const Matrix& f, Index n)
{
    check_finite_rows(f, "ndsort_oracle");
    const Index N = f.rows();
    if (n < 1 || n > N) throw std::invalid_argument("ndsort_oracle: need rows(F) >= n >= 1");

    std::vector<std::vector<Index>> dominated(static_cast<std::size_t>(N));
    std::vector<Index> counter(static_cast<std::size_t>(N), 0);
    std::vector<Index> rank(static_cast<std::size_t>(N), 0);
    std::vector<Index> current;
    for (Index i = 0; i < N; ++i) {
        for (Index j = 0; j < N; ++j) {
            if (i == j) continue;
            if (dominates(f, i, j)) {
                dominated[static_cast<std::size_t>(i)].push_back(j);
            } else if (dominates(f, j, i)) {
                ++counter[static_cast<std::size_t>(i)];
            }
        }
        if (counter[static_cast<std::size_t>(i)] == 0) current.push_back(i);
    }

    Index k = 0;
    while (!current.empty()) {
        std::vector<Index> next;
        for (Index p : current) {
            rank[static_cast<std::size_t>(p)] = k;
            for (Index q : dominated[static_cast<std::size_t>(p)]) {
                if (--counter[static_cast<std::size_t>(q)] == 0) next.push_back(q);
            }
        }
        current = std::move(next);
        ++k;
    }

    RankResult out;
    out.rank = std::move(rank);
    out.last = last_rank(out.rank, n);
    out.iterations = k;
    return out;
}

IndexVector nondominated_indices(const Matrix& f)
{
    check_finite_rows(f, "nondominated_indices");
    const Index N = f.rows();
    // Lexicographic order guarantees a row can only be dominated by an earlier one.
    IndexVector order(static_cast<std::size_t>(N));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
        for (Index k = 0; k < f.cols(); ++k) {
            if (f(a, k) != f(b, k)) return f(a, k) < f(b, k);
        }
        return false;
    });

    IndexVector archive;
    for (Index i : order) {
        bool dominated = false;
        for (Index a : archive) {
            if (dominates(f, a, i)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) archive.push_back(i);
    }
    std::sort(archive.begin(), archive.end());
    return archive;
}

} // namespace temo
