#include "tropcomb/linalg.hpp"

#include <numeric>

#include "tropcomb/errors.hpp"

namespace tropcomb {

int rank_rational(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    std::size_t ncols = rows[0].size();
    int rank = 0;
    for (std::size_t col = 0; col < ncols && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < rows.size() && sgn(rows[piv][col]) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[piv]);
        const auto& prow = rows[static_cast<std::size_t>(rank)];
        for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < rows.size(); ++i) {
            if (sgn(rows[i][col]) == 0) continue;
            Rational f = rows[i][col] / prow[col];
            for (std::size_t j = col; j < ncols; ++j) rows[i][j] -= f * prow[j];
        }
        ++rank;
    }
    return rank;
}

namespace {

long long llgcd(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

void reduce_row(std::vector<long long>& row) {
    long long g = 0;
    for (long long v : row) g = llgcd(g, v);
    if (g > 1)
        for (long long& v : row) v /= g;
}

// Fraction-free forward elimination; returns pivot columns.
std::vector<int> eliminate_int(std::vector<std::vector<long long>>& rows, int ncols) {
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < ncols && r < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(piv)]);
        const long long p = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
        for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
            auto& row = rows[static_cast<std::size_t>(i)];
            long long v = row[static_cast<std::size_t>(col)];
            if (v == 0) continue;
            long long g = llgcd(p, v);
            long long a = p / g, b = v / g;
            for (int j = 0; j < ncols; ++j)
                row[static_cast<std::size_t>(j)] =
                    a * row[static_cast<std::size_t>(j)] -
                    b * rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
            reduce_row(row);
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

} // namespace

int rank_int(std::vector<std::vector<long long>> rows) {
    if (rows.empty()) return 0;
    return static_cast<int>(eliminate_int(rows, static_cast<int>(rows[0].size())).size());
}

std::optional<std::vector<long long>> nullspace_1d_int(std::vector<std::vector<long long>> rows,
                                                       int ncols) {
    std::vector<int> pivots = eliminate_int(rows, ncols);
    int rank = static_cast<int>(pivots.size());
    if (ncols - rank != 1) return std::nullopt;

    std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    int free_col = 0;
    while (is_pivot[static_cast<std::size_t>(free_col)]) ++free_col;

    std::vector<long long> x(static_cast<std::size_t>(ncols), 0);
    x[static_cast<std::size_t>(free_col)] = 1;
    for (int k = rank - 1; k >= 0; --k) {
        const auto& row = rows[static_cast<std::size_t>(k)];
        int pc = pivots[static_cast<std::size_t>(k)];
        long long num = 0;
        for (int j = pc + 1; j < ncols; ++j) num -= row[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
        long long den = row[static_cast<std::size_t>(pc)];
        long long g = llgcd(num, den);
        if (g != 0) {
            num /= g;
            den /= g;
        } else {
            den = 1;
        }
        if (den < 0) {
            den = -den;
            num = -num;
        }
        if (den != 1)
            for (long long& v : x) v *= den;
        x[static_cast<std::size_t>(pc)] = num;
    }
    reduce_row(x);
    for (long long v : x) {
        if (v > 0) break;
        if (v < 0) {
            for (long long& u : x) u = -u;
            break;
        }
    }
    return x;
}

} // namespace tropcomb
