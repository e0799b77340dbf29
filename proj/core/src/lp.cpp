#include "hgfam/lp.hpp"

#include <stdexcept>

namespace hgfam {

std::optional<std::vector<Rational>> feasible_point(
    const std::vector<std::vector<Rational>>& m, const std::vector<Rational>& b) {
    const std::size_t rows = m.size();
    if (b.size() != rows) throw std::invalid_argument("dimension mismatch");
    const std::size_t n = rows == 0 ? 0 : m.front().size();
    if (rows == 0) return std::vector<Rational>(n, 0);

    // Tableau with artificial basis; columns: n structural, rows artificial, rhs.
    const std::size_t total = n + rows;
    std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(total + 1, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        const int sign = b[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = sign * m[i][j];
        t[i][n + i] = 1;
        t[i][total] = sign * b[i];
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) basis[i] = n + i;

    // Objective row: minimize sum of artificials (reduced costs).
    std::vector<Rational> obj(total + 1, 0);
    for (std::size_t j = 0; j <= total; ++j) {
        if (j >= n && j < total) continue;  // artificials start with reduced cost 0
        Rational s = 0;
        for (std::size_t i = 0; i < rows; ++i) s += t[i][j];
        obj[j] = -s;
    }

    for (;;) {
        // Bland: entering variable = lowest index with negative reduced cost.
        std::size_t enter = total;
        for (std::size_t j = 0; j < total; ++j) {
            if (obj[j] < 0) { enter = j; break; }
        }
        if (enter == total) break;
        // Ratio test, Bland tie-break on basis variable index.
        std::size_t leave = rows;
        Rational best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][total] / t[i][enter];
            if (leave == rows || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == rows) {
            // Unbounded phase-1 objective cannot happen; guard anyway.
            throw std::logic_error("phase-1 simplex unbounded");
        }
        // Pivot.
        const Rational p = t[leave][enter];
        for (std::size_t j = 0; j <= total; ++j) t[leave][j] /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
        }
        if (obj[enter] != 0) {
            const Rational f = obj[enter];
            for (std::size_t j = 0; j <= total; ++j) obj[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    // Feasible iff every artificial sits at level zero.
    for (std::size_t i = 0; i < rows; ++i) {
        if (basis[i] >= n && t[i][total] != 0) return std::nullopt;
    }
    std::vector<Rational> x(n, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        if (basis[i] < n) x[basis[i]] = t[i][total];
    }
    return x;
}

}  // namespace hgfam
