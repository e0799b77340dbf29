#include "hgfam/smith.hpp"

#include <stdexcept>
#include <utility>

namespace hgfam {

namespace {

using Mat = std::vector<std::vector<Int>>;

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Smallest nonzero |entry| in the trailing block, row-major tie-break.
bool find_pivot(const Mat& d, std::size_t k, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = k; i < d.size(); ++i) {
        for (std::size_t j = k; j < d[i].size(); ++j) {
            if (d[i][j] == 0) continue;
            Int a = abs_int(d[i][j]);
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    }
    return found;
}

void swap_rows(Mat& m, std::size_t a, std::size_t b) {
    if (a != b) std::swap(m[a], m[b]);
}

void swap_cols(Mat& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : m) std::swap(row[a], row[b]);
}

// row_i -= q * row_k
void row_op(Mat& m, std::size_t i, std::size_t k, const Int& q) {
    for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= q * m[k][j];
}

// col_j -= q * col_k
void col_op(Mat& m, std::size_t j, std::size_t k, const Int& q) {
    for (auto& row : m) row[j] -= q * row[k];
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Mat d = m.entries();
    Mat u = IntegerMatrix::identity(rows).entries();
    Mat v = IntegerMatrix::identity(cols).entries();
    const std::size_t limit = rows < cols ? rows : cols;

    for (std::size_t k = 0; k < limit; ++k) {
        std::size_t pi = k, pj = k;
        if (!find_pivot(d, k, pi, pj)) break;
        swap_rows(d, k, pi);
        swap_rows(u, k, pi);
        swap_cols(d, k, pj);
        swap_cols(v, k, pj);

        for (;;) {
            bool clean = true;
            // Clear column k below the pivot.
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (d[i][k] == 0) continue;
                Int q = d[i][k] / d[k][k];
                row_op(d, i, k, q);
                row_op(u, i, k, q);
                if (d[i][k] != 0) {
                    // Remainder smaller than pivot: promote it.
                    swap_rows(d, k, i);
                    swap_rows(u, k, i);
                    clean = false;
                }
            }
            // Clear row k right of the pivot.
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (d[k][j] == 0) continue;
                Int q = d[k][j] / d[k][k];
                col_op(d, j, k, q);
                col_op(v, j, k, q);
                if (d[k][j] != 0) {
                    swap_cols(d, k, j);
                    swap_cols(v, k, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Divisibility fix-up: pivot must divide the trailing block.
            bool fixed = true;
            for (std::size_t i = k + 1; i < rows && fixed; ++i) {
                for (std::size_t j = k + 1; j < cols && fixed; ++j) {
                    if (d[i][j] % d[k][k] != 0) {
                        row_op(d, k, i, Int(-1));  // row_k += row_i
                        row_op(u, k, i, Int(-1));
                        fixed = false;
                    }
                }
            }
            if (fixed) break;
        }
        if (d[k][k] < 0) {
            for (std::size_t j = 0; j < cols; ++j) d[k][j] = -d[k][j];
            for (std::size_t j = 0; j < rows; ++j) u[k][j] = -u[k][j];
        }
    }

    return SmithDecomposition{IntegerMatrix(rows, rows, std::move(u)),
                              IntegerMatrix(rows, cols, std::move(d)),
                              IntegerMatrix(cols, cols, std::move(v))};
}

Int lattice_index(const IntegerMatrix& a) {
    if (!full_row_rank(a)) throw std::invalid_argument("not full rank");
    const SmithDecomposition snf = smith_normal_form(a);
    Int idx = 1;
    for (std::size_t i = 0; i < a.rows(); ++i) idx *= snf.diag.at(i, i);
    return idx;
}

KernelBasis kernel_basis(const IntegerMatrix& a) {
    if (!full_row_rank(a)) throw std::invalid_argument("not full rank");
    const SmithDecomposition snf = smith_normal_form(a);
    // A v = 0 iff D (V^-1 v) = 0; with full row rank the kernel is spanned by
    // the last n - d columns of V, and that basis is saturated.
    KernelBasis basis;
    for (std::size_t j = a.rows(); j < a.cols(); ++j) {
        basis.vectors.push_back(snf.right.column(j));
    }
    return basis;
}

}  // namespace hgfam
