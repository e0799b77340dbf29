#include "hgfam/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace hgfam {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols,
                             std::vector<std::vector<Int>> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) {
        throw std::invalid_argument("matrix must have at least one row and column");
    }
    if (entries_.size() != rows_) {
        throw std::invalid_argument("row count mismatch");
    }
    for (const auto& r : entries_) {
        if (r.size() != cols_) {
            throw std::invalid_argument("column count mismatch");
        }
    }
}

IntegerMatrix IntegerMatrix::configuration(std::vector<std::vector<Int>> entries) {
    const std::size_t d = entries.size();
    const std::size_t n = d == 0 ? 0 : entries.front().size();
    IntegerMatrix m(d, n, std::move(entries));
    if (n < d) {
        throw std::invalid_argument("configuration matrix needs cols >= rows");
    }
    if (!full_row_rank(m)) {
        throw std::invalid_argument("not full rank");
    }
    return m;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    std::vector<std::vector<Int>> e(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) e[i][i] = 1;
    return IntegerMatrix(n, n, std::move(e));
}

IntegerMatrix IntegerMatrix::zero(std::size_t rows, std::size_t cols) {
    return IntegerMatrix(rows, cols,
                         std::vector<std::vector<Int>>(rows, std::vector<Int>(cols, 0)));
}

std::vector<Int> IntegerMatrix::column(std::size_t j) const {
    std::vector<Int> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = entries_[i][j];
    return c;
}

std::size_t rational_rank(const IntegerMatrix& m) {
    // Fraction-free Gaussian elimination; rank over Q equals rank over Z here.
    std::vector<std::vector<Int>> a = m.entries();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            const Int f = a[i][col], p = a[rank][col];
            for (std::size_t j = col; j < cols; ++j) {
                a[i][j] = a[i][j] * p - a[rank][j] * f;
            }
        }
        ++rank;
    }
    return rank;
}

bool full_row_rank(const IntegerMatrix& m) {
    return rational_rank(m) == m.rows();
}

Int determinant(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    for (const auto& r : m) {
        if (r.size() != n) throw std::invalid_argument("determinant needs a square matrix");
    }
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

IntegerMatrix direct_sum(const IntegerMatrix& a, const IntegerMatrix& b) {
    std::vector<std::vector<Int>> e(a.rows() + b.rows(),
                                    std::vector<Int>(a.cols() + b.cols(), 0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) e[i][j] = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            e[a.rows() + i][a.cols() + j] = b.at(i, j);
    return IntegerMatrix(a.rows() + b.rows(), a.cols() + b.cols(), std::move(e));
}

IntegerMatrix homogenize(const IntegerMatrix& a) {
    if (!full_row_rank(a)) throw std::invalid_argument("not full rank");
    std::vector<std::vector<Int>> e(a.rows() + 1, std::vector<Int>(a.cols() + 1, 0));
    for (std::size_t j = 0; j <= a.cols(); ++j) e[0][j] = 1;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) e[i + 1][j + 1] = a.at(i, j);
    return IntegerMatrix(a.rows() + 1, a.cols() + 1, std::move(e));
}

bool is_homogeneous_configuration(const IntegerMatrix& a) {
    if (!full_row_rank(a)) throw std::invalid_argument("not full rank");
    // Solve y^T A = (1,...,1) over Q: consistency of A^T y = 1.
    const std::size_t d = a.rows(), n = a.cols();
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(d + 1));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < d; ++i) aug[j][i] = Rational(a.at(i, j));
        aug[j][d] = 1;
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < d && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && aug[pivot][col] == 0) ++pivot;
        if (pivot == n) continue;
        std::swap(aug[rank], aug[pivot]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || aug[i][col] == 0) continue;
            const Rational f = aug[i][col] / aug[rank][col];
            for (std::size_t j = col; j <= d; ++j) aug[i][j] -= f * aug[rank][j];
        }
        ++rank;
    }
    for (std::size_t i = 0; i < n; ++i) {
        bool zero_row = true;
        for (std::size_t j = 0; j < d; ++j) {
            if (aug[i][j] != 0) { zero_row = false; break; }
        }
        if (zero_row && aug[i][d] != 0) return false;
    }
    return true;
}

std::vector<Int> apply(const IntegerMatrix& a, const std::vector<Int>& u) {
    if (u.size() != a.cols()) throw std::invalid_argument("dimension mismatch");
    std::vector<Int> out(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a.at(i, j) * u[j];
    return out;
}

IntegerMatrix parse_matrix(std::istream& in) {
    std::size_t d = 0, n = 0;
    if (!(in >> d >> n)) throw std::invalid_argument("bad matrix header");
    if (d == 0 || n == 0) throw std::invalid_argument("bad matrix dimensions");
    std::vector<std::vector<Int>> e(d, std::vector<Int>(n));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!(in >> e[i][j])) throw std::invalid_argument("truncated matrix body");
        }
    }
    return IntegerMatrix(d, n, std::move(e));
}

IntegerMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

std::string to_text(const IntegerMatrix& m) {
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m.at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace hgfam
