#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace hgfam {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense integer matrix with arbitrary-precision entries.
///
/// Configuration matrices (the A of a hypergeometric pair) must have full
/// row rank over the rationals; use configuration() to get that check.
/// The plain constructor accepts any shape, which is what the Smith normal
/// form routines need.
class IntegerMatrix {
public:
    IntegerMatrix(std::size_t rows, std::size_t cols,
                  std::vector<std::vector<Int>> entries);

    /// Full-rank checked constructor for configuration matrices (d <= n).
    static IntegerMatrix configuration(std::vector<std::vector<Int>> entries);

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix zero(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Int& at(std::size_t i, std::size_t j) const { return entries_[i][j]; }
    Int& at(std::size_t i, std::size_t j) { return entries_[i][j]; }

    /// Column a_j, 0-based index.
    std::vector<Int> column(std::size_t j) const;
    const std::vector<Int>& row(std::size_t i) const { return entries_[i]; }

    const std::vector<std::vector<Int>>& entries() const { return entries_; }

    bool operator==(const IntegerMatrix&) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::vector<Int>> entries_;
};

std::size_t rational_rank(const IntegerMatrix& m);
bool full_row_rank(const IntegerMatrix& m);

/// Determinant of a square arbitrary-precision matrix (fraction-free Bareiss).
Int determinant(std::vector<std::vector<Int>> m);

/// Block-diagonal stacking A1 (+) A2.
IntegerMatrix direct_sum(const IntegerMatrix& a, const IntegerMatrix& b);

/// Prepend a zero column, then a row of ones: (d+1) x (n+1) output.
IntegerMatrix homogenize(const IntegerMatrix& a);

/// True iff the all-ones row vector lies in the rational row span of A.
bool is_homogeneous_configuration(const IntegerMatrix& a);

/// Matrix * integer vector.
std::vector<Int> apply(const IntegerMatrix& a, const std::vector<Int>& u);

/// Shared text format: "d n" on the first line, then d rows of n integers.
IntegerMatrix parse_matrix(std::istream& in);
IntegerMatrix parse_matrix(const std::string& text);
std::string to_text(const IntegerMatrix& m);

}  // namespace hgfam
