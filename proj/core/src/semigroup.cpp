#include "hgfam/semigroup.hpp"

#include "hgfam/lp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace hgfam {

std::vector<Int> positive_grading(const IntegerMatrix& a) {
    if (!full_row_rank(a)) throw std::invalid_argument("not full rank");
    const std::size_t d = a.rows(), n = a.cols();
    // w . a_j >= 1 with w = u - v, u,v >= 0 and slack s: A^T(u - v) - s = 1.
    std::vector<std::vector<Rational>> lhs(n, std::vector<Rational>(2 * d + n, 0));
    std::vector<Rational> rhs(n, 1);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < d; ++i) {
            lhs[j][i] = Rational(a.at(i, j));
            lhs[j][d + i] = -Rational(a.at(i, j));
        }
        lhs[j][2 * d + j] = -1;
    }
    const auto sol = feasible_point(lhs, rhs);
    if (!sol) throw std::domain_error("semigroup not pointed by positive grading");
    std::vector<Rational> w(d);
    for (std::size_t i = 0; i < d; ++i) w[i] = (*sol)[i] - (*sol)[d + i];
    Int scale = 1;
    for (const auto& q : w) {
        scale = boost::multiprecision::lcm(scale, Int(boost::multiprecision::denominator(q)));
    }
    std::vector<Int> out(d);
    for (std::size_t i = 0; i < d; ++i) {
        out[i] = boost::multiprecision::numerator(w[i]) *
                 (scale / boost::multiprecision::denominator(w[i]));
    }
    return out;
}

GradedSemigroup::GradedSemigroup(IntegerMatrix a, std::size_t cache_limit)
    : matrix_(std::move(a)),
      grading_(positive_grading(matrix_)),
      cache_limit_(cache_limit) {
    const std::size_t n = matrix_.cols();
    column_degree_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        Int deg = 0;
        for (std::size_t i = 0; i < matrix_.rows(); ++i) {
            deg += grading_[i] * matrix_.at(i, j);
        }
        if (deg <= 0) throw std::logic_error("grading certificate invalid");
        column_degree_[j] = deg;
    }
    column_order_.resize(n);
    std::iota(column_order_.begin(), column_order_.end(), std::size_t{0});
    std::stable_sort(column_order_.begin(), column_order_.end(),
                     [&](std::size_t x, std::size_t y) {
                         return column_degree_[x] > column_degree_[y];
                     });
}

bool GradedSemigroup::reachable(const std::vector<Int>& b, const Int& level) {
    bool zero = true;
    for (const auto& x : b) {
        if (x != 0) { zero = false; break; }
    }
    if (zero) return true;
    if (level <= 0) return false;
    if (auto it = cache_.find(b); it != cache_.end()) return it->second.has_value();

    const std::size_t d = matrix_.rows();
    std::optional<std::size_t> chosen;
    for (std::size_t j : column_order_) {
        if (column_degree_[j] > level) continue;
        std::vector<Int> rest(d);
        for (std::size_t i = 0; i < d; ++i) rest[i] = b[i] - matrix_.at(i, j);
        if (reachable(rest, Int(level - column_degree_[j]))) {
            chosen = j;
            break;
        }
    }
    if (cache_.size() < cache_limit_) cache_.emplace(b, chosen);
    return chosen.has_value();
}

std::optional<std::vector<Int>> GradedSemigroup::member(const std::vector<Int>& b) {
    if (b.size() != matrix_.rows()) throw std::invalid_argument("dimension mismatch");
    const std::size_t d = matrix_.rows(), n = matrix_.cols();
    Int level = 0;
    for (std::size_t i = 0; i < d; ++i) level += grading_[i] * b[i];
    if (!reachable(b, level)) return std::nullopt;

    std::vector<Int> witness(n, 0);
    std::vector<Int> rem = b;
    for (;;) {
        bool zero = true;
        for (const auto& x : rem) {
            if (x != 0) { zero = false; break; }
        }
        if (zero) break;
        bool advanced = false;
        for (std::size_t j : column_order_) {
            if (column_degree_[j] > level) continue;
            std::vector<Int> rest(d);
            for (std::size_t i = 0; i < d; ++i) rest[i] = rem[i] - matrix_.at(i, j);
            if (reachable(rest, Int(level - column_degree_[j]))) {
                witness[j] += 1;
                rem = std::move(rest);
                level -= column_degree_[j];
                advanced = true;
                break;
            }
        }
        if (!advanced) throw std::logic_error("witness reconstruction failed");
    }
    if (hgfam::apply(matrix_, witness) != b) throw std::logic_error("witness check failed");
    return witness;
}

bool GradedSemigroup::is_hole(const std::vector<Int>& b) {
    if (member(b)) return false;
    const std::size_t d = matrix_.rows();
    for (std::size_t j = 0; j < matrix_.cols(); ++j) {
        std::vector<Int> shifted(d);
        for (std::size_t i = 0; i < d; ++i) shifted[i] = b[i] + matrix_.at(i, j);
        if (!member(shifted)) return false;
    }
    return true;
}

bool semigroups_equal(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("dimension mismatch");
    GradedSemigroup sa(a);
    GradedSemigroup sb(b);
    for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!sa.member(b.column(j))) return false;
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (!sb.member(a.column(j))) return false;
    }
    return true;
}

}  // namespace hgfam
