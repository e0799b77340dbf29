#pragma once

#include "hgfam/matrix.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace hgfam {

/// Integer w with w . a_j > 0 for every column, found by exact LP and cleared
/// of denominators. Throws std::domain_error("semigroup not pointed by
/// positive grading") when none exists.
std::vector<Int> positive_grading(const IntegerMatrix& a);

/// NA with a pointedness certificate. Membership search is grading-bounded
/// depth-first with a memoized decision cache; the cache makes the instance
/// single-writer, so share across threads only behind exclusive access.
class GradedSemigroup {
public:
    explicit GradedSemigroup(IntegerMatrix a, std::size_t cache_limit = 1'000'000);

    const IntegerMatrix& matrix() const { return matrix_; }
    const std::vector<Int>& grading() const { return grading_; }

    /// A witness u in N^n with A u = b, or nullopt.
    std::optional<std::vector<Int>> member(const std::vector<Int>& b);

    /// b is a hole: b not in NA but b + a_j in NA for every column j.
    /// The column check suffices because NA is additively generated.
    bool is_hole(const std::vector<Int>& b);

private:
    bool reachable(const std::vector<Int>& b, const Int& level);

    IntegerMatrix matrix_;
    std::vector<Int> grading_;
    std::vector<std::size_t> column_order_;  // decreasing w . a_j
    std::vector<Int> column_degree_;
    std::map<std::vector<Int>, std::optional<std::size_t>> cache_;  // column used, or failure
    std::size_t cache_limit_;
};

/// NA == NB via mutual column membership.
bool semigroups_equal(const IntegerMatrix& a, const IntegerMatrix& b);

}  // namespace hgfam
