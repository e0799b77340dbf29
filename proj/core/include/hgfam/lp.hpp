#pragma once

#include "hgfam/matrix.hpp"

#include <optional>
#include <vector>

namespace hgfam {

/// Exact rational phase-1 simplex: find x >= 0 with M x = b, or report
/// infeasibility. Bland's rule, so no cycling.
std::optional<std::vector<Rational>> feasible_point(
    const std::vector<std::vector<Rational>>& m, const std::vector<Rational>& b);

}  // namespace hgfam
