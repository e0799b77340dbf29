#pragma once

#include "hgfam/matrix.hpp"

#include <optional>
#include <vector>

namespace hgfam {

/// Delta_A: convex hull of the columns of A and the origin. The origin is
/// always generator 0. The volume cache is filled at construction (or not at
/// all); instances are immutable afterwards.
struct ConfigPolytope {
    std::size_t ambient_dim;
    std::vector<std::vector<Int>> generators;  // origin first, then columns
    std::optional<Int> cached_volume_dfact;

    static ConfigPolytope from_configuration(const IntegerMatrix& a,
                                             bool with_volume = false);
};

/// d! times the Euclidean volume of the hull of the given integer points.
/// Zero iff the points span an affine space of dimension < dim.
Int volume_dfact(const std::vector<std::vector<Int>>& points, std::size_t dim);
Int volume_dfact(const ConfigPolytope& p);

/// d! vol(Delta_A) / [Z^d : ZA]; exact divisibility asserted.
Int normalized_volume(const IntegerMatrix& a);

bool contains_point(const ConfigPolytope& p, const std::vector<Rational>& point);

/// Delta_A == Delta_B, decided by mutual generator membership.
bool polytopes_equal(const IntegerMatrix& a, const IntegerMatrix& b);

}  // namespace hgfam
