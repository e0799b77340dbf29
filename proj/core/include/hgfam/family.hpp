#pragma once

#include "hgfam/hypergeometric.hpp"
#include "hgfam/matrix.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace hgfam {

enum class FamilyVariant { plain2, plain3, product, hat, hat_homogenized };

std::string to_string(FamilyVariant v);
FamilyVariant variant_from_string(const std::string& name);

/// One appended column of the hat construction, with its provenance: the
/// column at `position` equals a_1 + a_{base_index} and also
/// (a_2 + a_{base_index + 1}) / 2. Indices are 1-based.
struct GlueColumn {
    std::size_t position;
    std::size_t base_index;
    std::vector<Int> column;
};

struct FamilyInstance {
    FamilyVariant variant;
    std::size_t d = 0;
    std::size_t r = 0;
    std::size_t s = 0;
    IntegerMatrix matrix;
    ParameterVector parameter;
    std::vector<GlueColumn> added_columns;  // hat variants only
};

/// Unique (r, s) with 2r + 3s = d and s maximal; d = 1 has none.
std::pair<std::size_t, std::size_t> decompose_d(std::size_t d);

struct BasePair {
    IntegerMatrix matrix;
    ParameterVector parameter;
};

struct BaseMatrices {
    BasePair a2;      // A_(2), beta = (1,2)
    BasePair a3;      // A_(3), beta = (1,0,2)
    BasePair ahat2;   // Ahat_(2), beta = (3,2)
    BasePair ahat3;   // Ahat_(3), beta = (3,0,2)
};

const BaseMatrices& base_matrices();

/// r-fold direct sum with r-fold concatenated parameter.
BasePair repeated_family(const IntegerMatrix& a, const ParameterVector& beta,
                         std::size_t copies);

/// A_(2)^r (+) A_(3)^s with the matching block parameter, d x 2d.
FamilyInstance product_family(std::size_t d);

/// Ahat_(2)^r (+) Ahat_(3)^s plus r+s-1 glue columns, d x (6r+8s-1).
FamilyInstance hat_family(std::size_t d);

/// Homogenized hat matrix with parameter (beta_0, betahat_(d)).
FamilyInstance hat_family_homogenized(std::size_t d, const Rational& beta0);

/// Dispatcher used by the CLI; plain2/plain3 ignore d.
FamilyInstance make_instance(FamilyVariant variant, std::size_t d,
                             const Rational& beta0 = Rational(0));

/// The glue-free base A_{r,s} a hat instance was built from.
IntegerMatrix hat_base_matrix(const FamilyInstance& instance);

}  // namespace hgfam
