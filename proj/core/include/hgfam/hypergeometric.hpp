#pragma once

#include "hgfam/groebner.hpp"
#include "hgfam/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hgfam {

using ParameterVector = std::vector<Rational>;

/// sum_j a_ij x_j d_j - beta_i, row i of the configuration.
struct EulerOperator {
    std::vector<Int> coefficients;
    Rational shift;

    bool operator==(const EulerOperator&) const = default;
};

/// Generating data of the left ideal H_A(beta): toric binomials plus the d
/// Euler operators.
struct HypergeometricSystem {
    IntegerMatrix matrix;
    ParameterVector parameter;
    std::vector<Binomial> toric_part;
    std::vector<EulerOperator> euler_part;
};

struct FamilyInstance;  // family.hpp

/// Volume is computed; rank and the Laurent dimension are certified
/// closed forms, never recomputed. provenance names the formula used, and
/// rank_is_lower_bound marks the homogenized variant where only the generic
/// beta_0 statement is an equality.
struct PredictedStats {
    Int volume;
    Int rank;
    Int jump;
    std::optional<Int> laurent_dim;  // absent = no closed form stated
    Int sst_bound;                   // 2^{2d} * volume
    std::string provenance;
    bool rank_is_lower_bound = false;
};

/// Box operator of a kernel vector: positive part minus negative part.
Binomial box_operator(const std::vector<Int>& u);

std::vector<EulerOperator> euler_operators(const IntegerMatrix& a,
                                           const ParameterVector& beta);

HypergeometricSystem assemble_system(const IntegerMatrix& a, const ParameterVector& beta,
                                     std::size_t pair_limit = kDefaultPairLimit);

/// True iff the system splits across the given contiguous variable blocks:
/// every toric generator supported inside one block and every matrix row
/// supported inside one block.
bool split_check(const HypergeometricSystem& sys, const std::vector<std::size_t>& block_sizes);

PredictedStats predicted_stats(const FamilyInstance& instance);

enum class RenderFormat { text, script };

/// Deterministic listing of the generators; script is an annotated
/// Macaulay2-style input for independent rank computation.
std::string render_system(const HypergeometricSystem& sys, RenderFormat format);

std::string to_text(const EulerOperator& op);

}  // namespace hgfam
