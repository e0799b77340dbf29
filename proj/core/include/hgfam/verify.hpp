#pragma once

#include "hgfam/family.hpp"
#include "hgfam/hypergeometric.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hgfam {

enum class CheckStatus { pass, fail, skipped };
enum class Depth { quick, full };

std::string to_string(CheckStatus s);

struct CheckResult {
    std::string claim;
    CheckStatus status;
    std::string details;
    double elapsed_ms = 0.0;
};

/// One structured record per instance; every claim id of the catalog appears
/// exactly once. Overall pass means no non-skipped failure.
struct VerificationReport {
    FamilyVariant variant;
    std::size_t d = 0;
    std::size_t r = 0;
    std::size_t s = 0;
    std::vector<CheckResult> checks;
    Int volume;
    Rational ratio;  // predicted rank / computed volume
    PredictedStats stats;

    bool overall_pass() const;
    nlohmann::ordered_json to_json(bool with_timing = true) const;
    std::string to_text() const;
};

/// Fixed claim catalog, in report order.
const std::vector<std::string>& claim_catalog();

VerificationReport verify(const FamilyInstance& instance, Depth depth,
                          std::size_t pair_limit = kDefaultPairLimit);

struct RatioRow {
    std::size_t d, r, s;
    Int volume;
    Int rank;
    Int jump;
    Rational ratio;
    Rational bound_squared;  // (5/4)^d or (9/8)^d
    Int sst_bound;
};

std::vector<RatioRow> ratio_table(std::size_t d_min, std::size_t d_max,
                                  FamilyVariant variant);

nlohmann::ordered_json ratio_table_json(const std::vector<RatioRow>& rows);
std::string ratio_table_text(const std::vector<RatioRow>& rows);

}  // namespace hgfam
