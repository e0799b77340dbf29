#include <doctest.h>

#include <hgfam/verify.hpp>

#include <map>
#include <set>

using namespace hgfam;

TEST_CASE("claim catalog covers every verified claim exactly once") {
    const auto& catalog = claim_catalog();
    const std::set<std::string> ids(catalog.begin(), catalog.end());
    CHECK(ids.size() == catalog.size());  // no duplicates in the catalog itself

    // Every invariant of the constructor and of the assembled system has a
    // claim id; drift in either direction fails here.
    const std::set<std::string> expected{
        "shape",          "volume-closed-form", "glue-identities",
        "glue-membership", "semigroup-equality", "polytope-equality",
        "hole-certificates", "homogeneity",     "stats-invariants",
        "ratio-bound",    "laurent-vs-jump",    "toric-ideal",
        "split-support",  "kernel-invariant"};
    CHECK(ids == expected);

    for (FamilyVariant v : {FamilyVariant::product, FamilyVariant::hat,
                            FamilyVariant::hat_homogenized}) {
        const VerificationReport report = verify(make_instance(v, 5), Depth::quick);
        std::map<std::string, int> seen;
        for (const CheckResult& c : report.checks) ++seen[c.claim];
        for (const auto& id : catalog) CHECK(seen[id] == 1);
        CHECK(report.checks.size() == catalog.size());
    }
}

TEST_CASE("reports are deterministic modulo timing") {
    const FamilyInstance inst = hat_family(6);
    const VerificationReport a = verify(inst, Depth::full);
    const VerificationReport b = verify(inst, Depth::full);
    CHECK(a.to_json(false) == b.to_json(false));
    CHECK(a.overall_pass());
}

TEST_CASE("all variants pass quick verification") {
    for (FamilyVariant v : {FamilyVariant::plain2, FamilyVariant::plain3,
                            FamilyVariant::product, FamilyVariant::hat,
                            FamilyVariant::hat_homogenized}) {
        const VerificationReport report = verify(make_instance(v, 6), Depth::quick);
        CHECK(report.overall_pass());
        for (const CheckResult& c : report.checks) {
            INFO(to_string(v), " ", c.claim, ": ", c.details);
            CHECK(c.status != CheckStatus::fail);
        }
    }
}

TEST_CASE("report serialization carries exact and decimal ratios") {
    const VerificationReport report = verify(hat_family(4), Depth::quick);
    const auto j = report.to_json(false);
    REQUIRE(j.contains("computed"));
    CHECK(j["computed"].contains("ratio"));
    CHECK(j["computed"].contains("ratio_decimal"));
    CHECK(j.contains("checks"));
    CHECK(j["d"] == 4);
    CHECK(report.ratio == Rational(81, 64));
}

TEST_CASE("ratio table closed forms") {
    const auto rows = ratio_table(2, 6, FamilyVariant::hat);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].ratio == Rational(9, 8));
    CHECK(rows[1].ratio == Rational(6, 5));
    CHECK(rows[2].ratio == Rational(81, 64));
    const auto prows = ratio_table(3, 4, FamilyVariant::product);
    CHECK(prows[0].ratio == Rational(7, 5));
    CHECK(prows[1].ratio == Rational(25, 16));
    // Exact lower bound holds in squared form on every row.
    for (const auto& row : rows) {
        CHECK(row.ratio * row.ratio >= row.bound_squared);
    }
}
