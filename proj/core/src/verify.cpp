#include "hgfam/verify.hpp"

#include "hgfam/io.hpp"
#include "hgfam/polytope.hpp"
#include "hgfam/semigroup.hpp"
#include "hgfam/smith.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace hgfam {

namespace {

Int ipow(Int base, std::size_t e) {
    Int out = 1;
    for (std::size_t i = 0; i < e; ++i) out *= base;
    return out;
}

Rational rpow(Rational base, std::size_t e) {
    Rational out = 1;
    for (std::size_t i = 0; i < e; ++i) out *= base;
    return out;
}

std::vector<Rational> as_rational(const std::vector<Int>& v) {
    std::vector<Rational> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

std::vector<Int> beta_as_int(const ParameterVector& beta) {
    std::vector<Int> out(beta.size());
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (boost::multiprecision::denominator(beta[i]) != 1) {
            throw std::invalid_argument("integer parameter expected");
        }
        out[i] = boost::multiprecision::numerator(beta[i]);
    }
    return out;
}

const std::vector<Binomial>& displayed_a2_generators() {
    // The four displayed generators of I_{A_(2)}.
    static const std::vector<Binomial> gens{
        Binomial{{1, 0, 0, 1}, {0, 1, 1, 0}},
        Binomial{{2, 0, 1, 0}, {0, 3, 0, 0}},
        Binomial{{0, 1, 0, 2}, {0, 0, 3, 0}},
        Binomial{{1, 0, 2, 0}, {0, 2, 0, 1}},
    };
    return gens;
}

// Toric data shared by the full-depth claims, computed at most once.
struct ToricCache {
    bool attempted = false;
    std::optional<HypergeometricSystem> system;
    std::string failure;  // resource-limit reason when empty system
};

constexpr std::size_t kFullDepthAssemblyCap = 8;  // max d for whole-instance Groebner

}  // namespace

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

bool VerificationReport::overall_pass() const {
    for (const auto& c : checks) {
        if (c.status == CheckStatus::fail) return false;
    }
    return true;
}

const std::vector<std::string>& claim_catalog() {
    static const std::vector<std::string> catalog{
        "shape",
        "volume-closed-form",
        "glue-identities",
        "glue-membership",
        "semigroup-equality",
        "polytope-equality",
        "hole-certificates",
        "homogeneity",
        "stats-invariants",
        "ratio-bound",
        "laurent-vs-jump",
        "toric-ideal",
        "split-support",
        "kernel-invariant",
    };
    return catalog;
}

VerificationReport verify(const FamilyInstance& instance, Depth depth,
                          std::size_t pair_limit) {
    VerificationReport report;
    report.variant = instance.variant;
    report.d = instance.d;
    report.r = instance.r;
    report.s = instance.s;
    report.stats = predicted_stats(instance);  // cross-checks the computed volume
    report.volume = report.stats.volume;
    report.ratio = Rational(report.stats.rank) / Rational(report.stats.volume);

    const bool is_hat = instance.variant == FamilyVariant::hat ||
                        instance.variant == FamilyVariant::hat_homogenized;
    const bool is_product_side = !is_hat;

    // Hat-family combinatorics are checked on the unhomogenized instance.
    std::optional<FamilyInstance> hat;
    if (instance.variant == FamilyVariant::hat) hat = instance;
    if (instance.variant == FamilyVariant::hat_homogenized) hat = hat_family(instance.d);

    ToricCache toric;
    auto toric_system = [&]() -> const std::optional<HypergeometricSystem>& {
        if (!toric.attempted) {
            toric.attempted = true;
            try {
                toric.system = assemble_system(instance.matrix, instance.parameter,
                                               pair_limit);
            } catch (const ResourceLimitError& e) {
                toric.failure = e.what();
            }
        }
        return toric.system;
    };

    struct Skip {
        std::string reason;
    };
    auto run = [&](const std::string& claim, const std::function<std::string()>& body) {
        const auto start = std::chrono::steady_clock::now();
        CheckResult result{claim, CheckStatus::pass, "", 0.0};
        try {
            result.details = body();
        } catch (const Skip& s) {
            result.status = CheckStatus::skipped;
            result.details = s.reason;
        } catch (const ResourceLimitError& e) {
            result.status = CheckStatus::skipped;
            result.details = e.what();
        } catch (const std::exception& e) {
            result.status = CheckStatus::fail;
            result.details = e.what();
        }
        result.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                      start)
                .count();
        report.checks.push_back(std::move(result));
    };
    auto require = [](bool ok, const std::string& what) {
        if (!ok) throw std::runtime_error(what);
    };

    run("shape", [&]() -> std::string {
        std::size_t want_rows = instance.d, want_cols = 0;
        switch (instance.variant) {
            case FamilyVariant::plain2:
            case FamilyVariant::plain3:
            case FamilyVariant::product:
                want_cols = 2 * instance.d;
                break;
            case FamilyVariant::hat:
                want_cols = 6 * instance.r + 8 * instance.s - 1;
                break;
            case FamilyVariant::hat_homogenized:
                want_rows = instance.d + 1;
                want_cols = 6 * instance.r + 8 * instance.s;
                break;
        }
        require(instance.matrix.rows() == want_rows && instance.matrix.cols() == want_cols,
                "unexpected matrix shape");
        require(2 * instance.r + 3 * instance.s == instance.d, "2r + 3s != d");
        std::ostringstream out;
        out << want_rows << "x" << want_cols;
        return out.str();
    });

    run("volume-closed-form", [&]() -> std::string {
        const Int want = is_hat ? ipow(8, instance.r) * ipow(10, instance.s)
                                : ipow(4, instance.r) * ipow(5, instance.s);
        require(report.volume == want, "volume does not match the closed form");
        if (instance.variant == FamilyVariant::hat_homogenized) {
            require(normalized_volume(hat->matrix) == want,
                    "homogenization changed the volume");
        }
        std::ostringstream out;
        out << "volume " << want;
        return out.str();
    });

    run("glue-identities", [&]() -> std::string {
        if (!hat) throw Skip{"no glue columns for this variant"};
        const IntegerMatrix& m = hat->matrix;
        require(hat->added_columns.size() == hat->r + hat->s - 1,
                "wrong number of glue columns");
        for (const GlueColumn& g : hat->added_columns) {
            for (std::size_t i = 0; i < hat->d; ++i) {
                const Int& col = m.at(i, g.position - 1);
                require(col == g.column[i], "recorded glue column mismatch");
                require(col == m.at(i, 0) + m.at(i, g.base_index - 1),
                        "glue column != a1 + a_k");
                require(2 * col == m.at(i, 1) + m.at(i, g.base_index),
                        "glue column != (a2 + a_{k+1}) / 2");
            }
        }
        std::ostringstream out;
        out << hat->added_columns.size() << " glue columns, both identities";
        return out.str();
    });

    run("glue-membership", [&]() -> std::string {
        if (!hat) throw Skip{"no glue columns for this variant"};
        if (hat->added_columns.empty()) return "no glue columns to test";
        const IntegerMatrix base = hat_base_matrix(*hat);
        const ConfigPolytope poly = ConfigPolytope::from_configuration(base);
        GradedSemigroup sg(base);
        for (const GlueColumn& g : hat->added_columns) {
            require(contains_point(poly, as_rational(g.column)),
                    "glue column outside Delta_{A_{r,s}}");
            require(sg.member(g.column).has_value(),
                    "glue column outside N A_{r,s}");
        }
        return "all glue columns in Delta and in NA";
    });

    run("semigroup-equality", [&]() -> std::string {
        if (!hat) throw Skip{"hypothesis applies to the hat construction only"};
        require(semigroups_equal(hat_base_matrix(*hat), hat->matrix),
                "N A_{r,s} != N Ahat_(d)");
        return "N A_{r,s} = N Ahat_(d)";
    });

    run("polytope-equality", [&]() -> std::string {
        if (!hat) throw Skip{"hypothesis applies to the hat construction only"};
        require(polytopes_equal(hat_base_matrix(*hat), hat->matrix),
                "Delta_{A_{r,s}} != Delta_{Ahat_(d)}");
        return "Delta_{A_{r,s}} = Delta_{Ahat_(d)}";
    });

    run("hole-certificates", [&]() -> std::string {
        if (!hat) throw Skip{"hole certificates apply to the hat bases only"};
        const BaseMatrices& bases = base_matrices();
        std::ostringstream out;
        if (hat->r >= 1) {
            GradedSemigroup sg(bases.ahat2.matrix);
            require(sg.is_hole(beta_as_int(bases.ahat2.parameter)),
                    "(3,2) is not a hole of N Ahat_(2)");
            out << "(3,2) hole in N Ahat_(2)";
        }
        if (hat->s >= 1) {
            GradedSemigroup sg(bases.ahat3.matrix);
            require(sg.is_hole(beta_as_int(bases.ahat3.parameter)),
                    "(3,0,2) is not a hole of N Ahat_(3)");
            if (hat->r >= 1) out << "; ";
            out << "(3,0,2) hole in N Ahat_(3)";
        }
        return out.str();
    });

    run("homogeneity", [&]() -> std::string {
        const bool expect = instance.variant != FamilyVariant::hat;
        require(is_homogeneous_configuration(instance.matrix) == expect,
                "homogeneity flag differs from expectation");
        return expect ? "standard homogeneous" : "not standard homogeneous";
    });

    run("stats-invariants", [&]() -> std::string {
        const PredictedStats& st = report.stats;
        require(st.jump == st.rank - st.volume, "jump identity violated");
        require(st.rank >= st.volume, "rank below volume");
        require(st.rank <= st.sst_bound, "rank exceeds 2^{2d} vol");
        std::ostringstream out;
        out << "rank " << st.rank << ", jump " << st.jump << ", bound " << st.sst_bound;
        return out.str();
    });

    run("ratio-bound", [&]() -> std::string {
        const Rational closed =
            is_hat ? rpow(Rational(9, 8), instance.r) * rpow(Rational(12, 10), instance.s)
                   : rpow(Rational(5, 4), instance.r) * rpow(Rational(7, 5), instance.s);
        require(report.ratio == closed, "ratio differs from the closed form");
        const Rational base = is_hat ? Rational(9, 8) : Rational(5, 4);
        require(report.ratio * report.ratio >= rpow(base, instance.d),
                "ratio below the exponential lower bound");
        std::ostringstream out;
        out << "ratio " << report.ratio << ", squared bound " << rpow(base, instance.d);
        return out.str();
    });

    run("laurent-vs-jump", [&]() -> std::string {
        if (!is_product_side || instance.r < 1 || instance.s < 1) {
            throw Skip{"Laurent-vs-jump comparison applies for r, s >= 1 only"};
        }
        require(report.stats.laurent_dim.has_value(), "Laurent prediction missing");
        require(*report.stats.laurent_dim < report.stats.jump,
                "Laurent dimension not below the rank jump");
        std::ostringstream out;
        out << "laurent " << *report.stats.laurent_dim << " < jump " << report.stats.jump;
        return out.str();
    });

    run("toric-ideal", [&]() -> std::string {
        if (depth != Depth::full) throw Skip{"quick depth"};
        const BaseMatrices& bases = base_matrices();
        std::ostringstream out;
        if (is_product_side && instance.r >= 1) {
            const auto computed = toric_generators(bases.a2.matrix, pair_limit);
            const MonomialOrder ord = MonomialOrder::grevlex(4);
            require(ideals_equal(computed, displayed_a2_generators(), ord, pair_limit),
                    "I_{A_(2)} differs from its four displayed generators");
            out << "I_{A_(2)} matches the 4 displayed generators";
        }
        if (is_hat) {
            const IntegerMatrix& base =
                hat->r >= 1 ? bases.ahat2.matrix : bases.ahat3.matrix;
            const auto gens = toric_generators(base, pair_limit);
            bool inhomogeneous = false;
            for (const Binomial& g : gens) {
                std::int64_t dp = 0, dm = 0;
                for (std::size_t j = 0; j < g.plus.size(); ++j) {
                    dp += g.plus[j];
                    dm += g.minus[j];
                }
                if (dp != dm) { inhomogeneous = true; break; }
            }
            require(inhomogeneous, "expected a degree-unbalanced toric generator");
            out << "hat base toric ideal is not standard homogeneous";
        }
        if (is_product_side && instance.r == 0) {
            const auto gens = toric_generators(bases.a3.matrix, pair_limit);
            require(!gens.empty(), "empty toric ideal for A_(3)");
            out << "I_{A_(3)} computed, " << gens.size() << " generators";
        }
        return out.str();
    });

    run("split-support", [&]() -> std::string {
        if (depth != Depth::full) throw Skip{"quick depth"};
        if (instance.variant == FamilyVariant::hat_homogenized) {
            throw Skip{"homogenizing row couples every variable block"};
        }
        if (instance.d > kFullDepthAssemblyCap) {
            throw Skip{"instance Groebner computation capped at d <= 8"};
        }
        const auto& sys = toric_system();
        if (!sys) throw ResourceLimitError(toric.failure);
        std::vector<std::size_t> blocks;
        for (std::size_t i = 0; i < instance.r; ++i) blocks.push_back(is_hat ? 5 : 4);
        for (std::size_t i = 0; i < instance.s; ++i) blocks.push_back(is_hat ? 7 : 6);
        if (is_hat) {
            for (std::size_t i = 0; i + 1 < instance.r + instance.s; ++i) {
                blocks.push_back(1);
            }
        }
        const bool split = split_check(*sys, blocks);
        const bool expect = !is_hat || instance.r + instance.s == 1;
        require(split == expect, expect ? "direct sum fails to split blockwise"
                                        : "glued system unexpectedly splits");
        return split ? "system splits across the blocks"
                     : "glue columns couple the blocks";
    });

    run("kernel-invariant", [&]() -> std::string {
        if (depth != Depth::full) throw Skip{"quick depth"};
        if (instance.d > kFullDepthAssemblyCap) {
            throw Skip{"instance Groebner computation capped at d <= 8"};
        }
        const auto& sys = toric_system();
        if (!sys) throw ResourceLimitError(toric.failure);
        for (const Binomial& g : sys->toric_part) {
            std::vector<Int> u(g.plus.size());
            for (std::size_t j = 0; j < u.size(); ++j) u[j] = g.plus[j] - g.minus[j];
            for (const Int& x : hgfam::apply(instance.matrix, u)) {
                require(x == 0, "toric generator outside ker A");
            }
        }
        std::ostringstream out;
        out << sys->toric_part.size() << " generators in ker A";
        return out.str();
    });

    return report;
}

nlohmann::ordered_json VerificationReport::to_json(bool with_timing) const {
    nlohmann::ordered_json j;
    j["variant"] = hgfam::to_string(variant);
    j["d"] = d;
    j["r"] = r;
    j["s"] = s;
    j["computed"] = {{"volume", volume.str()},
                     {"ratio", hgfam::to_string(ratio)},
                     {"ratio_decimal", ratio.convert_to<double>()}};
    nlohmann::ordered_json predicted;
    predicted["rank"] = stats.rank.str();
    predicted["jump"] = stats.jump.str();
    if (stats.laurent_dim) predicted["laurent_dim"] = stats.laurent_dim->str();
    predicted["sst_bound"] = stats.sst_bound.str();
    predicted["rank_is_lower_bound"] = stats.rank_is_lower_bound;
    predicted["provenance"] = stats.provenance;
    j["predicted"] = predicted;
    nlohmann::ordered_json cs = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json cj;
        cj["claim"] = c.claim;
        cj["status"] = hgfam::to_string(c.status);
        cj["details"] = c.details;
        if (with_timing) cj["elapsed_ms"] = c.elapsed_ms;
        cs.push_back(std::move(cj));
    }
    j["checks"] = cs;
    j["overall"] = overall_pass() ? "pass" : "fail";
    return j;
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << "instance " << hgfam::to_string(variant) << " d=" << d << " r=" << r
        << " s=" << s << '\n';
    out << "volume " << volume << ", predicted rank " << stats.rank
        << (stats.rank_is_lower_bound ? " (lower bound)" : "") << ", jump "
        << stats.jump << ", ratio " << ratio << " ("
        << ratio.convert_to<double>() << ")\n";
    for (const auto& c : checks) {
        out << "  " << c.claim << ": " << hgfam::to_string(c.status);
        if (!c.details.empty()) out << " (" << c.details << ")";
        out << '\n';
    }
    out << "overall: " << (overall_pass() ? "pass" : "fail") << '\n';
    return out.str();
}

std::vector<RatioRow> ratio_table(std::size_t d_min, std::size_t d_max,
                                  FamilyVariant variant) {
    if (d_min < 2 || d_min > d_max) throw std::invalid_argument("need 2 <= d_min <= d_max");
    const bool is_hat = variant == FamilyVariant::hat ||
                        variant == FamilyVariant::hat_homogenized;
    if (!is_hat && variant != FamilyVariant::product) {
        throw std::invalid_argument("ratio table supports the product and hat families");
    }
    std::vector<RatioRow> rows;
    for (std::size_t d = d_min; d <= d_max; ++d) {
        const auto [r, s] = decompose_d(d);
        RatioRow row;
        row.d = d;
        row.r = r;
        row.s = s;
        row.volume = is_hat ? ipow(8, r) * ipow(10, s) : ipow(4, r) * ipow(5, s);
        row.rank = is_hat ? ipow(9, r) * ipow(12, s) : ipow(5, r) * ipow(7, s);
        row.jump = row.rank - row.volume;
        row.ratio = Rational(row.rank) / Rational(row.volume);
        row.bound_squared = rpow(is_hat ? Rational(9, 8) : Rational(5, 4), d);
        row.sst_bound = ipow(2, 2 * d) * row.volume;
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::ordered_json ratio_table_json(const std::vector<RatioRow>& rows) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json j;
        j["d"] = row.d;
        j["r"] = row.r;
        j["s"] = row.s;
        j["volume"] = row.volume.str();
        j["rank"] = row.rank.str();
        j["jump"] = row.jump.str();
        j["ratio"] = to_string(row.ratio);
        j["ratio_decimal"] = row.ratio.convert_to<double>();
        j["bound_squared"] = to_string(row.bound_squared);
        j["bound_decimal"] =
            std::sqrt(row.bound_squared.convert_to<double>());
        j["sst_bound"] = row.sst_bound.str();
        out.push_back(std::move(j));
    }
    return out;
}

std::string ratio_table_text(const std::vector<RatioRow>& rows) {
    std::ostringstream out;
    out << "d\tr\ts\tvol\trank\tjump\tratio\tratio~\tbound~\tsst\n";
    for (const auto& row : rows) {
        out << row.d << '\t' << row.r << '\t' << row.s << '\t' << row.volume << '\t'
            << row.rank << '\t' << row.jump << '\t' << row.ratio << '\t'
            << row.ratio.convert_to<double>() << '\t'
            << std::sqrt(row.bound_squared.convert_to<double>()) << '\t'
            << row.sst_bound << '\n';
    }
    return out.str();
}

}  // namespace hgfam
