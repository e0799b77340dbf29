#include "hgfam/family.hpp"

#include <stdexcept>

namespace hgfam {

namespace {

std::vector<std::vector<Int>> rows_from(std::initializer_list<std::initializer_list<int>> r) {
    std::vector<std::vector<Int>> out;
    for (const auto& row : r) {
        std::vector<Int> v;
        for (int x : row) v.emplace_back(x);
        out.push_back(std::move(v));
    }
    return out;
}

ParameterVector params(std::initializer_list<int> v) {
    ParameterVector p;
    for (int x : v) p.emplace_back(x);
    return p;
}

}  // namespace

std::string to_string(FamilyVariant v) {
    switch (v) {
        case FamilyVariant::plain2: return "plain2";
        case FamilyVariant::plain3: return "plain3";
        case FamilyVariant::product: return "product";
        case FamilyVariant::hat: return "hat";
        case FamilyVariant::hat_homogenized: return "hat-h";
    }
    throw std::logic_error("unknown variant");
}

FamilyVariant variant_from_string(const std::string& name) {
    if (name == "plain2") return FamilyVariant::plain2;
    if (name == "plain3") return FamilyVariant::plain3;
    if (name == "product") return FamilyVariant::product;
    if (name == "hat") return FamilyVariant::hat;
    if (name == "hat-h" || name == "hat_homogenized") return FamilyVariant::hat_homogenized;
    throw std::invalid_argument("unknown variant: " + name);
}

std::pair<std::size_t, std::size_t> decompose_d(std::size_t d) {
    if (d < 2) throw std::invalid_argument("no decomposition");
    switch (d % 3) {
        case 0: return {0, d / 3};
        case 2: return {1, (d - 2) / 3};
        default:  // d % 3 == 1, needs d >= 4
            if (d < 4) throw std::invalid_argument("no decomposition");
            return {2, (d - 4) / 3};
    }
}

const BaseMatrices& base_matrices() {
    static const BaseMatrices bases{
        BasePair{IntegerMatrix::configuration(rows_from({{1, 1, 1, 1}, {0, 1, 3, 4}})),
                 params({1, 2})},
        BasePair{IntegerMatrix::configuration(rows_from({{1, 1, 1, 1, 1, 1},
                                                         {0, 0, 0, 0, 1, 1},
                                                         {0, 1, 3, 4, 0, 1}})),
                 params({1, 0, 2})},
        BasePair{IntegerMatrix::configuration(rows_from({{1, 2, 2, 2, 2}, {0, 0, 1, 3, 4}})),
                 params({3, 2})},
        BasePair{IntegerMatrix::configuration(rows_from({{1, 2, 2, 2, 2, 2, 2},
                                                         {0, 0, 0, 0, 0, 1, 1},
                                                         {0, 0, 1, 3, 4, 0, 1}})),
                 params({3, 0, 2})}};
    return bases;
}

BasePair repeated_family(const IntegerMatrix& a, const ParameterVector& beta,
                         std::size_t copies) {
    if (copies < 1) throw std::invalid_argument("need at least one copy");
    IntegerMatrix m = a;
    ParameterVector p = beta;
    for (std::size_t k = 1; k < copies; ++k) {
        m = direct_sum(m, a);
        p.insert(p.end(), beta.begin(), beta.end());
    }
    return BasePair{std::move(m), std::move(p)};
}

namespace {

BasePair block_sum(const BasePair& first, std::size_t r, const BasePair& second,
                   std::size_t s) {
    if (r == 0 && s == 0) throw std::invalid_argument("empty block sum");
    std::optional<BasePair> acc;
    if (r > 0) acc = repeated_family(first.matrix, first.parameter, r);
    if (s > 0) {
        BasePair tail = repeated_family(second.matrix, second.parameter, s);
        if (acc) {
            acc->matrix = direct_sum(acc->matrix, tail.matrix);
            acc->parameter.insert(acc->parameter.end(), tail.parameter.begin(),
                                  tail.parameter.end());
        } else {
            acc = std::move(tail);
        }
    }
    return std::move(*acc);
}

}  // namespace

FamilyInstance product_family(std::size_t d) {
    const auto [r, s] = decompose_d(d);
    const BaseMatrices& bases = base_matrices();
    BasePair pair = block_sum(bases.a2, r, bases.a3, s);
    return FamilyInstance{FamilyVariant::product, d, r, s, std::move(pair.matrix),
                          std::move(pair.parameter), {}};
}

FamilyInstance hat_family(std::size_t d) {
    const auto [r, s] = decompose_d(d);
    const BaseMatrices& bases = base_matrices();
    BasePair base = block_sum(bases.ahat2, r, bases.ahat3, s);
    const std::size_t base_cols = 5 * r + 7 * s;

    // Glue columns a_1 + a_k, recorded with 1-based k. The r,s >= 1 rule uses
    // the first column of the i-th Ahat_(3) block, index 5r + 7(i-1) + 1.
    std::vector<std::size_t> glue_bases;
    if (r >= 2) {
        for (std::size_t i = 1; i <= r - 1; ++i) glue_bases.push_back(5 * i + 1);
    }
    if (r >= 1 && s >= 1) {
        for (std::size_t i = 1; i <= s; ++i) glue_bases.push_back(5 * r + 7 * (i - 1) + 1);
    }
    if (r == 0 && s >= 1) {
        for (std::size_t i = 1; i + 1 <= s; ++i) glue_bases.push_back(7 * i + 1);
    }

    std::vector<std::vector<Int>> entries = base.matrix.entries();
    std::vector<GlueColumn> added;
    std::size_t position = base_cols;
    for (std::size_t k : glue_bases) {
        ++position;
        std::vector<Int> col(d);
        for (std::size_t i = 0; i < d; ++i) {
            col[i] = base.matrix.at(i, 0) + base.matrix.at(i, k - 1);
        }
        for (std::size_t i = 0; i < d; ++i) entries[i].push_back(col[i]);
        added.push_back(GlueColumn{position, k, std::move(col)});
    }
    const std::size_t total_cols = 6 * r + 8 * s - 1;
    IntegerMatrix matrix(d, total_cols, std::move(entries));
    return FamilyInstance{FamilyVariant::hat, d, r, s, std::move(matrix),
                          std::move(base.parameter), std::move(added)};
}

FamilyInstance hat_family_homogenized(std::size_t d, const Rational& beta0) {
    FamilyInstance hat = hat_family(d);
    FamilyInstance out{FamilyVariant::hat_homogenized,
                       hat.d,
                       hat.r,
                       hat.s,
                       homogenize(hat.matrix),
                       {},
                       hat.added_columns};
    out.parameter.push_back(beta0);
    out.parameter.insert(out.parameter.end(), hat.parameter.begin(), hat.parameter.end());
    return out;
}

FamilyInstance make_instance(FamilyVariant variant, std::size_t d, const Rational& beta0) {
    const BaseMatrices& bases = base_matrices();
    switch (variant) {
        case FamilyVariant::plain2:
            return FamilyInstance{variant, 2, 1, 0, bases.a2.matrix, bases.a2.parameter, {}};
        case FamilyVariant::plain3:
            return FamilyInstance{variant, 3, 0, 1, bases.a3.matrix, bases.a3.parameter, {}};
        case FamilyVariant::product:
            return product_family(d);
        case FamilyVariant::hat:
            return hat_family(d);
        case FamilyVariant::hat_homogenized:
            return hat_family_homogenized(d, beta0);
    }
    throw std::logic_error("unknown variant");
}

IntegerMatrix hat_base_matrix(const FamilyInstance& instance) {
    if (instance.variant != FamilyVariant::hat) {
        throw std::invalid_argument("hat instance required");
    }
    const std::size_t base_cols = 5 * instance.r + 7 * instance.s;
    std::vector<std::vector<Int>> entries(instance.d);
    for (std::size_t i = 0; i < instance.d; ++i) {
        for (std::size_t j = 0; j < base_cols; ++j) {
            entries[i].push_back(instance.matrix.at(i, j));
        }
    }
    return IntegerMatrix(instance.d, base_cols, std::move(entries));
}

}  // namespace hgfam
