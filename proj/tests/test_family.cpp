#include <doctest.h>

#include <hgfam/family.hpp>
#include <hgfam/polytope.hpp>

#include <stdexcept>

using namespace hgfam;

namespace {

Int ipow(Int base, std::size_t e) {
    Int out = 1;
    for (std::size_t i = 0; i < e; ++i) out *= base;
    return out;
}

}  // namespace

TEST_CASE("decompose_d picks maximal s") {
    CHECK(decompose_d(2) == std::pair<std::size_t, std::size_t>{1, 0});
    CHECK(decompose_d(3) == std::pair<std::size_t, std::size_t>{0, 1});
    CHECK(decompose_d(4) == std::pair<std::size_t, std::size_t>{2, 0});
    CHECK(decompose_d(5) == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(decompose_d(6) == std::pair<std::size_t, std::size_t>{0, 2});
    CHECK(decompose_d(7) == std::pair<std::size_t, std::size_t>{2, 1});
    CHECK(decompose_d(12) == std::pair<std::size_t, std::size_t>{0, 4});
    CHECK_THROWS_WITH(decompose_d(1), "no decomposition");
    CHECK_THROWS_AS(decompose_d(0), std::invalid_argument);
}

TEST_CASE("base matrices match their stated shape and parameters") {
    const auto& bases = base_matrices();
    CHECK(bases.a2.matrix.rows() == 2);
    CHECK(bases.a2.matrix.cols() == 4);
    CHECK(bases.a2.parameter == ParameterVector{Rational(1), Rational(2)});
    CHECK(bases.a3.matrix.rows() == 3);
    CHECK(bases.a3.matrix.cols() == 6);
    CHECK(bases.a3.parameter == ParameterVector{Rational(1), Rational(0), Rational(2)});
    CHECK(bases.ahat2.matrix.cols() == 5);
    CHECK(bases.ahat2.parameter == ParameterVector{Rational(3), Rational(2)});
    CHECK(bases.ahat3.matrix.cols() == 7);
    CHECK(bases.ahat3.parameter ==
          ParameterVector{Rational(3), Rational(0), Rational(2)});
}

TEST_CASE("repeated family concatenates copies") {
    const auto& base = base_matrices().a2;
    const BasePair twice = repeated_family(base.matrix, base.parameter, 2);
    CHECK(twice.matrix.rows() == 4);
    CHECK(twice.matrix.cols() == 8);
    CHECK(twice.parameter.size() == 4);
    CHECK_THROWS_AS(repeated_family(base.matrix, base.parameter, 0), std::invalid_argument);
}

TEST_CASE("product family shape and parameter") {
    for (std::size_t d = 2; d <= 9; ++d) {
        const FamilyInstance inst = product_family(d);
        CHECK(inst.d == d);
        CHECK(2 * inst.r + 3 * inst.s == d);
        CHECK(inst.matrix.rows() == d);
        CHECK(inst.matrix.cols() == 4 * inst.r + 6 * inst.s);
        CHECK(inst.parameter.size() == d);
        CHECK(inst.added_columns.empty());
    }
}

TEST_CASE("hat family glue columns satisfy both identities") {
    for (std::size_t d = 2; d <= 9; ++d) {
        const FamilyInstance inst = hat_family(d);
        CHECK(inst.matrix.cols() == 6 * inst.r + 8 * inst.s - 1);
        CHECK(inst.added_columns.size() == inst.r + inst.s - 1);
        for (const GlueColumn& g : inst.added_columns) {
            const std::size_t k = g.base_index - 1;  // 0-based
            for (std::size_t i = 0; i < d; ++i) {
                // a_1 + a_k ...
                CHECK(g.column[i] == inst.matrix.at(i, 0) + inst.matrix.at(i, k));
                // ... and (a_2 + a_{k+1}) / 2.
                CHECK(Int(2) * g.column[i] ==
                      inst.matrix.at(i, 1) + inst.matrix.at(i, k + 1));
                CHECK(inst.matrix.at(i, g.position - 1) == g.column[i]);
            }
        }
    }
}

TEST_CASE("hat base matrix strips the glue columns") {
    const FamilyInstance inst = hat_family(7);  // r=2, s=1
    const IntegerMatrix base = hat_base_matrix(inst);
    CHECK(base.cols() == 5 * 2 + 7 * 1);
    for (std::size_t i = 0; i < base.rows(); ++i)
        for (std::size_t j = 0; j < base.cols(); ++j)
            CHECK(base.at(i, j) == inst.matrix.at(i, j));
    CHECK_THROWS_AS(hat_base_matrix(product_family(4)), std::invalid_argument);
}

TEST_CASE("volume closed forms for both families") {
    for (std::size_t d = 2; d <= 7; ++d) {
        const FamilyInstance prod = product_family(d);
        CHECK(normalized_volume(prod.matrix) == ipow(4, prod.r) * ipow(5, prod.s));
        const FamilyInstance hat = hat_family(d);
        CHECK(normalized_volume(hat.matrix) == ipow(8, hat.r) * ipow(10, hat.s));
    }
}

TEST_CASE("homogenized hat family") {
    const FamilyInstance inst = hat_family_homogenized(5, Rational(1, 2));
    CHECK(inst.matrix.rows() == 6);
    CHECK(inst.matrix.cols() == hat_family(5).matrix.cols() + 1);
    CHECK(inst.parameter.size() == 6);
    CHECK(inst.parameter.front() == Rational(1, 2));
    CHECK(is_homogeneous_configuration(inst.matrix));
    CHECK(normalized_volume(inst.matrix) == normalized_volume(hat_family(5).matrix));
}

TEST_CASE("variant names round trip") {
    for (FamilyVariant v : {FamilyVariant::plain2, FamilyVariant::plain3,
                            FamilyVariant::product, FamilyVariant::hat,
                            FamilyVariant::hat_homogenized}) {
        CHECK(variant_from_string(to_string(v)) == v);
    }
    CHECK_THROWS_AS(variant_from_string("nope"), std::invalid_argument);
}
