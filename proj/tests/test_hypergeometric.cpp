#include <doctest.h>

#include <hgfam/family.hpp>
#include <hgfam/hypergeometric.hpp>

#include <sstream>

using namespace hgfam;

TEST_CASE("box operator splits signs") {
    const Binomial b = box_operator({Int(1), Int(-1), Int(2), Int(0)});
    CHECK(b.plus == Exponent{1, 0, 2, 0});
    CHECK(b.minus == Exponent{0, 1, 0, 0});
    CHECK_THROWS_WITH(box_operator({Int(0), Int(0)}), "trivial relation");
}

TEST_CASE("euler operators mirror the rows") {
    const auto& base = base_matrices().a2;
    const auto ops = euler_operators(base.matrix, base.parameter);
    REQUIRE(ops.size() == 2);
    CHECK(ops[0].coefficients == std::vector<Int>{1, 1, 1, 1});
    CHECK(ops[0].shift == Rational(1));
    CHECK(to_text(ops[0]) == "x1 d1 + x2 d2 + x3 d3 + x4 d4 - 1");
    CHECK(to_text(ops[1]) == "x2 d2 + 3 x3 d3 + 4 x4 d4 - 2");
    CHECK_THROWS_AS(euler_operators(base.matrix, ParameterVector{Rational(1)}),
                    std::invalid_argument);
}

TEST_CASE("assembled system has the right generator counts") {
    const auto& base = base_matrices().a2;
    const HypergeometricSystem sys = assemble_system(base.matrix, base.parameter);
    CHECK(sys.toric_part.size() == 4);
    CHECK(sys.euler_part.size() == 2);
    CHECK(sys.matrix == base.matrix);
}

TEST_CASE("split check distinguishes block systems from glued ones") {
    const FamilyInstance product = product_family(4);  // A_(2) (+) A_(2)
    const HypergeometricSystem psys =
        assemble_system(product.matrix, product.parameter);
    CHECK(split_check(psys, {4, 4}));
    CHECK_FALSE(split_check(psys, {2, 6}));  // wrong cut severs a toric generator

    const FamilyInstance hat = hat_family(4);  // one glue column at the end
    const HypergeometricSystem hsys = assemble_system(hat.matrix, hat.parameter);
    CHECK_FALSE(split_check(hsys, {5, 5, 1}));

    CHECK_THROWS_AS(split_check(psys, {4, 3}), std::invalid_argument);
    CHECK_THROWS_AS(split_check(psys, {4, 4, 1}), std::invalid_argument);
}

TEST_CASE("predicted stats closed forms") {
    const PredictedStats p5 = predicted_stats(product_family(5));  // r=1, s=1
    CHECK(p5.volume == 20);
    CHECK(p5.rank == 35);
    CHECK(p5.jump == 15);
    REQUIRE(p5.laurent_dim.has_value());
    CHECK(*p5.laurent_dim == 8);
    CHECK(p5.sst_bound == Int(1024) * 20);
    CHECK_FALSE(p5.rank_is_lower_bound);

    const PredictedStats h5 = predicted_stats(hat_family(5));
    CHECK(h5.volume == 80);
    CHECK(h5.rank == 108);
    CHECK(h5.jump == 28);
    CHECK_FALSE(h5.laurent_dim.has_value());

    const PredictedStats hh = predicted_stats(hat_family_homogenized(5, Rational(0)));
    CHECK(hh.volume == 80);
    CHECK(hh.rank == 108);
    CHECK(hh.rank_is_lower_bound);
}

TEST_CASE("render round trip: script comments reproduce the toric part") {
    const auto& base = base_matrices().a2;
    const HypergeometricSystem sys = assemble_system(base.matrix, base.parameter);
    const std::string script = render_system(sys, RenderFormat::script);
    std::vector<Binomial> parsed;
    std::istringstream in(script);
    std::string line;
    const std::string prefix = "-- toric: ";
    while (std::getline(in, line)) {
        if (line.rfind(prefix, 0) == 0) {
            parsed.push_back(parse_binomial(line.substr(prefix.size()), 4));
        }
    }
    CHECK(parsed == sys.toric_part);
    CHECK(script.find("holonomicRank") != std::string::npos);

    const std::string text = render_system(sys, RenderFormat::text);
    std::size_t lines = 0;
    std::istringstream tin(text);
    while (std::getline(tin, line)) ++lines;
    CHECK(lines == sys.toric_part.size() + sys.euler_part.size());
}
