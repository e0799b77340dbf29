#include <doctest.h>

#include "oracles.hpp"

#include <hgfam/family.hpp>
#include <hgfam/groebner.hpp>
#include <hgfam/semigroup.hpp>

using namespace hgfam;

namespace {

// The same weighted order toric_generators works under.
MonomialOrder toric_order(const IntegerMatrix& a) {
    const std::vector<Int> g = positive_grading(a);
    std::vector<std::int64_t> w(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        Int deg = 0;
        for (std::size_t i = 0; i < a.rows(); ++i) deg += g[i] * a.at(i, j);
        w[j] = deg.convert_to<std::int64_t>();
    }
    return MonomialOrder::weighted(std::move(w));
}

}  // namespace

TEST_CASE("grevlex comparisons") {
    const MonomialOrder ord = MonomialOrder::grevlex(3);
    CHECK(ord.compare({1, 0, 0}, {0, 1, 0}) > 0);  // x1 > x2
    CHECK(ord.compare({0, 1, 0}, {0, 0, 1}) > 0);  // x2 > x3
    CHECK(ord.compare({2, 0, 0}, {0, 1, 0}) > 0);  // degree dominates
    CHECK(ord.compare({0, 1, 1}, {1, 0, 1}) < 0);
    CHECK(ord.compare({1, 1, 0}, {1, 1, 0}) == 0);
}

TEST_CASE("cheapest variable moves to the back of the tiebreak") {
    const MonomialOrder ord = MonomialOrder::grevlex(2).cheapest(0);
    // Same degree: the cheapest variable x1 loses, so x2 > x1.
    CHECK(ord.compare({1, 0}, {0, 1}) < 0);
}

TEST_CASE("normalize orients binomials") {
    const MonomialOrder ord = MonomialOrder::grevlex(2);
    const auto b = normalize(Binomial{{0, 1}, {2, 0}}, ord);
    REQUIRE(b.has_value());
    CHECK(b->plus == Exponent{2, 0});
    CHECK(b->minus == Exponent{0, 1});
    CHECK_FALSE(normalize(Binomial{{1, 1}, {1, 1}}, ord).has_value());
}

TEST_CASE("reduction") {
    const MonomialOrder ord = MonomialOrder::grevlex(2);
    const std::vector<Binomial> g{{{2, 0}, {0, 1}}};  // x1^2 - x2
    // x1^4 - x2^2 reduces to zero.
    CHECK_FALSE(reduce(Binomial{{4, 0}, {0, 2}}, g, ord).has_value());
    // x1^3 -> x1 x2, then the tail stays.
    const auto r = reduce(Binomial{{3, 0}, {0, 0}}, g, ord);
    REQUIRE(r.has_value());
    CHECK(r->plus == Exponent{1, 1});
    CHECK(r->minus == Exponent{0, 0});
}

TEST_CASE("toric ideal of a one-row configuration") {
    // A = (1 2): kernel (2,-1), I_A = <d1^2 - d2>.
    const auto g = toric_generators(IntegerMatrix(1, 2, {{Int(1), Int(2)}}));
    REQUIRE(g.size() == 1);
    CHECK(to_text(g[0]) == "d1^2 - d2");
    // A = (2 3): saturation must recover d1^3 - d2^2.
    const auto g2 = toric_generators(IntegerMatrix(1, 2, {{Int(2), Int(3)}}));
    REQUIRE(g2.size() == 1);
    CHECK(to_text(g2[0]) == "d1^3 - d2^2");
}

TEST_CASE("toric ideal of A_(2) equals the four displayed binomials") {
    const auto& a2 = base_matrices().a2.matrix;
    const auto computed = toric_generators(a2);
    const std::vector<Binomial> displayed{
        parse_binomial("d1 d4 - d2 d3", 4),
        parse_binomial("d2 d4^2 - d3^3", 4),
        parse_binomial("d2^2 d4 - d1 d3^2", 4),
        parse_binomial("d1^2 d3 - d2^3", 4),
    };
    CHECK(ideals_equal(computed, displayed, toric_order(a2)));
    // Dropping one generator breaks equality.
    std::vector<Binomial> partial(displayed.begin(), displayed.end() - 1);
    CHECK_FALSE(ideals_equal(computed, partial, toric_order(a2)));
}

TEST_CASE("toric generators vanish on the kernel and pass the Buchberger criterion") {
    for (const IntegerMatrix* a : {&base_matrices().a2.matrix, &base_matrices().ahat2.matrix,
                                   &base_matrices().ahat3.matrix}) {
        const MonomialOrder ord = toric_order(*a);
        const auto gens = toric_generators(*a);
        CHECK(oracle::all_spairs_reduce(gens, ord));
        for (const Binomial& b : gens) {
            // A . (plus - minus) = 0: the binomial lies in the lattice ideal.
            for (std::size_t i = 0; i < a->rows(); ++i) {
                Int s = 0;
                for (std::size_t j = 0; j < a->cols(); ++j)
                    s += a->at(i, j) * Int(b.plus[j] - b.minus[j]);
                CHECK(s == 0);
            }
        }
    }
}

TEST_CASE("buchberger output is autoreduced and deterministic") {
    const auto& a = base_matrices().ahat2.matrix;
    const MonomialOrder ord = toric_order(a);
    const auto g1 = toric_generators(a);
    const auto g2 = toric_generators(a);
    CHECK(g1 == g2);
    for (std::size_t i = 0; i < g1.size(); ++i) {
        std::vector<Binomial> others;
        for (std::size_t j = 0; j < g1.size(); ++j)
            if (j != i) others.push_back(g1[j]);
        const auto r = reduce(g1[i], others, ord);
        REQUIRE(r.has_value());
        CHECK(*r == g1[i]);
    }
}

TEST_CASE("pair limit raises a resource error") {
    const auto& a = base_matrices().ahat3.matrix;
    CHECK_THROWS_AS(toric_generators(a, 2), ResourceLimitError);
}

TEST_CASE("binomial text round trip") {
    const Binomial b{{2, 0, 1, 0}, {0, 3, 0, 0}};
    CHECK(to_text(b) == "d1^2 d3 - d2^3");
    CHECK(parse_binomial(to_text(b), 4) == b);
    CHECK(to_text(Binomial{{1, 0}, {0, 0}}) == "d1 - 1");
    CHECK(parse_binomial("d1 - 1", 2) == Binomial{{1, 0}, {0, 0}});
    CHECK_THROWS_AS(parse_binomial("d1 + d2", 2), std::invalid_argument);
}
