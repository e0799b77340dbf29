#include <doctest.h>

#include "oracles.hpp"

#include <hgfam/family.hpp>
#include <hgfam/smith.hpp>

#include <random>

using namespace hgfam;

namespace {

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
    std::vector<std::vector<Int>> e(a.rows(), std::vector<Int>(b.cols(), 0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            for (std::size_t j = 0; j < b.cols(); ++j)
                e[i][j] += a.at(i, k) * b.at(k, j);
    return IntegerMatrix(a.rows(), b.cols(), std::move(e));
}

Int abs_det(const IntegerMatrix& m) {
    Int d = determinant(m.entries());
    return d < 0 ? Int(-d) : d;
}

void check_decomposition(const IntegerMatrix& m) {
    const SmithDecomposition snf = smith_normal_form(m);
    CHECK(abs_det(snf.left) == 1);
    CHECK(abs_det(snf.right) == 1);
    CHECK(multiply(multiply(snf.left, m), snf.right) == snf.diag);
    // Nonnegative diagonal, divisibility chain, zero off-diagonal.
    const std::size_t k = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j) CHECK(snf.diag.at(i, j) == 0);
    for (std::size_t i = 0; i < k; ++i) {
        CHECK(snf.diag.at(i, i) >= 0);
        if (i + 1 < k && snf.diag.at(i + 1, i + 1) != 0) {
            CHECK(snf.diag.at(i, i) != 0);
            CHECK(snf.diag.at(i + 1, i + 1) % snf.diag.at(i, i) == 0);
        }
    }
}

}  // namespace

TEST_CASE("smith normal form on fixed examples") {
    const IntegerMatrix m(2, 2, {{Int(2), Int(0)}, {Int(0), Int(3)}});
    const SmithDecomposition snf = smith_normal_form(m);
    CHECK(snf.diag.at(0, 0) == 1);
    CHECK(snf.diag.at(1, 1) == 6);
    check_decomposition(m);

    const auto& a2 = base_matrices().a2.matrix;
    const SmithDecomposition snf2 = smith_normal_form(a2);
    CHECK(snf2.diag.at(0, 0) == 1);
    CHECK(snf2.diag.at(1, 1) == 1);
    check_decomposition(a2);
}

TEST_CASE("lattice index") {
    CHECK(lattice_index(base_matrices().a2.matrix) == 1);
    CHECK(lattice_index(IntegerMatrix(2, 2, {{Int(2), Int(0)}, {Int(0), Int(2)}})) == 4);
    CHECK(lattice_index(IntegerMatrix(1, 2, {{Int(4), Int(6)}})) == 2);
    CHECK_THROWS_AS(lattice_index(IntegerMatrix(2, 2, {{Int(1), Int(2)}, {Int(2), Int(4)}})),
                    std::invalid_argument);
}

TEST_CASE("kernel basis spans a saturated lattice") {
    for (const IntegerMatrix& a : {base_matrices().a2.matrix, base_matrices().ahat3.matrix,
                                   hat_family(5).matrix}) {
        const KernelBasis k = kernel_basis(a);
        CHECK(k.vectors.size() == a.cols() - a.rows());
        for (const auto& u : k.vectors) {
            CHECK(apply(a, u) == std::vector<Int>(a.rows(), 0));
        }
        // Saturated iff the kernel matrix has all elementary divisors 1.
        std::vector<std::vector<Int>> cols(a.cols(), std::vector<Int>(k.vectors.size()));
        for (std::size_t v = 0; v < k.vectors.size(); ++v)
            for (std::size_t i = 0; i < a.cols(); ++i) cols[i][v] = k.vectors[v][i];
        const IntegerMatrix km(a.cols(), k.vectors.size(), std::move(cols));
        const SmithDecomposition snf = smith_normal_form(km);
        for (std::size_t i = 0; i < k.vectors.size(); ++i) CHECK(snf.diag.at(i, i) == 1);
    }
}

TEST_CASE("smith normal form on random matrices") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> shape(1, 4);
        const IntegerMatrix m = oracle::random_matrix(rng, shape(rng), shape(rng), -6, 6);
        check_decomposition(m);
    }
}
