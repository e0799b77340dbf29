#pragma once

#include "hgfam/matrix.hpp"

namespace hgfam {

/// U * A * V = D with U, V unimodular and the diagonal of D a nonnegative
/// divisibility chain d1 | d2 | ...
struct SmithDecomposition {
    IntegerMatrix left;   // U, rows x rows
    IntegerMatrix diag;   // D, same shape as A
    IntegerMatrix right;  // V, cols x cols
};

SmithDecomposition smith_normal_form(const IntegerMatrix& m);

/// [Z^d : ZA], the product of the d elementary divisors. Throws on
/// rank-deficient input.
Int lattice_index(const IntegerMatrix& a);

/// Saturated lattice basis of ker_Z(A): n - d integer vectors.
struct KernelBasis {
    std::vector<std::vector<Int>> vectors;
};

KernelBasis kernel_basis(const IntegerMatrix& a);

}  // namespace hgfam
