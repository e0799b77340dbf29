#pragma once

#include "hgfam/matrix.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgfam {

using Exponent = std::vector<std::int64_t>;

/// d^{plus} - d^{minus}. Normalized binomials keep plus strictly larger in
/// the active order.
struct Binomial {
    Exponent plus;
    Exponent minus;

    bool operator==(const Binomial&) const = default;
};

/// Weighted reverse-lexicographic order: compare the w-degree first, then
/// reverse-lex under a variable permutation; the variable at the back of the
/// permutation is cheapest. Lattice basis ideals are homogeneous for the
/// w-grading induced by a positive grading of A, which is what makes the
/// per-variable saturation step sound.
struct MonomialOrder {
    std::vector<std::int64_t> weights;
    std::vector<std::size_t> permutation;

    static MonomialOrder grevlex(std::size_t nvars);
    static MonomialOrder weighted(std::vector<std::int64_t> weights);

    /// Same order with variable v moved to the cheapest slot.
    MonomialOrder cheapest(std::size_t v) const;

    /// negative, zero, positive as a <, ==, > b.
    int compare(const Exponent& a, const Exponent& b) const;
    bool less(const Exponent& a, const Exponent& b) const { return compare(a, b) < 0; }
};

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Default cap on processed S-pairs per Groebner call.
inline constexpr std::size_t kDefaultPairLimit = 100'000;

/// Orient so that plus is the leading monomial; nullopt when the two sides
/// cancel.
std::optional<Binomial> normalize(Binomial b, const MonomialOrder& ord);

/// Normal form of b modulo G (both monomials fully reduced); nullopt = zero.
std::optional<Binomial> reduce(const Binomial& b, const std::vector<Binomial>& g,
                               const MonomialOrder& ord);

/// Reduced Groebner basis of the ideal generated by g.
std::vector<Binomial> buchberger(std::vector<Binomial> g, const MonomialOrder& ord,
                                 std::size_t pair_limit = kDefaultPairLimit);

/// Saturation of a lattice basis ideal at the product of all variables:
/// per-variable Groebner passes stripping the cheapest variable, repeated to
/// a fixed point.
std::vector<Binomial> saturate(std::vector<Binomial> g, const MonomialOrder& ord,
                               std::size_t pair_limit = kDefaultPairLimit);

/// Generating set of I_A: kernel basis -> binomials -> saturation.
std::vector<Binomial> toric_generators(const IntegerMatrix& a,
                                       std::size_t pair_limit = kDefaultPairLimit);

bool ideals_equal(const std::vector<Binomial>& g1, const std::vector<Binomial>& g2,
                  const MonomialOrder& ord,
                  std::size_t pair_limit = kDefaultPairLimit);

/// "d1^2 d3 - d2^3" rendering; an empty side renders as "1".
std::string to_text(const Binomial& b);
Binomial parse_binomial(const std::string& text, std::size_t nvars);

}  // namespace hgfam
