#include "hgfam/groebner.hpp"

#include "hgfam/semigroup.hpp"
#include "hgfam/smith.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <tuple>

namespace hgfam {

namespace {

std::int64_t wdegree(const Exponent& e, const std::vector<std::int64_t>& w) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += w[i] * e[i];
    return s;
}

bool divides(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

Exponent lcm_exp(const Exponent& a, const Exponent& b) {
    Exponent l(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
    return l;
}

bool disjoint(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > 0 && b[i] > 0) return false;
    }
    return true;
}

}  // namespace

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
    MonomialOrder ord;
    ord.weights.assign(nvars, 1);
    ord.permutation.resize(nvars);
    std::iota(ord.permutation.begin(), ord.permutation.end(), std::size_t{0});
    return ord;
}

MonomialOrder MonomialOrder::weighted(std::vector<std::int64_t> weights) {
    MonomialOrder ord;
    ord.permutation.resize(weights.size());
    std::iota(ord.permutation.begin(), ord.permutation.end(), std::size_t{0});
    ord.weights = std::move(weights);
    return ord;
}

MonomialOrder MonomialOrder::cheapest(std::size_t v) const {
    MonomialOrder ord;
    ord.weights = weights;
    for (std::size_t i : permutation) {
        if (i != v) ord.permutation.push_back(i);
    }
    ord.permutation.push_back(v);
    return ord;
}

int MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
    const std::int64_t da = wdegree(a, weights), db = wdegree(b, weights);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t k = permutation.size(); k-- > 0;) {
        const std::size_t i = permutation[k];
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;  // reverse lex
    }
    return 0;
}

std::optional<Binomial> normalize(Binomial b, const MonomialOrder& ord) {
    const int c = ord.compare(b.plus, b.minus);
    if (c == 0) return std::nullopt;
    if (c < 0) std::swap(b.plus, b.minus);
    return b;
}

std::optional<Binomial> reduce(const Binomial& b, const std::vector<Binomial>& g,
                               const MonomialOrder& ord) {
    auto cur = normalize(b, ord);
    if (!cur) return std::nullopt;
    auto step = [&](Exponent& mono) {
        for (const Binomial& h : g) {
            if (!divides(h.plus, mono)) continue;
            for (std::size_t i = 0; i < mono.size(); ++i) {
                mono[i] = mono[i] - h.plus[i] + h.minus[i];
            }
            return true;
        }
        return false;
    };
    // Lead reduction (may flip orientation or cancel).
    for (;;) {
        if (!step(cur->plus)) break;
        cur = normalize(std::move(*cur), ord);
        if (!cur) return std::nullopt;
    }
    // Tail reduction: replaces the trailing monomial by strictly smaller ones,
    // so the orientation is stable and the loop terminates.
    while (step(cur->minus)) {
    }
    return cur;
}

std::vector<Binomial> buchberger(std::vector<Binomial> g, const MonomialOrder& ord,
                                 std::size_t pair_limit) {
    std::vector<Binomial> basis;
    for (auto& b : g) {
        if (auto n = normalize(std::move(b), ord)) basis.push_back(std::move(*n));
    }

    // Normal selection: process pairs by w-degree of the lcm of the leads.
    using PairKey = std::tuple<std::int64_t, std::size_t, std::size_t>;
    auto cmp = [](const PairKey& a, const PairKey& b) { return a > b; };
    std::priority_queue<PairKey, std::vector<PairKey>, decltype(cmp)> pairs(cmp);
    auto push_pairs = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            if (disjoint(basis[i].plus, basis[k].plus)) continue;  // product criterion
            const Exponent l = lcm_exp(basis[i].plus, basis[k].plus);
            pairs.emplace(wdegree(l, ord.weights), i, k);
        }
    };
    for (std::size_t k = 1; k < basis.size(); ++k) push_pairs(k);

    std::size_t processed = 0;
    while (!pairs.empty()) {
        const auto [deg, i, j] = pairs.top();
        pairs.pop();
        if (++processed > pair_limit) {
            throw ResourceLimitError("resource limit: S-pair budget exhausted");
        }
        const Binomial &f = basis[i], &h = basis[j];
        const Exponent l = lcm_exp(f.plus, h.plus);
        Binomial s;
        s.plus.resize(l.size());
        s.minus.resize(l.size());
        for (std::size_t k = 0; k < l.size(); ++k) {
            s.plus[k] = l[k] - f.plus[k] + f.minus[k];
            s.minus[k] = l[k] - h.plus[k] + h.minus[k];
        }
        if (auto r = reduce(s, basis, ord)) {
            basis.push_back(std::move(*r));
            push_pairs(basis.size() - 1);
        }
    }

    // Minimalize: drop generators whose lead is divisible by another lead.
    std::stable_sort(basis.begin(), basis.end(), [&](const Binomial& a, const Binomial& b) {
        return ord.less(a.plus, b.plus);
    });
    std::vector<Binomial> minimal;
    for (const Binomial& b : basis) {
        bool redundant = false;
        for (const Binomial& m : minimal) {
            if (divides(m.plus, b.plus)) { redundant = true; break; }
        }
        if (!redundant) minimal.push_back(b);
    }
    // Tail-reduce for the reduced basis.
    std::vector<Binomial> reduced;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<Binomial> others;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            if (i != k) others.push_back(minimal[i]);
        }
        auto r = reduce(minimal[k], others, ord);
        if (r) reduced.push_back(std::move(*r));
    }
    std::stable_sort(reduced.begin(), reduced.end(), [&](const Binomial& a, const Binomial& b) {
        return ord.less(a.plus, b.plus);
    });
    return reduced;
}

std::vector<Binomial> saturate(std::vector<Binomial> g, const MonomialOrder& ord,
                               std::size_t pair_limit) {
    const std::size_t n = ord.permutation.size();
    for (;;) {
        bool stripped = false;
        for (std::size_t v = 0; v < n; ++v) {
            g = buchberger(std::move(g), ord.cheapest(v), pair_limit);
            for (Binomial& b : g) {
                const std::int64_t c = std::min(b.plus[v], b.minus[v]);
                if (c > 0) {
                    b.plus[v] -= c;
                    b.minus[v] -= c;
                    stripped = true;
                }
            }
        }
        if (!stripped) break;
    }
    return g;
}

std::vector<Binomial> toric_generators(const IntegerMatrix& a, std::size_t pair_limit) {
    const std::vector<Int> grading = positive_grading(a);
    std::vector<std::int64_t> weights(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        Int w = 0;
        for (std::size_t i = 0; i < a.rows(); ++i) w += grading[i] * a.at(i, j);
        weights[j] = w.convert_to<std::int64_t>();
    }
    const MonomialOrder ord = MonomialOrder::weighted(std::move(weights));

    std::vector<Binomial> gens;
    for (const auto& u : kernel_basis(a).vectors) {
        Binomial b;
        b.plus.assign(u.size(), 0);
        b.minus.assign(u.size(), 0);
        for (std::size_t j = 0; j < u.size(); ++j) {
            if (u[j] > 0) b.plus[j] = u[j].convert_to<std::int64_t>();
            if (u[j] < 0) b.minus[j] = Int(-u[j]).convert_to<std::int64_t>();
        }
        gens.push_back(std::move(b));
    }
    gens = saturate(std::move(gens), ord, pair_limit);
    return buchberger(std::move(gens), ord, pair_limit);
}

bool ideals_equal(const std::vector<Binomial>& g1, const std::vector<Binomial>& g2,
                  const MonomialOrder& ord, std::size_t pair_limit) {
    const std::vector<Binomial> b1 = buchberger(g1, ord, pair_limit);
    const std::vector<Binomial> b2 = buchberger(g2, ord, pair_limit);
    for (const Binomial& g : g1) {
        if (reduce(g, b2, ord)) return false;
    }
    for (const Binomial& g : g2) {
        if (reduce(g, b1, ord)) return false;
    }
    return true;
}

std::string to_text(const Binomial& b) {
    auto mono = [](const Exponent& e) {
        std::ostringstream out;
        bool first = true;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (!first) out << ' ';
            first = false;
            out << 'd' << (j + 1);
            if (e[j] > 1) out << '^' << e[j];
        }
        if (first) out << '1';
        return out.str();
    };
    return mono(b.plus) + " - " + mono(b.minus);
}

Binomial parse_binomial(const std::string& text, std::size_t nvars) {
    const std::size_t split = text.find(" - ");
    if (split == std::string::npos) throw std::invalid_argument("binomial needs ' - '");
    auto mono = [&](const std::string& part) {
        Exponent e(nvars, 0);
        std::istringstream in(part);
        std::string tok;
        while (in >> tok) {
            if (tok == "1") continue;
            if (tok.front() != 'd') throw std::invalid_argument("bad factor: " + tok);
            const std::size_t caret = tok.find('^');
            const std::size_t var = std::stoul(tok.substr(1, caret - 1));
            const std::int64_t exp =
                caret == std::string::npos ? 1 : std::stoll(tok.substr(caret + 1));
            if (var < 1 || var > nvars || exp < 1) {
                throw std::invalid_argument("bad factor: " + tok);
            }
            e[var - 1] += exp;
        }
        return e;
    };
    Binomial b;
    b.plus = mono(text.substr(0, split));
    b.minus = mono(text.substr(split + 3));
    return b;
}

}  // namespace hgfam
