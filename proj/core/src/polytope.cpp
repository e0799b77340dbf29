#include "hgfam/polytope.hpp"

#include "hgfam/lp.hpp"
#include "hgfam/smith.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace hgfam {

namespace {

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// |det| of the simplex spanned by verts and apex (rows v_i - apex).
Int simplex_volume(const std::vector<std::vector<Int>>& pts,
                   const std::vector<std::size_t>& verts,
                   const std::vector<Int>& apex) {
    const std::size_t d = apex.size();
    std::vector<std::vector<Int>> m(verts.size(), std::vector<Int>(d));
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = 0; j < d; ++j) m[i][j] = pts[verts[i]][j] - apex[j];
    }
    return abs_int(determinant(std::move(m)));
}

// Primitive integer normal of the hyperplane through d affinely independent
// points: nullspace vector of the (d-1) x d edge matrix.
std::vector<Int> facet_normal(const std::vector<std::vector<Int>>& pts,
                              const std::vector<std::size_t>& verts) {
    const std::size_t d = pts[verts[0]].size();
    const std::size_t rows = d - 1;
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(d));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            a[i][j] = pts[verts[i + 1]][j] - pts[verts[0]][j];
        }
    }
    // Fraction-free forward elimination.
    std::vector<std::size_t> pivcols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < d && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && a[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            const Int f = a[i][col], piv = a[r][col];
            for (std::size_t j = col; j < d; ++j) a[i][j] = a[i][j] * piv - a[r][j] * f;
        }
        pivcols.push_back(col);
        ++r;
    }
    if (r != rows) throw std::logic_error("degenerate facet");
    std::size_t free_col = d;
    for (std::size_t col = 0, k = 0; col < d; ++col) {
        if (k < pivcols.size() && pivcols[k] == col) { ++k; continue; }
        free_col = col;
        break;
    }
    std::vector<Rational> x(d, 0);
    x[free_col] = 1;
    for (std::size_t k = rows; k-- > 0;) {
        Rational s = 0;
        for (std::size_t j = pivcols[k] + 1; j < d; ++j) {
            if (x[j] != 0) s += Rational(a[k][j]) * x[j];
        }
        x[pivcols[k]] = -s / Rational(a[k][pivcols[k]]);
    }
    Int lcm = 1;
    for (const auto& q : x) {
        Int den = boost::multiprecision::denominator(q);
        lcm = boost::multiprecision::lcm(lcm, den);
    }
    std::vector<Int> n(d);
    Int g = 0;
    for (std::size_t j = 0; j < d; ++j) {
        n[j] = boost::multiprecision::numerator(x[j]) *
               (lcm / boost::multiprecision::denominator(x[j]));
        g = boost::multiprecision::gcd(g, n[j]);
    }
    if (g > 1) {
        for (auto& v : n) v /= g;
    }
    return n;
}

struct Facet {
    std::vector<std::size_t> verts;  // sorted, size d
    std::vector<Int> normal;         // outward: normal . x <= offset inside
    Int offset;
    bool alive = true;
};

}  // namespace

Int volume_dfact(const std::vector<std::vector<Int>>& points, std::size_t dim) {
    if (points.empty()) return 0;
    for (const auto& p : points) {
        if (p.size() != dim) throw std::invalid_argument("dimension mismatch");
    }
    if (dim == 0) return 0;

    // Greedy affinely independent seed simplex, scanning in input order.
    std::vector<std::size_t> seed{0};
    for (std::size_t q = 1; q < points.size() && seed.size() < dim + 1; ++q) {
        std::vector<std::vector<Int>> e;
        for (std::size_t k = 1; k < seed.size(); ++k) {
            std::vector<Int> row(dim);
            for (std::size_t j = 0; j < dim; ++j)
                row[j] = points[seed[k]][j] - points[seed[0]][j];
            e.push_back(std::move(row));
        }
        std::vector<Int> row(dim);
        for (std::size_t j = 0; j < dim; ++j) row[j] = points[q][j] - points[seed[0]][j];
        e.push_back(std::move(row));
        const std::size_t nrows = e.size();
        IntegerMatrix em(nrows, dim, std::move(e));
        if (rational_rank(em) == seed.size()) seed.push_back(q);
    }
    if (seed.size() < dim + 1) return 0;  // lower-dimensional hull

    Int total = simplex_volume(points, std::vector<std::size_t>(seed.begin() + 1, seed.end()),
                               points[seed[0]]);

    // Scaled interior reference point: sum of the seed vertices.
    std::vector<Int> ref(dim, 0);
    for (std::size_t v : seed) {
        for (std::size_t j = 0; j < dim; ++j) ref[j] += points[v][j];
    }
    const Int ref_scale = dim + 1;

    auto make_facet = [&](std::vector<std::size_t> verts) {
        std::sort(verts.begin(), verts.end());
        Facet f;
        f.normal = facet_normal(points, verts);
        f.offset = dot(f.normal, points[verts[0]]);
        const Int side = dot(f.normal, ref) - ref_scale * f.offset;
        if (side == 0) throw std::logic_error("interior reference on facet");
        if (side > 0) {
            for (auto& v : f.normal) v = -v;
            f.offset = -f.offset;
        }
        f.verts = std::move(verts);
        return f;
    };

    std::vector<Facet> facets;
    for (std::size_t skip = 0; skip < seed.size(); ++skip) {
        std::vector<std::size_t> verts;
        for (std::size_t k = 0; k < seed.size(); ++k) {
            if (k != skip) verts.push_back(seed[k]);
        }
        facets.push_back(make_facet(std::move(verts)));
    }

    std::vector<bool> used(points.size(), false);
    for (std::size_t v : seed) used[v] = true;

    for (std::size_t q = 0; q < points.size(); ++q) {
        if (used[q]) continue;
        const std::vector<Int>& p = points[q];
        std::vector<std::size_t> visible;
        for (std::size_t fi = 0; fi < facets.size(); ++fi) {
            if (!facets[fi].alive) continue;
            if (dot(facets[fi].normal, p) > facets[fi].offset) visible.push_back(fi);
        }
        if (visible.empty()) continue;  // inside or on the boundary

        std::map<std::vector<std::size_t>, int> ridges;
        for (std::size_t fi : visible) {
            Facet& f = facets[fi];
            total += simplex_volume(points, f.verts, p);
            for (std::size_t skip = 0; skip < f.verts.size(); ++skip) {
                std::vector<std::size_t> ridge;
                for (std::size_t k = 0; k < f.verts.size(); ++k) {
                    if (k != skip) ridge.push_back(f.verts[k]);
                }
                ++ridges[ridge];
            }
            f.alive = false;
        }
        for (const auto& [ridge, count] : ridges) {
            if (count != 1) continue;  // interior to the visible region
            std::vector<std::size_t> verts = ridge;
            verts.push_back(q);
            facets.push_back(make_facet(std::move(verts)));
        }
        // Compact occasionally so dead facets do not pile up.
        if (facets.size() > 64 && facets.size() / 2 >
            static_cast<std::size_t>(
                std::count_if(facets.begin(), facets.end(),
                              [](const Facet& f) { return f.alive; }))) {
            std::vector<Facet> live;
            live.reserve(facets.size() / 2);
            for (auto& f : facets) {
                if (f.alive) live.push_back(std::move(f));
            }
            facets = std::move(live);
        }
    }
    return total;
}

ConfigPolytope ConfigPolytope::from_configuration(const IntegerMatrix& a,
                                                  bool with_volume) {
    ConfigPolytope p;
    p.ambient_dim = a.rows();
    p.generators.push_back(std::vector<Int>(a.rows(), 0));
    for (std::size_t j = 0; j < a.cols(); ++j) p.generators.push_back(a.column(j));
    if (with_volume) p.cached_volume_dfact = volume_dfact(p.generators, p.ambient_dim);
    return p;
}

Int volume_dfact(const ConfigPolytope& p) {
    if (p.cached_volume_dfact) return *p.cached_volume_dfact;
    return volume_dfact(p.generators, p.ambient_dim);
}

Int normalized_volume(const IntegerMatrix& a) {
    const Int idx = lattice_index(a);  // throws on rank-deficient input
    const Int vd = volume_dfact(ConfigPolytope::from_configuration(a, true));
    if (vd <= 0 || vd % idx != 0) {
        throw std::logic_error("normalized volume not a positive integer");
    }
    return vd / idx;
}

bool contains_point(const ConfigPolytope& p, const std::vector<Rational>& point) {
    if (point.size() != p.ambient_dim) throw std::invalid_argument("dimension mismatch");
    const std::size_t m = p.generators.size();
    std::vector<std::vector<Rational>> lhs(p.ambient_dim + 1, std::vector<Rational>(m));
    std::vector<Rational> rhs(p.ambient_dim + 1);
    for (std::size_t i = 0; i < p.ambient_dim; ++i) {
        for (std::size_t g = 0; g < m; ++g) lhs[i][g] = Rational(p.generators[g][i]);
        rhs[i] = point[i];
    }
    for (std::size_t g = 0; g < m; ++g) lhs[p.ambient_dim][g] = 1;
    rhs[p.ambient_dim] = 1;
    return feasible_point(lhs, rhs).has_value();
}

bool polytopes_equal(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("dimension mismatch");
    const ConfigPolytope pa = ConfigPolytope::from_configuration(a);
    const ConfigPolytope pb = ConfigPolytope::from_configuration(b);
    auto as_rational = [](const std::vector<Int>& v) {
        std::vector<Rational> r(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
        return r;
    };
    for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!contains_point(pa, as_rational(b.column(j)))) return false;
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (!contains_point(pb, as_rational(a.column(j)))) return false;
    }
    return true;
}

}  // namespace hgfam
