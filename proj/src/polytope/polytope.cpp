#include "twins/polytope/polytope.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace twins {

namespace {

size_t rank_of(const std::vector<std::vector<Rational>>& rows, size_t cols) {
    if (rows.empty()) return 0;
    Matrix<Rational> m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m.rank();
}

void check_dimension(const MomentPolytope& p, const Point& v) {
    if (static_cast<int>(v.size()) != p.dimension) throw std::invalid_argument("point dimension mismatch");
}

// Indices of the facets through vertex i.
std::vector<size_t> active_facets(const std::vector<AffineLabel>& facets, const Point& v) {
    std::vector<size_t> out;
    for (size_t f = 0; f < facets.size(); ++f)
        if (facets[f](v).is_zero()) out.push_back(f);
    return out;
}

size_t normal_rank(const std::vector<AffineLabel>& facets, const std::vector<size_t>& which, size_t k) {
    std::vector<std::vector<Rational>> rows;
    for (size_t f : which) rows.push_back(facets[f].linear);
    return rank_of(rows, k);
}

}  // namespace

Rational AffineLabel::operator()(const Point& p) const {
    if (p.size() != linear.size()) throw std::invalid_argument("label dimension mismatch");
    Rational v = constant;
    for (size_t i = 0; i < p.size(); ++i) v += linear[i] * p[i];
    return v;
}

AffineLabel AffineLabel::primitive() const {
    mpz_class l = constant.den();
    for (const auto& a : linear) l = lcm(l, a.den());
    mpz_class g = (constant * Rational(l)).num();
    for (const auto& a : linear) g = gcd(g, (a * Rational(l)).num());
    g = abs(g);
    if (g == 0) throw std::invalid_argument("zero label");
    Rational scale = Rational(l) / Rational(g);
    AffineLabel out{constant * scale, {}};
    for (const auto& a : linear) out.linear.push_back(a * scale);
    return out;
}

std::vector<AffineLabel> facet_labels(const MomentPolytope& p) {
    const size_t k = static_cast<size_t>(p.dimension);
    const size_t nv = p.vertices.size();
    if (k < 1 || nv < k + 1) throw std::invalid_argument("polytope needs at least k + 1 vertices");
    std::vector<AffineLabel> out;
    std::vector<size_t> pick(k);
    std::function<void(size_t, size_t)> rec = [&](size_t depth, size_t start) {
        if (depth == k) {
            // Hyperplane c + a.x = 0 through the picked vertices.
            Matrix<Rational> m(k, k + 1);
            for (size_t r = 0; r < k; ++r) {
                m(r, 0) = Rational(1);
                for (size_t j = 0; j < k; ++j) m(r, j + 1) = p.vertices[pick[r]][j];
            }
            auto ns = m.nullspace();
            if (ns.size() != 1) return;
            AffineLabel l{ns[0][0], std::vector<Rational>(ns[0].begin() + 1, ns[0].end())};
            if (std::all_of(l.linear.begin(), l.linear.end(), [](const Rational& a) { return a.is_zero(); })) return;
            int side = 0;
            for (const auto& v : p.vertices) {
                int s = l(v).sign();
                if (s == 0) continue;
                if (side != 0 && s != side) return;
                side = s;
            }
            if (side == 0) throw std::invalid_argument("vertices do not span the ambient dimension");
            if (side < 0) {
                l.constant = -l.constant;
                for (auto& a : l.linear) a = -a;
            }
            l = l.primitive();
            if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
            return;
        }
        for (size_t i = start; i < nv; ++i) {
            pick[depth] = i;
            rec(depth + 1, i + 1);
        }
    };
    rec(0, 0);
    // A supporting hyperplane is a facet when its vertices span a (k-1)-dimensional face.
    std::vector<AffineLabel> facets;
    for (const auto& l : out) {
        std::vector<std::vector<Rational>> rows;
        for (const auto& v : p.vertices)
            if (l(v).is_zero()) {
                std::vector<Rational> row{Rational(1)};
                row.insert(row.end(), v.begin(), v.end());
                rows.push_back(row);
            }
        if (rank_of(rows, k + 1) == k) facets.push_back(l);
    }
    return facets;
}

void validate_polytope(const MomentPolytope& p) {
    if (p.dimension < 1) throw std::invalid_argument("dimension must be positive");
    for (const auto& v : p.vertices) check_dimension(p, v);
    for (size_t i = 0; i < p.vertices.size(); ++i)
        for (size_t j = i + 1; j < p.vertices.size(); ++j)
            if (p.vertices[i] == p.vertices[j]) throw std::invalid_argument("repeated vertex");
    auto facets = facet_labels(p);
    const size_t k = static_cast<size_t>(p.dimension);
    for (size_t i = 0; i < p.vertices.size(); ++i)
        if (normal_rank(facets, active_facets(facets, p.vertices[i]), k) != k)
            throw std::invalid_argument("vertex " + std::to_string(i) + " is not an extreme point");
    if (p.labels.empty()) return;
    if (p.labels.size() != facets.size()) throw std::invalid_argument("label count differs from facet count");
    for (const auto& l : p.labels) {
        if (l.linear.size() != k) throw std::invalid_argument("label dimension mismatch");
        if (std::find(facets.begin(), facets.end(), l.primitive()) == facets.end())
            throw std::invalid_argument("label does not define a facet of the hull");
    }
}

bool is_edge(const MomentPolytope& p, size_t i, size_t j) {
    if (i == j) return false;
    auto facets = facet_labels(p);
    std::vector<size_t> common;
    for (size_t f : active_facets(facets, p.vertices.at(i)))
        if (facets[f](p.vertices.at(j)).is_zero()) common.push_back(f);
    // The smallest face holding both vertices has dimension k - rank.
    return normal_rank(facets, common, static_cast<size_t>(p.dimension)) + 1 == static_cast<size_t>(p.dimension);
}

bool is_corner(const MomentPolytope& p, const CornerFrame& f) {
    const size_t k = static_cast<size_t>(p.dimension);
    if (f.base.size() != k + 1) return false;
    for (size_t i : f.base)
        if (i >= p.vertices.size()) return false;
    std::vector<std::vector<Rational>> rows;
    for (size_t i = 1; i <= k; ++i) {
        if (!is_edge(p, f.base[0], f.base[i])) return false;
        Point d(k);
        for (size_t j = 0; j < k; ++j) d[j] = p.vertices[f.base[i]][j] - p.vertices[f.base[0]][j];
        rows.push_back(d);
    }
    return rank_of(rows, k) == k;
}

std::vector<CornerFrame> all_corners(const MomentPolytope& p) {
    const size_t k = static_cast<size_t>(p.dimension);
    const size_t nv = p.vertices.size();
    std::vector<CornerFrame> out;
    for (size_t v0 = 0; v0 < nv; ++v0) {
        std::vector<size_t> nbrs;
        for (size_t j = 0; j < nv; ++j)
            if (is_edge(p, v0, j)) nbrs.push_back(j);
        if (nbrs.size() < k) continue;
        std::vector<size_t> pick;
        std::function<void(size_t)> rec = [&](size_t start) {
            if (pick.size() == k) {
                CornerFrame f;
                f.base.push_back(v0);
                f.base.insert(f.base.end(), pick.begin(), pick.end());
                if (is_corner(p, f)) out.push_back(f);
                return;
            }
            for (size_t i = start; i < nbrs.size(); ++i) {
                pick.push_back(nbrs[i]);
                rec(i + 1);
                pick.pop_back();
            }
        };
        rec(0);
    }
    std::sort(out.begin(), out.end(), [](const CornerFrame& a, const CornerFrame& b) { return a.base < b.base; });
    return out;
}

CornerFrame default_corner(const MomentPolytope& p) {
    auto all = all_corners(p);
    if (all.empty()) throw std::invalid_argument("polytope has no corner");
    return all.front();
}

std::vector<Rational> barycentric_coords(const MomentPolytope& p, const CornerFrame& f, const Point& v) {
    check_dimension(p, v);
    const size_t k = static_cast<size_t>(p.dimension);
    if (f.base.size() != k + 1) throw std::invalid_argument("frame needs k + 1 vertices");
    Matrix<Rational> m(k + 1, k + 1);
    std::vector<Rational> rhs(k + 1);
    for (size_t i = 0; i <= k; ++i) {
        const Point& b = p.vertices.at(f.base[i]);
        for (size_t r = 0; r < k; ++r) m(r, i) = b[r];
        m(k, i) = Rational(1);
    }
    for (size_t r = 0; r < k; ++r) rhs[r] = v[r];
    rhs[k] = Rational(1);
    try {
        return m.solve(rhs);
    } catch (const SingularMatrix&) {
        throw std::invalid_argument("degenerate corner frame");
    }
}

TwinVertexSystem build_twin_system(const MomentPolytope& p, const CornerFrame& f) {
    const size_t k = static_cast<size_t>(p.dimension);
    TwinVertexSystem sys;
    sys.frame = f;
    std::vector<MPoly<Rational>> w{MPoly<Rational>(k)};  // d_0 = 0
    for (size_t i = 0; i < k; ++i) w.push_back(MPoly<Rational>::var(k, i));
    for (size_t v = 0; v < p.vertices.size(); ++v) {
        if (std::find(f.base.begin(), f.base.end(), v) != f.base.end()) continue;
        auto alpha = barycentric_coords(p, f, p.vertices[v]);
        MPoly<Rational> sq(k), lin(k);
        for (size_t i = 1; i <= k; ++i) {
            sq += (w[i] * w[i]).scaled(alpha[i]);
            lin += w[i].scaled(alpha[i]);
        }
        sys.vertex.push_back(v);
        sys.alpha.push_back(alpha);
        sys.equations.push_back(sq - lin * lin);
    }
    return sys;
}

const char* to_string(TwinSolutionKind k) {
    switch (k) {
        case TwinSolutionKind::FullSpace: return "full-space";
        case TwinSolutionKind::OnlyDiagonal: return "only-diagonal";
        case TwinSolutionKind::UnionOfLines: return "union-of-lines";
    }
    return "?";
}

TwinSolution2d solve_twin_system_2d(const TwinVertexSystem& sys) {
    if (sys.frame.base.size() != 3) throw std::invalid_argument("only two-dimensional systems are classified");
    using Dir = std::pair<QuadraticSurd, QuadraticSurd>;
    std::optional<std::vector<Dir>> dirs;  // empty optional: every direction
    for (const auto& eq : sys.equations) {
        if (eq.is_zero()) continue;
        if (eq.total_degree() != 2 || eq.terms().size() > 3 || eq.degree_in(0) > 2 || eq.degree_in(1) > 2)
            throw std::logic_error("vertex equation is not a binary quadratic form");
        Rational a = eq.coeff({2, 0}), b = eq.coeff({1, 1}), c = eq.coeff({0, 2});
        std::vector<Dir> here;
        // Directions (1, r) with a + b r + c r^2 = 0, plus (0, 1) when c = 0.
        RPoly q{a, b, c};
        if (q.degree() >= 1)
            for (const auto& r : real_quadratic_roots(q)) here.emplace_back(QuadraticSurd(1), r);
        if (c.is_zero()) here.emplace_back(QuadraticSurd(0), QuadraticSurd(1));
        if (!dirs) {
            dirs = here;
            continue;
        }
        std::vector<Dir> keep;
        for (const auto& d : *dirs)
            if (std::find(here.begin(), here.end(), d) != here.end()) keep.push_back(d);
        dirs = keep;
    }
    TwinSolution2d out;
    if (!dirs) {
        out.kind = TwinSolutionKind::FullSpace;
        return out;
    }
    if (dirs->empty()) return out;
    out.kind = TwinSolutionKind::UnionOfLines;
    // Slopes of f along the line at every vertex: 0 at p0, d1 at p1, d2 at p2, alpha.d elsewhere.
    for (const auto& [d1, d2] : *dirs) {
        TwinLine line{d1, d2, std::nullopt, std::nullopt};
        std::vector<QuadraticSurd> slopes{d1, d2};
        for (const auto& al : sys.alpha) slopes.push_back(QuadraticSurd(al[1]) * d1 + QuadraticSurd(al[2]) * d2);
        for (const auto& g : slopes) {
            if (g.is_zero()) continue;
            QuadraticSurd bound = -g.inverse();  // 1 + t g > 0
            if (g.sign() > 0) {
                if (!line.t_lo || *line.t_lo < bound) line.t_lo = bound;
            } else {
                if (!line.t_hi || bound < *line.t_hi) line.t_hi = bound;
            }
        }
        out.lines.push_back(line);
    }
    return out;
}

}  // namespace twins
