#include "doctest.h"
#include "oracle.hpp"

#include "twins/polytope/polytope.hpp"

#include <algorithm>
#include <sstream>

using namespace twins;
using R = Rational;
using S = QuadraticSurd;
using MP = MPoly<R>;

namespace {

MomentPolytope from_vertices(int k, std::vector<Point> v) {
    MomentPolytope p;
    p.dimension = k;
    p.vertices = std::move(v);
    validate_polytope(p);
    return p;
}

MomentPolytope square() { return from_vertices(2, {{R(-1), R(-1)}, {R(-1), R(1)}, {R(1), R(-1)}, {R(1), R(1)}}); }

MomentPolytope hexagon() {
    return from_vertices(2, {{R(-1), R(0)}, {R(0), R(-1)}, {R(-1), R(1)}, {R(0), R(1)}, {R(1), R(0)}, {R(1), R(-1)}});
}

// Convex lattice polygon from edge vectors sorted by angle.
MomentPolytope random_polygon(oracle::Gen& g) {
    std::vector<std::pair<long, long>> edges;
    while (edges.size() < static_cast<size_t>(g.integer(3, 6))) {
        long a = g.integer(-4, 4), b = g.integer(-4, 4);
        if (a == 0 && b == 0) continue;
        bool parallel = false;
        for (auto [c, d] : edges) parallel = parallel || (a * d - b * c == 0 && a * c + b * d > 0);
        if (!parallel) edges.emplace_back(a, b);
    }
    long sx = 0, sy = 0;
    for (auto [a, b] : edges) sx += a, sy += b;
    if (sx != 0 || sy != 0) {
        bool parallel = false;
        for (auto [c, d] : edges) parallel = parallel || (-sx * d + sy * c == 0 && -sx * c - sy * d > 0);
        if (parallel) return random_polygon(g);
        edges.emplace_back(-sx, -sy);
    }
    auto half = [](std::pair<long, long> e) { return e.second > 0 || (e.second == 0 && e.first > 0) ? 0 : 1; };
    std::sort(edges.begin(), edges.end(), [&](auto u, auto v) {
        if (half(u) != half(v)) return half(u) < half(v);
        return u.first * v.second - u.second * v.first > 0;
    });
    std::vector<Point> verts;
    long x = 0, y = 0;
    for (auto [a, b] : edges) {
        verts.push_back({R(x), R(y)});
        x += a, y += b;
    }
    if (verts.size() < 3) return random_polygon(g);
    return from_vertices(2, verts);
}

MP d1() { return MP::var(2, 0); }
MP d2() { return MP::var(2, 1); }

}  // namespace

TEST_CASE("facets and edges of the square and the hexagon") {
    CHECK(facet_labels(square()).size() == 4);
    CHECK(facet_labels(hexagon()).size() == 6);
    auto h = hexagon();
    CHECK(is_edge(h, 0, 2));
    CHECK(is_edge(h, 0, 1));
    CHECK_FALSE(is_edge(h, 0, 4));
    CHECK_FALSE(is_edge(square(), 0, 3));
    CHECK(default_corner(h).base == std::vector<size_t>{0, 1, 2});
    CHECK(default_corner(square()).base == std::vector<size_t>{0, 1, 2});
}

TEST_CASE("validation rejects non-extreme vertices and wrong labels") {
    CHECK_THROWS_AS(from_vertices(2, {{R(0), R(0)}, {R(2), R(0)}, {R(0), R(2)}, {R(1), R(0)}}), std::invalid_argument);
    CHECK_THROWS_AS(from_vertices(2, {{R(0), R(0)}, {R(2), R(0)}, {R(0), R(2)}, {R(1, 3), R(1, 3)}}),
                    std::invalid_argument);
    MomentPolytope p = square();
    p.labels = {{R(1), {R(1), R(0)}}, {R(1), {R(0), R(1)}}, {R(1), {R(-1), R(0)}}, {R(2), {R(0), R(-1)}}};
    CHECK_THROWS_AS(validate_polytope(p), std::invalid_argument);
    p.labels.back() = {R(2), {R(0), R(-2)}};
    CHECK_NOTHROW(validate_polytope(p));
}

TEST_CASE("barycentric coordinates: worked examples") {
    auto h = hexagon();
    CornerFrame f{{0, 1, 2}};
    CHECK(barycentric_coords(h, f, h.vertices[3]) == std::vector<R>{R(-2), R(1), R(2)});
    CHECK(barycentric_coords(h, f, h.vertices[4]) == std::vector<R>{R(-3), R(2), R(2)});
    CHECK(barycentric_coords(h, f, h.vertices[5]) == std::vector<R>{R(-2), R(2), R(1)});
    CHECK(barycentric_coords(h, f, h.vertices[0]) == std::vector<R>{R(1), R(0), R(0)});
    auto s = square();
    CHECK(barycentric_coords(s, CornerFrame{{0, 1, 2}}, {R(1), R(1)}) == std::vector<R>{R(-1), R(1), R(1)});
    MomentPolytope flat = s;
    CHECK_THROWS_AS(barycentric_coords(flat, CornerFrame{{0, 0, 1}}, {R(1), R(1)}), std::invalid_argument);
}

TEST_CASE("barycentric reconstruction on every vertex and corner") {
    oracle::Gen g(31);
    std::vector<MomentPolytope> polys{square(), hexagon(), simplex_polytope(2), simplex_polytope(3)};
    for (int i = 0; i < 30; ++i) polys.push_back(random_polygon(g));
    for (const auto& p : polys)
        for (const auto& f : all_corners(p))
            for (const auto& v : p.vertices) {
                auto a = barycentric_coords(p, f, v);
                R sum(0);
                Point rebuilt(static_cast<size_t>(p.dimension), R(0));
                for (size_t i = 0; i < a.size(); ++i) {
                    sum += a[i];
                    for (size_t j = 0; j < rebuilt.size(); ++j) rebuilt[j] += a[i] * p.vertices[f.base[i]][j];
                }
                CHECK(sum == R(1));
                CHECK(rebuilt == v);
            }
}

TEST_CASE("vertex residual: worked examples") {
    std::vector<MP> w{MP(2), d1(), d2()};
    CHECK(vertex_twin_residual<MP>({R(-1), R(1), R(1)}, w) == (d1() * d2()).scaled(R(-2)));
    CHECK(vertex_twin_residual<MP>({R(-2), R(1), R(2)}, w) ==
          (d2() * d2()).scaled(R(-2)) - (d2() * d1()).scaled(R(4)));
    CHECK(vertex_twin_residual<R>({R(-2), R(1), R(2)}, {R(5), R(5), R(5)}).is_zero());
}

TEST_CASE("diagonal solves every vertex condition") {
    oracle::Gen g(32);
    for (int i = 0; i < 20; ++i) {
        auto p = random_polygon(g);
        R c = g.in(R(0), R(10));
        for (const auto& f : all_corners(p))
            for (const auto& v : p.vertices) {
                auto a = barycentric_coords(p, f, v);
                CHECK(vertex_twin_residual<R>(a, std::vector<R>(3, c)).is_zero());
            }
    }
}

TEST_CASE("residual with and without w0 eliminated agree") {
    oracle::Gen g(33);
    for (int i = 0; i < 100; ++i) {
        auto p = random_polygon(g);
        auto f = default_corner(p);
        const auto& v = p.vertices[static_cast<size_t>(g.integer(0, static_cast<long>(p.vertices.size()) - 1))];
        auto a = barycentric_coords(p, f, v);
        std::vector<R> w{g.in(R(0), R(5)), g.in(R(0), R(5)), g.in(R(0), R(5))};
        CHECK(vertex_twin_residual(a, w) == vertex_twin_residual_homogeneous(a, w));
    }
}

TEST_CASE("twin systems") {
    auto sq = build_twin_system(square(), CornerFrame{{0, 1, 2}});
    REQUIRE(sq.equations.size() == 1);
    CHECK(sq.equations[0] == (d1() * d2()).scaled(R(-2)));

    auto hx = build_twin_system(hexagon(), CornerFrame{{0, 1, 2}});
    REQUIRE(hx.equations.size() == 3);
    CHECK(hx.vertex == std::vector<size_t>{3, 4, 5});
    // The p4 condition is twice -(d1^2 + d2^2) - 4 d1 d2.
    CHECK(hx.equations[1] == ((d1() * d1() + d2() * d2()).scaled(R(-1)) - (d1() * d2()).scaled(R(4))).scaled(R(2)));

    auto sx = build_twin_system(simplex_polytope(2), default_corner(simplex_polytope(2)));
    CHECK(sx.equations.empty());
}

TEST_CASE("2d classification") {
    auto sq = solve_twin_system_2d(build_twin_system(square(), CornerFrame{{0, 1, 2}}));
    CHECK(sq.kind == TwinSolutionKind::UnionOfLines);
    REQUIRE(sq.lines.size() == 2);
    // One line keeps w2 = w0, the other keeps w1 = w0.
    CHECK(sq.lines[0].d1 == S(1));
    CHECK(sq.lines[0].d2.is_zero());
    CHECK(sq.lines[1].d1.is_zero());
    CHECK(sq.lines[1].d2 == S(1));
    // w = (1, 1 + t, 1) is positive on the square exactly for t > -1.
    REQUIRE(sq.lines[0].t_lo);
    CHECK_FALSE(sq.lines[0].t_hi);
    CHECK(*sq.lines[0].t_lo == S(-1));

    auto hx = solve_twin_system_2d(build_twin_system(hexagon(), CornerFrame{{0, 1, 2}}));
    CHECK(hx.kind == TwinSolutionKind::OnlyDiagonal);
    CHECK(hx.lines.empty());

    auto sx = solve_twin_system_2d(build_twin_system(simplex_polytope(2), default_corner(simplex_polytope(2))));
    CHECK(sx.kind == TwinSolutionKind::FullSpace);

    CHECK_THROWS(solve_twin_system_2d(build_twin_system(simplex_polytope(3), default_corner(simplex_polytope(3)))));
}

TEST_CASE("hexagon has no twin by elimination") {
    auto hx = build_twin_system(hexagon(), CornerFrame{{0, 1, 2}});
    const MP& e3 = hx.equations[0];
    MP e4 = hx.equations[1].scaled(R(1, 2));
    // e4 - e3 = d2^2 - d1^2 = (d2 - d1)(d2 + d1).
    CHECK(e4 - e3 == (d2() - d1()) * (d2() + d1()));
    // Either branch d2 = +-d1 turns e3 into a nonzero multiple of d1^2.
    for (int sgn : {1, -1}) {
        MP on_branch = e3.substitute(1, d1().scaled(R(sgn)));
        CHECK(on_branch.terms().size() == 1);
        CHECK(on_branch.coeff({2, 0}) != R(0));
    }
}

TEST_CASE("classification is independent of the corner") {
    oracle::Gen g(34);
    std::vector<MomentPolytope> polys{square(), hexagon(), simplex_polytope(2)};
    for (int i = 0; i < 15; ++i) polys.push_back(random_polygon(g));
    for (const auto& p : polys) {
        auto corners = all_corners(p);
        REQUIRE_FALSE(corners.empty());
        auto ref = solve_twin_system_2d(build_twin_system(p, corners.front()));
        for (const auto& f : corners) {
            auto other = solve_twin_system_2d(build_twin_system(p, f));
            CHECK(other.kind == ref.kind);
            CHECK(other.lines.size() == ref.lines.size());
        }
    }
}

TEST_CASE("union-of-lines solutions satisfy every vertex condition") {
    oracle::Gen g(35);
    for (int i = 0; i < 40; ++i) {
        auto p = random_polygon(g);
        auto sys = build_twin_system(p, default_corner(p));
        auto sol = solve_twin_system_2d(sys);
        for (const auto& l : sol.lines)
            for (const auto& eq : sys.equations) CHECK(eq.eval(std::vector<S>{l.d1, l.d2}).is_zero());
    }
}

TEST_CASE("polytope files") {
    auto sq = load_polytope(TWINS_TEST_DATA "/square.poly");
    CHECK(sq.vertices.size() == 4);
    CHECK(sq.labels.size() == 4);
    CHECK(sq.lattice == "standard Z^2");
    auto hx = load_polytope(TWINS_TEST_DATA "/hexagon.poly");
    CHECK(hx.vertices == hexagon().vertices);
    auto sx = load_polytope(TWINS_TEST_DATA "/simplex2.poly");
    CHECK(sx.vertices == simplex_polytope(2).vertices);

    std::istringstream round(format_polytope(hx));
    CHECK(parse_polytope(round).vertices == hx.vertices);

    std::istringstream bad1("vertex 1 2\n");
    CHECK_THROWS_AS(parse_polytope(bad1), std::invalid_argument);
    std::istringstream bad2("dimension 2\nvertex 1 x\n");
    CHECK_THROWS_AS(parse_polytope(bad2), std::invalid_argument);
    std::istringstream bad3("dimension 2\nvertex 0 0\nvertex 1 0\nvertex 0 1\nlabel 1 1\n");
    CHECK_THROWS_AS(parse_polytope(bad3), std::invalid_argument);
}

TEST_CASE("simplex model in dimension one") {
    auto m = simplex_model(1);
    MP x = MP::var(1, 0), l1 = MP(1, R(1)) + x;
    CHECK(m.H[0][0] == l1.scaled(R(2)) - l1 * l1);
    CHECK(m.laplacian_x[0] == -(l1.scaled(R(2)) - l1 * l1).derivative(0));
    CHECK(m.laplacian_x[0] == x.scaled(R(2)));
    CHECK(m.barycenter == std::vector<R>{R(0)});
    CHECK(m.boundary_ok);
}

TEST_CASE("simplex coordinates are Laplacian eigenfunctions") {
    for (int n = 1; n <= 4; ++n) {
        auto m = simplex_model(n);
        for (size_t j = 0; j < static_cast<size_t>(n); ++j) {
            MP rest = m.laplacian_x[j] - MP::var(static_cast<size_t>(n), j).scaled(R(2));
            CHECK(rest.is_constant());
            CHECK(m.barycenter[j] == R(0));
        }
        CHECK(m.boundary_ok);
        for (size_t i = 0; i < static_cast<size_t>(n); ++i)
            for (size_t j = 0; j < static_cast<size_t>(n); ++j) CHECK(m.H[i][j] == m.H[j][i]);
    }
    // The barycenter of the vertices matches the constants.
    auto p = simplex_polytope(3);
    Point c(3, R(0));
    for (const auto& v : p.vertices)
        for (size_t j = 0; j < 3; ++j) c[j] += v[j] / 4;
    CHECK(c == Point(3, R(0)));
}

namespace {

// 2n f^2 - 4(n+1) f (f - lambda) + 2(n+2)(f + m - lambda)^2 - 2(n+1)(n+2) sum v_i^2 (1 + x_i), m = sum v_i.
MP closed_form_twin_expression(int n, const R& lambda, const std::vector<R>& v) {
    size_t k = static_cast<size_t>(n);
    MP f(k, lambda), tail(k);
    R m(0);
    for (size_t i = 0; i < k; ++i) {
        f += MP::var(k, i).scaled(v[i]);
        m += v[i];
        tail += (MP(k, R(1)) + MP::var(k, i)).scaled(v[i] * v[i]);
    }
    MP shifted = f + MP(k, m - lambda);
    return (f * f).scaled(R(2 * n)) - (f * (f - MP(k, lambda))).scaled(R(4 * (n + 1))) +
           (shifted * shifted).scaled(R(2 * (n + 2))) - tail.scaled(R(2 * (n + 1) * (n + 2)));
}

}  // namespace

TEST_CASE("simplex twin check") {
    for (int n = 1; n <= 3; ++n) {
        auto one = simplex_twin_check(n, R(1), std::vector<R>(static_cast<size_t>(n), R(0)));
        CHECK(one.is_affine);
        CHECK(one.expression == MP(static_cast<size_t>(n), R(2 * n)));
    }
    auto two = simplex_twin_check(2, R(1), {R(1, 2), R(0)});
    CHECK(two.is_affine);
    CHECK(two.expression == closed_form_twin_expression(2, R(1), {R(1, 2), R(0)}));
    CHECK_THROWS_AS(simplex_twin_check(2, R(1), {R(1), R(0)}), std::domain_error);
}

TEST_CASE("simplex is exhausted by twins") {
    oracle::Gen g(36);
    for (int n = 1; n <= 3; ++n) {
        auto p = simplex_polytope(n);
        int done = 0;
        while (done < 50) {
            std::vector<R> v;
            for (int i = 0; i < n; ++i) v.push_back(g.in(R(-2), R(2), 12));
            R lambda = g.in(R(-3), R(8), 12);
            AffineLabel fl{lambda, v};
            bool positive = std::all_of(p.vertices.begin(), p.vertices.end(), [&](const Point& q) { return fl(q).sign() > 0; });
            if (!positive) continue;
            auto r = simplex_twin_check(n, lambda, v);
            CHECK(r.is_affine);
            CHECK(r.expression == closed_form_twin_expression(n, lambda, v));
            ++done;
        }
    }
}

TEST_CASE("cscS ray harness") {
    S c = S(R(1, 3)) * S::sqrt(R(5));
    auto pair = cscs_line_property({{S(1), c}, {S(1), -c}});
    CHECK(pair.ok);
    CHECK(pair.max_on_line == 2);

    auto single = cscs_line_property({{S(1), S(2), S(3)}});
    CHECK(single.ok);

    auto collinear = cscs_line_property({{S(1), S(0), S(0)}, {S(0), S(1), S(0)}, {S(1), S(1), S(0)}});
    CHECK_FALSE(collinear.ok);
    CHECK(collinear.max_on_line == 3);

    // Five points on x^2 + y^2 = z^2.
    std::vector<std::vector<S>> conic{{S(1), S(0), S(1)}, {S(0), S(1), S(1)}, {S(3), S(4), S(5)},
                                      {S(5), S(12), S(13)}, {S(-1), S(0), S(1)}};
    auto on = cscs_line_property(conic);
    CHECK(on.ok);
    CHECK(on.max_on_line == 2);

    // Six points with no common conic.
    conic.push_back({S(1), S(1), S(1)});
    auto off = cscs_line_property(conic);
    CHECK_FALSE(off.quadric_found);
    CHECK_FALSE(off.ok);

    CHECK_THROWS(cscs_line_property({}));
}
