#pragma once

// Moment polytopes, corner frames and the vertex conditions for Sasaki-Einstein twins.

#include "twins/exactnum/algebraic.hpp"
#include "twins/exactnum/matrix.hpp"
#include "twins/exactnum/mpoly.hpp"
#include "twins/exactnum/surd.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace twins {

using Point = std::vector<Rational>;

// l(x) = constant + <linear, x>.
struct AffineLabel {
    Rational constant;
    std::vector<Rational> linear;

    Rational operator()(const Point& p) const;
    // Same hyperplane and side, rescaled to a primitive integer vector.
    AffineLabel primitive() const;
    friend bool operator==(const AffineLabel&, const AffineLabel&) = default;
};

struct MomentPolytope {
    int dimension = 0;
    std::vector<Point> vertices;
    std::vector<AffineLabel> labels;  // may be empty
    std::string lattice;              // free-form note
};

// Text format, one record per line, '#' starts a comment:
//   dimension k
//   vertex x1 ... xk
//   label c a1 ... ak        (l = c + a.x)
//   lattice free text
MomentPolytope parse_polytope(std::istream& in);
MomentPolytope load_polytope(const std::string& path);
std::string format_polytope(const MomentPolytope& p);

// Supporting hyperplanes spanned by vertices, primitive and inward oriented.
std::vector<AffineLabel> facet_labels(const MomentPolytope& p);

// Throws std::invalid_argument when a vertex is not extreme or the labels do not cut out the hull.
void validate_polytope(const MomentPolytope& p);

// True when the segment between vertices i and j is an edge.
bool is_edge(const MomentPolytope& p, size_t i, size_t j);

struct CornerFrame {
    std::vector<size_t> base;  // vertex indices p0, ..., pk
    friend bool operator==(const CornerFrame&, const CornerFrame&) = default;
};

bool is_corner(const MomentPolytope& p, const CornerFrame& f);
std::vector<CornerFrame> all_corners(const MomentPolytope& p);
// Lexicographically smallest corner by vertex index.
CornerFrame default_corner(const MomentPolytope& p);

// (alpha_0, ..., alpha_k) with sum alpha_i p_i = v and sum alpha_i = 1.
std::vector<Rational> barycentric_coords(const MomentPolytope& p, const CornerFrame& f, const Point& v);

namespace detail {
// alpha * v for scalars and for polynomial unknowns.
template <class K>
K times(const Rational& alpha, const K& v) {
    if constexpr (requires { v.scaled(alpha); })
        return v.scaled(alpha);
    else
        return K(alpha) * v;
}
}  // namespace detail

// sum_{i>=1} alpha_i (w_i - w_0)^2 - (sum_{i>=1} alpha_i (w_i - w_0))^2.
template <class K>
K vertex_twin_residual(const std::vector<Rational>& alpha, const std::vector<K>& w) {
    if (alpha.size() != w.size()) throw std::invalid_argument("alpha and w differ in length");
    K sq = w[0] - w[0], lin = sq;
    for (size_t i = 1; i < alpha.size(); ++i) {
        K d = w[i] - w[0];
        sq += detail::times(alpha[i], d * d);
        lin += detail::times(alpha[i], d);
    }
    return sq - lin * lin;
}

// sum alpha_i w_i^2 - (sum alpha_i w_i)^2, the form before w_0 is eliminated.
template <class K>
K vertex_twin_residual_homogeneous(const std::vector<Rational>& alpha, const std::vector<K>& w) {
    if (alpha.size() != w.size()) throw std::invalid_argument("alpha and w differ in length");
    K sq = w[0] - w[0], lin = sq;
    for (size_t i = 0; i < alpha.size(); ++i) {
        sq += detail::times(alpha[i], w[i] * w[i]);
        lin += detail::times(alpha[i], w[i]);
    }
    return sq - lin * lin;
}

// One quadratic per non-base vertex in d_i = w_i - w_0, i = 1..k.
struct TwinVertexSystem {
    CornerFrame frame;
    std::vector<size_t> vertex;                // index of the vertex behind each equation
    std::vector<std::vector<Rational>> alpha;  // its barycentric coordinates
    std::vector<MPoly<Rational>> equations;
};

TwinVertexSystem build_twin_system(const MomentPolytope& p, const CornerFrame& f);

enum class TwinSolutionKind { FullSpace, OnlyDiagonal, UnionOfLines };

// Line (w0, w1, w2) = (1, 1 + t d1, 1 + t d2); f > 0 on P exactly for t in (t_lo, t_hi).
struct TwinLine {
    QuadraticSurd d1, d2;
    std::optional<QuadraticSurd> t_lo, t_hi;  // empty means unbounded
};

struct TwinSolution2d {
    TwinSolutionKind kind = TwinSolutionKind::OnlyDiagonal;
    std::vector<TwinLine> lines;
};

// Exact classification for k = 2. Every equation is a binary quadratic form, so
// the solution set is a union of lines through the diagonal.
TwinSolution2d solve_twin_system_2d(const TwinVertexSystem& sys);

const char* to_string(TwinSolutionKind k);

// Standard simplex with labels l_i = 1 + x_i and l_0 = 1 - sum x_i.
MomentPolytope simplex_polytope(int n);

struct SimplexModel {
    int n = 0;
    std::vector<MPoly<Rational>> labels;           // l_0, ..., l_n
    std::vector<std::vector<MPoly<Rational>>> H;   // H_ij = 2 delta_ij l_i - 2 l_i l_j/(n + 1)
    std::vector<MPoly<Rational>> laplacian_x;     // Delta x_j = -sum_i d_i H_ij
    std::vector<Rational> barycenter;              // p_j from Delta x_j = 2(x_j - p_j)
    bool boundary_ok = false;                      // H(u_k, .) = 0 on F_k for every facet
};

SimplexModel simplex_model(int n);

// Delta h = -sum_ij d_i (H_ij d_j h) and |dh|^2 = sum_ij H_ij d_i h d_j h.
MPoly<Rational> simplex_laplacian(const SimplexModel& m, const MPoly<Rational>& h);
MPoly<Rational> simplex_gradient_norm(const SimplexModel& m, const MPoly<Rational>& h);

struct SimplexTwinCheck {
    bool is_affine = false;
    MPoly<Rational> expression;  // f^2 Scal - 2(n+1) f Delta f - (n+1)(n+2) |df|^2
    Rational constant;
    std::vector<Rational> linear;
};

// f = lambda + <v, x>; throws std::domain_error unless f > 0 at every vertex.
SimplexTwinCheck simplex_twin_check(int n, const Rational& lambda, const std::vector<Rational>& v);

struct RayVerdict {
    std::vector<QuadraticSurd> quadric;  // coefficients on x_i x_j, i <= j, in that order
    bool quadric_found = false;
    bool on_quadric = false;
    int max_on_line = 0;                 // most distinct rays on one projective line
    bool ok = false;
};

// Projective harness for cscS rays: at most two per line and all on one quadric.
RayVerdict cscs_line_property(const std::vector<std::vector<QuadraticSurd>>& rays);

}  // namespace twins
