#include "twins/polytope/polytope.hpp"

namespace twins {

namespace {

using S = QuadraticSurd;

size_t rank_of(const std::vector<const std::vector<S>*>& rows) {
    Matrix<S> m(rows.size(), rows.front()->size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i]->size(); ++j) m(i, j) = (*rows[i])[j];
    return m.rank();
}

}  // namespace

RayVerdict cscs_line_property(const std::vector<std::vector<S>>& rays) {
    if (rays.empty()) throw std::invalid_argument("at least one ray is required");
    const size_t m = rays.front().size();
    for (const auto& r : rays) {
        if (r.size() != m) throw std::invalid_argument("rays differ in length");
        if (rank_of({&r}) == 0) throw std::invalid_argument("zero ray");
    }
    // Distinct points of the projectivized cone.
    std::vector<const std::vector<S>*> pts;
    for (const auto& r : rays) {
        bool seen = false;
        for (const auto* q : pts) seen = seen || rank_of({q, &r}) == 1;
        if (!seen) pts.push_back(&r);
    }

    RayVerdict out;
    out.max_on_line = static_cast<int>(std::min<size_t>(pts.size(), 2));
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            int on = 0;
            for (const auto* c : pts) on += rank_of({pts[i], pts[j], c}) <= 2;
            out.max_on_line = std::max(out.max_on_line, on);
        }

    // Quadrics sum q_ij x_i x_j through every point: null space of the evaluation matrix.
    size_t nmon = m * (m + 1) / 2;
    Matrix<S> ev(pts.size(), nmon);
    for (size_t r = 0; r < pts.size(); ++r) {
        size_t col = 0;
        for (size_t i = 0; i < m; ++i)
            for (size_t j = i; j < m; ++j) ev(r, col++) = (*pts[r])[i] * (*pts[r])[j];
    }
    auto ns = ev.nullspace();
    out.quadric_found = !ns.empty();
    if (out.quadric_found) {
        out.quadric = ns.front();
        out.on_quadric = true;
        for (const auto* p : pts) {
            S v(0);
            size_t col = 0;
            for (size_t i = 0; i < m; ++i)
                for (size_t j = i; j < m; ++j) v += out.quadric[col++] * (*p)[i] * (*p)[j];
            out.on_quadric = out.on_quadric && v.is_zero();
        }
    }
    out.ok = out.quadric_found && out.on_quadric && out.max_on_line <= 2;
    return out;
}

}  // namespace twins
