#include "commands.hpp"

#include "twins/hirzebruch/twins.hpp"
#include "twins/polytope/polytope.hpp"
#include "twins/quadrilateral/quadrilateral.hpp"
#include "twins/verify/verify.hpp"

#include <future>
#include <stdexcept>

namespace twins::cli {

namespace {

using R = Rational;
using S = QuadraticSurd;

constexpr size_t kMaxScanRows = 10000;

R parse_num(const std::string& text, const char* flag) {
    if (text.empty()) throw std::invalid_argument(std::string("missing ") + flag);
    try {
        return R::parse(text);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad value for ") + flag + ": '" + text + "'");
    }
}

std::pair<R, R> parse_pair(const std::string& text, const char* flag) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument(std::string(flag) + " needs the form lo:hi");
    return {parse_num(text.substr(0, colon), flag), parse_num(text.substr(colon + 1), flag)};
}

// --s wins; otherwise s = 2(1 - g)/n from --genus (default 0) and --n.
R surface_s(const Options& o) {
    if (!o.s.empty()) return SurfaceClass::from_s(parse_num(o.s, "--s")).s;
    if (!o.n) throw std::invalid_argument("need --s or --n");
    return SurfaceClass::from_topology(o.genus.value_or(0), *o.n).s;
}

R unit_x(const Options& o) {
    R x = parse_num(o.x, "--x");
    if (x.sign() <= 0 || x >= 1) throw std::invalid_argument("--x must lie in (0, 1)");
    return x;
}

bool is_em(const std::vector<RealAlgebraic>& em, const RealAlgebraic& v) {
    for (const auto& r : em)
        if (r == v) return true;
    return false;
}

const std::vector<std::string> kPairColumns{"s", "x", "kind", "a", "b", "bifurcation", "em_a", "em_b", "cscs"};

// One certified row per twin pair; the residual is checked again right before the row is emitted.
struct ScanRow {
    std::vector<std::string> cells;
    bool certified = true;
};

std::vector<ScanRow> scan_x(const R& s, const R& x, int grid, int digits) {
    std::vector<ScanRow> out;
    auto em = em_roots(s, x);
    auto root = cscs_root(s, x).c;
    auto t = twin_of_algebraic(s, x, root);
    if (t) {
        out.push_back({{cell(s), cell(x), "cscs", cell(root, digits), cell(t->b, digits), cell(t->bifurcation),
                        cell(is_em(em, root)), cell(is_em(em, t->b)), cell(true)},
                       t->residual.within(certification_width())});
    } else {
        out.push_back({{cell(s), cell(x), "cscs", cell(root, digits), "none", cell(false), cell(is_em(em, root)), "none",
                        cell(true)},
                       true});
    }
    for (int k = -grid + 1; k < grid; ++k) {
        R a(k, grid);
        auto p = twin_of(s, x, a);
        if (!p) continue;
        bool on_cscs = root.compare(a) == 0 || root.compare(p->b) == 0;
        out.push_back({{cell(s), cell(x), "grid", cell(a), cell(p->b), cell(p->bifurcation), cell(is_em(em, a)),
                        cell(is_em(em, p->b)), cell(on_cscs)},
                       twin_residual(s, x, a, p->b).is_zero()});
    }
    return out;
}

void emit(Report& r, std::vector<ScanRow> rows) {
    for (auto& row : rows) {
        if (!row.certified) {
            r.failed = true;
            r.notes.push_back("row withheld: twin residual not certified at x=" + row.cells[1]);
            continue;
        }
        r.add_row(std::move(row.cells));
    }
}

void quantity(Report& r, const std::string& name, const std::string& value) { r.add_row({name, value}); }

std::string affine_text(const std::array<R, 3>& c) {
    return c[0].str() + " + (" + c[1].str() + ")*mu1 + (" + c[2].str() + ")*mu2";
}

ToricAnsatz<R> load_quad(const Options& o) {
    if (o.path.empty()) throw std::invalid_argument("missing ansatz file");
    auto spec = load_ansatz(o.path);
    auto a = build_ansatz(spec);
    if (!a) throw std::invalid_argument(std::string("no ") + to_string(spec.kind) + " ansatz fits these labels");
    return *a;
}

}  // namespace

Report hirzebruch_twin(const Options& o) {
    R s = surface_s(o), x = unit_x(o), a = parse_num(o.a, "--a");
    require_admissible(x, a);
    Report r;
    r.columns = kPairColumns;
    auto em = em_roots(s, x);
    auto t = twin_of(s, x, a);
    if (!t) {
        r.verdicts.push_back("no twin of a inside (-1, 1)");
        return r;
    }
    auto root = cscs_root(s, x).c;
    emit(r, {{{cell(s), cell(x), "single", cell(a), cell(t->b), cell(t->bifurcation), cell(is_em(em, a)),
               cell(is_em(em, t->b)), cell(root.compare(a) == 0 || root.compare(t->b) == 0)},
              twin_residual(s, x, a, t->b).is_zero()}});
    r.verdicts.push_back(t->bifurcation ? "bifurcation: the twin coincides with a" : "twin pair certified");
    return r;
}

Report hirzebruch_conic(const Options& o) {
    R s = surface_s(o), x = unit_x(o);
    auto c = twin_conic(s, x);
    Report r;
    r.columns = {"quantity", "value"};
    quantity(r, "B", cell(c.coeffs.B));
    quantity(r, "D", cell(c.coeffs.D));
    quantity(r, "F", cell(c.coeffs.F));
    quantity(r, "det_formula", cell(c.det_formula));
    quantity(r, "det_direct", cell(c.det_direct));
    quantity(r, "square_solutions", cell(c.square_solutions));
    for (size_t i = 0; i < c.lines.size(); ++i)
        quantity(r, "line" + std::to_string(i + 1),
                 "(" + c.lines[i].a_coef.str() + ")*a + (" + c.lines[i].b_coef.str() + ")*b + (" + c.lines[i].c0.str() + ") = 0");
    if (c.det_formula != c.det_direct) r.failed = true;
    r.verdicts.push_back(c.kind == ConicKind::NondegenerateHyperbola ? "nondegenerate hyperbola" : "degenerate conic");
    return r;
}

Report hirzebruch_em(const Options& o) {
    R s = surface_s(o), x = unit_x(o);
    Report r;
    r.columns = {"s", "x", "c", "closed_form", "A1"};
    for (const auto& root : em_roots(s, x)) {
        if (!root.closed_form()) throw std::logic_error("EM root without closed form");
        const S& c = *root.closed_form();
        auto [a1, a2] = extremal_affine_coeffs(s, S(x), c);
        if (!a1.is_zero()) r.failed = true;
        r.add_row({cell(s), cell(x), cell(root, o.digits), closed_cell(c), cell(a1, o.digits)});
    }
    if (r.rows.empty()) r.verdicts.push_back("no Einstein-Maxwell potential in (-1, 1)");
    return r;
}

Report hirzebruch_cscs(const Options& o) {
    R s = surface_s(o), x = unit_x(o);
    auto root = cscs_root(s, x);
    Report r;
    r.columns = {"s", "x", "c", "c_closed_form", "b", "b_closed_form", "residual"};
    std::string cf = root.c.closed_form() ? closed_cell(*root.c.closed_form()) : "none";
    auto t = cscs_twin(s, x);
    if (!t) {
        r.add_row({cell(s), cell(x), cell(root.c, o.digits), cf, "none", "none", "none"});
        r.verdicts.push_back("cscS ray has no twin besides itself");
        return r;
    }
    if (!t->residual.within(certification_width())) {
        r.failed = true;
        r.notes.push_back("twin residual not certified");
        return r;
    }
    std::string bf = t->b.closed_form() ? closed_cell(*t->b.closed_form()) : "none";
    r.add_row({cell(s), cell(x), cell(root.c, o.digits), cf, cell(t->b, o.digits), bf, tagged_interval(t->residual, o.digits)});
    r.verdicts.push_back("cscS twin certified");
    return r;
}

Report hirzebruch_scan(const Options& o) {
    R s = surface_s(o);
    auto [lo, hi] = parse_pair(o.range, "--range");
    R step = parse_num(o.step, "--step");
    if (step.sign() <= 0) throw std::invalid_argument("--step must be positive");
    if (o.a_grid < 1) throw std::invalid_argument("--a-grid must be at least 1");
    Report r;
    r.columns = kPairColumns;
    if (lo > hi) return r;
    if (lo.sign() <= 0 || hi >= 1) throw std::invalid_argument("--range must lie in (0, 1)");
    std::vector<R> xs;
    for (R x = lo; x <= hi; x += step) {
        if (xs.size() == kMaxScanRows) throw std::invalid_argument("scan exceeds " + std::to_string(kMaxScanRows) + " x values");
        xs.push_back(x);
    }
    std::vector<std::future<std::vector<ScanRow>>> jobs;
    for (const R& x : xs) jobs.push_back(std::async(std::launch::async, scan_x, s, x, o.a_grid, o.digits));
    for (auto& j : jobs) emit(r, j.get());
    r.notes.push_back("grid a = k/" + std::to_string(o.a_grid) + "; rows without a twin in (-1, 1) are omitted");
    return r;
}

Report genus_twin_cmd(const Options& o) {
    R s = surface_s(o), x = unit_x(o);
    GenusTwin t = twins::genus_twin(s, x);
    Report r;
    r.columns = {"s", "x", "a", "b", "in_range", "b_profile_positive"};
    if (!t.residual.is_zero()) {
        r.failed = true;
        r.notes.push_back("twin residual nonzero");
        return r;
    }
    r.add_row({cell(s), cell(x), cell(t.a), cell(t.b), cell(t.in_range), cell(t.b_profile_positive)});
    r.verdicts.push_back(t.in_range ? "twin inside (-1, 1)" : "twin outside (-1, 1)");
    return r;
}

Report genus_join(const Options& o) {
    int g = o.genus.value_or(0);
    struct Case {
        long w1, w2, l1;
    };
    std::vector<Case> cases;
    if (!o.w.empty()) {
        auto [w1, w2] = parse_pair(o.w, "--w");
        if (!w1.is_integer() || !w2.is_integer()) throw std::invalid_argument("--w needs integer weights");
        cases.push_back({w1.num().get_si(), w2.num().get_si(), o.l1.value_or(1)});
    } else {
        cases = {{11, 9, 1}, {11, 9, 2}, {51, 50, 1}, {51, 50, 3}};
    }
    Report r;
    r.columns = {"genus", "w1", "w2", "l1", "n", "bundle", "x", "s", "b", "in_range"};
    bool even = false, odd = false;
    for (const auto& c : cases) {
        JoinData j = join_params(c.w1, c.w2, c.l1);
        R s = SurfaceClass::from_topology(g, static_cast<int>(j.n)).s;
        GenusTwin t = twins::genus_twin(s, j.x);
        if (!t.residual.is_zero()) {
            r.failed = true;
            continue;
        }
        (j.twisted ? odd : even) = (j.twisted ? odd : even) || t.in_range;
        r.add_row({std::to_string(g), std::to_string(j.w1), std::to_string(j.w2), std::to_string(j.l1), std::to_string(j.n),
                   j.twisted ? "twisted" : "untwisted", cell(j.x), cell(s), cell(t.b), cell(t.in_range)});
    }
    r.verdicts.push_back(std::string("untwisted: ") + (even ? "twin in range" : "none in range"));
    r.verdicts.push_back(std::string("twisted: ") + (odd ? "twin in range" : "none in range"));
    return r;
}

Report polytope_check(const Options& o) {
    if (o.path.empty()) throw std::invalid_argument("missing polytope file");
    MomentPolytope p = load_polytope(o.path);
    validate_polytope(p);
    CornerFrame f = default_corner(p);
    Report r;
    r.columns = {"vertex"};
    for (int i = 1; i <= p.dimension; ++i) r.columns.push_back("x" + std::to_string(i));
    for (int i = 0; i <= p.dimension; ++i) r.columns.push_back("alpha" + std::to_string(i));
    for (size_t v = 0; v < p.vertices.size(); ++v) {
        std::vector<std::string> row{std::to_string(v)};
        for (const R& c : p.vertices[v]) row.push_back(cell(c));
        for (const R& c : barycentric_coords(p, f, p.vertices[v])) row.push_back(cell(c));
        r.add_row(std::move(row));
    }
    std::string frame;
    for (size_t i : f.base) frame += (frame.empty() ? "" : " ") + std::to_string(i);
    r.notes.push_back("corner frame: vertices " + frame);

    auto sys = build_twin_system(p, f);
    std::vector<std::string> names;
    for (int i = 1; i <= p.dimension; ++i) names.push_back("d" + std::to_string(i));
    for (size_t i = 0; i < sys.equations.size(); ++i)
        r.notes.push_back("condition at vertex " + std::to_string(sys.vertex[i]) + ": " + sys.equations[i].str(names) + " = 0");
    if (sys.equations.empty()) {
        r.verdicts.push_back("empty system: full Sasaki cone");
        return r;
    }
    if (p.dimension != 2) {
        r.verdicts.push_back("unsupported: classification is implemented for dimension 2 only");
        return r;
    }
    auto sol = solve_twin_system_2d(sys);
    switch (sol.kind) {
        case TwinSolutionKind::OnlyDiagonal: r.verdicts.push_back("only-diagonal: no twin"); break;
        case TwinSolutionKind::FullSpace: r.verdicts.push_back("full space: every affine potential is a twin"); break;
        case TwinSolutionKind::UnionOfLines:
            for (const auto& l : sol.lines) {
                for (const auto& eq : sys.equations)
                    if (!eq.eval(std::vector<S>{l.d1, l.d2}).is_zero()) r.failed = true;
                std::string lo = l.t_lo ? l.t_lo->str() : "-inf", hi = l.t_hi ? l.t_hi->str() : "+inf";
                r.verdicts.push_back("twin line: w = (1, 1 + t*(" + l.d1.str() + "), 1 + t*(" + l.d2.str() + ")), f > 0 for t in (" +
                                     lo + ", " + hi + ")");
            }
            break;
    }
    return r;
}

Report quad_fit(const Options& o) {
    auto a = load_quad(o);
    Report r;
    r.columns = {"quantity", "value"};
    for (int i = 0; i <= a.A.degree(); ++i) quantity(r, "A[x^" + std::to_string(i) + "]", cell(a.A.coeff(i)));
    for (int i = 0; i <= a.B.degree(); ++i) quantity(r, "B[y^" + std::to_string(i) + "]", cell(a.B.coeff(i)));
    bool exact = boundary_exact(a);
    if (!exact) r.failed = true;
    r.verdicts.push_back(std::string("boundary conditions: ") + (exact ? "exact" : "violated"));
    r.verdicts.push_back(std::string("positive: ") + (a.positive ? (*a.positive ? "yes" : "no") : "undecided"));
    auto m = metric_data(a);
    auto v = affine_in_moments(m.scal, m);
    r.verdicts.push_back(v.is_affine ? "extremal: Scal = " + affine_text(v.coeffs) : "not extremal");
    return r;
}

Report quad_twin(const Options& o) {
    auto a = load_quad(o);
    auto t = find_twin(a);
    Report r;
    r.columns = {"quantity", "value"};
    if (!t) {
        r.verdicts.push_back("no twin: only constant potentials work");
        return r;
    }
    auto m = metric_data(a);
    auto v = affine_in_moments(weighted_scal(m, t->f, 4), m);
    bool ok = v.is_affine && vertex_sign(m, t->f) == 1;
    for (const auto& [name, val] : t->conditions) ok = ok && val.is_zero();
    if (!ok) {
        r.failed = true;
        r.notes.push_back("twin certificate did not re-verify");
        return r;
    }
    quantity(r, "lambda", cell(t->f.lambda));
    quantity(r, "c1", cell(t->f.c1));
    quantity(r, "c2", cell(t->f.c2));
    for (const auto& [name, val] : t->conditions) quantity(r, "condition " + name, cell(val));
    quantity(r, "weighted[1]", cell(v.coeffs[0]));
    quantity(r, "weighted[mu1]", cell(v.coeffs[1]));
    quantity(r, "weighted[mu2]", cell(v.coeffs[2]));
    r.verdicts.push_back("twin: f = " + t->f.lambda.str() + " + (" + t->f.c1.str() + ")*mu1 + (" + t->f.c2.str() + ")*mu2");
    r.notes.push_back("gauge: " + t->gauge);
    return r;
}

Report quad_cscs_family(const Options& o) {
    auto [a1, a2] = parse_pair(o.alpha, "--alpha");
    R C = parse_num(o.c, "--c");
    auto [b1, b2] = o.beta.empty() ? std::pair<R, R>{R(0), R(1)} : parse_pair(o.beta, "--beta");
    auto fam = cscs_twin_family(a1, a2, C, b1, b2);
    Report r;
    r.columns = {"quantity", "value"};
    const auto& p = fam.ansatz.params;
    quantity(r, "C_alpha1", cell(p.c_alpha1));
    quantity(r, "C_alpha2", cell(p.c_alpha2));
    quantity(r, "C_beta1", cell(p.c_beta1));
    quantity(r, "C_beta2", cell(p.c_beta2));
    quantity(r, "Scal", cell(fam.scal));
    quantity(r, "potential lambda", cell(fam.potential.lambda));
    quantity(r, "potential c1", cell(fam.potential.c1));
    if (fam.twin) {
        quantity(r, "twin lambda", cell(fam.twin->f.lambda));
        quantity(r, "twin c1", cell(fam.twin->f.c1));
        quantity(r, "twin c2", cell(fam.twin->f.c2));
    }
    if (!fam.both_cscs) r.failed = true;
    r.verdicts.push_back(fam.both_cscs ? "cscS twins: Scal constant and Scal_{f,4} = Scal f" : "family did not certify");
    return r;
}

Report quad_lebrun(const Options& o) {
    R al = parse_num(o.alpha, "--alpha"), be = parse_num(o.beta, "--beta");
    Report r;
    R rr = al * al + be * be;
    if (!o.c.empty()) {
        R c = parse_num(o.c, "--c");
        auto res = product_lebrun(al, be, c);
        r.columns = {"quantity", "value"};
        quantity(r, "constant", cell(res.constant));
        quantity(r, "slope", cell(res.slope));
        quantity(r, "printed_constant", cell(res.printed_constant));
        quantity(r, "printed_slope", cell(res.printed_slope));
        quantity(r, "symmetric_in_c", cell(res.symmetric_in_c));
        if (!res.matches_printed) r.failed = true;
        r.verdicts.push_back(res.matches_printed ? "Scal_{f,4} matches the printed expression" : "Scal_{f,4} differs from the printed expression");
        return r;
    }
    r.columns = {"alpha", "beta", "c", "c_closed_form", "constant", "slope"};
    for (const S& c : lebrun_cscs_values(al, be)) {
        auto res = product_lebrun(S(al), S(be), c);
        if (!(res.matches_printed && res.constant * c == res.slope * S(rr))) {
            r.failed = true;
            continue;
        }
        r.add_row({cell(al), cell(be), cell(c, o.digits), closed_cell(c), cell(res.constant, o.digits), cell(res.slope, o.digits)});
    }
    r.verdicts.push_back(r.rows.empty() ? "no cscS ray: needs beta > 5 alpha" : "cscS rays f = alpha^2 + beta^2 + c y");
    return r;
}

Report verify_cmd(const Options& o) {
    auto results = verify::run_selected(o.selector);
    Report r;
    r.columns = {"criterion", "section", "title", "result", "checks", "detail"};
    int passed = 0;
    for (const auto& c : results) {
        r.add_row({std::to_string(c.id), c.section, c.title, c.pass ? "pass" : "fail", std::to_string(c.checks), c.detail});
        if (c.pass)
            ++passed;
        else
            r.failed = true;
    }
    r.verdicts.push_back(std::to_string(passed) + " of " + std::to_string(results.size()) + " passed");
    return r;
}

}  // namespace twins::cli
