#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>

using twins::cli::Options;
using twins::cli::Report;

namespace {

using Handler = std::function<Report(const Options&)>;

struct Setup {
    Options opt;
    std::string format = "csv";
    std::string out;
    bool timing = false;
    Handler handler;
};

CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& help, Setup& st, Handler h) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->add_option("--format", st.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--digits", st.opt.digits, "fractional digits for interval midpoints")->check(CLI::Range(1, 60));
    sub->add_option("--out", st.out, "write the report to a file");
    sub->add_flag("--timing", st.timing, "append wall time (breaks byte-identical output)");
    sub->callback([&st, h] { st.handler = h; });
    return sub;
}

void surface_flags(CLI::App* sub, Options& o) {
    sub->add_option("--s", o.s, "half the base scalar curvature, s <= 2");
    sub->add_option("--genus", o.genus, "genus of the base curve");
    sub->add_option("--n", o.n, "twist of the bundle");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations of weighted extremal Kahler and extremal Sasaki twins"};
    app.name("twins");
    app.require_subcommand(1);
    Setup st;
    Options& o = st.opt;

    auto* hz = app.add_subcommand("hirzebruch", "admissible metrics on Hirzebruch and ruled surfaces");
    hz->require_subcommand(1);
    auto* ht = leaf(hz, "twin", "twin b of a potential parameter a", st, twins::cli::hirzebruch_twin);
    surface_flags(ht, o);
    ht->add_option("--x", o.x, "Kahler class parameter in (0, 1)")->required();
    ht->add_option("--a", o.a, "potential parameter in (-1, 1)")->required();
    for (auto [name, help, h] : {std::tuple{"conic", "twin conic and its determinant", twins::cli::hirzebruch_conic},
                                 std::tuple{"em", "Einstein-Maxwell potentials", twins::cli::hirzebruch_em},
                                 std::tuple{"cscs", "cscS potential and its twin", twins::cli::hirzebruch_cscs}}) {
        auto* sub = leaf(hz, name, help, st, h);
        surface_flags(sub, o);
        sub->add_option("--x", o.x, "Kahler class parameter in (0, 1)")->required();
    }
    auto* hs = leaf(hz, "scan", "twin pairs along a range of classes", st, twins::cli::hirzebruch_scan);
    surface_flags(hs, o);
    hs->add_option("--range", o.range, "x range lo:hi inside (0, 1)")->required();
    hs->add_option("--step", o.step, "x step")->required();
    hs->add_option("--a-grid", o.a_grid, "sample a = k/N for |k| < N");

    auto* gn = app.add_subcommand("genus", "ruled surfaces over higher genus curves");
    gn->require_subcommand(1);
    auto* gt = leaf(gn, "twin", "twin of a = x", st, twins::cli::genus_twin_cmd);
    surface_flags(gt, o);
    gt->add_option("--x", o.x, "Kahler class parameter in (0, 1)")->required();
    auto* gj = leaf(gn, "join", "join constructions and their twins", st, twins::cli::genus_join);
    gj->add_option("--genus", o.genus, "genus of the base curve");
    gj->add_option("--w", o.w, "weights w1:w2");
    gj->add_option("--l1", o.l1, "join parameter l1");

    auto* pt = app.add_subcommand("polytope", "vertex conditions on moment polytopes");
    pt->require_subcommand(1);
    leaf(pt, "check", "barycentric table and twin classification", st, twins::cli::polytope_check)
        ->add_option("path", o.path, "polytope file")
        ->required();

    auto* qd = app.add_subcommand("quad", "toric ansatze on quadrilaterals");
    qd->require_subcommand(1);
    leaf(qd, "fit", "fit or load an ansatz and report its profiles", st, twins::cli::quad_fit)
        ->add_option("path", o.path, "ansatz file")
        ->required();
    leaf(qd, "twin", "twin potential of an extremal ansatz", st, twins::cli::quad_twin)
        ->add_option("path", o.path, "ansatz file")
        ->required();
    auto* qc = leaf(qd, "cscs-family", "explicit cscS twins on Calabi trapezoids", st, twins::cli::quad_cscs_family);
    qc->add_option("--alpha", o.alpha, "alpha1:alpha2")->required();
    qc->add_option("--beta", o.beta, "beta1:beta2, default 0:1");
    qc->add_option("--c", o.c, "label scale C > 0")->required();
    auto* ql = leaf(qd, "lebrun", "product metrics on CP1 x CP1", st, twins::cli::quad_lebrun);
    ql->add_option("--alpha", o.alpha, "alpha > 0")->required();
    ql->add_option("--beta", o.beta, "beta > 0")->required();
    ql->add_option("--c", o.c, "potential slope; omit to list the cscS values");

    leaf(&app, "verify", "run the reproduction checks", st, twins::cli::verify_cmd)
        ->add_option("selector", o.selector, "all, s3..s6, hirzebruch, genus, polytope, quadrilateral or 1..14");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    std::string echo = "twins";
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) != "--timing") echo += std::string(" ") + argv[i];

    Report r;
    try {
        auto t0 = std::chrono::steady_clock::now();
        r = st.handler(o);
        if (st.timing) r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    r.command = echo;

    auto fmt = st.format == "json" ? twins::cli::Format::Json : twins::cli::Format::Csv;
    if (st.out.empty()) {
        twins::cli::write_report(std::cout, r, fmt);
    } else {
        std::ofstream f(st.out);
        if (!f) {
            std::cerr << "error: cannot write " << st.out << "\n";
            return 2;
        }
        twins::cli::write_report(f, r, fmt);
    }
    return r.failed ? 1 : 0;
}
