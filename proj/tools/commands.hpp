#pragma once

#include "report.hpp"

#include <optional>
#include <string>

namespace twins::cli {

// Raw option values; parsing into exact numbers happens inside each command.
struct Options {
    std::string s, x, a, c, range, step, alpha, beta, w;
    std::optional<int> genus, n, l1;
    int digits = 15;
    int a_grid = 4;
    std::string path;
    std::string selector = "all";
};

Report hirzebruch_twin(const Options& o);
Report hirzebruch_conic(const Options& o);
Report hirzebruch_em(const Options& o);
Report hirzebruch_cscs(const Options& o);
Report hirzebruch_scan(const Options& o);
Report genus_twin_cmd(const Options& o);
Report genus_join(const Options& o);
Report polytope_check(const Options& o);
Report quad_fit(const Options& o);
Report quad_twin(const Options& o);
Report quad_cscs_family(const Options& o);
Report quad_lebrun(const Options& o);
Report verify_cmd(const Options& o);

}  // namespace twins::cli
