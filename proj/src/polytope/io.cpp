#include "twins/polytope/polytope.hpp"

#include <fstream>
#include <sstream>

namespace twins {

MomentPolytope parse_polytope(std::istream& in) {
    MomentPolytope p;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("polytope line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "lattice") {
            std::getline(ls >> std::ws, p.lattice);
            continue;
        }
        std::vector<Rational> nums;
        std::string tok;
        while (ls >> tok) {
            try {
                nums.push_back(Rational::parse(tok));
            } catch (const std::exception& e) {
                fail("bad number '" + tok + "'");
            }
        }
        if (key == "dimension") {
            if (nums.size() != 1 || !nums[0].is_integer() || nums[0].sign() <= 0) fail("dimension must be a positive integer");
            p.dimension = static_cast<int>(nums[0].num().get_si());
        } else if (key == "vertex") {
            if (p.dimension == 0) fail("dimension must come first");
            if (nums.size() != static_cast<size_t>(p.dimension)) fail("vertex has the wrong number of coordinates");
            p.vertices.push_back(nums);
        } else if (key == "label") {
            if (p.dimension == 0) fail("dimension must come first");
            if (nums.size() != static_cast<size_t>(p.dimension) + 1) fail("label needs a constant and k coefficients");
            p.labels.push_back({nums[0], std::vector<Rational>(nums.begin() + 1, nums.end())});
        } else {
            fail("unknown key '" + key + "'");
        }
    }
    if (p.dimension == 0) throw std::invalid_argument("polytope has no dimension record");
    validate_polytope(p);
    return p;
}

MomentPolytope load_polytope(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path);
    return parse_polytope(f);
}

std::string format_polytope(const MomentPolytope& p) {
    std::ostringstream os;
    os << "dimension " << p.dimension << "\n";
    for (const auto& v : p.vertices) {
        os << "vertex";
        for (const auto& x : v) os << " " << x;
        os << "\n";
    }
    for (const auto& l : p.labels) {
        os << "label " << l.constant;
        for (const auto& a : l.linear) os << " " << a;
        os << "\n";
    }
    if (!p.lattice.empty()) os << "lattice " << p.lattice << "\n";
    return os.str();
}

}  // namespace twins
