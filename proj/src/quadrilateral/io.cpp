#include "twins/quadrilateral/quadrilateral.hpp"

#include <fstream>
#include <sstream>

namespace twins {

AnsatzSpec parse_ansatz(std::istream& in) {
    AnsatzSpec spec;
    bool have_type = false, have_alpha = false, have_beta = false, have_labels = false;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("ansatz line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "type") {
            std::string t;
            ls >> t;
            if (t == "calabi") spec.kind = AnsatzKind::Calabi;
            else if (t == "orthotoric") spec.kind = AnsatzKind::Orthotoric;
            else if (t == "product") spec.kind = AnsatzKind::Product;
            else fail("unknown type '" + t + "'");
            have_type = true;
            continue;
        }
        std::vector<Rational> nums;
        std::string tok;
        while (ls >> tok) {
            try {
                nums.push_back(Rational::parse(tok));
            } catch (const std::exception&) {
                fail("bad number '" + tok + "'");
            }
        }
        auto need = [&](size_t n) {
            if (nums.size() != n) fail(key + " needs " + std::to_string(n) + " values");
        };
        auto& p = spec.params;
        if (key == "alpha") {
            need(2);
            p.alpha1 = nums[0];
            p.alpha2 = nums[1];
            have_alpha = true;
        } else if (key == "beta") {
            need(2);
            p.beta1 = nums[0];
            p.beta2 = nums[1];
            have_beta = true;
        } else if (key == "labels") {
            need(4);
            p.c_alpha1 = nums[0];
            p.c_alpha2 = nums[1];
            p.c_beta1 = nums[2];
            p.c_beta2 = nums[3];
            for (const auto& c : nums)
                if (c.is_zero()) fail("labels must be nonzero");
            have_labels = true;
        } else if (key == "degree") {
            need(1);
            if (nums[0] != 3 && nums[0] != 4) fail("degree must be 3 or 4");
            spec.degree = static_cast<int>(nums[0].num().get_si());
        } else if (key == "A" || key == "B") {
            if (nums.empty()) fail(key + " needs coefficients");
            (key == "A" ? spec.A : spec.B) = RPoly(nums);
        } else {
            fail("unknown key '" + key + "'");
        }
    }
    if (!have_type) throw std::invalid_argument("ansatz has no type record");
    if (!have_alpha || !have_beta || !have_labels) throw std::invalid_argument("ansatz needs alpha, beta and labels records");
    if (spec.A.has_value() != spec.B.has_value()) throw std::invalid_argument("explicit profiles need both A and B");
    return spec;
}

AnsatzSpec load_ansatz(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path);
    return parse_ansatz(f);
}

std::optional<ToricAnsatz<Rational>> build_ansatz(const AnsatzSpec& spec) {
    if (spec.A) return explicit_ansatz(spec.kind, spec.params, *spec.A, *spec.B);
    switch (spec.kind) {
        case AnsatzKind::Calabi: return calabi_fit(spec.params);
        case AnsatzKind::Orthotoric: return ortho_fit(spec.params);
        case AnsatzKind::Product: return product_fit(spec.params, spec.degree).ansatz;
    }
    return std::nullopt;
}

}  // namespace twins
