#include "report.hpp"

#include <json.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace twins::cli {

void Report::add_row(std::vector<std::string> row) {
    if (row.size() != columns.size()) throw std::logic_error("row width differs from the header");
    rows.push_back(std::move(row));
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void write_csv(std::ostream& os, const Report& r) {
    os << "# command: " << r.command << "\n";
    for (size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << csv_escape(r.columns[i]);
    os << "\n";
    for (const auto& row : r.rows) {
        for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(row[i]);
        os << "\n";
    }
    for (const auto& v : r.verdicts) os << "# verdict: " << v << "\n";
    for (const auto& n : r.notes) os << "# note: " << n << "\n";
    os << "# status: " << (r.failed ? "failed" : "ok") << "\n";
    if (r.elapsed_ms) os << "# timing_ms: " << *r.elapsed_ms << "\n";
}

void write_json(std::ostream& os, const Report& r) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["command"] = r.command;
    j["columns"] = r.columns;
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows) {
        ordered_json o = ordered_json::object();
        for (size_t i = 0; i < row.size(); ++i) o[r.columns[i]] = row[i];
        rows.push_back(std::move(o));
    }
    j["rows"] = std::move(rows);
    j["verdicts"] = r.verdicts;
    j["notes"] = r.notes;
    j["status"] = r.failed ? "failed" : "ok";
    if (r.elapsed_ms) j["timing_ms"] = *r.elapsed_ms;
    os << j.dump(2) << "\n";
}

}  // namespace

void write_report(std::ostream& os, const Report& r, Format f) {
    if (f == Format::Json)
        write_json(os, r);
    else
        write_csv(os, r);
}

std::string cell(const Rational& v) { return tagged_exact(v); }

std::string cell(const QuadraticSurd& v, int digits) {
    if (v.is_rational()) return tagged_exact(v.a());
    return tagged_interval(v.enclose(certification_width()), digits);
}

std::string cell(const RealAlgebraic& v, int digits) { return v.tagged(digits); }

std::string cell(bool v) { return v ? "true" : "false"; }

std::string closed_cell(const QuadraticSurd& v) { return "exact:" + v.str(); }

}  // namespace twins::cli
