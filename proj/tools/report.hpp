#pragma once

#include "twins/exactnum/algebraic.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace twins::cli {

// Tabular result of one command. Numeric cells carry "exact:" or "interval:" tags.
struct Report {
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> verdicts;
    std::vector<std::string> notes;
    bool failed = false;                  // some row or check did not certify
    std::optional<double> elapsed_ms;     // only with --timing

    void add_row(std::vector<std::string> row);
};

enum class Format { Csv, Json };

void write_report(std::ostream& os, const Report& r, Format f);

// Cell renderers.
std::string cell(const Rational& v);
std::string cell(const QuadraticSurd& v, int digits);
std::string cell(const RealAlgebraic& v, int digits);
std::string cell(bool v);
// Closed form of a surd, "exact:a+b*sqrt(d)".
std::string closed_cell(const QuadraticSurd& v);

}  // namespace twins::cli
