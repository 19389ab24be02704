#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "starcat/catalog.hpp"

namespace starcat {

struct Verdict {
    std::string check;
    bool pass = false;
    std::string details;
};

struct ReportDocument {
    std::string command;
    std::map<std::string, std::string> parameters;
    nlohmann::ordered_json results;
    std::vector<Verdict> verdicts;

    bool all_pass() const;
    nlohmann::ordered_json to_json() const;
    static ReportDocument from_json(const nlohmann::ordered_json& j);
    bool operator==(const ReportDocument& other) const;
};

// CSV catalog: n,class,pattern,omega,f,b,theta,morse_index,critical_value
std::string catalog_csv(const std::vector<CatalogEntry>& entries);
nlohmann::ordered_json catalog_json(const std::vector<CatalogEntry>& entries);

// Figure of the critical values: curves y = (n-2b) sin x for b = 0..m-1 on
// (0, pi), with the admissible 2 pi w/(n-2b) marked; maxima (b = 0) are
// drawn distinct from saddles. Returns SVG text; the companion CSV lists
// (b, omega, x, critical value).
std::string critical_values_svg(int n);
std::string critical_values_csv(int n);

// writes SVG to `out` and CSV next to it (same path, .csv appended)
void plot_values(int n, const std::string& out);

}  // namespace starcat
