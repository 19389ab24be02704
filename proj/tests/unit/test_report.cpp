#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "starcat/report.hpp"

using namespace starcat;

TEST_CASE("report documents round-trip through JSON") {
    ReportDocument doc;
    doc.command = "elk";
    doc.parameters = {{"n", "7"}};
    doc.results["signature"] = -20;
    doc.results["b"] = {"1/1", "-2/3"};
    doc.verdicts.push_back({"signature matches", true, "-20"});
    doc.verdicts.push_back({"nondegenerate", true, ""});

    const auto j = doc.to_json();
    const ReportDocument back = ReportDocument::from_json(j);
    CHECK(back == doc);
    CHECK(back.to_json().dump() == j.dump());
    CHECK(doc.all_pass());

    ReportDocument failing = doc;
    failing.verdicts.push_back({"broken", false, "nope"});
    CHECK_FALSE(failing.all_pass());
}

TEST_CASE("catalog CSV shape") {
    const auto entries = build_catalog(7);
    const std::string csv = catalog_csv(entries);
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    CHECK(line == "n,class,pattern,omega,f,b,theta,morse_index,critical_value");
    long rows = 0, commas_ok = 0;
    while (std::getline(is, line)) {
        ++rows;
        if (std::count(line.begin(), line.end(), ',') == 8) ++commas_ok;
    }
    CHECK(rows == 77);
    CHECK(commas_ok == 77);
    // the degenerate star row has an empty morse_index field
    CHECK(csv.find("degenerate_star") != std::string::npos);
}

TEST_CASE("critical values table matches the catalog") {
    const std::string csv = critical_values_csv(7);
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    long rows = 0;
    while (std::getline(is, line)) {
        ++rows;
        int b, omega;
        double x, value;
        REQUIRE(std::sscanf(line.c_str(), "%d,%d,%lf,%lf", &b, &omega, &x, &value) == 4);
        // must equal the critical value of the matching spec
        bool matched = false;
        for (const auto& spec : enumerate_isolated(7)) {
            if (spec.b == b && spec.omega == omega) {
                CHECK(value == doctest::Approx(critical_value(spec)).epsilon(1e-12));
                CHECK(x == doctest::Approx(spec.theta).epsilon(1e-12));
                matched = true;
                break;
            }
        }
        CHECK(matched);
    }
    CHECK(rows == 6);  // 3 + 2 + 1 marked points on the positive side
}

TEST_CASE("figure content") {
    const std::string svg7 = critical_values_svg(7);
    CHECK(svg7.find("<svg") != std::string::npos);
    size_t curves = 0, pos = 0;
    while ((pos = svg7.find("<polyline", pos)) != std::string::npos) {
        ++curves;
        pos += 1;
    }
    CHECK(curves == 3);  // 7 sin x, 5 sin x, 3 sin x
    size_t markers = 0;
    pos = 0;
    while ((pos = svg7.find("<circle", pos)) != std::string::npos) {
        ++markers;
        pos += 1;
    }
    CHECK(markers == 6);
    // maxima are filled, saddles are hollow
    CHECK(svg7.find("fill=\"black\"") != std::string::npos);
    CHECK(svg7.find("fill=\"white\" stroke=\"black\"") != std::string::npos);

    const std::string svg3 = critical_values_svg(3);
    size_t curves3 = 0;
    pos = 0;
    while ((pos = svg3.find("<polyline", pos)) != std::string::npos) {
        ++curves3;
        pos += 1;
    }
    CHECK(curves3 == 1);
}

TEST_CASE("plot files land on disk") {
    const std::string out = "/tmp/starcat_test_values.svg";
    plot_values(5, out);
    std::ifstream svg(out);
    CHECK(svg.good());
    std::ifstream csv(out + ".csv");
    CHECK(csv.good());
    std::remove(out.c_str());
    std::remove((out + ".csv").c_str());
}
