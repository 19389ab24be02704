#include "starcat/report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace starcat {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(15);
    os << v;
    return os.str();
}
}  // namespace

bool ReportDocument::all_pass() const {
    for (const auto& v : verdicts)
        if (!v.pass) return false;
    return true;
}

nlohmann::ordered_json ReportDocument::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["parameters"] = parameters;
    j["results"] = results;
    auto& vs = j["verdicts"] = nlohmann::ordered_json::array();
    for (const auto& v : verdicts)
        vs.push_back({{"check", v.check}, {"pass", v.pass}, {"details", v.details}});
    return j;
}

ReportDocument ReportDocument::from_json(const nlohmann::ordered_json& j) {
    ReportDocument doc;
    doc.command = j.at("command").get<std::string>();
    doc.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
    doc.results = j.at("results");
    for (const auto& v : j.at("verdicts"))
        doc.verdicts.push_back({v.at("check").get<std::string>(), v.at("pass").get<bool>(),
                                v.at("details").get<std::string>()});
    return doc;
}

bool ReportDocument::operator==(const ReportDocument& other) const {
    if (command != other.command || parameters != other.parameters || results != other.results)
        return false;
    if (verdicts.size() != other.verdicts.size()) return false;
    for (size_t i = 0; i < verdicts.size(); ++i)
        if (verdicts[i].check != other.verdicts[i].check || verdicts[i].pass != other.verdicts[i].pass ||
            verdicts[i].details != other.verdicts[i].details)
            return false;
    return true;
}

std::string catalog_csv(const std::vector<CatalogEntry>& entries) {
    std::ostringstream os;
    os << "n,class,pattern,omega,f,b,theta,morse_index,critical_value\n";
    for (const auto& e : entries) {
        os << e.spec.n << ',' << to_string(e.spec.cls) << ',' << e.spec.pattern.to_string() << ','
           << e.spec.omega << ',' << e.spec.f << ',' << e.spec.b << ',' << fmt(e.spec.theta) << ',';
        if (e.morse_index) os << *e.morse_index;
        os << ',' << fmt(e.critical_value) << '\n';
    }
    return os.str();
}

nlohmann::ordered_json catalog_json(const std::vector<CatalogEntry>& entries) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json row;
        row["n"] = e.spec.n;
        row["class"] = to_string(e.spec.cls);
        row["pattern"] = e.spec.pattern.to_string();
        row["omega"] = e.spec.omega;
        row["f"] = e.spec.f;
        row["b"] = e.spec.b;
        row["theta"] = e.spec.theta;
        if (e.morse_index)
            row["morse_index"] = *e.morse_index;
        else
            row["morse_index"] = nullptr;
        row["critical_value"] = e.critical_value;
        row["note"] = e.multiplicity_note;
        arr.push_back(std::move(row));
    }
    return arr;
}

namespace {

struct MarkedPoint {
    int b = 0;
    int omega = 0;
    double x = 0.0;
    double value = 0.0;
};

std::vector<MarkedPoint> marked_points(int n) {
    const int m = (n - 1) / 2;
    std::vector<MarkedPoint> pts;
    for (int b = 0; b <= m - 1; ++b)
        for (int omega = 1; omega <= m - b; ++omega) {
            const double x = 2.0 * kPi * omega / (n - 2 * b);
            pts.push_back({b, omega, x, (n - 2 * b) * std::sin(x)});
        }
    return pts;
}

}  // namespace

std::string critical_values_csv(int n) {
    std::ostringstream os;
    os << "b,omega,x,critical_value\n";
    for (const auto& p : marked_points(n))
        os << p.b << ',' << p.omega << ',' << fmt(p.x) << ',' << fmt(p.value) << '\n';
    return os.str();
}

std::string critical_values_svg(int n) {
    if (n < 3) throw std::invalid_argument("critical_values_svg: n must be >= 3");
    const int m = (n - 1) / 2;
    const double width = 720, height = 480, margin = 48;
    const double ymax = n * 1.05;
    const auto X = [&](double x) { return margin + x / kPi * (width - 2 * margin); };
    const auto Y = [&](double y) { return height - margin - (y / ymax) * (height / 2 - margin); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(kPi) << "\" y2=\"" << Y(0)
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << X(0) << "\" y1=\"" << height - margin << "\" x2=\"" << X(0) << "\" y2=\""
       << margin << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << X(kPi) - 8 << "\" y=\"" << Y(0) + 18 << "\" font-size=\"12\">pi</text>\n";

    const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b", "#e377c2"};
    for (int b = 0; b <= m - 1; ++b) {
        const int amp = n - 2 * b;
        os << "<polyline fill=\"none\" stroke=\"" << palette[b % 6] << "\" stroke-width=\"1.5\" points=\"";
        const int samples = 512;
        for (int s = 1; s < samples; ++s) {
            const double x = kPi * s / samples;
            os << X(x) << ',' << Y(amp * std::sin(x)) << ' ';
        }
        os << "\"/>\n";
        os << "<text x=\"" << X(0.06) << "\" y=\"" << Y(amp) - 4 << "\" font-size=\"12\" fill=\""
           << palette[b % 6] << "\">" << amp << " sin x</text>\n";
    }
    for (const auto& p : marked_points(n)) {
        if (p.b == 0) {
            // maxima live on the top curve
            os << "<circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.value)
               << "\" r=\"5\" fill=\"black\"/>\n";
        } else {
            os << "<circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.value)
               << "\" r=\"4\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

void plot_values(int n, const std::string& out) {
    std::ofstream svg(out);
    if (!svg) throw std::runtime_error("plot_values: cannot write " + out);
    svg << critical_values_svg(n);
    std::ofstream csv(out + ".csv");
    if (!csv) throw std::runtime_error("plot_values: cannot write " + out + ".csv");
    csv << critical_values_csv(n);
}

}  // namespace starcat
