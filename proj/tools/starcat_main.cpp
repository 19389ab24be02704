#include <CLI11.hpp>

#include <cmath>

#include <fstream>
#include <iostream>
#include <sstream>

#include "starcat/acceptance.hpp"
#include "starcat/catalog.hpp"
#include "starcat/elk.hpp"
#include "starcat/identities.hpp"
#include "starcat/intersection.hpp"
#include "starcat/morse.hpp"
#include "starcat/report.hpp"
#include "starcat/search.hpp"

namespace {

using starcat::Rational;
using starcat::ReportDocument;

int emit(const ReportDocument& doc) {
    std::cout << doc.to_json().dump(2) << "\n";
    return doc.all_pass() ? 0 : 1;
}

std::vector<double> parse_doubles(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

std::vector<Rational> parse_rationals(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(starcat::parse_fraction(tok));
    return out;
}

int cmd_catalog(int n, const std::string& format) {
    const auto entries = starcat::build_catalog(n);
    if (format == "csv") {
        std::cout << starcat::catalog_csv(entries);
        return 0;
    }
    ReportDocument doc;
    doc.command = "catalog";
    doc.parameters = {{"n", std::to_string(n)}, {"format", format}};
    doc.results["entries"] = starcat::catalog_json(entries);
    doc.results["count"] = entries.size();
    doc.verdicts.push_back({"catalog built", true, std::to_string(entries.size()) + " entries"});
    return emit(doc);
}

int cmd_classify(const std::string& angles, double tol) {
    const std::vector<double> a = parse_doubles(angles);
    const int n = static_cast<int>(a.size()) + 1;
    const starcat::Configuration cfg(n, a);
    std::ostringstream tol_str;
    tol_str << tol;
    ReportDocument doc;
    doc.command = "classify";
    doc.parameters = {{"angles", angles}, {"tol", tol_str.str()}};
    doc.results["gradient_sup_norm"] = starcat::gradient(cfg).sup_norm();
    doc.results["signed_area"] = starcat::signed_area(cfg);
    const auto spec = starcat::classify(cfg, tol);
    if (spec) {
        doc.results["class"] = to_string(spec->cls);
        doc.results["pattern"] = spec->pattern.to_string();
        doc.results["omega"] = spec->omega;
        doc.results["theta"] = spec->theta;
        doc.results["f"] = spec->f;
        doc.results["b"] = spec->b;
        doc.verdicts.push_back({"critical", true, to_string(spec->cls)});
    } else {
        doc.results["class"] = "not_critical";
        doc.verdicts.push_back({"critical", false, "gradient equations fail at this tolerance"});
    }
    return emit(doc);
}

int cmd_spectrum(int n, int b, int omega) {
    // canonical pattern: the backward edges first, so alpha_n keeps the
    // majority orientation whenever possible
    starcat::SignPattern pattern;
    pattern.signs.assign(static_cast<size_t>(n), 1);
    for (int i = 0; i < b; ++i) pattern.signs[static_cast<size_t>(i)] = -1;
    const int f = n - b;
    if (f == b) throw CLI::ValidationError("--b", "f == b has no isolated spectrum");
    if ((f > b) != (omega > 0) || omega == 0)
        throw CLI::ValidationError("--omega", "sign must match the majority orientation");
    starcat::CriticalSpec spec;
    spec.n = n;
    spec.pattern = pattern;
    spec.omega = omega;
    spec.f = f;
    spec.b = b;
    spec.m = (n - 1) / 2;
    spec.theta = 2.0 * 3.141592653589793238462643383279502884 * std::abs(omega) / std::abs(f - b);
    spec.cls = (b == 0 || f == 0) ? starcat::CriticalClass::RegularStar
                                  : starcat::CriticalClass::ZigzagStar;

    const auto closed = starcat::closed_form_spectrum(spec);
    const auto numeric = starcat::numeric_spectrum(starcat::realize(spec));

    ReportDocument doc;
    doc.command = "spectrum";
    doc.parameters = {{"n", std::to_string(n)}, {"b", std::to_string(b)}, {"omega", std::to_string(omega)}};
    auto evs = nlohmann::ordered_json::array();
    for (const auto& g : closed.eigenvalues)
        evs.push_back({{"value", g.value}, {"multiplicity", g.multiplicity}});
    doc.results["pattern"] = spec.pattern.to_string();
    doc.results["p"] = closed.p;
    doc.results["closed_form"] = evs;
    doc.results["numeric"] = numeric;
    doc.results["morse_index"] = starcat::morse_index(spec);

    std::vector<double> flat;
    for (const auto& g : closed.eigenvalues)
        flat.insert(flat.end(), static_cast<size_t>(g.multiplicity), g.value);
    bool match = flat.size() == numeric.size();
    for (size_t i = 0; match && i < flat.size(); ++i)
        match = std::fabs(flat[i] - numeric[i]) < 1e-9;
    doc.verdicts.push_back({"closed form matches numeric within 1e-9", match, ""});
    int negatives = 0;
    for (double v : numeric)
        if (v < -1e-9) ++negatives;
    doc.verdicts.push_back({"negative eigenvalue count equals Morse index",
                            negatives == starcat::morse_index(spec), ""});
    return emit(doc);
}

int cmd_elk(int n, const std::string& dump) {
    ReportDocument doc;
    doc.command = "elk";
    doc.parameters = {{"n", std::to_string(n)}};
    const auto B = starcat::build_B(n);
    const auto sig = starcat::exact_signature(B);
    const auto expected = starcat::degenerate_index(n);
    doc.results["dimension"] = B.dim;
    doc.results["positives"] = sig.positives;
    doc.results["negatives"] = sig.negatives;
    doc.results["zeros"] = sig.zeros;
    doc.results["signature"] = sig.signature();
    doc.results["degenerate_star_index"] = expected.get_str();
    doc.verdicts.push_back({"bilinear form nondegenerate", sig.zeros == 0, ""});
    doc.verdicts.push_back({"signature equals degenerate-star gradient index",
                            starcat::BigInt(sig.signature()) == expected,
                            std::to_string(sig.signature()) + " vs " + expected.get_str()});
    doc.verdicts.push_back({"signature equals middle-block signature",
                            starcat::block_signature_check(n), ""});
    if (!dump.empty()) {
        std::ofstream os(dump);
        if (!os) throw CLI::ValidationError("--dump", "cannot write " + dump);
        starcat::dump_matrix(B, os);
        doc.results["dump"] = dump;
    }
    return emit(doc);
}

int cmd_intersect(int m, const std::string& bcsv) {
    starcat::IntersectionMatrixSpec spec;
    spec.m = m;
    spec.b = bcsv.empty() ? starcat::specialized_b(m) : parse_rationals(bcsv);
    ReportDocument doc;
    doc.command = "intersect";
    doc.parameters = {{"m", std::to_string(m)}, {"b", bcsv.empty() ? "specialized" : bcsv}};
    auto barr = nlohmann::ordered_json::array();
    for (const auto& q : spec.b) barr.push_back(starcat::fraction_string(q));
    doc.results["b"] = barr;
    auto eigs = nlohmann::ordered_json::array();
    for (int k = 0; k <= m; ++k)
        eigs.push_back({{"k", k},
                        {"lambda", starcat::fraction_string(starcat::lambda_formula(m, k, spec.b))},
                        {"mu", starcat::mu(m, k).get_str()}});
    doc.results["eigenvalues"] = eigs;
    doc.verdicts.push_back({"char poly factors as predicted", starcat::verify_spectrum(spec), ""});
    return emit(doc);
}

int cmd_identities(int m_max) {
    namespace id = starcat::identities;
    ReportDocument doc;
    doc.command = "identities";
    doc.parameters = {{"m-max", std::to_string(m_max)}};
    bool key = true, diag = true, sums = true;
    for (int m = 4; m <= m_max && key; ++m)
        for (int k = 0; k <= m && key; ++k)
            for (int j = -1; j <= k + 1 && key; ++j)
                for (int p = -1; p <= m - k + 1; ++p)
                    if (!id::verify_key_identity(m, k, j, p)) {
                        key = false;
                        break;
                    }
    for (int m = 1; m <= m_max && diag; ++m)
        for (int p = -1; p <= m + 3; ++p)
            if (!id::verify_diagonal_recurrence(m, p)) {
                diag = false;
                break;
            }
    for (int m = 0; m <= m_max && sums; ++m)
        for (int k = 0; k <= m; ++k)
            if (id::lambda_sum(m, k) != id::lambda_sum_closed_form(m, k)) {
                sums = false;
                break;
            }
    doc.verdicts.push_back({"key identity over the full stencil", key, ""});
    doc.verdicts.push_back({"diagonal recurrence", diag, ""});
    doc.verdicts.push_back({"closed-form sums", sums, ""});
    return emit(doc);
}

int cmd_search(int n, long starts, std::uint64_t seed) {
    starcat::SearchConfig sc;
    sc.n = n;
    sc.starts = starts;
    sc.seed = seed;
    sc.max_iters = 200;
    const auto found = starcat::multistart_search(sc);
    const auto rep = starcat::match_catalog(found, n);
    ReportDocument doc;
    doc.command = "search";
    doc.parameters = {{"n", std::to_string(n)},
                      {"starts", std::to_string(starts)},
                      {"seed", std::to_string(seed)}};
    doc.results["clusters"] = found.size();
    doc.results["predicted"] = rep.predicted.size();
    doc.results["hits"] = rep.hits();
    doc.results["train_clusters"] = rep.train_clusters;
    auto anom = nlohmann::ordered_json::array();
    for (const auto& a : rep.anomalies) anom.push_back(a);
    doc.results["anomalies"] = anom;
    doc.verdicts.push_back({"all predicted critical points found",
                            rep.hits() == static_cast<long>(rep.predicted.size()),
                            std::to_string(rep.hits()) + "/" + std::to_string(rep.predicted.size())});
    doc.verdicts.push_back({"no anomalous clusters", rep.anomalies.empty(), ""});
    return emit(doc);
}

int cmd_plot(int n, const std::string& out) {
    starcat::plot_values(n, out);
    ReportDocument doc;
    doc.command = "plot-values";
    doc.parameters = {{"n", std::to_string(n)}, {"out", out}};
    doc.results["svg"] = out;
    doc.results["csv"] = out + ".csv";
    doc.verdicts.push_back({"plot written", true, out});
    return emit(doc);
}

int cmd_verify_all(int n_max, bool extended) {
    starcat::acceptance::Options opts;
    opts.n_max = n_max;
    opts.search_n_max = std::min(7, n_max);
    opts.extended = extended;
    const auto results = starcat::acceptance::run_all(opts);
    for (const auto& r : results) std::cout << starcat::acceptance::format_line(r) << "\n";
    return starcat::acceptance::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"critical configurations of the signed area of polygons inscribed in a circle"};
    app.require_subcommand(1);

    int n = 7, b = 0, omega = 1, m = 3, m_max = 8, n_max = 12;
    long starts = 20000;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    std::string format = "json", angles, bcsv, out = "values.svg", dump;
    bool extended = false;

    auto* catalog = app.add_subcommand("catalog", "enumerate the critical configurations");
    catalog->add_option("--n", n, "vertex count")->required()->check(CLI::Range(3, 64));
    catalog->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    auto* classify = app.add_subcommand("classify", "classify a configuration");
    classify->add_option("--angles", angles, "comma-separated alpha_1..alpha_{n-1}")->required();
    classify->add_option("--tol", tol, "criticality tolerance");

    auto* spectrum = app.add_subcommand("spectrum", "Hessian spectrum of a star");
    spectrum->add_option("--n", n, "vertex count")->required()->check(CLI::Range(3, 64));
    spectrum->add_option("--b", b, "backward edge count")->required();
    spectrum->add_option("--omega", omega, "winding number (signed)")->required();

    auto* elk = app.add_subcommand("elk", "signature of the bilinear form of the 3-jet");
    elk->add_option("--n", n, "odd vertex count")->required()->check(CLI::Range(3, 11));
    elk->add_option("--dump", dump, "write the exact matrix to a file");

    auto* intersect = app.add_subcommand("intersect", "intersection matrix spectra");
    intersect->add_option("--m", m, "subset size")->required()->check(CLI::Range(1, 5));
    intersect->add_option("--b", bcsv, "comma-separated b_0..b_m as fractions");

    auto* identities = app.add_subcommand("identities", "verify the combinatorial identities");
    identities->add_option("--m-max", m_max, "largest m");

    auto* search = app.add_subcommand("search", "multistart gradient-zero search");
    search->add_option("--n", n, "vertex count")->required()->check(CLI::Range(3, 12));
    search->add_option("--starts", starts, "number of starts");
    search->add_option("--seed", seed, "random seed");

    auto* plot = app.add_subcommand("plot-values", "critical values figure");
    plot->add_option("--n", n, "vertex count")->required()->check(CLI::Range(3, 64));
    plot->add_option("--out", out, "output SVG path");

    auto* verify = app.add_subcommand("verify-all", "run the full verification suite");
    verify->add_option("--n-max", n_max, "cap for the per-n families");
    verify->add_flag("--extended", extended, "include the n=9 ELK block and large rank checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*catalog) return cmd_catalog(n, format);
        if (*classify) return cmd_classify(angles, tol);
        if (*spectrum) return cmd_spectrum(n, b, omega);
        if (*elk) return cmd_elk(n, dump);
        if (*intersect) return cmd_intersect(m, bcsv);
        if (*identities) return cmd_identities(m_max);
        if (*search) return cmd_search(n, starts, seed);
        if (*plot) return cmd_plot(n, out);
        if (*verify) return cmd_verify_all(n_max, extended);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
