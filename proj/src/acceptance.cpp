#include "starcat/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "starcat/catalog.hpp"
#include "starcat/elk.hpp"
#include "starcat/identities.hpp"
#include "starcat/intersection.hpp"
#include "starcat/milnor.hpp"
#include "starcat/morse.hpp"
#include "starcat/polygon.hpp"
#include "starcat/search.hpp"

namespace starcat::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
    bool pass = true;
    std::ostringstream details;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (details.tellp() > 0) details << "; ";
            details << what;
        }
    }
};

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

CriterionResult run_one(const std::string& id, const std::string& name, double budget,
                        const std::function<void(Check&)>& body) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    r.budget_seconds = budget;
    Check c;
    const auto t0 = Clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (budget > 0 && r.seconds >= budget) c.expect(false, "over time budget");
    r.pass = c.pass;
    r.details = c.details.str();
    if (r.pass && r.details.empty()) r.details = "ok";
    return r;
}

void criterion_catalog_n7(Check& c) {
    const auto catalog = build_catalog(7);
    c.expect(catalog.size() == 77, "expected 77 entries");
    std::map<int, int> count_by_backward;
    std::map<int, std::set<int>> indices_by_backward;
    int degenerate = 0;
    for (const auto& e : catalog) {
        if (e.spec.cls == CriticalClass::DegenerateStar) {
            ++degenerate;
            c.expect(!e.morse_index.has_value(), "degenerate star must carry no Morse index");
            continue;
        }
        count_by_backward[e.spec.b] += 1;
        if (e.morse_index) indices_by_backward[e.spec.b].insert(*e.morse_index);
    }
    c.expect(degenerate == 1, "expected exactly one degenerate star");
    const std::map<int, int> expect_counts = {{0, 3}, {1, 14}, {2, 21}, {5, 21}, {6, 14}, {7, 3}};
    const std::map<int, int> expect_index = {{0, 6}, {1, 5}, {2, 4}, {5, 2}, {6, 1}, {7, 0}};
    c.expect(count_by_backward == expect_counts, "star counts by b differ");
    for (const auto& [b, idx] : expect_index) {
        c.expect(indices_by_backward[b] == std::set<int>{idx},
                 "Morse index at b=" + std::to_string(b) + " differs");
    }
}

void criterion_poincare_hopf(Check& c, int n_max) {
    for (int n = 3; n <= std::min(9, n_max); n += 2) {
        const IndexLedger ledger = poincare_hopf_ledger(n);
        c.expect(ledger.total == 0, "ledger total nonzero at n=" + std::to_string(n));
    }
    const IndexLedger l7 = poincare_hopf_ledger(7);
    const std::vector<long> expect = {3, -14, 21, 21, -14, 3};
    c.expect(l7.rows.size() == expect.size(), "n=7 ledger row count");
    for (size_t i = 0; i < expect.size() && i < l7.rows.size(); ++i)
        c.expect(l7.rows[i].contribution == expect[i], "n=7 ledger row mismatch");
    c.expect(l7.degenerate_contribution == -20, "n=7 degenerate index != -20");
}

void criterion_index_identity(Check& c) {
    for (int n = 3; n <= 101; n += 2)
        c.expect(degenerate_index(n) == degenerate_index_alternating(n),
                 "index identity fails at n=" + std::to_string(n));
}

void criterion_spectra(Check& c, int n_max) {
    for (int n = 3; n <= std::min(12, n_max); ++n) {
        for (const CriticalSpec& spec : enumerate_isolated(n)) {
            if (spec.cls == CriticalClass::DegenerateStar) continue;
            const SpectrumReport closed = closed_form_spectrum(spec);
            const std::vector<double> numeric = numeric_spectrum(realize(spec));
            std::vector<double> flat;
            for (const auto& g : closed.eigenvalues)
                flat.insert(flat.end(), static_cast<size_t>(g.multiplicity), g.value);
            bool match = flat.size() == numeric.size();
            for (size_t i = 0; match && i < flat.size(); ++i)
                match = std::fabs(flat[i] - numeric[i]) < 1e-9;
            c.expect(match, "spectrum mismatch n=" + std::to_string(n) + " pattern " +
                                spec.pattern.to_string() + " w=" + std::to_string(spec.omega));
            int negatives = 0;
            for (double v : numeric)
                if (v < -1e-9) ++negatives;
            c.expect(negatives == morse_index(spec),
                     "negative count != index rule at n=" + std::to_string(n));
            if (!match) return;  // one detailed failure is enough
        }
    }
}

void criterion_elk(Check& c, bool extended) {
    const std::map<int, long> expected = {{3, -2}, {5, 6}, {7, -20}};
    for (const auto& [n, sig] : expected) {
        c.expect(elk_index(n) == sig, "elk signature at n=" + std::to_string(n));
        c.expect(elk_index(n) == degenerate_index(n),
                 "elk vs degenerate index at n=" + std::to_string(n));
        c.expect(block_signature_check(n), "block signature check at n=" + std::to_string(n));
    }
    if (extended) {
        c.expect(elk_index(9) == 70, "elk signature at n=9");
        c.expect(elk_index(9) == degenerate_index(9), "elk vs degenerate index at n=9");
        c.expect(block_signature_check(9), "block signature check at n=9");
    }
}

bool proportional_to_w(const std::vector<Rational>& vec, const WVector& w) {
    const Rational scale = vec.back();  // w_m is normalized to 1
    if (scale == 0) return false;
    for (size_t k = 0; k < vec.size(); ++k)
        if (vec[k] / scale != w.values[k]) return false;
    return true;
}

void criterion_w_vector(Check& c, bool extended) {
    const std::vector<std::vector<Rational>> pinned = {
        {Rational(-2), Rational(1)},
        {Rational(8, 3), Rational(-2, 3), Rational(1)},
        {Rational(-16, 5), Rational(8, 15), Rational(-2, 5), Rational(1)}};
    for (int m = 1; m <= 3; ++m)
        c.expect(w_values(m).values == pinned[static_cast<size_t>(m - 1)],
                 "w list differs at m=" + std::to_string(m));
    for (int m = 1; m <= 8; ++m)
        c.expect(verify_three_term_relations(m),
                 "three-term relations fail at m=" + std::to_string(m));
    std::vector<int> ns = {5, 7};
    if (extended) ns.push_back(9);
    for (int n : ns) {
        const TopRelationSpace space = derive_top_relations(n);
        c.expect(space.null_basis.size() == 1,
                 "relation space not 1-dimensional at n=" + std::to_string(n));
        if (space.null_basis.size() == 1)
            c.expect(proportional_to_w(space.null_basis[0], w_values((n - 1) / 2)),
                     "relation space not proportional to w at n=" + std::to_string(n));
    }
}

void criterion_hessian_class(Check& c) {
    for (int n : {3, 5, 7, 9})
        c.expect(hessian_class_coefficient(n) == n,
                 "hessian class coefficient != n at n=" + std::to_string(n));
}

void criterion_intersection(Check& c) {
    // known symbolic lists as (eigenvalue, multiplicity) sets
    using Pair = std::pair<std::vector<long>, long>;
    const auto lists = std::map<int, std::vector<Pair>>{
        {1, {{{1, 1}, 1}, {{-1, 1}, 1}}},
        {2, {{{1, 4, 1}, 1}, {{-1, 0, 1}, 3}, {{1, -2, 1}, 2}}},
        {3, {{{1, 9, 9, 1}, 1}, {{1, -1, -1, 1}, 9}, {{-1, 3, -3, 1}, 5}, {{-1, -3, 3, 1}, 5}}}};
    for (const auto& [m, expect] : lists) {
        std::set<std::pair<std::vector<Rational>, long>> got, want;
        for (int k = 0; k <= m; ++k) {
            std::vector<Rational> coeffs;
            for (int i = 0; i <= m; ++i) {
                std::vector<Rational> unit(static_cast<size_t>(m + 1), Rational(0));
                unit[static_cast<size_t>(i)] = 1;
                coeffs.push_back(lambda_formula(m, k, unit));
            }
            got.insert({coeffs, mu(m, k).get_si()});
        }
        for (const auto& [coeffs, mult] : expect) {
            std::vector<Rational> rc;
            for (long v : coeffs) rc.push_back(Rational(v));
            want.insert({rc, mult});
        }
        c.expect(got == want, "symbolic eigenvalue list differs at m=" + std::to_string(m));
    }

    // 20 deterministic random rational tuples across m = 1..5
    const int tuples_per_m[] = {0, 5, 5, 4, 4, 2};
    std::uint64_t ctr = 20260808;
    for (int m = 1; m <= 5; ++m) {
        for (int t = 0; t < tuples_per_m[m]; ++t) {
            IntersectionMatrixSpec spec;
            spec.m = m;
            for (int i = 0; i <= m; ++i) {
                const long num = static_cast<long>(splitmix64(ctr++) % 19) - 9;
                const long den = static_cast<long>(splitmix64(ctr++) % 4) + 1;
                Rational q(num, den);
                q.canonicalize();
                spec.b.push_back(q);
            }
            c.expect(verify_spectrum(spec),
                     "spectrum verification fails at m=" + std::to_string(m) + " tuple " +
                         std::to_string(t));
        }
    }
    // and the specialized tuple itself at m=3
    IntersectionMatrixSpec sp3{3, specialized_b(3)};
    c.expect(verify_spectrum(sp3), "spectrum verification fails for specialized b at m=3");
}

void criterion_proposition_three(Check& c) {
    for (int m = 1; m <= 8; ++m) {
        const auto eigs = proposition_three_eigs(m);
        const auto b = specialized_b(m);
        for (int k = 0; k <= m; ++k)
            c.expect(lambda_formula(m, k, b) == eigs[static_cast<size_t>(k)],
                     "specialized eigenvalue differs at m=" + std::to_string(m) +
                         " k=" + std::to_string(k));
    }
    using VR = std::vector<Rational>;
    c.expect(proposition_three_eigs(1) == VR{Rational(-1), Rational(-3)}, "m=1 list");
    c.expect(proposition_three_eigs(3) ==
                 VR{Rational(-1), Rational(-7, 5), Rational(-7, 3), Rational(-7)},
             "m=3 list");
    c.expect(proposition_three_eigs(8) ==
                 VR{Rational(1), Rational(17, 15), Rational(17, 13), Rational(17, 11),
                    Rational(17, 9), Rational(17, 7), Rational(17, 5), Rational(17, 3),
                    Rational(17)},
             "m=8 list");
}

void criterion_identity_engine(Check& c) {
    namespace id = starcat::identities;
    for (int m = 4; m <= 10; ++m)
        for (int k = 0; k <= m; ++k)
            for (int j = -1; j <= k + 1; ++j)
                for (int p = -1; p <= m - k + 1; ++p)
                    if (!id::verify_key_identity(m, k, j, p)) {
                        c.expect(false, "key identity fails at m=" + std::to_string(m) +
                                            " k=" + std::to_string(k) + " j=" + std::to_string(j) +
                                            " p=" + std::to_string(p));
                        return;
                    }
    for (int m = 1; m <= 10; ++m)
        for (int p = -1; p <= m + 3; ++p)
            c.expect(id::verify_diagonal_recurrence(m, p),
                     "diagonal recurrence fails at m=" + std::to_string(m));
    for (int m = 0; m <= 20; ++m) {
        const Rational diag = id::lambda_sum(m, 0);
        c.expect(diag == (m % 2 == 0 ? 1 : -1), "diagonal sum differs at m=" + std::to_string(m));
        for (int k = 0; k <= m; ++k)
            c.expect(id::lambda_sum(m, k) == id::lambda_sum_closed_form(m, k),
                     "sum closed form differs at m=" + std::to_string(m));
    }
}

void criterion_search_coverage(Check& c, int search_n_max) {
    const std::map<int, long> starts = {{3, 2000}, {4, 8000}, {5, 20000}, {6, 80000}, {7, 200000}};
    for (int n = 3; n <= std::min(7, search_n_max); ++n) {
        SearchConfig sc;
        sc.n = n;
        sc.starts = starts.at(n);
        sc.seed = 42;
        sc.max_iters = 200;
        const auto found = multistart_search(sc);
        const MatchReport rep = match_catalog(found, n);
        c.expect(rep.hits() == static_cast<long>(rep.predicted.size()),
                 "coverage " + std::to_string(rep.hits()) + "/" +
                     std::to_string(rep.predicted.size()) + " at n=" + std::to_string(n));
        c.expect(rep.anomalies.empty(),
                 "anomalies at n=" + std::to_string(n) +
                     (rep.anomalies.empty() ? "" : (": " + rep.anomalies.front())));
        if (n % 2 == 0)
            c.expect(rep.train_clusters > 0, "no train clusters found at n=" + std::to_string(n));
    }
}

void criterion_critical_values(Check& c, int n_max) {
    for (int n = 3; n <= std::min(12, n_max); ++n)
        for (const CriticalSpec& spec : enumerate_isolated(n)) {
            const double closed = critical_value(spec);
            const double area = signed_area(realize(spec));
            c.expect(std::fabs(closed - area) < 1e-12,
                     "critical value differs at n=" + std::to_string(n) + " pattern " +
                         spec.pattern.to_string());
        }
    // absolute maximum for n=7 sits at omega = 2 on the b=0 curve
    constexpr double pi = 3.141592653589793238462643383279502884;
    const auto value = [&](int omega) { return 7.0 * std::sin(2.0 * pi * omega / 7.0); };
    c.expect(value(2) > value(1) && value(2) > value(3), "n=7 maximum not at omega=2");
}

}  // namespace

std::vector<CriterionResult> run_all(const Options& opts) {
    std::vector<CriterionResult> out;
    out.push_back(run_one("1", "n=7 catalog counts and indices", 1.0, criterion_catalog_n7));
    out.push_back(run_one("2", "Poincare-Hopf ledger zero for odd n", 5.0,
                          [&](Check& c) { criterion_poincare_hopf(c, opts.n_max); }));
    out.push_back(run_one("3", "index identity for odd n <= 101", 5.0, criterion_index_identity));
    out.push_back(run_one("4", "closed-form vs numeric spectra, n <= 12", 10.0,
                          [&](Check& c) { criterion_spectra(c, opts.n_max); }));
    out.push_back(run_one("5", std::string("ELK signature n in {3,5,7}") +
                                   (opts.extended ? " + n=9" : ""),
                          opts.extended ? 0.0 : 30.0,
                          [&](Check& c) { criterion_elk(c, opts.extended); }));
    out.push_back(run_one("6", "w-vector lists and top-degree relation space", 60.0,
                          [&](Check& c) { criterion_w_vector(c, opts.extended); }));
    out.push_back(run_one("7", "Hessian class coefficient n", 5.0, criterion_hessian_class));
    out.push_back(run_one("8", "intersection spectra, symbolic and random", 60.0,
                          criterion_intersection));
    out.push_back(run_one("9", "specialized eigenvalue lists m <= 8", 5.0,
                          criterion_proposition_three));
    out.push_back(run_one("10", "key identity, diagonal recurrence, sums", 30.0,
                          criterion_identity_engine));
    out.push_back(run_one("11", "multistart oracle coverage n in {3..7}", 300.0,
                          [&](Check& c) { criterion_search_coverage(c, opts.search_n_max); }));
    out.push_back(run_one("12", "critical values, n <= 12", 0.0,
                          [&](Check& c) { criterion_critical_values(c, opts.n_max); }));
    if (opts.extended) {
        out.push_back(run_one("Q", "certified quotient dimensions n=7, all degrees", 0.0,
                              [&](Check& c) {
                                  for (int d = 0; d <= 6; ++d)
                                      c.expect(verify_quotient_dimension(7, d),
                                               "quotient dim check fails at d=" + std::to_string(d));
                              }));
    }
    return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

std::string format_line(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << "  (";
    os.precision(3);
    os << std::fixed << r.seconds << " s)";
    if (!r.pass || r.details != "ok") os << "  " << r.details;
    return os.str();
}

}  // namespace starcat::acceptance
