#include "starcat/search.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <map>
#include <thread>

namespace starcat {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double circular_distance(double a, double b) {
    const double d = std::fabs(normalize_angle(a - b).value);
    return d;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

double merit(const Configuration& cfg) {
    const GradientVector g = gradient(cfg);
    double s = 0.0;
    for (double e : g.entries) s += e * e;
    return 0.5 * s;
}

Configuration step(const Configuration& cfg, const Eigen::VectorXd& dir, double t) {
    std::vector<double> next(cfg.alphas());
    for (size_t i = 0; i < next.size(); ++i) next[i] += t * dir(static_cast<Eigen::Index>(i));
    return Configuration(cfg.n(), next);
}

int thread_count(const SearchConfig& sc) {
    if (sc.threads > 0) return sc.threads;
    if (const char* env = std::getenv("STARCAT_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

double toroidal_distance(const Configuration& a, const Configuration& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.alphas().size(); ++i)
        m = std::max(m, circular_distance(a.alphas()[i], b.alphas()[i]));
    return m;
}

Configuration random_start(int n, std::uint64_t seed, long index) {
    std::vector<double> alphas(static_cast<size_t>(n - 1));
    for (int c = 0; c < n - 1; ++c) {
        const std::uint64_t z =
            splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(index) * 64ull + static_cast<std::uint64_t>(c) + 1ull));
        const double u = static_cast<double>(z >> 11) * 0x1.0p-53;  // [0,1)
        alphas[static_cast<size_t>(c)] = kPi - 2.0 * kPi * u;       // (-pi, pi]
    }
    return Configuration(n, alphas);
}

std::optional<FoundPoint> newton_refine(const Configuration& start, const SearchConfig& sc) {
    const int d = start.n() - 1;
    Configuration cur = start;
    for (int iter = 0; iter <= sc.max_iters; ++iter) {
        const GradientVector g = gradient(cur);
        if (g.sup_norm() <= sc.newton_tol)
            return FoundPoint{cur, g.sup_norm(), classify(cur, 1e-6), 1};

        Eigen::VectorXd gv(d);
        for (int i = 0; i < d; ++i) gv(i) = g.entries[static_cast<size_t>(i)];
        const HessianMatrix h = hessian(cur);
        Eigen::MatrixXd hm(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) hm(i, j) = h.at(i, j);

        Eigen::VectorXd dir;
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(hm);
        const double rcond_proxy = std::fabs(lu.matrixLU().diagonal().cwiseAbs().minCoeff());
        if (rcond_proxy > 1e-10) {
            dir = -lu.solve(gv);
        } else {
            dir = -(hm * gv);  // steepest descent on |g|^2/2
            const double norm = dir.norm();
            if (norm < 1e-300) return std::nullopt;
            dir *= 1.0 / std::max(norm, 1.0);
        }
        const double m0 = 0.5 * gv.squaredNorm();
        double t = 1.0;
        bool moved = false;
        for (int bt = 0; bt < 40; ++bt) {
            const Configuration cand = step(cur, dir, t);
            if (merit(cand) < m0) {
                cur = cand;
                moved = true;
                break;
            }
            t *= 0.5;
        }
        if (!moved) return std::nullopt;
    }
    return std::nullopt;
}

std::vector<FoundPoint> multistart_search(const SearchConfig& sc) {
    const int nthreads = thread_count(sc);
    std::vector<std::optional<FoundPoint>> results(static_cast<size_t>(sc.starts));

    const auto worker = [&](long lo, long hi) {
        for (long s = lo; s < hi; ++s)
            results[static_cast<size_t>(s)] = newton_refine(random_start(sc.n, sc.seed, s), sc);
    };
    if (nthreads <= 1) {
        worker(0, sc.starts);
    } else {
        std::vector<std::future<void>> futs;
        const long chunk = (sc.starts + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            const long lo = t * chunk, hi = std::min<long>(sc.starts, lo + chunk);
            if (lo >= hi) break;
            futs.push_back(std::async(std::launch::async, worker, lo, hi));
        }
        for (auto& f : futs) f.get();
    }

    // cluster in start order so identical configs give identical cluster sets
    std::vector<FoundPoint> clusters;
    for (const auto& r : results) {
        if (!r) continue;
        bool merged = false;
        for (FoundPoint& c : clusters) {
            if (toroidal_distance(r->cfg, c.cfg) < sc.cluster_radius) {
                c.hits += 1;
                if (r->gradient_norm < c.gradient_norm) {
                    c.cfg = r->cfg;
                    c.gradient_norm = r->gradient_norm;
                    c.classification = r->classification;
                }
                merged = true;
                break;
            }
        }
        if (!merged) clusters.push_back(*r);
    }
    return clusters;
}

long MatchReport::hits() const {
    long h = 0;
    for (const auto& p : predicted) h += p.hit ? 1 : 0;
    return h;
}

bool MatchReport::complete() const {
    return anomalies.empty() && hits() == static_cast<long>(predicted.size());
}

MatchReport match_catalog(const std::vector<FoundPoint>& found, int n) {
    MatchReport rep;
    std::vector<Configuration> targets;
    for (const CriticalSpec& spec : enumerate_isolated(n)) {
        rep.predicted.push_back({spec, false, 1e300});
        targets.push_back(realize(spec));
    }
    const double hit_tol = 1e-5;

    for (const FoundPoint& fp : found) {
        double best = 1e300;
        size_t best_i = 0;
        for (size_t i = 0; i < targets.size(); ++i) {
            const double dist = toroidal_distance(fp.cfg, targets[i]);
            rep.predicted[i].distance = std::min(rep.predicted[i].distance, dist);
            if (dist < best) {
                best = dist;
                best_i = i;
            }
        }
        if (best < hit_tol) {
            rep.predicted[best_i].hit = true;
            continue;
        }
        // residual: acceptable only on a train branch (or its closure), which
        // needs an even vertex count
        const auto& cls = fp.classification;
        const bool train_like =
            cls && (cls->cls == CriticalClass::ZigzagTrain ||
                    (n % 2 == 0 && (cls->cls == CriticalClass::DegenerateStar ||
                                    cls->cls == CriticalClass::CompleteFold)));
        if (train_like) {
            rep.train_clusters += 1;
        } else {
            std::string what = "unmatched cluster at (";
            for (double a : fp.cfg.alphas()) what += std::to_string(a) + ",";
            what += ") |g|=" + std::to_string(fp.gradient_norm);
            rep.anomalies.push_back(what);
        }
    }
    return rep;
}

}  // namespace starcat
