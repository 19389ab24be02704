#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starcat/catalog.hpp"
#include "starcat/polygon.hpp"

namespace starcat {

struct SearchConfig {
    int n = 5;
    long starts = 10000;
    std::uint64_t seed = 1;
    double newton_tol = 1e-12;
    int max_iters = 100;
    double cluster_radius = 1e-6;
    int threads = 0;  // 0: hardware concurrency (or STARCAT_THREADS)
};

struct FoundPoint {
    Configuration cfg;
    double gradient_norm = 0.0;
    std::optional<CriticalSpec> classification;  // from classify(); nullopt = unclassified
    long hits = 1;                               // starts that converged into this cluster
};

// max over coordinates of the circular distance, the torus metric
double toroidal_distance(const Configuration& a, const Configuration& b);

// Deterministic start point for (seed, start index); coordinates uniform
// on (-pi, pi] from a counter-based generator.
Configuration random_start(int n, std::uint64_t seed, long index);

// Damped Newton on the gradient map, toroidal wraparound, line search on
// |g|^2; singular-Hessian steps fall back to gradient descent. nullopt when
// no convergence within max_iters.
std::optional<FoundPoint> newton_refine(const Configuration& cfg, const SearchConfig& sc);

// Deterministic multistart: refine every start, cluster converged points by
// toroidal distance, classify cluster representatives.
std::vector<FoundPoint> multistart_search(const SearchConfig& sc);

struct SpecMatch {
    CriticalSpec spec;
    bool hit = false;
    double distance = 0.0;  // to the nearest found point
};

struct MatchReport {
    std::vector<SpecMatch> predicted;            // one per enumerate_isolated spec
    long train_clusters = 0;                     // residual clusters on train branches
    std::vector<std::string> anomalies;          // anything else; must stay empty
    long hits() const;
    bool complete() const;                       // all predicted hit, no anomalies
};

MatchReport match_catalog(const std::vector<FoundPoint>& found, int n);

}  // namespace starcat
