#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starcat/polygon.hpp"
#include "starcat/rational.hpp"

namespace starcat {

enum class CriticalClass { RegularStar, ZigzagStar, ZigzagTrain, DegenerateStar, CompleteFold };

std::string to_string(CriticalClass c);

// Edge orientations for all n edges; +1 forward, -1 backward.
struct SignPattern {
    std::vector<int> signs;

    int n() const { return static_cast<int>(signs.size()); }
    int forward() const;
    int backward() const;
    std::string to_string() const;  // e.g. "++-+-"
};

// Symbolic description of a critical configuration. theta is the common
// |alpha_i|; omega the winding number, signed (negative on the f < b side).
struct CriticalSpec {
    int n = 0;
    CriticalClass cls = CriticalClass::RegularStar;
    SignPattern pattern;
    int omega = 0;
    double theta = 0.0;
    int f = 0;
    int b = 0;
    int m = 0;  // floor((n-1)/2)
};

struct CatalogEntry {
    CriticalSpec spec;
    std::optional<int> morse_index;
    double critical_value = 0.0;
    std::string multiplicity_note;
};

// Every isolated critical point on the reduced torus: regular/zigzag stars
// for each sign pattern with f != b and each admissible winding number,
// plus the degenerate star when n is odd.
std::vector<CriticalSpec> enumerate_isolated(int n);

// C(n,b)(m-b) for f > b, mirrored for f < b. Exact.
BigInt count_by_b(int n, int b);

// (n-2b) sin(2 pi omega / (n-2b)) for stars; 0 for the degenerate classes.
double critical_value(const CriticalSpec& spec);

// All C(n, n/2) balanced sign patterns; each is a one-parameter branch of
// critical configurations parametrized by theta in (0, pi).
std::vector<SignPattern> enumerate_train_branches(int n);

Configuration realize(const CriticalSpec& spec, std::optional<double> theta_override = std::nullopt);

// Extracts the symbolic description when the critical equations hold within
// tol; nullopt otherwise.
std::optional<CriticalSpec> classify(const Configuration& cfg, double tol = 1e-9);

// Full catalog with Morse indices and critical values, in report order:
// f > b by ascending b, degenerate star, then f < b by ascending b.
std::vector<CatalogEntry> build_catalog(int n);

}  // namespace starcat
