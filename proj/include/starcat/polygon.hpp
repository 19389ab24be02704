#pragma once

#include <vector>

namespace starcat {

// Central angle, normalized representative in (-pi, pi].
struct Angle {
    double value = 0.0;
};

Angle normalize_angle(double x);

// Point of the reduced configuration space: the n-1 central angles of an
// n-gon inscribed in the unit circle. The closing angle alpha_n is derived.
class Configuration {
  public:
    Configuration(int n, const std::vector<double>& alphas);

    int n() const { return n_; }
    const std::vector<double>& alphas() const { return alphas_; }
    double alpha(int i) const { return alphas_[static_cast<size_t>(i)]; }
    double closing_angle() const;

  private:
    int n_;
    std::vector<double> alphas_;  // normalized, length n-1
};

struct GradientVector {
    std::vector<double> entries;  // cos(alpha_i) - cos(alpha_n)
    double sup_norm() const;
};

// Symmetric (n-1)x(n-1): diagonal -sin(alpha_i) - sin(alpha_n),
// off-diagonal -sin(alpha_n).
struct HessianMatrix {
    int dim = 0;
    std::vector<double> entries;
    double at(int i, int j) const { return entries[static_cast<size_t>(i) * dim + j]; }
};

double signed_area(const Configuration& cfg);
GradientVector gradient(const Configuration& cfg);
HessianMatrix hessian(const Configuration& cfg);

struct PlanarPoint {
    double x = 0.0;
    double y = 0.0;
};

// Vertices a cos(phi_i), b sin(phi_i) with phi_1 = 0 and cumulative phi.
// The planar signed area of the result is (a*b/2) * signed_area(cfg).
std::vector<PlanarPoint> transfer_to_ellipse(const Configuration& cfg, double a, double b);

}  // namespace starcat
