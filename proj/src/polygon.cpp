#include "starcat/polygon.hpp"

#include <cmath>
#include <stdexcept>

namespace starcat {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

Angle normalize_angle(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("normalize_angle: non-finite input");
    double v = std::remainder(x, 2.0 * kPi);  // in [-pi, pi]
    if (v <= -kPi) v = kPi;                   // (-pi, pi] convention
    return Angle{v};
}

Configuration::Configuration(int n, const std::vector<double>& alphas) : n_(n) {
    if (n < 3) throw std::invalid_argument("Configuration: n must be >= 3");
    if (alphas.size() != static_cast<size_t>(n - 1))
        throw std::invalid_argument("Configuration: expected n-1 angles");
    alphas_.reserve(alphas.size());
    for (double a : alphas) alphas_.push_back(normalize_angle(a).value);
}

double Configuration::closing_angle() const {
    double sum = 0.0;
    for (double a : alphas_) sum += a;
    return normalize_angle(-sum).value;
}

double GradientVector::sup_norm() const {
    double m = 0.0;
    for (double e : entries) m = std::max(m, std::fabs(e));
    return m;
}

double signed_area(const Configuration& cfg) {
    double s = std::sin(cfg.closing_angle());
    for (double a : cfg.alphas()) s += std::sin(a);
    return s;
}

GradientVector gradient(const Configuration& cfg) {
    const double cn = std::cos(cfg.closing_angle());
    GradientVector g;
    g.entries.reserve(cfg.alphas().size());
    for (double a : cfg.alphas()) g.entries.push_back(std::cos(a) - cn);
    return g;
}

HessianMatrix hessian(const Configuration& cfg) {
    const int d = cfg.n() - 1;
    const double p = std::sin(cfg.closing_angle());
    HessianMatrix h;
    h.dim = d;
    h.entries.assign(static_cast<size_t>(d) * d, -p);
    for (int i = 0; i < d; ++i)
        h.entries[static_cast<size_t>(i) * d + i] = -std::sin(cfg.alpha(i)) - p;
    return h;
}

std::vector<PlanarPoint> transfer_to_ellipse(const Configuration& cfg, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("transfer_to_ellipse: semi-axes must be positive");
    std::vector<PlanarPoint> pts;
    pts.reserve(static_cast<size_t>(cfg.n()));
    double phi = 0.0;
    pts.push_back({a, 0.0});
    for (double alpha : cfg.alphas()) {
        phi += alpha;
        pts.push_back({a * std::cos(phi), b * std::sin(phi)});
    }
    return pts;
}

}  // namespace starcat
