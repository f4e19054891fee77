#include "capa_isac/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace capa_isac {

GaussLegendreRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-based initial guess for the i-th positive root.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence up to degree n at x.
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

namespace {

template <typename T>
T panel_grid_estimate(const std::function<T(double, double)>& f,
                      double x0, double x1, double z0, double z1,
                      int panels, const GaussLegendreRule& rule) {
    const double hx = (x1 - x0) / panels;
    const double hz = (z1 - z0) / panels;
    const int n = static_cast<int>(rule.nodes.size());
    KahanSum re, im;
    for (int px = 0; px < panels; ++px) {
        const double cx = x0 + (px + 0.5) * hx;
        for (int pz = 0; pz < panels; ++pz) {
            const double cz = z0 + (pz + 0.5) * hz;
            for (int i = 0; i < n; ++i) {
                const double x = cx + 0.5 * hx * rule.nodes[i];
                const double wx = rule.weights[i];
                for (int j = 0; j < n; ++j) {
                    const double z = cz + 0.5 * hz * rule.nodes[j];
                    const T v = f(x, z);
                    const double w = wx * rule.weights[j];
                    if constexpr (std::is_same_v<T, double>) {
                        re.add(w * v);
                    } else {
                        re.add(w * v.real());
                        im.add(w * v.imag());
                    }
                }
            }
        }
    }
    const double scale = 0.25 * hx * hz;
    if constexpr (std::is_same_v<T, double>) {
        return re.value() * scale;
    } else {
        return T{re.value() * scale, im.value() * scale};
    }
}

template <typename T>
T integrate_adaptive(const std::function<T(double, double)>& f,
                     double x0, double x1, double z0, double z1,
                     double rel_tol, int max_level, int nodes_per_axis) {
    if (!(rel_tol > 0.0))
        throw std::invalid_argument("integrate_rect: rel_tol must be > 0");
    if (max_level < 1)
        throw std::invalid_argument("integrate_rect: max_level must be >= 1");
    const GaussLegendreRule rule = gauss_legendre(nodes_per_axis);
    T prev = panel_grid_estimate<T>(f, x0, x1, z0, z1, 1, rule);
    for (int level = 1; level <= max_level; ++level) {
        const T cur = panel_grid_estimate<T>(f, x0, x1, z0, z1, 1 << level, rule);
        if (std::abs(cur - prev) <= rel_tol * std::abs(cur)) return cur;
        prev = cur;
    }
    throw NonConvergence("integrate_rect: estimates did not settle within the level cap");
}

}  // namespace

double integrate_rect(const std::function<double(double, double)>& f,
                      double x0, double x1, double z0, double z1,
                      double rel_tol, int max_level, int nodes_per_axis) {
    return integrate_adaptive<double>(f, x0, x1, z0, z1, rel_tol, max_level, nodes_per_axis);
}

std::complex<double> integrate_rect_complex(
    const std::function<std::complex<double>(double, double)>& f,
    double x0, double x1, double z0, double z1,
    double rel_tol, int max_level, int nodes_per_axis) {
    return integrate_adaptive<std::complex<double>>(f, x0, x1, z0, z1, rel_tol, max_level,
                                                    nodes_per_axis);
}

}  // namespace capa_isac
