#ifndef CAPA_ISAC_QUADRATURE_HPP
#define CAPA_ISAC_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace capa_isac {

/// Thrown when the adaptive integrator exhausts its refinement levels before
/// two successive estimates agree to the requested relative tolerance.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Computes the rule by Newton iteration on the Legendre polynomial roots.
GaussLegendreRule gauss_legendre(int n);

/// Compensated (Kahan) accumulator.
class KahanSum {
public:
    void add(double x) {
        const double y = x - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Adaptive tensor-product Gauss-Legendre integration over the rectangle
/// [x0, x1] x [z0, z1]. Level l splits the rectangle into 2^l x 2^l panels
/// with nodes_per_axis points per panel per axis; refinement stops once two
/// successive levels agree to rel_tol, and throws NonConvergence if
/// max_level is reached first.
double integrate_rect(const std::function<double(double, double)>& f,
                      double x0, double x1, double z0, double z1,
                      double rel_tol, int max_level, int nodes_per_axis = 16);

/// Complex-kernel variant. The real and imaginary parts are accumulated in
/// separate compensated sums; convergence is judged on the complex modulus
/// of the level-to-level change.
std::complex<double> integrate_rect_complex(
    const std::function<std::complex<double>(double, double)>& f,
    double x0, double x1, double z0, double z1,
    double rel_tol, int max_level, int nodes_per_axis = 16);

}  // namespace capa_isac

#endif
