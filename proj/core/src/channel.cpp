#include "capa_isac/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "capa_isac/quadrature.hpp"

namespace capa_isac {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

// Squared distance from the endpoint to aperture point (x, 0, z), expanded
// around the endpoint's direction cosines.
inline double distance_sq(double r, const DirectionCosines& d, double x, double z) {
    return x * x + z * z - 2.0 * r * (d.x * x + d.z * z) + r * r;
}

void check_spec(const QuadratureSpec& spec) {
    if (spec.cheby_n < 2)
        throw std::invalid_argument("quadrature spec: cheby_n must be >= 2");
    if (!(spec.oracle_rel_tol > 0.0) || spec.oracle_rel_tol > 1e-3)
        throw std::invalid_argument("quadrature spec: oracle_rel_tol must lie in (0, 1e-3]");
    if (spec.oracle_max_level < 1)
        throw std::invalid_argument("quadrature spec: oracle_max_level must be >= 1");
}

}  // namespace

std::complex<double> field_kernel(const Scene& scene, Endpoint which, double x, double z) {
    const PolarPosition& p = scene.position(which);
    const DirectionCosines& d = scene.cosines(which);
    const double k0 = scene.wavenumber();
    const double dist_sq = distance_sq(p.range(), d, x, z);
    const double amp = scene.wave_impedance() * k0 *
                       std::sqrt(p.range() * d.y / kFourPi) / std::pow(dist_sq, 0.75);
    const double phase = -k0 * std::sqrt(dist_sq);
    // Leading factor j rotates the phase by +pi/2.
    return {-amp * std::sin(phase), amp * std::cos(phase)};
}

double field_kernel_abs_sq(const Scene& scene, Endpoint which, double x, double z) {
    const PolarPosition& p = scene.position(which);
    const DirectionCosines& d = scene.cosines(which);
    const double k0 = scene.wavenumber();
    const double eta = scene.wave_impedance();
    const double dist_sq = distance_sq(p.range(), d, x, z);
    return eta * eta * k0 * k0 * p.range() * d.y /
           (kFourPi * dist_sq * std::sqrt(dist_sq));
}

double gain_closed_form(const Scene& scene, Endpoint which, Aperture face) {
    const PolarPosition& p = scene.position(which);
    const DirectionCosines& d = scene.cosines(which);
    const double r = p.range();
    const double y = d.y;
    const double x_ratio = scene.lx() / r;
    const double z_half = scene.lz() / (2.0 * r);

    const double xs[2] = {face == Aperture::Transmit ? d.x : -d.x,
                          face == Aperture::Transmit ? x_ratio - d.x : x_ratio + d.x};
    const double zs[2] = {z_half + d.z, z_half - d.z};

    KahanSum sum;
    for (double xv : xs)
        for (double zv : zs)
            sum.add(std::atan(xv * zv / (y * std::sqrt(y * y + xv * xv + zv * zv))));

    const double k0 = scene.wavenumber();
    const double eta = scene.wave_impedance();
    return eta * eta * k0 * k0 / kFourPi * sum.value();
}

ChannelGains closed_form_gains(const Scene& scene) {
    return ChannelGains{
        gain_closed_form(scene, Endpoint::Cu, Aperture::Transmit),
        gain_closed_form(scene, Endpoint::Cu, Aperture::Receive),
        gain_closed_form(scene, Endpoint::Target, Aperture::Transmit),
        gain_closed_form(scene, Endpoint::Target, Aperture::Receive),
    };
}

double gain_quadrature(const Scene& scene, Endpoint which, Aperture face,
                       const QuadratureSpec& spec) {
    check_spec(spec);
    const auto [x0, x1] = scene.aperture_x_span(face);
    const double zh = scene.lz() / 2.0;
    return integrate_rect(
        [&](double x, double z) { return field_kernel_abs_sq(scene, which, x, z); },
        x0, x1, -zh, zh, spec.oracle_rel_tol, spec.oracle_max_level);
}

std::complex<double> correlation_chebyshev(const Scene& scene, Aperture face, int node_count) {
    if (node_count < 2)
        throw std::invalid_argument("correlation_chebyshev: node_count must be >= 2");
    const int n = node_count;
    const double lx = scene.lx();
    const double lz = scene.lz();
    const double x_shift = face == Aperture::Transmit ? 1.0 : -1.0;

    std::vector<double> xi(n), weight(n);
    for (int i = 0; i < n; ++i) {
        xi[i] = std::cos((2.0 * i + 1.0) * std::numbers::pi / (2.0 * n));
        weight[i] = std::sqrt(1.0 - xi[i] * xi[i]);
    }

    KahanSum re, im;
    for (int i = 0; i < n; ++i) {
        const double x = (xi[i] + x_shift) * 0.5 * lx;
        for (int j = 0; j < n; ++j) {
            const double z = xi[j] * 0.5 * lz;
            const std::complex<double> v = std::conj(field_kernel(scene, Endpoint::Cu, x, z)) *
                                           field_kernel(scene, Endpoint::Target, x, z);
            const double w = weight[i] * weight[j];
            re.add(w * v.real());
            im.add(w * v.imag());
        }
    }
    const double scale =
        std::numbers::pi * std::numbers::pi * lx * lz / (4.0 * double(n) * double(n));
    return {scale * re.value(), scale * im.value()};
}

std::complex<double> correlation_quadrature(const Scene& scene, Aperture face,
                                            const QuadratureSpec& spec) {
    check_spec(spec);
    const auto [x0, x1] = scene.aperture_x_span(face);
    const double zh = scene.lz() / 2.0;
    return integrate_rect_complex(
        [&](double x, double z) {
            return std::conj(field_kernel(scene, Endpoint::Cu, x, z)) *
                   field_kernel(scene, Endpoint::Target, x, z);
        },
        x0, x1, -zh, zh, spec.oracle_rel_tol, spec.oracle_max_level);
}

Correlations channel_correlations(const Scene& scene, int node_count) {
    return Correlations{correlation_chebyshev(scene, Aperture::Transmit, node_count),
                        correlation_chebyshev(scene, Aperture::Receive, node_count)};
}

ChannelData compute_channel(const Scene& scene, int node_count) {
    return ChannelData{closed_form_gains(scene), channel_correlations(scene, node_count)};
}

}  // namespace capa_isac
