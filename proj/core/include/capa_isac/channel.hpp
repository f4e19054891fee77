#ifndef CAPA_ISAC_CHANNEL_HPP
#define CAPA_ISAC_CHANNEL_HPP

#include <complex>

#include "capa_isac/scene.hpp"

namespace capa_isac {

/// Accuracy knobs for the quadrature paths: cheby_n is the node count per
/// axis of the Chebyshev-Gauss correlation rule; the oracle fields control
/// the adaptive Gauss-Legendre integrator used for cross checks.
struct QuadratureSpec {
    int cheby_n = 200;
    double oracle_rel_tol = 1e-12;  // must lie in (0, 1e-3]
    int oracle_max_level = 8;
};

/// The four line-of-sight aperture power gains: each is the integral of the
/// squared field kernel of one endpoint over one array face.
struct ChannelGains {
    double cu_tx;      // CU kernel over the transmit face (downlink channel)
    double cu_rx;      // CU kernel over the receive face (uplink channel)
    double target_tx;  // target kernel over the transmit face
    double target_rx;  // target kernel over the receive face

    double at(Endpoint e, Aperture a) const {
        if (e == Endpoint::Cu) return a == Aperture::Transmit ? cu_tx : cu_rx;
        return a == Aperture::Transmit ? target_tx : target_rx;
    }
};

/// CU/target kernel overlap integral per array face; tx drives the downlink
/// beamforming trade-off, rx the uplink interference between functions.
struct Correlations {
    std::complex<double> tx;
    std::complex<double> rx;
};

struct ChannelData {
    ChannelGains gains;
    Correlations corr;
};

/// Radiating-field kernel of one endpoint evaluated at aperture point
/// (x, 0, z). With D the squared endpoint-to-point distance, the value is
/// eta k0 sqrt(r Psi / 4 pi) / D^(3/4) at phase pi/2 - k0 sqrt(D); the
/// reactive near-field terms of the full Green's function are dropped.
std::complex<double> field_kernel(const Scene& scene, Endpoint which, double x, double z);

/// |field_kernel|^2 without the complex exponential round trip.
double field_kernel_abs_sq(const Scene& scene, Endpoint which, double x, double z);

/// Closed-form gain: (eta^2 k0^2 / 4 pi) * sum of four signed arctan terms
/// determined by the endpoint direction and the face's x span. Terms are
/// summed in the fixed set order (x outer, z inner) with compensated
/// summation; individual terms may be negative, the sum is positive.
double gain_closed_form(const Scene& scene, Endpoint which, Aperture face);

ChannelGains closed_form_gains(const Scene& scene);

/// Independent cross check: adaptive Gauss-Legendre integration of the
/// squared kernel over the face. Throws NonConvergence per QuadratureSpec.
double gain_quadrature(const Scene& scene, Endpoint which, Aperture face,
                       const QuadratureSpec& spec = {});

/// Chebyshev-Gauss evaluation of the kernel overlap
/// integral(conj(cu kernel) * target kernel) over one face, with node_count
/// nodes per axis. Converges as node_count^-2 (the endpoint weight
/// compensation is non-polynomial).
std::complex<double> correlation_chebyshev(const Scene& scene, Aperture face, int node_count);

/// Adaptive Gauss-Legendre cross check of the same overlap integral; real
/// and imaginary parts are accumulated separately.
std::complex<double> correlation_quadrature(const Scene& scene, Aperture face,
                                            const QuadratureSpec& spec = {});

Correlations channel_correlations(const Scene& scene, int node_count = 200);

/// Closed-form gains plus Chebyshev-Gauss correlations in one bundle.
ChannelData compute_channel(const Scene& scene, int node_count = 200);

}  // namespace capa_isac

#endif
