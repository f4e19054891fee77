#ifndef CAPA_ISAC_RATES_HPP
#define CAPA_ISAC_RATES_HPP

#include <complex>

#include "capa_isac/channel.hpp"
#include "capa_isac/region.hpp"
#include "capa_isac/scene.hpp"
#include "capa_isac/subspace.hpp"

namespace capa_isac {

/// SNR factors the rate formulas actually consume, derived from the scene:
/// the comm ones absorb the CU aperture area, the sensing ones the mean RCS.
struct EffectiveSnrs {
    double dl_comm;   // transmit SNR times CU aperture area
    double dl_sense;  // transmit SNR times mean RCS
    double ul_comm;   // CU transmit SNR times CU aperture area
    double ul_sense;  // probe SNR times mean RCS
};

EffectiveSnrs effective_snrs(const Scene& scene);

// --- downlink, single dual-function beam ---------------------------------

/// Comm-centric beam (matched to the CU channel): CR log2(1 + snr * g_cu_tx).
double dl_comm_rate_cc(const Scene& scene, const ChannelGains& gains);

/// Sensing rate under the comm-centric beam; rho_tx is the transmit-face
/// correlation, whose magnitude sets how much energy the beam leaks onto the
/// target: (1/L) log2(1 + L snr |rho|^2 g_target_rx / g_cu_tx).
double dl_sensing_rate_cc(const Scene& scene, const ChannelGains& gains,
                          std::complex<double> rho_tx);

/// Sensing-centric beam: SR (1/L) log2(1 + L snr g_target_tx g_target_rx).
double dl_sensing_rate_sc(const Scene& scene, const ChannelGains& gains);

/// Comm rate under the sensing-centric beam:
/// log2(1 + snr |rho|^2 / g_target_tx).
double dl_comm_rate_sc(const Scene& scene, const ChannelGains& gains,
                       std::complex<double> rho_tx);

/// Rates of the Pareto-optimal beam at trade-off eps; eps = 1 reproduces the
/// comm-centric pair, eps = 0 the sensing-centric pair.
RatePair dl_pareto_pair(const Scene& scene, const ChannelGains& gains,
                        std::complex<double> rho_tx, double eps);

/// Boundary sampled at grid_n uniform eps values (inclusive endpoints).
RateRegion dl_rate_region(const Scene& scene, const ChannelGains& gains,
                          std::complex<double> rho_tx, int grid_n);

// --- uplink, two interference-cancellation orders ------------------------

/// Comm-centric order: sensing decoded first against comm interference.
/// rho_rx is the receive-face correlation.
double ul_sensing_rate_cc(const Scene& scene, const ChannelGains& gains,
                          std::complex<double> rho_rx);

/// Comm decoded interference-free after subtraction.
double ul_comm_rate_cc(const Scene& scene, const ChannelGains& gains);

/// Sensing-centric order: comm decoded first against sensing interference.
double ul_comm_rate_sc(const Scene& scene, const ChannelGains& gains,
                       std::complex<double> rho_rx);

/// Sensing decoded interference-free after subtraction.
double ul_sensing_rate_sc(const Scene& scene, const ChannelGains& gains);

/// Time sharing between the two orders: sensing-centric with weight sigma.
RatePair ul_timeshare_pair(const Scene& scene, const ChannelGains& gains,
                           std::complex<double> rho_rx, double sigma);

RateRegion ul_rate_region(const Scene& scene, const ChannelGains& gains,
                          std::complex<double> rho_rx, int grid_n);

}  // namespace capa_isac

#endif
