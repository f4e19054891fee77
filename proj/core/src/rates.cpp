#include "capa_isac/rates.hpp"

#include <cmath>
#include <stdexcept>

#include "capa_isac/parallel.hpp"

namespace capa_isac {

namespace {

inline double rate(double x) { return std::log2(1.0 + x); }

inline double pulse_rate(int frame_len, double x) {
    const double l = static_cast<double>(frame_len);
    return std::log2(1.0 + l * x) / l;
}

}  // namespace

EffectiveSnrs effective_snrs(const Scene& scene) {
    return EffectiveSnrs{
        scene.snr_dl_comm() * scene.cu_aperture_area(),
        scene.snr_dl_sense() * scene.mean_rcs(),
        scene.snr_ul_comm() * scene.cu_aperture_area(),
        scene.snr_ul_sense() * scene.mean_rcs(),
    };
}

double dl_comm_rate_cc(const Scene& scene, const ChannelGains& gains) {
    return rate(effective_snrs(scene).dl_comm * gains.cu_tx);
}

double dl_sensing_rate_cc(const Scene& scene, const ChannelGains& gains,
                          std::complex<double> rho_tx) {
    const double x =
        effective_snrs(scene).dl_sense * std::norm(rho_tx) * gains.target_rx / gains.cu_tx;
    return pulse_rate(scene.frame_len(), x);
}

double dl_sensing_rate_sc(const Scene& scene, const ChannelGains& gains) {
    return pulse_rate(scene.frame_len(),
                      effective_snrs(scene).dl_sense * gains.target_tx * gains.target_rx);
}

double dl_comm_rate_sc(const Scene& scene, const ChannelGains& gains,
                       std::complex<double> rho_tx) {
    return rate(effective_snrs(scene).dl_comm * std::norm(rho_tx) / gains.target_tx);
}

RatePair dl_pareto_pair(const Scene& scene, const ChannelGains& gains,
                        std::complex<double> rho_tx, double eps) {
    const SubspaceGeometry geo{gains.cu_tx, gains.target_tx, rho_tx};
    const BeamformingGains bg = achieved_gains(kkt_pareto(eps, geo), geo);
    const EffectiveSnrs snr = effective_snrs(scene);
    return RatePair{
        pulse_rate(scene.frame_len(), snr.dl_sense * bg.sense * gains.target_rx),
        rate(snr.dl_comm * bg.comm),
    };
}

RateRegion dl_rate_region(const Scene& scene, const ChannelGains& gains,
                          std::complex<double> rho_tx, int grid_n) {
    if (grid_n < 2) throw std::invalid_argument("dl_rate_region: grid_n must be >= 2");
    // eps ascending traces the boundary from the sensing corner (max SR) to
    // the comm corner (max CR), i.e. sorted by increasing CR.
    RateRegion region;
    region.boundary = parallel_map<RegionPoint>(grid_n, [&](long i) {
        const double eps = static_cast<double>(i) / (grid_n - 1);
        return RegionPoint{eps, dl_pareto_pair(scene, gains, rho_tx, eps)};
    });
    region.sensing_corner = 0;
    region.comm_corner = region.boundary.size() - 1;
    return region;
}

double ul_sensing_rate_cc(const Scene& scene, const ChannelGains& gains,
                          std::complex<double> rho_rx) {
    const EffectiveSnrs snr = effective_snrs(scene);
    const double detector_gain =
        rayleigh_quotient_max(gains.target_rx, gains.cu_rx, rho_rx, snr.ul_comm);
    return pulse_rate(scene.frame_len(), snr.ul_sense * gains.target_tx * detector_gain);
}

double ul_comm_rate_cc(const Scene& scene, const ChannelGains& gains) {
    return rate(effective_snrs(scene).ul_comm * gains.cu_rx);
}

double ul_comm_rate_sc(const Scene& scene, const ChannelGains& gains,
                       std::complex<double> rho_rx) {
    const EffectiveSnrs snr = effective_snrs(scene);
    const double detector_gain = rayleigh_quotient_max(gains.cu_rx, gains.target_rx, rho_rx,
                                                       snr.ul_sense * gains.target_tx);
    return rate(snr.ul_comm * detector_gain);
}

double ul_sensing_rate_sc(const Scene& scene, const ChannelGains& gains) {
    return pulse_rate(scene.frame_len(),
                      effective_snrs(scene).ul_sense * gains.target_tx * gains.target_rx);
}

RatePair ul_timeshare_pair(const Scene& scene, const ChannelGains& gains,
                           std::complex<double> rho_rx, double sigma) {
    if (!(sigma >= 0.0 && sigma <= 1.0))
        throw std::invalid_argument("ul_timeshare_pair: sigma must lie in [0, 1]");
    return RatePair{
        sigma * ul_sensing_rate_sc(scene, gains) +
            (1.0 - sigma) * ul_sensing_rate_cc(scene, gains, rho_rx),
        sigma * ul_comm_rate_sc(scene, gains, rho_rx) +
            (1.0 - sigma) * ul_comm_rate_cc(scene, gains),
    };
}

RateRegion ul_rate_region(const Scene& scene, const ChannelGains& gains,
                          std::complex<double> rho_rx, int grid_n) {
    if (grid_n < 2) throw std::invalid_argument("ul_rate_region: grid_n must be >= 2");
    // sigma descending: the sensing-centric corner (sigma = 1) has the lower
    // CR, so this orders the boundary by increasing CR.
    RateRegion region;
    region.boundary = parallel_map<RegionPoint>(grid_n, [&](long i) {
        const double sigma = 1.0 - static_cast<double>(i) / (grid_n - 1);
        return RegionPoint{sigma, ul_timeshare_pair(scene, gains, rho_rx, sigma)};
    });
    region.sensing_corner = 0;
    region.comm_corner = region.boundary.size() - 1;
    return region;
}

}  // namespace capa_isac
