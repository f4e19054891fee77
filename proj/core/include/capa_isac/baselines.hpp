#ifndef CAPA_ISAC_BASELINES_HPP
#define CAPA_ISAC_BASELINES_HPP

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

#include "capa_isac/channel.hpp"
#include "capa_isac/rates.hpp"
#include "capa_isac/region.hpp"
#include "capa_isac/scene.hpp"

namespace capa_isac {

struct EmptyArrayError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Conventional discrete array occupying one array face: floor(Lx/d) by
/// floor(Lz/d) elements on a d-spaced grid, each contributing element_area
/// of collecting surface.
struct SpdaArray {
    std::vector<std::array<double, 2>> centers;  // (x, z) per element
    double element_area;
    double spacing;
};

/// Half-wavelength grid with the standard element size wavelength^2 / 4 pi.
SpdaArray build_spda(const Scene& scene, Aperture face);

/// Custom spacing/element size, used by convergence studies that shrink the
/// grid with full area coverage (element_area = spacing^2).
SpdaArray build_spda(const Scene& scene, Aperture face, double spacing, double element_area);

/// Discrete counterparts of the aperture integrals: the kernel is sampled at
/// each element center and weighted by the element area.
double spda_gain(const Scene& scene, const SpdaArray& array, Endpoint which);
std::complex<double> spda_correlation(const Scene& scene, const SpdaArray& array);

/// Gains and correlations for both faces under the default SPDA grid. The
/// rate formulas consume only these inner products, so the CAPA rate
/// functions apply unchanged to the result.
ChannelData spda_channel(const Scene& scene);

/// Resource split of the frequency-division baseline: kappa is the bandwidth
/// fraction given to sensing, iota the power fraction (downlink only).
struct FdsacSplit {
    double bandwidth_to_sensing;
    double power_to_sensing;
};

/// Downlink split rates; the kappa endpoints extend continuously (a function
/// with zero bandwidth has zero rate).
RatePair fdsac_dl_pair(const Scene& scene, const ChannelGains& gains, const FdsacSplit& split);

/// Region swept over a grid_n x grid_n (kappa, iota) grid, reduced to its
/// Pareto frontier. Frontier points carry kappa as their parameter.
RateRegion fdsac_dl_region(const Scene& scene, const ChannelGains& gains, int grid_n = 41);

/// Uplink splits only bandwidth.
RatePair fdsac_ul_pair(const Scene& scene, const ChannelGains& gains, double kappa);
RateRegion fdsac_ul_region(const Scene& scene, const ChannelGains& gains, int grid_n);

}  // namespace capa_isac

#endif
