#include "capa_isac/baselines.hpp"

#include <cmath>
#include <string>

#include "capa_isac/quadrature.hpp"

namespace capa_isac {

SpdaArray build_spda(const Scene& scene, Aperture face) {
    const double d = scene.wavelength() / 2.0;
    const double area = scene.wavelength() * scene.wavelength() / (4.0 * std::numbers::pi);
    return build_spda(scene, face, d, area);
}

SpdaArray build_spda(const Scene& scene, Aperture face, double spacing, double element_area) {
    if (!(spacing > 0.0) || !(element_area > 0.0))
        throw std::invalid_argument("build_spda: spacing and element_area must be > 0");
    const long nx = static_cast<long>(std::floor(scene.lx() / spacing));
    const long nz = static_cast<long>(std::floor(scene.lz() / spacing));
    if (nx < 1 || nz < 1)
        throw EmptyArrayError("build_spda: face shorter than one element spacing");
    const double x_offset = face == Aperture::Transmit ? 0.0 : -scene.lx();
    SpdaArray array;
    array.spacing = spacing;
    array.element_area = element_area;
    array.centers.reserve(static_cast<std::size_t>(nx * nz));
    for (long ix = 1; ix <= nx; ++ix) {
        const double x = (2.0 * ix - 1.0) / 2.0 * spacing + x_offset;
        for (long iz = 1; iz <= nz; ++iz) {
            const double z = (2.0 * iz - 1.0) / 2.0 * spacing - scene.lz() / 2.0;
            array.centers.push_back({x, z});
        }
    }
    return array;
}

double spda_gain(const Scene& scene, const SpdaArray& array, Endpoint which) {
    KahanSum sum;
    for (const auto& c : array.centers)
        sum.add(field_kernel_abs_sq(scene, which, c[0], c[1]));
    return array.element_area * sum.value();
}

std::complex<double> spda_correlation(const Scene& scene, const SpdaArray& array) {
    KahanSum re, im;
    for (const auto& c : array.centers) {
        const std::complex<double> v = std::conj(field_kernel(scene, Endpoint::Cu, c[0], c[1])) *
                                       field_kernel(scene, Endpoint::Target, c[0], c[1]);
        re.add(v.real());
        im.add(v.imag());
    }
    return {array.element_area * re.value(), array.element_area * im.value()};
}

ChannelData spda_channel(const Scene& scene) {
    const SpdaArray tx = build_spda(scene, Aperture::Transmit);
    const SpdaArray rx = build_spda(scene, Aperture::Receive);
    return ChannelData{
        ChannelGains{
            spda_gain(scene, tx, Endpoint::Cu),
            spda_gain(scene, rx, Endpoint::Cu),
            spda_gain(scene, tx, Endpoint::Target),
            spda_gain(scene, rx, Endpoint::Target),
        },
        Correlations{spda_correlation(scene, tx), spda_correlation(scene, rx)},
    };
}

namespace {

void check_fraction(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0))
        throw std::invalid_argument(std::string("fdsac: ") + name + " must lie in [0, 1]");
}

}  // namespace

RatePair fdsac_dl_pair(const Scene& scene, const ChannelGains& gains, const FdsacSplit& split) {
    const double kappa = split.bandwidth_to_sensing;
    const double iota = split.power_to_sensing;
    check_fraction(kappa, "kappa");
    check_fraction(iota, "iota");
    const EffectiveSnrs snr = effective_snrs(scene);
    const double l = static_cast<double>(scene.frame_len());
    double sr = 0.0;
    if (kappa > 0.0)
        sr = kappa / l *
             std::log2(1.0 + iota / kappa * l * snr.dl_sense * gains.target_tx * gains.target_rx);
    double cr = 0.0;
    if (kappa < 1.0)
        cr = (1.0 - kappa) *
             std::log2(1.0 + (1.0 - iota) / (1.0 - kappa) * snr.dl_comm * gains.cu_tx);
    return RatePair{sr, cr};
}

RateRegion fdsac_dl_region(const Scene& scene, const ChannelGains& gains, int grid_n) {
    if (grid_n < 2) throw std::invalid_argument("fdsac_dl_region: grid_n must be >= 2");
    std::vector<RegionPoint> points;
    points.reserve(static_cast<std::size_t>(grid_n) * grid_n);
    for (int i = 0; i < grid_n; ++i) {
        const double kappa = static_cast<double>(i) / (grid_n - 1);
        for (int j = 0; j < grid_n; ++j) {
            const double iota = static_cast<double>(j) / (grid_n - 1);
            points.push_back(
                {kappa, fdsac_dl_pair(scene, gains, FdsacSplit{kappa, iota})});
        }
    }
    return pareto_frontier(std::move(points));
}

RatePair fdsac_ul_pair(const Scene& scene, const ChannelGains& gains, double kappa) {
    check_fraction(kappa, "kappa");
    const EffectiveSnrs snr = effective_snrs(scene);
    const double l = static_cast<double>(scene.frame_len());
    double sr = 0.0;
    if (kappa > 0.0)
        sr = kappa / l *
             std::log2(1.0 + l * snr.ul_sense * gains.target_tx * gains.target_rx / kappa);
    double cr = 0.0;
    if (kappa < 1.0)
        cr = (1.0 - kappa) * std::log2(1.0 + snr.ul_comm * gains.cu_rx / (1.0 - kappa));
    return RatePair{sr, cr};
}

RateRegion fdsac_ul_region(const Scene& scene, const ChannelGains& gains, int grid_n) {
    if (grid_n < 2) throw std::invalid_argument("fdsac_ul_region: grid_n must be >= 2");
    std::vector<RegionPoint> points;
    points.reserve(static_cast<std::size_t>(grid_n));
    for (int i = 0; i < grid_n; ++i) {
        const double kappa = static_cast<double>(i) / (grid_n - 1);
        points.push_back({kappa, fdsac_ul_pair(scene, gains, kappa)});
    }
    return pareto_frontier(std::move(points));
}

}  // namespace capa_isac
