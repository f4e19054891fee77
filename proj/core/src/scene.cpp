#include "capa_isac/scene.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace capa_isac {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

PolarPosition::PolarPosition(double range_m, double theta_rad, double phi_rad)
    : range_(range_m), theta_(theta_rad), phi_(phi_rad) {
    require(std::isfinite(range_m) && range_m > 0.0, "polar position: range must be > 0");
    require(std::isfinite(theta_rad) && theta_rad >= 0.0 && theta_rad <= std::numbers::pi,
            "polar position: theta must lie in [0, pi]");
    require(std::isfinite(phi_rad) && phi_rad >= 0.0 && phi_rad <= std::numbers::pi,
            "polar position: phi must lie in [0, pi]");
}

DirectionCosines direction_cosines(const PolarPosition& p) {
    const double st = std::sin(p.theta());
    return DirectionCosines{std::cos(p.phi()) * st, std::sin(p.phi()) * st,
                            std::cos(p.theta())};
}

Point3 cartesian_center(const PolarPosition& p) {
    const DirectionCosines d = direction_cosines(p);
    return Point3{p.range() * d.x, p.range() * d.y, p.range() * d.z};
}

Scene::Scene(const SceneParams& params)
    : params_(params),
      cu_cosines_(direction_cosines(params.cu)),
      target_cosines_(direction_cosines(params.target)) {
    require(std::isfinite(params.wavelength) && params.wavelength > 0.0, "scene: wavelength must be > 0");
    require(std::isfinite(params.lx) && params.lx > 0.0, "scene: lx must be > 0");
    require(std::isfinite(params.lz) && params.lz > 0.0, "scene: lz must be > 0");
    require(std::isfinite(params.cu_aperture_area) && params.cu_aperture_area > 0.0,
            "scene: cu_aperture_area must be > 0");
    require(params.snr_dl_comm > 0.0, "scene: snr_dl_comm must be > 0");
    require(params.snr_dl_sense > 0.0, "scene: snr_dl_sense must be > 0");
    require(params.snr_ul_comm > 0.0, "scene: snr_ul_comm must be > 0");
    require(params.snr_ul_sense > 0.0, "scene: snr_ul_sense must be > 0");
    require(params.frame_len >= 1, "scene: frame_len must be >= 1");
    require(std::isfinite(params.mean_rcs) && params.mean_rcs > 0.0, "scene: mean_rcs must be > 0");
    require(std::isfinite(params.wave_impedance) && params.wave_impedance > 0.0,
            "scene: wave_impedance must be > 0");
    // Endpoints in the array plane make the projected aperture vanish and the
    // closed-form gains divide by zero; reject them outright.
    require(cu_cosines_.y > 0.0, "scene: CU lies in the array plane (sin(phi) sin(theta) = 0)");
    require(target_cosines_.y > 0.0,
            "scene: target lies in the array plane (sin(phi) sin(theta) = 0)");
}

Scene default_scene() { return Scene(SceneParams{}); }

}  // namespace capa_isac
