#ifndef CAPA_ISAC_SCENE_HPP
#define CAPA_ISAC_SCENE_HPP

#include <numbers>
#include <utility>

namespace capa_isac {

/// Spherical position relative to the array origin. Angles are radians:
/// theta (elevation from +z) and phi (azimuth from +x) both lie in [0, pi],
/// so positions are restricted to the half space in front of the array.
class PolarPosition {
public:
    PolarPosition(double range_m, double theta_rad, double phi_rad);

    double range() const { return range_; }
    double theta() const { return theta_; }
    double phi() const { return phi_; }

private:
    double range_;
    double theta_;
    double phi_;
};

/// Unit direction vector (x, y, z) of a polar position.
struct DirectionCosines {
    double x;  // cos(phi) sin(theta)
    double y;  // sin(phi) sin(theta), >= 0 for phi, theta in [0, pi]
    double z;  // cos(theta)
};

struct Point3 {
    double x;
    double y;
    double z;
};

DirectionCosines direction_cosines(const PolarPosition& p);

/// Cartesian center of an endpoint: range * direction cosines.
Point3 cartesian_center(const PolarPosition& p);

/// The two rectangular array faces on the xz plane. The transmit face spans
/// x in [0, Lx], the receive face x in [-Lx, 0]; both span z in [-Lz/2, Lz/2].
enum class Aperture { Transmit, Receive };

/// The two off-array endpoints of the scene.
enum class Endpoint { Cu, Target };

/// All physical inputs. Field defaults are the stock simulation setup
/// (wavelength 0.125 m, 0.5 m square faces, 10 dB SNRs, 8-symbol frames).
/// SNR fields are linear power ratios; dB belongs to the CLI/config layer.
struct SceneParams {
    double wavelength = 0.125;               // m
    double lx = 0.5;                          // m, edge along x per face
    double lz = 0.5;                          // m, edge along z
    PolarPosition cu{20.0, std::numbers::pi / 3.0, std::numbers::pi / 3.0};
    PolarPosition target{10.0, std::numbers::pi / 4.0, std::numbers::pi / 4.0};
    double cu_aperture_area = 0.125 * 0.125 / (4.0 * std::numbers::pi);  // m^2
    double snr_dl_comm = 10.0;                // P / sigma_c^2
    double snr_dl_sense = 10.0;               // P / sigma_s^2
    double snr_ul_comm = 10.0;                // P_c / sigma^2
    double snr_ul_sense = 10.0;               // P_s / sigma^2
    int frame_len = 8;                        // symbols per frame, >= 1
    double mean_rcs = 1.0;                    // average target reflection strength
    double wave_impedance = 120.0 * std::numbers::pi;  // ohm
};

/// Validated, immutable scene. Construction rejects non-positive dimensions,
/// SNRs, frame lengths, and endpoints lying in the array plane (y-cosine 0),
/// where the projected-aperture factor of the channel kernels vanishes.
/// Safe to share read-only across threads.
class Scene {
public:
    explicit Scene(const SceneParams& params);

    const SceneParams& params() const { return params_; }

    double wavelength() const { return params_.wavelength; }
    double wavenumber() const { return 2.0 * std::numbers::pi / params_.wavelength; }
    double lx() const { return params_.lx; }
    double lz() const { return params_.lz; }
    double cu_aperture_area() const { return params_.cu_aperture_area; }
    double snr_dl_comm() const { return params_.snr_dl_comm; }
    double snr_dl_sense() const { return params_.snr_dl_sense; }
    double snr_ul_comm() const { return params_.snr_ul_comm; }
    double snr_ul_sense() const { return params_.snr_ul_sense; }
    int frame_len() const { return params_.frame_len; }
    double mean_rcs() const { return params_.mean_rcs; }
    double wave_impedance() const { return params_.wave_impedance; }

    const PolarPosition& position(Endpoint which) const {
        return which == Endpoint::Cu ? params_.cu : params_.target;
    }
    const DirectionCosines& cosines(Endpoint which) const {
        return which == Endpoint::Cu ? cu_cosines_ : target_cosines_;
    }

    /// x extent [lo, hi] of one array face; z always spans [-lz/2, lz/2].
    std::pair<double, double> aperture_x_span(Aperture which) const {
        return which == Aperture::Transmit ? std::pair{0.0, params_.lx}
                                           : std::pair{-params_.lx, 0.0};
    }

private:
    SceneParams params_;
    DirectionCosines cu_cosines_;
    DirectionCosines target_cosines_;
};

Scene default_scene();

}  // namespace capa_isac

#endif
