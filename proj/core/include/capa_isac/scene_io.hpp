#ifndef CAPA_ISAC_SCENE_IO_HPP
#define CAPA_ISAC_SCENE_IO_HPP

#include <stdexcept>
#include <string>

#include "capa_isac/scene.hpp"

namespace capa_isac {

/// Raised for malformed or invalid scene configs; line is 0 when the error
/// is not tied to a specific line (e.g. a missing key).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& message, int line_no = 0)
        : std::runtime_error(line_no > 0
                                 ? "line " + std::to_string(line_no) + ": " + message
                                 : message),
          line(line_no) {}
    int line;
};

/// Parses the flat key-value scene config (one `key = value` per line, `#`
/// comments). Keys: lambda_m, lx_m, lz_m, cu.r_m, cu.theta_rad, cu.phi_rad,
/// target.r_m, target.theta_rad, target.phi_rad, snr_dl_c_db, snr_dl_s_db,
/// snr_ul_c_db, snr_ul_s_db, frame_len, alpha_s, and optionally
/// cu_aperture_area_m2 (default lambda^2 / 4 pi). Unknown keys, duplicate
/// keys, and missing required keys are errors. SNRs convert from dB to
/// linear here; angles are radians throughout.
Scene parse_scene_config(const std::string& text);

Scene load_scene_config(const std::string& path);

/// Emits a config that parses back to the same scene (fields agree to within
/// the dB/linear conversion round trip, i.e. a few ulps).
std::string write_scene_config(const Scene& scene);

}  // namespace capa_isac

#endif
