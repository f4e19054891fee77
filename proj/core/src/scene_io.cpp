#include "capa_isac/scene_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace capa_isac {

namespace {

struct RawEntry {
    std::string value;
    int line;
};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const std::map<std::string, RawEntry>& entries, const std::string& key) {
    const auto it = entries.find(key);
    if (it == entries.end()) throw ConfigError("missing required key '" + key + "'");
    const std::string& text = it->second.value;
    std::size_t consumed = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &consumed);
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': not a number: '" + text + "'", it->second.line);
    }
    if (consumed != text.size() || !std::isfinite(v))
        throw ConfigError("key '" + key + "': not a finite number: '" + text + "'",
                          it->second.line);
    return v;
}

int parse_positive_int(const std::map<std::string, RawEntry>& entries, const std::string& key) {
    const double v = parse_number(entries, key);
    const int n = static_cast<int>(v);
    if (v != static_cast<double>(n) || n < 1)
        throw ConfigError("key '" + key + "': expected a positive integer",
                          entries.at(key).line);
    return n;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

std::string fmt_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

constexpr const char* kRequiredKeys[] = {
    "lambda_m",     "lx_m",          "lz_m",          "cu.r_m",      "cu.theta_rad",
    "cu.phi_rad",   "target.r_m",    "target.theta_rad", "target.phi_rad",
    "snr_dl_c_db",  "snr_dl_s_db",   "snr_ul_c_db",   "snr_ul_s_db", "frame_len",
    "alpha_s",
};

bool known_key(const std::string& key) {
    for (const char* k : kRequiredKeys)
        if (key == k) return true;
    return key == "cu_aperture_area_m2";
}

}  // namespace

Scene parse_scene_config(const std::string& text) {
    std::map<std::string, RawEntry> entries;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected 'key = value', got '" + line + "'", line_no);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("expected 'key = value', got '" + line + "'", line_no);
        if (!known_key(key)) throw ConfigError("unknown key '" + key + "'", line_no);
        if (!entries.emplace(key, RawEntry{value, line_no}).second)
            throw ConfigError("duplicate key '" + key + "'", line_no);
    }

    SceneParams p;
    p.wavelength = parse_number(entries, "lambda_m");
    p.lx = parse_number(entries, "lx_m");
    p.lz = parse_number(entries, "lz_m");
    try {
        p.cu = PolarPosition(parse_number(entries, "cu.r_m"),
                             parse_number(entries, "cu.theta_rad"),
                             parse_number(entries, "cu.phi_rad"));
        p.target = PolarPosition(parse_number(entries, "target.r_m"),
                                 parse_number(entries, "target.theta_rad"),
                                 parse_number(entries, "target.phi_rad"));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    p.snr_dl_comm = db_to_linear(parse_number(entries, "snr_dl_c_db"));
    p.snr_dl_sense = db_to_linear(parse_number(entries, "snr_dl_s_db"));
    p.snr_ul_comm = db_to_linear(parse_number(entries, "snr_ul_c_db"));
    p.snr_ul_sense = db_to_linear(parse_number(entries, "snr_ul_s_db"));
    p.frame_len = parse_positive_int(entries, "frame_len");
    p.mean_rcs = parse_number(entries, "alpha_s");
    if (entries.count("cu_aperture_area_m2"))
        p.cu_aperture_area = parse_number(entries, "cu_aperture_area_m2");
    else
        p.cu_aperture_area =
            p.wavelength * p.wavelength / (4.0 * std::numbers::pi);

    try {
        return Scene(p);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

Scene load_scene_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scene_config(buf.str());
}

std::string write_scene_config(const Scene& scene) {
    const SceneParams& p = scene.params();
    std::ostringstream out;
    out << "lambda_m = " << fmt_full(p.wavelength) << "\n"
        << "lx_m = " << fmt_full(p.lx) << "\n"
        << "lz_m = " << fmt_full(p.lz) << "\n"
        << "cu.r_m = " << fmt_full(p.cu.range()) << "\n"
        << "cu.theta_rad = " << fmt_full(p.cu.theta()) << "\n"
        << "cu.phi_rad = " << fmt_full(p.cu.phi()) << "\n"
        << "target.r_m = " << fmt_full(p.target.range()) << "\n"
        << "target.theta_rad = " << fmt_full(p.target.theta()) << "\n"
        << "target.phi_rad = " << fmt_full(p.target.phi()) << "\n"
        << "snr_dl_c_db = " << fmt_full(linear_to_db(p.snr_dl_comm)) << "\n"
        << "snr_dl_s_db = " << fmt_full(linear_to_db(p.snr_dl_sense)) << "\n"
        << "snr_ul_c_db = " << fmt_full(linear_to_db(p.snr_ul_comm)) << "\n"
        << "snr_ul_s_db = " << fmt_full(linear_to_db(p.snr_ul_sense)) << "\n"
        << "frame_len = " << p.frame_len << "\n"
        << "alpha_s = " << fmt_full(p.mean_rcs) << "\n"
        << "cu_aperture_area_m2 = " << fmt_full(p.cu_aperture_area) << "\n";
    return out.str();
}

}  // namespace capa_isac
