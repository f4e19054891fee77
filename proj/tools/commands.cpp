#include "commands.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include "capa_isac/baselines.hpp"
#include "capa_isac/channel.hpp"
#include "capa_isac/parallel.hpp"
#include "capa_isac/rates.hpp"
#include "capa_isac/region.hpp"
#include "capa_isac/scene_io.hpp"
#include "csv.hpp"

namespace capa_isac::cli {

namespace {

constexpr int kRateCount = 20;

constexpr std::array<const char*, kRateCount> kRateNames = {
    "capa_dl_cc_cr", "capa_dl_cc_sr", "capa_dl_sc_cr", "capa_dl_sc_sr",
    "capa_ul_cc_cr", "capa_ul_cc_sr", "capa_ul_sc_cr", "capa_ul_sc_sr",
    "spda_dl_cc_cr", "spda_dl_cc_sr", "spda_dl_sc_cr", "spda_dl_sc_sr",
    "spda_ul_cc_cr", "spda_ul_cc_sr", "spda_ul_sc_cr", "spda_ul_sc_sr",
    "fdsac_dl_sr",   "fdsac_dl_cr",   "fdsac_ul_sr",   "fdsac_ul_cr",
};

std::array<double, 8> isac_rates(const Scene& scene, const ChannelData& ch) {
    return {
        dl_comm_rate_cc(scene, ch.gains),
        dl_sensing_rate_cc(scene, ch.gains, ch.corr.tx),
        dl_comm_rate_sc(scene, ch.gains, ch.corr.tx),
        dl_sensing_rate_sc(scene, ch.gains),
        ul_comm_rate_cc(scene, ch.gains),
        ul_sensing_rate_cc(scene, ch.gains, ch.corr.rx),
        ul_comm_rate_sc(scene, ch.gains, ch.corr.rx),
        ul_sensing_rate_sc(scene, ch.gains),
    };
}

std::array<double, kRateCount> compute_all_rates(const Scene& scene) {
    const ChannelData capa = compute_channel(scene);
    const ChannelData spda = spda_channel(scene);
    const std::array<double, 8> c = isac_rates(scene, capa);
    const std::array<double, 8> d = isac_rates(scene, spda);
    const RatePair fd = fdsac_dl_pair(scene, capa.gains, FdsacSplit{0.5, 0.5});
    const RatePair fu = fdsac_ul_pair(scene, capa.gains, 0.5);
    std::array<double, kRateCount> all{};
    for (int i = 0; i < 8; ++i) all[i] = c[i];
    for (int i = 0; i < 8; ++i) all[8 + i] = d[i];
    all[16] = fd.sr;
    all[17] = fd.cr;
    all[18] = fu.sr;
    all[19] = fu.cr;
    return all;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file '" + path + "'");
    f << text;
}

void emit(const std::string& csv, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        out << csv;
    else
        write_file(out_path, csv);
}

}  // namespace

int cmd_rates(const RatesOptions& opt, std::ostream& out) {
    const Scene scene = load_scene_config(opt.config_path);
    const std::array<double, kRateCount> all = compute_all_rates(scene);

    std::ostringstream csv;
    csv << "metric,bits_per_channel_use\n";
    for (int i = 0; i < kRateCount; ++i)
        csv << kRateNames[i] << "," << fmt_value(all[i]) << "\n";

    out << "rates (bits per channel use)\n";
    for (int i = 0; i < kRateCount; ++i)
        out << "  " << std::left << std::setw(16) << kRateNames[i] << " "
            << fmt_value(all[i]) << "\n";
    if (!opt.out_path.empty()) write_file(opt.out_path, csv.str());
    return kExitOk;
}

int cmd_sweep(const SweepOptions& opt, std::ostream& out) {
    if (opt.steps < 2) throw ConfigError("sweep: --steps must be >= 2");
    if (!(opt.start < opt.stop)) throw ConfigError("sweep: --start must be < --stop");
    const Scene base = load_scene_config(opt.config_path);

    const auto scene_at = [&](double v) {
        SceneParams p = base.params();
        if (opt.axis == SweepAxis::SnrDb) {
            const double linear = std::pow(10.0, v / 10.0);
            p.snr_dl_comm = p.snr_dl_sense = p.snr_ul_comm = p.snr_ul_sense = linear;
        } else {
            p.lx = p.lz = v;  // square faces along the aperture sweep
        }
        return Scene(p);
    };

    using Row = std::array<double, kRateCount + 1>;
    const std::vector<Row> rows = parallel_map<Row>(opt.steps, [&](long i) {
        const double v = opt.start + (opt.stop - opt.start) * i / (opt.steps - 1);
        const std::array<double, kRateCount> rates = compute_all_rates(scene_at(v));
        Row row{};
        row[0] = opt.axis == SweepAxis::ApertureSide ? v * v : v;  // report area in m^2
        for (int k = 0; k < kRateCount; ++k) row[k + 1] = rates[k];
        return row;
    });

    std::ostringstream csv;
    csv << (opt.axis == SweepAxis::SnrDb ? "snr_db" : "aperture_m2");
    for (const char* name : kRateNames) csv << "," << name;
    csv << "\n";
    for (const Row& row : rows) {
        csv << fmt_value(row[0]);
        for (int k = 0; k < kRateCount; ++k) csv << "," << fmt_value(row[k + 1]);
        csv << "\n";
    }
    emit(csv.str(), opt.out_path, out);
    return kExitOk;
}

int cmd_region(const RegionOptions& opt, std::ostream& out) {
    if (opt.grid_n < 2) throw ConfigError("region: --grid must be >= 2");
    const Scene scene = load_scene_config(opt.config_path);
    const ChannelData capa = compute_channel(scene);
    const ChannelData spda = spda_channel(scene);

    RateRegion capa_region, spda_region, fdsac_region;
    if (opt.uplink) {
        capa_region = ul_rate_region(scene, capa.gains, capa.corr.rx, opt.grid_n);
        spda_region = ul_rate_region(scene, spda.gains, spda.corr.rx, opt.grid_n);
        fdsac_region = fdsac_ul_region(scene, capa.gains, opt.grid_n);
    } else {
        capa_region = dl_rate_region(scene, capa.gains, capa.corr.tx, opt.grid_n);
        spda_region = dl_rate_region(scene, spda.gains, spda.corr.tx, opt.grid_n);
        fdsac_region = fdsac_dl_region(scene, capa.gains, opt.grid_n);
    }

    std::ostringstream csv;
    csv << "system,param,sr,cr\n";
    const auto rows = [&](const char* name, const RateRegion& region) {
        for (const RegionPoint& p : region.boundary)
            csv << name << "," << fmt_value(p.param) << "," << fmt_value(p.rates.sr) << ","
                << fmt_value(p.rates.cr) << "\n";
    };
    rows("capa_isac", capa_region);
    rows("spda_isac", spda_region);
    rows("fdsac", fdsac_region);

    const bool spda_in = region_covers(capa_region, spda_region);
    const bool fdsac_in = region_covers(capa_region, fdsac_region);
    const RatePair sc = capa_region.boundary[capa_region.sensing_corner].rates;
    const RatePair cc = capa_region.boundary[capa_region.comm_corner].rates;
    const double gap = std::hypot(sc.sr - cc.sr, sc.cr - cc.cr);
    csv << "# spda_isac within capa_isac: " << (spda_in ? "true" : "false") << "\n";
    csv << "# fdsac within capa_isac: " << (fdsac_in ? "true" : "false") << "\n";
    csv << "# capa corner gap (bits): " << fmt_value(gap) << "\n";

    emit(csv.str(), opt.out_path, out);
    return kExitOk;
}

int cmd_dump_kernel(const DumpKernelOptions& opt, std::ostream& out) {
    if (opt.grid_n < 2) throw ConfigError("dump-kernel: --grid must be >= 2");
    const Scene scene = load_scene_config(opt.config_path);
    std::ostringstream csv;
    csv << "kernel,x_m,z_m,re,im\n";
    const int n = opt.grid_n;
    for (const Endpoint which : {Endpoint::Cu, Endpoint::Target}) {
        const char* name = which == Endpoint::Cu ? "cu" : "target";
        for (int i = 0; i < n; ++i) {
            const double x = -scene.lx() + 2.0 * scene.lx() * i / (n - 1);
            for (int j = 0; j < n; ++j) {
                const double z = -scene.lz() / 2.0 + scene.lz() * j / (n - 1);
                const std::complex<double> v = field_kernel(scene, which, x, z);
                csv << name << "," << fmt_value(x) << "," << fmt_value(z) << ","
                    << fmt_value(v.real()) << "," << fmt_value(v.imag()) << "\n";
            }
        }
    }
    emit(csv.str(), opt.out_path, out);
    return kExitOk;
}

}  // namespace capa_isac::cli
