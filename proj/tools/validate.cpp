#include <algorithm>
#include <cmath>
#include <complex>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "capa_isac/baselines.hpp"
#include "capa_isac/channel.hpp"
#include "capa_isac/rates.hpp"
#include "capa_isac/region.hpp"
#include "capa_isac/scene_io.hpp"
#include "capa_isac/scene_sampler.hpp"
#include "capa_isac/subspace.hpp"
#include "commands.hpp"
#include "csv.hpp"

namespace capa_isac::cli {

namespace {

struct Reporter {
    std::ostream& out;
    int failures = 0;

    void check(bool ok, const std::string& name, const std::string& detail = {}) {
        out << (ok ? "[ok]   " : "[FAIL] ") << name;
        if (!detail.empty()) out << "  (" << detail << ")";
        out << "\n";
        if (!ok) ++failures;
    }
    void info(const std::string& name, double value) {
        out << "[info] " << name << " = " << fmt_value(value) << "\n";
    }
};

double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Largest generalized eigenvalue of the pencil (a a^H, scale h h^H + I) in
// the 2-D Gram-Schmidt embedding, found from det(A - lambda B) = 0. This is
// a numeric route independent of the matrix-inversion closed form.
double eigen_oracle(double a_norm_sq, double h_norm_sq, std::complex<double> cross,
                    double scale) {
    using C = std::complex<double>;
    const C a0{std::sqrt(a_norm_sq), 0.0};
    const C h0 = std::conj(cross) / std::sqrt(a_norm_sq);
    const C h1{std::sqrt(std::max(0.0, h_norm_sq - std::norm(h0))), 0.0};
    const C A00 = a0 * std::conj(a0), A01 = a0 * 0.0, A10 = 0.0 * std::conj(a0), A11 = 0.0;
    const C B00 = scale * h0 * std::conj(h0) + 1.0;
    const C B01 = scale * h0 * std::conj(h1);
    const C B10 = scale * h1 * std::conj(h0);
    const C B11 = scale * h1 * std::conj(h1) + 1.0;
    const double c2 = (B00 * B11 - B01 * B10).real();
    const double c1 = -(A00 * B11 + A11 * B00 - A01 * B10 - A10 * B01).real();
    const double c0 = (A00 * A11 - A01 * A10).real();
    const double disc = std::sqrt(std::max(0.0, c1 * c1 - 4.0 * c2 * c0));
    return (-c1 + disc) / (2.0 * c2);
}

double kkt_objective(double eps, const SubspaceGeometry& geo) {
    const BeamformingGains g = achieved_gains(kkt_pareto(eps, geo), geo);
    double v = std::numeric_limits<double>::infinity();
    if (eps > 0.0) v = std::min(v, g.comm / eps);
    if (eps < 1.0) v = std::min(v, g.sense / (1.0 - eps));
    return v;
}

}  // namespace

int cmd_validate(const ValidateOptions& opt, std::ostream& out) {
    const Scene scene = opt.config_path.empty() ? default_scene()
                                                : load_scene_config(opt.config_path);
    std::mt19937_64 rng(opt.seed);
    Reporter rep{out};
    const QuadratureSpec spec;

    // Closed-form gains against the adaptive quadrature, default scene plus
    // random draws. --perturb-gains injects a relative fault here.
    {
        double worst = 0.0;
        std::vector<Scene> scenes;
        scenes.push_back(scene);
        for (int i = 0; i < 20; ++i) scenes.push_back(sample_scene(rng));
        for (const Scene& s : scenes) {
            for (const Endpoint e : {Endpoint::Cu, Endpoint::Target}) {
                for (const Aperture a : {Aperture::Transmit, Aperture::Receive}) {
                    const double closed =
                        gain_closed_form(s, e, a) * (1.0 + opt.perturb_gains);
                    worst = std::max(worst, rel_diff(closed, gain_quadrature(s, e, a, spec)));
                }
            }
        }
        rep.check(worst < 1e-9, "gains: closed form vs quadrature (21 scenes)",
                  "worst rel " + fmt_value(worst));
    }

    const ChannelGains gains = closed_form_gains(scene);
    const std::complex<double> rho_tx_oracle = correlation_quadrature(scene, Aperture::Transmit);
    const std::complex<double> rho_rx_oracle = correlation_quadrature(scene, Aperture::Receive);

    // Chebyshev-Gauss correlation: the rule settles as n^-2, so at n = 200 a
    // ~1e-4 modulus agreement with the quadrature is its native accuracy.
    {
        const std::complex<double> c = correlation_chebyshev(scene, Aperture::Transmit, 200);
        const double mod_err = rel_diff(std::abs(c), std::abs(rho_tx_oracle));
        const double ph_err = std::abs(std::arg(c) - std::arg(rho_tx_oracle));
        rep.info("correlation tx: cheby(200) modulus rel err", mod_err);
        rep.info("correlation tx: cheby(200) phase abs err", ph_err);
        rep.check(mod_err < 1e-4 && ph_err < 1e-5,
                  "correlation: cheby(200) within rule accuracy of quadrature");

        double prev_inc = -1.0;
        bool geometric = true;
        std::complex<double> prev = correlation_chebyshev(scene, Aperture::Transmit, 50);
        for (int n : {100, 200, 400, 800}) {
            const std::complex<double> cur = correlation_chebyshev(scene, Aperture::Transmit, n);
            const double inc = std::abs(cur - prev);
            if (prev_inc >= 0.0 && inc > 0.6 * prev_inc) geometric = false;
            prev_inc = inc;
            prev = cur;
        }
        rep.check(geometric, "correlation: node-doubling increments shrink geometrically");
    }

    // Cauchy-Schwarz for both faces, continuous and discrete.
    {
        const ChannelData spda = spda_channel(scene);
        const bool capa_ok =
            std::norm(rho_tx_oracle) <= gains.cu_tx * gains.target_tx &&
            std::norm(rho_rx_oracle) <= gains.cu_rx * gains.target_rx;
        const bool spda_ok =
            std::norm(spda.corr.tx) <= spda.gains.cu_tx * spda.gains.target_tx &&
            std::norm(spda.corr.rx) <= spda.gains.cu_rx * spda.gains.target_rx;
        rep.check(capa_ok && spda_ok, "correlations satisfy Cauchy-Schwarz");
        rep.info("|rho_rx|^2 / (g_target_tx * g_cu_rx)",
                 std::norm(rho_rx_oracle) / (gains.target_tx * gains.cu_rx));
    }

    // Endpoint and limit identities, exact up to rounding.
    {
        const RatePair p1 = dl_pareto_pair(scene, gains, rho_tx_oracle, 1.0);
        const RatePair p0 = dl_pareto_pair(scene, gains, rho_tx_oracle, 0.0);
        double worst = 0.0;
        worst = std::max(worst, rel_diff(p1.cr, dl_comm_rate_cc(scene, gains)));
        worst = std::max(worst, rel_diff(p1.sr, dl_sensing_rate_cc(scene, gains, rho_tx_oracle)));
        worst = std::max(worst, rel_diff(p0.sr, dl_sensing_rate_sc(scene, gains)));
        worst = std::max(worst, rel_diff(p0.cr, dl_comm_rate_sc(scene, gains, rho_tx_oracle)));

        const RatePair t1 = ul_timeshare_pair(scene, gains, rho_rx_oracle, 1.0);
        const RatePair t0 = ul_timeshare_pair(scene, gains, rho_rx_oracle, 0.0);
        worst = std::max(worst, rel_diff(t1.sr, ul_sensing_rate_sc(scene, gains)));
        worst = std::max(worst, rel_diff(t1.cr, ul_comm_rate_sc(scene, gains, rho_rx_oracle)));
        worst = std::max(worst, rel_diff(t0.sr, ul_sensing_rate_cc(scene, gains, rho_rx_oracle)));
        worst = std::max(worst, rel_diff(t0.cr, ul_comm_rate_cc(scene, gains)));

        const RatePair f11 = fdsac_dl_pair(scene, gains, FdsacSplit{1.0, 1.0});
        const RatePair f00 = fdsac_dl_pair(scene, gains, FdsacSplit{0.0, 0.0});
        const RatePair u1 = fdsac_ul_pair(scene, gains, 1.0);
        const RatePair u0 = fdsac_ul_pair(scene, gains, 0.0);
        worst = std::max(worst, rel_diff(f11.sr, dl_sensing_rate_sc(scene, gains)));
        worst = std::max(worst, std::abs(f11.cr));
        worst = std::max(worst, rel_diff(f00.cr, dl_comm_rate_cc(scene, gains)));
        worst = std::max(worst, std::abs(f00.sr));
        worst = std::max(worst, rel_diff(u1.sr, ul_sensing_rate_sc(scene, gains)));
        worst = std::max(worst, std::abs(u1.cr));
        worst = std::max(worst, rel_diff(u0.cr, ul_comm_rate_cc(scene, gains)));
        worst = std::max(worst, std::abs(u0.sr));

        const std::complex<double> zero{0.0, 0.0};
        worst = std::max(worst, rel_diff(ul_sensing_rate_cc(scene, gains, zero),
                                         ul_sensing_rate_sc(scene, gains)));
        worst = std::max(worst, rel_diff(ul_comm_rate_sc(scene, gains, zero),
                                         ul_comm_rate_cc(scene, gains)));
        worst = std::max(worst, std::abs(dl_sensing_rate_cc(scene, gains, zero)));
        worst = std::max(worst, std::abs(dl_comm_rate_sc(scene, gains, zero)));
        rep.check(worst < 1e-12, "endpoint/limit identities", "worst rel " + fmt_value(worst));
    }

    const SubspaceGeometry geo{gains.cu_tx, gains.target_tx, rho_tx_oracle};

    // KKT interior: both eps-weighted constraints active, continuous at the
    // regime thresholds.
    {
        double worst = 0.0;
        for (double eps : {0.3, 0.5, 0.7}) {
            const BeamformingGains g = achieved_gains(kkt_pareto(eps, geo), geo);
            worst = std::max(worst, rel_diff(g.comm / eps, g.sense / (1.0 - eps)));
        }
        rep.check(worst < 1e-9, "kkt: interior active-constraint identity",
                  "worst rel " + fmt_value(worst));

        const double cs = std::norm(geo.cross);
        const double eps_lo = cs / (cs + geo.g2 * geo.g2);
        const double eps_hi = geo.g1 * geo.g1 / (geo.g1 * geo.g1 + cs);
        const BeamformingGains lo_int = achieved_gains(kkt_interior_weights(eps_lo, geo), geo);
        const BeamformingGains lo_end =
            achieved_gains(kkt_pareto(0.0, geo), geo);
        const BeamformingGains hi_int = achieved_gains(kkt_interior_weights(eps_hi, geo), geo);
        const BeamformingGains hi_end = achieved_gains(kkt_pareto(1.0, geo), geo);
        const double cont = std::max(
            std::max(rel_diff(lo_int.comm, lo_end.comm), rel_diff(lo_int.sense, lo_end.sense)),
            std::max(rel_diff(hi_int.comm, hi_end.comm), rel_diff(hi_int.sense, hi_end.sense)));
        rep.check(cont < 1e-9, "kkt: continuity at the regime thresholds",
                  "worst rel " + fmt_value(cont));
    }

    // Rayleigh-quotient closed form against the generalized-eigenvalue route.
    {
        std::uniform_real_distribution<double> norm_draw(0.1, 10.0);
        std::uniform_real_distribution<double> frac(0.0, 1.0);
        std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
        std::uniform_real_distribution<double> scale_draw(0.0, 100.0);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double ga = norm_draw(rng), gh = norm_draw(rng);
            const double m = frac(rng) * std::sqrt(ga * gh);
            const double ph = angle(rng);
            const std::complex<double> cross{m * std::cos(ph), m * std::sin(ph)};
            const double sc = scale_draw(rng);
            worst = std::max(worst, rel_diff(rayleigh_quotient_max(ga, gh, cross, sc),
                                             eigen_oracle(ga, gh, cross, sc)));
        }
        rep.check(worst < 1e-10, "rayleigh max vs 2x2 eigenvalue oracle (1000 draws)",
                  "worst rel " + fmt_value(worst));
    }

    // Pareto boundary monotonicity and corner dominance on a 101-point grid.
    {
        const RateRegion region = dl_rate_region(scene, gains, rho_tx_oracle, 101);
        bool monotone = true, dominated = true;
        const double cr_cc = dl_comm_rate_cc(scene, gains);
        const double cr_sc = dl_comm_rate_sc(scene, gains, rho_tx_oracle);
        const double sr_sc = dl_sensing_rate_sc(scene, gains);
        const double sr_cc = dl_sensing_rate_cc(scene, gains, rho_tx_oracle);
        const double slack = 1e-12;
        for (std::size_t i = 0; i < region.boundary.size(); ++i) {
            const RatePair p = region.boundary[i].rates;
            if (i > 0) {
                const RatePair q = region.boundary[i - 1].rates;
                if (p.cr < q.cr - slack || p.sr > q.sr + slack) monotone = false;
            }
            if (p.cr > cr_cc + slack || p.cr < cr_sc - slack || p.sr > sr_sc + slack ||
                p.sr < sr_cc - slack)
                dominated = false;
        }
        rep.check(monotone, "downlink boundary: cr non-decreasing, sr non-increasing in eps");
        rep.check(dominated, "downlink boundary: bracketed by the corner rates");
    }

    // Uplink corner dominance, default plus random scenes.
    {
        bool ok = true;
        std::vector<Scene> scenes;
        scenes.push_back(scene);
        for (int i = 0; i < 20; ++i) scenes.push_back(sample_scene(rng));
        for (const Scene& s : scenes) {
            const ChannelGains g = closed_form_gains(s);
            const std::complex<double> rr = correlation_chebyshev(s, Aperture::Receive, 200);
            if (ul_comm_rate_cc(s, g) < ul_comm_rate_sc(s, g, rr)) ok = false;
            if (ul_sensing_rate_sc(s, g) < ul_sensing_rate_cc(s, g, rr)) ok = false;
        }
        rep.check(ok, "uplink corners: each SIC order wins its own metric (21 scenes)");
        rep.info("uplink sensing-rate SIC gap (rel)",
                 (ul_sensing_rate_sc(scene, gains) -
                  ul_sensing_rate_cc(scene, gains, rho_rx_oracle)) /
                     ul_sensing_rate_sc(scene, gains));
    }

    // Every rate strictly increases in its own SNR.
    {
        SceneParams up = scene.params();
        up.snr_dl_comm *= 2.0;
        up.snr_dl_sense *= 2.0;
        up.snr_ul_comm *= 2.0;
        up.snr_ul_sense *= 2.0;
        const Scene boosted(up);
        const bool ok =
            dl_comm_rate_cc(boosted, gains) > dl_comm_rate_cc(scene, gains) &&
            dl_sensing_rate_cc(boosted, gains, rho_tx_oracle) >
                dl_sensing_rate_cc(scene, gains, rho_tx_oracle) &&
            dl_sensing_rate_sc(boosted, gains) > dl_sensing_rate_sc(scene, gains) &&
            dl_comm_rate_sc(boosted, gains, rho_tx_oracle) >
                dl_comm_rate_sc(scene, gains, rho_tx_oracle) &&
            ul_comm_rate_cc(boosted, gains) > ul_comm_rate_cc(scene, gains) &&
            ul_sensing_rate_sc(boosted, gains) > ul_sensing_rate_sc(scene, gains);
        rep.check(ok, "rates strictly increase with their own SNR");
    }

    // Discrete-array and frequency-split baselines stay inside the CAPA region.
    {
        const ChannelData spda = spda_channel(scene);
        bool spda_leq = true;
        const Scene& s = scene;
        const double pairs[8][2] = {
            {dl_comm_rate_cc(s, spda.gains), dl_comm_rate_cc(s, gains)},
            {dl_sensing_rate_cc(s, spda.gains, spda.corr.tx),
             dl_sensing_rate_cc(s, gains, rho_tx_oracle)},
            {dl_comm_rate_sc(s, spda.gains, spda.corr.tx),
             dl_comm_rate_sc(s, gains, rho_tx_oracle)},
            {dl_sensing_rate_sc(s, spda.gains), dl_sensing_rate_sc(s, gains)},
            {ul_comm_rate_cc(s, spda.gains), ul_comm_rate_cc(s, gains)},
            {ul_sensing_rate_cc(s, spda.gains, spda.corr.rx),
             ul_sensing_rate_cc(s, gains, rho_rx_oracle)},
            {ul_comm_rate_sc(s, spda.gains, spda.corr.rx),
             ul_comm_rate_sc(s, gains, rho_rx_oracle)},
            {ul_sensing_rate_sc(s, spda.gains), ul_sensing_rate_sc(s, gains)},
        };
        for (const auto& p : pairs)
            if (p[0] > p[1]) spda_leq = false;
        rep.check(spda_leq, "every SPDA rate at or below its CAPA counterpart");

        const RateRegion capa_dl = dl_rate_region(s, gains, rho_tx_oracle, 101);
        const RateRegion spda_dl = dl_rate_region(s, spda.gains, spda.corr.tx, 101);
        const RateRegion fdsac_dl = fdsac_dl_region(s, gains, 41);
        const RateRegion capa_ul = ul_rate_region(s, gains, rho_rx_oracle, 101);
        const RateRegion spda_ul = ul_rate_region(s, spda.gains, spda.corr.rx, 101);
        const RateRegion fdsac_ul = fdsac_ul_region(s, gains, 101);
        rep.check(region_covers(capa_dl, spda_dl) && region_covers(capa_ul, spda_ul),
                  "SPDA regions inside CAPA regions (101 samples)");
        rep.check(region_covers(capa_dl, fdsac_dl) && region_covers(capa_ul, fdsac_ul),
                  "FDSAC regions inside CAPA regions");
    }

    // Pulse-rate map (1/L) log2(1 + L x) decreases with frame length.
    {
        const double x = effective_snrs(scene).dl_sense * gains.target_tx * gains.target_rx;
        bool decreasing = true;
        double prev = std::numeric_limits<double>::infinity();
        for (int l : {1, 2, 4, 8, 16}) {
            const double r = std::log2(1.0 + l * x) / l;
            if (r >= prev) decreasing = false;
            prev = r;
        }
        rep.check(decreasing, "sensing rate decreases in frame length at fixed SNR product");
    }

    if (opt.full) {
        double worst = 0.0;
        bool never_above = true;
        for (double eps : {0.3, 0.5, 0.7}) {
            const double closed = kkt_objective(eps, geo);
            const GridSearchResult grid = pareto_grid_oracle(eps, geo, 2000);
            worst = std::max(worst, rel_diff(closed, grid.objective));
            if (grid.objective > closed * (1.0 + 1e-9)) never_above = false;
        }
        rep.check(worst < 1e-4, "kkt vs 2000^2 grid search at eps {0.3, 0.5, 0.7}",
                  "worst rel " + fmt_value(worst));
        rep.check(never_above, "grid search never beats the closed form");
    }

    out << (rep.failures == 0 ? "validation passed" : "validation FAILED") << " ("
        << rep.failures << " failing checks)\n";
    return rep.failures == 0 ? kExitOk : kExitValidationFailure;
}

}  // namespace capa_isac::cli
