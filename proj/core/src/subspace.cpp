#include "capa_isac/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "capa_isac/parallel.hpp"

namespace capa_isac {

namespace {

void check_geometry(const SubspaceGeometry& geo) {
    if (!(geo.g1 > 0.0) || !(geo.g2 > 0.0))
        throw std::invalid_argument("subspace geometry: squared norms must be > 0");
    const double cs = std::norm(geo.cross);
    if (cs > geo.g1 * geo.g2 * (1.0 + 1e-9))
        throw std::invalid_argument("subspace geometry: |cross|^2 exceeds g1*g2");
}

BeamWeights sensing_endpoint(const SubspaceGeometry& geo) {
    return BeamWeights{0.0, 1.0, std::sqrt(geo.g2), std::arg(geo.cross),
                       BeamRegime::SensingEndpoint};
}

BeamWeights comm_endpoint(const SubspaceGeometry& geo) {
    return BeamWeights{1.0, 0.0, std::sqrt(geo.g1), std::arg(geo.cross),
                       BeamRegime::CommEndpoint};
}

// min over the two eps-weighted constraint ratios, ignoring a vacuous side.
double constraint_objective(double eps, const BeamformingGains& g) {
    double v = std::numeric_limits<double>::infinity();
    if (eps > 0.0) v = std::min(v, g.comm / eps);
    if (eps < 1.0) v = std::min(v, g.sense / (1.0 - eps));
    return v;
}

}  // namespace

BeamWeights kkt_interior_weights(double eps, const SubspaceGeometry& geo) {
    const double cross_abs = std::abs(geo.cross);
    const double a = std::sqrt(eps);
    const double b = std::sqrt(1.0 - eps);
    const double den = (1.0 - eps) * geo.g1 + eps * geo.g2 - 2.0 * a * b * cross_abs;
    if (!(den > 0.0)) {
        // Reachable only for parallel channels, where the whole boundary
        // collapses; pick the endpoint with the larger constraint slack.
        const BeamWeights s = sensing_endpoint(geo);
        const BeamWeights c = comm_endpoint(geo);
        return constraint_objective(eps, achieved_gains(s, geo)) >=
                       constraint_objective(eps, achieved_gains(c, geo))
                   ? s
                   : c;
    }
    const double w_comm = (a * geo.g2 - b * cross_abs) / den;
    const double w_sense = (b * geo.g1 - a * cross_abs) / den;
    const double norm = std::sqrt(w_comm * w_comm * geo.g1 + w_sense * w_sense * geo.g2 +
                                  2.0 * w_comm * w_sense * cross_abs);
    return BeamWeights{w_comm, w_sense, norm, std::arg(geo.cross), BeamRegime::Interior};
}

BeamWeights kkt_pareto(double eps, const SubspaceGeometry& geo) {
    check_geometry(geo);
    if (!(eps >= 0.0 && eps <= 1.0))
        throw std::invalid_argument("kkt_pareto: eps must lie in [0, 1]");
    const double cross_sq = std::norm(geo.cross);
    const double eps_lo = cross_sq / (cross_sq + geo.g2 * geo.g2);
    const double eps_hi = geo.g1 * geo.g1 / (geo.g1 * geo.g1 + cross_sq);
    if (eps <= eps_lo) return sensing_endpoint(geo);
    if (eps >= eps_hi) return comm_endpoint(geo);
    return kkt_interior_weights(eps, geo);
}

BeamformingGains achieved_gains(const BeamWeights& w, const SubspaceGeometry& geo) {
    const double cross_abs = std::abs(geo.cross);
    const double norm_sq = w.norm * w.norm;
    const double comm_amp = w.comm * geo.g1 + w.sense * cross_abs;
    const double sense_amp = w.comm * cross_abs + w.sense * geo.g2;
    return BeamformingGains{comm_amp * comm_amp / norm_sq, sense_amp * sense_amp / norm_sq};
}

SubspaceBasis gram_schmidt_coeffs(const SubspaceGeometry& geo) {
    check_geometry(geo);
    const double root_g1 = std::sqrt(geo.g1);
    const double residual_sq = geo.g2 - std::norm(geo.cross) / geo.g1;
    return SubspaceBasis{
        {std::complex<double>{root_g1, 0.0}, std::complex<double>{0.0, 0.0}},
        {std::conj(geo.cross) / root_g1,
         std::complex<double>{std::sqrt(std::max(residual_sq, 0.0)), 0.0}},
    };
}

GridSearchResult pareto_grid_oracle(double eps, const SubspaceGeometry& geo, int grid_n,
                                    int refine_rounds) {
    check_geometry(geo);
    if (!(eps >= 0.0 && eps <= 1.0))
        throw std::invalid_argument("pareto_grid_oracle: eps must lie in [0, 1]");
    if (grid_n < 100)
        throw std::invalid_argument("pareto_grid_oracle: grid_n must be >= 100");

    const SubspaceBasis basis = gram_schmidt_coeffs(geo);
    const std::complex<double> c1 = geo.cross / std::sqrt(geo.g1);
    const double c2 = basis.second[1].real();

    // w = (cos a, sin a e^{jb}); comm gain g1 cos^2 a, sensing gain
    // |c1 cos a + c2 sin a e^{jb}|^2.
    const auto gains_at = [&](double a, double b) {
        const double w1 = std::cos(a);
        const double w2 = std::sin(a);
        const std::complex<double> proj =
            c1 * w1 + c2 * w2 * std::complex<double>{std::cos(b), std::sin(b)};
        return BeamformingGains{geo.g1 * w1 * w1, std::norm(proj)};
    };

    struct Best {
        double value = -std::numeric_limits<double>::infinity();
        long ia = 0;
        long ib = 0;
    };

    const auto scan = [&](double a0, double da, long na, double b0, double db, long nb) {
        std::vector<Best> partial(std::max<std::size_t>(1, parallel_chunk_count(na)));
        parallel_chunks(na, [&](std::size_t chunk, long lo, long hi) {
            Best local;
            for (long i = lo; i < hi; ++i) {
                const double a = a0 + da * i;
                for (long j = 0; j < nb; ++j) {
                    const double v = constraint_objective(eps, gains_at(a, b0 + db * j));
                    if (v > local.value) local = Best{v, i, j};
                }
            }
            partial[chunk] = local;
        });
        Best best;
        for (const Best& cand : partial) {
            if (cand.value > best.value ||
                (cand.value == best.value &&
                 std::pair{cand.ia, cand.ib} < std::pair{best.ia, best.ib}))
                best = cand;
        }
        return best;
    };

    const double half_pi = std::numbers::pi / 2.0;
    double da = half_pi / (grid_n - 1);
    double db = 2.0 * std::numbers::pi / grid_n;
    Best coarse = scan(0.0, da, grid_n, -std::numbers::pi, db, grid_n);
    double best_a = da * coarse.ia;
    double best_b = -std::numbers::pi + db * coarse.ib;
    double best_v = coarse.value;

    // Local rounds: the mixing-angle window tightens fast (the objective is
    // unimodal in a), while the phase bracket starts wide enough to cover the
    // flat stretch the coarse pass may have landed on.
    double wa = 2.0 * da;
    double wb = 0.15;
    for (int round = 0; round < refine_rounds; ++round) {
        const long na = 161, nb = 2001;
        const double a_lo = std::max(0.0, best_a - wa);
        const double a_hi = std::min(half_pi, best_a + wa);
        const double ra = (a_hi - a_lo) / (na - 1);
        const double rb = 2.0 * wb / (nb - 1);
        const Best local = scan(a_lo, ra, na, best_b - wb, rb, nb);
        if (local.value > best_v) {
            best_v = local.value;
            best_a = a_lo + ra * local.ia;
            best_b = best_b - wb + rb * local.ib;
        }
        wa /= 40.0;
        wb /= 4.0;
    }

    return GridSearchResult{best_v, gains_at(best_a, best_b), best_a, best_b};
}

double rayleigh_quotient_max(double a_norm_sq, double h_norm_sq, std::complex<double> cross,
                             double scale) {
    if (!(a_norm_sq > 0.0) || !(h_norm_sq > 0.0))
        throw std::invalid_argument("rayleigh_quotient_max: norms must be > 0");
    if (scale < 0.0)
        throw std::invalid_argument("rayleigh_quotient_max: scale must be >= 0");
    return a_norm_sq - scale * std::norm(cross) / (1.0 + scale * h_norm_sq);
}

}  // namespace capa_isac
