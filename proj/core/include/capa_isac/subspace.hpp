#ifndef CAPA_ISAC_SUBSPACE_HPP
#define CAPA_ISAC_SUBSPACE_HPP

#include <array>
#include <complex>

namespace capa_isac {

/// Geometry of the rank-2 signal subspace spanned by two channel functions:
/// squared norms g1, g2 and the inner product `cross` of the second function
/// against the conjugated first. Cauchy-Schwarz bounds |cross|^2 by g1*g2.
struct SubspaceGeometry {
    double g1;
    double g2;
    std::complex<double> cross;
};

enum class BeamRegime { SensingEndpoint, Interior, CommEndpoint };

/// Weights of a unit-norm beamformer written as a combination of the two
/// conjugated channel functions: (comm * f1 + sense * e^{j phase} * f2) / norm.
/// The phase rotation on the second component aligns both channel projections
/// to the real axis, so norm^2 = comm^2 g1 + sense^2 g2 + 2 comm sense |cross|.
struct BeamWeights {
    double comm;    // weight on the conjugated comm channel
    double sense;   // weight on the conjugated sensing channel
    double norm;    // normalizer keeping the beamformer unit power
    double phase;   // rotation applied to the sensing component, = arg(cross)
    BeamRegime regime;
};

/// Beamforming power gains actually delivered to each function:
/// comm = |<comm channel, w>|^2, sense = |<sensing channel, w>|^2.
struct BeamformingGains {
    double comm;
    double sense;
};

/// Closed-form Pareto-optimal beamformer for trade-off eps in [0, 1].
/// eps at or below |cross|^2/(|cross|^2 + g2^2) pins the sensing endpoint,
/// eps at or above g1^2/(g1^2 + |cross|^2) the comm endpoint; in between the
/// interior KKT weights apply. If the interior denominator degenerates
/// (parallel channels), falls back to the endpoint with the larger slack.
BeamWeights kkt_pareto(double eps, const SubspaceGeometry& geo);

/// Interior-branch weights evaluated at any eps; exposed so the endpoint
/// continuity of the closed form can be checked at the thresholds.
BeamWeights kkt_interior_weights(double eps, const SubspaceGeometry& geo);

BeamformingGains achieved_gains(const BeamWeights& w, const SubspaceGeometry& geo);

/// Orthonormal-basis coordinates of the two (conjugated) channel functions,
/// Gram-Schmidt with the first basis vector along the first function:
/// first = (sqrt(g1), 0), second = (conj(cross)/sqrt(g1), sqrt(g2 - |cross|^2/g1)).
/// Parallel channels degrade gracefully to a zero second coordinate.
struct SubspaceBasis {
    std::array<std::complex<double>, 2> first;
    std::array<std::complex<double>, 2> second;
};

SubspaceBasis gram_schmidt_coeffs(const SubspaceGeometry& geo);

struct GridSearchResult {
    double objective;        // max over the grid of min(gain_c/eps, gain_s/(1-eps))
    BeamformingGains gains;  // gains at the best grid point
    double mix_angle;        // best polar mixing angle in [0, pi/2]
    double phase;            // best relative phase in [-pi, pi)
};

/// Brute-force check of the Pareto problem: parametrizes unit-norm w in the
/// 2-D orthonormal basis as (cos a, sin a e^{jb}), scans a grid_n x grid_n
/// grid, then refines locally. The phase bracket of the refinement stays
/// wide because the min() objective is flat in b wherever the comm
/// constraint binds. Deterministic: ties break on the smaller (a, b) index.
GridSearchResult pareto_grid_oracle(double eps, const SubspaceGeometry& geo,
                                    int grid_n = 2000, int refine_rounds = 3);

/// Peak of the generalized Rayleigh quotient
/// |<a, v>|^2 / (v^H (scale * h h^H + I) v) over v:
/// a_norm_sq - scale |cross|^2 / (1 + scale h_norm_sq), with cross = <h, a>.
double rayleigh_quotient_max(double a_norm_sq, double h_norm_sq,
                             std::complex<double> cross, double scale);

}  // namespace capa_isac

#endif
