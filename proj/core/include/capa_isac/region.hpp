#ifndef CAPA_ISAC_REGION_HPP
#define CAPA_ISAC_REGION_HPP

#include <cstddef>
#include <vector>

namespace capa_isac {

/// One operating point, in bits per channel use.
struct RatePair {
    double sr;
    double cr;
};

struct RegionPoint {
    double param;  // sweep parameter that produced the point
    RatePair rates;
};

/// Sampled upper boundary of a down-closed rate region, sorted by increasing
/// CR with SR non-increasing. The two labeled corners index into boundary.
struct RateRegion {
    std::vector<RegionPoint> boundary;
    std::size_t sensing_corner = 0;  // max-SR end
    std::size_t comm_corner = 0;     // max-CR end
};

/// Largest SR the sampled region offers at communication rate cr, by linear
/// interpolation along the boundary; the max SR left of the first sample and
/// zero beyond the last.
double region_sr_bound(const RateRegion& region, double cr);

bool region_contains(const RateRegion& region, const RatePair& point, double tol = 1e-9);

/// True when every boundary sample of inner is dominated by outer.
bool region_covers(const RateRegion& outer, const RateRegion& inner, double tol = 1e-9);

/// Extracts the Pareto frontier (max SR per CR level) from arbitrary sampled
/// points and packages it as a RateRegion.
RateRegion pareto_frontier(std::vector<RegionPoint> points);

}  // namespace capa_isac

#endif
