#include "capa_isac/region.hpp"

#include <algorithm>
#include <stdexcept>

namespace capa_isac {

double region_sr_bound(const RateRegion& region, double cr) {
    const auto& b = region.boundary;
    if (b.empty()) return 0.0;
    if (cr <= b.front().rates.cr) return b.front().rates.sr;
    if (cr > b.back().rates.cr) return 0.0;
    const auto it = std::lower_bound(
        b.begin(), b.end(), cr,
        [](const RegionPoint& p, double value) { return p.rates.cr < value; });
    const RegionPoint& hi = *it;
    const RegionPoint& lo = *(it - 1);
    const double span = hi.rates.cr - lo.rates.cr;
    if (span <= 0.0) return std::max(lo.rates.sr, hi.rates.sr);
    const double t = (cr - lo.rates.cr) / span;
    return lo.rates.sr + t * (hi.rates.sr - lo.rates.sr);
}

bool region_contains(const RateRegion& region, const RatePair& point, double tol) {
    if (region.boundary.empty()) return false;
    if (point.cr > region.boundary.back().rates.cr + tol) return false;
    return point.sr <= region_sr_bound(region, point.cr) + tol;
}

bool region_covers(const RateRegion& outer, const RateRegion& inner, double tol) {
    for (const RegionPoint& p : inner.boundary)
        if (!region_contains(outer, p.rates, tol)) return false;
    return true;
}

RateRegion pareto_frontier(std::vector<RegionPoint> points) {
    if (points.empty()) throw std::invalid_argument("pareto_frontier: no points");
    std::sort(points.begin(), points.end(), [](const RegionPoint& a, const RegionPoint& b) {
        if (a.rates.cr != b.rates.cr) return a.rates.cr < b.rates.cr;
        return a.rates.sr > b.rates.sr;
    });
    // Sweep from the high-CR end keeping the running SR max: a point survives
    // iff no point with cr >= its cr has strictly larger sr.
    RateRegion region;
    std::vector<RegionPoint> kept;
    double best_sr = -1.0;
    for (auto it = points.rbegin(); it != points.rend(); ++it) {
        if (it->rates.sr > best_sr) {
            best_sr = it->rates.sr;
            if (!kept.empty() && kept.back().rates.cr == it->rates.cr)
                kept.back() = *it;  // keep only the best SR per CR level
            else
                kept.push_back(*it);
        }
    }
    std::reverse(kept.begin(), kept.end());
    region.boundary = std::move(kept);
    region.sensing_corner = 0;
    region.comm_corner = region.boundary.size() - 1;
    return region;
}

}  // namespace capa_isac
