#include "cspace/metric.hpp"

#include <cmath>

namespace cspace {

double combined_distance(const Point& x, const Point& y, const DomainStructure& s,
                         const WeightSpec& w) {
    if (x.size() != s.dimension_count() || y.size() != s.dimension_count())
        throw structural_error("point does not match domain structure");
    double total = 0.0;
    for (std::size_t di = 0; di < s.domain_count(); ++di) {
        double q = 0.0;
        for (std::size_t k : s.domain(di).dims) {
            const double diff = x[k] - y[k];
            q += w.dimension_weight(k) * diff * diff;
        }
        total += w.domain_weight(di) * std::sqrt(q);
    }
    return total;
}

double point_similarity(const Point& x, const Point& y, double c,
                        const DomainStructure& s, const WeightSpec& w) {
    if (!(c > 0.0)) throw parameter_error("sensitivity c must be positive");
    return std::exp(-c * combined_distance(x, y, s, w));
}

bool is_between(const Point& x, const Point& y, const Point& z,
                const DomainStructure& s, const WeightSpec& w) {
    const double dxy = combined_distance(x, y, s, w);
    const double dyz = combined_distance(y, z, s, w);
    const double dxz = combined_distance(x, z, s, w);
    const double scale = std::max(dxz, 1.0);
    return std::abs(dxy + dyz - dxz) <= kBetweennessTolerance * scale;
}

double soft_betweenness_points(const Point& x, const Point& y, const Point& z,
                               const DomainStructure& s, const WeightSpec& w) {
    const double dxy = combined_distance(x, y, s, w);
    const double dyz = combined_distance(y, z, s, w);
    const double dxz = combined_distance(x, z, s, w);
    const double den = dxy + dyz;
    if (den == 0.0) return 1.0; // x == y == z
    return dxz / den;
}

} // namespace cspace
