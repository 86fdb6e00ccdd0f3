#include "cspace/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cspace/metric.hpp"

namespace cspace {

Cuboid::Cuboid(Point lo, Point hi) : p_min(std::move(lo)), p_max(std::move(hi)) {
    if (p_min.size() != p_max.size())
        throw structural_error("cuboid bounds have different dimension counts");
    for (std::size_t k = 0; k < p_min.size(); ++k) {
        if (!std::isfinite(p_min[k]) || !std::isfinite(p_max[k]))
            throw validation_error("cuboid bounds must be finite");
        if (p_min[k] > p_max[k])
            throw validation_error("cuboid has p_min > p_max in dimension " + std::to_string(k));
    }
}

bool Cuboid::contains(const Point& x, double tol) const {
    for (std::size_t k = 0; k < p_min.size(); ++k)
        if (x[k] < p_min[k] - tol || x[k] > p_max[k] + tol) return false;
    return true;
}

Point Cuboid::corner(std::size_t mask) const {
    Point p(p_min.size());
    for (std::size_t k = 0; k < p_min.size(); ++k)
        p[k] = (mask >> k) & 1u ? p_max[k] : p_min[k];
    return p;
}

Point Cuboid::clamp(const Point& x) const {
    Point p(x.size());
    for (std::size_t k = 0; k < x.size(); ++k)
        p[k] = std::min(std::max(x[k], p_min[k]), p_max[k]);
    return p;
}

std::optional<Cuboid> Cuboid::intersect(const Cuboid& other) const {
    Point lo(p_min.size()), hi(p_min.size());
    for (std::size_t k = 0; k < p_min.size(); ++k) {
        lo[k] = std::max(p_min[k], other.p_min[k]);
        hi[k] = std::min(p_max[k], other.p_max[k]);
        if (lo[k] > hi[k]) return std::nullopt;
    }
    return Cuboid(std::move(lo), std::move(hi));
}

double distance_to_cuboid(const Point& x, const Cuboid& c, const DomainStructure& s,
                          const WeightSpec& w) {
    if (x.size() != s.dimension_count() || c.dimension_count() != s.dimension_count())
        throw structural_error("point or cuboid does not match domain structure");
    return combined_distance(x, c.clamp(x), s, w);
}

CoreRegion CoreRegion::validate(std::vector<Cuboid> cuboids, const DomainStructure& s) {
    if (cuboids.empty())
        throw validation_error("core needs at least one cuboid");
    const std::size_t n = s.dimension_count();
    for (const Cuboid& c : cuboids)
        if (c.dimension_count() != n)
            throw structural_error("cuboid does not match domain structure");

    Point lo(n, -std::numeric_limits<double>::infinity());
    Point hi(n, std::numeric_limits<double>::infinity());
    for (const Cuboid& c : cuboids)
        for (std::size_t k = 0; k < n; ++k) {
            lo[k] = std::max(lo[k], c.p_min[k]);
            hi[k] = std::min(hi[k], c.p_max[k]);
        }
    for (std::size_t k = 0; k < n; ++k)
        if (lo[k] > hi[k]) {
            std::ostringstream os;
            os << "central region is empty: cuboids separate along dimension '"
               << s.dimension_names()[k] << "'";
            throw validation_error(os.str());
        }

    CoreRegion core;
    core.central_ = Cuboid(std::move(lo), std::move(hi));
    core.degenerate_ = false;
    for (std::size_t k = 0; k < n; ++k)
        if (core.central_.width(k) == 0.0) core.degenerate_ = true;
    core.cuboids_ = std::move(cuboids);
    return core;
}

double CoreRegion::distance(const Point& x, const DomainStructure& s,
                            const WeightSpec& w) const {
    double best = std::numeric_limits<double>::infinity();
    for (const Cuboid& c : cuboids_)
        best = std::min(best, distance_to_cuboid(x, c, s, w));
    return best;
}

bool CoreRegion::contains(const Point& x, double tol) const {
    for (const Cuboid& c : cuboids_)
        if (c.contains(x, tol)) return true;
    return false;
}

std::optional<CoreRegion> intersect_cores(const CoreRegion& a, const CoreRegion& b,
                                          const DomainStructure& s) {
    std::vector<Cuboid> pieces;
    for (const Cuboid& ca : a.cuboids())
        for (const Cuboid& cb : b.cuboids())
            if (auto piece = ca.intersect(cb))
                pieces.push_back(std::move(*piece));
    if (pieces.empty()) return std::nullopt;
    try {
        return CoreRegion::validate(std::move(pieces), s);
    } catch (const validation_error&) {
        // pairwise overlaps exist but share no common point
        return std::nullopt;
    }
}

} // namespace cspace
