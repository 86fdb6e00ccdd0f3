#pragma once

#include <optional>
#include <vector>

#include "cspace/domain.hpp"

namespace cspace {

/// Axis-parallel box over all dimensions of a concept's domain structure.
/// Bounds are finite; zero-width dimensions (p_min == p_max) are legal.
struct Cuboid {
    Point p_min;
    Point p_max;

    Cuboid() = default;
    Cuboid(Point lo, Point hi);

    std::size_t dimension_count() const { return p_min.size(); }
    double width(std::size_t dim) const { return p_max[dim] - p_min[dim]; }
    bool contains(const Point& x, double tol = 0.0) const;

    /// Corner selected by bitmask (bit k set -> p_max in dimension k).
    Point corner(std::size_t mask) const;

    /// Closest point of the box to x (per-dimension clamp).
    Point clamp(const Point& x) const;

    std::optional<Cuboid> intersect(const Cuboid& other) const;

    bool operator==(const Cuboid& other) const {
        return p_min == other.p_min && p_max == other.p_max;
    }
};

/// min_{y in C} d(x, y): clamp each coordinate into the box, then measure.
double distance_to_cuboid(const Point& x, const Cuboid& c, const DomainStructure& s,
                          const WeightSpec& w);

/// Union of cuboids sharing a nonempty central region P (Def. 3 core).
class CoreRegion {
public:
    /// Validates the shared-point invariant; throws validation_error naming
    /// a separating dimension when the central region is empty.
    static CoreRegion validate(std::vector<Cuboid> cuboids, const DomainStructure& s);

    const std::vector<Cuboid>& cuboids() const { return cuboids_; }
    const Cuboid& central_region() const { return central_; }

    /// True when the central region has zero width in some dimension.
    bool degenerate() const { return degenerate_; }

    /// min over cuboids of distance_to_cuboid.
    double distance(const Point& x, const DomainStructure& s, const WeightSpec& w) const;

    bool contains(const Point& x, double tol = 0.0) const;

private:
    std::vector<Cuboid> cuboids_;
    Cuboid central_;
    bool degenerate_ = false;
};

/// Pairwise cuboid intersections of two cores, dropping empty ones. Returns
/// the validated CoreRegion if the surviving cuboids share a point, nullopt
/// when nothing intersects or no shared point exists.
std::optional<CoreRegion> intersect_cores(const CoreRegion& a, const CoreRegion& b,
                                          const DomainStructure& s);

} // namespace cspace
