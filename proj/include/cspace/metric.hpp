#pragma once

#include "cspace/domain.hpp"

namespace cspace {

/// Relative tolerance for the triangle-equality test in is_between().
/// The predicate is exact in the paper; floating point needs slack.
inline constexpr double kBetweennessTolerance = 1e-9;

/// Combined distance: weighted Manhattan sum of weighted within-domain
/// Euclidean distances,
///   d(x,y) = sum_delta w_delta * sqrt(sum_{d in delta} w_d * |x_d - y_d|^2).
double combined_distance(const Point& x, const Point& y, const DomainStructure& s,
                         const WeightSpec& w);

/// Sim(x,y) = exp(-c * d(x,y)), in (0,1], 1 iff x == y.
double point_similarity(const Point& x, const Point& y, double c,
                        const DomainStructure& s, const WeightSpec& w);

/// Triangle-equality betweenness: d(x,y) + d(y,z) == d(x,z) within
/// kBetweennessTolerance relative to d(x,z).
bool is_between(const Point& x, const Point& y, const Point& z,
                const DomainStructure& s, const WeightSpec& w);

/// d(x,z) / (d(x,y) + d(y,z)) in [0,1]; equals 1 exactly on the
/// betweenness set. The 0/0 case x == y == z is defined as 1 (y is
/// trivially between).
double soft_betweenness_points(const Point& x, const Point& y, const Point& z,
                               const DomainStructure& s, const WeightSpec& w);

} // namespace cspace
