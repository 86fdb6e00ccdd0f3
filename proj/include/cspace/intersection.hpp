#pragma once

#include "cspace/concept.hpp"

namespace cspace {

/// Constructive intersection of two fuzzy concepts on the same domain
/// structure.
///
/// The pointwise minimum of two memberships peaks at
///   mu = max_x min(mu_1(x), mu_2(x)).
/// When the crisp cores overlap the peak is min(mu0_1, mu0_2) on the crisp
/// overlap. When they are disjoint the peak sits on a lower "ridge" between
/// the cores; its height and location follow from the concepts' original
/// parameters. The returned cuboids are the maximal axis-parallel boxes
/// through the peak (degenerate in the dimensions that separate the cores).
struct FuzzyIntersection {
    double mu = 0.0;
    std::vector<Cuboid> cuboids;
    bool crisp = false; // peak realized on a crisp core overlap
};

FuzzyIntersection fuzzy_intersection(const Concept& a, const Concept& b);

/// Peak of min(mu_a, mu_b) restricted to one cuboid from each concept.
/// Exposed for differential testing against sampling.
FuzzyIntersection fuzzy_cuboid_intersection(const Cuboid& ca, const Cuboid& cb,
                                            const Concept& a, const Concept& b);

} // namespace cspace
