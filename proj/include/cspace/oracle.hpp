#pragma once

#include <cstdint>
#include <functional>

#include "cspace/relations.hpp"

namespace cspace {

/// Counter-based deterministic random stream: value i of stream `seed` is a
/// pure function of (seed, i), so results are reproducible across platforms
/// and independent of evaluation order.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t bits(std::uint64_t counter) const;

    /// Uniform double in [0,1).
    double uniform(std::uint64_t counter) const;

private:
    std::uint64_t seed_;
};

/// Finite axis-parallel box enclosing everything a membership function can
/// reach above the truncation threshold tau.
struct IntegrationRegion {
    Point lo;
    Point hi;

    double volume() const;

    /// Bounding box of the concept's core expanded per dimension by
    /// eps_cut / stretch(d) with eps_cut = -(1/c) ln(tau/mu0).
    static IntegrationRegion around(const Concept& s, double tau);

    /// Smallest box covering both regions.
    IntegrationRegion merge(const IntegrationRegion& other) const;
};

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
    double truncation_bound = 0.0; // mass the region may cut off
    std::uint64_t samples = 0;
};

/// Monte-Carlo integral of an arbitrary membership function over a region:
/// region volume times the sample mean. Batches are reduced in fixed order.
McEstimate mc_measure(const std::function<double(const Point&)>& membership,
                      const IntegrationRegion& region, std::uint64_t samples,
                      std::uint64_t seed);

/// Monte-Carlo size of one concept under an optional context override,
/// with the analytic truncation tail added to the error budget.
McEstimate mc_concept_size(const Concept& s, std::uint64_t samples, std::uint64_t seed,
                           double tau = 1e-6);

/// Monte-Carlo integral of min(mu_1, mu_2) with both concepts measured
/// under the context parameters.
McEstimate mc_min_measure(const Concept& s1, const Concept& s2, const MeasureContext& ctx,
                          std::uint64_t samples, std::uint64_t seed, double tau = 1e-6);

/// Hit-counting volume of the radius-r ball of the weighted combined metric.
McEstimate mc_hyperball_volume(double r, const DomainStructure& s, const WeightSpec& w,
                               std::uint64_t samples, std::uint64_t seed);

/// Reference betweenness evaluation on a denser grid with more candidate
/// points; bounds the optimizer error of the default settings.
struct DenseBetweenness {
    double soft = 0.0;
    double integral = 0.0;
};
DenseBetweenness sampled_betweenness(const Concept& s1, const Concept& s2,
                                     const Concept& s3, const BetweennessOptions& base,
                                     double density_factor = 10.0);

/// Numeric check of int_0^1 ln(x)^n dx against (-1)^n n!.
struct QuadratureCheck {
    double numeric = 0.0;
    double exact = 0.0;
    double relative_error = 0.0;
    bool pass = false;
};
QuadratureCheck quadrature_check(unsigned n, double tolerance = 1e-6);

} // namespace cspace
