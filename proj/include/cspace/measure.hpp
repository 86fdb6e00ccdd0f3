#pragma once

#include "cspace/concept.hpp"

namespace cspace {

/// Compensated (Kahan–Neumaier) accumulator; the inclusion-exclusion and
/// dimension-subset sums alternate in sign.
class KahanSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Measurement parameters that may differ from a concept's own: the context
/// override used by the subsethood/implication/similarity relations.
struct MeasureContext {
    StructurePtr space;
    double c;
    WeightSpec weights;
};

/// Gamma at half-integer arguments: gamma_half(m) = Gamma(m/2) for m >= 1,
/// computed from factorials and the sqrt(pi) recurrence (bit-stable).
double gamma_half(unsigned twice_x);

/// int_0^1 ln(x)^n dx = (-1)^n * n!.
double log_power_integral(unsigned n);

/// Hypervolume of a radius-r ball of the unweighted combined metric:
/// r^n/n! * prod_delta(n_delta! * pi^(n_delta/2) / Gamma(n_delta/2 + 1)).
double hyperball_volume_unweighted(double r, const DomainStructure& s);

/// Weighted variant: the unweighted volume divided by
/// prod_d w_delta(d) * sqrt(w_d) (one stretch factor per dimension).
double hyperball_volume(double r, const DomainStructure& s, const WeightSpec& w);

/// Volume of the alpha-cut of a fuzzified cuboid: the dimension-subset sum
/// of extruded hyperball volumes at radius eps(alpha) = -(1/c) ln(alpha/mu0).
/// Returns 0 for alpha > mu0 (empty cut); throws for alpha <= 0.
double alpha_cut_volume(const Cuboid& c, double alpha, double mu0, double sens,
                        const WeightSpec& w, const DomainStructure& s);

/// Closed-form measure of a fuzzified cuboid (the integral of its
/// membership over all of the concept's space).
double fuzzy_cuboid_measure(const Cuboid& c, double mu0, double sens,
                            const WeightSpec& w, const DomainStructure& s);

/// Mass of the fuzzified cuboid lying below membership level tau,
/// i.e. its measure outside the tau-cut. Used for truncation bounds.
double fuzzy_cuboid_tail_measure(const Cuboid& c, double mu0, double sens,
                                 const WeightSpec& w, const DomainStructure& s,
                                 double tau);

/// Concept size by inclusion-exclusion over the core's cuboids; every
/// subset intersection is crisp-intersected first and then fuzzified with
/// the concept's parameters. Always computed on the concept's own domains.
double concept_size(const Concept& s);

/// concept_size with mu0 from the concept but c and W from the context.
double contextual_size(const Concept& s, const MeasureContext& ctx);

} // namespace cspace
