#pragma once

#include <string>

#include "cspace/geometry.hpp"

namespace cspace {

/// Fuzzy simple star-shaped set <S, mu0, c, W>: a cuboid-union core with
/// exponential-decay membership mu0 * exp(-c * d(x, S)).
///
/// Immutable after construction; all operations are const and pure.
class Concept {
public:
    Concept(StructurePtr space, CoreRegion core, double mu0, double c, WeightSpec weights);

    const DomainStructure& space() const { return *space_; }
    StructurePtr space_ptr() const { return space_; }
    const CoreRegion& core() const { return core_; }
    double mu0() const { return mu0_; }
    double c() const { return c_; }
    const WeightSpec& weights() const { return weights_; }

    /// True when the concept spans a single domain (a property in the
    /// Gardenfors sense); multi-domain concepts return false.
    bool is_property() const { return space_->domain_count() == 1; }

    /// mu0 * exp(-c * min_i d(x, C_i)); equals mu0 on the core.
    double membership(const Point& x) const;

    /// min over core cuboids of the clamped combined distance.
    double core_distance(const Point& x) const;

    /// Radius of the alpha-cut around the core: -(1/c) * ln(alpha/mu0).
    /// Negative when alpha > mu0 (empty cut).
    double epsilon(double alpha) const;

    /// membership(x) >= alpha, decided through the epsilon-neighborhood
    /// reading. alpha must lie in (0,1]; alpha > mu0 is always false.
    bool alpha_cut_contains(const Point& x, double alpha) const;

    /// Restriction to a nonempty subset of this concept's domains. Cuboids
    /// drop the removed dimensions, mu0 and c stay, domain weights are
    /// rescaled so they sum to the new domain count, dimension weights are
    /// kept as-is.
    Concept project(const std::vector<std::string>& target_domains) const;

    /// Same core/mu0 with different decay and weights (context override).
    Concept with_parameters(double c, WeightSpec weights) const;

private:
    StructurePtr space_;
    CoreRegion core_;
    double mu0_;
    double c_;
    WeightSpec weights_;
};

/// Crisp subsethood decision (Prop. 3): the conjunction of four conditions,
/// reported individually.
struct SubsethoodReport {
    bool domains_subset = false;    // Delta_S2 subset of Delta_S1
    bool mu0_leq = false;           // mu0_1 <= mu0_2
    bool core_in_cut = false;       // S1 inside the mu0_1-cut of S2
    bool weights_dominate = false;  // c1*w_delta(d)*sqrt(w_d) >= c2*... for d in D_S2
    bool holds = false;
    /// The core_in_cut condition is decided by corner checks plus a dense
    /// grid falsification pass and is therefore grid-approximate.
    std::string note;
};

/// Decides S1 subset-of S2 per the Prop. 3 conditions. grid_per_axis
/// controls the falsification grid for the core-containment condition.
SubsethoodReport crisp_subsethood(const Concept& s1, const Concept& s2,
                                  std::size_t grid_per_axis = 9);

} // namespace cspace
