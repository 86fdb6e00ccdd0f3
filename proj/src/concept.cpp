#include "cspace/concept.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "cspace/metric.hpp"

namespace cspace {

Concept::Concept(StructurePtr space, CoreRegion core, double mu0, double c,
                 WeightSpec weights)
    : space_(std::move(space)), core_(std::move(core)), mu0_(mu0), c_(c),
      weights_(std::move(weights)) {
    if (!space_) throw structural_error("concept needs a domain structure");
    if (!(mu0_ > 0.0 && mu0_ <= 1.0))
        throw parameter_error("mu0 must lie in (0,1]");
    if (!(c_ > 0.0)) throw parameter_error("sensitivity c must be positive");
    if (weights_.domain_weights().size() != space_->domain_count())
        throw structural_error("weights do not match the concept's domains");
    for (const Cuboid& cu : core_.cuboids())
        if (cu.dimension_count() != space_->dimension_count())
            throw structural_error("core cuboid does not match the concept's dimensions");
}

double Concept::core_distance(const Point& x) const {
    return core_.distance(x, *space_, weights_);
}

double Concept::membership(const Point& x) const {
    return mu0_ * std::exp(-c_ * core_distance(x));
}

double Concept::epsilon(double alpha) const {
    return -std::log(alpha / mu0_) / c_;
}

bool Concept::alpha_cut_contains(const Point& x, double alpha) const {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw parameter_error("alpha must lie in (0,1]");
    if (alpha > mu0_) return false;
    return core_distance(x) <= epsilon(alpha) + 1e-15;
}

Concept Concept::project(const std::vector<std::string>& target_domains) const {
    if (target_domains.empty())
        throw structural_error("projection target must be nonempty");
    for (const auto& name : target_domains)
        if (!space_->has_domain(name))
            throw structural_error("projection target '" + name +
                                   "' is not a domain of this concept");

    std::vector<std::size_t> parent_dims;
    StructurePtr sub = space_->subspace(target_domains, &parent_dims);

    std::vector<Cuboid> cuboids;
    cuboids.reserve(core_.cuboids().size());
    for (const Cuboid& c : core_.cuboids()) {
        Point lo(parent_dims.size()), hi(parent_dims.size());
        for (std::size_t k = 0; k < parent_dims.size(); ++k) {
            lo[k] = c.p_min[parent_dims[k]];
            hi[k] = c.p_max[parent_dims[k]];
        }
        cuboids.emplace_back(std::move(lo), std::move(hi));
    }

    // multiplicative renormalization: kept domain weights scaled to sum |Delta'|
    double kept = 0.0;
    std::vector<double> dw;
    for (std::size_t di = 0; di < sub->domain_count(); ++di) {
        const std::size_t parent = *space_->find_domain(sub->domain(di).name);
        dw.push_back(weights_.domain_weight(parent));
        kept += weights_.domain_weight(parent);
    }
    const double scale = static_cast<double>(sub->domain_count()) / kept;
    for (double& w : dw) w *= scale;

    std::vector<double> xw(parent_dims.size());
    for (std::size_t k = 0; k < parent_dims.size(); ++k)
        xw[k] = weights_.dimension_weight(parent_dims[k]);

    return Concept(sub, CoreRegion::validate(std::move(cuboids), *sub), mu0_, c_,
                   WeightSpec::validated(*sub, std::move(dw), std::move(xw)));
}

Concept Concept::with_parameters(double c, WeightSpec weights) const {
    return Concept(space_, core_, mu0_, c, std::move(weights));
}

namespace {

// Restrict a point on s1's dimensions to s2's dimensions (s2 domains are a
// subset of s1's).
Point restrict_point(const Point& x, const DomainStructure& s1, const DomainStructure& s2) {
    Point out(s2.dimension_count());
    for (std::size_t k = 0; k < s2.dimension_count(); ++k) {
        auto idx = s1.find_dimension(s2.dimension_names()[k]);
        out[k] = x[*idx];
    }
    return out;
}

} // namespace

SubsethoodReport crisp_subsethood(const Concept& s1, const Concept& s2,
                                  std::size_t grid_per_axis) {
    SubsethoodReport rep;
    const DomainStructure& a = s1.space();
    const DomainStructure& b = s2.space();

    rep.domains_subset = true;
    for (const auto& dom : b.domains())
        if (!a.has_domain(dom.name)) rep.domains_subset = false;

    rep.mu0_leq = s1.mu0() <= s2.mu0() + 1e-12;

    // weight/c condition over the dimensions of S2
    rep.weights_dominate = rep.domains_subset;
    if (rep.domains_subset) {
        for (std::size_t k = 0; k < b.dimension_count(); ++k) {
            auto ka = a.find_dimension(b.dimension_names()[k]);
            const double lhs = s1.c() * s1.weights().stretch(a, *ka);
            const double rhs = s2.c() * s2.weights().stretch(b, k);
            if (lhs < rhs - 1e-12) {
                rep.weights_dominate = false;
                break;
            }
        }
    }

    // S1 inside the mu0_1-cut of S2: corners first, then grid falsification.
    rep.core_in_cut = rep.domains_subset && rep.mu0_leq;
    if (rep.core_in_cut) {
        const double alpha = s1.mu0();
        auto inside = [&](const Point& x) {
            return s2.alpha_cut_contains(restrict_point(x, a, b), alpha);
        };
        for (const Cuboid& c : s1.core().cuboids()) {
            const std::size_t n = c.dimension_count();
            for (std::size_t mask = 0; mask < (std::size_t{1} << n) && rep.core_in_cut; ++mask)
                if (!inside(c.corner(mask))) rep.core_in_cut = false;
            if (!rep.core_in_cut) break;
            // the cut of a cuboid union is not corner-determined; probe a grid
            const std::size_t g = std::max<std::size_t>(grid_per_axis, 2);
            std::vector<std::size_t> idx(n, 0);
            while (rep.core_in_cut) {
                Point x(n);
                for (std::size_t k = 0; k < n; ++k)
                    x[k] = c.p_min[k] + c.width(k) * static_cast<double>(idx[k]) /
                                            static_cast<double>(g - 1);
                if (!inside(x)) rep.core_in_cut = false;
                std::size_t k = 0;
                for (; k < n; ++k) {
                    if (++idx[k] < g) break;
                    idx[k] = 0;
                }
                if (k == n) break;
            }
            if (!rep.core_in_cut) break;
        }
        rep.note = "core containment decided on cuboid corners plus a " +
                   std::to_string(grid_per_axis) + "-per-axis grid (grid-approximate)";
    }

    rep.holds = rep.domains_subset && rep.mu0_leq && rep.core_in_cut && rep.weights_dominate;
    return rep;
}

} // namespace cspace
