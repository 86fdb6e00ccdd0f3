#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cspace/errors.hpp"

namespace cspace {

/// A point, given as coordinates for the dimensions of some DomainStructure,
/// in that structure's dimension order.
using Point = std::vector<double>;

/// Ordered quality dimensions partitioned into named domains.
///
/// The dimension order is fixed and total; every dimension belongs to
/// exactly one domain and no domain is empty. Distance within a domain is
/// Euclidean, domains are combined with a weighted Manhattan sum.
class DomainStructure {
public:
    struct Domain {
        std::string name;
        std::vector<std::size_t> dims; // indices into dimension_names(), ascending
    };

    DomainStructure(std::vector<std::string> dimension_names,
                    std::vector<Domain> domains);

    /// Convenience builder: ordered (domain name, dimension names) groups.
    /// Dimension order is the concatenation order of the groups.
    static std::shared_ptr<const DomainStructure>
    make(const std::vector<std::pair<std::string, std::vector<std::string>>>& groups);

    std::size_t dimension_count() const { return dimension_names_.size(); }
    std::size_t domain_count() const { return domains_.size(); }
    const std::vector<std::string>& dimension_names() const { return dimension_names_; }
    const std::vector<Domain>& domains() const { return domains_; }
    const Domain& domain(std::size_t i) const { return domains_[i]; }
    std::size_t domain_size(std::size_t i) const { return domains_[i].dims.size(); }

    /// Domain index owning dimension d.
    std::size_t domain_of(std::size_t dim) const { return dim_domain_[dim]; }

    std::optional<std::size_t> find_dimension(const std::string& name) const;
    std::optional<std::size_t> find_domain(const std::string& name) const;

    bool has_domain(const std::string& name) const { return find_domain(name).has_value(); }

    /// Restriction to a subset of domains (kept in this structure's order).
    /// Also returns, for each kept dimension, its index in the parent.
    std::shared_ptr<const DomainStructure>
    subspace(const std::vector<std::string>& domain_names,
             std::vector<std::size_t>* parent_dim_indices = nullptr) const;

    /// All domain names, in order.
    std::vector<std::string> domain_names() const;

    bool operator==(const DomainStructure& other) const;

private:
    std::vector<std::string> dimension_names_;
    std::vector<Domain> domains_;
    std::vector<std::size_t> dim_domain_;
};

using StructurePtr = std::shared_ptr<const DomainStructure>;

/// Domain and dimension salience weights for one DomainStructure.
///
/// Invariants (checked by validated()): all weights strictly positive,
/// domain weights sum to the number of domains and the dimension weights
/// of each domain sum to 1, both within 1e-9.
class WeightSpec {
public:
    static constexpr double kSumTolerance = 1e-9;

    /// Validates the invariants and throws validation_error on violation.
    static WeightSpec validated(const DomainStructure& s,
                                std::vector<double> domain_weights,
                                std::vector<double> dimension_weights);

    /// Rescales arbitrary positive weights to the required sums and reports
    /// the applied factors (domain factor first, then one per domain).
    static WeightSpec normalized(const DomainStructure& s,
                                 std::vector<double> raw_domain_weights,
                                 std::vector<double> raw_dimension_weights,
                                 std::vector<double>* applied_factors = nullptr);

    /// All domain weights 1, dimension weights uniform within each domain.
    static WeightSpec uniform(const DomainStructure& s);

    const std::vector<double>& domain_weights() const { return domain_weights_; }
    const std::vector<double>& dimension_weights() const { return dimension_weights_; }
    double domain_weight(std::size_t domain) const { return domain_weights_[domain]; }
    double dimension_weight(std::size_t dim) const { return dimension_weights_[dim]; }

    /// Effective one-dimensional stretch w_delta(d) * sqrt(w_d).
    double stretch(const DomainStructure& s, std::size_t dim) const;

    /// Elementwise linear interpolation (t from this, 1-t from other);
    /// valid weight specs interpolate to valid weight specs.
    WeightSpec interpolate(const WeightSpec& other, double t) const;

private:
    WeightSpec() = default;
    std::vector<double> domain_weights_;
    std::vector<double> dimension_weights_;
};

} // namespace cspace
