#include "cspace/domain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace cspace {

DomainStructure::DomainStructure(std::vector<std::string> dimension_names,
                                 std::vector<Domain> domains)
    : dimension_names_(std::move(dimension_names)), domains_(std::move(domains)) {
    if (dimension_names_.empty())
        throw validation_error("domain structure needs at least one dimension");
    std::set<std::string> seen(dimension_names_.begin(), dimension_names_.end());
    if (seen.size() != dimension_names_.size())
        throw validation_error("duplicate dimension name in domain structure");
    dim_domain_.assign(dimension_names_.size(), static_cast<std::size_t>(-1));
    std::set<std::string> dnames;
    for (std::size_t di = 0; di < domains_.size(); ++di) {
        const Domain& d = domains_[di];
        if (d.dims.empty())
            throw validation_error("empty domain '" + d.name + "'");
        if (!dnames.insert(d.name).second)
            throw validation_error("duplicate domain name '" + d.name + "'");
        for (std::size_t k : d.dims) {
            if (k >= dimension_names_.size())
                throw validation_error("domain '" + d.name + "' references unknown dimension");
            if (dim_domain_[k] != static_cast<std::size_t>(-1))
                throw validation_error("dimension '" + dimension_names_[k] +
                                       "' assigned to two domains");
            dim_domain_[k] = di;
        }
    }
    for (std::size_t k = 0; k < dim_domain_.size(); ++k)
        if (dim_domain_[k] == static_cast<std::size_t>(-1))
            throw validation_error("dimension '" + dimension_names_[k] + "' not in any domain");
}

std::shared_ptr<const DomainStructure>
DomainStructure::make(const std::vector<std::pair<std::string, std::vector<std::string>>>& groups) {
    std::vector<std::string> dims;
    std::vector<Domain> doms;
    for (const auto& [dname, members] : groups) {
        Domain d;
        d.name = dname;
        for (const auto& m : members) {
            d.dims.push_back(dims.size());
            dims.push_back(m);
        }
        doms.push_back(std::move(d));
    }
    return std::make_shared<DomainStructure>(std::move(dims), std::move(doms));
}

std::optional<std::size_t> DomainStructure::find_dimension(const std::string& name) const {
    for (std::size_t i = 0; i < dimension_names_.size(); ++i)
        if (dimension_names_[i] == name) return i;
    return std::nullopt;
}

std::optional<std::size_t> DomainStructure::find_domain(const std::string& name) const {
    for (std::size_t i = 0; i < domains_.size(); ++i)
        if (domains_[i].name == name) return i;
    return std::nullopt;
}

std::shared_ptr<const DomainStructure>
DomainStructure::subspace(const std::vector<std::string>& domain_names,
                          std::vector<std::size_t>* parent_dim_indices) const {
    if (domain_names.empty())
        throw structural_error("subspace needs at least one domain");
    std::set<std::string> wanted(domain_names.begin(), domain_names.end());
    for (const auto& n : domain_names)
        if (!has_domain(n))
            throw structural_error("unknown domain '" + n + "' in subspace request");

    std::vector<std::string> dims;
    std::vector<Domain> doms;
    std::vector<std::size_t> parent_idx;
    for (const Domain& d : domains_) {
        if (!wanted.count(d.name)) continue;
        Domain nd;
        nd.name = d.name;
        for (std::size_t k : d.dims) {
            nd.dims.push_back(dims.size());
            dims.push_back(dimension_names_[k]);
            parent_idx.push_back(k);
        }
        doms.push_back(std::move(nd));
    }
    if (parent_dim_indices) *parent_dim_indices = std::move(parent_idx);
    return std::make_shared<DomainStructure>(std::move(dims), std::move(doms));
}

std::vector<std::string> DomainStructure::domain_names() const {
    std::vector<std::string> out;
    out.reserve(domains_.size());
    for (const auto& d : domains_) out.push_back(d.name);
    return out;
}

bool DomainStructure::operator==(const DomainStructure& other) const {
    if (dimension_names_ != other.dimension_names_) return false;
    if (domains_.size() != other.domains_.size()) return false;
    for (std::size_t i = 0; i < domains_.size(); ++i)
        if (domains_[i].name != other.domains_[i].name || domains_[i].dims != other.domains_[i].dims)
            return false;
    return true;
}

WeightSpec WeightSpec::validated(const DomainStructure& s,
                                 std::vector<double> domain_weights,
                                 std::vector<double> dimension_weights) {
    if (domain_weights.size() != s.domain_count())
        throw structural_error("domain weight count does not match structure");
    if (dimension_weights.size() != s.dimension_count())
        throw structural_error("dimension weight count does not match structure");
    for (double w : domain_weights)
        if (!(w > 0.0)) throw validation_error("domain weights must be strictly positive");
    for (double w : dimension_weights)
        if (!(w > 0.0)) throw validation_error("dimension weights must be strictly positive");

    const double dsum = std::accumulate(domain_weights.begin(), domain_weights.end(), 0.0);
    if (std::abs(dsum - static_cast<double>(s.domain_count())) > kSumTolerance) {
        std::ostringstream os;
        os << "domain weights sum to " << dsum << ", expected " << s.domain_count();
        throw validation_error(os.str());
    }
    for (std::size_t di = 0; di < s.domain_count(); ++di) {
        double sum = 0.0;
        for (std::size_t k : s.domain(di).dims) sum += dimension_weights[k];
        if (std::abs(sum - 1.0) > kSumTolerance) {
            std::ostringstream os;
            os << "dimension weights of domain '" << s.domain(di).name << "' sum to " << sum
               << ", expected 1";
            throw validation_error(os.str());
        }
    }
    WeightSpec w;
    w.domain_weights_ = std::move(domain_weights);
    w.dimension_weights_ = std::move(dimension_weights);
    return w;
}

WeightSpec WeightSpec::normalized(const DomainStructure& s,
                                  std::vector<double> raw_domain_weights,
                                  std::vector<double> raw_dimension_weights,
                                  std::vector<double>* applied_factors) {
    if (raw_domain_weights.size() != s.domain_count() ||
        raw_dimension_weights.size() != s.dimension_count())
        throw structural_error("weight count does not match structure");
    for (double w : raw_domain_weights)
        if (!(w > 0.0)) throw validation_error("domain weights must be strictly positive");
    for (double w : raw_dimension_weights)
        if (!(w > 0.0)) throw validation_error("dimension weights must be strictly positive");

    std::vector<double> factors;
    const double dsum =
        std::accumulate(raw_domain_weights.begin(), raw_domain_weights.end(), 0.0);
    const double dfac = static_cast<double>(s.domain_count()) / dsum;
    factors.push_back(dfac);
    for (double& w : raw_domain_weights) w *= dfac;
    for (std::size_t di = 0; di < s.domain_count(); ++di) {
        double sum = 0.0;
        for (std::size_t k : s.domain(di).dims) sum += raw_dimension_weights[k];
        const double f = 1.0 / sum;
        factors.push_back(f);
        for (std::size_t k : s.domain(di).dims) raw_dimension_weights[k] *= f;
    }
    if (applied_factors) *applied_factors = std::move(factors);
    WeightSpec w;
    w.domain_weights_ = std::move(raw_domain_weights);
    w.dimension_weights_ = std::move(raw_dimension_weights);
    return w;
}

WeightSpec WeightSpec::uniform(const DomainStructure& s) {
    std::vector<double> dw(s.domain_count(), 1.0);
    std::vector<double> xw(s.dimension_count(), 0.0);
    for (std::size_t di = 0; di < s.domain_count(); ++di)
        for (std::size_t k : s.domain(di).dims)
            xw[k] = 1.0 / static_cast<double>(s.domain_size(di));
    WeightSpec w;
    w.domain_weights_ = std::move(dw);
    w.dimension_weights_ = std::move(xw);
    return w;
}

double WeightSpec::stretch(const DomainStructure& s, std::size_t dim) const {
    return domain_weights_[s.domain_of(dim)] * std::sqrt(dimension_weights_[dim]);
}

WeightSpec WeightSpec::interpolate(const WeightSpec& other, double t) const {
    WeightSpec w;
    w.domain_weights_.resize(domain_weights_.size());
    w.dimension_weights_.resize(dimension_weights_.size());
    for (std::size_t i = 0; i < domain_weights_.size(); ++i)
        w.domain_weights_[i] = t * domain_weights_[i] + (1.0 - t) * other.domain_weights_[i];
    for (std::size_t i = 0; i < dimension_weights_.size(); ++i)
        w.dimension_weights_[i] =
            t * dimension_weights_[i] + (1.0 - t) * other.dimension_weights_[i];
    return w;
}

} // namespace cspace
