#include "cspace/measure.hpp"

#include <cmath>
#include <numbers>

namespace cspace {

namespace {

constexpr std::size_t kMaxSubsetDims = 24;

double factorial(unsigned n) {
    double f = 1.0;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

// prod over domains with at least one selected dimension of
// n_delta! * pi^(n_delta/2) / Gamma(n_delta/2 + 1), where n_delta counts the
// selected dimensions only.
double ball_factor(const DomainStructure& s, const std::vector<unsigned>& selected_per_domain) {
    double out = 1.0;
    for (std::size_t di = 0; di < s.domain_count(); ++di) {
        const unsigned nd = selected_per_domain[di];
        if (nd == 0) continue;
        out *= factorial(nd) * std::pow(std::numbers::pi, nd / 2.0) / gamma_half(nd + 2);
    }
    return out;
}

void check_dims(const DomainStructure& s) {
    if (s.dimension_count() > kMaxSubsetDims)
        throw parameter_error("dimension-subset enumeration limited to 24 dimensions");
}

} // namespace

double gamma_half(unsigned twice_x) {
    if (twice_x == 0) throw parameter_error("gamma_half needs a positive argument");
    if (twice_x % 2 == 0) return factorial(twice_x / 2 - 1);
    double g = std::sqrt(std::numbers::pi); // Gamma(1/2)
    for (unsigned m = 1; m + 2 <= twice_x; m += 2) g *= m / 2.0;
    return g;
}

double log_power_integral(unsigned n) {
    return (n % 2 == 0 ? 1.0 : -1.0) * factorial(n);
}

double hyperball_volume_unweighted(double r, const DomainStructure& s) {
    if (r < 0.0) throw parameter_error("hyperball radius must be nonnegative");
    const std::size_t n = s.dimension_count();
    std::vector<unsigned> all(s.domain_count());
    for (std::size_t di = 0; di < s.domain_count(); ++di)
        all[di] = static_cast<unsigned>(s.domain_size(di));
    return std::pow(r, static_cast<double>(n)) / factorial(static_cast<unsigned>(n)) *
           ball_factor(s, all);
}

double hyperball_volume(double r, const DomainStructure& s, const WeightSpec& w) {
    double stretch = 1.0;
    for (std::size_t k = 0; k < s.dimension_count(); ++k)
        stretch *= w.stretch(s, k);
    return hyperball_volume_unweighted(r, s) / stretch;
}

double alpha_cut_volume(const Cuboid& c, double alpha, double mu0, double sens,
                        const WeightSpec& w, const DomainStructure& s) {
    if (!(alpha > 0.0)) throw parameter_error("alpha must be positive");
    if (!(sens > 0.0)) throw parameter_error("sensitivity c must be positive");
    if (alpha > mu0) return 0.0;
    check_dims(s);

    const std::size_t n = s.dimension_count();
    const double eps = -std::log(alpha / mu0) / sens;

    KahanSum total;
    std::vector<unsigned> sel(s.domain_count());
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        double extrusion = 1.0;
        double stretch = 1.0;
        unsigned i = 0;
        std::fill(sel.begin(), sel.end(), 0u);
        for (std::size_t k = 0; k < n; ++k) {
            if ((mask >> k) & 1u) {
                ++i;
                ++sel[s.domain_of(k)];
                stretch *= w.stretch(s, k);
            } else {
                extrusion *= c.width(k);
            }
        }
        const double ball = std::pow(eps, static_cast<double>(i)) / factorial(i) *
                            ball_factor(s, sel) / stretch;
        total.add(extrusion * ball);
    }
    return total.value();
}

double fuzzy_cuboid_measure(const Cuboid& c, double mu0, double sens,
                            const WeightSpec& w, const DomainStructure& s) {
    if (!(sens > 0.0)) throw parameter_error("sensitivity c must be positive");
    check_dims(s);
    const std::size_t n = s.dimension_count();

    double stretch_all = 1.0;
    for (std::size_t k = 0; k < n; ++k) stretch_all *= w.stretch(s, k);
    const double prefactor =
        mu0 / (std::pow(sens, static_cast<double>(n)) * stretch_all);

    KahanSum total;
    std::vector<unsigned> sel(s.domain_count());
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        double rest = 1.0;
        std::fill(sel.begin(), sel.end(), 0u);
        for (std::size_t k = 0; k < n; ++k) {
            if ((mask >> k) & 1u)
                ++sel[s.domain_of(k)];
            else
                rest *= w.stretch(s, k) * c.width(k) * sens; // a_d
        }
        total.add(rest * ball_factor(s, sel));
    }
    return prefactor * total.value();
}

double fuzzy_cuboid_tail_measure(const Cuboid& c, double mu0, double sens,
                                 const WeightSpec& w, const DomainStructure& s,
                                 double tau) {
    if (!(tau > 0.0)) throw parameter_error("tau must be positive");
    if (tau >= mu0) return fuzzy_cuboid_measure(c, mu0, sens, w, s);
    check_dims(s);
    const std::size_t n = s.dimension_count();
    const double T = std::log(mu0 / tau);

    // integral_0^tau V(alpha) d alpha via the incomplete-Gamma closed form:
    // int_0^t (-ln u)^i du = i! e^{-T} sum_{k<=i} T^k/k!  with T = -ln t.
    KahanSum below;
    std::vector<unsigned> sel(s.domain_count());
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        double extrusion = 1.0;
        double stretch = 1.0;
        unsigned i = 0;
        std::fill(sel.begin(), sel.end(), 0u);
        for (std::size_t k = 0; k < n; ++k) {
            if ((mask >> k) & 1u) {
                ++i;
                ++sel[s.domain_of(k)];
                stretch *= w.stretch(s, k);
            } else {
                extrusion *= c.width(k);
            }
        }
        double partial = 0.0; // e^{-T} sum_{k<=i} T^k/k!
        double term = std::exp(-T);
        for (unsigned k = 0; k <= i; ++k) {
            partial += term;
            term *= T / (k + 1.0);
        }
        below.add(extrusion * ball_factor(s, sel) / stretch *
                  mu0 / std::pow(sens, static_cast<double>(i)) * partial);
    }
    return below.value() - tau * alpha_cut_volume(c, tau, mu0, sens, w, s);
}

namespace {

double inclusion_exclusion_size(const std::vector<Cuboid>& cuboids, double mu0,
                                double sens, const WeightSpec& w,
                                const DomainStructure& s) {
    const std::size_t m = cuboids.size();
    if (m > 20)
        throw parameter_error("inclusion-exclusion limited to 20 cuboids");
    KahanSum total;
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
        std::optional<Cuboid> cut;
        int l = 0;
        for (std::size_t j = 0; j < m && true; ++j) {
            if (!((mask >> j) & 1u)) continue;
            ++l;
            cut = cut ? cut->intersect(cuboids[j]) : std::optional<Cuboid>(cuboids[j]);
            if (!cut) break;
        }
        if (!cut) continue; // only possible for degenerate input lists
        const double sign = (l % 2 == 1) ? 1.0 : -1.0;
        total.add(sign * fuzzy_cuboid_measure(*cut, mu0, sens, w, s));
    }
    return total.value();
}

} // namespace

double concept_size(const Concept& s) {
    return inclusion_exclusion_size(s.core().cuboids(), s.mu0(), s.c(), s.weights(),
                                    s.space());
}

double contextual_size(const Concept& s, const MeasureContext& ctx) {
    if (!ctx.space || !(*ctx.space == s.space()))
        throw structural_error("measure context does not match the concept's domains");
    return inclusion_exclusion_size(s.core().cuboids(), s.mu0(), ctx.c, ctx.weights,
                                    s.space());
}

} // namespace cspace
