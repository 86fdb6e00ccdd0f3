#include "cspace/oracle.hpp"

#include <cmath>

#include "cspace/metric.hpp"

namespace cspace {

namespace {
constexpr std::uint64_t kBatch = 65536;

std::uint64_t splitmix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}
} // namespace

std::uint64_t CounterRng::bits(std::uint64_t counter) const {
    return splitmix(splitmix(seed_) ^ splitmix(counter * 0xD1342543DE82EF95ull + 1));
}

double CounterRng::uniform(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
}

double IntegrationRegion::volume() const {
    double v = 1.0;
    for (std::size_t k = 0; k < lo.size(); ++k) v *= hi[k] - lo[k];
    return v;
}

IntegrationRegion IntegrationRegion::around(const Concept& s, double tau) {
    if (!(tau > 0.0 && tau < s.mu0()))
        throw parameter_error("truncation threshold must lie in (0, mu0)");
    const std::size_t n = s.space().dimension_count();
    const double eps_cut = s.epsilon(tau);
    IntegrationRegion r;
    r.lo.assign(n, std::numeric_limits<double>::infinity());
    r.hi.assign(n, -std::numeric_limits<double>::infinity());
    for (const Cuboid& c : s.core().cuboids())
        for (std::size_t k = 0; k < n; ++k) {
            const double off = eps_cut / s.weights().stretch(s.space(), k);
            r.lo[k] = std::min(r.lo[k], c.p_min[k] - off);
            r.hi[k] = std::max(r.hi[k], c.p_max[k] + off);
        }
    return r;
}

IntegrationRegion IntegrationRegion::merge(const IntegrationRegion& other) const {
    IntegrationRegion r = *this;
    for (std::size_t k = 0; k < lo.size(); ++k) {
        r.lo[k] = std::min(r.lo[k], other.lo[k]);
        r.hi[k] = std::max(r.hi[k], other.hi[k]);
    }
    return r;
}

McEstimate mc_measure(const std::function<double(const Point&)>& membership,
                      const IntegrationRegion& region, std::uint64_t samples,
                      std::uint64_t seed) {
    if (samples == 0) throw parameter_error("mc_measure needs at least one sample");
    const std::size_t n = region.lo.size();
    const double vol = region.volume();
    if (!(vol > 0.0)) throw parameter_error("degenerate integration region");

    CounterRng rng(seed);
    // per-batch partial sums, reduced in fixed batch order
    KahanSum total, total_sq;
    Point x(n);
    std::uint64_t done = 0;
    while (done < samples) {
        const std::uint64_t m = std::min(kBatch, samples - done);
        double bsum = 0.0, bsq = 0.0;
        for (std::uint64_t i = 0; i < m; ++i) {
            const std::uint64_t base = (done + i) * n;
            for (std::size_t k = 0; k < n; ++k)
                x[k] = region.lo[k] + (region.hi[k] - region.lo[k]) * rng.uniform(base + k);
            const double f = membership(x);
            bsum += f;
            bsq += f * f;
        }
        total.add(bsum);
        total_sq.add(bsq);
        done += m;
    }
    const double mean = total.value() / static_cast<double>(samples);
    const double var =
        std::max(0.0, total_sq.value() / static_cast<double>(samples) - mean * mean);
    McEstimate est;
    est.value = vol * mean;
    est.std_error = vol * std::sqrt(var / static_cast<double>(samples));
    est.samples = samples;
    return est;
}

namespace {

// union-bound tail mass of a concept below level tau
double truncation_tail(const Concept& s, double c_eff, const WeightSpec& w, double tau) {
    double tail = 0.0;
    for (const Cuboid& cu : s.core().cuboids())
        tail += fuzzy_cuboid_tail_measure(cu, s.mu0(), c_eff, w, s.space(), tau);
    return tail;
}

} // namespace

McEstimate mc_concept_size(const Concept& s, std::uint64_t samples, std::uint64_t seed,
                           double tau) {
    const IntegrationRegion region = IntegrationRegion::around(s, tau);
    McEstimate est = mc_measure([&](const Point& x) { return s.membership(x); }, region,
                                samples, seed);
    est.truncation_bound = truncation_tail(s, s.c(), s.weights(), tau);
    return est;
}

McEstimate mc_min_measure(const Concept& s1, const Concept& s2, const MeasureContext& ctx,
                          std::uint64_t samples, std::uint64_t seed, double tau) {
    const Concept a = s1.with_parameters(ctx.c, ctx.weights);
    const Concept b = s2.with_parameters(ctx.c, ctx.weights);
    const IntegrationRegion region =
        IntegrationRegion::around(a, tau).merge(IntegrationRegion::around(b, tau));
    McEstimate est = mc_measure(
        [&](const Point& x) { return std::min(a.membership(x), b.membership(x)); }, region,
        samples, seed);
    est.truncation_bound = std::min(truncation_tail(a, ctx.c, ctx.weights, tau),
                                    truncation_tail(b, ctx.c, ctx.weights, tau));
    return est;
}

McEstimate mc_hyperball_volume(double r, const DomainStructure& s, const WeightSpec& w,
                               std::uint64_t samples, std::uint64_t seed) {
    if (!(r > 0.0)) throw parameter_error("hit counting needs a positive radius");
    const std::size_t n = s.dimension_count();
    IntegrationRegion region;
    region.lo.assign(n, 0.0);
    region.hi.assign(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const double reach = r / w.stretch(s, k);
        region.lo[k] = -reach;
        region.hi[k] = reach;
    }
    const Point origin(n, 0.0);
    return mc_measure(
        [&](const Point& x) {
            return combined_distance(x, origin, s, w) <= r ? 1.0 : 0.0;
        },
        region, samples, seed);
}

DenseBetweenness sampled_betweenness(const Concept& s1, const Concept& s2,
                                     const Concept& s3, const BetweennessOptions& base,
                                     double density_factor) {
    BetweennessOptions dense = base;
    dense.alpha_levels =
        static_cast<std::size_t>(std::ceil(base.alpha_levels * density_factor));
    // candidate pairs scale with the product of the two clouds; spread the
    // requested factor across both sides
    dense.cut_samples = static_cast<std::size_t>(
        std::ceil(base.cut_samples * std::sqrt(density_factor)));
    dense.refine_starts = base.refine_starts + 2;
    const BetweennessProfile prof = betweenness_profile(s1, s2, s3, dense);
    DenseBetweenness out;
    out.soft = prof.soft;
    out.integral = prof.integral;
    return out;
}

QuadratureCheck quadrature_check(unsigned n, double tolerance) {
    // substitute x = e^{-u}: int_0^1 ln(x)^n dx = (-1)^n int_0^inf u^n e^{-u} du
    const auto integrand = [n](double u) {
        return std::pow(u, static_cast<double>(n)) * std::exp(-u);
    };
    // adaptive Simpson
    struct Simpson {
        const std::function<double(double)>& f;
        double run(double a, double b, double fa, double fb, double fm, double eps,
                   int depth) const {
            const double m = 0.5 * (a + b);
            const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
            const double flm = f(lm), frm = f(rm);
            const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
            const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
            const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
            if (depth <= 0 || std::abs(left + right - whole) < 15.0 * eps)
                return left + right + (left + right - whole) / 15.0;
            return run(a, m, fa, fm, flm, eps * 0.5, depth - 1) +
                   run(m, b, fm, fb, frm, eps * 0.5, depth - 1);
        }
    };
    const std::function<double(double)> f = integrand;
    const double upper = 60.0 + 10.0 * n; // exp(-u) tail far below 1e-12
    Simpson simpson{f};
    const double integral =
        simpson.run(0.0, upper, f(0.0), f(upper), f(0.5 * upper), 1e-12, 40);

    QuadratureCheck chk;
    chk.numeric = (n % 2 == 0 ? 1.0 : -1.0) * integral;
    chk.exact = log_power_integral(n);
    chk.relative_error = std::abs(chk.numeric - chk.exact) / std::abs(chk.exact);
    chk.pass = chk.relative_error <= tolerance;
    return chk;
}

} // namespace cspace
