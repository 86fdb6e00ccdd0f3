#include "cspace/relations.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "cspace/metric.hpp"

namespace cspace {

const char* to_string(WeightMode m) {
    switch (m) {
        case WeightMode::Uniform: return "uniform";
        case WeightMode::First: return "first";
        case WeightMode::Second: return "second";
    }
    return "?";
}

namespace {

// Reorders a concept's dimensions/domains to match a target structure
// carrying the same domains (possibly in a different order).
Concept align_to(const Concept& s, const StructurePtr& target) {
    if (s.space() == *target) return s;
    const DomainStructure& a = s.space();
    std::vector<std::size_t> dim_map(target->dimension_count());
    for (std::size_t k = 0; k < target->dimension_count(); ++k) {
        auto idx = a.find_dimension(target->dimension_names()[k]);
        if (!idx) throw structural_error("cannot align concept to target structure");
        dim_map[k] = *idx;
    }
    std::vector<Cuboid> cuboids;
    for (const Cuboid& c : s.core().cuboids()) {
        Point lo(dim_map.size()), hi(dim_map.size());
        for (std::size_t k = 0; k < dim_map.size(); ++k) {
            lo[k] = c.p_min[dim_map[k]];
            hi[k] = c.p_max[dim_map[k]];
        }
        cuboids.emplace_back(std::move(lo), std::move(hi));
    }
    std::vector<double> dw(target->domain_count());
    for (std::size_t di = 0; di < target->domain_count(); ++di)
        dw[di] = s.weights().domain_weight(*a.find_domain(target->domain(di).name));
    std::vector<double> xw(target->dimension_count());
    for (std::size_t k = 0; k < target->dimension_count(); ++k)
        xw[k] = s.weights().dimension_weight(dim_map[k]);
    return Concept(target, CoreRegion::validate(std::move(cuboids), *target), s.mu0(),
                   s.c(), WeightSpec::validated(*target, std::move(dw), std::move(xw)));
}

Concept intersection_concept(const FuzzyIntersection& fi, const Concept& reference,
                             double c, const WeightSpec& w) {
    return Concept(reference.space_ptr(),
                   CoreRegion::validate(fi.cuboids, reference.space()), fi.mu, c, w);
}

} // namespace

CommonProjection common_projection(const Concept& s1, const Concept& s2,
                                   const Concept* s3) {
    CommonProjection out;
    for (const auto& dom : s1.space().domains()) {
        if (!s2.space().has_domain(dom.name)) continue;
        if (s3 && !s3->space().has_domain(dom.name)) continue;
        out.shared_domains.push_back(dom.name);
    }
    if (out.shared_domains.empty()) return out;
    Concept p1 = s1.project(out.shared_domains);
    out.projected.push_back(p1);
    out.projected.push_back(align_to(s2.project(out.shared_domains), p1.space_ptr()));
    if (s3)
        out.projected.push_back(align_to(s3->project(out.shared_domains), p1.space_ptr()));
    return out;
}

RelationReport subsethood_degree(const Concept& s1, const Concept& s2) {
    RelationReport rep;
    CommonProjection proj = common_projection(s1, s2);
    rep.shared_domains = proj.shared_domains;
    if (proj.empty()) {
        rep.method = "empty-domain-overlap";
        return rep;
    }
    const Concept& a = proj.projected[0];
    const Concept& b = proj.projected[1];
    MeasureContext ctx{b.space_ptr(), b.c(), b.weights()};

    FuzzyIntersection fi = fuzzy_intersection(a, b);
    const double num = contextual_size(intersection_concept(fi, a, ctx.c, ctx.weights), ctx);
    const double den = contextual_size(a, ctx);
    rep.value = std::clamp(num / den, 0.0, 1.0);
    rep.context = ctx;
    rep.method = fi.crisp ? "analytic-crisp-overlap" : "analytic-ridge";
    return rep;
}

RelationReport implication(const Concept& s1, const Concept& s2) {
    return subsethood_degree(s1, s2);
}

RelationReport similarity_sub(const Concept& s1, const Concept& s2) {
    return subsethood_degree(s1, s2);
}

RelationReport similarity_jaccard(const Concept& s1, const Concept& s2) {
    RelationReport rep;
    CommonProjection proj = common_projection(s1, s2);
    rep.shared_domains = proj.shared_domains;
    if (proj.empty()) {
        rep.method = "empty-domain-overlap";
        return rep;
    }
    const Concept& a = proj.projected[0];
    const Concept& b = proj.projected[1];
    MeasureContext ctx{a.space_ptr(), std::min(a.c(), b.c()),
                       a.weights().interpolate(b.weights(), 0.5)};

    FuzzyIntersection fi = fuzzy_intersection(a, b);
    const double num = contextual_size(intersection_concept(fi, a, ctx.c, ctx.weights), ctx);
    const double m1 = contextual_size(a, ctx);
    const double m2 = contextual_size(b, ctx);
    double mcrisp = 0.0;
    if (auto crisp = intersect_cores(a.core(), b.core(), a.space()))
        mcrisp = contextual_size(Concept(a.space_ptr(), *crisp, std::min(a.mu0(), b.mu0()),
                                         ctx.c, ctx.weights),
                                 ctx);
    const double m_union = m1 + m2 - mcrisp;
    rep.value = m_union > 0.0 ? std::clamp(num / m_union, 0.0, 1.0) : 0.0;
    rep.context = ctx;
    rep.method = fi.crisp ? "analytic-crisp-overlap" : "analytic-ridge";
    return rep;
}

// ---------------------------------------------------------------------------
// betweenness
// ---------------------------------------------------------------------------

namespace {

// One concept's alpha-cut with exact projection onto it: clamp to the
// nearest core cuboid, then shrink along that segment to the eps-boundary.
class AlphaCut {
public:
    AlphaCut(const Concept& s, double alpha) : s_(&s) {
        empty_ = alpha > s.mu0();
        eps_ = empty_ ? 0.0 : s.epsilon(alpha);
    }

    bool empty() const { return empty_; }
    double eps() const { return eps_; }
    const Concept& owner() const { return *s_; }

    Point project(Point p) const {
        double best = std::numeric_limits<double>::infinity();
        Point clamp;
        for (const Cuboid& c : s_->core().cuboids()) {
            Point q = c.clamp(p);
            const double d = combined_distance(p, q, s_->space(), s_->weights());
            if (d < best) {
                best = d;
                clamp = std::move(q);
            }
        }
        if (best <= eps_) return p;
        const double f = (best - eps_) / best;
        for (std::size_t k = 0; k < p.size(); ++k) p[k] += (clamp[k] - p[k]) * f;
        return p;
    }

    // coordinate range the cut can reach in dimension k
    std::pair<double, double> extent(std::size_t k) const {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        const double off = eps_ / s_->weights().stretch(s_->space(), k);
        for (const Cuboid& c : s_->core().cuboids()) {
            lo = std::min(lo, c.p_min[k] - off);
            hi = std::max(hi, c.p_max[k] + off);
        }
        return {lo, hi};
    }

private:
    const Concept* s_;
    double eps_ = 0.0;
    bool empty_ = false;
};

// Additive low-discrepancy sequence from the plastic-constant family.
std::vector<double> lds_alphas(std::size_t dims) {
    double g = 1.5;
    for (int it = 0; it < 64; ++it)
        g = std::pow(1.0 + g, 1.0 / (static_cast<double>(dims) + 1.0));
    std::vector<double> a(dims);
    double p = 1.0;
    for (std::size_t k = 0; k < dims; ++k) {
        p /= g;
        a[k] = p;
    }
    return a;
}

std::vector<Point> cut_candidates(const AlphaCut& cut, std::size_t lds_count,
                                  std::uint64_t seed) {
    const Concept& s = cut.owner();
    const std::size_t n = s.space().dimension_count();
    std::vector<Point> pts;

    for (const Cuboid& c : s.core().cuboids()) {
        if (n <= 10) {
            for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask)
                pts.push_back(c.corner(mask));
        }
        Point mid(n);
        for (std::size_t k = 0; k < n; ++k) mid[k] = 0.5 * (c.p_min[k] + c.p_max[k]);
        for (std::size_t k = 0; k < n; ++k) {
            const double off = cut.eps() / s.weights().stretch(s.space(), k);
            Point p = mid;
            p[k] = c.p_min[k] - off;
            pts.push_back(cut.project(std::move(p)));
            p = mid;
            p[k] = c.p_max[k] + off;
            pts.push_back(cut.project(std::move(p)));
        }
    }

    // low-discrepancy interior/boundary samples: box point + scaled direction
    const std::vector<double> as = lds_alphas(2 * n + 1);
    Point blo(n, std::numeric_limits<double>::infinity());
    Point bhi(n, -std::numeric_limits<double>::infinity());
    for (const Cuboid& c : s.core().cuboids())
        for (std::size_t k = 0; k < n; ++k) {
            blo[k] = std::min(blo[k], c.p_min[k]);
            bhi[k] = std::max(bhi[k], c.p_max[k]);
        }
    const double start = static_cast<double>(seed % 8191);
    for (std::size_t i = 0; i < lds_count; ++i) {
        const double t = start + static_cast<double>(i) + 1.0;
        Point p(n), u(n);
        double norm = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double b = t * as[k] - std::floor(t * as[k] + 0.5) + 0.5; // frac around 0.5
            p[k] = blo[k] + (bhi[k] - blo[k]) * std::min(std::max(b, 0.0), 1.0);
            u[k] = t * as[n + k] - std::floor(t * as[n + k]) - 0.5;
            norm += s.weights().stretch(s.space(), k) * std::abs(u[k]);
        }
        if (norm < 1e-12) {
            u[0] = 1.0;
            norm = s.weights().stretch(s.space(), 0);
        }
        double r = t * as[2 * n] - std::floor(t * as[2 * n]);
        r = cut.eps() * std::pow(r, 1.0 / static_cast<double>(n));
        for (std::size_t k = 0; k < n; ++k) p[k] += u[k] * (r / norm);
        pts.push_back(cut.project(std::move(p)));
    }
    return pts;
}

struct PairScore {
    double value;
    std::size_t i, j;
};

class AlphaEvaluator {
public:
    AlphaEvaluator(const Concept& s1, const Concept& s2, const Concept& s3, double alpha,
                   const WeightSpec& metric_w, const BetweennessOptions& opts)
        : cut1_(s1, alpha), cut2_(s2, alpha), cut3_(s3, alpha), w_(metric_w),
          space_(&s1.space()), opts_(opts) {}

    bool middle_empty() const { return cut2_.empty(); }
    bool outer_empty() const { return cut1_.empty() || cut3_.empty(); }

    double run() {
        X_ = cut_candidates(cut1_, opts_.cut_samples, opts_.seed);
        Z_ = cut_candidates(cut3_, opts_.cut_samples, opts_.seed + 1);
        std::vector<Point> ys = cut_candidates(cut2_, opts_.cut_samples, opts_.seed + 2);

        // rank y candidates by the candidate-cloud inner maximum
        std::vector<std::pair<double, std::size_t>> ranked;
        ranked.reserve(ys.size());
        for (std::size_t q = 0; q < ys.size(); ++q)
            ranked.emplace_back(cloud_max(ys[q]).value, q);
        std::sort(ranked.begin(), ranked.end());

        double best = std::numeric_limits<double>::infinity();
        const std::size_t starts = std::min(opts_.refine_starts, ranked.size());
        for (std::size_t r = 0; r < starts; ++r) {
            Point y = ys[ranked[r].second];
            for (int round = 0; round < 2; ++round) {
                y = refine_y(y);
                const double v = refined_max(y);
                best = std::min(best, v);
            }
        }
        return best;
    }

private:
    double ratio(const Point& x, const Point& y, const Point& z) const {
        const double dxz = combined_distance(x, z, *space_, w_);
        const double den = combined_distance(x, y, *space_, w_) +
                           combined_distance(y, z, *space_, w_);
        return den == 0.0 ? 1.0 : dxz / den;
    }

    PairScore cloud_max(const Point& y) const {
        PairScore best{-1.0, 0, 0};
        std::vector<double> dxy(X_.size()), dyz(Z_.size());
        for (std::size_t i = 0; i < X_.size(); ++i)
            dxy[i] = combined_distance(X_[i], y, *space_, w_);
        for (std::size_t j = 0; j < Z_.size(); ++j)
            dyz[j] = combined_distance(y, Z_[j], *space_, w_);
        for (std::size_t i = 0; i < X_.size(); ++i)
            for (std::size_t j = 0; j < Z_.size(); ++j) {
                const double den = dxy[i] + dyz[j];
                const double v =
                    den == 0.0 ? 1.0 : combined_distance(X_[i], Z_[j], *space_, w_) / den;
                if (v > best.value) best = {v, i, j};
            }
        return best;
    }

    // subset of strongest pairs used as the objective while moving y
    std::vector<std::pair<std::size_t, std::size_t>> top_pairs(const Point& y,
                                                               std::size_t count) const {
        std::vector<PairScore> scores;
        std::vector<double> dxy(X_.size()), dyz(Z_.size());
        for (std::size_t i = 0; i < X_.size(); ++i)
            dxy[i] = combined_distance(X_[i], y, *space_, w_);
        for (std::size_t j = 0; j < Z_.size(); ++j)
            dyz[j] = combined_distance(y, Z_[j], *space_, w_);
        scores.reserve(X_.size() * Z_.size());
        for (std::size_t i = 0; i < X_.size(); ++i)
            for (std::size_t j = 0; j < Z_.size(); ++j) {
                const double den = dxy[i] + dyz[j];
                scores.push_back(
                    {den == 0.0 ? 1.0 : combined_distance(X_[i], Z_[j], *space_, w_) / den,
                     i, j});
            }
        const std::size_t keep = std::min(count, scores.size());
        std::partial_sort(scores.begin(), scores.begin() + keep, scores.end(),
                          [](const PairScore& a, const PairScore& b) {
                              return a.value > b.value;
                          });
        std::vector<std::pair<std::size_t, std::size_t>> out;
        out.reserve(keep);
        for (std::size_t k = 0; k < keep; ++k) out.emplace_back(scores[k].i, scores[k].j);
        return out;
    }

    Point refine_y(Point y) {
        const std::size_t n = y.size();
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t it = 0; it < opts_.descent_iterations; ++it) {
            if (it % 10 == 0) pairs = top_pairs(y, 64); // refresh the adversary set
            auto objective = [&](const Point& cand) {
                double worst = -1.0;
                for (const auto& [i, j] : pairs)
                    worst = std::max(worst, ratio(X_[i], cand, Z_[j]));
                return worst;
            };
            double cur = objective(y);
            bool improved = false;
            for (std::size_t k = 0; k < n; ++k) {
                const auto [lo, hi] = cut2_.extent(k);
                for (std::size_t p = 0; p < opts_.line_points; ++p) {
                    Point cand = y;
                    cand[k] = lo + (hi - lo) * static_cast<double>(p) /
                                       static_cast<double>(opts_.line_points - 1);
                    cand = cut2_.project(std::move(cand));
                    const double v = objective(cand);
                    if (v < cur - 1e-12) {
                        cur = v;
                        y = cand;
                        improved = true;
                    }
                }
            }
            if (!improved) break;
        }
        return y;
    }

    double refined_max(const Point& y) {
        PairScore seed = cloud_max(y);
        double best = seed.value;
        // joint coordinate ascent of the strongest pairs
        std::vector<std::pair<std::size_t, std::size_t>> starts = top_pairs(y, 3);
        for (const auto& [i0, j0] : starts) {
            Point x = X_[i0], z = Z_[j0];
            double cur = ratio(x, y, z);
            for (std::size_t it = 0; it < opts_.descent_iterations; ++it) {
                bool improved = false;
                for (int side = 0; side < 2; ++side) {
                    Point& mover = side == 0 ? x : z;
                    const AlphaCut& cut = side == 0 ? cut1_ : cut3_;
                    for (std::size_t k = 0; k < mover.size(); ++k) {
                        const auto [lo, hi] = cut.extent(k);
                        for (std::size_t p = 0; p < opts_.line_points; ++p) {
                            Point cand = mover;
                            cand[k] = lo + (hi - lo) * static_cast<double>(p) /
                                               static_cast<double>(opts_.line_points - 1);
                            cand = cut.project(std::move(cand));
                            const double v =
                                side == 0 ? ratio(cand, y, z) : ratio(x, y, cand);
                            if (v > cur + 1e-12) {
                                cur = v;
                                mover = cand;
                                improved = true;
                            }
                        }
                    }
                }
                if (!improved) break;
            }
            best = std::max(best, cur);
        }
        return best;
    }

    AlphaCut cut1_, cut2_, cut3_;
    WeightSpec w_;
    const DomainStructure* space_;
    BetweennessOptions opts_;
    std::vector<Point> X_, Z_;
};

WeightSpec metric_weights(const Concept& s1, const Concept& s2, WeightMode mode) {
    switch (mode) {
        case WeightMode::First: return s1.weights();
        case WeightMode::Second: return s2.weights();
        case WeightMode::Uniform: break;
    }
    return WeightSpec::uniform(s1.space());
}

std::vector<double> alpha_grid(const Concept& s1, const Concept& s2, const Concept& s3,
                               std::size_t levels) {
    std::set<double> g;
    for (std::size_t k = 1; k <= levels; ++k)
        g.insert(static_cast<double>(k) / static_cast<double>(levels));
    for (const Concept* s : {&s1, &s2, &s3}) {
        g.insert(s->mu0());
        if (s->mu0() - 1e-9 > 0.0) g.insert(s->mu0() - 1e-9);
        if (s->mu0() + 1e-9 <= 1.0) g.insert(s->mu0() + 1e-9);
    }
    return {g.begin(), g.end()};
}

bool same_domains(const Concept& a, const Concept& b) { return a.space() == b.space(); }

bool subset_shortcut(const Concept& s1, const Concept& s2, const Concept& s3) {
    return crisp_subsethood(s2, s1).holds || crisp_subsethood(s2, s3).holds;
}

double betweenness_at_alpha_impl(const Concept& s1, const Concept& s2, const Concept& s3,
                                 double alpha, const WeightSpec& w,
                                 const BetweennessOptions& opts) {
    AlphaEvaluator ev(s1, s2, s3, alpha, w, opts);
    if (ev.middle_empty()) return 1.0;
    if (ev.outer_empty()) return 0.0;
    return ev.run();
}

std::vector<double> per_alpha_values(const Concept& s1, const Concept& s2,
                                     const Concept& s3,
                                     const std::vector<double>& grid,
                                     const BetweennessOptions& opts) {
    const WeightSpec w = metric_weights(s1, s2, opts.mode);
    std::vector<double> vals;
    vals.reserve(grid.size());
    for (double alpha : grid)
        vals.push_back(betweenness_at_alpha_impl(s1, s2, s3, alpha, w, opts));
    return vals;
}

} // namespace

double betweenness_at_alpha(const Concept& s1, const Concept& s2, const Concept& s3,
                            double alpha, const BetweennessOptions& opts) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw parameter_error("alpha must lie in (0,1]");
    return betweenness_at_alpha_impl(s1, s2, s3, alpha,
                                     metric_weights(s1, s2, opts.mode), opts);
}

bool betweenness_crisp(const Concept& s1, const Concept& s2, const Concept& s3,
                       const BetweennessOptions& opts) {
    if (!same_domains(s1, s2) || !same_domains(s2, s3)) return false;
    if (subset_shortcut(s1, s2, s3)) return true;
    const auto grid = alpha_grid(s1, s2, s3, opts.alpha_levels);
    const WeightSpec w = metric_weights(s1, s2, opts.mode);
    for (auto it = grid.rbegin(); it != grid.rend(); ++it)
        if (betweenness_at_alpha_impl(s1, s2, s3, *it, w, opts) < 1.0 - 1e-9)
            return false;
    return true;
}

BetweennessProfile betweenness_profile(const Concept& s1, const Concept& s2,
                                       const Concept& s3,
                                       const BetweennessOptions& opts) {
    BetweennessProfile prof;
    prof.method = std::string("betweenness weights=") + to_string(opts.mode) +
                  " alpha-levels=" + std::to_string(opts.alpha_levels) +
                  " seed=" + std::to_string(opts.seed);
    if (!same_domains(s1, s2) || !same_domains(s2, s3)) {
        prof.method += " domain-mismatch";
        return prof;
    }
    if (subset_shortcut(s1, s2, s3)) {
        prof.soft = prof.integral = 1.0;
        prof.method += " subset-shortcut";
        return prof;
    }
    prof.alphas = alpha_grid(s1, s2, s3, opts.alpha_levels);
    prof.values = per_alpha_values(s1, s2, s3, prof.alphas, opts);
    prof.soft = *std::min_element(prof.values.begin(), prof.values.end());
    KahanSum integral;
    for (std::size_t i = 1; i < prof.alphas.size(); ++i)
        integral.add(0.5 * (prof.values[i] + prof.values[i - 1]) *
                     (prof.alphas[i] - prof.alphas[i - 1]));
    // [0, alpha_min) strip: carry the smallest evaluated level leftwards
    integral.add(prof.alphas.front() * prof.values.front());
    prof.integral = std::clamp(integral.value(), 0.0, 1.0);
    return prof;
}

RelationReport betweenness_soft(const Concept& s1, const Concept& s2, const Concept& s3,
                                const BetweennessOptions& opts) {
    RelationReport rep;
    BetweennessProfile prof = betweenness_profile(s1, s2, s3, opts);
    rep.value = prof.soft;
    rep.method = "soft-" + prof.method;
    if (same_domains(s1, s2) && same_domains(s2, s3))
        rep.shared_domains = s1.space().domain_names();
    return rep;
}

RelationReport betweenness_integral(const Concept& s1, const Concept& s2,
                                    const Concept& s3, const BetweennessOptions& opts) {
    RelationReport rep;
    BetweennessProfile prof = betweenness_profile(s1, s2, s3, opts);
    rep.value = prof.integral;
    rep.method = "integral-" + prof.method;
    if (same_domains(s1, s2) && same_domains(s2, s3))
        rep.shared_domains = s1.space().domain_names();
    return rep;
}

} // namespace cspace
