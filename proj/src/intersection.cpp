#include "cspace/intersection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cspace/metric.hpp"

namespace cspace {

namespace {

struct GapDim {
    std::size_t dim;
    double gap;     // positive separation between the interval faces
    double sign;    // +1 when ca lies below cb in this dimension
    double slope_a; // c_a * stretch_a(dim)
    double slope_b;
};

// g_i(x) = c_i * d_i(x, box_i) - ln mu0_i; f = max(g_a, g_b)
struct PairObjective {
    const Cuboid& ca;
    const Cuboid& cb;
    const Concept& a;
    const Concept& b;

    double ga(const Point& x) const {
        return a.c() * distance_to_cuboid(x, ca, a.space(), a.weights()) - std::log(a.mu0());
    }
    double gb(const Point& x) const {
        return b.c() * distance_to_cuboid(x, cb, b.space(), b.weights()) - std::log(b.mu0());
    }
    double operator()(const Point& x) const { return std::max(ga(x), gb(x)); }
};

// Exact minimizer when every dimension that separates the boxes lives in a
// one-dimensional domain: the max of two linear functions of the per-dim
// splits is minimized by spending the cheapest exchange ratios first.
Point greedy_witness(const std::vector<GapDim>& gaps, const Cuboid& ca, const Cuboid& cb,
                     const Concept& a, const Concept& b) {
    const std::size_t n = ca.dimension_count();
    Point x(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lo = std::max(ca.p_min[k], cb.p_min[k]);
        const double hi = std::min(ca.p_max[k], cb.p_max[k]);
        x[k] = lo <= hi ? 0.5 * (lo + hi) : 0.0; // overlap dims: anywhere inside
    }
    double A = -std::log(a.mu0());
    double B = -std::log(b.mu0());
    for (const GapDim& g : gaps) {
        B += g.slope_b * g.gap;
        x[g.dim] = g.sign > 0 ? ca.p_max[g.dim] : ca.p_min[g.dim]; // start on ca's face
    }
    if (A < B) {
        std::vector<GapDim> order = gaps;
        std::sort(order.begin(), order.end(), [](const GapDim& l, const GapDim& r) {
            const double rl = l.slope_a / l.slope_b;
            const double rr = r.slope_a / r.slope_b;
            if (rl != rr) return rl < rr;
            return l.dim < r.dim;
        });
        for (const GapDim& g : order) {
            const double balance = (B - A) / (g.slope_a + g.slope_b);
            const double u = std::min(balance, g.gap);
            A += g.slope_a * u;
            B -= g.slope_b * u;
            x[g.dim] += g.sign * u;
            if (u == balance) break;
        }
    }
    return x;
}

// General convex minimizer for multi-dimensional domains: smoothed max
// descent over the hull box, annealing the smoothing width.
Point smoothed_witness(const PairObjective& f, const Cuboid& ca, const Cuboid& cb) {
    const std::size_t n = ca.dimension_count();
    Point lo(n), hi(n);
    for (std::size_t k = 0; k < n; ++k) {
        lo[k] = std::min(ca.p_min[k], cb.p_min[k]);
        hi[k] = std::max(ca.p_max[k], cb.p_max[k]);
    }
    Point x(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = 0.5 * (lo[k] + hi[k]);

    auto smooth = [&](const Point& p, double rho) {
        const double u = f.ga(p), v = f.gb(p);
        const double m = std::max(u, v);
        return m + rho * std::log(std::exp((u - m) / rho) + std::exp((v - m) / rho));
    };
    // central-difference gradient; the objective is cheap and low-dimensional
    Point grad(n);
    double span = 0.0;
    for (std::size_t k = 0; k < n; ++k) span = std::max(span, hi[k] - lo[k]);
    if (span == 0.0) return x;

    for (double rho = 0.5; rho > 1e-9; rho *= 0.25) {
        double step = span * 0.25;
        for (int it = 0; it < 120 && step > 1e-13; ++it) {
            const double h = std::max(1e-9 * span, rho * 1e-3);
            for (std::size_t k = 0; k < n; ++k) {
                Point p = x, q = x;
                p[k] += h;
                q[k] -= h;
                grad[k] = (smooth(p, rho) - smooth(q, rho)) / (2.0 * h);
            }
            double norm = 0.0;
            for (double gk : grad) norm += gk * gk;
            norm = std::sqrt(norm);
            if (norm < 1e-14) break;
            const double base = smooth(x, rho);
            bool moved = false;
            while (step > 1e-13) {
                Point cand = x;
                for (std::size_t k = 0; k < n; ++k) {
                    cand[k] = x[k] - step * grad[k] / norm;
                    cand[k] = std::min(std::max(cand[k], lo[k]), hi[k]);
                }
                if (smooth(cand, rho) < base - 1e-15) {
                    x = cand;
                    moved = true;
                    break;
                }
                step *= 0.5;
            }
            if (!moved) break;
        }
    }
    return x;
}

// Maximal per-dimension free interval through the witness at level f*+tol,
// corner-verified; falls back to the overlap-only extension when the
// per-dimension product box leaves the level set.
Cuboid peak_box(const PairObjective& f, const Point& witness, double fstar,
                const Cuboid& ca, const Cuboid& cb) {
    const std::size_t n = witness.size();
    const double tol = 1e-10;
    Point lo = witness, hi = witness;
    for (std::size_t k = 0; k < n; ++k) {
        const double outer_lo = std::min(ca.p_min[k], cb.p_min[k]);
        const double outer_hi = std::max(ca.p_max[k], cb.p_max[k]);
        double a0 = outer_lo, b0 = witness[k];
        Point probe = witness;
        probe[k] = a0;
        if (f(probe) <= fstar + tol) {
            lo[k] = a0;
        } else {
            for (int it = 0; it < 80; ++it) {
                const double m = 0.5 * (a0 + b0);
                probe[k] = m;
                (f(probe) <= fstar + tol ? b0 : a0) = m;
            }
            lo[k] = b0;
        }
        a0 = witness[k];
        b0 = outer_hi;
        probe = witness;
        probe[k] = b0;
        if (f(probe) <= fstar + tol) {
            hi[k] = b0;
        } else {
            for (int it = 0; it < 80; ++it) {
                const double m = 0.5 * (a0 + b0);
                probe[k] = m;
                (f(probe) <= fstar + tol ? a0 : b0) = m;
            }
            hi[k] = a0;
        }
    }
    Cuboid box(lo, hi);
    bool ok = true;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n) && ok; ++mask)
        if (f(box.corner(mask)) > fstar + 10 * tol) ok = false;
    if (ok) return box;

    // safe fallback: extend only where the two boxes overlap (the objective
    // is constant there), keep everything else at the witness
    lo = witness;
    hi = witness;
    for (std::size_t k = 0; k < n; ++k) {
        const double olo = std::max(ca.p_min[k], cb.p_min[k]);
        const double ohi = std::min(ca.p_max[k], cb.p_max[k]);
        if (olo <= ohi && witness[k] >= olo && witness[k] <= ohi) {
            lo[k] = olo;
            hi[k] = ohi;
        }
    }
    return Cuboid(lo, hi);
}

} // namespace

FuzzyIntersection fuzzy_cuboid_intersection(const Cuboid& ca, const Cuboid& cb,
                                            const Concept& a, const Concept& b) {
    FuzzyIntersection out;
    if (auto crisp = ca.intersect(cb)) {
        out.mu = std::min(a.mu0(), b.mu0());
        out.cuboids = {*crisp};
        out.crisp = true;
        return out;
    }

    const DomainStructure& s = a.space();
    std::vector<GapDim> gaps;
    bool separable = true;
    for (std::size_t k = 0; k < s.dimension_count(); ++k) {
        GapDim g{k, 0.0, 0.0, 0.0, 0.0};
        if (ca.p_max[k] < cb.p_min[k]) {
            g.gap = cb.p_min[k] - ca.p_max[k];
            g.sign = +1.0;
        } else if (cb.p_max[k] < ca.p_min[k]) {
            g.gap = ca.p_min[k] - cb.p_max[k];
            g.sign = -1.0;
        } else {
            continue;
        }
        g.slope_a = a.c() * a.weights().stretch(s, k);
        g.slope_b = b.c() * b.weights().stretch(s, k);
        if (s.domain_size(s.domain_of(k)) > 1) separable = false;
        gaps.push_back(g);
    }

    const PairObjective f{ca, cb, a, b};
    Point witness = separable ? greedy_witness(gaps, ca, cb, a, b) : smoothed_witness(f, ca, cb);
    const double fstar = f(witness);
    out.mu = std::exp(-fstar);
    out.cuboids = {peak_box(f, witness, fstar, ca, cb)};
    out.crisp = false;
    return out;
}

FuzzyIntersection fuzzy_intersection(const Concept& a, const Concept& b) {
    if (!(a.space() == b.space()))
        throw structural_error("fuzzy_intersection needs concepts on the same domains");
    FuzzyIntersection best;
    best.mu = -1.0;
    for (const Cuboid& ca : a.core().cuboids()) {
        for (const Cuboid& cb : b.core().cuboids()) {
            FuzzyIntersection piece = fuzzy_cuboid_intersection(ca, cb, a, b);
            if (piece.mu > best.mu + 1e-12) {
                best = piece;
            } else if (piece.mu >= best.mu - 1e-12) {
                for (const Cuboid& c : piece.cuboids)
                    if (std::find(best.cuboids.begin(), best.cuboids.end(), c) ==
                        best.cuboids.end())
                        best.cuboids.push_back(c);
                best.crisp = best.crisp || piece.crisp;
            }
        }
    }
    // the collected peak boxes must share a point to form a valid core;
    // keep the first one when ties across distant pairs break that
    try {
        CoreRegion::validate(best.cuboids, a.space());
    } catch (const validation_error&) {
        best.cuboids.resize(1);
    }
    return best;
}

} // namespace cspace
