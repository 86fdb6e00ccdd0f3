#pragma once

#include <cstdint>
#include <optional>

#include "cspace/intersection.hpp"
#include "cspace/measure.hpp"

namespace cspace {

/// Metric weights used inside the betweenness ratio d(x,z)/(d(x,y)+d(y,z)).
/// The paper leaves this choice open; all three readings are exposed.
enum class WeightMode { Uniform, First, Second };

const char* to_string(WeightMode m);

struct RelationReport {
    double value = 0.0;
    std::vector<std::string> shared_domains;
    std::optional<MeasureContext> context;
    std::string method;
};

/// Projections of two (or three) concepts onto their shared domains.
/// empty() marks a pair with no domain overlap.
struct CommonProjection {
    std::vector<std::string> shared_domains;
    std::vector<Concept> projected;
    bool empty() const { return shared_domains.empty(); }
};

CommonProjection common_projection(const Concept& s1, const Concept& s2,
                                   const Concept* s3 = nullptr);

/// Kosko-style degree of subsethood Sub(S1,S2) = M(S1 n S2) / M(S1), both
/// measures taken with the second concept's c and W (the context rule).
/// The intersection is the constructive one built from the concepts'
/// original parameters.
RelationReport subsethood_degree(const Concept& s1, const Concept& s2);

/// Impl := Sub.
RelationReport implication(const Concept& s1, const Concept& s2);

/// Sim_S := Sub (asymmetric by design).
RelationReport similarity_sub(const Concept& s1, const Concept& s2);

/// Jaccard similarity M(n)/M(u) under shared parameters c' = min(c1,c2),
/// W' = elementwise mean; M(u) = M1 + M2 - M(crisp intersection).
RelationReport similarity_jaccard(const Concept& s1, const Concept& s2);

struct BetweennessOptions {
    std::size_t alpha_levels = 101;  // uniform levels k/L, k = 1..L
    WeightMode mode = WeightMode::Uniform;
    std::size_t cut_samples = 64;    // low-discrepancy samples per alpha-cut
    std::size_t descent_iterations = 50;
    std::size_t line_points = 13;
    std::size_t refine_starts = 6;   // y candidates refined fully
    std::uint64_t seed = 0x5EED;
};

/// One alpha level of soft betweenness:
/// min_{y in S2^a} max_{x in S1^a} max_{z in S3^a} d(x,z)/(d(x,y)+d(y,z)).
/// Empty-cut conventions: S2^a empty -> 1; else S1^a or S3^a empty -> 0.
double betweenness_at_alpha(const Concept& s1, const Concept& s2, const Concept& s3,
                            double alpha, const BetweennessOptions& opts);

/// Per-alpha sweep shared by the soft and integral aggregations. When the
/// domain sets mismatch or the subset shortcut fires, alphas stays empty
/// and the aggregate values are exact.
struct BetweennessProfile {
    std::vector<double> alphas; // ascending grid
    std::vector<double> values; // per-alpha soft betweenness
    double soft = 0.0;
    double integral = 0.0;
    std::string method;
};
BetweennessProfile betweenness_profile(const Concept& s1, const Concept& s2,
                                       const Concept& s3,
                                       const BetweennessOptions& opts = {});

/// All alpha-cut triples metrically between (triangle equality holds for
/// every y at every grid level). False on any domain mismatch.
bool betweenness_crisp(const Concept& s1, const Concept& s2, const Concept& s3,
                       const BetweennessOptions& opts = {});

/// Minimum of the per-alpha values over the grid; exactly 1 when S2 is a
/// crisp subset (Prop. 3) of S1 or S3, exactly 0 on domain mismatch.
RelationReport betweenness_soft(const Concept& s1, const Concept& s2, const Concept& s3,
                                const BetweennessOptions& opts = {});

/// Trapezoidal aggregation of the per-alpha values over [0,1]; always at
/// least betweenness_soft.
RelationReport betweenness_integral(const Concept& s1, const Concept& s2,
                                    const Concept& s3,
                                    const BetweennessOptions& opts = {});

} // namespace cspace
