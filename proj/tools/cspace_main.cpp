#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cspace/report.hpp"

using namespace cspace;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitTolerance = 2;
constexpr int kExitUsage = 3;

struct GlobalFlags {
    std::string space_path;
    std::size_t alpha_levels = 101;
    std::uint64_t mc_samples = 1000000;
    std::uint64_t seed = 0x5EED;
    std::string context = "second"; // second | uniform | first
    std::string expected_path;
    std::string format = "tsv"; // tsv | json
};

WeightMode parse_mode(const std::string& name) {
    if (name == "uniform") return WeightMode::Uniform;
    if (name == "first") return WeightMode::First;
    if (name == "second") return WeightMode::Second;
    throw CLI::ValidationError("--context must be one of second|uniform|first");
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << v;
    return os.str();
}

void print_run_header(const GlobalFlags& g, const std::string& cmd) {
    std::cout << "# cspace " << cmd << " space=" << g.space_path
              << " alpha-levels=" << g.alpha_levels << " mc-samples=" << g.mc_samples
              << " seed=" << g.seed << " context=" << g.context << "\n";
}

int cmd_validate(const GlobalFlags& g) {
    print_run_header(g, "validate");
    const ConceptSpace space = load_space_file(g.space_path);
    std::cout << "domains:";
    for (const auto& d : space.structure().domains()) {
        std::cout << " " << d.name << "(";
        for (std::size_t i = 0; i < d.dims.size(); ++i)
            std::cout << (i ? "," : "")
                      << space.structure().dimension_names()[d.dims[i]];
        std::cout << ")";
    }
    std::cout << "\n";
    for (const auto& [name, c] : space.concepts()) {
        std::cout << name << "\tdomains=" << c.space().domain_count()
                  << "\tcuboids=" << c.core().cuboids().size() << "\tmu0=" << c.mu0()
                  << "\tc=" << c.c()
                  << (c.core().degenerate() ? "\tcentral-region=degenerate" : "") << "\n";
    }
    std::cout << space.concepts().size() << " concepts valid\n";
    return kExitOk;
}

int cmd_size(const GlobalFlags& g, const std::vector<std::string>& names) {
    print_run_header(g, "size");
    const ConceptSpace space = load_space_file(g.space_path);
    std::vector<std::string> wanted = names.empty() ? space.names() : names;
    nlohmann::json out = nlohmann::json::array();
    for (const auto& n : wanted) {
        const double m = concept_size(space.at(n));
        if (g.format == "json")
            out.push_back({{"concept", n}, {"size", m}});
        else
            std::cout << n << "\t" << fmt(m) << "\n";
    }
    if (g.format == "json") std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_relate(const GlobalFlags& g, const std::string& relation,
               const std::vector<std::string>& names) {
    print_run_header(g, "relate " + relation);
    const ConceptSpace space = load_space_file(g.space_path);

    BetweennessOptions opts;
    opts.alpha_levels = g.alpha_levels;
    opts.seed = g.seed;
    opts.mode = relation.rfind("between", 0) == 0 && g.context == "second"
                    ? WeightMode::Uniform // betweenness default is uniform
                    : parse_mode(g.context);

    RelationReport rep;
    if (relation == "sub" || relation == "impl" || relation == "sims") {
        if (names.size() != 2) throw CLI::ValidationError(relation + " needs two concepts");
        rep = subsethood_degree(space.at(names[0]), space.at(names[1]));
    } else if (relation == "simj") {
        if (names.size() != 2) throw CLI::ValidationError("simj needs two concepts");
        rep = similarity_jaccard(space.at(names[0]), space.at(names[1]));
    } else if (relation == "between-soft" || relation == "between-int" ||
               relation == "between") {
        if (names.size() != 3) throw CLI::ValidationError(relation + " needs three concepts");
        const Concept& a = space.at(names[0]);
        const Concept& b = space.at(names[1]);
        const Concept& c = space.at(names[2]);
        if (relation == "between") {
            const bool crisp = betweenness_crisp(a, b, c, opts);
            std::cout << (crisp ? "true" : "false") << "\n";
            return kExitOk;
        }
        rep = relation == "between-soft" ? betweenness_soft(a, b, c, opts)
                                         : betweenness_integral(a, b, c, opts);
    } else {
        throw CLI::ValidationError("unknown relation '" + relation + "'");
    }

    if (g.format == "json") {
        nlohmann::json j{{"relation", relation},
                         {"concepts", names},
                         {"value", rep.value},
                         {"method", rep.method},
                         {"shared_domains", rep.shared_domains}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << fmt(rep.value) << "\t" << rep.method << "\n";
    }
    return kExitOk;
}

int cmd_table(const GlobalFlags& g) {
    print_run_header(g, "table");
    const ConceptSpace space = load_space_file(g.space_path);

    BetweennessOptions opts;
    opts.alpha_levels = g.alpha_levels;
    opts.seed = g.seed;
    opts.mode = WeightMode::Uniform;

    if (g.expected_path.empty()) {
        const auto rows = upper_panel(space);
        nlohmann::json jrows = nlohmann::json::array();
        for (const TableRow& r : rows) {
            if (g.format == "json") {
                jrows.push_back({{"kind", r.kind}, {"args", r.args}, {"value", r.value}});
            } else {
                std::cout << r.kind;
                for (const auto& a : r.args) std::cout << "\t" << a;
                std::cout << "\t" << fmt(r.value) << "\n";
            }
        }
        if (g.format == "json") std::cout << jrows.dump(2) << "\n";
        std::cout << "# betweenness panel: pass --expected FILE with between-* rows\n";
        return kExitOk;
    }

    const auto rows = load_expected_rows(g.expected_path);
    const auto results = diff_against_expected(space, rows, opts);
    bool all_pass = true;
    for (const DiffResult& r : results) {
        std::cout << (r.pass ? "ok" : "FAIL") << "\t" << r.expected.kind;
        for (const auto& a : r.expected.args) std::cout << "\t" << a;
        std::cout << "\t" << fmt(r.actual) << "\texpected\t" << fmt(r.expected.expected)
                  << "\ttol\t" << r.expected.tolerance << "\tresidual\t" << fmt(r.residual);
        if (!r.note.empty()) std::cout << "\t" << r.note;
        std::cout << "\n";
        all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "# all rows within tolerance\n"
                           : "# tolerance failures present\n");
    return all_pass ? kExitOk : kExitTolerance;
}

int cmd_oracle(const GlobalFlags& g, bool hyperball, bool betweenness_dense) {
    print_run_header(g, "oracle");
    const ConceptSpace space = load_space_file(g.space_path);
    bool all_ok = true;

    if (hyperball) {
        // classic-shape identities plus hit-counting agreement
        const double r = 0.8;
        auto euclid2 = DomainStructure::make({{"d", {"x", "y"}}});
        auto manhattan2 = DomainStructure::make({{"a", {"x"}}, {"b", {"y"}}});
        auto cone3 = DomainStructure::make({{"d", {"x", "y"}}, {"h", {"z"}}});
        const double pi = 3.14159265358979323846;
        const std::vector<std::tuple<std::string, StructurePtr, double>> shapes = {
            {"interval 2r", DomainStructure::make({{"a", {"x"}}}), 2 * r},
            {"euclidean disc pi r^2", euclid2, pi * r * r},
            {"manhattan diamond 2r^2", manhattan2, 2 * r * r},
            {"double cone 2 pi r^3/3", cone3, 2 * pi * r * r * r / 3},
        };
        for (const auto& [name, s, expect] : shapes) {
            const double v = hyperball_volume_unweighted(r, *s);
            const double rel = std::abs(v - expect) / expect;
            const bool ok = rel <= 1e-12;
            all_ok = all_ok && ok;
            std::cout << (ok ? "ok" : "FAIL") << "\thyperball\t" << name << "\t" << v
                      << "\trel-err\t" << rel << "\n";
        }
        for (unsigned n = 1; n <= 4; ++n) {
            auto s = DomainStructure::make(
                n == 1   ? std::vector<std::pair<std::string, std::vector<std::string>>>{{"a", {"x1"}}}
                : n == 2 ? std::vector<std::pair<std::string, std::vector<std::string>>>{{"a", {"x1", "x2"}}}
                : n == 3 ? std::vector<std::pair<std::string, std::vector<std::string>>>{{"a", {"x1", "x2"}}, {"b", {"x3"}}}
                         : std::vector<std::pair<std::string, std::vector<std::string>>>{{"a", {"x1", "x2"}}, {"b", {"x3", "x4"}}});
            const WeightSpec w = WeightSpec::uniform(*s);
            const double analytic = hyperball_volume(r, *s, w);
            const McEstimate mc = mc_hyperball_volume(r, *s, w, g.mc_samples, g.seed + n);
            const double rel = std::abs(mc.value - analytic) / analytic;
            const bool ok = rel <= 0.01;
            all_ok = all_ok && ok;
            std::cout << (ok ? "ok" : "FAIL") << "\thyperball-mc n=" << n << "\t" << mc.value
                      << "\tanalytic\t" << analytic << "\trel-err\t" << rel << "\n";
        }
    }

    // per-concept analytic vs Monte-Carlo with sigma bands
    for (const auto& [name, c] : space.concepts()) {
        const double analytic = concept_size(c);
        const McEstimate mc = mc_concept_size(c, g.mc_samples, g.seed);
        const double band = 3 * mc.std_error + mc.truncation_bound;
        const bool single = c.core().cuboids().size() == 1;
        const bool ok = single ? std::abs(analytic - mc.value) <= band
                               : analytic >= mc.value - band;
        all_ok = all_ok && ok;
        std::cout << (ok ? "ok" : "FAIL") << "\tsize\t" << name << "\tanalytic\t" << fmt(analytic)
                  << "\tmc\t" << fmt(mc.value) << "\t3sigma+trunc\t" << fmt(band)
                  << (single ? "" : "\t(multi-cuboid: analytic is an upper bound)") << "\n";
    }

    for (unsigned n = 0; n <= 8; ++n) {
        const QuadratureCheck chk = quadrature_check(n);
        all_ok = all_ok && chk.pass;
        std::cout << (chk.pass ? "ok" : "FAIL") << "\tlog-power-integral n=" << n << "\t"
                  << chk.numeric << "\texact\t" << chk.exact << "\n";
    }

    if (betweenness_dense) {
        BetweennessOptions base;
        base.alpha_levels = g.alpha_levels;
        base.seed = g.seed;
        const auto names = space.names();
        // audit every ordered triple of distinct concepts sharing all domains
        for (const auto& a : names)
            for (const auto& b : names)
                for (const auto& c : names) {
                    if (a == b || b == c || a == c) continue;
                    const Concept& ca = space.at(a);
                    const Concept& cb = space.at(b);
                    const Concept& cc = space.at(c);
                    if (!(ca.space() == cb.space()) || !(cb.space() == cc.space()))
                        continue;
                    for (WeightMode m :
                         {WeightMode::Uniform, WeightMode::First, WeightMode::Second}) {
                        base.mode = m;
                        const BetweennessProfile def = betweenness_profile(ca, cb, cc, base);
                        const DenseBetweenness dense =
                            sampled_betweenness(ca, cb, cc, base, 4.0);
                        std::cout << "audit\tbetween\t" << a << "\t" << b << "\t" << c
                                  << "\tmode\t" << to_string(m) << "\tsoft\t" << fmt(def.soft)
                                  << "\tdense\t" << fmt(dense.soft) << "\tint\t"
                                  << fmt(def.integral) << "\tdense\t" << fmt(dense.integral)
                                  << "\n";
                    }
                }
    }

    std::cout << (all_ok ? "# oracle audit passed\n" : "# oracle audit failures present\n");
    return all_ok ? kExitOk : kExitValidation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fuzzy star-shaped concepts in conceptual spaces"};
    app.require_subcommand(1);

    GlobalFlags g;
    app.add_option("--space", g.space_path, "concept space definition file")->required();
    app.add_option("--alpha-levels", g.alpha_levels, "uniform alpha levels in (0,1]");
    app.add_option("--mc-samples", g.mc_samples, "Monte-Carlo sample count");
    app.add_option("--seed", g.seed, "random stream seed");
    app.add_option("--context", g.context, "context weights: second|uniform|first");
    app.add_option("--expected", g.expected_path, "expected-values file for diff mode");
    app.add_option("--format", g.format, "output format: tsv|json")
        ->check(CLI::IsMember({"tsv", "json"}));

    auto* validate = app.add_subcommand("validate", "parse and validate a space file");
    auto* size = app.add_subcommand("size", "analytic concept sizes");
    std::vector<std::string> size_names;
    size->add_option("concepts", size_names, "concept names (default: all)");
    auto* relate = app.add_subcommand("relate", "compute one relation");
    std::string relation;
    std::vector<std::string> relate_names;
    relate->add_option("relation", relation,
                       "sub|impl|sims|simj|between|between-soft|between-int")
        ->required();
    relate->add_option("concepts", relate_names, "concept names")->required();
    auto* table = app.add_subcommand("table", "emit the relation tables / diff mode");
    auto* oracle = app.add_subcommand("oracle", "Monte-Carlo and quadrature audits");
    bool flag_hyperball = false, flag_dense = false;
    oracle->add_flag("--hyperball", flag_hyperball, "classic-shape identity checks");
    oracle->add_flag("--betweenness-dense", flag_dense,
                     "dense re-evaluation of betweenness triples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(g);
        if (app.got_subcommand(size)) return cmd_size(g, size_names);
        if (app.got_subcommand(relate)) return cmd_relate(g, relation, relate_names);
        if (app.got_subcommand(table)) return cmd_table(g);
        if (app.got_subcommand(oracle)) return cmd_oracle(g, flag_hyperball, flag_dense);
    } catch (const validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}
