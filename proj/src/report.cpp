#include "cspace/report.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace cspace {

std::vector<TableRow> upper_panel(const ConceptSpace& space) {
    std::vector<TableRow> rows;
    const auto names = space.names();
    for (const auto& n : names)
        rows.push_back({"size", {n}, concept_size(space.at(n)), ""});
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            const Concept& a = space.at(names[i]);
            const Concept& b = space.at(names[j]);
            RelationReport sub_ab = subsethood_degree(a, b);
            RelationReport sub_ba = subsethood_degree(b, a);
            RelationReport jac = similarity_jaccard(a, b);
            rows.push_back({"sub", {names[i], names[j]}, sub_ab.value, sub_ab.method});
            rows.push_back({"sub", {names[j], names[i]}, sub_ba.value, sub_ba.method});
            rows.push_back({"simj", {names[i], names[j]}, jac.value, jac.method});
        }
    }
    return rows;
}

std::vector<ExpectedRow> load_expected_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open expected-values file '" + path + "'");
    std::vector<ExpectedRow> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::vector<std::string> tok;
        std::string t;
        while (ss >> t) tok.push_back(t);
        if (tok.empty()) continue;
        ExpectedRow row;
        row.kind = tok[0];
        std::size_t nargs = 0;
        if (row.kind == "size")
            nargs = 1;
        else if (row.kind == "sub" || row.kind == "simj")
            nargs = 2;
        else if (row.kind == "between-soft" || row.kind == "between-int")
            nargs = 3;
        else
            throw validation_error(path + ":" + std::to_string(lineno) +
                                   ": unknown row kind '" + row.kind + "'");
        if (tok.size() < nargs + 3)
            throw validation_error(path + ":" + std::to_string(lineno) +
                                   ": expected kind, names, value, tolerance");
        for (std::size_t k = 0; k < nargs; ++k) row.args.push_back(tok[1 + k]);
        try {
            row.expected = std::stod(tok[1 + nargs]);
            row.tolerance = std::stod(tok[2 + nargs]);
        } catch (const std::exception&) {
            throw validation_error(path + ":" + std::to_string(lineno) +
                                   ": malformed number");
        }
        if (tok.size() > nargs + 3 && tok[3 + nargs] == "best") row.best_mode = true;
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

double evaluate_row(const ConceptSpace& space, const ExpectedRow& row,
                    const BetweennessOptions& base, std::string* note,
                    std::map<std::string, BetweennessProfile>* cache) {
    for (const auto& a : row.args)
        if (!space.has(a)) throw validation_error("unknown concept '" + a + "' in fixture");
    if (row.kind == "size") return concept_size(space.at(row.args[0]));
    if (row.kind == "sub")
        return subsethood_degree(space.at(row.args[0]), space.at(row.args[1])).value;
    if (row.kind == "simj")
        return similarity_jaccard(space.at(row.args[0]), space.at(row.args[1])).value;

    const bool soft = row.kind == "between-soft";
    std::vector<WeightMode> modes = {base.mode};
    if (row.best_mode)
        modes = {WeightMode::Uniform, WeightMode::First, WeightMode::Second};
    double best = std::numeric_limits<double>::infinity();
    double best_val = 0.0;
    for (WeightMode m : modes) {
        BetweennessOptions opts = base;
        opts.mode = m;
        const std::string key = row.args[0] + "|" + row.args[1] + "|" + row.args[2] + "|" +
                                to_string(m);
        BetweennessProfile prof;
        if (cache && cache->count(key)) {
            prof = (*cache)[key];
        } else {
            prof = betweenness_profile(space.at(row.args[0]), space.at(row.args[1]),
                                       space.at(row.args[2]), opts);
            if (cache) (*cache)[key] = prof;
        }
        const double v = soft ? prof.soft : prof.integral;
        const double dist = std::abs(v - row.expected);
        if (dist < best) {
            best = dist;
            best_val = v;
            if (note) *note = std::string("mode=") + to_string(m);
        }
    }
    return best_val;
}

} // namespace

std::vector<DiffResult> diff_against_expected(const ConceptSpace& space,
                                              const std::vector<ExpectedRow>& rows,
                                              const BetweennessOptions& base_opts) {
    std::vector<DiffResult> out;
    std::map<std::string, BetweennessProfile> cache;
    for (const ExpectedRow& row : rows) {
        DiffResult r;
        r.expected = row;
        r.actual = evaluate_row(space, row, base_opts, &r.note, &cache);
        r.residual = std::abs(r.actual - row.expected);
        r.pass = r.residual <= row.tolerance;
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace cspace
