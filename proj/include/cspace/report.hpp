#pragma once

#include "cspace/oracle.hpp"
#include "cspace/space_file.hpp"

namespace cspace {

/// One row of the tabular output: a relation kind, its concept arguments,
/// and the computed value.
struct TableRow {
    std::string kind;               // size | sub | simj | between-soft | between-int
    std::vector<std::string> args;  // concept names
    double value = 0.0;
    std::string note;
};

/// Sizes for every concept plus Sub and Sim_J for every ordered/unordered
/// concept pair (the upper panel of the published example table).
std::vector<TableRow> upper_panel(const ConceptSpace& space);

/// One expectation read from a fixture file.
struct ExpectedRow {
    std::string kind;
    std::vector<std::string> args;
    double expected = 0.0;
    double tolerance = 0.0;
    bool best_mode = false; // betweenness rows: take the best over weight modes
};

/// Tab-separated fixture: kind, concept names, expected, tolerance and an
/// optional trailing "best" marker on betweenness rows. '#' starts comments.
std::vector<ExpectedRow> load_expected_rows(const std::string& path);

struct DiffResult {
    ExpectedRow expected;
    double actual = 0.0;
    double residual = 0.0;
    bool pass = false;
    std::string note;
};

/// Evaluates every expected row against the space. Betweenness rows marked
/// "best" are evaluated under all exposed weight modes and scored on the
/// closest one.
std::vector<DiffResult> diff_against_expected(const ConceptSpace& space,
                                              const std::vector<ExpectedRow>& rows,
                                              const BetweennessOptions& base_opts);

} // namespace cspace
