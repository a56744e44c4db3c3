#pragma once

#include <functional>
#include <string>
#include <vector>

namespace lediag::verify {

using Failures = std::vector<std::string>;

// Shape structure.
Failures check_shape_classification(int max_cells);
Failures check_shape_roundtrip(int box_rows, int box_cols);
Failures check_bottom_anchored(int box_rows, int box_cols);
Failures check_rectangle_bands(int box_rows, int box_cols);
Failures check_row_permutation_lemma(int box_rows, int box_cols);

// Fillings and pattern structure.
Failures check_le_definition_equivalence(int max_cells, int box_rows, int box_cols);
Failures check_xstruct_lemma(int rect_max);
Failures check_row_closure(int rect_max);
Failures check_column_append(int rect_max);
Failures check_equinumerosity(int max_cells, int box_rows, int box_cols);

// Bijections.
Failures check_bijection_suite(int max_cells, int box_rows, int box_cols);
Failures check_dual_bijection_suite(int max_cells, int box_rows, int box_cols);
Failures check_mixed_intermediate(int max_cells, int box_rows, int box_cols);
Failures check_stalactite_invariance(int max_cells);

// Graphs and counting.
Failures check_graph_equivalence(int max_cells);
Failures check_isolated_vertex(int max_cells);
Failures check_chromatic_recurrence(int max_cells);
/// One-line outcome of the corner recurrence under shrunk boxes, with the
/// first failing partition when it fails. Documentation companion to
/// check_chromatic_recurrence, which pins the fixed-box reading.
std::string shrunk_convention_summary(int max_cells);
Failures check_f_recurrence_vs_bruteforce(int max_cells);
Failures check_corner_independence(int max_cells);
Failures check_stirling(int max_n);

struct Options {
    int max_cells = 12;
    int box_rows = 4;
    int box_cols = 4;
    int rect_max = 4;
    int mixed_max_cells = 10;
    int graph_max_cells = 12;
    int recurrence_max_cells = 12;
    int corner_max_cells = 10;
    int stalactite_max_cells = 12;
    int stirling_max = 6;
};

struct NamedCheck {
    std::string name;
    std::function<Failures()> run;
};

/// The full invariant suite at the given bounds, one named entry per check.
std::vector<NamedCheck> all_checks(const Options& opt);

/// Runs everything and returns every failure line, prefixed by check name.
Failures run_all(const Options& opt);

}  // namespace lediag::verify
