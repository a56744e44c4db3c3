#pragma once

#include "lediag/filling.hpp"
#include "lediag/shape.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace lediag {

/// Outcome of a pivot-column search. `column` is absent exactly when the
/// bottom row is a zero row (primal) or unrestricted (dual). `band` is the
/// rectangle the chosen column belongs to; `candidates` lists every
/// (band, column) pair passing the per-rectangle test.
struct PivotReport {
    std::optional<int> column;
    std::optional<int> band;
    std::vector<std::pair<int, int>> candidates;
};

/// Primal pivot: bottom bit 1, maximal zero count, leftmost — evaluated per
/// rectangle band of the bottom-anchored subshape, keeping candidates whose
/// column lies beyond the previous band's anchor, and choosing the greatest
/// band. Requires an le-complete shape and an X-avoiding filling.
PivotReport pivot_column(const Filling& f);

/// Dual pivot: non-zero column, bottom bit 0, maximal one count, leftmost;
/// same band machinery as the primal.
PivotReport pivot_column_dual(const Filling& f);

/// The raw per-rectangle pivot column of every band, before the
/// beyond-previous-anchor filter.
std::vector<std::optional<int>> rectangle_pivots(const Filling& f);

/// One bottom-row rewrite step. Identity when no pivot exists; otherwise
/// columns left of the pivot get bottom bit 0, right columns matching the
/// pivot on their own rows collapse to a single 1 at the bottom, remaining
/// non-zero right columns get bottom bit 1. Cells outside the bottom-anchored
/// subshape never move. The image is a mixed diagram with the same zero rows
/// and zero columns.
Filling phi(const Filling& f);
/// Inverse of phi on mixed diagrams.
Filling phi_inv(const Filling& u);

/// The dual rewrite built on pivot_column_dual, with the same three rules.
Filling phi2(const Filling& f);
Filling phi2_inv(const Filling& u);

/// Pivot reports from each rewrite step of a full run, in application order.
struct BigPhiTrace {
    std::vector<PivotReport> steps;
    std::vector<int> pivot_columns() const;  // only the steps that had a pivot
};

/// Row-by-row composition of phi: steps run over the occupied row indices
/// from the bottom row up, each acting on the rows above and including it.
/// Maps X-avoiding fillings of an le-complete shape onto its LE-avoiding
/// fillings, preserving zero rows and zero columns.
Filling big_phi(const Filling& f, BigPhiTrace* trace = nullptr);
/// Exact inverse of big_phi; steps run top row down.
Filling big_phi_inv(const Filling& u, BigPhiTrace* trace = nullptr);

/// Composition of phi2; maps X-avoiding onto LE-avoiding fillings preserving
/// zero columns and restricted rows.
Filling big_phi2(const Filling& f, BigPhiTrace* trace = nullptr);
Filling big_phi2_inv(const Filling& u, BigPhiTrace* trace = nullptr);

}  // namespace lediag
