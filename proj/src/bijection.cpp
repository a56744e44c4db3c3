#include "lediag/bijection.hpp"

#include <algorithm>
#include <stdexcept>

namespace lediag {

namespace {

// Dense working copy of a filling: -1 outside the shape, else the bit.
struct Grid {
    int rows = 0, cols = 0;
    std::vector<std::int8_t> v;

    static Grid of(const Filling& f) {
        Grid g;
        g.rows = f.shape().max_row();
        g.cols = f.shape().max_col();
        g.v.assign(static_cast<std::size_t>((g.rows + 1) * (g.cols + 1)), -1);
        for (std::size_t i = 0; i < f.shape().cells().size(); ++i) {
            const Cell& c = f.shape().cells()[i];
            g.at(c.row, c.col) = static_cast<std::int8_t>(f.bits()[i]);
        }
        return g;
    }

    std::int8_t& at(int r, int c) { return v[static_cast<std::size_t>(r * (cols + 1) + c)]; }
    std::int8_t at(int r, int c) const { return v[static_cast<std::size_t>(r * (cols + 1) + c)]; }
    bool has(int r, int c) const { return r >= 1 && r <= rows && c >= 1 && c <= cols && at(r, c) >= 0; }

    Filling to_filling(const Shape& shape) const {
        std::vector<std::uint8_t> bits;
        bits.reserve(shape.cells().size());
        for (const Cell& c : shape.cells()) bits.push_back(static_cast<std::uint8_t>(at(c.row, c.col)));
        return Filling{shape, std::move(bits)};
    }
};

// The bottom-anchored subshape of the cells in rows 1..limit, with its
// column bands. Column order, not contiguity, is what the rewrite needs:
// the occupied columns carry nested row sets, and a band ends at the last
// column of each distinct row set.
struct SubShape {
    int bottom = 0;
    std::vector<int> cols;                  // ascending global column indices
    std::vector<std::vector<int>> col_rows; // aligned with cols, ascending
    struct Band {
        int anchor_col = 0;
        int low_col = 0;  // previous band's anchor, 0 for the first
        std::vector<int> rows;
    };
    std::vector<Band> bands;

    int pos_of(int col) const {
        auto it = std::lower_bound(cols.begin(), cols.end(), col);
        return static_cast<int>(it - cols.begin());
    }
    int band_of(int col) const {
        for (std::size_t i = 0; i < bands.size(); ++i)
            if (col > bands[i].low_col && col <= bands[i].anchor_col) return static_cast<int>(i) + 1;
        throw std::logic_error("SubShape::band_of: column outside every band");
    }
};

std::optional<SubShape> make_subshape(const Grid& g, int limit) {
    int bottom = 0;
    for (int r = std::min(limit, g.rows); r >= 1 && !bottom; --r)
        for (int c = 1; c <= g.cols; ++c)
            if (g.has(r, c)) {
                bottom = r;
                break;
            }
    if (!bottom) return std::nullopt;

    SubShape sub;
    sub.bottom = bottom;
    for (int c = 1; c <= g.cols; ++c) {
        if (!g.has(bottom, c)) continue;
        sub.cols.push_back(c);
        std::vector<int> rows;
        for (int r = 1; r <= std::min(limit, g.rows); ++r)
            if (g.has(r, c)) rows.push_back(r);
        sub.col_rows.push_back(std::move(rows));
    }
    int prev_anchor = 0;
    for (std::size_t i = 0; i < sub.cols.size(); ++i) {
        if (i + 1 == sub.cols.size() || sub.col_rows[i] != sub.col_rows[i + 1]) {
            sub.bands.push_back({sub.cols[i], prev_anchor, sub.col_rows[i]});
            prev_anchor = sub.cols[i];
        }
    }
    return sub;
}

// Pivot of one rectangle: leftmost column maximizing the zero count among
// bottom-1 columns (primal) or the one count among non-zero bottom-0
// columns (dual), over the band's row set.
std::optional<int> band_pivot(const Grid& g, const SubShape& sub, const SubShape::Band& band, bool dual) {
    int best_col = 0, best_score = -1;
    for (std::size_t pos = 0; pos < sub.cols.size(); ++pos) {
        int c = sub.cols[pos];
        if (c > band.anchor_col) break;
        int bottom_bit = g.at(sub.bottom, c);
        int score = 0;
        if (!dual) {
            if (bottom_bit != 1) continue;
            for (int r : band.rows) score += g.at(r, c) == 0;
        } else {
            if (bottom_bit != 0) continue;
            for (int r : band.rows) score += g.at(r, c) == 1;
            if (score == 0) continue;  // zero column
        }
        if (score > best_score) {
            best_score = score;
            best_col = c;
        }
    }
    if (best_score < 0) return std::nullopt;
    return best_col;
}

PivotReport compute_pivot(const Grid& g, const SubShape& sub, bool dual) {
    PivotReport rep;
    for (std::size_t i = 0; i < sub.bands.size(); ++i) {
        auto p = band_pivot(g, sub, sub.bands[i], dual);
        if (p && *p > sub.bands[i].low_col) rep.candidates.emplace_back(static_cast<int>(i) + 1, *p);
    }
    if (!rep.candidates.empty()) {
        rep.band = rep.candidates.back().first;
        rep.column = rep.candidates.back().second;
    }
    return rep;
}

bool column_zero(const Grid& g, const std::vector<int>& rows, int c) {
    for (int r : rows)
        if (g.at(r, c) != 0) return false;
    return true;
}

bool column_equals_pivot(const Grid& g, const std::vector<int>& rows, int c, int j) {
    for (int r : rows)
        if (g.at(r, c) != g.at(r, j)) return false;
    return true;
}

bool single_one_at_bottom(const Grid& g, const std::vector<int>& rows, int c, int bottom) {
    if (g.at(bottom, c) != 1) return false;
    for (int r : rows)
        if (r != bottom && g.at(r, c) != 0) return false;
    return true;
}

// Forward rewrite on the bottom-anchored part of rows 1..limit.
PivotReport phi_step(Grid& g, int limit, bool dual) {
    auto sub = make_subshape(g, limit);
    if (!sub) return {};
    PivotReport rep = compute_pivot(g, *sub, dual);
    if (!rep.column) return rep;
    int j = *rep.column;
    for (std::size_t pos = 0; pos < sub->cols.size(); ++pos) {
        int c = sub->cols[pos];
        if (c == j) continue;
        const auto& rows_c = sub->col_rows[pos];
        if (c < j) {
            g.at(sub->bottom, c) = 0;
            continue;
        }
        if (column_zero(g, rows_c, c)) continue;
        if (column_equals_pivot(g, rows_c, c, j)) {
            for (int r : rows_c) g.at(r, c) = static_cast<std::int8_t>(r == sub->bottom);
        } else {
            g.at(sub->bottom, c) = 1;
        }
    }
    return rep;
}

// Inverse rewrite. Recovers the pivot as the leftmost bottom-1 column
// (primal) or the rightmost non-zero bottom-0 column (dual), then settles
// every other bottom bit by count comparisons against the pivot.
PivotReport phi_inv_step(Grid& g, int limit, bool dual) {
    auto sub = make_subshape(g, limit);
    if (!sub) return {};

    int j = 0;
    for (std::size_t pos = 0; pos < sub->cols.size(); ++pos) {
        int c = sub->cols[pos];
        if (!dual) {
            if (g.at(sub->bottom, c) == 1) {
                j = c;
                break;
            }
        } else {
            if (g.at(sub->bottom, c) == 0 && !column_zero(g, sub->col_rows[pos], c)) j = c;
        }
    }
    if (!j) return {};

    int band = sub->band_of(j);
    const auto& H = sub->bands[static_cast<std::size_t>(band - 1)].rows;
    int bottom = sub->bottom;

    auto count_above = [&](const std::vector<int>& rows, int c, int bit) {
        int n = 0;
        for (int r : rows)
            if (r != bottom && g.at(r, c) == bit) ++n;
        return n;
    };
    int pivot_zeros_H = count_above(H, j, 0);
    int pivot_ones_H = count_above(H, j, 1);

    for (std::size_t pos = 0; pos < sub->cols.size(); ++pos) {
        int c = sub->cols[pos];
        if (c == j) continue;
        const auto& rows_c = sub->col_rows[pos];
        if (c < j) {
            if (!dual)
                g.at(bottom, c) = static_cast<std::int8_t>(count_above(H, c, 0) < pivot_zeros_H);
            else
                g.at(bottom, c) = static_cast<std::int8_t>(count_above(H, c, 1) >= pivot_ones_H);
            continue;
        }
        bool single1 = single_one_at_bottom(g, rows_c, c, bottom);
        bool pivot_above_nonzero = count_above(rows_c, j, 1) > 0;
        // A single 1 at the bottom marks a column that matched the pivot,
        // except in the dual case when the pivot vanishes on this column's
        // rows: such a column was already a single-1 column and keeps its
        // bottom bit through the count rule below.
        if (single1 && (!dual || pivot_above_nonzero)) {
            for (int r : rows_c) g.at(r, c) = g.at(r, j);
            continue;
        }
        if (column_zero(g, rows_c, c)) continue;
        int ones_c = count_above(rows_c, c, 1);
        int ones_j = count_above(rows_c, j, 1);
        if (!dual)
            g.at(bottom, c) = static_cast<std::int8_t>(ones_c > ones_j);
        else
            g.at(bottom, c) = static_cast<std::int8_t>(ones_c >= ones_j);
    }

    if (!dual) {
        // Any recovered column carrying a single bottom 1 must match the
        // pivot column on its rows; anything else means the input was not a
        // reachable mixed diagram.
        for (std::size_t pos = 0; pos < sub->cols.size(); ++pos) {
            int c = sub->cols[pos];
            const auto& rows_c = sub->col_rows[pos];
            if (single_one_at_bottom(g, rows_c, c, bottom) && !column_equals_pivot(g, rows_c, c, j))
                throw std::logic_error("phi_inv: single-1 column does not match the pivot column");
        }
    }

    PivotReport rep;
    rep.column = j;
    rep.band = band;
    return rep;
}

void require_le_complete(const Shape& s, const char* who) {
    if (!is_le_complete(s)) throw std::invalid_argument(std::string(who) + ": shape must be le-complete");
}

void require_avoids(const Filling& f, const PatternClass& pc, const char* who) {
    if (!avoids(f, pc))
        throw std::invalid_argument(std::string(who) + ": filling must avoid the " + std::string(pc.name()) +
                                    " patterns");
}

void require_mixed(const Filling& f, const char* who) {
    if (!is_mixed(f)) throw std::invalid_argument(std::string(who) + ": filling must be a mixed diagram");
}

std::vector<int> occupied_rows(const Shape& s) {
    std::vector<int> rows;
    for (const Cell& c : s.cells())
        if (rows.empty() || rows.back() != c.row) rows.push_back(c.row);
    return rows;  // cells are row-major sorted
}

Filling run_steps(const Filling& f, bool dual, bool inverse, BigPhiTrace* trace) {
    Grid g = Grid::of(f);
    std::vector<int> rows = occupied_rows(f.shape());
    if (!inverse) std::reverse(rows.begin(), rows.end());
    for (int limit : rows) {
        PivotReport rep = inverse ? phi_inv_step(g, limit, dual) : phi_step(g, limit, dual);
        if (trace) trace->steps.push_back(std::move(rep));
    }
    return g.to_filling(f.shape());
}

}  // namespace

std::vector<int> BigPhiTrace::pivot_columns() const {
    std::vector<int> out;
    for (const PivotReport& r : steps)
        if (r.column) out.push_back(*r.column);
    return out;
}

PivotReport pivot_column(const Filling& f) {
    require_le_complete(f.shape(), "pivot_column");
    require_avoids(f, PatternClass::x(), "pivot_column");
    Grid g = Grid::of(f);
    auto sub = make_subshape(g, f.shape().max_row());
    if (!sub) return {};
    return compute_pivot(g, *sub, /*dual=*/false);
}

PivotReport pivot_column_dual(const Filling& f) {
    require_le_complete(f.shape(), "pivot_column_dual");
    require_avoids(f, PatternClass::x(), "pivot_column_dual");
    Grid g = Grid::of(f);
    auto sub = make_subshape(g, f.shape().max_row());
    if (!sub) return {};
    return compute_pivot(g, *sub, /*dual=*/true);
}

std::vector<std::optional<int>> rectangle_pivots(const Filling& f) {
    require_le_complete(f.shape(), "rectangle_pivots");
    require_avoids(f, PatternClass::x(), "rectangle_pivots");
    Grid g = Grid::of(f);
    auto sub = make_subshape(g, f.shape().max_row());
    std::vector<std::optional<int>> out;
    if (!sub) return out;
    for (const auto& band : sub->bands) out.push_back(band_pivot(g, *sub, band, /*dual=*/false));
    return out;
}

Filling phi(const Filling& f) {
    require_le_complete(f.shape(), "phi");
    require_avoids(f, PatternClass::x(), "phi");
    Grid g = Grid::of(f);
    phi_step(g, f.shape().max_row(), /*dual=*/false);
    return g.to_filling(f.shape());
}

Filling phi_inv(const Filling& u) {
    require_le_complete(u.shape(), "phi_inv");
    require_mixed(u, "phi_inv");
    Grid g = Grid::of(u);
    phi_inv_step(g, u.shape().max_row(), /*dual=*/false);
    return g.to_filling(u.shape());
}

Filling phi2(const Filling& f) {
    require_le_complete(f.shape(), "phi2");
    require_avoids(f, PatternClass::x(), "phi2");
    Grid g = Grid::of(f);
    phi_step(g, f.shape().max_row(), /*dual=*/true);
    return g.to_filling(f.shape());
}

Filling phi2_inv(const Filling& u) {
    require_le_complete(u.shape(), "phi2_inv");
    require_mixed(u, "phi2_inv");
    Grid g = Grid::of(u);
    phi_inv_step(g, u.shape().max_row(), /*dual=*/true);
    return g.to_filling(u.shape());
}

Filling big_phi(const Filling& f, BigPhiTrace* trace) {
    require_le_complete(f.shape(), "big_phi");
    require_avoids(f, PatternClass::x(), "big_phi");
    return run_steps(f, /*dual=*/false, /*inverse=*/false, trace);
}

Filling big_phi_inv(const Filling& u, BigPhiTrace* trace) {
    require_le_complete(u.shape(), "big_phi_inv");
    require_avoids(u, PatternClass::le(), "big_phi_inv");
    return run_steps(u, /*dual=*/false, /*inverse=*/true, trace);
}

Filling big_phi2(const Filling& f, BigPhiTrace* trace) {
    require_le_complete(f.shape(), "big_phi2");
    require_avoids(f, PatternClass::x(), "big_phi2");
    return run_steps(f, /*dual=*/true, /*inverse=*/false, trace);
}

Filling big_phi2_inv(const Filling& u, BigPhiTrace* trace) {
    require_le_complete(u.shape(), "big_phi2_inv");
    require_avoids(u, PatternClass::le(), "big_phi2_inv");
    return run_steps(u, /*dual=*/true, /*inverse=*/true, trace);
}

}  // namespace lediag
