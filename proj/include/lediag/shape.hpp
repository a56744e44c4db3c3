#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lediag {

struct Cell {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A polyomino-like cell set at positive (row, col) coordinates. Row 1 is the
/// top row, column 1 the leftmost column, rows grow downward. The set may be
/// empty, disconnected, or have holes; cells are kept sorted row-major.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<Cell> cells);

    bool empty() const { return cells_.empty(); }
    int cell_count() const { return static_cast<int>(cells_.size()); }
    const std::vector<Cell>& cells() const { return cells_; }

    bool contains(int row, int col) const;
    /// Index of (row, col) in cells(), or -1.
    int cell_index(int row, int col) const;

    /// Largest occupied row / column index (0 when empty).
    int max_row() const { return max_row_; }
    int max_col() const { return max_col_; }

    std::vector<int> cols_in_row(int row) const;
    std::vector<int> rows_in_col(int col) const;
    int row_size(int row) const;
    int col_size(int col) const;

    /// True when some cell lies in row 1 and some cell lies in column 1.
    bool is_normalized() const;
    /// Translate so the occupied bounding box starts at (1, 1).
    Shape normalized() const;

    /// Sub-shape of the cells in rows 1..i (coordinates preserved).
    Shape top_rows(int i) const;

    friend bool operator==(const Shape&, const Shape&) = default;

private:
    std::vector<Cell> cells_;
    int max_row_ = 0;
    int max_col_ = 0;
};

/// Weakly decreasing sequence of positive parts; may be empty.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Comma-separated parts, e.g. "6,6,5,4,3"; "" is the empty partition.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }  // 1-based
    long long cell_count() const;
    bool empty() const { return parts_.empty(); }
    bool fits_box(int k, int m) const;

    /// English notation: row i has cells (i, 1..parts[i]).
    Shape young_shape() const;
    /// French notation: longest row at the bottom.
    Shape young_shape_french() const;

    /// Corner boxes: cells whose right and bottom neighbors are absent.
    std::vector<Cell> corners() const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Row count plus weakly decreasing parts that may include zero rows;
/// the length statistic is rows + parts[0].
struct BorderedShape {
    int rows = 0;
    std::vector<int> parts;  // size == rows, weakly decreasing, >= 0

    int length() const { return rows + (parts.empty() ? 0 : parts.front()); }
    /// Young shape of the positive parts.
    Shape positive_shape() const;
    std::string to_string() const;
};

struct ShapeClass {
    bool young_english = false;
    bool young_french = false;
    bool le_complete = false;
    bool stalactite = false;
    bool columns_meet_bottom = false;
};

/// Grid text: '#' cell, '.' hole, newline-separated rows top to bottom.
/// The result is translated so it is normalized.
Shape parse_shape(const std::string& text);
std::string render_shape(const Shape& s);

ShapeClass classify(const Shape& s);
bool is_le_complete(const Shape& s);
/// The mirrored completion condition quoted in some sources; kept for
/// reference only, nothing in the bijections uses it.
bool is_le_complete_mirrored(const Shape& s);

/// Cells of s whose column meets the bottom row of s.
Shape bottom_anchored_subshape(const Shape& s);

/// Column bands of a bottom-anchored shape. Band i covers columns
/// (prev_anchor, anchor]; its cells form the rectangle rows x (1..anchor).
struct RectangleDecomposition {
    struct Band {
        int anchor_col = 0;       // the distinguished column C_i
        int low_col = 0;          // anchor of the previous band (0 for the first)
        std::vector<int> rows;    // row set of C_i, sorted
    };
    std::vector<Band> bands;
    std::vector<int> columns;     // occupied columns of the parent, sorted

    int band_of_column(int col) const;
    std::vector<Cell> rectangle_cells(int band_index) const;  // 1-based band index
};
RectangleDecomposition rectangle_decomposition(const Shape& s);

/// Partitions obtained by removing, in order: the corner box, its row, its
/// column, and both.
std::array<Partition, 4> corner_removals(const Partition& p, Cell corner);

/// Every normalized, edge-connected, le-complete shape inside the box,
/// in increasing bitmask order over row-major cells.
std::vector<Shape> enumerate_le_complete(int max_rows, int max_cols);

/// Same enumeration without the le-completeness filter.
std::vector<Shape> enumerate_connected_shapes(int max_rows, int max_cols);

/// All partitions with at most max_cells cells (the empty one included),
/// sorted. Sweep helper.
std::vector<Partition> partitions_up_to(int max_cells);

}  // namespace lediag
