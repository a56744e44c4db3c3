#include "lediag/shape.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lediag {

Shape::Shape(std::vector<Cell> cells) : cells_(std::move(cells)) {
    for (const Cell& c : cells_) {
        if (c.row < 1 || c.col < 1) throw std::invalid_argument("Shape: cell coordinates must be positive");
    }
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    for (const Cell& c : cells_) {
        max_row_ = std::max(max_row_, c.row);
        max_col_ = std::max(max_col_, c.col);
    }
}

bool Shape::contains(int row, int col) const { return cell_index(row, col) >= 0; }

int Shape::cell_index(int row, int col) const {
    Cell key{row, col};
    auto it = std::lower_bound(cells_.begin(), cells_.end(), key);
    if (it == cells_.end() || *it != key) return -1;
    return static_cast<int>(it - cells_.begin());
}

std::vector<int> Shape::cols_in_row(int row) const {
    std::vector<int> out;
    for (const Cell& c : cells_)
        if (c.row == row) out.push_back(c.col);
    return out;
}

std::vector<int> Shape::rows_in_col(int col) const {
    std::vector<int> out;
    for (const Cell& c : cells_)
        if (c.col == col) out.push_back(c.row);
    return out;
}

int Shape::row_size(int row) const { return static_cast<int>(cols_in_row(row).size()); }
int Shape::col_size(int col) const { return static_cast<int>(rows_in_col(col).size()); }

bool Shape::is_normalized() const {
    if (empty()) return true;
    bool row1 = false, col1 = false;
    for (const Cell& c : cells_) {
        row1 |= c.row == 1;
        col1 |= c.col == 1;
    }
    return row1 && col1;
}

Shape Shape::normalized() const {
    if (empty() || is_normalized()) return *this;
    int min_row = cells_.front().row, min_col = cells_.front().col;
    for (const Cell& c : cells_) {
        min_row = std::min(min_row, c.row);
        min_col = std::min(min_col, c.col);
    }
    std::vector<Cell> shifted;
    shifted.reserve(cells_.size());
    for (const Cell& c : cells_) shifted.push_back({c.row - min_row + 1, c.col - min_col + 1});
    return Shape{std::move(shifted)};
}

Shape Shape::top_rows(int i) const {
    std::vector<Cell> kept;
    for (const Cell& c : cells_)
        if (c.row <= i) kept.push_back(c);
    return Shape{std::move(kept)};
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string trimmed;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
    if (trimmed.empty()) return Partition{};
    std::stringstream ss(trimmed);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("Partition: expected comma-separated positive integers, got \"" + text + "\"");
        parts.push_back(std::stoi(tok));
    }
    return Partition{std::move(parts)};
}

long long Partition::cell_count() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

bool Partition::fits_box(int k, int m) const {
    if (rows() > k) return false;
    return parts_.empty() || parts_.front() <= m;
}

Shape Partition::young_shape() const {
    std::vector<Cell> cells;
    for (int i = 1; i <= rows(); ++i)
        for (int j = 1; j <= part(i); ++j) cells.push_back({i, j});
    return Shape{std::move(cells)};
}

Shape Partition::young_shape_french() const {
    std::vector<Cell> cells;
    int k = rows();
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= part(i); ++j) cells.push_back({k - i + 1, j});
    return Shape{std::move(cells)};
}

std::vector<Cell> Partition::corners() const {
    std::vector<Cell> out;
    for (int i = 1; i <= rows(); ++i) {
        bool last_of_run = (i == rows()) || part(i + 1) < part(i);
        if (last_of_run) out.push_back({i, part(i)});
    }
    return out;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Shape BorderedShape::positive_shape() const {
    std::vector<int> positive;
    for (int p : parts)
        if (p > 0) positive.push_back(p);
    return Partition{positive}.young_shape();
}

std::string BorderedShape::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    return out + ")";
}

Shape parse_shape(const std::string& text) {
    std::vector<Cell> cells;
    int row = 1, col = 1;
    for (char ch : text) {
        if (ch == '\n') {
            ++row;
            col = 1;
        } else if (ch == '#') {
            cells.push_back({row, col});
            ++col;
        } else if (ch == '.') {
            ++col;
        } else if (ch != '\r') {
            throw std::invalid_argument(std::string("parse_shape: invalid character '") + ch + "'");
        }
    }
    return Shape{std::move(cells)}.normalized();
}

std::string render_shape(const Shape& s) {
    std::string out;
    for (int r = 1; r <= s.max_row(); ++r) {
        if (r > 1) out += '\n';
        auto cols = s.cols_in_row(r);
        int width = cols.empty() ? 0 : cols.back();
        std::size_t pos = 0;
        for (int c = 1; c <= width; ++c) {
            if (pos < cols.size() && cols[pos] == c) {
                out += '#';
                ++pos;
            } else {
                out += '.';
            }
        }
    }
    return out;
}

namespace {

// Rows as sorted column lists, rows 1..max_row (possibly empty).
std::vector<std::vector<int>> row_table(const Shape& s) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(s.max_row()) + 1);
    for (const Cell& c : s.cells()) rows[static_cast<std::size_t>(c.row)].push_back(c.col);
    return rows;
}

bool contiguous_from_1(const std::vector<int>& cols) {
    for (std::size_t i = 0; i < cols.size(); ++i)
        if (cols[i] != static_cast<int>(i) + 1) return false;
    return true;
}

}  // namespace

bool is_le_complete(const Shape& s) {
    // For rows i < j sharing a column l, every cell of row j strictly left of
    // the largest shared column must appear in row i.
    auto rows = row_table(s);
    for (int j = 2; j <= s.max_row(); ++j) {
        const auto& rj = rows[static_cast<std::size_t>(j)];
        if (rj.empty()) continue;
        for (int i = 1; i < j; ++i) {
            const auto& ri = rows[static_cast<std::size_t>(i)];
            if (ri.empty()) continue;
            int shared_max = 0;
            for (int c : rj)
                if (std::binary_search(ri.begin(), ri.end(), c)) shared_max = std::max(shared_max, c);
            if (shared_max == 0) continue;
            for (int c : rj) {
                if (c >= shared_max) break;
                if (!std::binary_search(ri.begin(), ri.end(), c)) return false;
            }
        }
    }
    return true;
}

bool is_le_complete_mirrored(const Shape& s) {
    // Mirror image: cells of row j strictly right of the smallest shared column.
    auto rows = row_table(s);
    for (int j = 2; j <= s.max_row(); ++j) {
        const auto& rj = rows[static_cast<std::size_t>(j)];
        if (rj.empty()) continue;
        for (int i = 1; i < j; ++i) {
            const auto& ri = rows[static_cast<std::size_t>(i)];
            if (ri.empty()) continue;
            int shared_min = 0;
            for (int c : rj)
                if (std::binary_search(ri.begin(), ri.end(), c)) {
                    shared_min = c;
                    break;
                }
            if (shared_min == 0) continue;
            for (int c : rj)
                if (c > shared_min && !std::binary_search(ri.begin(), ri.end(), c)) return false;
        }
    }
    return true;
}

ShapeClass classify(const Shape& s) {
    ShapeClass out;
    out.le_complete = is_le_complete(s);
    if (s.empty()) {
        out.young_english = out.young_french = out.stalactite = out.columns_meet_bottom = true;
        return out;
    }

    auto rows = row_table(s);
    bool contiguous_rows = true;
    std::vector<int> lengths;
    for (int r = 1; r <= s.max_row(); ++r) {
        const auto& cols = rows[static_cast<std::size_t>(r)];
        contiguous_rows &= contiguous_from_1(cols);
        lengths.push_back(static_cast<int>(cols.size()));
    }
    bool has_empty_row = std::find(lengths.begin(), lengths.end(), 0) != lengths.end();
    out.young_english = contiguous_rows && !has_empty_row && std::is_sorted(lengths.rbegin(), lengths.rend());
    out.young_french = contiguous_rows && !has_empty_row && std::is_sorted(lengths.begin(), lengths.end());

    out.stalactite = true;
    out.columns_meet_bottom = true;
    for (int c = 1; c <= s.max_col(); ++c) {
        auto col_rows = s.rows_in_col(c);
        if (col_rows.empty()) continue;  // the predicates quantify over occupied columns
        bool contiguous = col_rows.back() - col_rows.front() + 1 == static_cast<int>(col_rows.size());
        out.stalactite &= contiguous && col_rows.front() == 1;
        out.columns_meet_bottom &= col_rows.back() == s.max_row();
    }
    return out;
}

Shape bottom_anchored_subshape(const Shape& s) {
    if (s.empty()) throw std::invalid_argument("bottom_anchored_subshape: empty shape");
    if (!is_le_complete(s)) throw std::invalid_argument("bottom_anchored_subshape: shape is not le-complete");
    auto bottom_cols = s.cols_in_row(s.max_row());
    std::vector<Cell> kept;
    for (const Cell& c : s.cells())
        if (std::binary_search(bottom_cols.begin(), bottom_cols.end(), c.col)) kept.push_back(c);
    return Shape{std::move(kept)};
}

int RectangleDecomposition::band_of_column(int col) const {
    for (std::size_t i = 0; i < bands.size(); ++i)
        if (col > bands[i].low_col && col <= bands[i].anchor_col) return static_cast<int>(i) + 1;
    return 0;
}

std::vector<Cell> RectangleDecomposition::rectangle_cells(int band_index) const {
    const Band& b = bands[static_cast<std::size_t>(band_index - 1)];
    std::vector<Cell> out;
    for (int r : b.rows)
        for (int c : columns) {
            if (c > b.anchor_col) break;
            out.push_back({r, c});
        }
    std::sort(out.begin(), out.end());
    return out;
}

RectangleDecomposition rectangle_decomposition(const Shape& s) {
    ShapeClass cl = classify(s);
    if (s.empty() || !cl.le_complete || !cl.columns_meet_bottom)
        throw std::invalid_argument("rectangle_decomposition: shape must be nonempty, le-complete, with all columns meeting the bottom row");

    // Occupied columns ordered left to right carry nested row sets; a band
    // ends at the last column of each distinct row set.
    RectangleDecomposition out;
    std::vector<std::vector<int>> col_rows;
    for (int c = 1; c <= s.max_col(); ++c) {
        auto rows = s.rows_in_col(c);
        if (rows.empty()) continue;
        out.columns.push_back(c);
        col_rows.push_back(std::move(rows));
    }
    int prev_anchor = 0;
    for (std::size_t i = 0; i < out.columns.size(); ++i) {
        if (i + 1 == out.columns.size() || col_rows[i] != col_rows[i + 1]) {
            RectangleDecomposition::Band band;
            band.anchor_col = out.columns[i];
            band.low_col = prev_anchor;
            band.rows = col_rows[i];
            out.bands.push_back(std::move(band));
            prev_anchor = out.columns[i];
        }
    }
    // Sanity: every stated rectangle cell must exist in the shape.
    for (std::size_t i = 0; i < out.bands.size(); ++i)
        for (const Cell& c : out.rectangle_cells(static_cast<int>(i) + 1))
            if (!s.contains(c.row, c.col))
                throw std::logic_error("rectangle_decomposition: rectangle cell missing from shape");
    return out;
}

std::array<Partition, 4> corner_removals(const Partition& p, Cell corner) {
    auto cs = p.corners();
    if (std::find(cs.begin(), cs.end(), corner) == cs.end())
        throw std::invalid_argument("corner_removals: cell is not a corner of the partition");
    int r = corner.row;

    auto strip_zeros = [](std::vector<int> parts) {
        parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
        return Partition{std::move(parts)};
    };

    std::vector<int> minus_box = p.parts();
    minus_box[static_cast<std::size_t>(r - 1)] -= 1;

    std::vector<int> minus_row = p.parts();
    minus_row.erase(minus_row.begin() + (r - 1));

    // The corner's column meets exactly rows 1..r.
    std::vector<int> minus_col = p.parts();
    for (int i = 0; i < r; ++i) minus_col[static_cast<std::size_t>(i)] -= 1;

    std::vector<int> minus_both = minus_col;
    minus_both.erase(minus_both.begin() + (r - 1));

    return {strip_zeros(std::move(minus_box)), strip_zeros(std::move(minus_row)),
            strip_zeros(std::move(minus_col)), strip_zeros(std::move(minus_both))};
}

namespace {

bool mask_connected(std::uint32_t mask, int rows, int cols) {
    if (mask == 0) return false;
    int start = 0;
    while (!(mask >> start & 1)) ++start;
    std::uint32_t seen = 1u << start;
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int at = stack.back();
        stack.pop_back();
        int r = at / cols, c = at % cols;
        const int dr[] = {-1, 1, 0, 0};
        const int dc[] = {0, 0, -1, 1};
        for (int d = 0; d < 4; ++d) {
            int nr = r + dr[d], nc = c + dc[d];
            if (nr < 0 || nr >= rows || nc < 0 || nc >= cols) continue;
            int nat = nr * cols + nc;
            if ((mask >> nat & 1) && !(seen >> nat & 1)) {
                seen |= 1u << nat;
                stack.push_back(nat);
            }
        }
    }
    return seen == mask;
}

}  // namespace

namespace {

std::vector<Shape> enumerate_box_shapes(int max_rows, int max_cols, bool le_complete_only) {
    if (max_rows < 1 || max_cols < 1) throw std::invalid_argument("shape enumeration: box must be positive");
    if (max_rows * max_cols > 20) throw std::invalid_argument("shape enumeration: box area exceeds 20 cells");
    int n = max_rows * max_cols;
    std::vector<Shape> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        bool row1 = false, col1 = false;
        for (int at = 0; at < n; ++at)
            if (mask >> at & 1) {
                row1 |= at / max_cols == 0;
                col1 |= at % max_cols == 0;
            }
        if (!row1 || !col1) continue;
        if (!mask_connected(mask, max_rows, max_cols)) continue;
        std::vector<Cell> cells;
        for (int at = 0; at < n; ++at)
            if (mask >> at & 1) cells.push_back({at / max_cols + 1, at % max_cols + 1});
        Shape s{std::move(cells)};
        if (!le_complete_only || is_le_complete(s)) out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

std::vector<Shape> enumerate_le_complete(int max_rows, int max_cols) {
    return enumerate_box_shapes(max_rows, max_cols, true);
}

std::vector<Shape> enumerate_connected_shapes(int max_rows, int max_cols) {
    return enumerate_box_shapes(max_rows, max_cols, false);
}

namespace {

void extend_partition(std::vector<int>& parts, int remaining, int max_part, std::vector<Partition>& out) {
    out.push_back(Partition{parts});
    for (int next = std::min(remaining, max_part); next >= 1; --next) {
        parts.push_back(next);
        extend_partition(parts, remaining - next, next, out);
        parts.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_up_to(int max_cells) {
    std::vector<Partition> out;
    std::vector<int> parts;
    extend_partition(parts, max_cells, max_cells, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace lediag
