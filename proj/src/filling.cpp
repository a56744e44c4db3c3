#include "lediag/filling.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace lediag {

Pattern Pattern::from_digits(std::string_view digits) {
    if (digits.size() != 4 || digits.find_first_not_of("01") != std::string_view::npos)
        throw std::invalid_argument("Pattern: expected four binary digits");
    int code = 0;
    for (char ch : digits) code = code << 1 | (ch == '1');
    return Pattern{code};
}

std::string Pattern::to_string() const {
    std::string out(4, '0');
    for (int i = 0; i < 4; ++i)
        if (code >> (3 - i) & 1) out[static_cast<std::size_t>(i)] = '1';
    return out;
}

namespace {

std::uint16_t mask_of(std::initializer_list<const char*> digit_strings) {
    std::uint16_t mask = 0;
    for (const char* s : digit_strings) mask = static_cast<std::uint16_t>(mask | 1u << Pattern::from_digits(s).code);
    return mask;
}

}  // namespace

const PatternClass& PatternClass::le() {
    static const PatternClass pc{Id::LE, mask_of({"1110", "0110"})};
    return pc;
}

const PatternClass& PatternClass::x() {
    static const PatternClass pc{Id::X, mask_of({"1001", "0110"})};
    return pc;
}

const PatternClass& PatternClass::alt() {
    static const PatternClass pc{Id::ALT, mask_of({"0111", "1111"})};
    return pc;
}

const PatternClass& PatternClass::by_name(std::string_view name) {
    if (name == "le") return le();
    if (name == "x") return x();
    if (name == "alt") return alt();
    throw std::invalid_argument("PatternClass: unknown class \"" + std::string(name) + "\" (expected le, x, or alt)");
}

std::string_view PatternClass::name() const {
    switch (id_) {
        case Id::LE: return "le";
        case Id::X: return "x";
        case Id::ALT: return "alt";
    }
    return "?";
}

std::vector<Pattern> PatternClass::patterns() const {
    std::vector<Pattern> out;
    for (int code = 0; code < 16; ++code)
        if (contains_code(code)) out.push_back(Pattern{code});
    return out;
}

Filling::Filling(Shape shape, std::vector<std::uint8_t> bits) : shape_(std::move(shape)), bits_(std::move(bits)) {
    if (bits_.size() != shape_.cells().size())
        throw std::invalid_argument("Filling: bit count must match the cell count");
    for (auto b : bits_)
        if (b > 1) throw std::invalid_argument("Filling: bits must be 0 or 1");
}

Filling Filling::zeros(Shape shape) {
    std::vector<std::uint8_t> bits(shape.cells().size(), 0);
    return {std::move(shape), std::move(bits)};
}

int Filling::at(int row, int col) const {
    int i = shape_.cell_index(row, col);
    if (i < 0) throw std::out_of_range("Filling::at: no such cell");
    return bits_[static_cast<std::size_t>(i)];
}

void Filling::set(int row, int col, int bit) {
    int i = shape_.cell_index(row, col);
    if (i < 0) throw std::out_of_range("Filling::set: no such cell");
    bits_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(bit != 0);
}

long long Filling::ones() const {
    long long n = 0;
    for (auto b : bits_) n += b;
    return n;
}

Filling parse_diagram(const std::string& text) {
    std::vector<Cell> cells;
    std::vector<std::uint8_t> bits;
    int row = 1, col = 1;
    for (char ch : text) {
        if (ch == '\n') {
            ++row;
            col = 1;
        } else if (ch == '0' || ch == '1') {
            cells.push_back({row, col});
            bits.push_back(static_cast<std::uint8_t>(ch == '1'));
            ++col;
        } else if (ch == '.') {
            ++col;
        } else if (ch != '\r') {
            throw std::invalid_argument(std::string("parse_diagram: invalid character '") + ch + "'");
        }
    }
    // Cells arrive row-major already; Shape re-sorts identically, so the bit
    // order stays aligned. Normalize by the same shift as the shape.
    Shape raw{cells};
    Shape norm = raw.normalized();
    return Filling{std::move(norm), std::move(bits)};
}

std::string render_diagram(const Filling& f) {
    const Shape& s = f.shape();
    std::string out;
    for (int r = 1; r <= s.max_row(); ++r) {
        if (r > 1) out += '\n';
        auto cols = s.cols_in_row(r);
        int width = cols.empty() ? 0 : cols.back();
        std::size_t pos = 0;
        for (int c = 1; c <= width; ++c) {
            if (pos < cols.size() && cols[pos] == c) {
                out += f.at(r, c) ? '1' : '0';
                ++pos;
            } else {
                out += '.';
            }
        }
    }
    return out;
}

std::optional<Violation> find_violation(const Filling& f, const PatternClass& pc) {
    const Shape& s = f.shape();
    for (int r1 = 1; r1 <= s.max_row(); ++r1)
        for (int r2 = r1 + 1; r2 <= s.max_row(); ++r2)
            for (int c1 = 1; c1 <= s.max_col(); ++c1) {
                if (!s.contains(r1, c1) || !s.contains(r2, c1)) continue;
                for (int c2 = c1 + 1; c2 <= s.max_col(); ++c2) {
                    if (!s.contains(r1, c2) || !s.contains(r2, c2)) continue;
                    int code = f.at(r1, c1) << 3 | f.at(r1, c2) << 2 | f.at(r2, c1) << 1 | f.at(r2, c2);
                    if (pc.contains_code(code)) return Violation{r1, r2, c1, c2, Pattern{code}};
                }
            }
    return std::nullopt;
}

bool avoids(const Filling& f, const PatternClass& pc) { return !find_violation(f, pc).has_value(); }

bool is_le_diagram(const Filling& f) {
    const Shape& s = f.shape();
    for (const Cell& cell : s.cells()) {
        if (f.at(cell.row, cell.col) != 0) continue;
        bool left_zero = true, above_zero = true;
        for (const Cell& other : s.cells()) {
            if (other.row == cell.row && other.col < cell.col && f.at(other.row, other.col))
                left_zero = false;
            if (other.col == cell.col && other.row < cell.row && f.at(other.row, other.col))
                above_zero = false;
        }
        if (!left_zero && !above_zero) return false;
    }
    return true;
}

DiagramStats statistics(const Filling& f) {
    const Shape& s = f.shape();
    DiagramStats out;
    out.ones = f.ones();
    for (int r = 1; r <= s.max_row(); ++r) {
        auto cols = s.cols_in_row(r);
        bool zero = true, restricted = false;
        for (int c : cols) {
            if (f.at(r, c)) {
                zero = false;
            } else {
                for (int rr = 1; rr < r; ++rr)
                    if (s.contains(rr, c) && f.at(rr, c)) {
                        restricted = true;
                        break;
                    }
            }
        }
        if (zero) out.zero_rows.push_back(r);
        if (restricted)
            out.restricted_rows.push_back(r);
        else
            out.unrestricted_rows.push_back(r);
    }
    for (int c = 1; c <= s.max_col(); ++c) {
        bool zero = true;
        for (int r : s.rows_in_col(c))
            if (f.at(r, c)) zero = false;
        if (zero) out.zero_columns.push_back(c);
    }
    return out;
}

bool is_mixed(const Filling& f) {
    const Shape& s = f.shape();
    if (!is_le_complete(s)) throw std::invalid_argument("is_mixed: shape must be le-complete");
    if (s.empty()) return true;
    int bottom = s.max_row();

    Shape top_shape = s.top_rows(bottom - 1);
    std::vector<std::uint8_t> top_bits;
    top_bits.reserve(top_shape.cells().size());
    for (const Cell& c : top_shape.cells()) top_bits.push_back(static_cast<std::uint8_t>(f.at(c.row, c.col)));
    if (!avoids(Filling{std::move(top_shape), std::move(top_bits)}, PatternClass::x())) return false;

    for (int c : s.cols_in_row(bottom)) {
        if (f.at(bottom, c)) continue;
        bool one_above = false;
        for (int r : s.rows_in_col(c))
            if (r < bottom && f.at(r, c)) one_above = true;
        bool one_left = false;
        for (int cc : s.cols_in_row(bottom))
            if (cc < c && f.at(bottom, cc)) one_left = true;
        if (one_above && one_left) return false;
    }
    return true;
}

namespace {

// Enumerates row subsets / column subsets whose full product lies in the
// shape, and feeds each rectangular submatrix to the visitor as a row-major
// bit table. Desk scale: shapes here stay tiny.
template <typename Visit>
void for_each_rect_submatrix(const Filling& f, Visit&& visit) {
    const Shape& s = f.shape();
    std::vector<int> rows(static_cast<std::size_t>(s.max_row()));
    for (int r = 1; r <= s.max_row(); ++r) rows[static_cast<std::size_t>(r - 1)] = r;

    std::vector<int> chosen_rows;
    std::vector<int> cols_all(static_cast<std::size_t>(s.max_col()));
    for (int c = 1; c <= s.max_col(); ++c) cols_all[static_cast<std::size_t>(c - 1)] = c;

    int nrows = s.max_row(), ncols = s.max_col();
    for (std::uint32_t rmask = 1; rmask < (1u << nrows); ++rmask) {
        chosen_rows.clear();
        for (int r = 0; r < nrows; ++r)
            if (rmask >> r & 1) chosen_rows.push_back(r + 1);
        for (std::uint32_t cmask = 1; cmask < (1u << ncols); ++cmask) {
            std::vector<int> chosen_cols;
            for (int c = 0; c < ncols; ++c)
                if (cmask >> c & 1) chosen_cols.push_back(c + 1);
            bool full = true;
            for (int r : chosen_rows) {
                for (int c : chosen_cols)
                    if (!s.contains(r, c)) {
                        full = false;
                        break;
                    }
                if (!full) break;
            }
            if (!full) continue;
            std::vector<std::vector<int>> m;
            m.reserve(chosen_rows.size());
            for (int r : chosen_rows) {
                std::vector<int> row;
                row.reserve(chosen_cols.size());
                for (int c : chosen_cols) row.push_back(f.at(r, c));
                m.push_back(std::move(row));
            }
            visit(m);
        }
    }
}

}  // namespace

XstructConditions xstruct_conditions(const Filling& f) {
    XstructConditions out;
    out.avoids_patterns = avoids(f, PatternClass::x());
    out.equal_ones_rows_equal = true;
    out.two_row_nesting = true;
    out.max_row_zeros_in_zero_columns = true;

    for_each_rect_submatrix(f, [&](const std::vector<std::vector<int>>& m) {
        std::size_t nr = m.size(), nc = m.front().size();
        std::vector<int> ones(nr, 0);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) ones[i] += m[i][j];

        for (std::size_t i = 0; i < nr && out.equal_ones_rows_equal; ++i)
            for (std::size_t j = i + 1; j < nr; ++j)
                if (ones[i] == ones[j] && m[i] != m[j]) {
                    out.equal_ones_rows_equal = false;
                    break;
                }

        if (nr == 2 && out.two_row_nesting) {
            bool first_in_second = true, second_in_first = true;
            for (std::size_t j = 0; j < nc; ++j) {
                if (m[0][j] && !m[1][j]) first_in_second = false;
                if (m[1][j] && !m[0][j]) second_in_first = false;
            }
            if (!first_in_second && !second_in_first) out.two_row_nesting = false;
        }

        if (out.max_row_zeros_in_zero_columns) {
            int best = *std::max_element(ones.begin(), ones.end());
            for (std::size_t i = 0; i < nr && out.max_row_zeros_in_zero_columns; ++i) {
                if (ones[i] != best) continue;
                for (std::size_t j = 0; j < nc; ++j) {
                    if (m[i][j]) continue;
                    bool zero_col = true;
                    for (std::size_t z = 0; z < nr; ++z)
                        if (m[z][j]) zero_col = false;
                    if (!zero_col) {
                        out.max_row_zeros_in_zero_columns = false;
                        break;
                    }
                }
            }
        }
    });
    return out;
}

FillingEnumerator::FillingEnumerator(Shape shape, const PatternClass& pc) : shape_(std::move(shape)) {
    for (Pattern p : pc.patterns()) class_mask_ = static_cast<std::uint16_t>(class_mask_ | 1u << p.code);
    const auto& cells = shape_.cells();
    quads_.resize(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        int r = cells[i].row, c = cells[i].col;
        for (int rr = 1; rr < r; ++rr)
            for (int cc = 1; cc < c; ++cc) {
                int a = shape_.cell_index(rr, cc);
                int b = shape_.cell_index(rr, c);
                int d = shape_.cell_index(r, cc);
                if (a >= 0 && b >= 0 && d >= 0) quads_[i].push_back({a, b, d});
            }
    }
}

void FillingEnumerator::search(int at, std::uint64_t mask, int total,
                               const std::function<void(std::uint64_t)>& visit) const {
    if (at == total) {
        visit(mask);
        return;
    }
    for (int bit = 0; bit <= 1; ++bit) {
        std::uint64_t next = mask | (static_cast<std::uint64_t>(bit) << at);
        bool ok = true;
        for (const auto& q : quads_[static_cast<std::size_t>(at)]) {
            int code = static_cast<int>(next >> q[0] & 1) << 3 | static_cast<int>(next >> q[1] & 1) << 2 |
                       static_cast<int>(next >> q[2] & 1) << 1 | bit;
            if (class_mask_ >> code & 1) {
                ok = false;
                break;
            }
        }
        if (ok) search(at + 1, next, total, visit);
    }
}

void FillingEnumerator::for_each_mask(const std::function<void(std::uint64_t)>& visit) const {
    search(0, 0, static_cast<int>(shape_.cells().size()), visit);
}

void FillingEnumerator::for_each_mask_with_prefix(int prefix_len, std::uint64_t prefix,
                                                  const std::function<void(std::uint64_t)>& visit) const {
    int total = static_cast<int>(shape_.cells().size());
    if (prefix_len < 0 || prefix_len > total)
        throw std::invalid_argument("for_each_mask_with_prefix: bad prefix length");
    std::uint64_t mask = 0;
    for (int at = 0; at < prefix_len; ++at) {
        int bit = static_cast<int>(prefix >> at & 1);
        mask |= static_cast<std::uint64_t>(bit) << at;
        for (const auto& q : quads_[static_cast<std::size_t>(at)]) {
            int code = static_cast<int>(mask >> q[0] & 1) << 3 | static_cast<int>(mask >> q[1] & 1) << 2 |
                       static_cast<int>(mask >> q[2] & 1) << 1 | bit;
            if (class_mask_ >> code & 1) return;  // no avoiding filling extends this prefix
        }
    }
    search(prefix_len, mask, total, visit);
}

Filling FillingEnumerator::filling_from_mask(std::uint64_t mask) const {
    std::vector<std::uint8_t> bits(shape_.cells().size());
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = static_cast<std::uint8_t>(mask >> i & 1);
    return Filling{shape_, std::move(bits)};
}

bool FillingEnumerator::mask_avoids(std::uint64_t mask) const {
    for (std::size_t i = 0; i < quads_.size(); ++i) {
        int d = static_cast<int>(mask >> i & 1);
        for (const auto& q : quads_[i]) {
            int code = static_cast<int>(mask >> q[0] & 1) << 3 | static_cast<int>(mask >> q[1] & 1) << 2 |
                       static_cast<int>(mask >> q[2] & 1) << 1 | d;
            if (class_mask_ >> code & 1) return false;
        }
    }
    return true;
}

long long FillingEnumerator::count() const {
    long long n = 0;
    for_each_mask([&](std::uint64_t) { ++n; });
    return n;
}

IntPolynomial FillingEnumerator::count_by_ones() const {
    std::vector<BigInt> coeffs(shape_.cells().size() + 1, BigInt{0});
    for_each_mask([&](std::uint64_t mask) { coeffs[static_cast<std::size_t>(__builtin_popcountll(mask))] += 1; });
    return IntPolynomial{std::move(coeffs)};
}

namespace {

void check_enumeration_bound(const Shape& s) {
    if (s.cell_count() > 22)
        throw std::invalid_argument("enumeration bound exceeded: shape has more than 22 cells");
}

}  // namespace

std::vector<Filling> enumerate_fillings(const Shape& s, const PatternClass& pc) {
    check_enumeration_bound(s);
    FillingEnumerator en{s, pc};
    std::vector<Filling> out;
    en.for_each_mask([&](std::uint64_t mask) { out.push_back(en.filling_from_mask(mask)); });
    return out;
}

long long count_avoiding(const Shape& s, const PatternClass& pc) {
    check_enumeration_bound(s);
    return FillingEnumerator{s, pc}.count();
}

IntPolynomial count_by_ones(const Shape& s, const PatternClass& pc) {
    check_enumeration_bound(s);
    return FillingEnumerator{s, pc}.count_by_ones();
}

}  // namespace lediag
