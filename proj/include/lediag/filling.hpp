#pragma once

#include "lediag/polynomial.hpp"
#include "lediag/shape.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lediag {

/// 2x2 bit matrix [[a,b],[c,d]], encoded as the 4-bit code a<<3|b<<2|c<<1|d.
/// The digit string "abcd" reads the top row first.
struct Pattern {
    int code = 0;

    static Pattern from_digits(std::string_view digits);
    int a() const { return code >> 3 & 1; }
    int b() const { return code >> 2 & 1; }
    int c() const { return code >> 1 & 1; }
    int d() const { return code & 1; }
    std::string to_string() const;

    friend bool operator==(const Pattern&, const Pattern&) = default;
};

/// A named set of avoided 2x2 patterns.
class PatternClass {
public:
    enum class Id { LE, X, ALT };

    static const PatternClass& le();   // {1110, 0110}
    static const PatternClass& x();    // {1001, 0110}
    static const PatternClass& alt();  // {0111, 1111}
    static const PatternClass& by_name(std::string_view name);  // "le" | "x" | "alt"

    Id id() const { return id_; }
    std::string_view name() const;
    std::vector<Pattern> patterns() const;
    bool contains_code(int code) const { return (mask_ >> code) & 1; }

private:
    PatternClass(Id id, std::uint16_t mask) : id_(id), mask_(mask) {}
    Id id_;
    std::uint16_t mask_;
};

/// A 0/1 filling of a shape. Bits are stored in the row-major cell order of
/// the shape, so equality and hashing are structural.
class Filling {
public:
    Filling() = default;
    Filling(Shape shape, std::vector<std::uint8_t> bits);
    static Filling zeros(Shape shape);

    const Shape& shape() const { return shape_; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    int at(int row, int col) const;  // throws when the cell is absent
    void set(int row, int col, int bit);
    long long ones() const;

    friend bool operator==(const Filling&, const Filling&) = default;

private:
    Shape shape_;
    std::vector<std::uint8_t> bits_;
};

/// Grid text: '0'/'1' for cells, '.' for holes, rows top to bottom.
Filling parse_diagram(const std::string& text);
std::string render_diagram(const Filling& f);

struct Violation {
    int r1 = 0, r2 = 0, c1 = 0, c2 = 0;
    Pattern pattern;
};

/// Lexicographically least (r1, r2, c1, c2) whose full 2x2 submatrix matches
/// an avoided pattern, if any.
std::optional<Violation> find_violation(const Filling& f, const PatternClass& pc);
bool avoids(const Filling& f, const PatternClass& pc);

/// Definition-style check: every 0 has only 0s to its left or only 0s above.
bool is_le_diagram(const Filling& f);

struct DiagramStats {
    std::vector<int> zero_rows;
    std::vector<int> zero_columns;
    std::vector<int> restricted_rows;
    std::vector<int> unrestricted_rows;
    long long ones = 0;
};

/// Row/column statistics over rows 1..max_row and columns 1..max_col.
/// Rows without cells count as zero rows and as unrestricted.
DiagramStats statistics(const Filling& f);

/// All rows but the bottom one avoid the X patterns, and every 0 in the
/// bottom row has no 1 above it or no 1 to its left. Requires an le-complete
/// shape.
bool is_mixed(const Filling& f);

struct XstructConditions {
    bool avoids_patterns = false;        // no 1001 / 0110 submatrix
    bool equal_ones_rows_equal = false;  // in every rectangular submatrix
    bool two_row_nesting = false;        // 1-sets of two-row submatrices nest
    bool max_row_zeros_in_zero_columns = false;
    bool agree() const {
        return avoids_patterns == equal_ones_rows_equal && avoids_patterns == two_row_nesting &&
               avoids_patterns == max_row_zeros_in_zero_columns;
    }
};

/// The four structural characterizations, each evaluated independently over
/// all rectangular submatrices fully contained in the shape.
XstructConditions xstruct_conditions(const Filling& f);

/// Backtracking enumerator over the fillings of a shape that avoid a pattern
/// class. Cells are assigned in row-major order with the 0 branch first, so
/// the stream order is the increasing order of row-major bit masks.
class FillingEnumerator {
public:
    FillingEnumerator(Shape shape, const PatternClass& pc);

    const Shape& shape() const { return shape_; }

    /// Visits each avoiding filling as a bit mask over row-major cell order.
    void for_each_mask(const std::function<void(std::uint64_t)>& visit) const;

    /// Same stream restricted to masks extending the given assignment of the
    /// first prefix_len cells. The streams over all 2^prefix_len prefixes
    /// partition the unsplit stream.
    void for_each_mask_with_prefix(int prefix_len, std::uint64_t prefix,
                                   const std::function<void(std::uint64_t)>& visit) const;

    Filling filling_from_mask(std::uint64_t mask) const;
    bool mask_avoids(std::uint64_t mask) const;

    long long count() const;
    IntPolynomial count_by_ones() const;

private:
    void search(int at, std::uint64_t mask, int fixed, const std::function<void(std::uint64_t)>& visit) const;

    Shape shape_;
    std::uint16_t class_mask_ = 0;
    // For each cell index i (bottom-right corner of a 2x2 submatrix), the
    // index triples (top-left, top-right, bottom-left), all < i.
    std::vector<std::vector<std::array<int, 3>>> quads_;
};

/// Materialized stream; guarded at 22 cells.
std::vector<Filling> enumerate_fillings(const Shape& s, const PatternClass& pc);
long long count_avoiding(const Shape& s, const PatternClass& pc);
/// Sum over avoiding fillings of q^(number of ones).
IntPolynomial count_by_ones(const Shape& s, const PatternClass& pc);

}  // namespace lediag
