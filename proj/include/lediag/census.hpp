#pragma once

#include "lediag/filling.hpp"
#include "lediag/polynomial.hpp"
#include "lediag/shape.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lediag {

/// Generating polynomial of the LE-avoiding fillings of the partition's
/// Young diagram, counted by number of 1s. Computed by the corner recurrence
///   F = q F(minus box) + F(minus row) + F(minus column) - F(minus both)
/// at the bottom-most right-most corner, memoized, guarded at 40 cells.
IntPolynomial f_polynomial(const Partition& p);

/// The right side of the recurrence expanded at an arbitrary corner, with
/// memoized subcalls. Equal to f_polynomial(p) for every corner.
IntPolynomial f_polynomial_at_corner(const Partition& p, Cell corner);

struct EquinumerosityReport {
    long long le = 0;
    long long x = 0;
    long long alt = 0;
    std::optional<IntPolynomial> f_by_recurrence;  // Young shapes only
    bool counts_agree() const { return le == x && le == alt; }
    bool recurrence_agrees() const {
        return !f_by_recurrence || f_by_recurrence->evaluate(1) == le;
    }
    bool consistent() const { return counts_agree() && recurrence_agrees(); }
};

/// Brute-force class counts for one shape; guarded at 18 cells.
EquinumerosityReport equinumerosity_report(const Shape& s);

/// Unsigned Stirling number of the first kind, by the recurrence
/// c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k).
BigInt stirling_first_kind(int n, int k);

/// Number of permutations of {1..n} by cycle count, enumerated literally.
/// Oracle for stirling_first_kind; n <= 8.
std::map<int, BigInt> cycle_count_census(int n);

/// All row-bordered shapes of the given length: k >= 1 rows, largest part
/// exactly n - k, weakly decreasing parts, zero rows allowed.
std::vector<BorderedShape> bordered_shapes_of_length(int n);

/// Census of the X-avoiding fillings with no zero column over all bordered
/// shapes of length n, keyed by the number of unrestricted rows (empty rows
/// count as unrestricted). Three independent routes: direct X-side counts,
/// the images of the dual bijection on the LE side, and a direct LE-side
/// enumeration.
struct StirlingCensus {
    int n = 0;
    std::map<int, BigInt> x_counts;
    std::map<int, BigInt> tableau_counts;   // via big_phi2 images
    std::map<int, BigInt> le_counts;        // independent LE enumeration
    std::map<int, BigInt> stirling;         // c(n, k) for k = 1..n
    std::vector<std::string> mismatches;    // offending shapes / keys

    bool ok() const { return mismatches.empty(); }
    BigInt total() const;
};

StirlingCensus stirling_census(int n);

/// The census table; throws when any route disagrees with c(n, k).
std::map<int, BigInt> stirling_table(int n);

}  // namespace lediag
