#include "lediag/census.hpp"

#include "lediag/bijection.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lediag {

namespace {

std::map<std::vector<int>, IntPolynomial>& f_memo() {
    static std::map<std::vector<int>, IntPolynomial> memo;
    return memo;
}

std::mutex& f_memo_mutex() {
    static std::mutex mu;
    return mu;
}

IntPolynomial f_poly_locked(const Partition& p) {
    if (p.empty()) return IntPolynomial::one();
    auto it = f_memo().find(p.parts());
    if (it != f_memo().end()) return it->second;

    Cell corner{p.rows(), p.part(p.rows())};
    auto removed = corner_removals(p, corner);
    IntPolynomial q = IntPolynomial::monomial(1, 1);
    IntPolynomial value = q * f_poly_locked(removed[0]) + f_poly_locked(removed[1]) + f_poly_locked(removed[2]) -
                          f_poly_locked(removed[3]);
    f_memo().emplace(p.parts(), value);
    return value;
}

}  // namespace

IntPolynomial f_polynomial(const Partition& p) {
    if (p.cell_count() > 40) throw std::invalid_argument("f_polynomial: more than 40 cells");
    std::lock_guard<std::mutex> lock(f_memo_mutex());
    return f_poly_locked(p);
}

IntPolynomial f_polynomial_at_corner(const Partition& p, Cell corner) {
    if (p.cell_count() > 40) throw std::invalid_argument("f_polynomial_at_corner: more than 40 cells");
    auto removed = corner_removals(p, corner);
    std::lock_guard<std::mutex> lock(f_memo_mutex());
    IntPolynomial q = IntPolynomial::monomial(1, 1);
    return q * f_poly_locked(removed[0]) + f_poly_locked(removed[1]) + f_poly_locked(removed[2]) -
           f_poly_locked(removed[3]);
}

EquinumerosityReport equinumerosity_report(const Shape& s) {
    if (s.cell_count() > 18) throw std::invalid_argument("equinumerosity_report: more than 18 cells");
    EquinumerosityReport rep;
    rep.le = count_avoiding(s, PatternClass::le());
    rep.x = count_avoiding(s, PatternClass::x());
    rep.alt = count_avoiding(s, PatternClass::alt());
    if (classify(s).young_english) {
        std::vector<int> parts;
        for (int r = 1; r <= s.max_row(); ++r) parts.push_back(s.row_size(r));
        rep.f_by_recurrence = f_polynomial(Partition{parts});
    }
    return rep;
}

BigInt stirling_first_kind(int n, int k) {
    if (n < 0 || n > 10) throw std::invalid_argument("stirling_first_kind: n out of range");
    if (k < 0 || k > n) return 0;
    if (n == 0) return k == 0 ? 1 : 0;
    return stirling_first_kind(n - 1, k - 1) + BigInt{n - 1} * stirling_first_kind(n - 1, k);
}

std::map<int, BigInt> cycle_count_census(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("cycle_count_census: n out of range");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::map<int, BigInt> out;
    do {
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        int cycles = 0;
        for (int i = 0; i < n; ++i) {
            if (seen[static_cast<std::size_t>(i)]) continue;
            ++cycles;
            for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)])
                seen[static_cast<std::size_t>(j)] = true;
        }
        out[cycles] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

namespace {

void extend_bordered(std::vector<int>& parts, int k, int max_part, std::vector<BorderedShape>& out) {
    if (static_cast<int>(parts.size()) == k) {
        out.push_back(BorderedShape{k, parts});
        return;
    }
    int bound = parts.empty() ? max_part : parts.back();
    // The first part is pinned to max_part so the length statistic is exact.
    int lo = parts.empty() ? max_part : 0;
    for (int next = bound; next >= lo; --next) {
        parts.push_back(next);
        extend_bordered(parts, k, max_part, out);
        parts.pop_back();
    }
}

}  // namespace

std::vector<BorderedShape> bordered_shapes_of_length(int n) {
    if (n < 1) throw std::invalid_argument("bordered_shapes_of_length: n must be positive");
    std::vector<BorderedShape> out;
    for (int k = 1; k <= n; ++k) {
        int width = n - k;
        if (width == 0) {
            out.push_back(BorderedShape{k, std::vector<int>(static_cast<std::size_t>(k), 0)});
            continue;
        }
        std::vector<int> parts;
        extend_bordered(parts, k, width, out);
    }
    return out;
}

BigInt StirlingCensus::total() const {
    BigInt t = 0;
    for (const auto& [k, v] : x_counts) t += v;
    return t;
}

StirlingCensus stirling_census(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("stirling_census: n out of range (1..7)");
    StirlingCensus census;
    census.n = n;
    for (int k = 1; k <= n; ++k) census.stirling[k] = stirling_first_kind(n, k);

    for (const BorderedShape& bs : bordered_shapes_of_length(n)) {
        Shape shape = bs.positive_shape();
        FillingEnumerator en{shape, PatternClass::x()};
        int empty_rows = bs.rows - shape.max_row();
        en.for_each_mask([&](std::uint64_t mask) {
            Filling f = en.filling_from_mask(mask);
            DiagramStats st = statistics(f);
            if (!st.zero_columns.empty()) return;
            int unrestricted = static_cast<int>(st.unrestricted_rows.size()) + empty_rows;
            census.x_counts[unrestricted] += 1;

            Filling image = big_phi2(f);
            DiagramStats ist = statistics(image);
            if (!avoids(image, PatternClass::le()) || !ist.zero_columns.empty()) {
                std::ostringstream msg;
                msg << "shape " << bs.to_string() << ": image of mask " << mask
                    << " is not a zero-column-free LE filling";
                census.mismatches.push_back(msg.str());
                return;
            }
            census.tableau_counts[static_cast<int>(ist.unrestricted_rows.size()) + empty_rows] += 1;
        });

        FillingEnumerator le_en{shape, PatternClass::le()};
        le_en.for_each_mask([&](std::uint64_t mask) {
            Filling f = le_en.filling_from_mask(mask);
            DiagramStats st = statistics(f);
            if (!st.zero_columns.empty()) return;
            census.le_counts[static_cast<int>(st.unrestricted_rows.size()) + empty_rows] += 1;
        });
    }

    for (int k = 1; k <= n; ++k) {
        BigInt want = census.stirling[k];
        auto get = [&](const std::map<int, BigInt>& m) {
            auto it = m.find(k);
            return it == m.end() ? BigInt{0} : it->second;
        };
        if (get(census.x_counts) != want || get(census.tableau_counts) != want || get(census.le_counts) != want) {
            std::ostringstream msg;
            msg << "n=" << n << " k=" << k << ": x=" << get(census.x_counts)
                << " tableau=" << get(census.tableau_counts) << " le=" << get(census.le_counts)
                << " expected c(n,k)=" << want;
            census.mismatches.push_back(msg.str());
        }
    }

    BigInt factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    if (census.total() != factorial) census.mismatches.push_back("row totals do not sum to n!");
    return census;
}

std::map<int, BigInt> stirling_table(int n) {
    StirlingCensus census = stirling_census(n);
    if (!census.ok()) throw std::logic_error("stirling_table: " + census.mismatches.front());
    return census.x_counts;
}

}  // namespace lediag
