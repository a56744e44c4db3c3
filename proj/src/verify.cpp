#include "lediag/verify.hpp"

#include "lediag/bijection.hpp"
#include "lediag/census.hpp"
#include "lediag/filling.hpp"
#include "lediag/graph.hpp"
#include "lediag/polynomial.hpp"
#include "lediag/shape.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>

namespace lediag::verify {

namespace {

std::uint64_t mask_of(const Filling& f) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < f.bits().size(); ++i) mask |= static_cast<std::uint64_t>(f.bits()[i]) << i;
    return mask;
}

std::string shape_tag(const Shape& s) {
    std::string grid = render_shape(s);
    std::replace(grid.begin(), grid.end(), '\n', '/');
    return grid.empty() ? "(empty)" : grid;
}

std::string mask_tag(const Shape& s, std::uint64_t mask) {
    std::vector<std::uint8_t> bits(s.cells().size());
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = static_cast<std::uint8_t>(mask >> i & 1);
    std::string grid = render_diagram(Filling{s, std::move(bits)});
    std::replace(grid.begin(), grid.end(), '\n', '/');
    return grid.empty() ? "(empty)" : grid;
}

/// Every sweep shape: the Young diagrams up to the cell bound followed by
/// the connected le-complete shapes in the box.
std::vector<Shape> sweep_shapes(int max_cells, int box_rows, int box_cols) {
    std::vector<Shape> shapes;
    for (const Partition& p : partitions_up_to(max_cells)) shapes.push_back(p.young_shape());
    if (box_rows > 0 && box_cols > 0)
        for (Shape& s : enumerate_le_complete(box_rows, box_cols)) shapes.push_back(std::move(s));
    return shapes;
}

}  // namespace

Failures check_shape_classification(int max_cells) {
    Failures out;
    for (const Partition& p : partitions_up_to(max_cells)) {
        ShapeClass english = classify(p.young_shape());
        if (!english.young_english || !english.le_complete) {
            out.push_back("partition " + p.to_string() + ": English Young diagram misclassified");
            return out;
        }
        ShapeClass french = classify(p.young_shape_french());
        if (!french.young_french || !french.le_complete) {
            out.push_back("partition " + p.to_string() + ": French Young diagram misclassified");
            return out;
        }
    }
    return out;
}

Failures check_shape_roundtrip(int box_rows, int box_cols) {
    Failures out;
    for (const Shape& s : enumerate_le_complete(box_rows, box_cols)) {
        if (parse_shape(render_shape(s)) != s) {
            out.push_back("shape " + shape_tag(s) + ": parse(render) round trip failed");
            return out;
        }
    }
    return out;
}

Failures check_bottom_anchored(int box_rows, int box_cols) {
    Failures out;
    for (const Shape& s : enumerate_le_complete(box_rows, box_cols)) {
        Shape sub = bottom_anchored_subshape(s);
        ShapeClass cl = classify(sub);
        if (!cl.le_complete || !cl.columns_meet_bottom) {
            out.push_back("shape " + shape_tag(s) + ": bottom-anchored subshape lost its structure");
            return out;
        }
        if (classify(s).columns_meet_bottom && sub != s) {
            out.push_back("shape " + shape_tag(s) + ": bottom-anchored subshape is not a fixpoint");
            return out;
        }
    }
    return out;
}

Failures check_rectangle_bands(int box_rows, int box_cols) {
    Failures out;
    for (const Shape& s : enumerate_le_complete(box_rows, box_cols)) {
        Shape sub = bottom_anchored_subshape(s);
        RectangleDecomposition rd = rectangle_decomposition(sub);
        for (int c : rd.columns) {
            int band = rd.band_of_column(c);
            if (band == 0) {
                out.push_back("shape " + shape_tag(sub) + ": column " + std::to_string(c) + " not in any band");
                return out;
            }
            if (sub.rows_in_col(c) != rd.bands[static_cast<std::size_t>(band - 1)].rows) {
                out.push_back("shape " + shape_tag(sub) + ": column " + std::to_string(c) +
                              " does not match its band's row set");
                return out;
            }
        }
        int prev = 0;
        for (const auto& band : rd.bands) {
            if (band.low_col != prev || band.anchor_col <= prev) {
                out.push_back("shape " + shape_tag(sub) + ": bands do not partition the columns");
                return out;
            }
            prev = band.anchor_col;
        }
    }
    return out;
}

Failures check_row_permutation_lemma(int box_rows, int box_cols) {
    Failures out;
    for (const Shape& s : enumerate_connected_shapes(box_rows, box_cols)) {
        if (!classify(s).columns_meet_bottom) continue;
        // Obtainable from a French Young diagram by permuting the rows above
        // the bottom one: every row is a prefix of columns and the bottom row
        // is a longest row.
        bool obtainable = true;
        int max_len = 0, bottom_len = 0;
        for (int r = 1; r <= s.max_row(); ++r) {
            auto cols = s.cols_in_row(r);
            bool prefix = !cols.empty() && cols.back() == static_cast<int>(cols.size());
            obtainable &= prefix;
            max_len = std::max(max_len, static_cast<int>(cols.size()));
            if (r == s.max_row()) bottom_len = static_cast<int>(cols.size());
        }
        obtainable &= bottom_len == max_len;
        if (obtainable) {
            // Constructive direction: sorting rows by length gives a French
            // Young diagram.
            std::vector<int> lengths;
            for (int r = 1; r <= s.max_row(); ++r) lengths.push_back(s.row_size(r));
            std::sort(lengths.begin(), lengths.end());
            std::vector<Cell> cells;
            for (std::size_t i = 0; i < lengths.size(); ++i)
                for (int c = 1; c <= lengths[i]; ++c) cells.push_back({static_cast<int>(i) + 1, c});
            obtainable = classify(Shape{std::move(cells)}).young_french;
        }
        if (is_le_complete(s) != obtainable) {
            out.push_back("shape " + shape_tag(s) + ": le-completeness disagrees with the row-permutation form");
            return out;
        }
    }
    return out;
}

Failures check_le_definition_equivalence(int max_cells, int box_rows, int box_cols) {
    Failures out;
    for (const Shape& s : sweep_shapes(max_cells, box_rows, box_cols)) {
        int n = s.cell_count();
        if (n > 20) continue;
        FillingEnumerator le_en{s, PatternClass::le()};
        // Per-cell masks of same-row-left and same-column-above cells.
        std::vector<std::uint64_t> left(static_cast<std::size_t>(n), 0), above(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            const Cell& ci = s.cells()[static_cast<std::size_t>(i)];
            for (int j = 0; j < n; ++j) {
                const Cell& cj = s.cells()[static_cast<std::size_t>(j)];
                if (cj.row == ci.row && cj.col < ci.col) left[static_cast<std::size_t>(i)] |= 1ull << j;
                if (cj.col == ci.col && cj.row < ci.row) above[static_cast<std::size_t>(i)] |= 1ull << j;
            }
        }
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
            bool verbal = true;
            for (int i = 0; i < n && verbal; ++i)
                if (!(mask >> i & 1) && (mask & left[static_cast<std::size_t>(i)]) &&
                    (mask & above[static_cast<std::size_t>(i)]))
                    verbal = false;
            if (verbal != le_en.mask_avoids(mask)) {
                out.push_back("shape " + shape_tag(s) + ", filling " + mask_tag(s, mask) +
                              ": definition and pattern check disagree");
                return out;
            }
        }
    }
    return out;
}

Failures check_xstruct_lemma(int rect_max) {
    Failures out;
    for (int a = 1; a <= rect_max; ++a)
        for (int b = 1; b <= rect_max; ++b) {
            Shape rect = Partition{std::vector<int>(static_cast<std::size_t>(a), b)}.young_shape();
            int n = a * b;
            FillingEnumerator en{rect, PatternClass::x()};
            for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
                XstructConditions xc = xstruct_conditions(en.filling_from_mask(mask));
                if (!xc.agree()) {
                    out.push_back("rectangle " + std::to_string(a) + "x" + std::to_string(b) + ", filling " +
                                  mask_tag(rect, mask) + ": the four conditions disagree");
                    return out;
                }
            }
        }
    return out;
}

Failures check_row_closure(int rect_max) {
    Failures out;
    for (int a = 2; a <= rect_max; ++a)
        for (int b = 1; b <= rect_max; ++b) {
            Shape rect = Partition{std::vector<int>(static_cast<std::size_t>(a), b)}.young_shape();
            int n = a * b;
            FillingEnumerator en{rect, PatternClass::x()};
            auto row_of = [&](std::uint64_t mask, int r) {
                return static_cast<std::uint32_t>(mask >> (r * b)) & ((1u << b) - 1);
            };
            auto mask_from_rows = [&](const std::vector<std::uint32_t>& rows) {
                std::uint64_t m = 0;
                for (std::size_t r = 0; r < rows.size(); ++r) m |= static_cast<std::uint64_t>(rows[r]) << (r * b);
                return m;
            };
            // Same-distinct-rows classes must agree on X-ness.
            std::map<std::vector<std::uint32_t>, std::pair<bool, std::uint64_t>> seen_class;
            for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
                bool is_x = en.mask_avoids(mask);
                std::vector<std::uint32_t> rows(static_cast<std::size_t>(a));
                for (int r = 0; r < a; ++r) rows[static_cast<std::size_t>(r)] = row_of(mask, r);

                if (is_x) {
                    // Row permutations preserve X-ness.
                    std::vector<std::uint32_t> sorted = rows;
                    std::sort(sorted.begin(), sorted.end());
                    do {
                        if (!en.mask_avoids(mask_from_rows(sorted))) {
                            out.push_back("rectangle " + std::to_string(a) + "x" + std::to_string(b) + ", filling " +
                                          mask_tag(rect, mask) + ": row permutation broke the X property");
                            return out;
                        }
                    } while (std::next_permutation(sorted.begin(), sorted.end()));
                    // Replacing a row with a copy of another row preserves X-ness.
                    for (int i = 0; i < a; ++i)
                        for (int j = 0; j < a; ++j) {
                            std::vector<std::uint32_t> copied = rows;
                            copied[static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(j)];
                            if (!en.mask_avoids(mask_from_rows(copied))) {
                                out.push_back("rectangle " + std::to_string(a) + "x" + std::to_string(b) +
                                              ", filling " + mask_tag(rect, mask) + ": row copy broke the X property");
                                return out;
                            }
                        }
                }

                std::vector<std::uint32_t> key = rows;
                std::sort(key.begin(), key.end());
                key.erase(std::unique(key.begin(), key.end()), key.end());
                auto [it, inserted] = seen_class.emplace(std::move(key), std::make_pair(is_x, mask));
                if (!inserted && it->second.first != is_x) {
                    out.push_back("rectangle " + std::to_string(a) + "x" + std::to_string(b) + ": fillings " +
                                  mask_tag(rect, it->second.second) + " and " + mask_tag(rect, mask) +
                                  " share their distinct rows but disagree on X-ness");
                    return out;
                }
            }
        }
    return out;
}

Failures check_column_append(int rect_max) {
    Failures out;
    for (int a = 1; a <= rect_max; ++a)
        for (int b = 1; b <= rect_max; ++b) {
            Shape rect = Partition{std::vector<int>(static_cast<std::size_t>(a), b)}.young_shape();
            Shape wider = Partition{std::vector<int>(static_cast<std::size_t>(a), b + 1)}.young_shape();
            FillingEnumerator en{rect, PatternClass::x()};
            FillingEnumerator wide_en{wider, PatternClass::x()};
            bool failed = false;
            en.for_each_mask([&](std::uint64_t mask) {
                if (failed) return;
                for (int bit = 0; bit <= 1; ++bit) {
                    std::uint64_t wide = 0;
                    for (int r = 0; r < a; ++r) {
                        std::uint64_t row = (mask >> (r * b)) & ((1ull << b) - 1);
                        row |= static_cast<std::uint64_t>(bit) << b;
                        wide |= row << (r * (b + 1));
                    }
                    if (!wide_en.mask_avoids(wide)) {
                        out.push_back("rectangle " + std::to_string(a) + "x" + std::to_string(b) + ", filling " +
                                      mask_tag(rect, mask) + ": appending an all-" + std::to_string(bit) +
                                      " column broke the X property");
                        failed = true;
                        return;
                    }
                }
            });
            if (failed) return out;
        }
    return out;
}

Failures check_equinumerosity(int max_cells, int box_rows, int box_cols) {
    Failures out;
    for (const Shape& s : sweep_shapes(max_cells, box_rows, box_cols)) {
        if (s.cell_count() > 18) continue;
        EquinumerosityReport rep = equinumerosity_report(s);
        if (!rep.consistent()) {
            std::ostringstream msg;
            msg << "shape " << shape_tag(s) << ": counts le=" << rep.le << " x=" << rep.x << " alt=" << rep.alt;
            if (rep.f_by_recurrence) msg << " recurrence(1)=" << rep.f_by_recurrence->evaluate(1);
            out.push_back(msg.str());
            return out;
        }
    }
    return out;
}

namespace {

Failures run_bijection_suite(int max_cells, int box_rows, int box_cols, bool dual) {
    Failures out;
    for (const Shape& s : sweep_shapes(max_cells, box_rows, box_cols)) {
        FillingEnumerator x_en{s, PatternClass::x()};
        FillingEnumerator le_en{s, PatternClass::le()};

        std::vector<std::uint64_t> le_masks;
        le_en.for_each_mask([&](std::uint64_t m) { le_masks.push_back(m); });

        std::vector<std::uint64_t> images;
        bool failed = false;
        x_en.for_each_mask([&](std::uint64_t mask) {
            if (failed) return;
            Filling f = x_en.filling_from_mask(mask);
            Filling img = dual ? big_phi2(f) : big_phi(f);
            std::uint64_t imask = mask_of(img);
            images.push_back(imask);
            if (!le_en.mask_avoids(imask)) {
                out.push_back("shape " + shape_tag(s) + ", filling " + mask_tag(s, mask) +
                              ": image is not an LE filling");
                failed = true;
                return;
            }
            DiagramStats before = statistics(f), after = statistics(img);
            bool preserved = dual ? (before.zero_columns == after.zero_columns &&
                                     before.restricted_rows == after.restricted_rows)
                                  : (before.zero_columns == after.zero_columns &&
                                     before.zero_rows == after.zero_rows);
            if (!preserved) {
                out.push_back("shape " + shape_tag(s) + ", filling " + mask_tag(s, mask) +
                              ": preserved statistics changed across the map");
                failed = true;
                return;
            }
            Filling back = dual ? big_phi2_inv(img) : big_phi_inv(img);
            if (mask_of(back) != mask) {
                out.push_back("shape " + shape_tag(s) + ", filling " + mask_tag(s, mask) +
                              ": inverse does not return the original");
                failed = true;
            }
        });
        if (failed) return out;

        std::sort(images.begin(), images.end());
        if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
            out.push_back("shape " + shape_tag(s) + ": map is not injective");
            return out;
        }
        std::sort(le_masks.begin(), le_masks.end());
        if (images != le_masks) {
            out.push_back("shape " + shape_tag(s) + ": image set differs from the LE fillings");
            return out;
        }
    }
    return out;
}

}  // namespace

Failures check_bijection_suite(int max_cells, int box_rows, int box_cols) {
    return run_bijection_suite(max_cells, box_rows, box_cols, false);
}

Failures check_dual_bijection_suite(int max_cells, int box_rows, int box_cols) {
    return run_bijection_suite(max_cells, box_rows, box_cols, true);
}

Failures check_mixed_intermediate(int max_cells, int box_rows, int box_cols) {
    Failures out;
    for (const Shape& s : sweep_shapes(max_cells, box_rows, box_cols)) {
        int n = s.cell_count();
        if (n > 16) continue;
        FillingEnumerator x_en{s, PatternClass::x()};

        std::vector<std::uint64_t> mixed_masks;
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask)
            if (is_mixed(x_en.filling_from_mask(mask))) mixed_masks.push_back(mask);

        std::vector<std::uint64_t> images;
        bool failed = false;
        x_en.for_each_mask([&](std::uint64_t mask) {
            if (failed) return;
            Filling f = x_en.filling_from_mask(mask);
            Filling u = phi(f);
            std::uint64_t umask = mask_of(u);
            images.push_back(umask);
            if (!is_mixed(u)) {
                out.push_back("shape " + shape_tag(s) + ", filling " + mask_tag(s, mask) +
                              ": phi image is not mixed");
                failed = true;
                return;
            }
            if (mask_of(phi_inv(u)) != mask) {
                out.push_back("shape " + shape_tag(s) + ", filling " + mask_tag(s, mask) +
                              ": phi_inv(phi) is not the identity");
                failed = true;
                return;
            }
            // Pivot recovery: the pivot column of f is the leftmost
            // bottom-row 1 of the image.
            PivotReport rep = pivot_column(f);
            if (rep.column) {
                int leftmost = 0;
                for (int c : u.shape().cols_in_row(u.shape().max_row()))
                    if (u.at(u.shape().max_row(), c)) {
                        leftmost = c;
                        break;
                    }
                if (leftmost != *rep.column) {
                    out.push_back("shape " + shape_tag(s) + ", filling " + mask_tag(s, mask) +
                                  ": pivot is not recoverable from the image");
                    failed = true;
                }
            }
        });
        if (failed) return out;

        std::sort(images.begin(), images.end());
        if (images != mixed_masks) {
            out.push_back("shape " + shape_tag(s) + ": phi images differ from the mixed diagrams");
            return out;
        }
        for (std::uint64_t umask : mixed_masks) {
            Filling u = x_en.filling_from_mask(umask);
            if (mask_of(phi(phi_inv(u))) != umask) {
                out.push_back("shape " + shape_tag(s) + ", mixed filling " + mask_tag(s, umask) +
                              ": phi(phi_inv) is not the identity");
                return out;
            }
        }
    }
    return out;
}

Failures check_stalactite_invariance(int max_cells) {
    Failures out;
    auto stalactite_shape = [](const std::vector<int>& heights) {
        std::vector<Cell> cells;
        for (std::size_t c = 0; c < heights.size(); ++c)
            for (int r = 1; r <= heights[c]; ++r) cells.push_back({r, static_cast<int>(c) + 1});
        return Shape{std::move(cells)};
    };
    for (const Partition& p : partitions_up_to(max_cells)) {
        if (p.empty()) continue;
        std::vector<int> heights = p.parts();
        Shape ref_shape = stalactite_shape(heights);
        if (!classify(ref_shape).stalactite) {
            out.push_back("partition " + p.to_string() + ": column stack is not a stalactite");
            return out;
        }
        long long ref_x = count_avoiding(ref_shape, PatternClass::x());
        long long ref_le = count_avoiding(ref_shape, PatternClass::le());
        std::sort(heights.begin(), heights.end());
        do {
            Shape s = stalactite_shape(heights);
            if (count_avoiding(s, PatternClass::x()) != ref_x || count_avoiding(s, PatternClass::le()) != ref_le) {
                std::ostringstream msg;
                msg << "heights (";
                for (std::size_t i = 0; i < heights.size(); ++i) msg << (i ? "," : "") << heights[i];
                msg << "): counts depend on the column order";
                out.push_back(msg.str());
                return out;
            }
        } while (std::next_permutation(heights.begin(), heights.end()));
    }
    return out;
}

Failures check_graph_equivalence(int max_cells) {
    Failures out;
    for (const Partition& p : partitions_up_to(max_cells)) {
        if (p.empty()) continue;
        Shape s = p.young_shape();
        int k = p.rows(), m = p.part(1);
        int n = s.cell_count();
        FillingEnumerator x_en{s, PatternClass::x()};

        // Edge endpoints in a k + m vertex space, one edge per cell.
        int verts = k + m;
        std::vector<std::pair<int, int>> ends;
        for (const Cell& c : s.cells()) ends.emplace_back(c.row - 1, k + c.col - 1);
        std::vector<std::vector<std::pair<int, int>>> incident(static_cast<std::size_t>(verts));
        for (int e = 0; e < n; ++e) {
            incident[static_cast<std::size_t>(ends[static_cast<std::size_t>(e)].first)].push_back({e, 0});
            incident[static_cast<std::size_t>(ends[static_cast<std::size_t>(e)].second)].push_back({e, 1});
        }
        std::vector<int> indeg(static_cast<std::size_t>(verts));
        std::vector<int> queue(static_cast<std::size_t>(verts));

        auto acyclic_mask = [&](std::uint64_t mask) {
            std::fill(indeg.begin(), indeg.end(), 0);
            for (int e = 0; e < n; ++e) {
                int head = (mask >> e & 1) ? ends[static_cast<std::size_t>(e)].first
                                           : ends[static_cast<std::size_t>(e)].second;
                ++indeg[static_cast<std::size_t>(head)];
            }
            int head_at = 0, tail = 0;
            for (int v = 0; v < verts; ++v)
                if (!indeg[static_cast<std::size_t>(v)]) queue[static_cast<std::size_t>(tail++)] = v;
            while (head_at < tail) {
                int v = queue[static_cast<std::size_t>(head_at++)];
                for (auto [e, side] : incident[static_cast<std::size_t>(v)]) {
                    bool outgoing = (mask >> e & 1) ? side == 1 : side == 0;
                    if (!outgoing) continue;
                    int to = (mask >> e & 1) ? ends[static_cast<std::size_t>(e)].first
                                             : ends[static_cast<std::size_t>(e)].second;
                    if (--indeg[static_cast<std::size_t>(to)] == 0) queue[static_cast<std::size_t>(tail++)] = to;
                }
            }
            return tail == verts;
        };

        long long x_count = 0;
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
            bool avoids_x = x_en.mask_avoids(mask);
            if (avoids_x) ++x_count;
            if (avoids_x != acyclic_mask(mask)) {
                out.push_back("partition " + p.to_string() + ", filling " + mask_tag(s, mask) +
                              ": pattern avoidance and acyclicity disagree");
                return out;
            }
        }

        BipartiteGraph g = graph_from_shape(p, k, m);
        long long ao = count_acyclic_orientations(g);  // asserts the chromatic value internally
        BigInt f1 = f_polynomial(p).evaluate(1);
        if (ao != x_count || f1 != x_count) {
            std::ostringstream msg;
            msg << "partition " << p.to_string() << ": x=" << x_count << " ao=" << ao << " F(1)=" << f1;
            out.push_back(msg.str());
            return out;
        }
    }
    return out;
}

Failures check_isolated_vertex(int max_cells) {
    Failures out;
    IntPolynomial t = IntPolynomial::monomial(1, 1);
    for (const Partition& p : partitions_up_to(std::min(max_cells, 10))) {
        int k = std::max(p.rows(), 1), m = p.empty() ? 1 : p.part(1);
        BipartiteGraph g = graph_from_shape(p, k, m);
        BipartiteGraph bigger = graph_from_shape(p, k + 1, m);
        if (chromatic_polynomial(bigger) != t * chromatic_polynomial(g)) {
            out.push_back("partition " + p.to_string() + ": isolated vertex does not contribute a factor t");
            return out;
        }
        if (count_acyclic_orientations(bigger) != count_acyclic_orientations(g)) {
            out.push_back("partition " + p.to_string() + ": isolated vertex changed the orientation count");
            return out;
        }
    }
    return out;
}

Failures check_chromatic_recurrence(int max_cells) {
    Failures out;
    for (const Partition& p : partitions_up_to(max_cells)) {
        if (p.empty()) continue;
        RecurrenceReport rep = chromatic_recurrence_report(p, p.rows(), p.part(1));
        if (!rep.fixed_box_holds) {
            out.push_back("partition " + p.to_string() + ": fixed-box recurrence fails");
            return out;
        }
        if (!rep.bridge_holds) {
            out.push_back("partition " + p.to_string() + ": F(1) differs from the orientation count");
            return out;
        }
    }
    return out;
}

std::string shrunk_convention_summary(int max_cells) {
    for (const Partition& p : partitions_up_to(max_cells)) {
        if (p.empty()) continue;
        RecurrenceReport rep = chromatic_recurrence_report(p, p.rows(), p.part(1));
        if (!rep.shrunk_box_holds)
            return "shrunk-box convention fails first at partition (" + p.to_string() + "): lhs " +
                   rep.lhs.to_string() + " vs rhs " + rep.rhs_shrunk.to_string();
    }
    return "shrunk-box convention holds on every partition tested";
}

Failures check_f_recurrence_vs_bruteforce(int max_cells) {
    Failures out;
    if (f_polynomial(Partition{}) != IntPolynomial::one()) {
        out.push_back("empty partition: F is not 1");
        return out;
    }
    if (f_polynomial(Partition{{1}}) != IntPolynomial{{1, 1}}) {
        out.push_back("partition (1): F is not 1 + q");
        return out;
    }
    for (const Partition& p : partitions_up_to(max_cells)) {
        if (f_polynomial(p) != count_by_ones(p.young_shape(), PatternClass::le())) {
            out.push_back("partition " + p.to_string() + ": recurrence differs from brute force");
            return out;
        }
    }
    return out;
}

Failures check_corner_independence(int max_cells) {
    Failures out;
    for (const Partition& p : partitions_up_to(max_cells)) {
        auto corners = p.corners();
        if (corners.size() < 2) continue;
        IntPolynomial reference = f_polynomial(p);
        for (const Cell& corner : corners) {
            if (f_polynomial_at_corner(p, corner) != reference) {
                out.push_back("partition " + p.to_string() + ": corner (" + std::to_string(corner.row) + "," +
                              std::to_string(corner.col) + ") yields a different polynomial");
                return out;
            }
        }
    }
    return out;
}

Failures check_stirling(int max_n) {
    Failures out;
    for (int n = 1; n <= max_n; ++n) {
        StirlingCensus census = stirling_census(n);
        if (!census.ok()) {
            out.push_back("n=" + std::to_string(n) + ": " + census.mismatches.front());
            return out;
        }
        if (n <= 7) {
            auto cycles = cycle_count_census(n);
            for (int k = 1; k <= n; ++k)
                if (cycles[k] != stirling_first_kind(n, k)) {
                    out.push_back("n=" + std::to_string(n) +
                                  ": recurrence and cycle census disagree at k=" + std::to_string(k));
                    return out;
                }
        }
    }
    return out;
}

std::vector<NamedCheck> all_checks(const Options& opt) {
    std::vector<NamedCheck> checks;
    auto add = [&](std::string name, std::function<Failures()> fn) {
        checks.push_back({std::move(name), std::move(fn)});
    };
    add("shape-classification", [=] { return check_shape_classification(opt.max_cells); });
    add("shape-roundtrip", [=] { return check_shape_roundtrip(opt.box_rows, opt.box_cols); });
    add("bottom-anchored", [=] { return check_bottom_anchored(opt.box_rows, opt.box_cols); });
    add("rectangle-bands", [=] { return check_rectangle_bands(opt.box_rows, opt.box_cols); });
    add("row-permutation-lemma", [=] { return check_row_permutation_lemma(opt.box_rows, opt.box_cols); });
    add("le-definition-equivalence",
        [=] { return check_le_definition_equivalence(opt.mixed_max_cells, opt.box_rows, opt.box_cols); });
    add("xstruct-lemma", [=] { return check_xstruct_lemma(opt.rect_max); });
    add("row-closure", [=] { return check_row_closure(opt.rect_max); });
    add("column-append", [=] { return check_column_append(opt.rect_max); });
    add("equinumerosity", [=] { return check_equinumerosity(opt.max_cells, opt.box_rows, opt.box_cols); });
    add("bijection-suite", [=] { return check_bijection_suite(opt.max_cells, opt.box_rows, opt.box_cols); });
    add("dual-bijection-suite",
        [=] { return check_dual_bijection_suite(opt.max_cells, opt.box_rows, opt.box_cols); });
    add("mixed-intermediate",
        [=] { return check_mixed_intermediate(opt.mixed_max_cells, std::min(opt.box_rows, 3), std::min(opt.box_cols, 3)); });
    add("stalactite-invariance", [=] { return check_stalactite_invariance(opt.stalactite_max_cells); });
    add("graph-equivalence", [=] { return check_graph_equivalence(opt.graph_max_cells); });
    add("isolated-vertex", [=] { return check_isolated_vertex(opt.graph_max_cells); });
    add("chromatic-recurrence", [=] { return check_chromatic_recurrence(opt.recurrence_max_cells); });
    add("f-recurrence-vs-bruteforce", [=] { return check_f_recurrence_vs_bruteforce(opt.max_cells); });
    add("corner-independence", [=] { return check_corner_independence(opt.corner_max_cells); });
    add("stirling", [=] { return check_stirling(opt.stirling_max); });
    return checks;
}

Failures run_all(const Options& opt) {
    Failures out;
    for (const NamedCheck& check : all_checks(opt)) {
        for (const std::string& line : check.run()) out.push_back(check.name + ": " + line);
    }
    return out;
}

}  // namespace lediag::verify
