#include "lediag/graph.hpp"

#include "lediag/census.hpp"

#include <algorithm>
#include <stdexcept>

namespace lediag {

BipartiteGraph graph_from_shape(const Partition& p, int k, int m) {
    if (!p.fits_box(k, m)) throw std::invalid_argument("graph_from_shape: partition does not fit the box");
    BipartiteGraph g;
    g.row_count = k;
    g.col_count = m;
    for (int i = 1; i <= p.rows(); ++i)
        for (int j = 1; j <= p.part(i); ++j) g.edges.emplace_back(i, j);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

Orientation filling_to_orientation(const Filling& f, int k, int m) {
    ShapeClass cl = classify(f.shape());
    if (!cl.young_english) throw std::invalid_argument("filling_to_orientation: shape must be a Young diagram");
    std::vector<int> parts;
    for (int r = 1; r <= f.shape().max_row(); ++r) parts.push_back(f.shape().row_size(r));
    Partition p{parts};
    if (!p.fits_box(k, m)) throw std::invalid_argument("filling_to_orientation: shape does not fit the box");

    Orientation o;
    o.graph = graph_from_shape(p, k, m);
    o.toward_row.reserve(o.graph.edges.size());
    for (const auto& [i, j] : o.graph.edges) o.toward_row.push_back(static_cast<std::uint8_t>(f.at(i, j)));
    return o;
}

Filling orientation_to_filling(const Orientation& o) {
    std::vector<Cell> cells;
    for (const auto& [i, j] : o.graph.edges) cells.push_back({i, j});
    Shape s{std::move(cells)};
    std::vector<std::uint8_t> bits;
    bits.reserve(o.graph.edges.size());
    // Edges are sorted (row, col), matching the shape's cell order.
    for (std::size_t e = 0; e < o.graph.edges.size(); ++e) bits.push_back(o.toward_row[e]);
    return Filling{std::move(s), std::move(bits)};
}

bool is_acyclic(const Orientation& o) {
    // Vertices: rows are 0..k-1, columns k..k+m-1. DFS three-color check.
    int k = o.graph.row_count, n = k + o.graph.col_count;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (std::size_t e = 0; e < o.graph.edges.size(); ++e) {
        auto [i, j] = o.graph.edges[e];
        int u = i - 1, v = k + j - 1;
        if (o.toward_row[e])
            adj[static_cast<std::size_t>(v)].push_back(u);
        else
            adj[static_cast<std::size_t>(u)].push_back(v);
    }
    std::vector<int> state(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, std::size_t>> stack;
    for (int s = 0; s < n; ++s) {
        if (state[static_cast<std::size_t>(s)]) continue;
        stack.push_back({s, 0});
        state[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            if (next < adj[static_cast<std::size_t>(u)].size()) {
                int v = adj[static_cast<std::size_t>(u)][next++];
                if (state[static_cast<std::size_t>(v)] == 1) return false;
                if (state[static_cast<std::size_t>(v)] == 0) {
                    state[static_cast<std::size_t>(v)] = 1;
                    stack.push_back({v, 0});
                }
            } else {
                state[static_cast<std::size_t>(u)] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

namespace {

// Adjacency-bitmask graph for deletion-contraction. Vertices beyond 64
// never occur at the guarded sizes.
struct MaskGraph {
    std::vector<std::uint64_t> adj;
    std::uint64_t active = 0;
};

int edge_count(const MaskGraph& g, std::uint64_t comp) {
    int n = 0;
    for (int v = 0; v < static_cast<int>(g.adj.size()); ++v)
        if (comp >> v & 1) n += __builtin_popcountll(g.adj[static_cast<std::size_t>(v)] & comp);
    return n / 2;
}

std::uint64_t component_of(const MaskGraph& g, int start) {
    std::uint64_t seen = 1ull << start;
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        std::uint64_t fresh = g.adj[static_cast<std::size_t>(u)] & g.active & ~seen;
        while (fresh) {
            int v = __builtin_ctzll(fresh);
            fresh &= fresh - 1;
            seen |= 1ull << v;
            stack.push_back(v);
        }
    }
    return seen;
}

// t * (t-1)^(v-1)
IntPolynomial tree_chromatic(int v) {
    IntPolynomial t = IntPolynomial::monomial(1, 1);
    IntPolynomial t_minus_1 = t - IntPolynomial::one();
    IntPolynomial out = t;
    for (int i = 1; i < v; ++i) out = out * t_minus_1;
    return out;
}

IntPolynomial chi_connected(MaskGraph g, std::uint64_t comp);

IntPolynomial chi(const MaskGraph& g) {
    IntPolynomial out = IntPolynomial::one();
    std::uint64_t todo = g.active;
    while (todo) {
        int v = __builtin_ctzll(todo);
        std::uint64_t comp = component_of(g, v);
        todo &= ~comp;
        out = out * chi_connected(g, comp);
    }
    return out;
}

IntPolynomial chi_connected(MaskGraph g, std::uint64_t comp) {
    int v = __builtin_popcountll(comp);
    int e = edge_count(g, comp);
    if (e == v - 1) return tree_chromatic(v);  // includes isolated vertices

    int a = -1, b = -1;
    for (int u = 0; u < static_cast<int>(g.adj.size()) && a < 0; ++u) {
        if (!(comp >> u & 1)) continue;
        std::uint64_t nb = g.adj[static_cast<std::size_t>(u)] & comp;
        if (nb) {
            a = u;
            b = __builtin_ctzll(nb);
        }
    }

    MaskGraph deleted = g;
    deleted.adj[static_cast<std::size_t>(a)] &= ~(1ull << b);
    deleted.adj[static_cast<std::size_t>(b)] &= ~(1ull << a);
    deleted.active = comp;

    // Merge b into a; parallel edges coalesce in the bitmask representation.
    MaskGraph contracted = g;
    contracted.active = comp & ~(1ull << b);
    std::uint64_t other = g.adj[static_cast<std::size_t>(b)] & comp & ~(1ull << a);
    contracted.adj[static_cast<std::size_t>(a)] =
        (g.adj[static_cast<std::size_t>(a)] | other) & ~(1ull << a) & ~(1ull << b);
    for (std::uint64_t rest = other; rest;) {
        int u = __builtin_ctzll(rest);
        rest &= rest - 1;
        contracted.adj[static_cast<std::size_t>(u)] |= 1ull << a;
    }

    return chi(deleted) - chi(contracted);
}

MaskGraph mask_graph(const BipartiteGraph& g) {
    int n = g.vertex_count();
    if (n > 64) throw std::invalid_argument("chromatic_polynomial: more than 64 vertices");
    MaskGraph mg;
    mg.adj.assign(static_cast<std::size_t>(n), 0);
    mg.active = n == 64 ? ~0ull : (1ull << n) - 1;
    for (const auto& [i, j] : g.edges) {
        int u = i - 1, v = g.row_count + j - 1;
        mg.adj[static_cast<std::size_t>(u)] |= 1ull << v;
        mg.adj[static_cast<std::size_t>(v)] |= 1ull << u;
    }
    return mg;
}

}  // namespace

IntPolynomial chromatic_polynomial(const BipartiteGraph& g) {
    if (g.edges.size() > 24) throw std::invalid_argument("chromatic_polynomial: more than 24 edges");
    if (g.row_count < 0 || g.col_count < 0) throw std::invalid_argument("chromatic_polynomial: negative vertex count");
    if (g.vertex_count() == 0) return IntPolynomial::one();
    return chi(mask_graph(g));
}

long long count_acyclic_orientations(const BipartiteGraph& g) {
    if (g.edges.size() > 20) throw std::invalid_argument("count_acyclic_orientations: more than 20 edges");
    std::size_t e = g.edges.size();
    long long count = 0;
    Orientation o;
    o.graph = g;
    o.toward_row.assign(e, 0);
    for (std::uint64_t mask = 0; mask < (1ull << e); ++mask) {
        for (std::size_t i = 0; i < e; ++i) o.toward_row[i] = static_cast<std::uint8_t>(mask >> i & 1);
        if (is_acyclic(o)) ++count;
    }

    IntPolynomial chi_g = chromatic_polynomial(g);
    BigInt stanley = chi_g.evaluate(-1);
    if (g.vertex_count() % 2) stanley = -stanley;
    if (stanley != count)
        throw std::logic_error("count_acyclic_orientations: enumeration disagrees with the chromatic value at -1");
    return count;
}

RecurrenceReport chromatic_recurrence_report(const Partition& p, int k, int m) {
    if (p.empty()) throw std::invalid_argument("chromatic_recurrence_report: partition must be nonempty");
    if (!p.fits_box(k, m)) throw std::invalid_argument("chromatic_recurrence_report: partition does not fit the box");
    if (p.cell_count() > 16) throw std::invalid_argument("chromatic_recurrence_report: more than 16 cells");

    // Corner fixed as in the census: bottom-most row, right-most cell.
    Cell corner{p.rows(), p.part(p.rows())};
    auto removed = corner_removals(p, corner);

    auto chi_of = [](const Partition& q, int bk, int bm) {
        return LaurentPolynomial::from(chromatic_polynomial(graph_from_shape(q, bk, bm)));
    };

    RecurrenceReport rep;
    rep.lhs = chi_of(p, k, m);

    rep.rhs_fixed = chi_of(removed[0], k, m) -
                    (chi_of(removed[1], k, m) + chi_of(removed[2], k, m) - chi_of(removed[3], k, m)).shifted(-1);
    rep.fixed_box_holds = rep.rhs_fixed == rep.lhs;

    rep.rhs_shrunk = chi_of(removed[0], k, m) -
                     (chi_of(removed[1], k - 1, m) + chi_of(removed[2], k, m - 1) - chi_of(removed[3], k - 1, m - 1))
                         .shifted(-1);
    rep.shrunk_box_holds = rep.rhs_shrunk == rep.lhs;

    long long ao = count_acyclic_orientations(graph_from_shape(p, k, m));
    rep.bridge_holds = f_polynomial(p).evaluate(1) == ao;
    return rep;
}

bool chromatic_recurrence_check(const Partition& p, int k, int m) {
    RecurrenceReport rep = chromatic_recurrence_report(p, k, m);
    return rep.fixed_box_holds && rep.bridge_holds;
}

}  // namespace lediag
