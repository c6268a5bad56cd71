#include "tsuic/graph.hpp"

#include <algorithm>

namespace tsuic {

size_t Graph::edge_count() const {
    size_t twice = 0;
    for (const auto& row : adj) twice += row.count();
    return twice / 2;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
    Graph sub(static_cast<int>(vertices.size()));
    for (size_t a = 0; a < vertices.size(); ++a)
        for (size_t b = a + 1; b < vertices.size(); ++b)
            if (has_edge(vertices[a], vertices[b])) sub.add_edge(static_cast<int>(a), static_cast<int>(b));
    return sub;
}

namespace {

// Greedy clique from the highest-degree vertex, extended by degree order.
int greedy_clique(const Graph& g) {
    if (g.n == 0) return 0;
    std::vector<int> order(static_cast<size_t>(g.n));
    for (int i = 0; i < g.n; ++i) order[static_cast<size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    int best = 1;
    for (int seed_idx = 0; seed_idx < std::min(g.n, 8); ++seed_idx) {
        std::vector<int> clique{order[static_cast<size_t>(seed_idx)]};
        for (int v : order) {
            bool joins = true;
            for (int u : clique)
                if (u == v || !g.has_edge(u, v)) { joins = false; break; }
            if (joins) clique.push_back(v);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

struct Dsatur {
    const Graph& g;
    std::vector<int> colors;
    std::vector<boost::dynamic_bitset<>> neighbour_colors; // per vertex, colors seen
    std::vector<int> saturation;

    explicit Dsatur(const Graph& g_)
        : g(g_),
          colors(static_cast<size_t>(g_.n), -1),
          neighbour_colors(static_cast<size_t>(g_.n), boost::dynamic_bitset<>(static_cast<size_t>(g_.n) + 1)),
          saturation(static_cast<size_t>(g_.n), 0) {}

    int pick() const {
        int best = -1;
        for (int v = 0; v < g.n; ++v) {
            if (colors[static_cast<size_t>(v)] >= 0) continue;
            if (best < 0) { best = v; continue; }
            size_t bv = static_cast<size_t>(v), bb = static_cast<size_t>(best);
            if (saturation[bv] > saturation[bb] ||
                (saturation[bv] == saturation[bb] && g.degree(v) > g.degree(best)))
                best = v;
        }
        return best;
    }

    void assign(int v, int c) {
        colors[static_cast<size_t>(v)] = c;
        const auto& row = g.adj[static_cast<size_t>(v)];
        for (int u = 0; u < g.n; ++u) {
            if (!row.test(static_cast<size_t>(u))) continue;
            auto& seen = neighbour_colors[static_cast<size_t>(u)];
            if (!seen.test(static_cast<size_t>(c))) {
                seen.set(static_cast<size_t>(c));
                ++saturation[static_cast<size_t>(u)];
            }
        }
    }

    std::vector<int> run(int& used) {
        used = 0;
        for (int step = 0; step < g.n; ++step) {
            int v = pick();
            int c = 0;
            while (neighbour_colors[static_cast<size_t>(v)].test(static_cast<size_t>(c))) ++c;
            assign(v, c);
            used = std::max(used, c + 1);
        }
        return colors;
    }
};

struct BranchBound {
    const Graph& g;
    std::vector<int> order;       // branch order: DSATUR-greedy static order
    std::vector<int> best_colors;
    int best = 0;                 // best complete coloring size found
    std::vector<int> colors;

    BranchBound(const Graph& g_, std::vector<int> order_, std::vector<int> seed, int seed_k)
        : g(g_), order(std::move(order_)), best_colors(std::move(seed)), best(seed_k),
          colors(static_cast<size_t>(g_.n), -1) {}

    void go(size_t depth, int used, int lower) {
        if (used >= best) return;
        if (depth == order.size()) {
            best = used;
            best_colors = colors;
            return;
        }
        int v = order[depth];
        boost::dynamic_bitset<> forbidden(static_cast<size_t>(best) + 1);
        const auto& row = g.adj[static_cast<size_t>(v)];
        for (int u = 0; u < g.n; ++u)
            if (row.test(static_cast<size_t>(u)) && colors[static_cast<size_t>(u)] >= 0)
                forbidden.set(static_cast<size_t>(colors[static_cast<size_t>(u)]));
        int cap = std::min(used + 1, best - 1); // new color only if it stays below best
        for (int c = 0; c < cap; ++c) {
            if (c < static_cast<int>(forbidden.size()) && forbidden.test(static_cast<size_t>(c))) continue;
            int next_used = std::max(used, c + 1);
            if (std::max(next_used, lower) >= best) continue;
            colors[static_cast<size_t>(v)] = c;
            go(depth + 1, next_used, lower);
            colors[static_cast<size_t>(v)] = -1;
            if (best <= lower) return;
        }
    }
};

} // namespace

ChromaticResult chromatic_number(const Graph& g, int vertex_budget) {
    ChromaticResult r;
    if (g.n == 0) {
        r.lower = r.upper = 0;
        r.exact = true;
        return r;
    }
    if (g.edge_count() == 0) {
        r.lower = r.upper = 1;
        r.exact = true;
        r.colors.assign(static_cast<size_t>(g.n), 0);
        return r;
    }
    r.lower = greedy_clique(g);
    Dsatur ds(g);
    int used = 0;
    r.colors = ds.run(used);
    r.upper = used;
    if (g.n > vertex_budget) {
        r.exact = (r.lower == r.upper);
        return r;
    }
    if (r.lower < r.upper) {
        std::vector<int> order(static_cast<size_t>(g.n));
        for (int i = 0; i < g.n; ++i) order[static_cast<size_t>(i)] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        BranchBound bb(g, order, r.colors, r.upper);
        bb.go(0, 0, r.lower);
        r.upper = bb.best;
        r.colors = bb.best_colors;
    }
    r.lower = r.upper; // search completed, bound is tight
    r.exact = true;
    return r;
}

} // namespace tsuic
