/**
 * @file graph.hpp
 * @brief Dense undirected graphs and an exact chromatic-number solver.
 */

#ifndef TSUIC_GRAPH_HPP
#define TSUIC_GRAPH_HPP

#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace tsuic {

struct Graph {
    int n = 0;
    std::vector<boost::dynamic_bitset<>> adj;

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(static_cast<size_t>(n_), boost::dynamic_bitset<>(static_cast<size_t>(n_))) {}

    void add_edge(int u, int v) {
        adj[static_cast<size_t>(u)].set(static_cast<size_t>(v));
        adj[static_cast<size_t>(v)].set(static_cast<size_t>(u));
    }
    bool has_edge(int u, int v) const { return adj[static_cast<size_t>(u)].test(static_cast<size_t>(v)); }
    size_t degree(int u) const { return adj[static_cast<size_t>(u)].count(); }
    size_t edge_count() const;

    /// Subgraph induced by the listed vertices (in the given order).
    Graph induced(const std::vector<int>& vertices) const;
};

struct ChromaticResult {
    int lower = 0;            ///< best known lower bound
    int upper = 0;            ///< best known upper bound (a proper coloring exists)
    bool exact = false;       ///< lower == upper and the search completed
    std::vector<int> colors;  ///< a proper coloring with `upper` colors
    int chi() const { return upper; }
};

/**
 * @brief Exact chromatic number by branch and bound.
 *
 * A greedy clique gives the lower bound, DSATUR the upper bound, and a
 * DSATUR-ordered branch and bound closes the gap. Vertex order is
 * deterministic so results are reproducible. Graphs larger than
 * @p vertex_budget are not solved exactly; the greedy bounds are returned
 * with exact = false.
 */
ChromaticResult chromatic_number(const Graph& g, int vertex_budget = 4096);

} // namespace tsuic

#endif // TSUIC_GRAPH_HPP
