/**
 * @file digraph.hpp
 * @brief Small directed graphs stored as adjacency bitmasks (up to 16 vertices).
 *
 * Vertices are 0-based internally. A side-information digraph has an arc
 * (i, j) when receiver i knows message x_j.
 */

#ifndef TSUIC_DIGRAPH_HPP
#define TSUIC_DIGRAPH_HPP

#include <cstdint>
#include <vector>

namespace tsuic {

struct Digraph {
    int n = 0;
    std::vector<uint16_t> out; ///< out[i] = bitmask of out-neighbours of i

    Digraph() = default;
    explicit Digraph(int n_) : n(n_), out(static_cast<size_t>(n_), 0) {}

    bool has_arc(int i, int j) const { return (out[static_cast<size_t>(i)] >> j) & 1u; }
    void add_arc(int i, int j) { out[static_cast<size_t>(i)] |= static_cast<uint16_t>(1u << j); }
    void remove_arc(int i, int j) { out[static_cast<size_t>(i)] &= static_cast<uint16_t>(~(1u << j)); }

    /// All arcs as ordered pairs, lexicographic.
    std::vector<std::pair<int, int>> arcs() const;

    /**
     * @brief Sub-digraph induced by the vertices in @p mask.
     *
     * Vertices keep their relative order (ascending original index); the
     * result is relabeled 0..k-1.
     */
    Digraph induced(uint16_t mask) const;

    /// True when the digraph has no directed cycle.
    bool acyclic() const;
};

} // namespace tsuic

#endif // TSUIC_DIGRAPH_HPP
