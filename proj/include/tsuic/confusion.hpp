/**
 * @file confusion.hpp
 * @brief Confusion graphs, their block structure, and the single-sender rate.
 *
 * Vertices of a confusion graph are all 2^{tN} message realizations. Two
 * realizations are joined by an edge when some receiver cannot tell them
 * apart given its side information. For two-sender analysis the bit layout
 * groups messages as (b1, b2, b3): messages requested in V(D1) occupy the
 * most significant bits, then V(D2), then V(D3); within a group receivers
 * are ordered by ascending index, the first message most significant.
 */

#ifndef TSUIC_CONFUSION_HPP
#define TSUIC_CONFUSION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tsuic/digraph.hpp"
#include "tsuic/graph.hpp"
#include "tsuic/problem.hpp"
#include "tsuic/rational.hpp"

namespace tsuic {

struct ConfusionGraph {
    int t = 1;
    int n = 0;
    int n1 = 0, n2 = 0, n3 = 0;     ///< group sizes
    std::vector<int> order;         ///< receiver ids, D1 then D2 then D3, ascending
    Graph g;                        ///< adjacency over 2^{tn} vertices

    int bits1() const { return t * n1; }
    int bits2() const { return t * n2; }
    int bits3() const { return t * n3; }
    int vertex_count() const { return 1 << (t * n); }

    uint32_t b1_of(uint32_t v) const { return v >> (bits2() + bits3()); }
    uint32_t b2_of(uint32_t v) const { return (v >> bits3()) & ((1u << bits2()) - 1u); }
    uint32_t b3_of(uint32_t v) const { return v & ((1u << bits3()) - 1u); }
    uint32_t vertex_of(uint32_t b1, uint32_t b2, uint32_t b3) const {
        return (b1 << (bits2() + bits3())) | (b2 << bits3()) | b3;
    }
    /// t-bit field of receiver r (original id) within vertex v.
    uint32_t field_of(uint32_t v, int r) const;
    /// Human-readable label "(b1,b2,b3)" with bitstring components.
    std::string label(uint32_t v) const;
};

/// Identifies a block (fixed b3), a row sub-block (fixed b2, b3), or a
/// column sub-block (fixed b1, b3).
struct BlockRef {
    uint32_t b3 = 0;
    std::optional<uint32_t> row_b2;    ///< set for a row sub-block
    std::optional<uint32_t> column_b1; ///< set for a column sub-block
};

/// True iff u and v are confusable at some receiver of d (t-bit fields).
bool confusable(uint32_t u, uint32_t v, const Digraph& d, int t);

/// Confusion graph of a bare digraph, natural receiver order (r = 0 most significant).
Graph build_confusion(const Digraph& d, int t, int max_tn = 16);

/// Confusion graph with the (b1, b2, b3) grouped layout of a TSUIC instance.
ConfusionGraph build(const Problem& p, const MessagePartition& mp, int max_tn = 16);

/// Vertices of the block/sub-block, ascending vertex index.
std::vector<int> block_vertices(const ConfusionGraph& g, const BlockRef& ref);

enum class EdgeKind { IntraBlock, InterBlock };

/// Inter-block iff the b3 sub-labels differ. Throws if (u, v) is not an edge.
EdgeKind classify_edge(const ConfusionGraph& g, uint32_t u, uint32_t v);

/// beta_t(D) = ceil(log2 chi(Gamma_t(D))) / t. Throws if chi is not exact.
Rational beta_t_ssuic(const Digraph& d, int t, int max_tn = 16);

/// DOT rendering with one cluster per block and "(b1,b2,b3)" vertex labels.
std::string to_dot(const ConfusionGraph& g);

} // namespace tsuic

#endif // TSUIC_CONFUSION_HPP
