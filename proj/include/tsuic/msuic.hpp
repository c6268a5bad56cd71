/**
 * @file msuic.hpp
 * @brief Special multi-sender extension: N' senders with one private pool
 *        each plus a common pool held by all senders.
 */

#ifndef TSUIC_MSUIC_HPP
#define TSUIC_MSUIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsuic/graph.hpp"
#include "tsuic/problem.hpp"
#include "tsuic/rational.hpp"

namespace tsuic {

/**
 * @brief A special multi-sender instance. Sender s holds pools[s - 1] plus
 *        the common pool; pools are disjoint and cover all messages.
 */
struct MsProblem {
    int n = 0;
    int t = 1;
    int n_senders = 0;                    ///< N'
    std::vector<uint16_t> side_info;
    std::vector<uint16_t> pools;          ///< N' private pools then the common pool

    Digraph digraph() const;
    uint16_t common_pool() const { return pools.back(); }
};

/// Parses the extended text format: "(r|...)...; M1={..}; ...; MN={..}; t=n".
/// Sender sets must realize the single-common-pool pattern; throws otherwise.
MsProblem parse_ms_problem(const std::string& text, int max_tn = 16);

/// Vertex groups requesting each pool, ascending ids, common group last.
std::vector<std::vector<int>> ms_groups(const MsProblem& p);

/**
 * @brief Confusion graph with the grouped layout: group 1 most significant,
 *        the common group least significant.
 */
struct MsConfusionGraph {
    int t = 1;
    int n = 0;
    std::vector<int> group_sizes;  ///< N' + 1 entries
    std::vector<int> order;        ///< receivers, group by group
    Graph g;

    int bits(int group) const { return t * group_sizes[static_cast<size_t>(group)]; }
    int vertex_count() const { return 1 << (t * n); }
    /// Sub-label of `group` within vertex v.
    uint32_t sub_label(uint32_t v, int group) const;
};

MsConfusionGraph ms_build(const MsProblem& p, int max_tn = 16);

/// Per-sender maps J_s over (b_s, b_common) pairs.
struct MsColoring {
    std::vector<std::vector<int>> j; ///< j[s][(b_s << bits_common) | b_common]
    std::vector<int> palettes() const;
};

struct MsVerdict {
    bool ok = true;
    std::string reason;
    std::optional<std::pair<uint32_t, uint32_t>> witness_edge;
};

/// Adjacent vertices must receive distinct N'-tuples; confusion confined to
/// one private group forces that sender's color to differ.
MsVerdict ms_validate(const MsProblem& p, const MsConfusionGraph& g, const MsColoring& c);

struct MsMinimizeResult {
    MsColoring coloring;
    std::vector<int> bits;   ///< per-sender codeword lengths
    Rational rate{0};
    bool exact = true;
};

/// Exact minimum of the per-sender bit sum by budget-ascending search.
MsMinimizeResult ms_minimize(const MsProblem& p, const MsConfusionGraph& g, int max_tn = 6);

/// The interaction digraph over the N' + 1 groups.
Digraph ms_interaction_map(const MsProblem& p);

bool ms_is_fully_participated(const MsProblem& p);

/**
 * @brief Product coloring: per-group optimal colorings combined, with the
 *        common group's color factors split across senders to minimize the
 *        bit sum. Requires the common group to have no out-arcs in the
 *        interaction digraph; throws otherwise.
 */
MsColoring ms_structured_coloring(const MsProblem& p, const MsConfusionGraph& g);

Rational ms_coloring_rate(const MsColoring& c, int t);

} // namespace tsuic

#endif // TSUIC_MSUIC_HPP
