/**
 * @file problem.hpp
 * @brief TSUIC problem instances, message partitions, and the interaction taxonomy.
 */

#ifndef TSUIC_PROBLEM_HPP
#define TSUIC_PROBLEM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsuic/digraph.hpp"

namespace tsuic {

/**
 * @brief A two-sender unicast index-coding instance.
 *
 * Receiver r (0-based internally, 1-based in the text format) requests
 * message x_r and knows the messages in side_info[r]. Sender 1 holds the
 * messages in m1, sender 2 those in m2; together they hold everything.
 */
struct Problem {
    int n = 0;                      ///< number of receivers == number of messages
    int t = 1;                      ///< bits per message
    std::vector<uint16_t> side_info; ///< side_info[r] = bitmask of known messages
    uint16_t m1 = 0;                ///< sender 1 message set (bitmask)
    uint16_t m2 = 0;                ///< sender 2 message set (bitmask)

    Digraph digraph() const {
        Digraph d(n);
        for (int r = 0; r < n; ++r) d.out[static_cast<size_t>(r)] = side_info[static_cast<size_t>(r)];
        return d;
    }
};

/// Private/common message sets and the vertex sets of the induced sub-digraphs.
struct MessagePartition {
    uint16_t p1 = 0; ///< m1 \ m2
    uint16_t p2 = 0; ///< m2 \ m1
    uint16_t p3 = 0; ///< m1 & m2
    std::vector<int> d1, d2, d3; ///< vertices (ascending) requesting p1/p2/p3
};

/// Complete bipartite graph between V(D1) and V(D2): pairs no sender holds together.
struct SenderConstraintGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

/**
 * @brief The 3-vertex digraph f(D) describing how D1, D2 and D3 interact.
 *
 * Arcs are stored as a 6-bit mask; bit layout follows kArcPairs.
 */
struct InteractionDigraph {
    uint8_t arcs = 0;

    bool has(int i, int j) const;      ///< arc i -> j present, i, j in {1,2,3}
    void add(int i, int j);
    int out_degree(int v) const;
    int in_degree(int v) const;
    bool is_cyclic() const;
    /// Image under swapping vertices 1 and 2.
    InteractionDigraph swapped() const;
    /// Minimum of arcs and swapped().arcs: the orbit representative.
    uint8_t canonical() const;
};

/// The ordered pairs backing the 6 arc bits, in bit order.
extern const std::pair<int, int> kArcPairs[6];

enum class CaseLabel { I, IIA, IIB, IIC, IID };

std::string case_label_name(CaseLabel c);

/// One of the 36 canonical interaction classes.
struct InteractionClass {
    uint8_t canonical_arcs = 0;
    int class_id = 0;                 ///< 1..36, stable internal numbering
    CaseLabel case_label = CaseLabel::I;
    std::optional<std::string> paper_label; ///< "H_7" etc. where known
    bool paper_label_inferred = false;      ///< label deduced rather than anchored
};

// -- operations ------------------------------------------------------------

/**
 * @brief Parses the textual problem format.
 *
 * Format: "(1|2,3),(2|1),(3|); M1={1,3}; M2={2,3}; t=1". Whitespace is
 * ignored; t defaults to 1. Throws std::invalid_argument on malformed input,
 * out-of-range indices, r in H_r, a message held by no sender, t < 1, or
 * (unless @p max_tn is raised) t*n > max_tn.
 */
Problem parse_problem(const std::string& text, int max_tn = 16);

/// Serializes a Problem back into the textual format parse_problem accepts.
std::string to_text(const Problem& p);

MessagePartition partition(const Problem& p);

SenderConstraintGraph sender_constraint_graph(const Problem& p, const MessagePartition& mp);

/// Arc (i, j) iff some receiver in V(D_i) knows some message requested in V(D_j).
InteractionDigraph interaction_map(const Problem& p, const MessagePartition& mp);

/// True iff every arc (i, j) of f(D) has V(D_j) inside N+(r) for every r in V(D_i).
bool is_fully_participated(const Problem& p, const MessagePartition& mp);

/// All 36 canonical classes in class_id order; counts are 14/3/3/12/4.
std::vector<InteractionClass> enumerate_classes();

InteractionClass classify(const InteractionDigraph& h);

} // namespace tsuic

#endif // TSUIC_PROBLEM_HPP
