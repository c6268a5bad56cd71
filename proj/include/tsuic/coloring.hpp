/**
 * @file coloring.hpp
 * @brief Two-sender graph coloring: validation, optimal search, and the
 *        structured block-product construction.
 *
 * A two-sender coloring assigns each vertex (b1, b2, b3) the ordered pair
 * (J1(b1, b3), J2(b2, b3)); it is proper when adjacent vertices receive
 * distinct pairs. The cost charges ceil(log2 |palette|) bits per sender.
 */

#ifndef TSUIC_COLORING_HPP
#define TSUIC_COLORING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsuic/confusion.hpp"
#include "tsuic/rational.hpp"

namespace tsuic {

struct TwoSenderColoring {
    int bits1_dom = 0; ///< J1 domain is 2^{t(n1+n3)} label pairs
    int bits2_dom = 0; ///< J2 domain is 2^{t(n2+n3)} label pairs
    std::vector<int> j1; ///< j1[(b1 << t*n3) | b3] = color id
    std::vector<int> j2; ///< j2[(b2 << t*n3) | b3] = color id

    int palette1() const; ///< number of distinct J1 colors
    int palette2() const;
    /// Distinct ordered pairs actually used on the vertices of g.
    int used_pairs(const ConfusionGraph& g) const;
};

struct ColoringCost {
    int bits1 = 0;
    int bits2 = 0;
    Rational rate{0};
};

struct ColoringVerdict {
    bool ok = true;
    std::string reason;
    std::optional<std::pair<uint32_t, uint32_t>> witness_edge;
};

/**
 * @brief Checks properness of the induced pair coloring.
 *
 * Also enforces the per-edge necessary conditions: an edge whose endpoints
 * differ only in b1 needs distinct J1 colors (J2 agrees by construction),
 * symmetrically for b2; an edge confusable both at a V(D1) receiver and a
 * V(D2) receiver needs both coordinates to differ.
 */
ColoringVerdict validate(const Problem& p, const ConfusionGraph& g, const TwoSenderColoring& c);

struct MinimizeResult {
    TwoSenderColoring coloring;
    ColoringCost cost;
    bool exact = true;
};

/**
 * @brief Optimal two-sender coloring by exhaustive search over bit budgets.
 *
 * Iterates total bits B = bits1 + bits2 ascending, then each split, testing
 * feasibility by backtracking over the two label maps in vertex order with
 * first-use symmetry breaking. Deterministic; throws std::invalid_argument
 * when t*N exceeds @p max_tn.
 */
MinimizeResult minimize(const Problem& p, const ConfusionGraph& g, int max_tn = 8);

/**
 * @brief The proof's block-product coloring.
 *
 * Colors each block with the product of optimal colorings of Gamma_t(D1) and
 * Gamma_t(D2) and distinguishes blocks by an optimal coloring of
 * Gamma_t(D3), whose chi(Gamma_t(D3)) block colors are split into a factor
 * pair (a, b) handed to the two senders so that the bit sum is minimized.
 * Requires f(D) acyclic or with out-degree(3) = 0 (the scope in which the
 * construction is within epsilon of optimal); throws otherwise.
 */
TwoSenderColoring structured_product_coloring(const Problem& p, const MessagePartition& mp,
                                              const ConfusionGraph& g);

ColoringCost coloring_cost(const TwoSenderColoring& c, int t);

/// Returns (ceil(a+b), epsilon') with epsilon' = ceil(a+b) - ceil(a) - ceil(b) in {-1, 0}.
std::pair<long long, int> ceil_sum_epsilon(const Rational& a, const Rational& b);

} // namespace tsuic

#endif // TSUIC_COLORING_HPP
