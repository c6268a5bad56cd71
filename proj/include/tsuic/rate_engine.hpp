/**
 * @file rate_engine.hpp
 * @brief Rate bounds and exact optimal broadcast rates via case dispatch.
 */

#ifndef TSUIC_RATE_ENGINE_HPP
#define TSUIC_RATE_ENGINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "tsuic/problem.hpp"
#include "tsuic/rational.hpp"

namespace tsuic {

/**
 * @brief Outcome of rate computation at a fixed t, optionally with the
 *        asymptotic (t -> infinity) value when a structural rule supplies it.
 */
struct RateResult {
    Rational lower{0};                 ///< finite-t lower bound
    Rational upper{0};                 ///< finite-t upper bound
    bool exact = false;                ///< lower == upper and proven optimal
    std::string provenance;            ///< rule that produced the value
    std::optional<int> epsilon;        ///< realized rounding slack, when reported
    std::vector<std::string> notes;

    std::optional<Rational> asymptotic;      ///< beta(D, G_o) when derivable
    bool asymptotic_exact = false;
    std::string asymptotic_provenance;

    Rational value() const { return upper; }
};

/// beta_t(D): the single-sender rate of the whole digraph (a lower bound on
/// the two-sender rate).
Rational lower_bound_single(const Problem& p);

/// beta_t(D1) + beta_t(D2): each sender transmits its private part alone.
Rational lower_bound_private_sum(const Problem& p, const MessagePartition& mp);

/**
 * @brief Asymptotic single-sender rate by structural decomposition.
 *
 * Recursively splits V(D) into parts with no or one-way interaction (rates
 * add) or fully-participated two-way interaction (rates take the max),
 * bottoming out at single vertices. Returns std::nullopt when no split
 * applies and the digraph has more than one vertex and is not a clique or
 * acyclic (where closed forms exist).
 */
std::optional<Rational> beta_asymptotic(const Digraph& d);

/// Theorem-style two-part split evaluation; std::nullopt when neither the
/// sum rule nor the max rule applies to the given split.
std::optional<Rational> ssuic_structural_beta(const Digraph& d, uint16_t part_a, uint16_t part_b);

/**
 * @brief Computes the best available rate statement for an instance.
 *
 * Applies the most specific applicable rule: the exact coloring optimum for
 * classes with no interaction out of the common group, the closed-form max
 * and sum formulas for the fully-participated cyclic cases, and otherwise an
 * interval from the generic lower and upper bounds. Never returns exact for
 * partially-participated cyclic patterns outside those scopes.
 */
RateResult dispatch(const Problem& p);

struct ArcCriticality {
    int from = 0, to = 0;       ///< 1-based receiver ids
    bool critical = false;      ///< removal strictly increases the rate
    bool asymptotic_claim = false; ///< per structural rule rather than finite-t
    Rational rate_before{0}, rate_after{0};
};

struct CriticalityReport {
    std::vector<ArcCriticality> arcs;
};

/// Per-arc criticality of the cross-group side-information arcs.
CriticalityReport criticality_report(const Problem& p);

/// JSON rendering of a RateResult per the report schema.
std::string rate_result_to_json(const RateResult& r);

} // namespace tsuic

#endif // TSUIC_RATE_ENGINE_HPP
