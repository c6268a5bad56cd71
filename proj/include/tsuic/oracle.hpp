/**
 * @file oracle.hpp
 * @brief Ground-truth optimal rates by exhaustive encoder search.
 *
 * The oracle enumerates encoder tables directly from the problem definition.
 * It deliberately shares no search machinery with the coloring optimizer so
 * the two paths validate each other.
 */

#ifndef TSUIC_ORACLE_HPP
#define TSUIC_ORACLE_HPP

#include <functional>
#include <string>
#include <vector>

#include "tsuic/problem.hpp"
#include "tsuic/rational.hpp"

namespace tsuic {

struct OracleBudget {
    int max_tn = 5; ///< cap on t * N
};

/// Exact beta_t by ascending total codeword length, testing feasibility via
/// backtracking over the two encoder tables. Throws when over budget.
Rational brute_force_beta_t(const Problem& p, const OracleBudget& budget = {});

/// Exact single-sender beta_t by the same style of encoder search.
Rational brute_force_beta_t_ssuic(const Digraph& d, int t, const OracleBudget& budget = {});

struct SweepFailure {
    std::string instance; ///< reproducer in the problem text format
    std::string expected;
    std::string got;
};

struct SweepReport {
    int total = 0;
    int passed = 0;
    std::vector<SweepFailure> failures;

    bool all_passed() const { return passed == total; }
};

/// Runs `check` on every instance; a check returns std::nullopt on pass or a
/// failure description.
using SweepCheck = std::function<std::optional<SweepFailure>(const Problem&)>;
SweepReport sweep(const std::vector<Problem>& family, const SweepCheck& check);

/**
 * @brief The canonical small-instance family: every one of the 36 interaction
 *        classes realized fully participated with n1 = n2 = n3 = 1, t = 1,
 *        crossed with all internal side-information patterns of the
 *        sub-digraphs (single-vertex sub-digraphs have none, so this is the
 *        36-class family), plus size variants (2,1,1) and (1,1,2) where the
 *        two-vertex group ranges over its internal arc patterns.
 */
std::vector<Problem> family_fp36();

/// All fully-participated instances of one class at the given group sizes.
std::vector<Problem> family_for_class(uint8_t canonical_arcs, int n1, int n2, int n3);

/// Built-in checks for the CLI sweep surface.
SweepCheck check_dispatch_vs_oracle();
SweepCheck check_minimize_vs_oracle();
SweepCheck check_roundtrip();

} // namespace tsuic

#endif // TSUIC_ORACLE_HPP
