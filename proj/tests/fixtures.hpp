// Shared worked instances used across the test suite.

#ifndef TSUIC_TESTS_FIXTURES_HPP
#define TSUIC_TESTS_FIXTURES_HPP

#include <string>

namespace fixtures {

// 3 receivers, one private message per sender plus one common message.
inline const std::string kExample1 = "(1|2),(2|1),(3|1); M1={1,3}; M2={2,3}; t=1";

// 5 receivers, acyclic interaction between the three groups.
inline const std::string kFig5 =
    "(1|),(2|1,4,5),(3|1,2,4,5),(4|1,5),(5|1,4); M1={1,2,3}; M2={1,4,5}";

// 4 receivers, both private groups interact two-way with the common group.
inline const std::string kFig6 = "(1|3,4),(2|3,4),(3|1,2,4),(4|1,2); M1={1,3,4}; M2={2,3,4}";

// 5 receivers, one private group in a two-way interaction with the common group.
inline const std::string kFig7 =
    "(1|2,4,5),(2|4,5),(3|1,2),(4|1,2,5),(5|1,2,4); M1={1,2,4,5}; M2={3,4,5}";

// 4 receivers, the private groups interact only with each other.
inline const std::string kFig8 = "(1|2),(2|1),(3|4),(4|3); M1={1,3,4}; M2={2,3,4}";

// Example 1 with the arc (3,1) removed.
inline const std::string kExample1NoArc31 = "(1|2),(2|1),(3|); M1={1,3}; M2={2,3}; t=1";

// Three senders, one private message each plus two common messages.
inline const std::string kFig9 =
    "(1|2,3),(2|1,3),(3|1,2),(4|5),(5|4); M1={1,4,5}; M2={2,4,5}; M3={3,4,5}; t=1";

} // namespace fixtures

#endif // TSUIC_TESTS_FIXTURES_HPP
