#include "tsuic/digraph.hpp"

namespace tsuic {

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> result;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (has_arc(i, j)) result.emplace_back(i, j);
    return result;
}

Digraph Digraph::induced(uint16_t mask) const {
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1u) keep.push_back(i);
    Digraph sub(static_cast<int>(keep.size()));
    for (size_t a = 0; a < keep.size(); ++a)
        for (size_t b = 0; b < keep.size(); ++b)
            if (a != b && has_arc(keep[a], keep[b])) sub.add_arc(static_cast<int>(a), static_cast<int>(b));
    return sub;
}

bool Digraph::acyclic() const {
    // Kahn-style peeling on bitmask adjacency.
    uint16_t alive = static_cast<uint16_t>((n == 16) ? 0xFFFFu : ((1u << n) - 1u));
    bool changed = true;
    while (alive && changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            if (!((alive >> i) & 1u)) continue;
            if ((out[static_cast<size_t>(i)] & alive) == 0) {
                alive = static_cast<uint16_t>(alive & ~(1u << i));
                changed = true;
            }
        }
    }
    return alive == 0;
}

} // namespace tsuic
