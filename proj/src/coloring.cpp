#include "tsuic/coloring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tsuic {

namespace {

int distinct(const std::vector<int>& xs) {
    std::set<int> s(xs.begin(), xs.end());
    return static_cast<int>(s.size());
}

} // namespace

int TwoSenderColoring::palette1() const { return distinct(j1); }
int TwoSenderColoring::palette2() const { return distinct(j2); }

int TwoSenderColoring::used_pairs(const ConfusionGraph& g) const {
    std::set<std::pair<int, int>> pairs;
    for (int v = 0; v < g.vertex_count(); ++v) {
        uint32_t uv = static_cast<uint32_t>(v);
        size_t a = (static_cast<size_t>(g.b1_of(uv)) << g.bits3()) | g.b3_of(uv);
        size_t b = (static_cast<size_t>(g.b2_of(uv)) << g.bits3()) | g.b3_of(uv);
        pairs.emplace(j1[a], j2[b]);
    }
    return static_cast<int>(pairs.size());
}

ColoringCost coloring_cost(const TwoSenderColoring& c, int t) {
    ColoringCost cost;
    cost.bits1 = ceil_log2(std::max(1, c.palette1()));
    cost.bits2 = ceil_log2(std::max(1, c.palette2()));
    cost.rate = Rational(cost.bits1 + cost.bits2, t);
    return cost;
}

std::pair<long long, int> ceil_sum_epsilon(const Rational& a, const Rational& b) {
    long long total = ceil_rational(a + b);
    int eps = static_cast<int>(total - ceil_rational(a) - ceil_rational(b));
    return {total, eps};
}

namespace {

size_t idx1_of(const ConfusionGraph& g, uint32_t v) {
    return (static_cast<size_t>(g.b1_of(v)) << g.bits3()) | g.b3_of(v);
}

size_t idx2_of(const ConfusionGraph& g, uint32_t v) {
    return (static_cast<size_t>(g.b2_of(v)) << g.bits3()) | g.b3_of(v);
}

bool confused_at_group(const Problem& p, const ConfusionGraph& g,
                       uint32_t u, uint32_t v, const std::vector<int>& group) {
    for (int r : group) {
        if (g.field_of(u, r) == g.field_of(v, r)) continue;
        bool agrees = true;
        for (int m = 0; m < p.n; ++m) {
            if (!((p.side_info[static_cast<size_t>(r)] >> m) & 1u)) continue;
            if (g.field_of(u, m) != g.field_of(v, m)) { agrees = false; break; }
        }
        if (agrees) return true;
    }
    return false;
}

} // namespace

ColoringVerdict validate(const Problem& p, const ConfusionGraph& g, const TwoSenderColoring& c) {
    ColoringVerdict verdict;
    size_t s1 = static_cast<size_t>(1) << (g.bits1() + g.bits3());
    size_t s2 = static_cast<size_t>(1) << (g.bits2() + g.bits3());
    if (c.j1.size() != s1 || c.j2.size() != s2) {
        verdict.ok = false;
        verdict.reason = "coloring maps are not total over the label domains";
        return verdict;
    }
    for (int x : c.j1)
        if (x < 0) { verdict.ok = false; verdict.reason = "unassigned J1 entry"; return verdict; }
    for (int x : c.j2)
        if (x < 0) { verdict.ok = false; verdict.reason = "unassigned J2 entry"; return verdict; }

    MessagePartition mp = partition(p);
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (!g.g.has_edge(u, v)) continue;
            uint32_t uu = static_cast<uint32_t>(u), vv = static_cast<uint32_t>(v);
            bool d1 = c.j1[idx1_of(g, uu)] != c.j1[idx1_of(g, vv)];
            bool d2 = c.j2[idx2_of(g, uu)] != c.j2[idx2_of(g, vv)];
            if (!d1 && !d2) {
                verdict.ok = false;
                verdict.reason = "adjacent vertices share the ordered color pair";
                verdict.witness_edge = {uu, vv};
                return verdict;
            }
            // Same-block edges confusable at a private-group receiver pin the
            // corresponding coordinate, not just the pair.
            if (g.b3_of(uu) == g.b3_of(vv)) {
                if (confused_at_group(p, g, uu, vv, mp.d1) && !d1) {
                    verdict.ok = false;
                    verdict.reason = "sender-1 colors must differ for this confusion";
                    verdict.witness_edge = {uu, vv};
                    return verdict;
                }
                if (confused_at_group(p, g, uu, vv, mp.d2) && !d2) {
                    verdict.ok = false;
                    verdict.reason = "sender-2 colors must differ for this confusion";
                    verdict.witness_edge = {uu, vv};
                    return verdict;
                }
            }
        }
    }
    return verdict;
}

namespace {

struct Constraint {
    size_t a1, b1; ///< J1 indices of the endpoints
    size_t a2, b2; ///< J2 indices of the endpoints
};

struct PairSearch {
    size_t s1, s2;
    int k1, k2;
    std::vector<Constraint> cons;
    // constraints grouped by the highest-numbered J2 index they touch
    std::vector<std::vector<const Constraint*>> by_j2;
    std::vector<int> j1, j2;

    bool solve_j2(size_t pos) {
        if (pos == s2) return true;
        int used = 0;
        for (size_t q = 0; q < pos; ++q) used = std::max(used, j2[q] + 1);
        int cap = std::min(k2, used + 1);
        for (int color = 0; color < cap; ++color) {
            j2[pos] = color;
            bool ok = true;
            for (const Constraint* c : by_j2[pos]) {
                if (j1[c->a1] != j1[c->b1]) continue;
                size_t other = c->a2 == pos ? c->b2 : c->a2;
                if (j2[other] == color) { ok = false; break; }
            }
            if (ok && solve_j2(pos + 1)) return true;
        }
        j2[pos] = -1;
        return false;
    }

    bool solve_j1(size_t pos) {
        if (pos == s1) return solve_j2(0);
        int used = 0;
        for (size_t q = 0; q < pos; ++q) used = std::max(used, j1[q] + 1);
        int cap = std::min(k1, used + 1);
        for (int color = 0; color < cap; ++color) {
            j1[pos] = color;
            bool ok = true;
            for (const Constraint& c : cons) {
                // J1-binary constraints (same J2 index) checkable once both ends set
                if (c.a2 != c.b2) continue;
                size_t hi = std::max(c.a1, c.b1);
                if (hi != pos) continue;
                if (j1[c.a1] == j1[c.b1]) { ok = false; break; }
            }
            if (ok && solve_j1(pos + 1)) return true;
        }
        j1[pos] = -1;
        return false;
    }
};

} // namespace

MinimizeResult minimize(const Problem& p, const ConfusionGraph& g, int max_tn) {
    MinimizeResult result;
    result.coloring.bits1_dom = g.bits1() + g.bits3();
    result.coloring.bits2_dom = g.bits2() + g.bits3();
    size_t s1 = static_cast<size_t>(1) << (g.bits1() + g.bits3());
    size_t s2 = static_cast<size_t>(1) << (g.bits2() + g.bits3());

    if (p.t * p.n > max_tn) {
        // Over budget: fall back to the trivial injective coloring.
        result.coloring.j1.resize(s1);
        result.coloring.j2.resize(s2);
        for (size_t i = 0; i < s1; ++i) result.coloring.j1[i] = static_cast<int>(i);
        for (size_t i = 0; i < s2; ++i)
            result.coloring.j2[i] = static_cast<int>(i >> g.bits3()); // b2 alone
        result.cost = coloring_cost(result.coloring, p.t);
        result.exact = false;
        return result;
    }

    std::set<std::tuple<size_t, size_t, size_t, size_t>> seen;
    std::vector<Constraint> cons;
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (!g.g.has_edge(u, v)) continue;
            uint32_t uu = static_cast<uint32_t>(u), vv = static_cast<uint32_t>(v);
            Constraint c{idx1_of(g, uu), idx1_of(g, vv), idx2_of(g, uu), idx2_of(g, vv)};
            if (c.a1 > c.b1) { std::swap(c.a1, c.b1); std::swap(c.a2, c.b2); }
            if (c.a1 == c.b1 && c.a2 > c.b2) std::swap(c.a2, c.b2);
            auto key = std::make_tuple(c.a1, c.b1, c.a2, c.b2);
            if (seen.insert(key).second) cons.push_back(c);
        }
    }

    int total_bits = g.bits1() + g.bits2() + g.bits3();
    for (int budget = 0; budget <= total_bits; ++budget) {
        for (int bits1 = 0; bits1 <= budget; ++bits1) {
            int bits2 = budget - bits1;
            PairSearch search;
            search.s1 = s1;
            search.s2 = s2;
            search.k1 = 1 << bits1;
            search.k2 = 1 << bits2;
            search.cons = cons;
            search.by_j2.assign(s2, {});
            // Constraints with distinct J2 indices are resolved during the J2
            // phase; for those with equal J1 indices the j1-equality guard in
            // solve_j2 fires unconditionally, making them plain J2 constraints.
            for (const Constraint& c : search.cons)
                if (!(c.a2 == c.b2)) search.by_j2[std::max(c.a2, c.b2)].push_back(&c);
            search.j1.assign(s1, -1);
            search.j2.assign(s2, -1);
            if (search.solve_j1(0)) {
                result.coloring.j1 = search.j1;
                result.coloring.j2 = search.j2;
                result.cost = coloring_cost(result.coloring, p.t);
                result.exact = true;
                return result;
            }
        }
    }
    throw std::logic_error("unreachable: the injective coloring is always feasible");
}

TwoSenderColoring structured_product_coloring(const Problem& p, const MessagePartition& mp,
                                              const ConfusionGraph& g) {
    InteractionDigraph h = interaction_map(p, mp);
    if (h.is_cyclic() && h.out_degree(3) > 0)
        throw std::invalid_argument(
            "structured coloring requires an acyclic interaction pattern or one "
            "with no interaction out of the common group");

    Digraph d = p.digraph();
    auto chi_of = [&](uint16_t mask) {
        Digraph sub = d.induced(mask);
        Graph conf = build_confusion(sub, p.t);
        ChromaticResult cr = chromatic_number(conf);
        if (!cr.exact) throw std::runtime_error("chromatic number not resolved exactly");
        return cr;
    };
    ChromaticResult c1 = chi_of(mp.p1);
    ChromaticResult c2 = chi_of(mp.p2);
    ChromaticResult c3 = chi_of(mp.p3);
    int chi1 = std::max(1, c1.chi()), chi2 = std::max(1, c2.chi()), chi3 = std::max(1, c3.chi());

    // Best factor split a*b >= chi3 of the block colors across the senders.
    int best_a = 1, best_b = chi3, best_bits = ceil_log2(chi1) + ceil_log2(static_cast<long long>(chi2) * chi3);
    for (int a = 1; a <= chi3; ++a) {
        int b = (chi3 + a - 1) / a;
        int bits = ceil_log2(static_cast<long long>(chi1) * a) + ceil_log2(static_cast<long long>(chi2) * b);
        if (bits < best_bits) {
            best_bits = bits;
            best_a = a;
            best_b = b;
        }
    }

    TwoSenderColoring out;
    out.bits1_dom = g.bits1() + g.bits3();
    out.bits2_dom = g.bits2() + g.bits3();
    out.j1.assign(static_cast<size_t>(1) << out.bits1_dom, 0);
    out.j2.assign(static_cast<size_t>(1) << out.bits2_dom, 0);
    auto color3 = [&](uint32_t b3) { return c3.colors.empty() ? 0 : c3.colors[b3]; };
    for (uint32_t b1 = 0; b1 < (1u << g.bits1()); ++b1) {
        int base = c1.colors.empty() ? 0 : c1.colors[b1];
        for (uint32_t b3 = 0; b3 < (1u << g.bits3()); ++b3)
            out.j1[(static_cast<size_t>(b1) << g.bits3()) | b3] = base * best_a + color3(b3) % best_a;
    }
    for (uint32_t b2 = 0; b2 < (1u << g.bits2()); ++b2) {
        int base = c2.colors.empty() ? 0 : c2.colors[b2];
        for (uint32_t b3 = 0; b3 < (1u << g.bits3()); ++b3)
            out.j2[(static_cast<size_t>(b2) << g.bits3()) | b3] = base * best_b + color3(b3) / best_a;
    }
    return out;
}

} // namespace tsuic
