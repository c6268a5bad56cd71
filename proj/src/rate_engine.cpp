#include "tsuic/rate_engine.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

#include "tsuic/coloring.hpp"
#include "tsuic/confusion.hpp"
#include "tsuic/oracle.hpp"

namespace tsuic {

Rational lower_bound_single(const Problem& p) { return beta_t_ssuic(p.digraph(), p.t); }

Rational lower_bound_private_sum(const Problem& p, const MessagePartition& mp) {
    Digraph d = p.digraph();
    return beta_t_ssuic(d.induced(mp.p1), p.t) + beta_t_ssuic(d.induced(mp.p2), p.t);
}

namespace {

int popcount16(uint16_t m) {
    int c = 0;
    while (m) { c += m & 1u; m = static_cast<uint16_t>(m >> 1); }
    return c;
}

struct AsymptoticSolver {
    const Digraph& d;
    std::map<uint16_t, std::optional<Rational>> memo;

    bool arcs_between(uint16_t from, uint16_t to) const {
        for (int u = 0; u < d.n; ++u)
            if (((from >> u) & 1u) && (d.out[static_cast<size_t>(u)] & to)) return true;
        return false;
    }

    bool knows_all(uint16_t from, uint16_t to) const {
        for (int u = 0; u < d.n; ++u)
            if (((from >> u) & 1u) && (d.out[static_cast<size_t>(u)] & to) != to) return false;
        return true;
    }

    std::optional<Rational> solve(uint16_t mask) {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::optional<Rational> result;
        int k = popcount16(mask);
        if (k == 0) {
            result = Rational(0);
        } else if (k == 1) {
            result = Rational(1);
        } else if (d.induced(mask).acyclic()) {
            result = Rational(k);
        } else {
            uint16_t low = static_cast<uint16_t>(mask & (~mask + 1u));
            for (uint16_t a = mask; a; a = static_cast<uint16_t>((a - 1) & mask)) {
                if (!(a & low) || a == mask) continue; // fix the lowest vertex in part a
                uint16_t b = static_cast<uint16_t>(mask & ~a);
                bool ab = arcs_between(a, b), ba = arcs_between(b, a);
                std::optional<Rational> rule;
                if (!ab || !ba) {
                    auto va = solve(a), vb = solve(b);
                    if (va && vb) rule = *va + *vb;
                } else if (knows_all(a, b) && knows_all(b, a)) {
                    auto va = solve(a), vb = solve(b);
                    if (va && vb) rule = std::max(*va, *vb);
                }
                if (rule) { result = rule; break; }
            }
        }
        memo[mask] = result;
        return result;
    }
};

} // namespace

std::optional<Rational> beta_asymptotic(const Digraph& d) {
    if (d.n > 12) return std::nullopt;
    uint16_t all = static_cast<uint16_t>(d.n == 16 ? 0xFFFFu : ((1u << d.n) - 1u));
    AsymptoticSolver solver{d, {}};
    return solver.solve(all);
}

std::optional<Rational> ssuic_structural_beta(const Digraph& d, uint16_t part_a, uint16_t part_b) {
    uint16_t all = static_cast<uint16_t>(d.n == 16 ? 0xFFFFu : ((1u << d.n) - 1u));
    if ((part_a & part_b) || (part_a | part_b) != all)
        throw std::invalid_argument("split must partition the vertex set");
    AsymptoticSolver solver{d, {}};
    bool ab = solver.arcs_between(part_a, part_b), ba = solver.arcs_between(part_b, part_a);
    auto va = solver.solve(part_a), vb = solver.solve(part_b);
    if (!va || !vb) return std::nullopt;
    if (!ab || !ba) return *va + *vb;
    if (solver.knows_all(part_a, part_b) && solver.knows_all(part_b, part_a))
        return std::max(*va, *vb);
    return std::nullopt;
}

namespace {

std::string rational_note(const char* name, const Rational& v) {
    return std::string(name) + " = " + to_string(v);
}

} // namespace

RateResult dispatch(const Problem& p) {
    MessagePartition mp = partition(p);
    InteractionDigraph h = interaction_map(p, mp);
    InteractionClass cls = classify(h);
    bool fully = is_fully_participated(p, mp);

    Digraph d = p.digraph();
    Rational b1 = beta_t_ssuic(d.induced(mp.p1), p.t);
    Rational b2 = beta_t_ssuic(d.induced(mp.p2), p.t);
    Rational b3 = beta_t_ssuic(d.induced(mp.p3), p.t);
    Rational sum = b1 + b2 + b3;
    Rational lower = std::max(lower_bound_single(p), b1 + b2);

    RateResult r;
    r.notes.push_back("class " + std::to_string(cls.class_id) +
                      (cls.paper_label ? " (" + *cls.paper_label + ")" : "") +
                      ", case " + case_label_name(cls.case_label) +
                      (fully ? ", fully participated" : ", partially participated"));
    r.notes.push_back(rational_note("beta_t(D1)", b1));
    r.notes.push_back(rational_note("beta_t(D2)", b2));
    r.notes.push_back(rational_note("beta_t(D3)", b3));

    // Asymptotic per-group rates, where the structural rules resolve them.
    auto a1 = beta_asymptotic(d.induced(mp.p1));
    auto a2 = beta_asymptotic(d.induced(mp.p2));
    auto a3 = beta_asymptotic(d.induced(mp.p3));
    bool have_async = a1 && a2 && a3;

    bool no_common_out = h.out_degree(3) == 0;
    if (no_common_out) {
        // The structured coloring is within a bounded slack of the sub-rate
        // sum here, and the exact optimum is reachable by direct search.
        if (p.t * p.n <= 8) {
            ConfusionGraph g = build(p, mp);
            MinimizeResult m = minimize(p, g);
            r.lower = r.upper = m.cost.rate;
            r.exact = true;
            r.provenance = "two-sender coloring optimum";
            Rational eps = (m.cost.rate - sum) * p.t;
            r.epsilon = static_cast<int>(eps.numerator() / eps.denominator());
        } else {
            r.lower = lower;
            r.upper = sum;
            r.exact = (r.lower == r.upper);
            r.provenance = "bounds";
            r.notes.push_back("instance too large for the exact coloring search");
        }
        if (have_async) {
            r.asymptotic = *a1 + *a2 + *a3;
            r.asymptotic_exact = true;
            r.asymptotic_provenance = "sub-rate sum";
        }
        return r;
    }

    if (cls.case_label == CaseLabel::I) {
        // Acyclic interaction with arcs out of the common group: the sum is
        // optimal asymptotically; at finite t only bounds are available.
        r.lower = lower;
        r.upper = sum;
        r.exact = (r.lower == r.upper);
        r.provenance = r.exact ? "bounds" : "sub-rate sum upper bound";
        if (have_async) {
            r.asymptotic = *a1 + *a2 + *a3;
            r.asymptotic_exact = true;
            r.asymptotic_provenance = "sub-rate sum";
        }
        return r;
    }

    if (!fully) {
        r.lower = lower;
        r.upper = sum;
        r.exact = (r.lower == r.upper);
        r.provenance = r.exact ? "bounds" : "generic bounds";
        r.notes.push_back("partially participated cyclic interaction: optimum unknown in general");
        return r;
    }

    switch (cls.case_label) {
        case CaseLabel::IIB: {
            r.lower = r.upper = std::max(b3, b1 + b2);
            r.exact = true;
            r.provenance = "max of common rate and private-sum rate";
            if (have_async) {
                r.asymptotic = std::max(*a3, *a1 + *a2);
                r.asymptotic_exact = true;
                r.asymptotic_provenance = "max of common rate and private-sum rate";
            }
            break;
        }
        case CaseLabel::IIC: {
            bool cycle_with_one = h.has(1, 3) && h.has(3, 1);
            Rational bc = cycle_with_one ? b1 : b2;   // the private group in the 2-cycle
            Rational bo = cycle_with_one ? b2 : b1;   // the other private group
            if (bc >= b3) {
                r.lower = r.upper = b1 + b2;
                r.exact = true;
                r.provenance = "private-sum rate";
                r.notes.push_back("cycling private rate dominates the common rate");
            } else {
                r.lower = lower;
                r.upper = bo + std::max(bc, b3);
                r.exact = (r.lower == r.upper);
                r.provenance = r.exact ? "bounds" : "other-private plus max upper bound";
            }
            if (have_async) {
                Rational ac = cycle_with_one ? *a1 : *a2;
                Rational ao = cycle_with_one ? *a2 : *a1;
                r.asymptotic = ao + std::max(ac, *a3);
                r.asymptotic_exact = true;
                r.asymptotic_provenance = "other-private plus max of cycling pair";
            }
            break;
        }
        case CaseLabel::IID: {
            Rational mn = std::min(b1, b2);
            if (b3 <= mn) {
                r.lower = r.upper = b1 + b2;
                r.exact = true;
                r.provenance = "private-sum rate";
                r.notes.push_back("common rate below both private rates");
            } else {
                r.lower = lower;
                r.upper = std::max(b1, b3) + std::max(b2, b3);
                r.exact = (r.lower == r.upper);
                r.provenance = r.exact ? "bounds" : "per-sender max upper bound";
            }
            if (have_async) {
                Rational amn = std::min(*a1, *a2), amx = std::max(*a1, *a2);
                if (*a3 <= amn) {
                    r.asymptotic = *a1 + *a2;
                    r.asymptotic_exact = true;
                    r.asymptotic_provenance = "private-sum rate";
                } else if (h.in_degree(3) == 0 && *a3 <= amx) {
                    r.asymptotic = *a3 + amx;
                    r.asymptotic_exact = true;
                    r.asymptotic_provenance = "common plus max private rate";
                }
            }
            break;
        }
        default:
            r.lower = lower;
            r.upper = sum;
            r.exact = (r.lower == r.upper);
            r.provenance = "generic bounds";
            break;
    }
    return r;
}

CriticalityReport criticality_report(const Problem& p) {
    MessagePartition mp = partition(p);
    InteractionDigraph h = interaction_map(p, mp);
    bool slack_scope = !h.is_cyclic() || h.out_degree(3) == 0;

    auto group_of = [&](int v) {
        if ((mp.p1 >> v) & 1u) return 1;
        if ((mp.p2 >> v) & 1u) return 2;
        return 3;
    };

    CriticalityReport report;
    Digraph d = p.digraph();
    std::optional<Rational> base;
    for (auto [u, v] : d.arcs()) {
        if (group_of(u) == group_of(v)) continue;
        ArcCriticality arc;
        arc.from = u + 1;
        arc.to = v + 1;
        if (slack_scope) {
            // The optimum is the sum of per-group rates, and cross-group arcs
            // leave every per-group rate unchanged.
            arc.asymptotic_claim = true;
            arc.critical = false;
            RateResult rr = dispatch(p);
            arc.rate_before = rr.asymptotic ? *rr.asymptotic : rr.upper;
            arc.rate_after = arc.rate_before;
        } else if (p.t * p.n <= 5) {
            if (!base) base = brute_force_beta_t(p);
            Problem q = p;
            q.side_info[static_cast<size_t>(u)] =
                static_cast<uint16_t>(q.side_info[static_cast<size_t>(u)] & ~(1u << v));
            Rational after = brute_force_beta_t(q);
            arc.rate_before = *base;
            arc.rate_after = after;
            arc.critical = after > *base;
        } else {
            RateResult before = dispatch(p);
            Problem q = p;
            q.side_info[static_cast<size_t>(u)] =
                static_cast<uint16_t>(q.side_info[static_cast<size_t>(u)] & ~(1u << v));
            RateResult after = dispatch(q);
            arc.rate_before = before.upper;
            arc.rate_after = after.upper;
            arc.critical = before.exact && after.exact && after.upper > before.upper;
        }
        report.arcs.push_back(arc);
    }
    return report;
}

std::string rate_result_to_json(const RateResult& r) {
    nlohmann::json j;
    if (r.exact) {
        j["value"] = to_string(r.value());
    } else {
        j["interval"] = {to_string(r.lower), to_string(r.upper)};
    }
    j["exact"] = r.exact;
    j["provenance"] = r.provenance;
    if (r.epsilon) j["epsilon"] = *r.epsilon;
    j["notes"] = r.notes;
    if (r.asymptotic) {
        j["asymptotic"] = {{"value", to_string(*r.asymptotic)},
                           {"exact", r.asymptotic_exact},
                           {"provenance", r.asymptotic_provenance}};
    }
    return j.dump(2);
}

} // namespace tsuic
