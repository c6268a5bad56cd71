#include "tsuic/msuic.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <stdexcept>

#include "tsuic/confusion.hpp"

namespace tsuic {

Digraph MsProblem::digraph() const {
    Digraph d(n);
    for (int r = 0; r < n; ++r) d.out[static_cast<size_t>(r)] = side_info[static_cast<size_t>(r)];
    return d;
}

MsProblem parse_ms_problem(const std::string& text, int max_tn) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);

    // receiver records, identical to the two-sender format
    size_t i = 0;
    auto number = [&]() {
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("expected a number in problem text");
        int v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
        return v;
    };
    auto expect = [&](char c) {
        if (i >= s.size() || s[i] != c)
            throw std::invalid_argument(std::string("expected '") + c + "' in problem text");
        ++i;
    };

    std::vector<std::pair<int, std::vector<int>>> records;
    while (i < s.size() && s[i] == '(') {
        expect('(');
        int r = number();
        expect('|');
        std::vector<int> known;
        if (s[i] != ')') {
            while (true) {
                known.push_back(number());
                if (i < s.size() && s[i] == ',') { ++i; continue; }
                break;
            }
        }
        expect(')');
        records.emplace_back(r, std::move(known));
        if (i < s.size() && s[i] == ',') ++i;
        else break;
    }
    if (records.empty()) throw std::invalid_argument("no receiver records");
    int n = static_cast<int>(records.size());
    if (n > 16) throw std::invalid_argument("at most 16 receivers supported");

    MsProblem p;
    p.n = n;
    p.side_info.assign(static_cast<size_t>(n), 0);
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (const auto& [r, known] : records) {
        if (r < 1 || r > n) throw std::invalid_argument("receiver index out of range");
        if (seen[static_cast<size_t>(r - 1)]) throw std::invalid_argument("duplicate receiver record");
        seen[static_cast<size_t>(r - 1)] = true;
        for (int m : known) {
            if (m < 1 || m > n) throw std::invalid_argument("side-information index out of range");
            if (m == r) throw std::invalid_argument("receiver cannot know its own message");
            p.side_info[static_cast<size_t>(r - 1)] |= static_cast<uint16_t>(1u << (m - 1));
        }
    }

    // sender sets M1..MN
    std::vector<uint16_t> senders;
    while (i < s.size() && s[i] == ';') {
        ++i;
        if (i >= s.size()) break;
        if (s[i] == 't') {
            ++i;
            expect('=');
            p.t = number();
            break;
        }
        expect('M');
        int idx = number();
        if (idx != static_cast<int>(senders.size()) + 1)
            throw std::invalid_argument("sender sets must be listed as M1, M2, ...");
        expect('=');
        expect('{');
        uint16_t mask = 0;
        if (s[i] != '}') {
            while (true) {
                int m = number();
                if (m < 1 || m > n) throw std::invalid_argument("sender set index out of range");
                mask = static_cast<uint16_t>(mask | (1u << (m - 1)));
                if (i < s.size() && s[i] == ',') { ++i; continue; }
                break;
            }
        }
        expect('}');
        senders.push_back(mask);
    }
    if (i != s.size()) throw std::invalid_argument("trailing characters in problem text");
    if (senders.size() < 2) throw std::invalid_argument("at least two senders required");

    int ns = static_cast<int>(senders.size());
    uint16_t all = static_cast<uint16_t>((1u << n) - 1u);
    uint16_t common = all;
    uint16_t unioned = 0;
    for (uint16_t m : senders) {
        common &= m;
        unioned |= m;
    }
    if (unioned != all) throw std::invalid_argument("some message is held by no sender");
    p.n_senders = ns;
    p.pools.clear();
    uint16_t covered = common;
    for (int sdx = 0; sdx < ns; ++sdx) {
        uint16_t priv = senders[static_cast<size_t>(sdx)];
        for (int odx = 0; odx < ns; ++odx)
            if (odx != sdx) priv = static_cast<uint16_t>(priv & ~senders[static_cast<size_t>(odx)]);
        if ((priv | common) != senders[static_cast<size_t>(sdx)])
            throw std::invalid_argument("sender sets must share only a single common pool");
        if (priv == 0) throw std::invalid_argument("every sender needs at least one private message");
        p.pools.push_back(priv);
        covered = static_cast<uint16_t>(covered | priv);
    }
    if (covered != all)
        throw std::invalid_argument("sender sets must share only a single common pool");
    p.pools.push_back(common);
    if (p.t < 1) throw std::invalid_argument("t must be at least 1");
    if (p.t * p.n > max_tn) throw std::invalid_argument("t*N exceeds the size guardrail");
    return p;
}

std::vector<std::vector<int>> ms_groups(const MsProblem& p) {
    std::vector<std::vector<int>> groups(p.pools.size());
    for (size_t g = 0; g < p.pools.size(); ++g)
        for (int r = 0; r < p.n; ++r)
            if ((p.pools[g] >> r) & 1u) groups[g].push_back(r);
    return groups;
}

uint32_t MsConfusionGraph::sub_label(uint32_t v, int group) const {
    int shift = 0;
    for (size_t g = group_sizes.size(); g > static_cast<size_t>(group) + 1; --g)
        shift += t * group_sizes[g - 1];
    return (v >> shift) & ((1u << bits(group)) - 1u);
}

MsConfusionGraph ms_build(const MsProblem& p, int max_tn) {
    if (p.t * p.n > max_tn) throw std::invalid_argument("t*N exceeds the size guardrail");
    MsConfusionGraph cg;
    cg.t = p.t;
    cg.n = p.n;
    auto groups = ms_groups(p);
    for (const auto& g : groups) {
        cg.group_sizes.push_back(static_cast<int>(g.size()));
        cg.order.insert(cg.order.end(), g.begin(), g.end());
    }
    std::vector<int> pos(static_cast<size_t>(p.n), -1);
    for (int k = 0; k < p.n; ++k) pos[static_cast<size_t>(cg.order[static_cast<size_t>(k)])] = k;
    Digraph dp(p.n);
    for (int r = 0; r < p.n; ++r)
        for (int m = 0; m < p.n; ++m)
            if ((p.side_info[static_cast<size_t>(r)] >> m) & 1u)
                dp.add_arc(pos[static_cast<size_t>(r)], pos[static_cast<size_t>(m)]);
    cg.g = build_confusion(dp, p.t, max_tn);
    return cg;
}

namespace {

size_t j_index(const MsConfusionGraph& g, uint32_t v, int sender) {
    int common = static_cast<int>(g.group_sizes.size()) - 1;
    return (static_cast<size_t>(g.sub_label(v, sender)) << g.bits(common)) | g.sub_label(v, common);
}

bool ms_confused_at_group(const MsProblem& p, const MsConfusionGraph& g,
                          uint32_t u, uint32_t v, const std::vector<int>& group) {
    auto field_of = [&](uint32_t x, int r) {
        int k = static_cast<int>(std::find(g.order.begin(), g.order.end(), r) - g.order.begin());
        return (x >> ((g.n - 1 - k) * g.t)) & ((1u << g.t) - 1u);
    };
    for (int r : group) {
        if (field_of(u, r) == field_of(v, r)) continue;
        bool agrees = true;
        for (int m = 0; m < p.n; ++m) {
            if (!((p.side_info[static_cast<size_t>(r)] >> m) & 1u)) continue;
            if (field_of(u, m) != field_of(v, m)) { agrees = false; break; }
        }
        if (agrees) return true;
    }
    return false;
}

} // namespace

std::vector<int> MsColoring::palettes() const {
    std::vector<int> out;
    for (const auto& js : j) {
        std::set<int> distinct(js.begin(), js.end());
        out.push_back(static_cast<int>(distinct.size()));
    }
    return out;
}

MsVerdict ms_validate(const MsProblem& p, const MsConfusionGraph& g, const MsColoring& c) {
    MsVerdict verdict;
    int ns = p.n_senders;
    if (static_cast<int>(c.j.size()) != ns) {
        verdict.ok = false;
        verdict.reason = "coloring has the wrong number of sender maps";
        return verdict;
    }
    int common = ns;
    for (int sdx = 0; sdx < ns; ++sdx) {
        size_t dom = static_cast<size_t>(1) << (g.bits(sdx) + g.bits(common));
        if (c.j[static_cast<size_t>(sdx)].size() != dom) {
            verdict.ok = false;
            verdict.reason = "coloring map is not total over its label domain";
            return verdict;
        }
    }
    auto groups = ms_groups(p);
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (!g.g.has_edge(u, v)) continue;
            uint32_t uu = static_cast<uint32_t>(u), vv = static_cast<uint32_t>(v);
            bool any = false;
            for (int sdx = 0; sdx < ns; ++sdx)
                if (c.j[static_cast<size_t>(sdx)][j_index(g, uu, sdx)] !=
                    c.j[static_cast<size_t>(sdx)][j_index(g, vv, sdx)]) { any = true; break; }
            if (!any) {
                verdict.ok = false;
                verdict.reason = "adjacent vertices share the color tuple";
                verdict.witness_edge = {uu, vv};
                return verdict;
            }
            if (g.sub_label(uu, common) == g.sub_label(vv, common)) {
                for (int sdx = 0; sdx < ns; ++sdx) {
                    if (!ms_confused_at_group(p, g, uu, vv, groups[static_cast<size_t>(sdx)])) continue;
                    if (c.j[static_cast<size_t>(sdx)][j_index(g, uu, sdx)] ==
                        c.j[static_cast<size_t>(sdx)][j_index(g, vv, sdx)]) {
                        verdict.ok = false;
                        verdict.reason = "sender " + std::to_string(sdx + 1) +
                                         " colors must differ for this confusion";
                        verdict.witness_edge = {uu, vv};
                        return verdict;
                    }
                }
            }
        }
    }
    return verdict;
}

Rational ms_coloring_rate(const MsColoring& c, int t) {
    long long bits = 0;
    for (int palette : c.palettes()) bits += ceil_log2(std::max(1, palette));
    return Rational(bits, t);
}

MsMinimizeResult ms_minimize(const MsProblem& p, const MsConfusionGraph& g, int max_tn) {
    if (p.t * p.n > max_tn) throw std::invalid_argument("instance exceeds the search budget");
    int ns = p.n_senders;
    int common = ns;

    struct Edge {
        std::vector<size_t> idx_u, idx_v;
        int last_diff; // the highest sender whose indices differ
    };
    std::vector<Edge> edges;
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (!g.g.has_edge(u, v)) continue;
            Edge e;
            e.last_diff = -1;
            for (int sdx = 0; sdx < ns; ++sdx) {
                e.idx_u.push_back(j_index(g, static_cast<uint32_t>(u), sdx));
                e.idx_v.push_back(j_index(g, static_cast<uint32_t>(v), sdx));
                if (e.idx_u.back() != e.idx_v.back()) e.last_diff = sdx;
            }
            if (e.last_diff < 0)
                throw std::logic_error("unreachable: sender labels determine the vertex");
            edges.push_back(std::move(e));
        }
    }

    std::vector<size_t> dom(static_cast<size_t>(ns));
    int bits_total_max = 0;
    for (int sdx = 0; sdx < ns; ++sdx) {
        dom[static_cast<size_t>(sdx)] = static_cast<size_t>(1) << (g.bits(sdx) + g.bits(common));
        bits_total_max += g.bits(sdx);
    }
    bits_total_max += g.bits(common);

    MsMinimizeResult result;
    std::vector<int> bits(static_cast<size_t>(ns), 0);
    std::vector<std::vector<int>> j(static_cast<size_t>(ns));

    // try one bit composition: sequential backtracking over sender tables
    std::function<bool(int, size_t)> fill = [&](int sdx, size_t pos) -> bool {
        if (sdx == ns) return true;
        if (pos == dom[static_cast<size_t>(sdx)]) return fill(sdx + 1, 0);
        auto& table = j[static_cast<size_t>(sdx)];
        int used = 0;
        for (size_t q = 0; q < pos; ++q) used = std::max(used, table[q] + 1);
        int cap = std::min(1 << bits[static_cast<size_t>(sdx)], used + 1);
        for (int color = 0; color < cap; ++color) {
            table[pos] = color;
            bool ok = true;
            for (const Edge& e : edges) {
                if (e.last_diff != sdx) continue;
                size_t hi = std::max(e.idx_u[static_cast<size_t>(sdx)], e.idx_v[static_cast<size_t>(sdx)]);
                if (hi != pos) continue;
                bool separated = false;
                for (int odx = 0; odx <= sdx; ++odx) {
                    if (e.idx_u[static_cast<size_t>(odx)] == e.idx_v[static_cast<size_t>(odx)]) continue;
                    if (j[static_cast<size_t>(odx)][e.idx_u[static_cast<size_t>(odx)]] !=
                        j[static_cast<size_t>(odx)][e.idx_v[static_cast<size_t>(odx)]]) {
                        separated = true;
                        break;
                    }
                }
                if (!separated) { ok = false; break; }
            }
            if (ok && fill(sdx, pos + 1)) return true;
        }
        table[pos] = -1;
        return false;
    };

    std::function<bool(int, int)> compose = [&](int sdx, int remaining) -> bool {
        if (sdx == ns - 1) {
            bits[static_cast<size_t>(sdx)] = remaining;
            for (int k = 0; k < ns; ++k)
                j[static_cast<size_t>(k)].assign(dom[static_cast<size_t>(k)], -1);
            return fill(0, 0);
        }
        for (int b = 0; b <= remaining; ++b) {
            bits[static_cast<size_t>(sdx)] = b;
            if (compose(sdx + 1, remaining - b)) return true;
        }
        return false;
    };

    for (int total = 0; total <= bits_total_max; ++total) {
        if (compose(0, total)) {
            result.coloring.j = j;
            result.bits = bits;
            result.rate = Rational(total, p.t);
            result.exact = true;
            return result;
        }
    }
    throw std::logic_error("unreachable: the injective coloring is always feasible");
}

Digraph ms_interaction_map(const MsProblem& p) {
    auto groups = ms_groups(p);
    int k = static_cast<int>(groups.size());
    Digraph h(k);
    for (int i = 0; i < k; ++i)
        for (int jdx = 0; jdx < k; ++jdx) {
            if (i == jdx) continue;
            bool arc = false;
            for (int r : groups[static_cast<size_t>(i)]) {
                for (int m : groups[static_cast<size_t>(jdx)])
                    if ((p.side_info[static_cast<size_t>(r)] >> m) & 1u) { arc = true; break; }
                if (arc) break;
            }
            if (arc) h.add_arc(i, jdx);
        }
    return h;
}

bool ms_is_fully_participated(const MsProblem& p) {
    auto groups = ms_groups(p);
    Digraph h = ms_interaction_map(p);
    for (int i = 0; i < h.n; ++i)
        for (int jdx = 0; jdx < h.n; ++jdx) {
            if (i == jdx || !h.has_arc(i, jdx)) continue;
            uint16_t targets = 0;
            for (int m : groups[static_cast<size_t>(jdx)]) targets = static_cast<uint16_t>(targets | (1u << m));
            for (int r : groups[static_cast<size_t>(i)])
                if ((p.side_info[static_cast<size_t>(r)] & targets) != targets) return false;
        }
    return true;
}

MsColoring ms_structured_coloring(const MsProblem& p, const MsConfusionGraph& g) {
    int ns = p.n_senders;
    int common = ns;
    Digraph h = ms_interaction_map(p);
    if (h.out[static_cast<size_t>(common)] != 0)
        throw std::invalid_argument(
            "structured coloring requires no interaction out of the common group");

    Digraph d = p.digraph();
    std::vector<ChromaticResult> per_group;
    for (size_t gi = 0; gi < p.pools.size(); ++gi) {
        Graph conf = build_confusion(d.induced(p.pools[gi]), p.t);
        ChromaticResult cr = chromatic_number(conf);
        if (!cr.exact) throw std::runtime_error("chromatic number not resolved exactly");
        per_group.push_back(cr);
    }
    int chi_c = std::max(1, per_group.back().chi());

    // best factor tuple a_1 * ... * a_ns >= chi_c minimizing the bit sum
    std::vector<int> factors(static_cast<size_t>(ns), 1), best_factors;
    int best_bits = -1;
    std::function<void(int, int)> pick = [&](int sdx, int product) {
        if (sdx == ns) {
            if (product < chi_c) return;
            int total = 0;
            for (int k = 0; k < ns; ++k)
                total += ceil_log2(static_cast<long long>(std::max(1, per_group[static_cast<size_t>(k)].chi())) *
                                   factors[static_cast<size_t>(k)]);
            if (best_bits < 0 || total < best_bits) {
                best_bits = total;
                best_factors = factors;
            }
            return;
        }
        for (int a = 1; a <= chi_c; ++a) {
            factors[static_cast<size_t>(sdx)] = a;
            pick(sdx + 1, product * a);
        }
    };
    pick(0, 1);

    MsColoring out;
    out.j.resize(static_cast<size_t>(ns));
    for (int sdx = 0; sdx < ns; ++sdx) {
        size_t dom = static_cast<size_t>(1) << (g.bits(sdx) + g.bits(common));
        out.j[static_cast<size_t>(sdx)].assign(dom, 0);
        // mixed-radix digit of the common color for this sender
        int radix_below = 1;
        for (int k = 0; k < sdx; ++k) radix_below *= best_factors[static_cast<size_t>(k)];
        int a = best_factors[static_cast<size_t>(sdx)];
        for (uint32_t bs = 0; bs < (1u << g.bits(sdx)); ++bs) {
            int base = per_group[static_cast<size_t>(sdx)].colors.empty()
                           ? 0
                           : per_group[static_cast<size_t>(sdx)].colors[bs];
            for (uint32_t bc = 0; bc < (1u << g.bits(common)); ++bc) {
                int cc = per_group.back().colors.empty() ? 0 : per_group.back().colors[bc];
                int digit = (cc / radix_below) % a;
                out.j[static_cast<size_t>(sdx)][(static_cast<size_t>(bs) << g.bits(common)) | bc] =
                    base * a + digit;
            }
        }
    }
    return out;
}

} // namespace tsuic
