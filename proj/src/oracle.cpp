#include "tsuic/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>

#include "tsuic/coloring.hpp"
#include "tsuic/confusion.hpp"
#include "tsuic/index_code.hpp"
#include "tsuic/rate_engine.hpp"

namespace tsuic {

namespace {

// t-bit field of message m; message 0 most significant.
uint32_t msg_field(uint32_t x, int m, int n, int t) {
    return (x >> ((n - 1 - m) * t)) & ((1u << t) - 1u);
}

bool confusable_direct(const Problem& p, uint32_t x, uint32_t y) {
    for (int r = 0; r < p.n; ++r) {
        if (msg_field(x, r, p.n, p.t) == msg_field(y, r, p.n, p.t)) continue;
        bool agrees = true;
        for (int m = 0; m < p.n; ++m) {
            if (!((p.side_info[static_cast<size_t>(r)] >> m) & 1u)) continue;
            if (msg_field(x, m, p.n, p.t) != msg_field(y, m, p.n, p.t)) { agrees = false; break; }
        }
        if (agrees) return true;
    }
    return false;
}

uint32_t input_of(uint32_t x, uint16_t sender_mask, int n, int t) {
    uint32_t in = 0;
    for (int m = 0; m < n; ++m)
        if ((sender_mask >> m) & 1u) in = (in << t) | msg_field(x, m, n, t);
    return in;
}

// A confusable realization pair projected onto the two encoder inputs.
struct Clash {
    uint32_t a1, b1; // sender-1 inputs
    uint32_t a2, b2; // sender-2 inputs
};

// Does a pair of encoder tables with the given alphabet sizes exist such
// that every clash is separated by at least one sender? Enumerates sender-2
// tables depth-first (index order, first-use value symmetry breaking) and
// tries sender-1 tables under each complete sender-2 assignment.
struct JointSearch {
    size_t size1, size2;
    uint32_t alph1, alph2;
    const std::vector<Clash>& clashes;
    std::vector<int> f1, f2;
    std::vector<std::vector<const Clash*>> watch1;
    std::vector<std::vector<const Clash*>> pure2; // clashes sender 2 must separate

    bool fill_f1(size_t pos) {
        if (pos == size1) return true;
        int used = 0;
        for (size_t q = 0; q < pos; ++q) used = std::max(used, f1[q] + 1);
        uint32_t cap = std::min<uint32_t>(alph1, static_cast<uint32_t>(used) + 1);
        for (uint32_t w = 0; w < cap; ++w) {
            bool ok = true;
            for (const Clash* c : watch1[pos]) {
                if (f2[c->a2] != f2[c->b2]) continue;
                uint32_t other = (c->a1 == pos) ? c->b1 : c->a1;
                if (f1[other] == static_cast<int>(w)) { ok = false; break; }
            }
            if (!ok) continue;
            f1[pos] = static_cast<int>(w);
            if (fill_f1(pos + 1)) return true;
            f1[pos] = -1;
        }
        return false;
    }

    bool fill_f2(size_t pos) {
        if (pos == size2) {
            f1.assign(size1, -1);
            return fill_f1(0);
        }
        int used = 0;
        for (size_t q = 0; q < pos; ++q) used = std::max(used, f2[q] + 1);
        uint32_t cap = std::min<uint32_t>(alph2, static_cast<uint32_t>(used) + 1);
        for (uint32_t w = 0; w < cap; ++w) {
            bool ok = true;
            for (const Clash* c : pure2[pos]) {
                uint32_t other = (c->a2 == pos) ? c->b2 : c->a2;
                if (f2[other] == static_cast<int>(w)) { ok = false; break; }
            }
            if (!ok) continue;
            f2[pos] = static_cast<int>(w);
            if (fill_f2(pos + 1)) return true;
            f2[pos] = -1;
        }
        return false;
    }

    bool run() {
        f1.assign(size1, -1);
        f2.assign(size2, -1);
        return fill_f2(0);
    }
};

} // namespace

Rational brute_force_beta_t(const Problem& p, const OracleBudget& budget) {
    if (p.t * p.n > budget.max_tn)
        throw std::invalid_argument("instance exceeds the oracle budget");
    int bits1_max = p.t * std::popcount(static_cast<unsigned>(p.m1));
    int bits2_max = p.t * std::popcount(static_cast<unsigned>(p.m2));
    size_t size1 = static_cast<size_t>(1) << bits1_max;
    size_t size2 = static_cast<size_t>(1) << bits2_max;

    std::vector<Clash> clashes;
    std::set<std::tuple<uint32_t, uint32_t, uint32_t, uint32_t>> seen;
    uint32_t total = 1u << (p.t * p.n);
    for (uint32_t x = 0; x < total; ++x) {
        for (uint32_t y = x + 1; y < total; ++y) {
            if (!confusable_direct(p, x, y)) continue;
            Clash c{input_of(x, p.m1, p.n, p.t), input_of(y, p.m1, p.n, p.t),
                    input_of(x, p.m2, p.n, p.t), input_of(y, p.m2, p.n, p.t)};
            if (c.a1 > c.b1) { std::swap(c.a1, c.b1); std::swap(c.a2, c.b2); }
            if (c.a1 == c.b1 && c.a2 > c.b2) std::swap(c.a2, c.b2);
            if (seen.insert({c.a1, c.b1, c.a2, c.b2}).second) clashes.push_back(c);
        }
    }

    for (int bits = 0; bits <= bits1_max + bits2_max; ++bits) {
        for (int p1 = 0; p1 <= bits; ++p1) {
            int p2 = bits - p1;
            if (p1 > bits1_max || p2 > bits2_max) continue;
            JointSearch search{size1, size2, 1u << p1, 1u << p2, clashes, {}, {}, {}, {}};
            search.watch1.assign(size1, {});
            search.pure2.assign(size2, {});
            for (const Clash& c : clashes) {
                if (c.a1 != c.b1) {
                    search.watch1[std::max(c.a1, c.b1)].push_back(&c);
                } else {
                    search.pure2[std::max(c.a2, c.b2)].push_back(&c);
                }
            }
            if (search.run()) return Rational(bits, p.t);
        }
    }
    throw std::logic_error("unreachable: transmitting everything is always feasible");
}

Rational brute_force_beta_t_ssuic(const Digraph& d, int t, const OracleBudget& budget) {
    if (t * d.n > budget.max_tn)
        throw std::invalid_argument("instance exceeds the oracle budget");
    if (d.n == 0) return Rational(0);
    Problem p;
    p.n = d.n;
    p.t = t;
    p.side_info = d.out;
    uint32_t total = 1u << (t * d.n);

    std::vector<std::pair<uint32_t, uint32_t>> clashes;
    for (uint32_t x = 0; x < total; ++x)
        for (uint32_t y = x + 1; y < total; ++y)
            if (confusable_direct(p, x, y)) clashes.emplace_back(x, y);

    std::vector<std::vector<uint32_t>> watch(total);
    for (auto [x, y] : clashes) watch[y].push_back(x);

    for (int len = 0; len <= t * d.n; ++len) {
        uint32_t alph = 1u << len;
        std::vector<int> f(total, -1);
        // depth-first over realizations with first-use symmetry breaking
        std::function<bool(uint32_t)> fill = [&](uint32_t pos) -> bool {
            if (pos == total) return true;
            int used = 0;
            for (uint32_t q = 0; q < pos; ++q) used = std::max(used, f[q] + 1);
            uint32_t cap = std::min<uint32_t>(alph, static_cast<uint32_t>(used) + 1);
            for (uint32_t w = 0; w < cap; ++w) {
                bool ok = true;
                for (uint32_t x : watch[pos])
                    if (f[x] == static_cast<int>(w)) { ok = false; break; }
                if (!ok) continue;
                f[pos] = static_cast<int>(w);
                if (fill(pos + 1)) return true;
                f[pos] = -1;
            }
            return false;
        };
        if (fill(0)) return Rational(len, t);
    }
    throw std::logic_error("unreachable: the identity encoder is always feasible");
}

SweepReport sweep(const std::vector<Problem>& family, const SweepCheck& check) {
    SweepReport report;
    for (const Problem& p : family) {
        ++report.total;
        auto failure = check(p);
        if (failure) {
            report.failures.push_back(*failure);
        } else {
            ++report.passed;
        }
    }
    return report;
}

namespace {

// All digraphs on k vertices as arc masks per vertex.
std::vector<std::vector<uint16_t>> internal_patterns(int k) {
    std::vector<std::vector<uint16_t>> out;
    int arc_slots = k * (k - 1);
    for (int mask = 0; mask < (1 << arc_slots); ++mask) {
        std::vector<uint16_t> rows(static_cast<size_t>(k), 0);
        int bit = 0;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                if (i == j) continue;
                if ((mask >> bit) & 1) rows[static_cast<size_t>(i)] |= static_cast<uint16_t>(1u << j);
                ++bit;
            }
        out.push_back(rows);
    }
    return out;
}

} // namespace

std::vector<Problem> family_for_class(uint8_t canonical_arcs, int n1, int n2, int n3) {
    InteractionDigraph h{canonical_arcs};
    int n = n1 + n2 + n3;
    std::vector<int> group_start = {0, n1, n1 + n2};
    std::vector<int> group_size = {n1, n2, n3};

    std::vector<Problem> out;
    auto p1_patterns = internal_patterns(n1);
    auto p2_patterns = internal_patterns(n2);
    auto p3_patterns = internal_patterns(n3);
    for (const auto& g1 : p1_patterns) {
        for (const auto& g2 : p2_patterns) {
            for (const auto& g3 : p3_patterns) {
                Problem p;
                p.n = n;
                p.t = 1;
                p.side_info.assign(static_cast<size_t>(n), 0);
                uint16_t all = static_cast<uint16_t>((1u << n) - 1u);
                uint16_t m3 = 0;
                for (int v = 0; v < n3; ++v) m3 = static_cast<uint16_t>(m3 | (1u << (group_start[2] + v)));
                uint16_t m1_only = 0;
                for (int v = 0; v < n1; ++v) m1_only = static_cast<uint16_t>(m1_only | (1u << v));
                p.m1 = static_cast<uint16_t>(m1_only | m3);
                p.m2 = static_cast<uint16_t>(all & ~m1_only);

                const std::vector<uint16_t>* internals[3] = {&g1, &g2, &g3};
                for (int gi = 0; gi < 3; ++gi)
                    for (int v = 0; v < group_size[static_cast<size_t>(gi)]; ++v) {
                        uint16_t row = (*internals[gi])[static_cast<size_t>(v)];
                        for (int w = 0; w < group_size[static_cast<size_t>(gi)]; ++w)
                            if ((row >> w) & 1u)
                                p.side_info[static_cast<size_t>(group_start[static_cast<size_t>(gi)] + v)] |=
                                    static_cast<uint16_t>(1u << (group_start[static_cast<size_t>(gi)] + w));
                    }
                // cross-group side information: fully participated per class arc
                for (int i = 1; i <= 3; ++i)
                    for (int j = 1; j <= 3; ++j) {
                        if (i == j || !h.has(i, j)) continue;
                        uint16_t targets = 0;
                        for (int w = 0; w < group_size[static_cast<size_t>(j - 1)]; ++w)
                            targets = static_cast<uint16_t>(targets | (1u << (group_start[static_cast<size_t>(j - 1)] + w)));
                        for (int v = 0; v < group_size[static_cast<size_t>(i - 1)]; ++v)
                            p.side_info[static_cast<size_t>(group_start[static_cast<size_t>(i - 1)] + v)] |= targets;
                    }
                out.push_back(p);
            }
        }
    }
    return out;
}

std::vector<Problem> family_fp36() {
    std::vector<Problem> out;
    for (const InteractionClass& cls : enumerate_classes()) {
        for (auto [n1, n2, n3] : {std::tuple<int, int, int>{1, 1, 1}, {2, 1, 1}, {1, 1, 2}}) {
            auto instances = family_for_class(cls.canonical_arcs, n1, n2, n3);
            out.insert(out.end(), instances.begin(), instances.end());
        }
    }
    return out;
}

SweepCheck check_dispatch_vs_oracle() {
    return [](const Problem& p) -> std::optional<SweepFailure> {
        RateResult r = dispatch(p);
        Rational o = brute_force_beta_t(p);
        bool ok = r.exact ? (r.value() == o) : (r.lower <= o && o <= r.upper);
        if (ok) return std::nullopt;
        return SweepFailure{to_text(p),
                            r.exact ? to_string(r.value())
                                    : "[" + to_string(r.lower) + ", " + to_string(r.upper) + "]",
                            to_string(o)};
    };
}

SweepCheck check_minimize_vs_oracle() {
    return [](const Problem& p) -> std::optional<SweepFailure> {
        MessagePartition mp = partition(p);
        ConfusionGraph g = build(p, mp);
        MinimizeResult m = minimize(p, g);
        Rational o = brute_force_beta_t(p);
        if (m.exact && m.cost.rate == o) return std::nullopt;
        return SweepFailure{to_text(p), to_string(o), to_string(m.cost.rate)};
    };
}

SweepCheck check_roundtrip() {
    return [](const Problem& p) -> std::optional<SweepFailure> {
        MessagePartition mp = partition(p);
        ConfusionGraph g = build(p, mp);
        MinimizeResult m = minimize(p, g);
        IndexCode code = coloring_to_code(p, g, m.coloring);
        CodeVerdict cv = verify(p, code);
        if (!cv.ok)
            return SweepFailure{to_text(p), "verifiable code", cv.reason};
        if (code.rate() != m.cost.rate)
            return SweepFailure{to_text(p), to_string(m.cost.rate), to_string(code.rate())};
        TwoSenderColoring back = code_to_coloring(p, g, code);
        ColoringVerdict bv = validate(p, g, back);
        if (!bv.ok)
            return SweepFailure{to_text(p), "valid round-trip coloring", bv.reason};
        return std::nullopt;
    };
}

} // namespace tsuic
