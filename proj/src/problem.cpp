#include "tsuic/problem.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace tsuic {

const std::pair<int, int> kArcPairs[6] = {{1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}};

namespace {

int arc_bit(int i, int j) {
    for (int b = 0; b < 6; ++b)
        if (kArcPairs[b].first == i && kArcPairs[b].second == j) return b;
    throw std::invalid_argument("invalid interaction arc");
}

} // namespace

bool InteractionDigraph::has(int i, int j) const { return (arcs >> arc_bit(i, j)) & 1u; }

void InteractionDigraph::add(int i, int j) { arcs = static_cast<uint8_t>(arcs | (1u << arc_bit(i, j))); }

int InteractionDigraph::out_degree(int v) const {
    int d = 0;
    for (int b = 0; b < 6; ++b)
        if (((arcs >> b) & 1u) && kArcPairs[b].first == v) ++d;
    return d;
}

int InteractionDigraph::in_degree(int v) const {
    int d = 0;
    for (int b = 0; b < 6; ++b)
        if (((arcs >> b) & 1u) && kArcPairs[b].second == v) ++d;
    return d;
}

bool InteractionDigraph::is_cyclic() const {
    Digraph d(3);
    for (int b = 0; b < 6; ++b)
        if ((arcs >> b) & 1u) d.add_arc(kArcPairs[b].first - 1, kArcPairs[b].second - 1);
    return !d.acyclic();
}

InteractionDigraph InteractionDigraph::swapped() const {
    auto sw = [](int v) { return v == 1 ? 2 : (v == 2 ? 1 : 3); };
    InteractionDigraph out;
    for (int b = 0; b < 6; ++b)
        if ((arcs >> b) & 1u) out.add(sw(kArcPairs[b].first), sw(kArcPairs[b].second));
    return out;
}

uint8_t InteractionDigraph::canonical() const { return std::min(arcs, swapped().arcs); }

std::string case_label_name(CaseLabel c) {
    switch (c) {
        case CaseLabel::I: return "I";
        case CaseLabel::IIA: return "II-A";
        case CaseLabel::IIB: return "II-B";
        case CaseLabel::IIC: return "II-C";
        case CaseLabel::IID: return "II-D";
    }
    return "?";
}

namespace {

CaseLabel case_of(const InteractionDigraph& h) {
    if (!h.is_cyclic()) return CaseLabel::I;
    if (h.out_degree(3) == 0) return CaseLabel::IIA;
    if (h.has(1, 3) && h.has(2, 3) && h.has(3, 1) && h.has(3, 2)) return CaseLabel::IIB;
    if ((h.has(1, 3) && h.has(3, 1)) || (h.has(2, 3) && h.has(3, 2))) return CaseLabel::IIC;
    return CaseLabel::IID;
}

// Labels anchored to worked instances; the rest of the numbering is
// deducible only up to the published figure, so those entries are flagged.
struct LabelEntry {
    uint8_t canonical;
    const char* label;
    bool inferred;
};

const LabelEntry kLabels[] = {
    {0, "H_1", false},   {21, "H_7", false},  {3, "H_15", false},  {23, "H_16", false},
    {7, "H_17", true},   {60, "H_18", false}, {63, "H_19", true},  {61, "H_20", true},
    {14, "H_23", false}, {11, "H_33", false}, {43, "H_34", true},  {27, "H_35", true},
    {25, "H_36", true},
};

} // namespace

std::vector<InteractionClass> enumerate_classes() {
    std::map<uint8_t, InteractionClass> by_canonical;
    for (int mask = 0; mask < 64; ++mask) {
        InteractionDigraph h{static_cast<uint8_t>(mask)};
        uint8_t canon = h.canonical();
        if (by_canonical.count(canon)) continue;
        InteractionClass c;
        c.canonical_arcs = canon;
        c.case_label = case_of(InteractionDigraph{canon});
        for (const auto& e : kLabels) {
            if (e.canonical == canon) {
                c.paper_label = e.label;
                c.paper_label_inferred = e.inferred;
            }
        }
        by_canonical[canon] = c;
    }
    std::vector<InteractionClass> out;
    int id = 1;
    for (auto& [canon, c] : by_canonical) {
        c.class_id = id++;
        out.push_back(c);
    }
    return out;
}

InteractionClass classify(const InteractionDigraph& h) {
    static const std::vector<InteractionClass> classes = enumerate_classes();
    uint8_t canon = h.canonical();
    for (const auto& c : classes)
        if (c.canonical_arcs == canon) return c;
    throw std::logic_error("unreachable: every 6-bit mask has a class");
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    bool done() const { return i >= s.size(); }
    char peek() const { return done() ? '\0' : s[i]; }
    bool eat(char c) {
        if (peek() != c) return false;
        ++i;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) throw std::invalid_argument(std::string("expected '") + c + "' in problem text");
    }
    int number() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw std::invalid_argument("expected a number in problem text");
        int v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (s[i++] - '0');
        return v;
    }
};

uint16_t parse_set(Cursor& c, int n, const char* what) {
    c.expect('{');
    uint16_t mask = 0;
    if (!c.eat('}')) {
        while (true) {
            int v = c.number();
            if (v < 1 || v > n) throw std::invalid_argument(std::string(what) + ": index out of range");
            mask = static_cast<uint16_t>(mask | (1u << (v - 1)));
            if (c.eat(',')) continue;
            c.expect('}');
            break;
        }
    }
    return mask;
}

} // namespace

Problem parse_problem(const std::string& text, int max_tn) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);

    Cursor c{s};
    std::vector<std::pair<int, std::vector<int>>> records;
    while (c.peek() == '(') {
        c.expect('(');
        int r = c.number();
        c.expect('|');
        std::vector<int> known;
        if (c.peek() != ')') {
            while (true) {
                known.push_back(c.number());
                if (!c.eat(',')) break;
            }
        }
        c.expect(')');
        records.emplace_back(r, std::move(known));
        if (!c.eat(',')) break;
    }
    if (records.empty()) throw std::invalid_argument("no receiver records");
    int n = static_cast<int>(records.size());
    if (n > 16) throw std::invalid_argument("at most 16 receivers supported");

    Problem p;
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

    c.expect(';');
    c.expect('M');
    c.expect('1');
    c.expect('=');
    p.m1 = parse_set(c, n, "M1");
    c.expect(';');
    c.expect('M');
    c.expect('2');
    c.expect('=');
    p.m2 = parse_set(c, n, "M2");
    if (c.eat(';')) {
        if (!c.done()) {
            c.expect('t');
            c.expect('=');
            p.t = c.number();
        }
    }
    if (!c.done()) throw std::invalid_argument("trailing characters in problem text");

    uint16_t all = static_cast<uint16_t>((1u << n) - 1u);
    if ((p.m1 | p.m2) != all) throw std::invalid_argument("some message is held by no sender");
    if (p.t < 1) throw std::invalid_argument("t must be at least 1");
    if (p.t * p.n > max_tn) throw std::invalid_argument("t*N exceeds the size guardrail");
    return p;
}

std::string to_text(const Problem& p) {
    std::string s;
    for (int r = 0; r < p.n; ++r) {
        if (r) s += ",";
        s += "(" + std::to_string(r + 1) + "|";
        bool first = true;
        for (int m = 0; m < p.n; ++m) {
            if (!((p.side_info[static_cast<size_t>(r)] >> m) & 1u)) continue;
            if (!first) s += ",";
            s += std::to_string(m + 1);
            first = false;
        }
        s += ")";
    }
    auto set_text = [&](uint16_t mask) {
        std::string out = "{";
        bool first = true;
        for (int m = 0; m < p.n; ++m) {
            if (!((mask >> m) & 1u)) continue;
            if (!first) out += ",";
            out += std::to_string(m + 1);
            first = false;
        }
        return out + "}";
    };
    s += "; M1=" + set_text(p.m1) + "; M2=" + set_text(p.m2) + "; t=" + std::to_string(p.t);
    return s;
}

MessagePartition partition(const Problem& p) {
    MessagePartition mp;
    mp.p1 = static_cast<uint16_t>(p.m1 & ~p.m2);
    mp.p2 = static_cast<uint16_t>(p.m2 & ~p.m1);
    mp.p3 = static_cast<uint16_t>(p.m1 & p.m2);
    for (int r = 0; r < p.n; ++r) {
        if ((mp.p1 >> r) & 1u) mp.d1.push_back(r);
        if ((mp.p2 >> r) & 1u) mp.d2.push_back(r);
        if ((mp.p3 >> r) & 1u) mp.d3.push_back(r);
    }
    return mp;
}

SenderConstraintGraph sender_constraint_graph(const Problem& p, const MessagePartition& mp) {
    SenderConstraintGraph g;
    g.n = p.n;
    for (int i : mp.d1)
        for (int j : mp.d2) g.edges.emplace_back(std::min(i, j), std::max(i, j));
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

namespace {

const std::vector<int>& group_of(const MessagePartition& mp, int i) {
    return i == 1 ? mp.d1 : (i == 2 ? mp.d2 : mp.d3);
}

} // namespace

InteractionDigraph interaction_map(const Problem& p, const MessagePartition& mp) {
    InteractionDigraph h;
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            if (i == j) continue;
            bool arc = false;
            for (int r : group_of(mp, i)) {
                for (int m : group_of(mp, j))
                    if ((p.side_info[static_cast<size_t>(r)] >> m) & 1u) { arc = true; break; }
                if (arc) break;
            }
            if (arc) h.add(i, j);
        }
    }
    return h;
}

bool is_fully_participated(const Problem& p, const MessagePartition& mp) {
    InteractionDigraph h = interaction_map(p, mp);
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            if (i == j || !h.has(i, j)) continue;
            uint16_t targets = 0;
            for (int m : group_of(mp, j)) targets = static_cast<uint16_t>(targets | (1u << m));
            for (int r : group_of(mp, i))
                if ((p.side_info[static_cast<size_t>(r)] & targets) != targets) return false;
        }
    }
    return true;
}

} // namespace tsuic
