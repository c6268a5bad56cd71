#include "tsuic/confusion.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsuic {

namespace {

uint32_t field(uint32_t word, int pos, int n, int t) {
    // pos 0 occupies the most significant t bits
    return (word >> ((n - 1 - pos) * t)) & ((1u << t) - 1u);
}

std::string bits_string(uint32_t value, int len) {
    std::string s;
    for (int b = len - 1; b >= 0; --b) s.push_back(((value >> b) & 1u) ? '1' : '0');
    return s;
}

} // namespace

uint32_t ConfusionGraph::field_of(uint32_t v, int r) const {
    auto it = std::find(order.begin(), order.end(), r);
    if (it == order.end()) throw std::invalid_argument("receiver not in this graph");
    int pos = static_cast<int>(it - order.begin());
    return field(v, pos, n, t);
}

std::string ConfusionGraph::label(uint32_t v) const {
    std::string s = "(";
    s += bits_string(b1_of(v), bits1());
    s += ",";
    s += bits_string(b2_of(v), bits2());
    s += ",";
    s += bits_string(b3_of(v), bits3());
    s += ")";
    return s;
}

bool confusable(uint32_t u, uint32_t v, const Digraph& d, int t) {
    if (u == v) return false;
    for (int r = 0; r < d.n; ++r) {
        if (field(u, r, d.n, t) == field(v, r, d.n, t)) continue;
        bool agrees = true;
        for (int m = 0; m < d.n; ++m) {
            if (!d.has_arc(r, m)) continue;
            if (field(u, m, d.n, t) != field(v, m, d.n, t)) { agrees = false; break; }
        }
        if (agrees) return true;
    }
    return false;
}

Graph build_confusion(const Digraph& d, int t, int max_tn) {
    if (t * d.n > max_tn) throw std::invalid_argument("t*N exceeds the size guardrail");
    int vcount = 1 << (t * d.n);
    Graph g(vcount);
    for (uint32_t u = 0; u < static_cast<uint32_t>(vcount); ++u)
        for (uint32_t v = u + 1; v < static_cast<uint32_t>(vcount); ++v)
            if (confusable(u, v, d, t)) g.add_edge(static_cast<int>(u), static_cast<int>(v));
    return g;
}

ConfusionGraph build(const Problem& p, const MessagePartition& mp, int max_tn) {
    if (p.t * p.n > max_tn) throw std::invalid_argument("t*N exceeds the size guardrail");
    ConfusionGraph cg;
    cg.t = p.t;
    cg.n = p.n;
    cg.n1 = static_cast<int>(mp.d1.size());
    cg.n2 = static_cast<int>(mp.d2.size());
    cg.n3 = static_cast<int>(mp.d3.size());
    cg.order = mp.d1;
    cg.order.insert(cg.order.end(), mp.d2.begin(), mp.d2.end());
    cg.order.insert(cg.order.end(), mp.d3.begin(), mp.d3.end());

    // Permute the digraph so that position k in the layout is receiver order[k].
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

std::vector<int> block_vertices(const ConfusionGraph& g, const BlockRef& ref) {
    if (ref.b3 >= (1u << g.bits3())) throw std::out_of_range("block index out of range");
    if (ref.row_b2 && *ref.row_b2 >= (1u << g.bits2())) throw std::out_of_range("row index out of range");
    if (ref.column_b1 && *ref.column_b1 >= (1u << g.bits1())) throw std::out_of_range("column index out of range");
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        uint32_t uv = static_cast<uint32_t>(v);
        if (g.b3_of(uv) != ref.b3) continue;
        if (ref.row_b2 && g.b2_of(uv) != *ref.row_b2) continue;
        if (ref.column_b1 && g.b1_of(uv) != *ref.column_b1) continue;
        out.push_back(v);
    }
    return out;
}

EdgeKind classify_edge(const ConfusionGraph& g, uint32_t u, uint32_t v) {
    if (u == v || !g.g.has_edge(static_cast<int>(u), static_cast<int>(v)))
        throw std::invalid_argument("not an edge of the confusion graph");
    return g.b3_of(u) == g.b3_of(v) ? EdgeKind::IntraBlock : EdgeKind::InterBlock;
}

namespace {

// Size of the largest acyclic induced sub-digraph. The 2^{t*k} realizations
// that vary only over such a set are pairwise confusable, so this bounds the
// codeword length from below.
int max_acyclic_induced(const Digraph& d) {
    int best = 0;
    uint32_t all = (d.n >= 16) ? 0xFFFFu : ((1u << d.n) - 1u);
    for (uint32_t mask = 0; mask <= all; ++mask) {
        uint16_t m = static_cast<uint16_t>(mask);
        int k = 0;
        for (uint16_t v = m; v; v &= static_cast<uint16_t>(v - 1)) ++k;
        if (k <= best) continue;
        if (d.induced(m).acyclic()) best = k;
    }
    return best;
}

} // namespace

Rational beta_t_ssuic(const Digraph& d, int t, int max_tn) {
    if (d.n == 0) return Rational(0);
    Graph g = build_confusion(d, t, max_tn);
    // Only ceil(log2 chi) matters, so when the greedy bounds already agree on
    // the bit count the exact chromatic search is skipped. The strongest
    // cheap lower bound is the clique of realizations over a maximum acyclic
    // induced sub-digraph.
    ChromaticResult greedy = chromatic_number(g, 0);
    int bits_low = ceil_log2(std::max(1LL << (t * max_acyclic_induced(d)),
                                      static_cast<long long>(greedy.lower)));
    int bits_high = ceil_log2(greedy.upper);
    if (bits_low == bits_high) return Rational(bits_low, t);
    ChromaticResult cr = chromatic_number(g);
    if (!cr.exact) throw std::runtime_error("chromatic number not resolved exactly");
    return Rational(ceil_log2(cr.chi()), t);
}

std::string to_dot(const ConfusionGraph& g) {
    std::string out = "graph confusion {\n";
    for (uint32_t k = 0; k < (1u << g.bits3()); ++k) {
        out += "  subgraph cluster_block_" + std::to_string(k) + " {\n";
        out += "    label=\"block " + std::to_string(k + 1) + "\";\n";
        for (int v : block_vertices(g, BlockRef{k, std::nullopt, std::nullopt}))
            out += "    v" + std::to_string(v) + " [label=\"" + g.label(static_cast<uint32_t>(v)) + "\"];\n";
        out += "  }\n";
    }
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.g.has_edge(u, v))
                out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

} // namespace tsuic
