#include "tsuic/index_code.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace tsuic {

BitWord xor_pad(const BitWord& a, const BitWord& b) {
    return BitWord{std::max(a.len, b.len), a.bits ^ b.bits};
}

BitWord concat(const BitWord& a, const BitWord& b) {
    return BitWord{a.len + b.len, a.bits | (b.bits << a.len)};
}

BitWord prefix(const BitWord& w, int len) {
    if (len > w.len) throw std::invalid_argument("prefix longer than the word");
    uint64_t mask = len >= 64 ? ~0ull : ((1ull << len) - 1ull);
    return BitWord{len, w.bits & mask};
}

BitWord suffix(const BitWord& w, int from) {
    if (from > w.len) throw std::invalid_argument("suffix start past the word");
    return BitWord{w.len - from, w.bits >> from};
}

namespace {

// t-bit field of message m in a full realization; message 0 most significant.
uint32_t field(uint32_t x, int m, int n, int t) {
    return (x >> ((n - 1 - m) * t)) & ((1u << t) - 1u);
}

std::vector<int> mask_members(uint16_t mask, int n) {
    std::vector<int> ms;
    for (int m = 0; m < n; ++m)
        if ((mask >> m) & 1u) ms.push_back(m);
    return ms;
}

// Sender input word: the t-bit fields of the sender's messages, ascending
// message index, first message most significant.
uint32_t sender_input(uint32_t x, const std::vector<int>& members, int n, int t) {
    uint32_t in = 0;
    for (int m : members) in = (in << t) | field(x, m, n, t);
    return in;
}

} // namespace

CodeVerdict verify(const Problem& p, const IndexCode& code) {
    CodeVerdict verdict;
    if (code.t != p.t || code.n != p.n || code.m1 != p.m1 || code.m2 != p.m2) {
        verdict.ok = false;
        verdict.reason = "code dimensions do not match the problem";
        return verdict;
    }
    std::vector<int> mem1 = mask_members(p.m1, p.n);
    std::vector<int> mem2 = mask_members(p.m2, p.n);
    size_t in1 = static_cast<size_t>(1) << (p.t * static_cast<int>(mem1.size()));
    size_t in2 = static_cast<size_t>(1) << (p.t * static_cast<int>(mem2.size()));
    if (code.f1.size() != in1 || code.f2.size() != in2) {
        verdict.ok = false;
        verdict.reason = "encoder table sizes do not match the sender message sets";
        return verdict;
    }
    for (uint32_t w : code.f1)
        if (code.p1 < 32 && (w >> code.p1) != 0) {
            verdict.ok = false;
            verdict.reason = "sender-1 codeword exceeds its length";
            return verdict;
        }
    for (uint32_t w : code.f2)
        if (code.p2 < 32 && (w >> code.p2) != 0) {
            verdict.ok = false;
            verdict.reason = "sender-2 codeword exceeds its length";
            return verdict;
        }

    uint32_t total = 1u << (p.t * p.n);
    for (uint32_t x = 0; x < total; ++x) {
        uint32_t cx1 = code.f1[sender_input(x, mem1, p.n, p.t)];
        uint32_t cx2 = code.f2[sender_input(x, mem2, p.n, p.t)];
        for (uint32_t y = x + 1; y < total; ++y) {
            if (cx1 != code.f1[sender_input(y, mem1, p.n, p.t)]) continue;
            if (cx2 != code.f2[sender_input(y, mem2, p.n, p.t)]) continue;
            for (int r = 0; r < p.n; ++r) {
                if (field(x, r, p.n, p.t) == field(y, r, p.n, p.t)) continue;
                bool agrees = true;
                for (int m = 0; m < p.n; ++m) {
                    if (!((p.side_info[static_cast<size_t>(r)] >> m) & 1u)) continue;
                    if (field(x, m, p.n, p.t) != field(y, m, p.n, p.t)) { agrees = false; break; }
                }
                if (agrees) {
                    verdict.ok = false;
                    verdict.reason = "receiver cannot decode its message";
                    verdict.witness = {r, x, y};
                    return verdict;
                }
            }
        }
    }
    return verdict;
}

CodeVerdict verify_single(const Digraph& d, int t, const SingleSenderCode& code) {
    CodeVerdict verdict;
    if (code.t != t || code.n != d.n ||
        code.table.size() != (static_cast<size_t>(1) << (t * d.n))) {
        verdict.ok = false;
        verdict.reason = "code dimensions do not match the digraph";
        return verdict;
    }
    uint32_t total = 1u << (t * d.n);
    for (uint32_t x = 0; x < total; ++x) {
        for (uint32_t y = x + 1; y < total; ++y) {
            if (code.table[x] != code.table[y]) continue;
            for (int r = 0; r < d.n; ++r) {
                if (field(x, r, d.n, t) == field(y, r, d.n, t)) continue;
                bool agrees = true;
                for (int m = 0; m < d.n; ++m) {
                    if (!d.has_arc(r, m)) continue;
                    if (field(x, m, d.n, t) != field(y, m, d.n, t)) { agrees = false; break; }
                }
                if (agrees) {
                    verdict.ok = false;
                    verdict.reason = "receiver cannot decode its message";
                    verdict.witness = {r, x, y};
                    return verdict;
                }
            }
        }
    }
    return verdict;
}

namespace {

// Assemble the (b1, b3) label of a sender-1 input (or (b2, b3) for sender 2).
// members: the sender's messages ascending; group/common: the partition lists.
std::pair<uint32_t, uint32_t> split_label(uint32_t input, const std::vector<int>& members,
                                          const std::vector<int>& group, const std::vector<int>& common,
                                          int t) {
    std::map<int, uint32_t> fields;
    int k = static_cast<int>(members.size());
    for (int i = 0; i < k; ++i)
        fields[members[static_cast<size_t>(i)]] = (input >> ((k - 1 - i) * t)) & ((1u << t) - 1u);
    uint32_t bg = 0, bc = 0;
    for (int m : group) bg = (bg << t) | fields.at(m);
    for (int m : common) bc = (bc << t) | fields.at(m);
    return {bg, bc};
}

} // namespace

IndexCode coloring_to_code(const Problem& p, const ConfusionGraph& g, const TwoSenderColoring& c) {
    ColoringVerdict cv = validate(p, g, c);
    if (!cv.ok) throw std::invalid_argument("coloring is not proper: " + cv.reason);
    MessagePartition mp = partition(p);

    IndexCode code;
    code.t = p.t;
    code.n = p.n;
    code.m1 = p.m1;
    code.m2 = p.m2;

    // Number colors in first-seen order over ascending label pairs.
    auto numbering = [](const std::vector<int>& j) {
        std::map<int, uint32_t> ids;
        for (int color : j)
            if (!ids.count(color)) ids[color] = static_cast<uint32_t>(ids.size());
        return ids;
    };
    std::map<int, uint32_t> ids1 = numbering(c.j1);
    std::map<int, uint32_t> ids2 = numbering(c.j2);
    code.p1 = ceil_log2(std::max<long long>(1, static_cast<long long>(ids1.size())));
    code.p2 = ceil_log2(std::max<long long>(1, static_cast<long long>(ids2.size())));

    std::vector<int> mem1 = mask_members(p.m1, p.n);
    std::vector<int> mem2 = mask_members(p.m2, p.n);
    code.f1.resize(static_cast<size_t>(1) << (p.t * static_cast<int>(mem1.size())));
    code.f2.resize(static_cast<size_t>(1) << (p.t * static_cast<int>(mem2.size())));
    for (uint32_t in = 0; in < code.f1.size(); ++in) {
        auto [b1, b3] = split_label(in, mem1, mp.d1, mp.d3, p.t);
        code.f1[in] = ids1.at(c.j1[(static_cast<size_t>(b1) << g.bits3()) | b3]);
    }
    for (uint32_t in = 0; in < code.f2.size(); ++in) {
        auto [b2, b3] = split_label(in, mem2, mp.d2, mp.d3, p.t);
        code.f2[in] = ids2.at(c.j2[(static_cast<size_t>(b2) << g.bits3()) | b3]);
    }
    return code;
}

TwoSenderColoring code_to_coloring(const Problem& p, const ConfusionGraph& g, const IndexCode& code) {
    MessagePartition mp = partition(p);
    std::vector<int> mem1 = mask_members(p.m1, p.n);
    std::vector<int> mem2 = mask_members(p.m2, p.n);

    TwoSenderColoring c;
    c.bits1_dom = g.bits1() + g.bits3();
    c.bits2_dom = g.bits2() + g.bits3();
    c.j1.assign(static_cast<size_t>(1) << c.bits1_dom, -1);
    c.j2.assign(static_cast<size_t>(1) << c.bits2_dom, -1);
    for (uint32_t in = 0; in < code.f1.size(); ++in) {
        auto [b1, b3] = split_label(in, mem1, mp.d1, mp.d3, p.t);
        c.j1[(static_cast<size_t>(b1) << g.bits3()) | b3] = static_cast<int>(code.f1[in]);
    }
    for (uint32_t in = 0; in < code.f2.size(); ++in) {
        auto [b2, b3] = split_label(in, mem2, mp.d2, mp.d3, p.t);
        c.j2[(static_cast<size_t>(b2) << g.bits3()) | b3] = static_cast<int>(code.f2[in]);
    }
    return c;
}

SingleSenderCode single_sender_code(const Digraph& d, int t, int max_tn) {
    SingleSenderCode code;
    code.t = t;
    code.n = d.n;
    if (d.n == 0) {
        code.len = 0;
        code.table = {0};
        return code;
    }
    Graph conf = build_confusion(d, t, max_tn);
    ChromaticResult cr = chromatic_number(conf);
    if (!cr.exact) throw std::runtime_error("chromatic number not resolved exactly");
    code.len = ceil_log2(cr.chi());
    code.table.assign(cr.colors.begin(), cr.colors.end());
    return code;
}

SubCodes sub_codes(const Problem& p, const MessagePartition& mp) {
    Digraph d = p.digraph();
    SubCodes sc;
    sc.c1 = single_sender_code(d.induced(mp.p1), p.t);
    sc.c2 = single_sender_code(d.induced(mp.p2), p.t);
    sc.c3 = single_sender_code(d.induced(mp.p3), p.t);
    return sc;
}

namespace {

// The group's code as a word of the full realization (group fields laid out
// ascending, first most significant, matching the sub-digraph relabeling).
BitWord group_word(const SingleSenderCode& sc, uint32_t x, const std::vector<int>& group, int n, int t) {
    uint32_t in = 0;
    for (int m : group) in = (in << t) | field(x, m, n, t);
    return BitWord{sc.len, sc.table[in]};
}

IndexCode assemble(const Problem& p, const MessagePartition& mp, const SubCodes& sc,
                   const std::function<BitWord(const BitWord&, const BitWord&, const BitWord&)>& make1,
                   const std::function<BitWord(const BitWord&, const BitWord&, const BitWord&)>& make2) {
    IndexCode code;
    code.t = p.t;
    code.n = p.n;
    code.m1 = p.m1;
    code.m2 = p.m2;
    std::vector<int> mem1 = mask_members(p.m1, p.n);
    std::vector<int> mem2 = mask_members(p.m2, p.n);
    code.f1.assign(static_cast<size_t>(1) << (p.t * static_cast<int>(mem1.size())), 0);
    code.f2.assign(static_cast<size_t>(1) << (p.t * static_cast<int>(mem2.size())), 0);
    code.p1 = -1;
    code.p2 = -1;
    uint32_t total = 1u << (p.t * p.n);
    for (uint32_t x = 0; x < total; ++x) {
        BitWord w1 = group_word(sc.c1, x, mp.d1, p.n, p.t);
        BitWord w2 = group_word(sc.c2, x, mp.d2, p.n, p.t);
        BitWord w3 = group_word(sc.c3, x, mp.d3, p.n, p.t);
        BitWord c1 = make1(w1, w2, w3);
        BitWord c2 = make2(w1, w2, w3);
        code.f1[sender_input(x, mem1, p.n, p.t)] = static_cast<uint32_t>(c1.bits);
        code.f2[sender_input(x, mem2, p.n, p.t)] = static_cast<uint32_t>(c2.bits);
        code.p1 = c1.len;
        code.p2 = c2.len;
    }
    return code;
}

void require_case(const Problem& p, const MessagePartition& mp, CaseLabel expected) {
    InteractionClass cls = classify(interaction_map(p, mp));
    if (cls.case_label != expected)
        throw std::invalid_argument("construction does not apply to case " +
                                    case_label_name(cls.case_label));
    if (!is_fully_participated(p, mp))
        throw std::invalid_argument("construction requires fully participated interactions");
}

} // namespace

IndexCode construct_case_iib(const Problem& p, const MessagePartition& mp, const SubCodes& sc) {
    require_case(p, mp, CaseLabel::IIB);
    int l1 = sc.c1.len, l2 = sc.c2.len, l3 = sc.c3.len;
    if (l3 >= std::max(l1, l2)) {
        // Split the common code across the senders at position l1. When the
        // common code is the longest, its tail rides along uncoded on S2.
        return assemble(p, mp, sc,
                        [&](const BitWord& w1, const BitWord&, const BitWord& w3) {
                            return xor_pad(prefix(w3, l1), w1);
                        },
                        [&](const BitWord&, const BitWord& w2, const BitWord& w3) {
                            return xor_pad(suffix(w3, l1), w2);
                        });
    }
    if (l3 <= l1) {
        return assemble(p, mp, sc,
                        [&](const BitWord& w1, const BitWord&, const BitWord& w3) {
                            return xor_pad(w3, w1);
                        },
                        [&](const BitWord&, const BitWord& w2, const BitWord&) { return w2; });
    }
    // l3 <= l2: the symmetric arrangement.
    return assemble(p, mp, sc,
                    [&](const BitWord& w1, const BitWord&, const BitWord&) { return w1; },
                    [&](const BitWord&, const BitWord& w2, const BitWord& w3) {
                        return xor_pad(w3, w2);
                    });
}

IndexCode construct_case_iic(const Problem& p, const MessagePartition& mp, const SubCodes& sc) {
    require_case(p, mp, CaseLabel::IIC);
    InteractionDigraph h = interaction_map(p, mp);
    bool cycle_with_one = h.has(1, 3) && h.has(3, 1);
    if (cycle_with_one) {
        return assemble(p, mp, sc,
                        [&](const BitWord& w1, const BitWord&, const BitWord& w3) {
                            return xor_pad(w1, w3);
                        },
                        [&](const BitWord&, const BitWord& w2, const BitWord&) { return w2; });
    }
    // The two-way interaction is between group 2 and the common group.
    return assemble(p, mp, sc,
                    [&](const BitWord& w1, const BitWord&, const BitWord&) { return w1; },
                    [&](const BitWord&, const BitWord& w2, const BitWord& w3) {
                        return xor_pad(w2, w3);
                    });
}

IndexCode construct_case_iid(const Problem& p, const MessagePartition& mp, const SubCodes& sc) {
    require_case(p, mp, CaseLabel::IID);
    return assemble(p, mp, sc,
                    [&](const BitWord& w1, const BitWord&, const BitWord& w3) {
                        return xor_pad(w1, w3);
                    },
                    [&](const BitWord&, const BitWord& w2, const BitWord& w3) {
                        return xor_pad(w2, w3);
                    });
}

namespace {

// Per-output-bit XOR clause detection: bit k of f must equal the XOR of a
// subset of input bits with zero offset.
std::optional<std::vector<std::vector<int>>> linear_clauses(const std::vector<uint32_t>& f,
                                                            int out_bits, int in_bits,
                                                            const std::vector<int>& members,
                                                            int n, int t) {
    if (f.empty() || f[0] != 0) return std::nullopt;
    std::vector<std::vector<int>> clauses;
    // Output bits listed in transmission order (bit i of a word is its
    // (i+1)-th transmitted bit).
    for (int k = 0; k < out_bits; ++k) {
        std::vector<int> coeff_bits;
        for (int b = 0; b < in_bits; ++b)
            if ((f[1u << b] >> k) & 1u) coeff_bits.push_back(b);
        for (uint32_t in = 0; in < f.size(); ++in) {
            uint32_t expect = 0;
            for (int b : coeff_bits) expect ^= (in >> b) & 1u;
            if (((f[in] >> k) & 1u) != expect) return std::nullopt;
        }
        // Translate input bit positions back to message indices (t = 1 only).
        if (t != 1) return std::nullopt;
        std::vector<int> msgs;
        int kcount = static_cast<int>(members.size());
        for (int b : coeff_bits) msgs.push_back(members[static_cast<size_t>(kcount - 1 - b)] + 1);
        std::sort(msgs.begin(), msgs.end());
        clauses.push_back(msgs);
        (void)n;
    }
    return clauses;
}

std::string clause_string(const std::vector<int>& clause) {
    if (clause.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < clause.size(); ++i) {
        if (i) s += "+";
        s += "x" + std::to_string(clause[i]);
    }
    return s;
}

} // namespace

std::optional<std::string> linear_form(const IndexCode& code) {
    std::vector<int> mem1 = mask_members(code.m1, code.n);
    std::vector<int> mem2 = mask_members(code.m2, code.n);
    auto c1 = linear_clauses(code.f1, code.p1, code.t * static_cast<int>(mem1.size()),
                             mem1, code.n, code.t);
    auto c2 = linear_clauses(code.f2, code.p2, code.t * static_cast<int>(mem2.size()),
                             mem2, code.n, code.t);
    if (!c1 || !c2) return std::nullopt;
    std::string s = "{";
    bool first = true;
    for (const auto& cl : *c1) {
        if (!first) s += ", ";
        s += clause_string(cl);
        first = false;
    }
    s += " ; ";
    first = true;
    for (const auto& cl : *c2) {
        if (!first) s += ", ";
        s += clause_string(cl);
        first = false;
    }
    s += "}";
    return s;
}

std::string code_to_json(const IndexCode& code) {
    nlohmann::json j;
    j["t"] = code.t;
    j["n"] = code.n;
    std::vector<int> m1v, m2v;
    for (int m : mask_members(code.m1, code.n)) m1v.push_back(m + 1);
    for (int m : mask_members(code.m2, code.n)) m2v.push_back(m + 1);
    j["m1"] = m1v;
    j["m2"] = m2v;
    j["p1"] = code.p1;
    j["p2"] = code.p2;
    j["f1"] = code.f1;
    j["f2"] = code.f2;
    std::vector<int> mem1 = mask_members(code.m1, code.n);
    std::vector<int> mem2 = mask_members(code.m2, code.n);
    auto l1 = linear_clauses(code.f1, code.p1, code.t * static_cast<int>(mem1.size()),
                             mem1, code.n, code.t);
    auto l2 = linear_clauses(code.f2, code.p2, code.t * static_cast<int>(mem2.size()),
                             mem2, code.n, code.t);
    if (l1 && l2) {
        j["linear1"] = *l1;
        j["linear2"] = *l2;
    }
    return j.dump(2);
}

IndexCode code_from_json(const Problem& p, const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    IndexCode code;
    code.t = j.value("t", p.t);
    code.n = j.value("n", p.n);
    code.m1 = p.m1;
    code.m2 = p.m2;
    code.p1 = j.at("p1").get<int>();
    code.p2 = j.at("p2").get<int>();
    std::vector<int> mem1 = mask_members(p.m1, p.n);
    std::vector<int> mem2 = mask_members(p.m2, p.n);
    size_t in1 = static_cast<size_t>(1) << (p.t * static_cast<int>(mem1.size()));
    size_t in2 = static_cast<size_t>(1) << (p.t * static_cast<int>(mem2.size()));
    auto expand = [&](const nlohmann::json& clauses, const std::vector<int>& members,
                      size_t size) {
        std::vector<uint32_t> f(size, 0);
        int kcount = static_cast<int>(members.size());
        int bit = 0;
        for (const auto& clause : clauses) {
            for (uint32_t in = 0; in < size; ++in) {
                uint32_t v = 0;
                for (const auto& msg : clause) {
                    int m = msg.get<int>() - 1;
                    auto it = std::find(members.begin(), members.end(), m);
                    if (it == members.end())
                        throw std::invalid_argument("linear clause uses a message the sender lacks");
                    int pos = static_cast<int>(it - members.begin());
                    v ^= (in >> (kcount - 1 - pos)) & 1u;
                }
                f[in] |= v << bit;
            }
            ++bit;
        }
        return f;
    };
    if (j.contains("f1")) {
        code.f1 = j.at("f1").get<std::vector<uint32_t>>();
        code.f2 = j.at("f2").get<std::vector<uint32_t>>();
    } else {
        code.f1 = expand(j.at("linear1"), mem1, in1);
        code.f2 = expand(j.at("linear2"), mem2, in2);
    }
    if (code.f1.size() != in1 || code.f2.size() != in2)
        throw std::invalid_argument("encoder table sizes do not match the problem");
    return code;
}

} // namespace tsuic
