/**
 * @file index_code.hpp
 * @brief Two-sender index codes: verification, conversion from colorings,
 *        and the explicit case constructions.
 *
 * A code is a pair of encoder tables. Sender 1 maps the t*|M1| bits it holds
 * to a p1-bit sub-codeword, sender 2 analogously. Decodability is checked
 * information-theoretically: no receiver may see identical side information
 * and identical sub-codewords for two realizations differing in its request.
 */

#ifndef TSUIC_INDEX_CODE_HPP
#define TSUIC_INDEX_CODE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsuic/coloring.hpp"
#include "tsuic/confusion.hpp"
#include "tsuic/problem.hpp"
#include "tsuic/rational.hpp"

namespace tsuic {

/// A fixed-length bit word; bit i of `bits` is the (i+1)-th bit of the word.
struct BitWord {
    int len = 0;
    uint64_t bits = 0;

    bool operator==(const BitWord&) const = default;
};

/// Bitwise XOR with tail zero padding: the shorter word is padded with
/// zeros after its last bit, so the result has length max(|a|, |b|).
BitWord xor_pad(const BitWord& a, const BitWord& b);

/// Concatenation, a first.
BitWord concat(const BitWord& a, const BitWord& b);

/// The first `len` bits of w. Throws if len > w.len.
BitWord prefix(const BitWord& w, int len);

/// The bits of w after position `from`. Throws if from > w.len.
BitWord suffix(const BitWord& w, int from);

/**
 * @brief A two-sender index code over a Problem's dimensions.
 *
 * Encoder inputs enumerate the t-bit fields of the sender's messages in
 * ascending message order, first message most significant.
 */
struct IndexCode {
    int t = 1;
    int n = 0;
    uint16_t m1 = 0, m2 = 0;
    int p1 = 0, p2 = 0;                 ///< sub-codeword lengths in bits
    std::vector<uint32_t> f1;           ///< f1[input] = sender-1 codeword
    std::vector<uint32_t> f2;           ///< f2[input] = sender-2 codeword

    Rational rate() const { return Rational(p1 + p2, t); }
};

/// A single-sender code for a bare digraph; input is the full t*n-bit tuple.
struct SingleSenderCode {
    int t = 1;
    int n = 0;
    int len = 0;
    std::vector<uint32_t> table;
};

struct CodeVerdict {
    bool ok = true;
    std::string reason;
    /// On a decoding failure: (receiver, realization u, realization v).
    std::optional<std::tuple<int, uint32_t, uint32_t>> witness;
};

/// Checks both invariants: each encoder depends only on its sender's
/// messages, and every receiver can decode its request.
CodeVerdict verify(const Problem& p, const IndexCode& code);

/// Decodability of a single-sender code for a bare digraph.
CodeVerdict verify_single(const Digraph& d, int t, const SingleSenderCode& code);

/// Theorem-style conversion: distinct colors become distinct sub-codewords,
/// numbered in first-seen order over ascending label pairs.
IndexCode coloring_to_code(const Problem& p, const ConfusionGraph& g, const TwoSenderColoring& c);

/// The reverse direction: sub-codewords as colors. Always validates when the
/// code verifies.
TwoSenderColoring code_to_coloring(const Problem& p, const ConfusionGraph& g, const IndexCode& code);

/// Optimal single-sender code from a proper coloring of the confusion graph.
SingleSenderCode single_sender_code(const Digraph& d, int t, int max_tn = 16);

/// Optimal sub-codes for D1, D2, D3 of a partitioned problem. An empty
/// sub-digraph yields a zero-length code.
struct SubCodes {
    SingleSenderCode c1, c2, c3;
};
SubCodes sub_codes(const Problem& p, const MessagePartition& mp);

/// XOR-split construction for instances whose private groups both interact
/// with the common group in both directions. Rate max{b3, b1 + b2}.
IndexCode construct_case_iib(const Problem& p, const MessagePartition& mp, const SubCodes& sc);

/// Construction for a single two-way interaction between one private group
/// and the common group. Rate b2 + max{b1, b3} (up to sender swap).
IndexCode construct_case_iic(const Problem& p, const MessagePartition& mp, const SubCodes& sc);

/// Construction with the common code XORed into both senders.
/// Rate max{b1, b3} + max{b2, b3}.
IndexCode construct_case_iid(const Problem& p, const MessagePartition& mp, const SubCodes& sc);

/// JSON round trip. Linear forms (XOR clauses over message indices) expand
/// to tables on load.
std::string code_to_json(const IndexCode& code);
IndexCode code_from_json(const Problem& p, const std::string& json_text);

/// Pretty linear form like "{x1+x3, x2+x3}" when each codeword bit is an XOR
/// of message bits; std::nullopt for nonlinear tables.
std::optional<std::string> linear_form(const IndexCode& code);

} // namespace tsuic

#endif // TSUIC_INDEX_CODE_HPP
