#ifndef FILLINGS_MONODROMY_HPP
#define FILLINGS_MONODROMY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fillings/errors.hpp"
#include "fillings/homology.hpp"
#include "fillings/plumbing.hpp"

namespace fillings {

// Holes sit at the vertices of a regular k-gon, numbered 1..k around it. A
// generator is the right-handed Dehn twist about the convex curve enclosing
// exactly the named holes; bit i-1 of the mask is hole i.
using HoleSet = std::uint32_t;

struct TwistGen {
    HoleSet holes = 0;
};

struct Letter {
    HoleSet holes = 0;
    int sign = 1;  // -1 only transiently, inside lantern-chain replays

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

struct TwistWord {
    int page_holes = 0;
    std::vector<Letter> letters;

    bool positive() const {
        return std::all_of(letters.begin(), letters.end(), [](const Letter& l) { return l.sign > 0; });
    }

    friend bool operator==(const TwistWord&, const TwistWord&) = default;
};

inline HoleSet hole_mask(std::initializer_list<int> holes) {
    HoleSet m = 0;
    for (int h : holes) m |= HoleSet{1} << (h - 1);
    return m;
}

inline std::vector<int> holes_of(HoleSet mask) {
    std::vector<int> out;
    for (int h = 1; mask; ++h, mask >>= 1)
        if (mask & 1) out.push_back(h);
    return out;
}

inline TwistWord make_word(int k, std::initializer_list<std::pair<HoleSet, int>> letters) {
    TwistWord w;
    w.page_holes = k;
    for (auto [mask, exp] : letters)
        for (int i = 0; i < exp; ++i) w.letters.push_back({mask, 1});
    return w;
}

inline void append_power(TwistWord& w, HoleSet mask, int exp) {
    for (int i = 0; i < exp; ++i) w.letters.push_back({mask, 1});
}

// ---- word syntax: D{1,2,3}^2 D{1}^3 ... -----------------------------------

inline std::string format_word(const TwistWord& w) {
    std::ostringstream out;
    size_t i = 0;
    bool first = true;
    while (i < w.letters.size()) {
        size_t j = i;
        while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
        if (!first) out << " ";
        first = false;
        out << "D{";
        auto hs = holes_of(w.letters[i].holes);
        for (size_t t = 0; t < hs.size(); ++t) out << (t ? "," : "") << hs[t];
        out << "}";
        long long exp = static_cast<long long>(j - i) * w.letters[i].sign;
        if (exp != 1) out << "^" << exp;
        i = j;
    }
    return out.str();
}

inline TwistWord parse_word(const std::string& text, int page_holes) {
    TwistWord w;
    w.page_holes = page_holes;
    size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto parse_int = [&]() {
        size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw validation_error("expected an integer at offset " + std::to_string(start));
        return std::stoi(text.substr(start, i - start));
    };
    skip_space();
    while (i < text.size()) {
        if (text[i] != 'D') throw validation_error("expected 'D' at offset " + std::to_string(i));
        ++i;
        if (i >= text.size() || text[i] != '{')
            throw validation_error("expected '{' at offset " + std::to_string(i));
        ++i;
        HoleSet mask = 0;
        while (true) {
            skip_space();
            int h = parse_int();
            if (h < 1 || h > page_holes)
                throw validation_error("hole " + std::to_string(h) + " outside 1.." +
                                       std::to_string(page_holes));
            mask |= HoleSet{1} << (h - 1);
            skip_space();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            break;
        }
        if (i >= text.size() || text[i] != '}')
            throw validation_error("expected '}' at offset " + std::to_string(i));
        ++i;
        long long exp = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            exp = parse_int();
        }
        if (exp == 0) throw validation_error("zero exponent");
        int sign = exp > 0 ? 1 : -1;
        for (long long t = 0; t < std::abs(exp); ++t) w.letters.push_back({mask, sign});
        skip_space();
    }
    return w;
}

// ---- geometry of convex curves ---------------------------------------------

// Number of maximal cyclic runs of the two labels among the holes of a | b.
inline int cyclic_run_count(HoleSet a, HoleSet b, int k) {
    std::vector<int> labels;
    for (int h = 0; h < k; ++h) {
        HoleSet bit = HoleSet{1} << h;
        if (a & bit)
            labels.push_back(0);
        else if (b & bit)
            labels.push_back(1);
    }
    int runs = 0;
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] != labels[(i + 1) % labels.size()]) ++runs;
    return runs == 0 ? 1 : runs;
}

// Twists about convex curves commute exactly when the curves can be made
// disjoint: one hole set nests in the other, or they are disjoint and do not
// alternate around the polygon.
inline bool disjoint(TwistGen a, TwistGen b, int page_holes) {
    if ((a.holes & b.holes) == a.holes || (a.holes & b.holes) == b.holes) return true;
    if (a.holes & b.holes) return false;
    return cyclic_run_count(a.holes, b.holes, page_holes) <= 2;
}

inline bool letters_commute(const Letter& a, const Letter& b, int k) {
    return disjoint(TwistGen{a.holes}, TwistGen{b.holes}, k);
}

// The lantern relation needs A, B, C to sit as three consecutive blocks in
// this cyclic order around the polygon (single run each).
inline bool lantern_arrangement(HoleSet a, HoleSet b, HoleSet c, int k) {
    if (!a || !b || !c) return false;
    if ((a & b) || (a & c) || (b & c)) return false;
    std::vector<int> labels;
    for (int h = 0; h < k; ++h) {
        HoleSet bit = HoleSet{1} << h;
        if (a & bit) labels.push_back(0);
        if (b & bit) labels.push_back(1);
        if (c & bit) labels.push_back(2);
    }
    std::vector<int> runs;
    for (size_t i = 0; i < labels.size(); ++i)
        if (runs.empty() || runs.back() != labels[i]) runs.push_back(labels[i]);
    if (runs.size() > 1 && runs.front() == runs.back()) runs.pop_back();
    if (runs.size() != 3) return false;
    int at = static_cast<int>(std::find(runs.begin(), runs.end(), 0) - runs.begin());
    return runs[static_cast<size_t>((at + 1) % 3)] == 1 && runs[static_cast<size_t>((at + 2) % 3)] == 2;
}

// ---- elementary moves ------------------------------------------------------

enum class MoveKind {
    commute,
    lantern_forward,
    lantern_backward,
    lemma52_forward,
    lemma52_backward,
    insert_pair,  // cancelling pair of twists, used inside lantern-chain replays
    cancel_pair,
};

struct Move {
    MoveKind kind = MoveKind::commute;
    int pos = 0;
    std::vector<HoleSet> params;
};

struct ProofTrace {
    std::vector<Move> moves;
};

// exponent-weighted count of letters enclosing each hole; invariant under all moves
inline std::vector<long long> hole_degree(const TwistWord& w) {
    std::vector<long long> deg(static_cast<size_t>(w.page_holes), 0);
    for (const auto& l : w.letters)
        for (int h : holes_of(l.holes)) deg[static_cast<size_t>(h - 1)] += l.sign;
    return deg;
}

// same, for pairs of holes enclosed together
inline std::vector<long long> pair_degree(const TwistWord& w) {
    int k = w.page_holes;
    std::vector<long long> deg(static_cast<size_t>(k * k), 0);
    for (const auto& l : w.letters) {
        auto hs = holes_of(l.holes);
        for (size_t i = 0; i < hs.size(); ++i)
            for (size_t j = i + 1; j < hs.size(); ++j)
                deg[static_cast<size_t>((hs[i] - 1) * k + (hs[j] - 1))] += l.sign;
    }
    return deg;
}

inline void check_pos(const TwistWord& w, int pos, int span) {
    if (pos < 0 || pos + span > static_cast<int>(w.letters.size()))
        throw pattern_mismatch("move position out of range");
}

inline TwistWord apply_commutation(TwistWord w, int pos) {
    check_pos(w, pos, 2);
    if (!letters_commute(w.letters[static_cast<size_t>(pos)], w.letters[static_cast<size_t>(pos) + 1],
                         w.page_holes))
        throw not_disjoint("letters at position " + std::to_string(pos) + " do not commute");
    std::swap(w.letters[static_cast<size_t>(pos)], w.letters[static_cast<size_t>(pos) + 1]);
    return w;
}

enum class LanternDirection { forward, backward };

// forward: D_A D_B D_C D_{A|B|C} -> D_{A|B} D_{B|C} D_{A|C}
// backward: the inverse, with A, B, C supplied.
inline TwistWord apply_lantern(TwistWord w, int pos, LanternDirection dir, HoleSet a = 0, HoleSet b = 0,
                               HoleSet c = 0) {
    if (dir == LanternDirection::forward) {
        check_pos(w, pos, 4);
        for (int t = 0; t < 4; ++t)
            if (w.letters[static_cast<size_t>(pos + t)].sign != 1)
                throw pattern_mismatch("lantern needs positive letters");
        a = w.letters[static_cast<size_t>(pos)].holes;
        b = w.letters[static_cast<size_t>(pos) + 1].holes;
        c = w.letters[static_cast<size_t>(pos) + 2].holes;
        if (w.letters[static_cast<size_t>(pos) + 3].holes != (a | b | c))
            throw pattern_mismatch("fourth letter is not the union of the first three");
        if (!lantern_arrangement(a, b, c, w.page_holes))
            throw pattern_mismatch("curves are not in lantern position");
        std::vector<Letter> rep{{a | b, 1}, {b | c, 1}, {a | c, 1}};
        w.letters.erase(w.letters.begin() + pos, w.letters.begin() + pos + 4);
        w.letters.insert(w.letters.begin() + pos, rep.begin(), rep.end());
        return w;
    }
    check_pos(w, pos, 3);
    for (int t = 0; t < 3; ++t)
        if (w.letters[static_cast<size_t>(pos + t)].sign != 1)
            throw pattern_mismatch("lantern needs positive letters");
    if (!a || !b || !c) throw pattern_mismatch("backward lantern needs A, B, C");
    if (w.letters[static_cast<size_t>(pos)].holes != (a | b) ||
        w.letters[static_cast<size_t>(pos) + 1].holes != (b | c) ||
        w.letters[static_cast<size_t>(pos) + 2].holes != (a | c))
        throw pattern_mismatch("letters do not match D_{A|B} D_{B|C} D_{A|C}");
    if (!lantern_arrangement(a, b, c, w.page_holes))
        throw pattern_mismatch("curves are not in lantern position");
    std::vector<Letter> rep{{a, 1}, {b, 1}, {c, 1}, {a | b | c, 1}};
    w.letters.erase(w.letters.begin() + pos, w.letters.begin() + pos + 3);
    w.letters.insert(w.letters.begin() + pos, rep.begin(), rep.end());
    return w;
}

// Valid block data for the chained-lantern move: every intermediate lantern
// (B_1|...|B_j, B_0, B_{j+1}) must be in lantern position.
inline bool lemma52_valid(const std::vector<HoleSet>& blocks, int k) {
    if (blocks.size() < 3) return false;
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (!blocks[i]) return false;
        for (size_t j = i + 1; j < blocks.size(); ++j)
            if (blocks[i] & blocks[j]) return false;
    }
    HoleSet v = 0;
    for (size_t j = 1; j + 1 < blocks.size(); ++j) {
        v |= blocks[j];
        if (!lantern_arrangement(v, blocks[0], blocks[j + 1], k)) return false;
    }
    return true;
}

// D_{B0}^{m-1} D_{B1} ... D_{Bm} D_U  <->  D_{B0|B1} ... D_{B0|Bm} D_{B1|...|Bm}
inline TwistWord apply_lemma52(TwistWord w, int pos, LanternDirection dir,
                               const std::vector<HoleSet>& blocks) {
    int m = static_cast<int>(blocks.size()) - 1;
    if (m < 2 || !lemma52_valid(blocks, w.page_holes))
        throw pattern_mismatch("blocks do not support the chained lantern move");
    HoleSet u = 0, v = 0;
    for (size_t i = 0; i < blocks.size(); ++i) u |= blocks[i];
    for (size_t i = 1; i < blocks.size(); ++i) v |= blocks[i];

    std::vector<Letter> left, right;
    for (int i = 0; i < m - 1; ++i) left.push_back({blocks[0], 1});
    for (int i = 1; i <= m; ++i) left.push_back({blocks[static_cast<size_t>(i)], 1});
    left.push_back({u, 1});
    for (int i = 1; i <= m; ++i) right.push_back({blocks[0] | blocks[static_cast<size_t>(i)], 1});
    right.push_back({v, 1});

    const auto& from = dir == LanternDirection::forward ? left : right;
    const auto& to = dir == LanternDirection::forward ? right : left;
    check_pos(w, pos, static_cast<int>(from.size()));
    for (size_t t = 0; t < from.size(); ++t)
        if (!(w.letters[static_cast<size_t>(pos) + t] == from[t]))
            throw pattern_mismatch("letters do not match the chained lantern pattern");
    w.letters.erase(w.letters.begin() + pos, w.letters.begin() + pos + static_cast<long>(from.size()));
    w.letters.insert(w.letters.begin() + pos, to.begin(), to.end());
    return w;
}

inline TwistWord apply_move(TwistWord w, const Move& mv) {
    switch (mv.kind) {
        case MoveKind::commute:
            return apply_commutation(std::move(w), mv.pos);
        case MoveKind::lantern_forward:
            return apply_lantern(std::move(w), mv.pos, LanternDirection::forward);
        case MoveKind::lantern_backward:
            if (mv.params.size() != 3) throw pattern_mismatch("backward lantern needs three parameters");
            return apply_lantern(std::move(w), mv.pos, LanternDirection::backward, mv.params[0],
                                 mv.params[1], mv.params[2]);
        case MoveKind::lemma52_forward:
            return apply_lemma52(std::move(w), mv.pos, LanternDirection::forward, mv.params);
        case MoveKind::lemma52_backward:
            return apply_lemma52(std::move(w), mv.pos, LanternDirection::backward, mv.params);
        case MoveKind::insert_pair: {
            // params: mask, then optionally 1 to put the inverse letter first
            if (mv.params.empty()) throw pattern_mismatch("insert_pair needs a parameter");
            if (mv.pos < 0 || mv.pos > static_cast<int>(w.letters.size()))
                throw pattern_mismatch("insert position out of range");
            int first_sign = mv.params.size() > 1 && mv.params[1] ? -1 : 1;
            w.letters.insert(w.letters.begin() + mv.pos,
                             {Letter{mv.params[0], first_sign}, Letter{mv.params[0], -first_sign}});
            return w;
        }
        case MoveKind::cancel_pair: {
            check_pos(w, mv.pos, 2);
            const auto& x = w.letters[static_cast<size_t>(mv.pos)];
            const auto& y = w.letters[static_cast<size_t>(mv.pos) + 1];
            if (x.holes != y.holes || x.sign + y.sign != 0)
                throw pattern_mismatch("letters do not cancel");
            w.letters.erase(w.letters.begin() + mv.pos, w.letters.begin() + mv.pos + 2);
            return w;
        }
    }
    throw pattern_mismatch("unknown move");
}

inline TwistWord replay(TwistWord w, const ProofTrace& trace) {
    for (const auto& mv : trace.moves) w = apply_move(std::move(w), mv);
    return w;
}

// ---- standard words --------------------------------------------------------

// The open book for the plumbing itself: one twist around all holes, then n_j
// twists around hole j.
inline TwistWord canonical_word(int k, const std::vector<int>& n) {
    if (k < 3) throw validation_error("canonical_word needs at least three holes");
    if (static_cast<int>(n.size()) != k) throw dimension_mismatch("need one exponent per hole");
    TwistWord w;
    w.page_holes = k;
    append_power(w, (HoleSet{1} << k) - 1, 1);
    for (int j = 1; j <= k; ++j) {
        if (n[static_cast<size_t>(j - 1)] < 1) throw validation_error("exponents must be positive");
        append_power(w, HoleSet{1} << (j - 1), n[static_cast<size_t>(j - 1)]);
    }
    return w;
}

namespace detail {

// Letters ordered the way the monodromy lists are written: composite curves by
// descending hole tuples, boundary-parallel single-hole twists last, ascending.
inline bool word_letter_order(HoleSet a, HoleSet b) {
    auto ha = holes_of(a), hb = holes_of(b);
    bool sa = ha.size() == 1, sb = hb.size() == 1;
    if (sa != sb) return sb;
    if (sa) return ha[0] < hb[0];
    std::reverse(ha.begin(), ha.end());
    std::reverse(hb.begin(), hb.end());
    return ha > hb;
}

}  // namespace detail

// Vanishing-cycle word of a filling candidate whose dual graph has only
// length-one arms: one twist per exceptional sphere, around the holes of the
// arms whose classes contain it.
inline TwistWord rep_to_word(const DualShape& shape, const HomRep& rep) {
    for (const auto& arm : shape.arms)
        if (arm.size() != 1)
            throw unsupported_shape("vanishing-cycle words only exist for length-one dual arms");
    int d = shape.arm_count();
    std::vector<std::pair<HoleSet, int>> counts;
    for (int i = 1; i <= rep.basis_size; ++i) {
        HoleSet mask = 0;
        for (int a = 0; a < d; ++a)
            if (rep.classes[static_cast<size_t>(a) + 1][static_cast<size_t>(i)] == -1)
                mask |= HoleSet{1} << a;
        if (!mask) continue;
        bool merged = false;
        for (auto& [m, c] : counts)
            if (m == mask) {
                ++c;
                merged = true;
            }
        if (!merged) counts.push_back({mask, 1});
    }
    std::sort(counts.begin(), counts.end(),
              [](const auto& x, const auto& y) { return detail::word_letter_order(x.first, y.first); });
    TwistWord w;
    w.page_holes = d;
    for (auto& [mask, c] : counts) append_power(w, mask, c);
    return w;
}

// ---- Gay-Mark page data -----------------------------------------------------

struct PageSummary {
    std::vector<int> s;  // weight + valence, vertex order: center then arms outward
    int neck_curves = 0;
    int genus = 0;
    int boundary_components = 0;
};

inline PageSummary gay_mark_page(const StarGraph& g) {
    validate_star_graph(g);
    PageSummary page;
    page.s.push_back(g.central_weight + g.arm_count());
    for (const auto& arm : g.arms)
        for (size_t t = 0; t < arm.size(); ++t) {
            int valence = (t + 1 < arm.size() ? 2 : 1);
            page.s.push_back(arm[t] + valence);
        }
    int total = 0;
    for (size_t i = 0; i < page.s.size(); ++i) {
        if (page.s[i] > 0)
            throw bad_vertex("vertex " + std::to_string(i) + " has weight + valence = " +
                             std::to_string(page.s[i]) + " > 0");
        total += -page.s[i];
    }
    int edges = g.vertex_count() - 1;
    page.neck_curves = edges + total;
    page.genus = 0;
    page.boundary_components = total;
    return page;
}

// ---- the chained lantern relation -------------------------------------------
//
// D_{B0}^{m-1} D_{B1} ... D_{Bm} = D_{B0|B1} ... D_{B0|Bm} D_{B1|...|Bm} D_U^{-1}
// where U is the union of all blocks. The proof performs m-1 lanterns, the
// j-th with A = B_1|...|B_j, B = B_0, C = B_{j+1}; intermediate partial unions
// enter through cancelling pairs.

struct Lemma52Expansion {
    TwistWord left;   // D_{B0}^{m-1} D_{B1} ... D_{Bm}
    TwistWord right;  // D_{B0|B1} ... D_{B0|Bm} D_{B1|...|Bm} D_U^{-1}
    ProofTrace trace;  // replays left * D_U into right with the inverse cancelled
};

namespace detail {

struct TraceBuilder {
    TwistWord word;
    ProofTrace trace;

    void commute(int pos) {
        word = apply_commutation(std::move(word), pos);
        trace.moves.push_back({MoveKind::commute, pos, {}});
    }

    // bubble the letter at `from` down to index `to` (to <= from)
    void move_left(int from, int to) {
        for (int i = from; i > to; --i) commute(i - 1);
    }

    void insert_pair(int pos, HoleSet mask) {
        Move mv{MoveKind::insert_pair, pos, {mask}};
        word = apply_move(std::move(word), mv);
        trace.moves.push_back(mv);
    }

    void cancel_pair(int pos) {
        Move mv{MoveKind::cancel_pair, pos, {}};
        word = apply_move(std::move(word), mv);
        trace.moves.push_back(mv);
    }

    void lantern_forward(int pos) {
        Move mv{MoveKind::lantern_forward, pos, {}};
        word = apply_move(std::move(word), mv);
        trace.moves.push_back(mv);
    }
};

}  // namespace detail

inline Lemma52Expansion lemma52_expand(int page_holes, const std::vector<HoleSet>& blocks) {
    int m = static_cast<int>(blocks.size()) - 1;
    if (m < 2) throw validation_error("need at least three blocks");
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (!blocks[i]) throw validation_error("blocks must be nonempty");
        for (size_t j = i + 1; j < blocks.size(); ++j)
            if (blocks[i] & blocks[j]) throw not_disjoint("blocks overlap");
    }
    HoleSet u = 0, v = 0;
    for (auto b : blocks) u |= b;
    for (size_t i = 1; i < blocks.size(); ++i) v |= blocks[i];

    Lemma52Expansion out;
    out.left.page_holes = out.right.page_holes = page_holes;
    for (int i = 0; i < m - 1; ++i) out.left.letters.push_back({blocks[0], 1});
    for (int i = 1; i <= m; ++i) out.left.letters.push_back({blocks[static_cast<size_t>(i)], 1});
    for (int i = 1; i <= m; ++i)
        out.right.letters.push_back({blocks[0] | blocks[static_cast<size_t>(i)], 1});
    out.right.letters.push_back({v, 1});
    out.right.letters.push_back({u, -1});

    detail::TraceBuilder tb;
    tb.word = out.left;
    tb.word.letters.push_back({u, 1});

    // [B0 x (m-1), B1, ..., Bm, U] -> bring B1 to the front
    tb.move_left(m - 1, 0);
    // invariant entering round j (1-based), with base = |done|:
    //   done ++ [V_j, B0 x (m-j), B_{j+1}, ..., B_m, U]
    // done = [B0|B1, ..., B0|B_j, (B0|V_j)^{-1}] for j >= 2, empty for j = 1
    int base = 0;
    HoleSet vj = blocks[1];
    for (int j = 1; j <= m - 1; ++j) {
        tb.move_left(base + m - j + 1, base + 2);
        if (j < m - 1) {
            HoleSet partial = blocks[0] | vj | blocks[static_cast<size_t>(j) + 1];
            tb.insert_pair(base + 3, partial);
            tb.lantern_forward(base);
            // ... B0|V_j, B0|B_{j+1}, V_{j+1}, partial^{-1}, B0 x (m-j-1), ...
            if (j >= 2) {
                tb.cancel_pair(base - 1);
                tb.commute(base);
            } else {
                tb.commute(base + 2);
            }
            base = j + 2;
        } else {
            tb.lantern_forward(base);
            if (m >= 3) tb.cancel_pair(base - 1);
        }
        vj |= blocks[static_cast<size_t>(j) + 1];
    }
    if (!(tb.word.letters ==
          std::vector<Letter>(out.right.letters.begin(), out.right.letters.end() - 1)))
        throw error("chained lantern replay went wrong");
    out.trace = std::move(tb.trace);
    return out;
}

inline Move inverse_move(const Move& mv, const TwistWord& pre) {
    switch (mv.kind) {
        case MoveKind::commute:
            return mv;
        case MoveKind::lantern_forward: {
            Move inv{MoveKind::lantern_backward, mv.pos, {}};
            inv.params = {pre.letters[static_cast<size_t>(mv.pos)].holes,
                          pre.letters[static_cast<size_t>(mv.pos) + 1].holes,
                          pre.letters[static_cast<size_t>(mv.pos) + 2].holes};
            return inv;
        }
        case MoveKind::lantern_backward:
            return Move{MoveKind::lantern_forward, mv.pos, {}};
        case MoveKind::lemma52_forward:
            return Move{MoveKind::lemma52_backward, mv.pos, mv.params};
        case MoveKind::lemma52_backward:
            return Move{MoveKind::lemma52_forward, mv.pos, mv.params};
        case MoveKind::insert_pair:
            return Move{MoveKind::cancel_pair, mv.pos, {}};
        case MoveKind::cancel_pair: {
            HoleSet inverse_first = pre.letters[static_cast<size_t>(mv.pos)].sign < 0 ? 1 : 0;
            return Move{MoveKind::insert_pair, mv.pos,
                        {pre.letters[static_cast<size_t>(mv.pos)].holes, inverse_first}};
        }
    }
    throw pattern_mismatch("unknown move");
}

// ---- word equivalence -------------------------------------------------------
//
// Search states are commutation classes of positive words, represented by the
// lexicographically least linearization; moves between classes are lanterns
// and chained lanterns applied wherever commutations can expose the pattern.

namespace detail {

using Seq = std::vector<HoleSet>;

inline Seq to_seq(const TwistWord& w) {
    Seq s;
    for (const auto& l : w.letters) {
        if (l.sign != 1) throw validation_error("word must be positive");
        s.push_back(l.holes);
    }
    return s;
}

inline TwistWord to_word(const Seq& s, int k) {
    TwistWord w;
    w.page_holes = k;
    for (auto m : s) w.letters.push_back({m, 1});
    return w;
}

inline Seq normal_form_seq(const Seq& w, int k) {
    Seq rest = w, out;
    while (!rest.empty()) {
        size_t best = rest.size();
        for (size_t i = 0; i < rest.size(); ++i) {
            bool eligible = true;
            for (size_t j = 0; j < i && eligible; ++j)
                eligible = disjoint(TwistGen{rest[j]}, TwistGen{rest[i]}, k);
            if (eligible && (best == rest.size() || rest[i] < rest[best])) best = i;
        }
        out.push_back(rest[best]);
        rest.erase(rest.begin() + static_cast<long>(best));
    }
    return out;
}

// adjacent commuting swaps turning a into b; both must linearize the same trace
inline std::vector<Move> commutation_path(Seq a, const Seq& b, int k) {
    if (a.size() != b.size()) throw error("commutation path between words of different length");
    std::vector<Move> moves;
    for (size_t i = 0; i < b.size(); ++i) {
        size_t j = i;
        while (j < a.size() && a[j] != b[i]) ++j;
        if (j == a.size()) throw error("words are not commutation-equivalent");
        for (; j > i; --j) {
            if (!disjoint(TwistGen{a[j - 1]}, TwistGen{a[j]}, k))
                throw error("words are not commutation-equivalent");
            std::swap(a[j - 1], a[j]);
            moves.push_back({MoveKind::commute, static_cast<int>(j) - 1, {}});
        }
    }
    return moves;
}

// forced-before relation as bitmasks (length capped at 64 letters)
inline std::vector<std::uint64_t> dependence_closure(const Seq& w, int k) {
    size_t n = w.size();
    std::vector<std::uint64_t> reach(n, 0);
    for (size_t i = n; i-- > 0;) {
        std::uint64_t mask = 0;
        for (size_t j = i + 1; j < n; ++j)
            if (!disjoint(TwistGen{w[i]}, TwistGen{w[j]}, k)) mask |= std::uint64_t{1} << j | reach[j];
        reach[i] = mask;
    }
    return reach;
}

struct SearchStep {
    Seq pre;         // linearization the primitive applies to
    Move primitive;  // lantern / chained lantern move
    Seq post;
};

// Try to schedule the chosen letters consecutively in pattern order; on
// success return the pre/post linearizations of the rewritten class.
inline std::optional<SearchStep> schedule(const Seq& w, const std::vector<std::uint64_t>& reach,
                                          const std::vector<size_t>& chosen, const Move& primitive,
                                          const Seq& replacement) {
    auto forced = [&](size_t x, size_t y) {  // x forced before y
        return x < y && (reach[x] >> y & 1);
    };
    for (size_t a = 0; a < chosen.size(); ++a)
        for (size_t b = a + 1; b < chosen.size(); ++b)
            if (forced(chosen[b], chosen[a])) return std::nullopt;
    std::vector<bool> in_tuple(w.size(), false);
    for (size_t t : chosen) in_tuple[t] = true;
    Seq before, after;
    std::vector<size_t> before_pos;
    for (size_t z = 0; z < w.size(); ++z) {
        if (in_tuple[z]) continue;
        bool lo = false, hi = false;
        for (size_t t : chosen) {
            lo |= forced(t, z);
            hi |= forced(z, t);
        }
        if (lo && hi) return std::nullopt;
        (hi ? before : after).push_back(w[z]);
    }
    SearchStep step;
    step.pre = before;
    for (size_t t : chosen) step.pre.push_back(w[t]);
    step.pre.insert(step.pre.end(), after.begin(), after.end());
    step.post = before;
    step.post.insert(step.post.end(), replacement.begin(), replacement.end());
    step.post.insert(step.post.end(), after.begin(), after.end());
    step.primitive = primitive;
    step.primitive.pos = static_cast<int>(before.size());
    return step;
}

// blocks sorted by cyclic position starting just after the pivot block
inline std::vector<HoleSet> cyclic_block_order(HoleSet pivot, std::vector<HoleSet> blocks, int k) {
    int anchor = 0;
    for (int h = k - 1; h >= 0; --h)
        if (pivot >> h & 1) {
            anchor = h;
            break;
        }
    auto start = [&](HoleSet b) {
        for (int s = 1; s <= k; ++s)
            if (b >> ((anchor + s) % k) & 1) return s;
        return k + 1;
    };
    std::sort(blocks.begin(), blocks.end(), [&](HoleSet x, HoleSet y) { return start(x) < start(y); });
    return blocks;
}

inline void enumerate_steps(const Seq& w, int k, std::vector<SearchStep>& out) {
    size_t n = w.size();
    if (n > 64) return;
    auto reach = dependence_closure(w, k);
    auto try_step = [&](const std::vector<size_t>& chosen, const Move& mv, const Seq& replacement) {
        if (auto step = schedule(w, reach, chosen, mv, replacement)) out.push_back(std::move(*step));
    };

    std::map<HoleSet, std::vector<size_t>> occ;
    for (size_t i = 0; i < n; ++i) occ[w[i]].push_back(i);

    // lanterns, both directions
    for (size_t p1 = 0; p1 < n; ++p1)
        for (size_t p2 = 0; p2 < n; ++p2)
            for (size_t p3 = 0; p3 < n; ++p3) {
                if (p1 == p2 || p1 == p3 || p2 == p3) continue;
                HoleSet x = w[p1], y = w[p2], z = w[p3];
                if (lantern_arrangement(x, y, z, k)) {
                    auto it = occ.find(x | y | z);
                    if (it != occ.end())
                        for (size_t p4 : it->second) {
                            if (p4 == p1 || p4 == p2 || p4 == p3) continue;
                            try_step({p1, p2, p3, p4}, {MoveKind::lantern_forward, 0, {}},
                                     {x | y, y | z, x | z});
                        }
                }
                HoleSet b = x & y, a = x & z, c = y & z;
                if (a && b && c && !(a & b) && !(a & c) && !(b & c) && x == (a | b) && y == (b | c) &&
                    z == (a | c) && lantern_arrangement(a, b, c, k))
                    try_step({p1, p2, p3}, {MoveKind::lantern_backward, 0, {a, b, c}},
                             {a, b, c, a | b | c});
            }

    // chained lanterns; the blocks are recovered from the letters
    std::vector<HoleSet> distinct;
    for (const auto& [mask, _] : occ) distinct.push_back(mask);
    for (HoleSet b0 : distinct) {
        // forward: B0 x (m-1), B1..Bm, U present
        std::vector<HoleSet> companions;
        for (HoleSet m : distinct)
            if (m != b0 && !(m & b0)) companions.push_back(m);
        size_t cn = companions.size();
        if (cn <= 20)
            for (std::uint32_t sub = 0; sub < (1u << cn); ++sub) {
                int m = __builtin_popcount(sub);
                if (m < 3 || static_cast<size_t>(m - 1) > occ[b0].size()) continue;
                std::vector<HoleSet> picks;
                HoleSet v = 0;
                bool ok = true;
                for (size_t i = 0; i < cn && ok; ++i)
                    if (sub >> i & 1) {
                        ok = !(v & companions[i]);
                        v |= companions[i];
                        picks.push_back(companions[i]);
                    }
                if (!ok || !occ.count(v | b0)) continue;
                auto ordered = cyclic_block_order(b0, picks, k);
                std::vector<HoleSet> blocks{b0};
                for (auto it = ordered.rbegin(); it != ordered.rend(); ++it) blocks.push_back(*it);
                if (!lemma52_valid(blocks, k)) continue;

                std::vector<size_t> chosen;
                for (int i = 0; i < m - 1; ++i) chosen.push_back(occ[b0][static_cast<size_t>(i)]);
                bool distinct_pos = true;
                for (size_t i = 1; i < blocks.size(); ++i) chosen.push_back(occ[blocks[i]][0]);
                size_t upos = occ[v | b0][0];
                for (size_t t : chosen) distinct_pos &= t != upos;
                if (!distinct_pos) continue;
                chosen.push_back(upos);
                Seq replacement;
                for (size_t i = 1; i < blocks.size(); ++i) replacement.push_back(b0 | blocks[i]);
                replacement.push_back(v);
                try_step(chosen, {MoveKind::lemma52_forward, 0, blocks}, replacement);
            }

        // backward: B0|B1 .. B0|Bm, V present, with b0 a candidate pairwise core
        std::vector<HoleSet> covers;
        for (HoleSet m : distinct)
            if ((m & b0) == b0 && m != b0) covers.push_back(m);
        size_t cv = covers.size();
        if (cv <= 20)
            for (std::uint32_t sub = 0; sub < (1u << cv); ++sub) {
                int m = __builtin_popcount(sub);
                if (m < 3) continue;
                std::vector<HoleSet> picks;
                HoleSet v = 0;
                bool ok = true;
                for (size_t i = 0; i < cv && ok; ++i)
                    if (sub >> i & 1) {
                        HoleSet body = covers[i] & ~b0;
                        ok = body && !(v & body);
                        v |= body;
                        picks.push_back(body);
                    }
                if (!ok || !occ.count(v)) continue;
                auto ordered = cyclic_block_order(b0, picks, k);
                std::vector<HoleSet> blocks{b0};
                for (auto it = ordered.rbegin(); it != ordered.rend(); ++it) blocks.push_back(*it);
                if (!lemma52_valid(blocks, k)) continue;

                std::vector<size_t> chosen;
                for (size_t i = 1; i < blocks.size(); ++i) chosen.push_back(occ[b0 | blocks[i]][0]);
                size_t vpos = occ[v][0];
                bool distinct_pos = true;
                for (size_t t : chosen) distinct_pos &= t != vpos;
                if (!distinct_pos) continue;
                chosen.push_back(vpos);
                Seq replacement;
                for (int i = 0; i < m - 1; ++i) replacement.push_back(b0);
                for (size_t i = 1; i < blocks.size(); ++i) replacement.push_back(blocks[i]);
                replacement.push_back(v | b0);
                try_step(chosen, {MoveKind::lemma52_backward, 0, blocks}, replacement);
            }
    }
}

}  // namespace detail

enum class ProofStatus { proven, disproven, unknown };

struct ProofResult {
    ProofStatus status = ProofStatus::unknown;
    ProofTrace trace;
    std::string separating_invariant;
};

inline ProofResult prove_equivalent(const TwistWord& w1, const TwistWord& w2,
                                    long long budget = 100000) {
    if (w1.page_holes != w2.page_holes)
        throw validation_error("words live on pages with different hole counts");
    int k = w1.page_holes;
    if (hole_degree(w1) != hole_degree(w2)) return {ProofStatus::disproven, {}, "hole_degree"};
    if (pair_degree(w1) != pair_degree(w2)) return {ProofStatus::disproven, {}, "pair_degree"};

    using detail::Seq;
    Seq s1 = detail::to_seq(w1), s2 = detail::to_seq(w2);
    Seq n1 = detail::normal_form_seq(s1, k), n2 = detail::normal_form_seq(s2, k);
    if (n1 == n2) {
        ProofResult res{ProofStatus::proven, {}, {}};
        auto path = detail::commutation_path(s1, s2, k);
        res.trace.moves = std::move(path);
        return res;
    }

    struct Rec {
        Seq parent;
        detail::SearchStep step;
    };
    std::map<Seq, Rec> seen[2];
    std::vector<Seq> frontier[2];
    seen[0][n1] = {};
    seen[1][n2] = {};
    frontier[0].push_back(n1);
    frontier[1].push_back(n2);
    long long states = 2;
    std::optional<Seq> meet;

    while (!meet && (!frontier[0].empty() || !frontier[1].empty()) && states < budget) {
        int side = 0;
        if (frontier[0].empty() || (!frontier[1].empty() && frontier[1].size() < frontier[0].size()))
            side = 1;
        std::vector<Seq> next;
        for (const auto& state : frontier[side]) {
            std::vector<detail::SearchStep> steps;
            detail::enumerate_steps(state, k, steps);
            for (auto& step : steps) {
                Seq child = detail::normal_form_seq(step.post, k);
                if (seen[side].count(child)) continue;
                seen[side][child] = {state, std::move(step)};
                ++states;
                if (seen[1 - side].count(child)) {
                    meet = child;
                    break;
                }
                next.push_back(child);
                if (states >= budget) break;
            }
            if (meet || states >= budget) break;
        }
        if (meet) break;
        frontier[side] = std::move(next);
        if (frontier[0].empty() && frontier[1].empty()) break;
    }
    if (!meet) return {ProofStatus::unknown, {}, {}};

    // stitch the two half-paths into one replayable trace from w1 to w2
    auto chain_of = [&](int side) {
        std::vector<detail::SearchStep> chain;
        Seq at = *meet;
        while (true) {
            const auto& rec = seen[side].at(at);
            if (rec.parent.empty() && rec.step.pre.empty()) break;
            chain.push_back(rec.step);
            at = rec.parent;
        }
        std::reverse(chain.begin(), chain.end());
        return chain;
    };
    auto left = chain_of(0);
    auto right = chain_of(1);

    ProofResult res{ProofStatus::proven, {}, {}};
    Seq cur = s1;
    auto emit_commutes = [&](const Seq& target) {
        auto path = detail::commutation_path(cur, target, k);
        res.trace.moves.insert(res.trace.moves.end(), path.begin(), path.end());
        cur = target;
    };
    for (const auto& step : left) {
        emit_commutes(step.pre);
        res.trace.moves.push_back(step.primitive);
        cur = step.post;
    }
    for (auto it = right.rbegin(); it != right.rend(); ++it) {
        emit_commutes(it->post);
        res.trace.moves.push_back(inverse_move(it->primitive, detail::to_word(it->pre, k)));
        cur = it->pre;
    }
    emit_commutes(s2);
    return res;
}

// Prove a chain of words pairwise equivalent and concatenate the traces; used
// to replay the scripted proof sequences.
inline ProofResult prove_equivalent_via(const std::vector<TwistWord>& chain, long long budget = 100000) {
    if (chain.size() < 2) throw validation_error("need at least two words");
    ProofResult total{ProofStatus::proven, {}, {}};
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        auto link = prove_equivalent(chain[i], chain[i + 1], budget);
        if (link.status != ProofStatus::proven) return link;
        total.trace.moves.insert(total.trace.moves.end(), link.trace.moves.begin(),
                                 link.trace.moves.end());
    }
    return total;
}

// ---- the monodromy words of section-five fillings ---------------------------

// Variants a..e match the handlebody pictures for k = 4, 5; exponents are the
// arm parameters n_j. Throws when some n_j is below the variant's threshold.
inline TwistWord filling_word(int k, char variant, const std::vector<int>& n) {
    if (static_cast<int>(n.size()) != k) throw dimension_mismatch("need one n per arm");
    auto D = [&](std::initializer_list<int> holes) { return hole_mask(holes); };
    TwistWord w;
    w.page_holes = k;
    auto tail = [&](std::vector<int> drop) {
        for (int j = 1; j <= k; ++j) {
            int e = n[static_cast<size_t>(j - 1)] - drop[static_cast<size_t>(j - 1)];
            if (e < 0)
                throw validation_error("variant needs n_" + std::to_string(j) + " >= " +
                                       std::to_string(drop[static_cast<size_t>(j - 1)]));
            append_power(w, hole_mask({j}), e);
        }
    };
    if (k == 4) {
        switch (variant) {
            case 'a':
                for (auto m : {D({3, 4}), D({2, 4}), D({1, 4}), D({2, 3}), D({1, 3}), D({1, 2})})
                    append_power(w, m, 1);
                tail({2, 2, 2, 2});
                return w;
            case 'b':
                for (auto m : {D({3, 4}), D({2, 4}), D({1, 4}), D({1, 2, 3})}) append_power(w, m, 1);
                tail({1, 1, 1, 2});
                return w;
            case 'c':
                append_power(w, D({1, 2, 3, 4}), 1);
                tail({0, 0, 0, 0});
                return w;
            default:
                break;
        }
    }
    if (k == 5) {
        switch (variant) {
            case 'a':
                for (auto m : {D({4, 5}), D({3, 5}), D({3, 4}), D({2, 5}), D({1, 5}), D({2, 4}),
                               D({1, 4}), D({2, 3}), D({1, 3}), D({1, 2})})
                    append_power(w, m, 1);
                tail({3, 3, 3, 3, 3});
                return w;
            case 'b':
                for (auto m : {D({4, 5}), D({3, 5}), D({3, 4}), D({2, 5}), D({1, 5}), D({2, 4}),
                               D({1, 4}), D({1, 2, 3})})
                    append_power(w, m, 1);
                tail({2, 2, 2, 3, 3});
                return w;
            case 'c':
                for (auto m : {D({4, 5}), D({3, 5}), D({2, 5}), D({1, 5}), D({1, 2, 3, 4})})
                    append_power(w, m, 1);
                tail({1, 1, 1, 1, 3});
                return w;
            case 'd':
                for (auto m : {D({3, 4, 5}), D({2, 5}), D({1, 5}), D({2, 4}), D({1, 4}), D({1, 2, 3})})
                    append_power(w, m, 1);
                tail({2, 2, 1, 2, 2});
                return w;
            case 'e':
                append_power(w, D({1, 2, 3, 4, 5}), 1);
                tail({0, 0, 0, 0, 0});
                return w;
            default:
                break;
        }
    }
    throw validation_error("no such filling word");
}

// The proof sequences used to identify the boundary open books: each
// consecutive pair differs by commutations plus one lantern or chained lantern.
inline std::vector<std::vector<TwistWord>> section5_proof_chains(int k, const std::vector<int>& n) {
    std::vector<std::vector<TwistWord>> chains;
    if (k == 4) {
        chains.push_back({filling_word(4, 'a', n), filling_word(4, 'b', n), filling_word(4, 'c', n)});
    } else if (k == 5) {
        chains.push_back({filling_word(5, 'a', n), filling_word(5, 'b', n), filling_word(5, 'c', n),
                          filling_word(5, 'e', n)});
        chains.push_back({filling_word(5, 'a', n), filling_word(5, 'd', n)});
    }
    return chains;
}

}  // namespace fillings

#endif
