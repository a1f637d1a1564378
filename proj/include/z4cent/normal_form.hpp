#pragma once

/**
 * @file normal_form.hpp
 * @brief Normal forms for the group <D, T | R1..R5> of order 384.
 *
 * Every element is written in exactly one of eight shapes:
 *
 *   W1  1
 *   W2  D^n1
 *   W3  T^n2
 *   W4  D^n3 T^n4
 *   W5  T^p1 D^n5
 *   W6  D^n6 T^p2 D^n7
 *   W7  T D^e1 T^p3
 *   W8  D^n8 T D^e2 T^p4
 *
 * with n in {1..7}, p in {1,3,5,7}, e in {2,4,6}.
 *
 * Multiplication by a letter is done symbolically. Since T^2 is central,
 * a word is held as a central power T^c (c even) times an alternating word
 * D^a0 T D^a1 T ... T D^ak. The alternating part is rewritten with
 *
 *   T D^m T = T^(b-1) D^(8-m) T D^(8-m),  b = m+2      (m odd; R4..R7)
 *   T D^m   = T^(b-3) D^(8-m) T D^(8-m) T             (m odd, trailing)
 *   (T D^e T) D^f = D^f (T D^e T)                       (e, f even; R8)
 *   T T = T^2, D^a D^b = D^(a+b)                        (R1..R3)
 *
 * until at most two T's remain, the middle exponent is in {2,4,6} and
 * the trailing D exponent is zero.
 */

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "cyc_matrix.hpp"
#include "error.hpp"
#include "generators.hpp"
#include "word.hpp"

namespace z4cent {

enum class Shape { W1 = 1, W2, W3, W4, W5, W6, W7, W8 };

inline int shape_index(Shape s) { return static_cast<int>(s); }

struct NormalWord {
    Shape shape = Shape::W1;
    std::vector<int> exponents;

    friend bool operator==(const NormalWord&, const NormalWord&) = default;
    friend auto operator<=>(const NormalWord& a, const NormalWord& b) {
        if (a.shape != b.shape) return shape_index(a.shape) <=> shape_index(b.shape);
        return a.exponents <=> b.exponents;
    }

    /// "W6(7,3,7)"
    [[nodiscard]] std::string tag() const {
        std::string out = "W" + std::to_string(shape_index(shape)) + "(";
        for (std::size_t k = 0; k < exponents.size(); ++k) {
            if (k) out += ',';
            out += std::to_string(exponents[k]);
        }
        return out + ")";
    }

    [[nodiscard]] Word to_word() const {
        const auto& e = exponents;
        switch (shape) {
            case Shape::W1: return {};
            case Shape::W2: return {{Letter::D, e[0]}};
            case Shape::W3: return {{Letter::T, e[0]}};
            case Shape::W4: return {{Letter::D, e[0]}, {Letter::T, e[1]}};
            case Shape::W5: return {{Letter::T, e[0]}, {Letter::D, e[1]}};
            case Shape::W6: return {{Letter::D, e[0]}, {Letter::T, e[1]}, {Letter::D, e[2]}};
            case Shape::W7: return {{Letter::T, 1}, {Letter::D, e[0]}, {Letter::T, e[1]}};
            case Shape::W8: return {{Letter::D, e[0]}, {Letter::T, 1}, {Letter::D, e[1]}, {Letter::T, e[2]}};
        }
        return {};
    }

    [[nodiscard]] std::string to_string() const { return format_word(to_word()); }
};

namespace detail {

enum class Range { Any, Odd, Even };

inline bool in_range(int v, Range r) {
    switch (r) {
        case Range::Any: return v >= 1 && v <= 7;
        case Range::Odd: return v == 1 || v == 3 || v == 5 || v == 7;
        case Range::Even: return v == 2 || v == 4 || v == 6;
    }
    return false;
}

inline std::vector<Range> shape_ranges(Shape s) {
    using R = Range;
    switch (s) {
        case Shape::W1: return {};
        case Shape::W2: return {R::Any};
        case Shape::W3: return {R::Any};
        case Shape::W4: return {R::Any, R::Any};
        case Shape::W5: return {R::Odd, R::Any};
        case Shape::W6: return {R::Any, R::Odd, R::Any};
        case Shape::W7: return {R::Even, R::Odd};
        case Shape::W8: return {R::Any, R::Even, R::Odd};
    }
    return {};
}

inline int mod8(long v) { return static_cast<int>(((v % 8) + 8) % 8); }

/// T^central * D^a[0] T D^a[1] T ... T D^a[k]; central is even.
struct Alternating {
    int central = 0;
    std::vector<int> d;  // always non-empty

    [[nodiscard]] std::size_t t_count() const { return d.size() - 1; }
};

/// T D^m T = T^(beta-1) D^alpha T D^gamma for odd m (R4, R6, R5, R7).
struct OddRewrite {
    int alpha;
    int beta;
    int gamma;
};

inline OddRewrite odd_rewrite(int m) {
    switch (m) {
        case 1: return {7, 3, 7};  // TDT = D^7 T^3 D^7
        case 3: return {5, 5, 5};  // TD^3T = D^5 T^5 D^5
        case 5: return {3, 7, 3};  // TD^5T = D^3 T^7 D^3
        case 7: return {1, 1, 1};  // TD^7T = D T D
        default: break;
    }
    throw Error("odd_rewrite called with even exponent");
}

inline void normalize(Alternating& w) {
    // Every rewrite strictly shrinks (t_count, sum of exponents) in a
    // well-founded order except the trailing rule, which is applied at most
    // once per pass before an interior rewrite removes the extra T.
    for (int guard = 0; guard < 1000; ++guard) {
        for (auto& a : w.d) a = mod8(a);
        w.central = mod8(w.central);
        const std::size_t k = w.t_count();

        bool rewrote = false;
        for (std::size_t j = 1; j + 1 < w.d.size() && !rewrote; ++j) {
            const int m = w.d[j];
            if (m == 0) {
                // T T -> T^2
                w.d[j - 1] += w.d[j + 1];
                w.d.erase(w.d.begin() + static_cast<long>(j), w.d.begin() + static_cast<long>(j) + 2);
                w.central += 2;
                rewrote = true;
            } else if (m % 2 == 1) {
                const OddRewrite r = odd_rewrite(m);
                w.d[j - 1] += r.alpha;
                w.d[j + 1] += r.gamma;
                w.d.erase(w.d.begin() + static_cast<long>(j));
                w.central += r.beta - 1;
                rewrote = true;
            }
        }
        if (rewrote) continue;

        // All interior exponents are in {2,4,6}.
        if (k >= 3) {
            // D^a0 T D^e1 T D^e2 T ... : move D^e2 in front of (T D^e1 T), then T T = T^2.
            const int e2 = w.d[2];
            w.d[0] += e2;
            w.d[1] += w.d[3];
            w.d.erase(w.d.begin() + 2, w.d.begin() + 4);
            w.central += 2;
            continue;
        }
        if (k == 2 && w.d[2] != 0) {
            if (w.d[2] % 2 == 0) {
                // (T D^e T) D^f = D^f (T D^e T)
                w.d[0] += w.d[2];
                w.d[2] = 0;
            } else {
                // trailing T D^m -> T^(beta-3) D^alpha T D^gamma T
                const OddRewrite r = odd_rewrite(w.d[2]);
                w.d[1] += r.alpha;
                w.d[2] = r.gamma;
                w.d.push_back(0);
                w.central += r.beta - 3;
            }
            continue;
        }
        return;
    }
    throw Error("normal form rewriting did not terminate");
}

inline Alternating to_alternating(const NormalWord& w) {
    const auto& e = w.exponents;
    // Odd T exponents split as T * T^(p-1); even ones are entirely central.
    switch (w.shape) {
        case Shape::W1: return {0, {0}};
        case Shape::W2: return {0, {e[0]}};
        case Shape::W3:
            if (e[0] % 2 == 0) return {e[0], {0}};
            return {e[0] - 1, {0, 0}};
        case Shape::W4:
            if (e[1] % 2 == 0) return {e[1], {e[0]}};
            return {e[1] - 1, {e[0], 0}};
        case Shape::W5: return {e[0] - 1, {0, e[1]}};
        case Shape::W6: return {e[1] - 1, {e[0], e[2]}};
        case Shape::W7: return {e[1] - 1, {0, e[0], 0}};
        case Shape::W8: return {e[2] - 1, {e[0], e[1], 0}};
    }
    return {};
}

inline NormalWord from_alternating(const Alternating& w) {
    const int c = w.central;
    const auto& d = w.d;
    switch (w.t_count()) {
        case 0:
            if (d[0] == 0) return c == 0 ? NormalWord{Shape::W1, {}} : NormalWord{Shape::W3, {c}};
            return c == 0 ? NormalWord{Shape::W2, {d[0]}} : NormalWord{Shape::W4, {d[0], c}};
        case 1:
            if (d[0] == 0 && d[1] == 0) return {Shape::W3, {c + 1}};
            if (d[1] == 0) return {Shape::W4, {d[0], c + 1}};
            if (d[0] == 0) return {Shape::W5, {c + 1, d[1]}};
            return {Shape::W6, {d[0], c + 1, d[1]}};
        case 2:
            if (d[2] == 0 && d[1] % 2 == 0 && d[1] != 0) {
                if (d[0] == 0) return {Shape::W7, {d[1], c + 1}};
                return {Shape::W8, {d[0], d[1], c + 1}};
            }
            break;
        default: break;
    }
    throw Error("alternating word is not reduced");
}

}  // namespace detail

/// Throws InvalidWord unless the exponents match the shape's ranges.
inline void validate(const NormalWord& w) {
    const auto ranges = detail::shape_ranges(w.shape);
    if (ranges.size() != w.exponents.size()) {
        throw InvalidWord("wrong exponent count for " + w.tag());
    }
    for (std::size_t k = 0; k < ranges.size(); ++k) {
        if (!detail::in_range(w.exponents[k], ranges[k])) {
            throw InvalidWord("exponent out of range in " + w.tag());
        }
    }
}

/// Normal form of letter * w (Side::Left) or w * letter (Side::Right).
inline NormalWord nf_multiply(const NormalWord& w, Letter letter, Side side) {
    validate(w);
    detail::Alternating alt = detail::to_alternating(w);
    auto& d = alt.d;
    if (side == Side::Right) {
        if (letter == Letter::D) {
            d.back() += 1;
        } else {
            d.push_back(0);
        }
    } else {
        if (letter == Letter::D) {
            d.front() += 1;
        } else {
            d.insert(d.begin(), 0);
        }
    }
    detail::normalize(alt);
    return detail::from_alternating(alt);
}

/// Normal form of an arbitrary word, folding letters in from the right.
inline NormalWord normal_form(const Word& word) {
    NormalWord w;
    for (const auto& s : word) {
        const int e = detail::mod8(s.exponent);
        for (int k = 0; k < e; ++k) w = nf_multiply(w, s.letter, Side::Right);
    }
    return w;
}

inline CycMatrix word_matrix(const Word& w, const CycMatrix& d, const CycMatrix& t) {
    return evaluate_word(w, CycMatrix::identity(d.rows()), d, t,
                         [](const CycMatrix& m, long e) { return m.pow(e); });
}

inline CycMatrix word_to_matrix(const NormalWord& w) {
    validate(w);
    return word_matrix(w.to_word(), generator_d(), generator_t());
}

/// All 384 normal words, ordered by shape then exponents.
inline std::vector<NormalWord> enumerate_normal_words() {
    std::vector<NormalWord> out;
    constexpr std::array<int, 7> any = {1, 2, 3, 4, 5, 6, 7};
    constexpr std::array<int, 4> odd = {1, 3, 5, 7};
    constexpr std::array<int, 3> even = {2, 4, 6};

    out.push_back({Shape::W1, {}});
    for (int n : any) out.push_back({Shape::W2, {n}});
    for (int n : any) out.push_back({Shape::W3, {n}});
    for (int a : any)
        for (int b : any) out.push_back({Shape::W4, {a, b}});
    for (int p : odd)
        for (int n : any) out.push_back({Shape::W5, {p, n}});
    for (int a : any)
        for (int p : odd)
            for (int b : any) out.push_back({Shape::W6, {a, p, b}});
    for (int e : even)
        for (int p : odd) out.push_back({Shape::W7, {e, p}});
    for (int a : any)
        for (int e : even)
            for (int p : odd) out.push_back({Shape::W8, {a, e, p}});
    return out;
}

struct NormalFormReport {
    std::size_t words = 0;
    std::size_t distinct_matrices = 0;
    std::size_t coherence_cases = 0;
    std::size_t coherent = 0;
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const {
        return words == 384 && distinct_matrices == words && coherent == coherence_cases && coherence_cases == 4 * words;
    }
};

/// Bijection and automaton coherence against the matrix oracle: for every
/// normal word w, letter s and side, nf_multiply(w, s, side) must evaluate to
/// w*s or s*w.
inline NormalFormReport check_normal_forms() {
    NormalFormReport r;
    const auto words = enumerate_normal_words();
    r.words = words.size();
    const CycMatrix d = generator_d(), t = generator_t();
    std::set<std::string> seen;
    for (const auto& w : words) {
        const CycMatrix m = word_to_matrix(w);
        seen.insert(m.serialize());
        for (Letter letter : {Letter::D, Letter::T}) {
            const CycMatrix& g = letter == Letter::D ? d : t;
            for (Side side : {Side::Left, Side::Right}) {
                ++r.coherence_cases;
                const NormalWord product = nf_multiply(w, letter, side);
                const CycMatrix expected = side == Side::Right ? m * g : g * m;
                if (word_to_matrix(product) == expected) {
                    ++r.coherent;
                } else {
                    r.failures.push_back(w.tag() + (side == Side::Right ? " * " : " <- ") + letter_char(letter));
                }
            }
        }
    }
    r.distinct_matrices = seen.size();
    return r;
}

}  // namespace z4cent
