#pragma once

/**
 * @file word.hpp
 * @brief Words over the two-letter alphabet {D, T}.
 *
 * Text syntax: letters with optional caret exponents, whitespace ignored,
 * e.g. "D^3 T D^2 T^5" or "DTD". The empty word is written "1".
 */

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace z4cent {

enum class Letter { D, T };

enum class Side { Left, Right };

inline char letter_char(Letter l) { return l == Letter::D ? 'D' : 'T'; }

struct Syllable {
    Letter letter;
    long exponent;

    friend bool operator==(const Syllable&, const Syllable&) = default;
};

using Word = std::vector<Syllable>;

/// Parses a word. Adjacent syllables with the same letter are kept as written.
inline Word parse_word(std::string_view text) {
    Word w;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos < text.size() && text[pos] == '1') {
        ++pos;
        skip_ws();
        if (pos != text.size()) throw InvalidWord("'1' must stand alone: " + std::string(text));
        return w;
    }
    while (pos < text.size()) {
        const char c = text[pos];
        Letter letter;
        if (c == 'D') {
            letter = Letter::D;
        } else if (c == 'T') {
            letter = Letter::T;
        } else {
            throw InvalidWord("unexpected character '" + std::string(1, c) + "' in " + std::string(text));
        }
        ++pos;
        skip_ws();
        long exponent = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_ws();
            const std::size_t start = pos;
            if (pos < text.size() && text[pos] == '-') ++pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start || (pos == start + 1 && text[start] == '-')) {
                throw InvalidWord("missing exponent in " + std::string(text));
            }
            exponent = std::stol(std::string(text.substr(start, pos - start)));
        }
        w.push_back({letter, exponent});
        skip_ws();
    }
    return w;
}

inline std::string format_word(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& s : w) {
        if (!out.empty()) out += ' ';
        out += letter_char(s.letter);
        if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
    }
    return out;
}

/// Evaluates a word given the images of D and T and a power function.
template <typename Elem, typename Pow>
Elem evaluate_word(const Word& w, const Elem& identity, const Elem& d, const Elem& t, Pow&& pow) {
    Elem result = identity;
    for (const auto& s : w) result = result * pow(s.letter == Letter::D ? d : t, s.exponent);
    return result;
}

}  // namespace z4cent
