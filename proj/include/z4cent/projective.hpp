#pragma once

/**
 * @file projective.hpp
 * @brief The quotient PG = G / Z by a scalar center, and its conjugacy classes.
 *
 * A coset {lambda * M : lambda in Z} is represented by the member whose
 * serialization is lexicographically smallest. Elements keep their lifted
 * matrices so representations can be evaluated on them directly.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "finite_group.hpp"
#include "normal_form.hpp"

namespace z4cent {

struct ProjElement {
    CycMatrix rep;
    std::string word;  // reduced word in D, T with the central T-power dropped
};

struct ConjClassInfo {
    std::size_t index = 0;  // 1-based, in anchor order
    std::size_t representative = 0;
    std::string representative_word;
    std::size_t size = 0;
    std::size_t element_order = 0;
    std::vector<std::size_t> members;
};

/// Words naming the class representatives, in the order classes are numbered.
inline const std::vector<std::string>& class_anchor_words() {
    static const std::vector<std::string> words = {"1", "D", "D^2", "D^3", "D^4",
                                                   "D^6", "T", "D T", "D^4 T", "D^2 T D^4 T"};
    return words;
}

class ProjGroup {
public:
    ProjGroup(const FiniteGroup& g, std::vector<Cyc8> scalars) : scalars_(std::move(scalars)) {
        for (const auto& e : g.elements()) {
            const CycMatrix rep = canonicalize(e.matrix);
            auto [it, inserted] = index_.try_emplace(rep.serialize(), elements_.size());
            if (!inserted) continue;
            std::string word;
            if (e.canonical_word) {
                detail::Alternating alt = detail::to_alternating(*e.canonical_word);
                Word w;
                for (std::size_t k = 0; k < alt.d.size(); ++k) {
                    if (k) w.push_back({Letter::T, 1});
                    if (alt.d[k]) w.push_back({Letter::D, alt.d[k]});
                }
                word = format_word(w);
            }
            elements_.push_back({rep, word});
        }
        const std::size_t n = elements_.size();
        mul_.assign(n * n, 0);
        inv_.assign(n, 0);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                const auto idx = index_of(elements_[a].rep * elements_[b].rep);
                if (!idx) throw Error("quotient is not closed under multiplication");
                mul_[a * n + b] = *idx;
                if (*idx == 0) inv_[a] = b;
            }
        }
        gen_d_ = *index_of(g.generators().at(0));
        gen_t_ = *index_of(g.generators().at(1));
    }

    [[nodiscard]] std::size_t size() const { return elements_.size(); }
    [[nodiscard]] const ProjElement& element(std::size_t i) const { return elements_.at(i); }
    [[nodiscard]] const std::vector<ProjElement>& elements() const { return elements_; }
    [[nodiscard]] const std::vector<Cyc8>& scalars() const { return scalars_; }

    [[nodiscard]] std::size_t identity() const { return 0; }
    [[nodiscard]] std::size_t gen_d() const { return gen_d_; }
    [[nodiscard]] std::size_t gen_t() const { return gen_t_; }
    [[nodiscard]] std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * size() + b]; }
    [[nodiscard]] std::size_t inv(std::size_t a) const { return inv_.at(a); }

    /// Smallest serialization among the scalar multiples of m.
    [[nodiscard]] CycMatrix canonicalize(const CycMatrix& m) const {
        CycMatrix best;
        std::string best_key;
        for (const Cyc8& s : scalars_) {
            CycMatrix candidate = s * m;
            std::string key = candidate.serialize();
            if (best_key.empty() || key < best_key) {
                best_key = std::move(key);
                best = std::move(candidate);
            }
        }
        return best;
    }

    /// Index of the coset containing the matrix m (any lift).
    [[nodiscard]] std::optional<std::size_t> index_of(const CycMatrix& m) const {
        const auto it = index_.find(canonicalize(m).serialize());
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    [[nodiscard]] std::size_t pow(std::size_t a, long e) const {
        std::size_t r = identity();
        if (e < 0) {
            a = inv(a);
            e = -e;
        }
        for (long k = 0; k < e; ++k) r = mul(r, a);
        return r;
    }

    [[nodiscard]] std::size_t evaluate(const Word& w) const {
        std::size_t r = identity();
        for (const auto& s : w) r = mul(r, pow(s.letter == Letter::D ? gen_d_ : gen_t_, s.exponent));
        return r;
    }
    [[nodiscard]] std::size_t evaluate(const std::string& word) const { return evaluate(parse_word(word)); }

    [[nodiscard]] std::size_t order(std::size_t a) const {
        std::size_t r = a;
        for (std::size_t k = 1; k <= size(); ++k) {
            if (r == identity()) return k;
            r = mul(r, a);
        }
        throw Error("element order exceeds group order");
    }

    [[nodiscard]] std::size_t conjugate(std::size_t x, std::size_t a) const { return mul(mul(x, a), inv(x)); }

    [[nodiscard]] const std::vector<ConjClassInfo>& classes() const { return classes_; }
    [[nodiscard]] std::size_t class_of(std::size_t a) const { return class_of_.at(a); }

    void set_classes(std::vector<ConjClassInfo> classes) {
        classes_ = std::move(classes);
        class_of_.assign(size(), 0);
        for (const auto& c : classes_)
            for (std::size_t m : c.members) class_of_[m] = c.index;
    }

private:
    std::vector<Cyc8> scalars_;
    std::vector<ProjElement> elements_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::size_t> mul_;
    std::vector<std::size_t> inv_;
    std::size_t gen_d_ = 0;
    std::size_t gen_t_ = 0;
    std::vector<ConjClassInfo> classes_;
    std::vector<std::size_t> class_of_;
};

/// Conjugation orbits, numbered by the anchor words. Throws if two anchors
/// share a class or a class has no anchor.
inline std::vector<ConjClassInfo> compute_conjugacy_classes(const ProjGroup& pg,
                                                            const std::vector<std::string>& anchors) {
    const std::size_t n = pg.size();
    std::vector<long> orbit_id(n, -1);
    std::vector<std::vector<std::size_t>> orbits;
    for (std::size_t a = 0; a < n; ++a) {
        if (orbit_id[a] >= 0) continue;
        std::vector<std::size_t> members;
        for (std::size_t x = 0; x < n; ++x) {
            const std::size_t c = pg.conjugate(x, a);
            if (orbit_id[c] < 0) {
                orbit_id[c] = static_cast<long>(orbits.size());
                members.push_back(c);
            }
        }
        std::sort(members.begin(), members.end());
        orbits.push_back(std::move(members));
    }
    if (orbits.size() != anchors.size()) {
        throw VerificationFailure("found " + std::to_string(orbits.size()) + " classes but " +
                                  std::to_string(anchors.size()) + " anchor words");
    }
    std::vector<ConjClassInfo> out;
    std::vector<bool> used(orbits.size(), false);
    for (std::size_t k = 0; k < anchors.size(); ++k) {
        const std::size_t rep = pg.evaluate(anchors[k]);
        const auto o = static_cast<std::size_t>(orbit_id[rep]);
        if (used[o]) throw VerificationFailure("anchor " + anchors[k] + " lands in an already numbered class");
        used[o] = true;
        out.push_back({k + 1, rep, anchors[k], orbits[o].size(), pg.order(rep), orbits[o]});
    }
    return out;
}

/// PG = G / Z(G). The center must consist of scalar matrices.
inline ProjGroup project(const FiniteGroup& g) {
    std::vector<Cyc8> scalars;
    for (const auto& z : center(g)) {
        if (!z.matrix.is_scalar()) throw Unsupported("center contains a non-scalar matrix");
        scalars.push_back(z.matrix(0, 0));
    }
    ProjGroup pg(g, std::move(scalars));
    pg.set_classes(compute_conjugacy_classes(pg, class_anchor_words()));
    return pg;
}

inline const std::vector<ConjClassInfo>& conjugacy_classes(const ProjGroup& pg) { return pg.classes(); }

/// 1-based class index of the coset containing m.
inline std::size_t class_of(const ProjGroup& pg, const CycMatrix& m) {
    const auto idx = pg.index_of(m);
    if (!idx) throw Error("matrix is not in the group");
    return pg.class_of(*idx);
}

inline std::size_t centralizer_size(const ProjGroup& pg, std::size_t a) {
    std::size_t count = 0;
    for (std::size_t x = 0; x < pg.size(); ++x)
        if (pg.mul(x, a) == pg.mul(a, x)) ++count;
    return count;
}

struct ProjRelationCheck {
    std::string lhs;
    std::string rhs;
    bool holds = false;
};

inline std::vector<ProjRelationCheck> verify_projective_relations(const ProjGroup& pg) {
    const std::vector<std::pair<std::string, std::string>> relations = {
        {"D^8", "1"}, {"T^2", "1"}, {"T D T", "D^7 T D^7"}, {"T D^5 T", "D^3 T D^3"}};
    std::vector<ProjRelationCheck> out;
    for (const auto& [lhs, rhs] : relations) out.push_back({lhs, rhs, pg.evaluate(lhs) == pg.evaluate(rhs)});
    return out;
}

/// The 96 reduced words 1, D^n, T, D^n T, T D^n, D^n T D^m, T D^e T, D^n T D^e T.
inline std::vector<Word> projective_normal_words() {
    std::vector<Word> out;
    const Syllable t{Letter::T, 1};
    auto d = [](long n) { return Syllable{Letter::D, n}; };
    out.push_back({});
    for (long n = 1; n <= 7; ++n) out.push_back({d(n)});
    out.push_back({t});
    for (long n = 1; n <= 7; ++n) out.push_back({d(n), t});
    for (long n = 1; n <= 7; ++n) out.push_back({t, d(n)});
    for (long a = 1; a <= 7; ++a)
        for (long b = 1; b <= 7; ++b) out.push_back({d(a), t, d(b)});
    for (long e : {2, 4, 6}) out.push_back({t, d(e), t});
    for (long a = 1; a <= 7; ++a)
        for (long e : {2, 4, 6}) out.push_back({d(a), t, d(e), t});
    return out;
}

}  // namespace z4cent
