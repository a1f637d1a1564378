#pragma once

/**
 * @file finite_group.hpp
 * @brief Breadth-first closure of finitely generated matrix groups.
 *
 * Elements are deduplicated by the canonical serialization of their matrix.
 * The queue is processed in insertion order and each element is multiplied
 * on the right by the generators in the order given, so element numbering
 * is deterministic. Index 0 is always the identity.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cyc_matrix.hpp"
#include "error.hpp"
#include "generators.hpp"
#include "normal_form.hpp"

namespace z4cent {

struct GroupElement {
    CycMatrix matrix;
    std::optional<NormalWord> canonical_word;
};

class FiniteGroup {
public:
    static constexpr std::size_t kDefaultCap = 1'000'000;

    FiniteGroup(std::vector<CycMatrix> generators, std::vector<std::string> labels, std::size_t cap = kDefaultCap)
        : generators_(std::move(generators)), labels_(std::move(labels)) {
        if (generators_.empty()) throw Error("at least one generator is required");
        if (labels_.empty()) {
            for (std::size_t g = 0; g < generators_.size(); ++g) labels_.push_back("g" + std::to_string(g + 1));
        }
        if (labels_.size() != generators_.size()) throw Error("one label per generator required");
        const std::size_t n = generators_.front().rows();
        for (const auto& g : generators_) {
            if (!g.is_square() || g.rows() != n) throw DimensionMismatch("generators must be square of equal size");
            if (g.det().is_zero()) throw SingularMatrix();
        }
        close(cap);
    }

    [[nodiscard]] std::size_t size() const { return elements_.size(); }
    [[nodiscard]] std::size_t dimension() const { return generators_.front().rows(); }
    [[nodiscard]] const std::vector<GroupElement>& elements() const { return elements_; }
    [[nodiscard]] const GroupElement& element(std::size_t i) const { return elements_.at(i); }
    [[nodiscard]] const std::vector<CycMatrix>& generators() const { return generators_; }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }

    [[nodiscard]] std::optional<std::size_t> index_of(const CycMatrix& m) const {
        const auto it = index_.find(m.serialize());
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    [[nodiscard]] bool contains(const CycMatrix& m) const { return index_of(m).has_value(); }

    /// Index of element(i) * generator(g).
    [[nodiscard]] std::size_t right_mul(std::size_t g, std::size_t i) const { return right_.at(g).at(i); }
    /// Index of generator(g) * element(i).
    [[nodiscard]] std::size_t left_mul(std::size_t g, std::size_t i) const { return left_.at(g).at(i); }

    /// Records a normal word for every element. Only meaningful when the
    /// generators are labelled D and T in that order.
    void attach_normal_words() {
        if (generators_.size() != 2) throw Unsupported("normal words need exactly the generators D, T");
        elements_[0].canonical_word = NormalWord{};
        std::vector<bool> seen(size(), false);
        seen[0] = true;
        std::vector<std::size_t> queue{0};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t i = queue[head];
            for (std::size_t g = 0; g < 2; ++g) {
                const std::size_t j = right_[g][i];
                if (seen[j]) continue;
                seen[j] = true;
                elements_[j].canonical_word =
                    nf_multiply(*elements_[i].canonical_word, g == 0 ? Letter::D : Letter::T, Side::Right);
                queue.push_back(j);
            }
        }
    }

private:
    void close(std::size_t cap) {
        const std::size_t n = dimension();
        const std::size_t gens = generators_.size();
        right_.assign(gens, {});
        insert(CycMatrix::identity(n), cap);
        for (std::size_t head = 0; head < elements_.size(); ++head) {
            for (std::size_t g = 0; g < gens; ++g) {
                const CycMatrix product = elements_[head].matrix * generators_[g];
                right_[g].push_back(insert(product, cap));
            }
        }
        left_.assign(gens, std::vector<std::size_t>(elements_.size()));
        for (std::size_t g = 0; g < gens; ++g) {
            for (std::size_t i = 0; i < elements_.size(); ++i) {
                left_[g][i] = *index_of(generators_[g] * elements_[i].matrix);
            }
        }
    }

    std::size_t insert(const CycMatrix& m, std::size_t cap) {
        auto [it, inserted] = index_.try_emplace(m.serialize(), elements_.size());
        if (inserted) {
            if (elements_.size() >= cap) {
                throw GroupTooLarge("group too large or infinite: more than " + std::to_string(cap) + " elements");
            }
            elements_.push_back({m, std::nullopt});
        }
        return it->second;
    }

    std::vector<CycMatrix> generators_;
    std::vector<std::string> labels_;
    std::vector<GroupElement> elements_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<std::size_t>> right_;
    std::vector<std::vector<std::size_t>> left_;
};

inline FiniteGroup generate_group(std::vector<CycMatrix> generators, std::size_t cap = FiniteGroup::kDefaultCap) {
    return FiniteGroup(std::move(generators), {}, cap);
}

/// The order-384 group generated by D = diag(1, eta, -1) and T, with normal words attached.
inline FiniteGroup type_ii_group() {
    FiniteGroup g({generator_d(), generator_t()}, {"D", "T"});
    g.attach_normal_words();
    return g;
}

/// Elements commuting with every generator, sorted by serialization.
inline std::vector<GroupElement> center(const FiniteGroup& g) {
    std::vector<GroupElement> out;
    for (const auto& e : g.elements()) {
        const bool central = std::all_of(g.generators().begin(), g.generators().end(),
                                         [&](const CycMatrix& s) { return e.matrix * s == s * e.matrix; });
        if (central) out.push_back(e);
    }
    std::sort(out.begin(), out.end(), [](const GroupElement& a, const GroupElement& b) {
        return a.matrix.serialize() < b.matrix.serialize();
    });
    return out;
}

struct RelationCheck {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool holds = false;
};

using RelationReport = std::vector<RelationCheck>;

inline bool all_hold(const RelationReport& r) {
    return std::all_of(r.begin(), r.end(), [](const RelationCheck& c) { return c.holds; });
}

inline RelationCheck check_relation(std::string name, const std::string& lhs, const std::string& rhs,
                                    const CycMatrix& d, const CycMatrix& t) {
    const bool ok = word_matrix(parse_word(lhs), d, t) == word_matrix(parse_word(rhs), d, t);
    return {std::move(name), lhs, rhs, ok};
}

/// Checks R1..R8 for the given images of D and T. R8 is reported once per
/// exponent pair.
inline RelationReport verify_relations(const CycMatrix& d, const CycMatrix& t) {
    RelationReport r;
    r.push_back(check_relation("R1", "D^8", "1", d, t));
    r.push_back(check_relation("R2", "T^8", "1", d, t));
    r.push_back(check_relation("R3", "T^2 D", "D T^2", d, t));
    r.push_back(check_relation("R4", "T D T", "D^7 T^3 D^7", d, t));
    r.push_back(check_relation("R5", "T D^5 T", "D^3 T^7 D^3", d, t));
    r.push_back(check_relation("R6", "T D^3 T", "D^5 T^5 D^5", d, t));
    r.push_back(check_relation("R7", "T D^7 T", "D T D", d, t));
    for (int i : {2, 4, 6}) {
        for (int j : {2, 4, 6}) {
            const std::string di = "D^" + std::to_string(i);
            const std::string dj = "D^" + std::to_string(j);
            r.push_back(check_relation("R8", di + " T " + dj + " T", "T " + dj + " T " + di, d, t));
        }
    }
    return r;
}

inline RelationReport verify_relations(const FiniteGroup& g) {
    if (g.generators().size() != 2) throw Unsupported("relations are stated for two generators D, T");
    return verify_relations(g.generators()[0], g.generators()[1]);
}

/// Order of a square matrix, or 0 if it exceeds `limit`.
inline std::size_t matrix_order(const CycMatrix& m, std::size_t limit = 1000) {
    CycMatrix p = m;
    for (std::size_t k = 1; k <= limit; ++k) {
        if (p.is_identity()) return k;
        p = p * m;
    }
    return 0;
}

}  // namespace z4cent
