#pragma once

/**
 * @file character_table.hpp
 * @brief Character table of PG and decomposition of class functions.
 *
 * Rows are irreducibles rho1..rho10, columns are the conjugacy classes in
 * anchor order. A class function with values k decomposes as m = k X^-1.
 */

#include <string>
#include <vector>

#include "cyc_matrix.hpp"
#include "irreps.hpp"
#include "projective.hpp"

namespace z4cent {

/// Trace of the representation at each class representative.
inline std::vector<Cyc8> character(const Representation& rep, const std::vector<ConjClassInfo>& classes) {
    std::vector<Cyc8> values;
    values.reserve(classes.size());
    for (const auto& c : classes) values.push_back(represent(rep, parse_word(c.representative_word)).trace());
    return values;
}

class CharacterTable {
public:
    CharacterTable(const std::vector<Representation>& irreps, std::vector<ConjClassInfo> classes)
        : classes_(std::move(classes)) {
        const std::size_t n = irreps.size();
        if (n != classes_.size()) throw DimensionMismatch("need as many irreducibles as classes");
        x_ = CycMatrix(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            const auto row = character(irreps[r], classes_);
            for (std::size_t c = 0; c < n; ++c) x_(r, c) = row[c];
            degrees_.push_back(irreps[r].degree);
        }
        x_inv_ = x_.inverse();
        for (const auto& c : classes_) group_order_ += c.size;
    }

    [[nodiscard]] const CycMatrix& matrix() const { return x_; }
    [[nodiscard]] const CycMatrix& inverse() const { return x_inv_; }
    [[nodiscard]] const std::vector<ConjClassInfo>& classes() const { return classes_; }
    [[nodiscard]] const std::vector<std::size_t>& degrees() const { return degrees_; }
    [[nodiscard]] std::size_t size() const { return x_.rows(); }
    [[nodiscard]] std::size_t group_order() const { return group_order_; }

    [[nodiscard]] std::vector<Cyc8> row(std::size_t r) const {
        std::vector<Cyc8> out;
        for (std::size_t c = 0; c < size(); ++c) out.push_back(x_(r, c));
        return out;
    }

    /// (1/|G|) sum_j size_j f_j conj(g_j)
    [[nodiscard]] Cyc8 inner_product(const std::vector<Cyc8>& f, const std::vector<Cyc8>& g) const {
        Cyc8 sum;
        for (std::size_t j = 0; j < size(); ++j)
            sum += Cyc8(static_cast<long>(classes_[j].size)) * f[j] * g[j].conj();
        return sum * Cyc8(Rational(1, static_cast<long>(group_order_)));
    }

private:
    CycMatrix x_;
    CycMatrix x_inv_;
    std::vector<ConjClassInfo> classes_;
    std::vector<std::size_t> degrees_;
    std::size_t group_order_ = 0;
};

inline CharacterTable build_character_table(const ProjGroup& pg) {
    return CharacterTable(build_irreps(), pg.classes());
}

struct OrthogonalityReport {
    bool rows_orthonormal = false;     // sum_j size_j X[r][j] conj(X[s][j]) = |G| delta_rs
    bool columns_orthogonal = false;   // sum_r X[r][i] conj(X[r][j]) = delta_ij |G| / size_i
    bool first_row_trivial = false;
    bool first_column_degrees = false;
    bool degree_square_sum = false;    // sum of squared degrees = |G|
};

inline OrthogonalityReport verify_character_table(const CharacterTable& table) {
    const CycMatrix& x = table.matrix();
    const std::size_t n = table.size();
    const Cyc8 order(static_cast<long>(table.group_order()));
    OrthogonalityReport rep;

    rep.rows_orthonormal = true;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
            Cyc8 sum;
            for (std::size_t j = 0; j < n; ++j)
                sum += Cyc8(static_cast<long>(table.classes()[j].size)) * x(r, j) * x(s, j).conj();
            if (sum != (r == s ? order : Cyc8())) rep.rows_orthonormal = false;
        }

    rep.columns_orthogonal = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Cyc8 sum;
            for (std::size_t r = 0; r < n; ++r) sum += x(r, i) * x(r, j).conj();
            const Cyc8 expected =
                i == j ? order * Cyc8(Rational(1, static_cast<long>(table.classes()[i].size))) : Cyc8();
            if (sum != expected) rep.columns_orthogonal = false;
        }

    rep.first_row_trivial = true;
    rep.first_column_degrees = true;
    std::size_t squares = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (x(0, k) != Cyc8(1)) rep.first_row_trivial = false;
        if (x(k, 0) != Cyc8(static_cast<long>(table.degrees()[k]))) rep.first_column_degrees = false;
        squares += table.degrees()[k] * table.degrees()[k];
    }
    rep.degree_square_sum = squares == table.group_order();
    return rep;
}

/// Multiplicities m with values = sum_i m_i chi_i. Throws VerificationFailure
/// if some m_i is not a non-negative integer.
inline std::vector<BigInt> decompose_character(const CharacterTable& table, const std::vector<Cyc8>& values) {
    const std::size_t n = table.size();
    if (values.size() != n) throw DimensionMismatch("class function has the wrong length");
    CycMatrix k(1, n, values);
    const CycMatrix m = k * table.inverse();
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < n; ++i) {
        const Cyc8& v = m(0, i);
        if (!v.is_rational_integer() || v.coeff(0).sign() < 0) {
            throw VerificationFailure("not a character: multiplicity of chi" + std::to_string(i + 1) + " is " +
                                      v.to_pretty());
        }
        out.push_back(v.coeff(0).numerator());
    }
    return out;
}

/// Pointwise product of class functions.
inline std::vector<Cyc8> pointwise_product(const std::vector<Cyc8>& a, const std::vector<Cyc8>& b) {
    std::vector<Cyc8> out;
    for (std::size_t k = 0; k < a.size(); ++k) out.push_back(a[k] * b[k]);
    return out;
}

}  // namespace z4cent
