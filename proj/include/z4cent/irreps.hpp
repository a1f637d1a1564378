#pragma once

/**
 * @file irreps.hpp
 * @brief The ten irreducible representations of PG.
 *
 * rho7 is the natural three-dimensional representation, rescaled so that it
 * factors through the center:  D -> eta*D,  T -> eta^3*T.  The others are
 * built from it:
 *
 *   rho1        trivial
 *   rho2        D, T -> -1
 *   rho6        complex conjugate of rho7
 *   rho8, rho9  rho2 (x) rho7, rho2 (x) rho6
 *   rho4        rho7 (x) rho7 restricted to <v1, v2, v3>
 *   rho5        rho4 (x) rho2
 *   rho3        rho7 (x) rho6 restricted to <v4, v5>
 *   rho10       rho7 (x) rho6 restricted to <w3, ..., w8>
 *
 * Tensor basis vectors e_i (x) e'_j sit at index 3*i + j (0-based). The
 * restricted matrices act on columns: image(b_j) = sum_i M(i, j) b_i.
 */

#include <array>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cyc_matrix.hpp"
#include "error.hpp"
#include "word.hpp"

namespace z4cent {

struct Representation {
    int index = 0;
    std::size_t degree = 0;
    CycMatrix image_d;
    CycMatrix image_t;
};

/// Change of basis used to cut an irreducible out of a tensor product.
struct SubspaceRestriction {
    int index = 0;
    CycMatrix basis;  // columns are the basis vectors in the tensor space
    CycMatrix ambient_d;
    CycMatrix ambient_t;
    CycMatrix restricted_d;
    CycMatrix restricted_t;
};

/// Matrix of the restriction of `ambient` to the column span of `basis`.
/// Throws VerificationFailure if the span is not invariant.
inline CycMatrix restrict_to_subspace(const CycMatrix& ambient, const CycMatrix& basis) {
    const CycMatrix bt = basis.transpose();
    const CycMatrix left_inverse = (bt * basis).inverse() * bt;
    CycMatrix restricted = left_inverse * ambient * basis;
    if (ambient * basis != basis * restricted) throw VerificationFailure("subspace is not invariant");
    return restricted;
}

/// Checks D^8 = T^2 = 1, TDT = D^7 T D^7 and T D^5 T = D^3 T D^3.
inline bool satisfies_projective_relations(const CycMatrix& d, const CycMatrix& t) {
    auto eval = [&](const char* w) {
        return evaluate_word(parse_word(w), CycMatrix::identity(d.rows()), d, t,
                             [](const CycMatrix& m, long e) { return m.pow(e); });
    };
    return eval("D^8").is_identity() && eval("T^2").is_identity() && eval("T D T") == eval("D^7 T D^7") &&
           eval("T D^5 T") == eval("D^3 T D^3");
}

namespace detail {

inline CycMatrix basis_from_columns(const std::vector<std::vector<std::pair<int, long>>>& columns) {
    CycMatrix b(9, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [pos, coeff] : columns[c]) b(static_cast<std::size_t>(pos), c) = Cyc8(coeff);
    return b;
}

inline int tensor_index(int i, int j) { return 3 * (i - 1) + (j - 1); }

}  // namespace detail

inline CycMatrix rho7_d() { return CycMatrix::diagonal({Cyc8::eta(), Cyc8::i(), -Cyc8::eta()}); }

inline CycMatrix rho7_t() {
    return Cyc8(Rational(-1, 2)) * CycMatrix{{1, 2, 1}, {1, 0, -1}, {1, -2, 1}};
}

/// Restrictions of rho7 (x) rho7 and rho7 (x) rho6 defining rho4, rho3 and rho10.
inline std::vector<SubspaceRestriction> irrep_restrictions() {
    using detail::tensor_index;
    const CycMatrix d7 = rho7_d(), t7 = rho7_t();
    const CycMatrix d6 = d7.conj(), t6 = t7.conj();

    const CycMatrix d77 = d7.kron(d7), t77 = t7.kron(t7);
    const CycMatrix d76 = d7.kron(d6), t76 = t7.kron(t6);

    const CycMatrix v123 = detail::basis_from_columns({
        {{tensor_index(1, 1), 1}, {tensor_index(3, 3), 1}},
        {{tensor_index(1, 3), 1}, {tensor_index(3, 1), 1}},
        {{tensor_index(2, 2), 1}},
    });
    const CycMatrix v45 = detail::basis_from_columns({
        {{tensor_index(1, 3), 2}, {tensor_index(3, 1), 2}},
        {{tensor_index(1, 1), 1},
         {tensor_index(3, 3), 1},
         {tensor_index(1, 3), -1},
         {tensor_index(3, 1), -1},
         {tensor_index(2, 2), -1}},
    });
    const CycMatrix w38 = detail::basis_from_columns({
        {{tensor_index(1, 1), 1}, {tensor_index(3, 3), -1}},
        {{tensor_index(1, 3), 1}, {tensor_index(3, 1), -1}},
        {{tensor_index(1, 2), 1}},
        {{tensor_index(2, 1), 1}},
        {{tensor_index(2, 3), 1}},
        {{tensor_index(3, 2), 1}},
    });

    std::vector<SubspaceRestriction> out;
    auto add = [&](int index, const CycMatrix& basis, const CycMatrix& ad, const CycMatrix& at) {
        out.push_back({index, basis, ad, at, restrict_to_subspace(ad, basis), restrict_to_subspace(at, basis)});
    };
    add(4, v123, d77, t77);
    add(3, v45, d76, t76);
    add(10, w38, d76, t76);
    return out;
}

/// rho1 .. rho10 in order. Throws VerificationFailure if any pair of images
/// violates the defining relations of PG.
inline std::vector<Representation> build_irreps() {
    const CycMatrix d7 = rho7_d(), t7 = rho7_t();
    const CycMatrix d6 = d7.conj(), t6 = t7.conj();
    const CycMatrix one = CycMatrix::identity(1);
    const CycMatrix minus_one = -one;

    CycMatrix d3, t3, d4, t4, d10, t10;
    for (const auto& r : irrep_restrictions()) {
        if (r.index == 3) std::tie(d3, t3) = std::pair(r.restricted_d, r.restricted_t);
        if (r.index == 4) std::tie(d4, t4) = std::pair(r.restricted_d, r.restricted_t);
        if (r.index == 10) std::tie(d10, t10) = std::pair(r.restricted_d, r.restricted_t);
    }

    std::vector<Representation> reps = {
        {1, 1, one, one},
        {2, 1, minus_one, minus_one},
        {3, 2, d3, t3},
        {4, 3, d4, t4},
        {5, 3, -d4, -t4},
        {6, 3, d6, t6},
        {7, 3, d7, t7},
        {8, 3, -d7, -t7},
        {9, 3, -d6, -t6},
        {10, 6, d10, t10},
    };
    for (const auto& r : reps) {
        if (!satisfies_projective_relations(r.image_d, r.image_t)) {
            throw VerificationFailure("rho" + std::to_string(r.index) + " violates the relations");
        }
    }
    return reps;
}

/// Image of a word under a representation.
inline CycMatrix represent(const Representation& rep, const Word& w) {
    return evaluate_word(w, CycMatrix::identity(rep.degree), rep.image_d, rep.image_t,
                         [](const CycMatrix& m, long e) { return m.pow(e); });
}

}  // namespace z4cent
