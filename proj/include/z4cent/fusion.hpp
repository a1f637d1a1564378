#pragma once

/**
 * @file fusion.hpp
 * @brief Tensor powers of the natural representation.
 *
 * The fusion matrix A has row i equal to the decomposition of chi7 * chi_i,
 * so A = X diag(chi7) X^-1. The multiplicity of rho_l in rho7^{(x)k} is
 * d_l(k) = (e1 A^k)_l, and the centralizer algebra of rho7^{(x)k} is a
 * direct sum of full matrix algebras of sizes d_l(k).
 */

#include <string>
#include <vector>

#include "character_table.hpp"

namespace z4cent {

using IntMatrix = std::vector<std::vector<long>>;

/// Index (0-based) of the natural representation rho7.
inline constexpr std::size_t kNaturalIrrep = 6;

inline IntMatrix fusion_matrix(const CharacterTable& table, std::size_t natural = kNaturalIrrep) {
    const std::size_t n = table.size();
    std::vector<Cyc8> chi = table.row(natural);
    const CycMatrix a = table.matrix() * CycMatrix::diagonal(chi) * table.inverse();
    IntMatrix out(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Cyc8& v = a(i, j);
            if (!v.is_rational_integer() || v.coeff(0).sign() < 0) {
                throw VerificationFailure("fusion matrix entry (" + std::to_string(i + 1) + "," +
                                          std::to_string(j + 1) + ") is " + v.to_pretty());
            }
            out[i][j] = v.coeff(0).numerator().get_si();
        }
    return out;
}

/// d(k) = e1 * A^k, exact.
inline std::vector<BigInt> tensor_multiplicities(const IntMatrix& a, unsigned k) {
    const std::size_t n = a.size();
    std::vector<BigInt> d(n, 0);
    d[0] = 1;
    for (unsigned step = 0; step < k; ++step) {
        std::vector<BigInt> next(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (d[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (a[i][j] != 0) next[j] += d[i] * a[i][j];
        }
        d = std::move(next);
    }
    return d;
}

namespace detail {

struct GeometricTerm {
    Cyc8 coefficient;
    Cyc8 base;
};

/// Closed forms for d_l(k), k >= 1, as sums of coefficient * base^k with
/// a = -1-2i and b = -1+2i.
inline std::vector<GeometricTerm> closed_form_terms(int l) {
    const Cyc8 i = Cyc8::i();
    const Cyc8 a = Cyc8::gaussian(-1, -2);
    const Cyc8 b = Cyc8::gaussian(-1, 2);
    auto q = [](long num, long den) { return Cyc8(Rational(num, den)); };
    const Cyc8 three(3), minus_one(-1), one(1), minus_i = -i;
    switch (l) {
        case 1: return {{q(1, 96), three}, {q(1, 32), a}, {q(1, 32), b}, {q(5, 32), minus_one},
                        {q(3, 16), one}, {q(1, 8), i}, {q(1, 8), minus_i}};
        case 2: return {{q(1, 96), three}, {q(1, 32), a}, {q(1, 32), b}, {q(-3, 32), minus_one},
                        {q(-1, 16), one}, {q(-1, 8), i}, {q(-1, 8), minus_i}};
        case 3: return {{q(1, 48), three}, {q(1, 16), a}, {q(1, 16), b}, {q(1, 16), minus_one}, {q(1, 8), one}};
        case 4: return {{q(1, 32), three}, {q(-1, 32), a}, {q(-1, 32), b}, {q(7, 32), minus_one},
                        {q(1, 16), one}, {q(-1, 8), i}, {q(-1, 8), minus_i}};
        case 5: return {{q(1, 32), three}, {q(-1, 32), a}, {q(-1, 32), b}, {q(-1, 32), minus_one},
                        {q(-3, 16), one}, {q(1, 8), i}, {q(1, 8), minus_i}};
        case 6: return {{q(1, 32), three}, {q(1, 32) * a, a}, {q(1, 32) * b, b}, {q(-5, 32), minus_one},
                        {q(3, 16), one}, {q(1, 8) * i, i}, {q(-1, 8) * i, minus_i}};
        case 7: return {{q(1, 32), three}, {q(1, 32) * b, a}, {q(1, 32) * a, b}, {q(-5, 32), minus_one},
                        {q(3, 16), one}, {q(-1, 8) * i, i}, {q(1, 8) * i, minus_i}};
        case 8: return {{q(1, 32), three}, {q(1, 32) * b, a}, {q(1, 32) * a, b}, {q(3, 32), minus_one},
                        {q(-1, 16), one}, {q(1, 8) * i, i}, {q(-1, 8) * i, minus_i}};
        case 9: return {{q(1, 32), three}, {q(1, 32) * a, a}, {q(1, 32) * b, b}, {q(3, 32), minus_one},
                        {q(-1, 16), one}, {q(-1, 8) * i, i}, {q(1, 8) * i, minus_i}};
        case 10: return {{q(1, 16), three}, {q(1, 16), a}, {q(1, 16), b}, {q(-1, 16), minus_one},
                         {q(-1, 8), one}};
        default: break;
    }
    throw Error("irreducible index must be in 1..10");
}

}  // namespace detail

/// d_l(k) from its closed form, evaluated exactly. Requires k >= 1.
inline BigInt closed_form_d(int l, unsigned k) {
    if (k < 1) throw Error("closed form is stated for k >= 1");
    Cyc8 sum;
    for (const auto& term : detail::closed_form_terms(l)) sum += term.coefficient * term.base.pow(k);
    if (!sum.is_rational_integer() || sum.coeff(0).sign() < 0) {
        throw VerificationFailure("closed form for d" + std::to_string(l) + "(" + std::to_string(k) +
                                  ") is not a non-negative integer: " + sum.to_pretty());
    }
    return sum.coeff(0).numerator();
}

/// dim of the centralizer algebra: sum of squared multiplicities.
inline BigInt centralizer_dim(const IntMatrix& a, unsigned k) {
    BigInt sum = 0;
    for (const auto& d : tensor_multiplicities(a, k)) sum += d * d;
    return sum;
}

/// (57 + 6*5^k + 9^k) / 96 for k >= 1, and 1 for k = 0.
inline BigInt centralizer_dim_closed_form(unsigned k) {
    if (k == 0) return 1;
    BigInt p5, p9;
    mpz_ui_pow_ui(p5.get_mpz_t(), 5, k);
    mpz_ui_pow_ui(p9.get_mpz_t(), 9, k);
    const BigInt num = 57 + 6 * p5 + p9;
    if (num % 96 != 0) throw VerificationFailure("dimension formula is not integral at k=" + std::to_string(k));
    return num / 96;
}

struct BratteliNode {
    std::size_t irrep = 0;  // 1-based
    BigInt multiplicity;
};

struct BratteliEdge {
    unsigned level = 0;  // edge goes from level-1 to level
    std::size_t from = 0;  // 1-based irrep index
    std::size_t to = 0;
    long weight = 0;
};

struct BratteliDiagram {
    std::vector<std::vector<BratteliNode>> levels;
    std::vector<BratteliEdge> edges;
};

/// Levels 0..kmax; node (k, l) exists iff d_l(k) > 0, edges follow A.
inline BratteliDiagram bratteli_diagram(const IntMatrix& a, unsigned kmax) {
    BratteliDiagram out;
    const std::size_t n = a.size();
    std::vector<BigInt> prev;
    for (unsigned k = 0; k <= kmax; ++k) {
        const std::vector<BigInt> d = tensor_multiplicities(a, k);
        std::vector<BratteliNode> level;
        for (std::size_t l = 0; l < n; ++l)
            if (d[l] > 0) level.push_back({l + 1, d[l]});
        if (k > 0) {
            for (std::size_t from = 0; from < n; ++from) {
                if (prev[from] == 0) continue;
                for (std::size_t to = 0; to < n; ++to) {
                    if (a[from][to] > 0 && d[to] > 0) out.edges.push_back({k, from + 1, to + 1, a[from][to]});
                }
            }
        }
        out.levels.push_back(std::move(level));
        prev = d;
    }
    return out;
}

/// Weighted count of paths from the root to every node of level k.
inline std::vector<BigInt> count_paths(const BratteliDiagram& diagram, std::size_t irreps, unsigned k) {
    std::vector<BigInt> paths(irreps, 0);
    paths[0] = 1;
    for (unsigned level = 1; level <= k; ++level) {
        std::vector<BigInt> next(irreps, 0);
        for (const auto& e : diagram.edges)
            if (e.level == level) next[e.to - 1] += paths[e.from - 1] * e.weight;
        paths = std::move(next);
    }
    return paths;
}

inline BigInt level_square_sum(const BratteliDiagram& diagram, unsigned k) {
    BigInt sum = 0;
    for (const auto& node : diagram.levels.at(k)) sum += node.multiplicity * node.multiplicity;
    return sum;
}

/// DOT digraph, one rank per level, nodes labelled "rho<l>,<d>".
inline std::string to_dot(const BratteliDiagram& diagram) {
    std::string out = "digraph bratteli {\n  rankdir=TB;\n  node [shape=plaintext];\n";
    for (std::size_t k = 0; k < diagram.levels.size(); ++k) {
        out += "  { rank=same;";
        for (const auto& node : diagram.levels[k]) {
            out += " \"L" + std::to_string(k) + "_" + std::to_string(node.irrep) + "\" [label=\"ρ" +
                   std::to_string(node.irrep) + "," + node.multiplicity.get_str() + "\"];";
        }
        out += " }\n";
    }
    for (const auto& e : diagram.edges) {
        out += "  \"L" + std::to_string(e.level - 1) + "_" + std::to_string(e.from) + "\" -> \"L" +
               std::to_string(e.level) + "_" + std::to_string(e.to) + "\"";
        if (e.weight != 1) out += " [label=\"" + std::to_string(e.weight) + "\"]";
        out += ";\n";
    }
    return out + "}\n";
}

}  // namespace z4cent
