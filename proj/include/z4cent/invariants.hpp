#pragma once

/**
 * @file invariants.hpp
 * @brief Polynomial invariants of a 3x3 matrix group, Molien series and
 * symmetrized weight enumerators of Z4-codes.
 *
 * A matrix g acts on C[x,y,z] by (g.f)(v) = f(g v) with v = (x,y,z)^T.
 * Under this convention act(gh, f) = act(h, act(g, f)).
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "finite_group.hpp"

namespace z4cent {

using Exponents = std::array<unsigned, 3>;

class Poly3 {
public:
    using Terms = std::map<Exponents, Cyc8, std::greater<>>;

    Poly3() = default;
    Poly3(const Cyc8& c) {  // NOLINT: constants convert implicitly
        if (!c.is_zero()) terms_[{0, 0, 0}] = c;
    }
    Poly3(long c) : Poly3(Cyc8(c)) {}  // NOLINT

    static Poly3 monomial(const Exponents& e, const Cyc8& c = Cyc8(1)) {
        Poly3 p;
        if (!c.is_zero()) p.terms_[e] = c;
        return p;
    }
    static Poly3 x() { return monomial({1, 0, 0}); }
    static Poly3 y() { return monomial({0, 1, 0}); }
    static Poly3 z() { return monomial({0, 0, 1}); }
    static Poly3 variable(int j) {
        Exponents e{0, 0, 0};
        e.at(static_cast<std::size_t>(j)) = 1;
        return monomial(e);
    }

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    [[nodiscard]] Cyc8 coefficient(const Exponents& e) const {
        const auto it = terms_.find(e);
        return it == terms_.end() ? Cyc8() : it->second;
    }

    /// Total degree if homogeneous, nullopt otherwise (and for the zero polynomial).
    [[nodiscard]] std::optional<unsigned> homogeneous_degree() const {
        std::optional<unsigned> deg;
        for (const auto& [e, c] : terms_) {
            const unsigned d = e[0] + e[1] + e[2];
            if (deg && *deg != d) return std::nullopt;
            deg = d;
        }
        return deg;
    }

    [[nodiscard]] unsigned max_degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
        return d;
    }

    [[nodiscard]] Cyc8 coefficient_sum() const {
        Cyc8 s;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    void add_term(const Exponents& e, const Cyc8& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (inserted) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    Poly3& operator+=(const Poly3& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly3& operator-=(const Poly3& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
    friend Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
    Poly3 operator-() const { return Cyc8(-1) * *this; }

    friend Poly3 operator*(const Cyc8& s, const Poly3& p) {
        Poly3 out;
        if (s.is_zero()) return out;
        for (const auto& [e, c] : p.terms_) out.terms_.emplace(e, s * c);
        return out;
    }

    friend Poly3 operator*(const Poly3& a, const Poly3& b) {
        Poly3 out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        return out;
    }

    [[nodiscard]] Poly3 pow(unsigned e) const {
        Poly3 r(1);
        for (unsigned k = 0; k < e; ++k) r = r * *this;
        return r;
    }

    friend bool operator==(const Poly3&, const Poly3&) = default;

    /// Canonical text: "c * x^a y^b z^c" terms joined by " + ", in
    /// descending exponent order, coefficients as Cyc8 canonical strings.
    [[nodiscard]] std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += c.to_string() + " * x^" + std::to_string(e[0]) + " y^" + std::to_string(e[1]) + " z^" +
                   std::to_string(e[2]);
        }
        return out;
    }

    /// Human-readable form, e.g. "x^2 + 2*y^2 + (-1+i)*z".
    [[nodiscard]] std::string to_pretty() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            std::string mono;
            const char* names = "xyz";
            for (int j = 0; j < 3; ++j) {
                if (e[j] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names[j];
                if (e[j] > 1) mono += "^" + std::to_string(e[j]);
            }
            std::string coeff = c.to_pretty();
            const bool simple = coeff.find_first_of("+-", 1) == std::string::npos;
            if (!simple) coeff = "(" + coeff + ")";
            std::string term;
            if (mono.empty()) term = coeff;
            else if (coeff == "1") term = mono;
            else if (coeff == "-1") term = "-" + mono;
            else term = coeff + "*" + mono;
            if (out.empty()) out = term;
            else if (term.front() == '-') out += " - " + term.substr(1);
            else out += " + " + term;
        }
        return out;
    }

    /// Parses the canonical text produced by to_string.
    static Poly3 parse(const std::string& text) {
        Poly3 p;
        if (text == "0") return p;
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t end = text.find(" + ", pos);
            if (end == std::string::npos) end = text.size();
            const std::string term = text.substr(pos, end - pos);
            const auto star = term.find(" * ");
            if (star == std::string::npos) throw Error("malformed polynomial term: " + term);
            Exponents e{};
            if (std::sscanf(term.c_str() + star + 3, "x^%u y^%u z^%u", &e[0], &e[1], &e[2]) != 3) {
                throw Error("malformed monomial: " + term);
            }
            p.add_term(e, Cyc8::parse(term.substr(0, star)));
            pos = end == text.size() ? end : end + 3;
        }
        return p;
    }

private:
    Terms terms_;
};

/// Monomials of total degree d in descending exponent order.
inline std::vector<Exponents> monomials(unsigned d) {
    std::vector<Exponents> out;
    for (unsigned a = d + 1; a-- > 0;)
        for (unsigned b = d - a + 1; b-- > 0;) out.push_back({a, b, d - a - b});
    return out;
}

namespace detail {

/// Images of x, y, z under v -> g v: the j-th is sum_i g(j, i) x_i.
inline std::array<Poly3, 3> linear_images(const CycMatrix& g) {
    if (g.rows() != 3 || g.cols() != 3) throw DimensionMismatch("polynomial action needs a 3x3 matrix");
    std::array<Poly3, 3> out;
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i)
            out[j].add_term({i == 0 ? 1u : 0u, i == 1 ? 1u : 0u, i == 2 ? 1u : 0u}, g(j, i));
    return out;
}

/// Sums f(k) for k in [0, n), splitting the range over `threads` workers.
template <typename T, typename F>
T parallel_sum(std::size_t n, unsigned threads, F f) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    std::vector<T> partial(threads);
    auto work = [&](unsigned w) {
        for (std::size_t k = w; k < n; k += threads) partial[w] += f(k);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    T total = std::move(partial[0]);
    for (unsigned w = 1; w < threads; ++w) total += partial[w];
    return total;
}

}  // namespace detail

inline Poly3 act_poly(const CycMatrix& g, const Poly3& f) {
    const auto lin = detail::linear_images(g);
    std::array<std::vector<Poly3>, 3> powers;
    const unsigned dmax = f.max_degree();
    for (int j = 0; j < 3; ++j) {
        powers[j].push_back(Poly3(1));
        for (unsigned k = 1; k <= dmax; ++k) powers[j].push_back(powers[j].back() * lin[j]);
    }
    Poly3 out;
    for (const auto& [e, c] : f.terms()) out += c * (powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]]);
    return out;
}

/// (1/|G|) sum_g act_poly(g, f).
inline Poly3 reynolds(const FiniteGroup& group, const Poly3& f, unsigned threads = 1) {
    Poly3 sum = detail::parallel_sum<Poly3>(group.size(), threads,
                                            [&](std::size_t k) { return act_poly(group.element(k).matrix, f); });
    return Cyc8(Rational(1, static_cast<long>(group.size()))) * sum;
}

/// reynolds(group, m) for every monomial m of degree d, in monomials(d) order.
/// Images of monomials are built up degree by degree for each group element.
inline std::vector<Poly3> reynolds_monomials(const FiniteGroup& group, unsigned d, unsigned threads = 1) {
    const auto mons = monomials(d);
    struct Batch {
        std::vector<Poly3> images;
        Batch& operator+=(const Batch& o) {
            if (images.empty()) images.resize(o.images.size());
            for (std::size_t k = 0; k < o.images.size(); ++k) images[k] += o.images[k];
            return *this;
        }
    };
    Batch sum = detail::parallel_sum<Batch>(group.size(), threads, [&](std::size_t idx) {
        const auto lin = detail::linear_images(group.element(idx).matrix);
        std::map<Exponents, Poly3> level{{{0, 0, 0}, Poly3(1)}};
        for (unsigned deg = 1; deg <= d; ++deg) {
            std::map<Exponents, Poly3> next;
            for (const auto& e : monomials(deg)) {
                const int j = e[0] > 0 ? 0 : (e[1] > 0 ? 1 : 2);
                Exponents lower = e;
                --lower[j];
                next.emplace(e, level.at(lower) * lin[j]);
            }
            level = std::move(next);
        }
        Batch b;
        for (const auto& e : mons) b.images.push_back(level.at(e));
        return b;
    });
    const Cyc8 scale(Rational(1, static_cast<long>(group.size())));
    std::vector<Poly3> out;
    for (auto& p : sum.images) out.push_back(scale * p);
    return out;
}

/// Dimension of the degree-d invariants as the rank of the Reynolds images of
/// all degree-d monomials.
inline std::size_t reynolds_rank(const FiniteGroup& group, unsigned d, unsigned threads = 1) {
    const auto mons = monomials(d);
    const auto images = reynolds_monomials(group, d, threads);
    CycMatrix m(images.size(), mons.size());
    for (std::size_t r = 0; r < images.size(); ++r)
        for (std::size_t c = 0; c < mons.size(); ++c) m(r, c) = images[r].coefficient(mons[c]);
    return m.rank();
}

namespace detail {

struct Series {
    std::vector<Cyc8> c;
    Series& operator+=(const Series& o) {
        if (c.empty()) c.resize(o.c.size());
        for (std::size_t k = 0; k < o.c.size(); ++k) c[k] += o.c[k];
        return *this;
    }
};

/// Coefficients of det(I - t g) for 3x3 g: 1, -e1, e2, -e3.
inline std::array<Cyc8, 4> char_poly_reversed(const CycMatrix& g) {
    const Cyc8 e1 = g.trace();
    const Cyc8 e2 = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0) + g(0, 0) * g(2, 2) - g(0, 2) * g(2, 0) +
                    g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1);
    return {Cyc8(1), -e1, e2, -g.det()};
}

/// Truncated reciprocal of a power series with constant term 1.
inline std::vector<Cyc8> reciprocal(const std::array<Cyc8, 4>& p, unsigned dmax) {
    std::vector<Cyc8> r(dmax + 1);
    r[0] = Cyc8(1);
    for (unsigned n = 1; n <= dmax; ++n) {
        Cyc8 s;
        for (unsigned k = 1; k <= std::min(n, 3u); ++k) s += p[k] * r[n - k];
        r[n] = -s;
    }
    return r;
}

}  // namespace detail

/// Coefficients c_0..c_dmax of the Molien series (1/|G|) sum_g 1/det(I - t g).
inline std::vector<BigInt> molien_coeffs(const FiniteGroup& group, unsigned dmax, unsigned threads = 1) {
    if (group.dimension() != 3) throw DimensionMismatch("Molien series is implemented for 3x3 groups");
    const detail::Series sum = detail::parallel_sum<detail::Series>(group.size(), threads, [&](std::size_t k) {
        return detail::Series{detail::reciprocal(detail::char_poly_reversed(group.element(k).matrix), dmax)};
    });
    std::vector<BigInt> out;
    const Cyc8 scale(Rational(1, static_cast<long>(group.size())));
    for (unsigned d = 0; d <= dmax; ++d) {
        const Cyc8 v = scale * sum.c[d];
        if (!v.is_rational_integer() || v.coeff(0).sign() < 0) {
            throw VerificationFailure("Molien coefficient c" + std::to_string(d) + " is " + v.to_pretty());
        }
        out.push_back(v.coeff(0).numerator());
    }
    return out;
}

/// True iff every generator fixes f, hence the whole group does.
inline bool check_invariance(const Poly3& f, const FiniteGroup& group) {
    return std::all_of(group.generators().begin(), group.generators().end(),
                       [&](const CycMatrix& g) { return act_poly(g, f) == f; });
}

/// The scalar lambda with act_poly(g, f) = lambda f, if there is one.
inline std::optional<Cyc8> eigenvalue(const CycMatrix& g, const Poly3& f) {
    if (f.is_zero()) return std::nullopt;
    const Poly3 image = act_poly(g, f);
    const auto& [e, c] = *f.terms().begin();
    const Cyc8 lambda = image.coefficient(e) * c.inverse();
    if (image != lambda * f) return std::nullopt;
    return lambda;
}

using Z4Vector = std::vector<std::uint8_t>;

/// An additive subgroup of Z4^n given by generator rows.
class Z4Code {
public:
    static constexpr std::size_t kMaxElements = std::size_t{1} << 24;

    Z4Code(std::size_t length, std::vector<Z4Vector> generators) : n_(length), generators_(std::move(generators)) {
        for (auto& g : generators_) {
            if (g.size() != n_) throw DimensionMismatch("generator has length " + std::to_string(g.size()));
            for (auto& v : g) v %= 4;
        }
        std::set<Z4Vector> seen{Z4Vector(n_, 0)};
        std::vector<Z4Vector> queue{Z4Vector(n_, 0)};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (const auto& g : generators_) {
                Z4Vector next = queue[head];
                for (std::size_t i = 0; i < n_; ++i) next[i] = static_cast<std::uint8_t>((next[i] + g[i]) % 4);
                if (seen.insert(next).second) {
                    if (seen.size() > kMaxElements) throw GroupTooLarge("code exceeds the element cap");
                    queue.push_back(std::move(next));
                }
            }
        }
        elements_.assign(seen.begin(), seen.end());
    }

    /// Parses rows like "1,1,1,1" or "1111".
    static Z4Vector parse_row(const std::string& text) {
        Z4Vector row;
        for (char ch : text) {
            if (ch == ',' || ch == ' ') continue;
            if (ch < '0' || ch > '3') throw Error("code rows use the digits 0..3, got '" + std::string(1, ch) + "'");
            row.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
        if (row.empty()) throw Error("empty code row");
        return row;
    }

    static Z4Code from_rows(const std::vector<std::string>& rows) {
        if (rows.empty()) throw Error("a code needs at least one generator row");
        std::vector<Z4Vector> gens;
        for (const auto& r : rows) gens.push_back(parse_row(r));
        return Z4Code(gens.front().size(), gens);
    }

    [[nodiscard]] std::size_t length() const { return n_; }
    [[nodiscard]] const std::vector<Z4Vector>& generators() const { return generators_; }
    [[nodiscard]] const std::vector<Z4Vector>& elements() const { return elements_; }
    [[nodiscard]] std::size_t size() const { return elements_.size(); }
    [[nodiscard]] bool contains(const Z4Vector& v) const {
        return std::binary_search(elements_.begin(), elements_.end(), v);
    }

private:
    std::size_t n_;
    std::vector<Z4Vector> generators_;
    std::vector<Z4Vector> elements_;
};

inline unsigned inner_product_mod4(const Z4Vector& u, const Z4Vector& v) {
    unsigned s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s % 4;
}

inline unsigned norm_mod8(const Z4Vector& v) {
    unsigned s = 0;
    for (auto x : v) s += x * x;
    return s % 8;
}

/// Symmetrized weight enumerator sum_v x^wt0 y^(wt1+wt3) z^wt2.
inline Poly3 swe(const Z4Code& code) {
    std::map<Exponents, long> counts;
    for (const auto& v : code.elements()) {
        Exponents e{0, 0, 0};
        for (auto s : v) ++e[s == 0 ? 0 : (s == 2 ? 2 : 1)];
        ++counts[e];
    }
    Poly3 out;
    for (const auto& [e, c] : counts) out.add_term(e, Cyc8(c));
    return out;
}

/// Size of the dual code, by enumerating all of Z4^n.
inline std::size_t dual_size(const Z4Code& code) {
    const std::size_t n = code.length();
    Z4Vector u(n, 0);
    std::size_t count = 0;
    while (true) {
        bool orthogonal = true;
        for (const auto& g : code.generators())
            if (inner_product_mod4(u, g) != 0) {
                orthogonal = false;
                break;
            }
        if (orthogonal) ++count;
        std::size_t i = 0;
        while (i < n && u[i] == 3) u[i++] = 0;
        if (i == n) break;
        ++u[i];
    }
    return count;
}

struct TypeIIReport {
    bool type_ii = false;
    bool self_orthogonal = false;
    bool self_dual = false;
    bool norms_divisible_by_8 = false;
    std::size_t code_size = 0;
    std::size_t dual_size = 0;
    std::string reason;
};

inline TypeIIReport is_type_II(const Z4Code& code, std::size_t max_length = 12) {
    if (code.length() > max_length) {
        throw Unsupported("dual enumeration is capped at length " + std::to_string(max_length));
    }
    TypeIIReport r;
    r.code_size = code.size();
    r.self_orthogonal = true;
    for (const auto& a : code.generators())
        for (const auto& b : code.generators())
            if (inner_product_mod4(a, b) != 0) r.self_orthogonal = false;
    r.dual_size = dual_size(code);
    r.self_dual = r.self_orthogonal && r.dual_size == r.code_size;
    r.norms_divisible_by_8 = std::all_of(code.elements().begin(), code.elements().end(),
                                         [](const Z4Vector& v) { return norm_mod8(v) == 0; });
    r.type_ii = r.self_dual && r.norms_divisible_by_8;
    if (!r.self_orthogonal) r.reason = "not self-orthogonal";
    else if (!r.self_dual)
        r.reason = "not self-dual: |C| = " + std::to_string(r.code_size) + ", |dual| = " + std::to_string(r.dual_size);
    else if (!r.norms_divisible_by_8) r.reason = "some codeword has norm not divisible by 8";
    else r.reason = "self-dual with all norms divisible by 8";
    return r;
}

/// Length-8 code spanned by the all-ones word and every 2e_i + 2e_j.
inline Z4Code type_ii_length8_code() {
    std::vector<Z4Vector> gens{Z4Vector(8, 1)};
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = i + 1; j < 8; ++j) {
            Z4Vector v(8, 0);
            v[i] = v[j] = 2;
            gens.push_back(v);
        }
    return Z4Code(8, gens);
}

}  // namespace z4cent
