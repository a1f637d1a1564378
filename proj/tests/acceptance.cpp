// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
// All comparisons are exact (tolerance zero). Wall-clock limits are listed in
// kLimits and include group construction from scratch.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "z4cent/cli/run.hpp"

using namespace z4cent;
namespace G = z4cent::golden;

namespace {

constexpr double kNoLimit = 0.0;

struct Limits {
    double enumeration = 5.0;
    double normal_forms = 10.0;
    double kronecker_oracle = 30.0;
    double invariants = 60.0;
};
constexpr Limits kLimits{};

constexpr unsigned kClosedFormKmax = 20;
constexpr unsigned kKroneckerKmax = 4;
constexpr unsigned kMolienDmax = 8;

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> body;
};

const FiniteGroup& group() {
    static const FiniteGroup g = type_ii_group();
    return g;
}
const ProjGroup& pgroup() {
    static const ProjGroup pg = project(group());
    return pg;
}
const CharacterTable& table() {
    static const CharacterTable t = build_character_table(pgroup());
    return t;
}
const IntMatrix& fusion() {
    static const IntMatrix a = fusion_matrix(table());
    return a;
}

std::vector<BigInt> as_big(const std::vector<long>& v) { return {v.begin(), v.end()}; }

Outcome group_enumeration() {
    const FiniteGroup g = type_ii_group();
    const auto z = center(g);
    const ProjGroup pg = project(g);
    std::ostringstream s;
    s << "|G|=" << g.size() << " |Z|=" << z.size() << " |PG|=" << pg.size();
    bool scalar_center = true;
    for (const auto& e : z) scalar_center = scalar_center && e.matrix.is_scalar();
    std::set<std::string> expected, got;
    for (long e : {0, 2, 4, 6}) expected.insert(generator_t().pow(e).serialize());
    for (const auto& e : z) got.insert(e.matrix.serialize());
    return {static_cast<long>(g.size()) == G::kOrderG && static_cast<long>(z.size()) == G::kOrderZ &&
                static_cast<long>(pg.size()) == G::kOrderPG && scalar_center && got == expected,
            s.str() + ", Z = <T^2>"};
}

Outcome relation_suite() {
    const auto rel = verify_relations(generator_d(), generator_t());
    const auto perturbed = verify_relations(generator_d(), perturbed_generator_t());
    std::set<std::string> names;
    for (const auto& r : rel) names.insert(r.name);
    const bool r4_fails = perturbed.at(3).name == "R4" && !perturbed.at(3).holds;
    std::ostringstream s;
    s << rel.size() << " relation instances R1-R8 " << (all_hold(rel) ? "hold" : "do not all hold")
      << "; perturbed T " << (r4_fails ? "fails" : "satisfies") << " R4";
    return {all_hold(rel) && names.size() == 8 && r4_fails, s.str()};
}

Outcome normal_form_bijection() {
    const auto rep = check_normal_forms();
    std::ostringstream s;
    s << rep.words << " words, " << rep.distinct_matrices << " distinct matrices, coherence " << rep.coherent << "/"
      << rep.coherence_cases;
    return {rep.ok(), s.str()};
}

Outcome conjugacy_data() {
    const auto& pg = pgroup();
    bool ok = pg.classes().size() == G::kClassWords.size();
    std::vector<long> sizes, orders;
    for (const auto& c : pg.classes()) {
        sizes.push_back(static_cast<long>(c.size));
        orders.push_back(static_cast<long>(c.element_order));
        ok = ok && c.size * centralizer_size(pg, c.representative) == pg.size();
        ok = ok && c.representative_word == G::kClassWords.at(c.index - 1);
    }
    ok = ok && sizes == G::kClassSizes && orders == G::kClassOrders;
    std::ostringstream s;
    s << pg.classes().size() << " classes, sizes and orders match, |class|·|centralizer| = 96 for each";
    return {ok, ok ? s.str() : "class data differs"};
}

Outcome character_table() {
    std::size_t mismatches = 0;
    for (std::size_t r = 0; r < 10; ++r)
        for (std::size_t c = 0; c < 10; ++c)
            if (table().matrix()(r, c) != cli::detail::parse_table_value(G::kCharacterTable[r][c])) ++mismatches;
    const auto orth = verify_character_table(table());
    std::ostringstream s;
    s << 100 - mismatches << "/100 entries match; weighted row orthogonality "
      << (orth.rows_orthonormal ? "exact" : "violated");
    return {mismatches == 0 && orth.rows_orthonormal, s.str()};
}

Outcome fusion_rules() {
    const auto& a = fusion();
    bool products_ok = true, rows_ok = true;
    for (std::size_t i = 0; i < 10; ++i) {
        const auto m = decompose_character(table(), pointwise_product(table().row(kNaturalIrrep), table().row(i)));
        std::vector<BigInt> expected(10, 0);
        for (int k : G::kProductsWithChi7[i]) expected[static_cast<std::size_t>(k - 1)] += 1;
        products_ok = products_ok && m == expected;
        for (std::size_t j = 0; j < 10; ++j) rows_ok = rows_ok && m[j] == a[i][j];
    }
    const bool matrix_ok = a == IntMatrix(G::kFusionMatrix.begin(), G::kFusionMatrix.end());
    std::ostringstream s;
    s << "ten χ7·χi decompositions " << (products_ok ? "match" : "differ") << ", A "
      << (matrix_ok ? "equals" : "differs from") << " the printed matrix, rows "
      << (rows_ok ? "equal" : "differ from") << " the decompositions";
    return {products_ok && matrix_ok && rows_ok, s.str()};
}

Outcome multiplicities() {
    const auto& a = fusion();
    bool rows_ok = true;
    for (std::size_t k = 0; k < G::kMultiplicities.size(); ++k)
        rows_ok = rows_ok && tensor_multiplicities(a, static_cast<unsigned>(k)) == as_big(G::kMultiplicities[k]);
    bool closed_ok = true, conserved = true;
    for (unsigned k = 1; k <= kClosedFormKmax; ++k) {
        const auto d = tensor_multiplicities(a, k);
        BigInt total = 0, p3;
        mpz_ui_pow_ui(p3.get_mpz_t(), 3, k);
        for (std::size_t l = 0; l < 10; ++l) {
            closed_ok = closed_ok && closed_form_d(static_cast<int>(l + 1), k) == d[l];
            total += d[l] * static_cast<long>(table().degrees()[l]);
        }
        conserved = conserved && total == p3;
    }
    std::ostringstream s;
    s << "d(0..5) " << (rows_ok ? "match" : "differ") << "; closed forms " << (closed_ok ? "agree" : "disagree")
      << " for k <= " << kClosedFormKmax << "; sum d·deg = 3^k " << (conserved ? "holds" : "fails");
    return {rows_ok && closed_ok && conserved, s.str()};
}

Outcome dimensions() {
    const auto& a = fusion();
    bool values_ok = true, agree = true;
    for (unsigned k = 0; k < G::kCentralizerDims.size(); ++k) {
        values_ok = values_ok && centralizer_dim(a, k) == G::kCentralizerDims[k] &&
                    centralizer_dim_closed_form(k) == G::kCentralizerDims[k];
    }
    for (unsigned k = 0; k <= kClosedFormKmax; ++k) agree = agree && centralizer_dim(a, k) == centralizer_dim_closed_form(k);
    std::ostringstream s;
    s << "dim A_0..9 " << (values_ok ? "match" : "differ") << " (last " << centralizer_dim(a, 9).get_str()
      << "); sum d^2 = (57+6·5^k+9^k)/96 " << (agree ? "for all" : "not for all") << " k <= " << kClosedFormKmax;
    return {values_ok && agree, s.str()};
}

Outcome kronecker_oracle() {
    CycMatrix dk = CycMatrix::identity(1), tk = CycMatrix::identity(1);
    bool ok = true;
    std::size_t size = 1;
    for (unsigned k = 1; k <= kKroneckerKmax; ++k) {
        dk = dk.kron(rho7_d());
        tk = tk.kron(rho7_t());
        size = dk.rows();
        const auto chi = character({0, dk.rows(), dk, tk}, pgroup().classes());
        ok = ok && decompose_character(table(), chi) == tensor_multiplicities(fusion(), k);
    }
    std::ostringstream s;
    s << "traces of literal Kronecker powers up to " << size << "x" << size << " decompose to d(k), k <= "
      << kKroneckerKmax;
    return {ok, ok ? s.str() : "Kronecker character decomposition differs from d(k)"};
}

Outcome invariant_theory() {
    const auto& g = group();
    const auto molien = molien_coeffs(g, kMolienDmax);
    bool molien_ok = true;
    std::vector<std::string> cs;
    for (unsigned d = 0; d <= kMolienDmax; ++d) {
        molien_ok = molien_ok && molien[d] == reynolds_rank(g, d);
        cs.push_back(molien[d].get_str());
    }
    const Z4Code code = type_ii_length8_code();
    const bool type_ii = is_type_II(code).type_ii;
    const bool invariant = check_invariance(swe(code), g);
    const Z4Code small(1, {{2}});
    const bool neg_code = !is_type_II(small).type_ii;
    const bool neg_poly = !check_invariance(Poly3::x(), g);
    std::ostringstream s;
    s << "Molien c0..c8 = (" << cli::detail::join(cs, ",") << ") " << (molien_ok ? "=" : "!=")
      << " Reynolds ranks; length-8 code type II " << (type_ii ? "yes" : "no") << ", swe invariant "
      << (invariant ? "yes" : "no") << "; controls {0,2} and x rejected " << (neg_code && neg_poly ? "yes" : "no");
    return {molien_ok && type_ii && invariant && neg_code && neg_poly, s.str()};
}

Outcome reproduction_report() {
    const char* argv[] = {"z4cent", "reproduce-paper", "--format", "json"};
    std::ostringstream out, err;
    const int code = cli::main_entry(4, argv, out, err);
    std::set<int> checks;
    bool columns = true;
    std::size_t rows = 0;
    if (code == cli::kExitOk) {
        const auto j = cli::Json::parse(out.str());
        for (const auto& row : j["rows"]) {
            ++rows;
            checks.insert(row["check"].get<int>());
            columns = columns && row.contains("computed") && row.contains("published");
        }
    }
    const bool all_checks = checks == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8};
    std::ostringstream s;
    s << "exit " << code << ", " << rows << " rows covering checks " << checks.size() << "/8";
    return {code == cli::kExitOk && all_checks && columns, s.str()};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "group enumeration", kLimits.enumeration, group_enumeration},
        {2, "relation suite", kNoLimit, relation_suite},
        {3, "normal-form bijection", kLimits.normal_forms, normal_form_bijection},
        {4, "conjugacy data", kNoLimit, conjugacy_data},
        {5, "character table", kNoLimit, character_table},
        {6, "fusion", kNoLimit, fusion_rules},
        {7, "multiplicities", kNoLimit, multiplicities},
        {8, "dimensions", kNoLimit, dimensions},
        {9, "small-k Kronecker oracle", kLimits.kronecker_oracle, kronecker_oracle},
        {10, "invariant theory", kLimits.invariants, invariant_theory},
        {11, "reproduce-paper", kNoLimit, reproduction_report},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.limit_seconds == kNoLimit || seconds < c.limit_seconds;
        const bool pass = o.pass && in_time;
        if (!pass) ++failures;
        std::ostringstream timing;
        timing.setf(std::ios::fixed);
        timing.precision(2);
        timing << seconds << " s";
        if (c.limit_seconds != kNoLimit) timing << " < " << c.limit_seconds << " s" << (in_time ? "" : " EXCEEDED");
        std::cout << (pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << ": " << o.detail << " ["
                  << timing.str() << "]" << std::endl;
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failures) << "/" << criteria.size()
              << " acceptance criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
