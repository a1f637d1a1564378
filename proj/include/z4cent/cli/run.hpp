#pragma once

/**
 * @file run.hpp
 * @brief Subcommands of the z4cent command-line tool.
 *
 * Every subcommand writes its artifact to a stream and returns an exit code:
 * 0 success, 1 usage error, 2 a computed value disagrees with a published one.
 */

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "../character_table.hpp"
#include "../fusion.hpp"
#include "../invariants.hpp"
#include "../normal_form.hpp"
#include "../projective.hpp"
#include "golden.hpp"

namespace z4cent::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;
inline constexpr unsigned kMaxK = 64;
inline constexpr unsigned kMaxDegree = 256;
inline constexpr int kSchemaVersion = 1;

class UsageError : public Error {
public:
    using Error::Error;
};

enum class Format { Auto, Table, Json, Csv, Dot };

inline Format parse_format(const std::string& s) {
    if (s == "auto") return Format::Auto;
    if (s == "table") return Format::Table;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "dot") return Format::Dot;
    throw UsageError("unknown format '" + s + "'");
}

inline std::string format_name(Format f) {
    switch (f) {
        case Format::Auto: return "auto";
        case Format::Table: return "table";
        case Format::Json: return "json";
        case Format::Csv: return "csv";
        case Format::Dot: return "dot";
    }
    return "?";
}

struct RunConfig {
    std::string subcommand;
    std::optional<unsigned> kmax;
    unsigned dmax = 8;
    Format format = Format::Auto;
    std::optional<std::string> out;
    std::vector<std::string> gens;
    bool check_invariance = false;
    unsigned parallel = 1;
};

inline const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names = {"enumerate", "verify-relations", "normal-forms", "classes",
                                                   "chartable", "fuse",             "bratteli",     "dims",
                                                   "molien",    "swe",              "reproduce-paper"};
    return names;
}

/// Lazily built shared state.
class Context {
public:
    const FiniteGroup& group() {
        if (!group_) group_ = std::make_unique<FiniteGroup>(type_ii_group());
        return *group_;
    }
    const ProjGroup& pgroup() {
        if (!pgroup_) pgroup_ = std::make_unique<ProjGroup>(project(group()));
        return *pgroup_;
    }
    const std::vector<Representation>& irreps() {
        if (!irreps_) irreps_ = std::make_unique<std::vector<Representation>>(build_irreps());
        return *irreps_;
    }
    const CharacterTable& table() {
        if (!table_) table_ = std::make_unique<CharacterTable>(irreps(), pgroup().classes());
        return *table_;
    }
    const IntMatrix& fusion() {
        if (!fusion_) fusion_ = std::make_unique<IntMatrix>(fusion_matrix(table()));
        return *fusion_;
    }

private:
    std::unique_ptr<FiniteGroup> group_;
    std::unique_ptr<ProjGroup> pgroup_;
    std::unique_ptr<std::vector<Representation>> irreps_;
    std::unique_ptr<CharacterTable> table_;
    std::unique_ptr<IntMatrix> fusion_;
};

namespace detail {

inline Cyc8 value_a() { return Cyc8::gaussian(-1, -2); }
inline Cyc8 value_b() { return Cyc8::gaussian(-1, 2); }

/// Gaussian-integer notation with a = -1-2i, b = -1+2i.
inline std::string ab_notation(const Cyc8& v) {
    if (v == value_a()) return "a";
    if (v == value_b()) return "b";
    return v.to_pretty();
}

/// Parses "3", "-i", "-2+4i", "a", "b".
inline Cyc8 parse_table_value(const std::string& s) {
    if (s == "a") return value_a();
    if (s == "b") return value_b();
    static const std::regex gaussian(R"(^([+-]?\d+)?(?:([+-]?)(\d*)i)?$)");
    std::smatch m;
    if (s.empty() || !std::regex_match(s, m, gaussian)) throw Error("cannot read value '" + s + "'");
    const long re = m[1].matched ? std::stol(m[1].str()) : 0;
    long im = 0;
    if (s.back() == 'i') {
        im = m[3].length() ? std::stol(m[3].str()) : 1;
        if (m[2].str() == "-") im = -im;
    }
    return Cyc8::gaussian(re, im);
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) out += sep;
        out += parts[k];
    }
    return out;
}

template <typename T>
std::vector<std::string> to_strings(const std::vector<T>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) {
        std::ostringstream s;
        s << x;
        out.push_back(s.str());
    }
    return out;
}

inline std::string tuple_string(const std::vector<std::string>& parts) { return "(" + join(parts, ",") + ")"; }

inline std::string constituents(const std::vector<BigInt>& m) {
    std::vector<std::string> terms;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        terms.push_back((m[i] == 1 ? std::string() : m[i].get_str() + "*") + "χ" + std::to_string(i + 1));
    }
    return terms.empty() ? "0" : join(terms, "+");
}

inline std::string constituents(const std::vector<int>& indices) {
    std::vector<BigInt> m(10, 0);
    for (int i : indices) m.at(static_cast<std::size_t>(i - 1)) += 1;
    return constituents(m);
}

/// Left-aligned columns separated by two spaces.
inline void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    auto width = [](const std::string& s) {
        // count code points so that multibyte symbols align
        return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
    };
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (widths.size() <= c) widths.push_back(0);
            widths[c] = std::max(widths[c], width(r[c]));
        }
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t c = 0; c < r.size(); ++c) {
            line += r[c];
            if (c + 1 < r.size()) line += std::string(widths[c] - width(r[c]) + 2, ' ');
        }
        out << line << '\n';
    }
}

inline Json header(const std::string& command) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

inline void require_format(Format f, std::initializer_list<Format> allowed, const std::string& command) {
    if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
        throw UsageError("format '" + format_name(f) + "' is not available for " + command);
    }
}

inline Format resolve(Format f, Format fallback) { return f == Format::Auto ? fallback : f; }

inline std::vector<std::string> big_strings(const std::vector<BigInt>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

/// Center elements named as powers of T where possible, in increasing exponent.
inline std::vector<std::string> center_words(const FiniteGroup& g) {
    std::vector<std::string> named, other;
    std::vector<bool> used;
    const auto z = center(g);
    used.assign(z.size(), false);
    for (long e = 0; e < 8; e += 2) {
        const CycMatrix p = g.generators()[1].pow(e);
        for (std::size_t k = 0; k < z.size(); ++k)
            if (!used[k] && z[k].matrix == p) {
                used[k] = true;
                named.push_back(e == 0 ? "1" : "T^" + std::to_string(e));
            }
    }
    for (std::size_t k = 0; k < z.size(); ++k)
        if (!used[k]) other.push_back(z[k].matrix.serialize());
    named.insert(named.end(), other.begin(), other.end());
    return named;
}

}  // namespace detail

inline int cmd_enumerate(Context& ctx, const RunConfig& cfg, std::ostream& out) {
    const Format f = detail::resolve(cfg.format, Format::Table);
    detail::require_format(f, {Format::Table, Format::Json}, "enumerate");
    const auto& g = ctx.group();
    const auto z = center(g);
    const std::vector<std::string> words = detail::center_words(g);
    const std::size_t pg = ctx.pgroup().size();
    if (f == Format::Json) {
        Json j = detail::header("enumerate");
        j["order_G"] = g.size();
        j["order_Z"] = z.size();
        j["order_PG"] = pg;
        j["center"] = words;
        out << j.dump(2) << '\n';
    } else {
        out << "order(G)=" << g.size() << " order(Z)=" << z.size() << " order(PG)=" << pg << '\n';
        out << "Z = {" << detail::join(words, ", ") << "}\n";
    }
    return kExitOk;
}

inline int cmd_verify_relations(Context& ctx, const RunConfig& cfg, std::ostream& out) {
    const Format f = detail::resolve(cfg.format, Format::Table);
    detail::require_format(f, {Format::Table, Format::Json}, "verify-relations");
    const RelationReport rel = verify_relations(generator_d(), generator_t());
    const RelationReport perturbed = verify_relations(generator_d(), perturbed_generator_t());
    const bool control_fails = !perturbed.at(3).holds;
    const auto proj = verify_projective_relations(ctx.pgroup());
    const bool ok = all_hold(rel) && control_fails &&
                    std::all_of(proj.begin(), proj.end(), [](const ProjRelationCheck& c) { return c.holds; });
    if (f == Format::Json) {
        Json j = detail::header("verify-relations");
        j["relations"] = Json::array();
        for (const auto& r : rel)
            j["relations"].push_back({{"name", r.name}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds}});
        j["projective"] = Json::array();
        for (const auto& r : proj) j["projective"].push_back({{"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds}});
        j["perturbed_R4_fails"] = control_fails;
        j["ok"] = ok;
        out << j.dump(2) << '\n';
    } else {
        std::vector<std::vector<std::string>> rows{{"name", "relation", "status"}};
        for (const auto& r : rel) rows.push_back({r.name, r.lhs + " = " + r.rhs, r.holds ? "holds" : "FAILS"});
        for (const auto& r : proj) rows.push_back({"PG", r.lhs + " = " + r.rhs, r.holds ? "holds" : "FAILS"});
        rows.push_back({"control", "R4 with perturbed T", control_fails ? "fails (expected)" : "HOLDS (unexpected)"});
        detail::print_table(out, rows);
    }
    return ok ? kExitOk : kExitMismatch;
}

inline int cmd_normal_forms(Context&, const RunConfig& cfg, std::ostream& out) {
    const Format f = detail::resolve(cfg.format, Format::Table);
    detail::require_format(f, {Format::Table, Format::Json}, "normal-forms");
    const auto words = enumerate_normal_words();
    const NormalFormReport rep = check_normal_forms();
    if (f == Format::Json) {
        Json j = detail::header("normal-forms");
        j["words"] = Json::array();
        for (const auto& w : words)
            j["words"].push_back({{"tag", w.tag()}, {"word", w.to_string()}, {"matrix", word_to_matrix(w).serialize()}});
        j["self_check"] = {{"words", rep.words},
                           {"distinct_matrices", rep.distinct_matrices},
                           {"coherence_cases", rep.coherence_cases},
                           {"coherent", rep.coherent},
                           {"failures", rep.failures},
                           {"ok", rep.ok()}};
        out << j.dump(2) << '\n';
    } else {
        std::vector<std::vector<std::string>> rows{{"#", "form", "word"}};
        for (std::size_t k = 0; k < words.size(); ++k)
            rows.push_back({std::to_string(k + 1), words[k].tag(), words[k].to_string()});
        detail::print_table(out, rows);
        out << "words: " << rep.words << ", distinct matrices: " << rep.distinct_matrices
            << ", automaton coherence: " << rep.coherent << "/" << rep.coherence_cases << '\n';
        for (const auto& fail : rep.failures) out << "incoherent: " << fail << '\n';
    }
    return rep.ok() ? kExitOk : kExitMismatch;
}

inline int cmd_classes(Context& ctx, const RunConfig& cfg, std::ostream& out) {
    const Format f = detail::resolve(cfg.format, Format::Table);
    detail::require_format(f, {Format::Table, Format::Json}, "classes");
    const auto& pg = ctx.pgroup();
    if (f == Format::Json) {
        Json j = detail::header("classes");
        j["classes"] = Json::array();
        for (const auto& c : pg.classes()) {
            j["classes"].push_back({{"index", c.index},
                                    {"representative", c.representative_word},
                                    {"size", c.size},
                                    {"order", c.element_order},
                                    {"centralizer", centralizer_size(pg, c.representative)}});
        }
        out << j.dump(2) << '\n';
    } else {
        std::vector<std::vector<std::string>> rows{{"class", "representative", "size", "order", "centralizer"}};
        for (const auto& c : pg.classes()) {
            rows.push_back({"C" + std::to_string(c.index), c.representative_word, std::to_string(c.size),
                            std::to_string(c.element_order), std::to_string(centralizer_size(pg, c.representative))});
        }
        detail::print_table(out, rows);
    }
    return kExitOk;
}

inline int cmd_chartable(Context& ctx, const RunConfig& cfg, std::ostream& out) {
    const Format f = detail::resolve(cfg.format, Format::Table);
    detail::require_format(f, {Format::Table, Format::Json}, "chartable");
    const auto& table = ctx.table();
    const auto rep = verify_character_table(table);
    const bool ok = rep.rows_orthonormal && rep.columns_orthogonal && rep.first_row_trivial &&
                    rep.first_column_degrees && rep.degree_square_sum;
    if (f == Format::Json) {
        Json j = detail::header("chartable");
        j["classes"] = Json::array();
        for (const auto& c : table.classes())
            j["classes"].push_back({{"index", c.index}, {"representative", c.representative_word},
                                    {"size", c.size}, {"order", c.element_order}});
        j["degrees"] = table.degrees();
        j["characters"] = Json::array();
        for (std::size_t r = 0; r < table.size(); ++r) {
            Json row = Json::array();
            for (const auto& v : table.row(r)) row.push_back(v.to_string());
            j["characters"].push_back(row);
        }
        j["orthogonality"] = {{"rows", rep.rows_orthonormal}, {"columns", rep.columns_orthogonal}};
        out << j.dump(2) << '\n';
    } else {
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> reps{""}, orders{"order"}, sizes{"size"};
        for (const auto& c : table.classes()) {
            reps.push_back(c.representative_word);
            orders.push_back(std::to_string(c.element_order));
            sizes.push_back(std::to_string(c.size));
        }
        rows.push_back(reps);
        rows.push_back(orders);
        rows.push_back(sizes);
        for (std::size_t r = 0; r < table.size(); ++r) {
            std::vector<std::string> row{"χ" + std::to_string(r + 1)};
            for (const auto& v : table.row(r)) row.push_back(detail::ab_notation(v));
            rows.push_back(row);
        }
        detail::print_table(out, rows);
        out << "a = -1-2i, b = -1+2i\n";
        out << "orthogonality: rows " << (rep.rows_orthonormal ? "ok" : "FAIL") << ", columns "
            << (rep.columns_orthogonal ? "ok" : "FAIL") << '\n';
    }
    return ok ? kExitOk : kExitMismatch;
}

inline int cmd_fuse(Context& ctx, const RunConfig& cfg, std::ostream& out) {
    const Format f = detail::resolve(cfg.format, Format::Table);
    detail::require_format(f, {Format::Table, Format::Json}, "fuse");
    const auto& table = ctx.table();
    const auto& a = ctx.fusion();
    std::vector<std::vector<BigInt>> products;
    for (std::size_t i = 0; i < table.size(); ++i)
        products.push_back(decompose_character(table, pointwise_product(table.row(kNaturalIrrep), table.row(i))));
    if (f == Format::Json) {
        Json j = detail::header("fuse");
        j["products"] = Json::array();
        for (std::size_t i = 0; i < products.size(); ++i) {
            Json m = Json::array();
            for (const auto& x : products[i]) m.push_back(x.get_si());
            j["products"].push_back({{"factor", i + 1}, {"multiplicities", m}});
        }
        j["fusion_matrix"] = a;
        out << j.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < products.size(); ++i)
            out << "χ7·χ" << i + 1 << " = " << detail::constituents(products[i]) << '\n';
        out << "\nA =\n";
        for (const auto& row : a) out << "  " << detail::join(detail::to_strings(row), " ") << '\n';
    }
    return kExitOk;
}

inline unsigned checked_kmax(const RunConfig& cfg, unsigned fallback) {
    const unsigned k = cfg.kmax.value_or(fallback);
    if (k > kMaxK) throw UsageError("--kmax must be at most " + std::to_string(kMaxK));
    return k;
}

inline int cmd_bratteli(Context& ctx, const RunConfig& cfg, std::ostream& out) {
    const Format f = detail::resolve(cfg.format, Format::Dot);
    detail::require_format(f, {Format::Dot, Format::Json}, "bratteli");
    const unsigned kmax = checked_kmax(cfg, 5);
    const auto diagram = bratteli_diagram(ctx.fusion(), kmax);
    if (f == Format::Dot) {
        out << to_dot(diagram);
        return kExitOk;
    }
    Json j = detail::header("bratteli");
    j["kmax"] = kmax;
    j["levels"] = Json::array();
    for (std::size_t k = 0; k < diagram.levels.size(); ++k) {
        Json nodes = Json::array();
        for (const auto& n : diagram.levels[k])
            nodes.push_back({{"irrep", n.irrep}, {"multiplicity", n.multiplicity.get_str()}});
        j["levels"].push_back({{"k", k}, {"nodes", nodes}, {"square_sum", level_square_sum(diagram, k).get_str()}});
    }
    j["edges"] = Json::array();
    for (const auto& e : diagram.edges)
        j["edges"].push_back({{"level", e.level}, {"from", e.from}, {"to", e.to}, {"weight", e.weight}});
    out << j.dump(2) << '\n';
    return kExitOk;
}

inline int cmd_dims(Context& ctx, const RunConfig& cfg, std::ostream& out) {
    const Format f = detail::resolve(cfg.format, Format::Csv);
    detail::require_format(f, {Format::Csv, Format::Json}, "dims");
    const unsigned kmax = checked_kmax(cfg, 9);
    const auto& a = ctx.fusion();
    bool ok = true;
    Json rows = Json::array();
    if (f == Format::Csv) out << "k,d1,d2,d3,d4,d5,d6,d7,d8,d9,d10,dim\n";
    for (unsigned k = 0; k <= kmax; ++k) {
        const auto d = tensor_multiplicities(a, k);
        const BigInt dim = centralizer_dim(a, k);
        if (dim != centralizer_dim_closed_form(k)) ok = false;
        if (f == Format::Csv) {
            out << k << ',' << detail::join(detail::big_strings(d), ",") << ',' << dim.get_str() << '\n';
        } else {
            rows.push_back({{"k", k}, {"d", detail::big_strings(d)}, {"dim", dim.get_str()}});
        }
    }
    if (f == Format::Json) {
        Json j = detail::header("dims");
        j["kmax"] = kmax;
        j["rows"] = rows;
        j["closed_form_agrees"] = ok;
        out << j.dump(2) << '\n';
    }
    return ok ? kExitOk : kExitMismatch;
}

inline int cmd_molien(Context& ctx, const RunConfig& cfg, std::ostream& out) {
    const Format f = detail::resolve(cfg.format, Format::Table);
    detail::require_format(f, {Format::Table, Format::Json}, "molien");
    if (cfg.dmax > kMaxDegree) throw UsageError("--dmax must be at most " + std::to_string(kMaxDegree));
    const auto c = molien_coeffs(ctx.group(), cfg.dmax, cfg.parallel);
    if (f == Format::Json) {
        Json j = detail::header("molien");
        j["dmax"] = cfg.dmax;
        j["coefficients"] = detail::big_strings(c);
        out << j.dump(2) << '\n';
    } else {
        std::vector<std::vector<std::string>> rows{{"d", "dim of degree-d invariants"}};
        for (std::size_t d = 0; d < c.size(); ++d) rows.push_back({std::to_string(d), c[d].get_str()});
        detail::print_table(out, rows);
    }
    return kExitOk;
}

inline int cmd_swe(Context& ctx, const RunConfig& cfg, std::ostream& out) {
    const Format f = detail::resolve(cfg.format, Format::Table);
    detail::require_format(f, {Format::Table, Format::Json}, "swe");
    if (cfg.gens.empty()) throw UsageError("swe needs at least one --gen row");
    std::vector<Z4Vector> rows;
    for (const auto& g : cfg.gens) {
        try {
            rows.push_back(Z4Code::parse_row(g));
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    }
    if (!std::all_of(rows.begin(), rows.end(), [&](const Z4Vector& r) { return r.size() == rows.front().size(); }))
        throw UsageError("all --gen rows must have the same length");
    const Z4Code code(rows.front().size(), rows);
    const Poly3 s = swe(code);
    std::optional<TypeIIReport> type2;
    if (code.length() <= 12) type2 = is_type_II(code);

    Json j = detail::header("swe");
    j["length"] = code.length();
    j["size"] = code.size();
    j["swe"] = s.to_string();
    j["swe_pretty"] = s.to_pretty();
    if (type2) {
        j["type_ii"] = {{"self_dual", type2->self_dual},
                        {"norms_divisible_by_8", type2->norms_divisible_by_8},
                        {"type_ii", type2->type_ii},
                        {"dual_size", type2->dual_size},
                        {"reason", type2->reason}};
    } else {
        j["type_ii"] = nullptr;
    }
    if (cfg.check_invariance) {
        const auto& g = ctx.group();
        const auto t_scalar = eigenvalue(generator_t(), s);
        j["invariance"] = {{"D", act_poly(generator_d(), s) == s},
                           {"T", act_poly(generator_t(), s) == s},
                           {"group", check_invariance(s, g)},
                           {"T_eigenvalue", t_scalar ? Json(t_scalar->to_pretty()) : Json(nullptr)}};
    }
    if (f == Format::Json) {
        out << j.dump(2) << '\n';
    } else {
        out << "length " << code.length() << ", " << code.size() << " codewords\n";
        out << "swe = " << s.to_pretty() << '\n';
        if (type2) {
            out << "type II: " << (type2->type_ii ? "yes" : "no") << " (" << type2->reason << ")\n";
        } else {
            out << "type II: not checked (length above 12)\n";
        }
        if (cfg.check_invariance) {
            const auto& inv = j["invariance"];
            out << "invariant under D: " << (inv["D"].get<bool>() ? "yes" : "no") << '\n';
            out << "invariant under T: " << (inv["T"].get<bool>() ? "yes" : "no") << '\n';
            out << "invariant under G: " << (inv["group"].get<bool>() ? "yes" : "no") << '\n';
            if (!inv["T_eigenvalue"].is_null())
                out << "T acts by the scalar " << inv["T_eigenvalue"].get<std::string>() << '\n';
        }
    }
    return kExitOk;
}

/// One computed-vs-published comparison.
struct ReportRow {
    int check = 0;
    std::string item;
    std::string computed;
    std::string published;
    bool match = false;
};

/// Compares every published value for checks 1..8 against a fresh computation.
inline std::vector<ReportRow> compare_golden(Context& ctx) {
    namespace G = golden;
    std::vector<ReportRow> rows;
    auto add = [&](int check, std::string item, std::string computed, std::string published) {
        const bool match = computed == published;
        rows.push_back({check, std::move(item), std::move(computed), std::move(published), match});
    };

    // 1. group orders
    const auto& g = ctx.group();
    const auto z = center(g);
    add(1, "order(G)", std::to_string(g.size()), std::to_string(G::kOrderG));
    add(1, "order(Z)", std::to_string(z.size()), std::to_string(G::kOrderZ));
    add(1, "order(PG)", std::to_string(ctx.pgroup().size()), std::to_string(G::kOrderPG));
    add(1, "Z", "{" + detail::join(detail::center_words(g), ", ") + "}",
        "{" + detail::join(G::kCenterWords, ", ") + "}");

    // 2. relations
    const auto rel = verify_relations(generator_d(), generator_t());
    for (const auto& name : G::kRelations) {
        std::size_t total = 0, holding = 0;
        for (const auto& r : rel)
            if (r.name == name) {
                ++total;
                holding += r.holds ? 1 : 0;
            }
        add(2, name, holding == total && total > 0 ? "holds" : std::to_string(holding) + "/" + std::to_string(total),
            "holds");
    }
    const auto perturbed = verify_relations(generator_d(), perturbed_generator_t());
    add(2, "R4, perturbed T", perturbed.at(3).holds ? "holds" : "fails", "fails");

    // 3. normal forms
    const auto nf = check_normal_forms();
    add(3, "normal words", std::to_string(nf.words), std::to_string(G::kOrderG));
    add(3, "distinct matrices", std::to_string(nf.distinct_matrices), std::to_string(G::kOrderG));
    add(3, "automaton coherence", std::to_string(nf.coherent) + "/" + std::to_string(nf.coherence_cases),
        std::to_string(4 * G::kOrderG) + "/" + std::to_string(4 * G::kOrderG));

    // 4. conjugacy classes
    const auto& pg = ctx.pgroup();
    std::vector<std::string> reps, sizes, orders, eq;
    for (const auto& c : pg.classes()) {
        reps.push_back(c.representative_word);
        sizes.push_back(std::to_string(c.size));
        orders.push_back(std::to_string(c.element_order));
        eq.push_back(std::to_string(c.size * centralizer_size(pg, c.representative)));
    }
    add(4, "classes", std::to_string(pg.classes().size()), std::to_string(G::kClassWords.size()));
    add(4, "representatives", detail::join(reps, ", "), detail::join(G::kClassWords, ", "));
    add(4, "sizes", detail::tuple_string(sizes), detail::tuple_string(detail::to_strings(G::kClassSizes)));
    add(4, "orders", detail::tuple_string(orders), detail::tuple_string(detail::to_strings(G::kClassOrders)));
    add(4, "size × centralizer", detail::tuple_string(eq),
        detail::tuple_string(std::vector<std::string>(G::kClassWords.size(), std::to_string(G::kOrderPG))));

    // 5. character table
    const auto& table = ctx.table();
    add(5, "degrees", detail::tuple_string(detail::to_strings(table.degrees())),
        detail::tuple_string(detail::to_strings(G::kDegrees)));
    for (std::size_t r = 0; r < table.size(); ++r) {
        std::vector<std::string> computed, published;
        for (const auto& v : table.row(r)) computed.push_back(detail::ab_notation(v));
        for (const auto& s : G::kCharacterTable.at(r)) published.push_back(detail::ab_notation(detail::parse_table_value(s)));
        add(5, "χ" + std::to_string(r + 1), detail::tuple_string(computed), detail::tuple_string(published));
    }
    const auto orth = verify_character_table(table);
    add(5, "row orthogonality", orth.rows_orthonormal ? "96·δ" : "violated", "96·δ");

    // 6. fusion
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto m = decompose_character(table, pointwise_product(table.row(kNaturalIrrep), table.row(i)));
        add(6, "χ7·χ" + std::to_string(i + 1), detail::constituents(m), detail::constituents(G::kProductsWithChi7.at(i)));
    }
    {
        std::vector<std::string> computed, published;
        for (const auto& v : pointwise_product(table.row(kNaturalIrrep), table.row(9))) computed.push_back(v.to_pretty());
        for (const auto& s : G::kChi7TimesChi10) published.push_back(detail::parse_table_value(s).to_pretty());
        add(6, "χ7·χ10 values", detail::tuple_string(computed), detail::tuple_string(published));
    }
    const auto& a = ctx.fusion();
    for (std::size_t i = 0; i < a.size(); ++i) {
        add(6, "A row " + std::to_string(i + 1), detail::tuple_string(detail::to_strings(a[i])),
            detail::tuple_string(detail::to_strings(G::kFusionMatrix.at(i))));
    }

    // 7. multiplicities
    for (std::size_t k = 0; k < G::kMultiplicities.size(); ++k) {
        add(7, "d(" + std::to_string(k) + ")",
            detail::tuple_string(detail::big_strings(tensor_multiplicities(a, static_cast<unsigned>(k)))),
            detail::tuple_string(detail::to_strings(G::kMultiplicities[k])));
    }
    {
        std::size_t agree = 0, total = 0, conserved = 0;
        for (unsigned k = 1; k <= 20; ++k) {
            const auto d = tensor_multiplicities(a, k);
            BigInt dim = 0, p3;
            mpz_ui_pow_ui(p3.get_mpz_t(), 3, k);
            for (std::size_t l = 0; l < d.size(); ++l) {
                ++total;
                if (closed_form_d(static_cast<int>(l + 1), k) == d[l]) ++agree;
                dim += d[l] * static_cast<long>(table.degrees()[l]);
            }
            if (dim == p3) ++conserved;
        }
        add(7, "closed forms = A^k, k ≤ 20", std::to_string(agree) + "/" + std::to_string(total), "200/200");
        add(7, "Σ d·deg = 3^k, k ≤ 20", std::to_string(conserved) + "/20", "20/20");
    }

    // 8. dimensions
    std::vector<std::string> dims, formula;
    for (unsigned k = 0; k < G::kCentralizerDims.size(); ++k) {
        dims.push_back(centralizer_dim(a, k).get_str());
        formula.push_back(centralizer_dim_closed_form(k).get_str());
    }
    const std::string published_dims = detail::tuple_string(detail::to_strings(G::kCentralizerDims));
    add(8, "dim A_k = Σ d², k ≤ 9", detail::tuple_string(dims), published_dims);
    add(8, "(57+6·5^k+9^k)/96, k ≤ 9", detail::tuple_string(formula), published_dims);
    std::size_t agree = 0;
    for (unsigned k = 0; k <= 20; ++k)
        if (centralizer_dim(a, k) == centralizer_dim_closed_form(k)) ++agree;
    add(8, "Σ d² = formula, k ≤ 20", std::to_string(agree) + "/21", "21/21");
    return rows;
}

inline int cmd_reproduce(Context& ctx, const RunConfig& cfg, std::ostream& out) {
    const Format f = detail::resolve(cfg.format, Format::Table);
    detail::require_format(f, {Format::Table, Format::Json}, "reproduce-paper");
    const auto rows = compare_golden(ctx);
    const auto mismatches = static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return !r.match; }));
    if (f == Format::Json) {
        Json j = detail::header("reproduce-paper");
        j["rows"] = Json::array();
        for (const auto& r : rows)
            j["rows"].push_back({{"check", r.check}, {"item", r.item}, {"computed", r.computed},
                                 {"published", r.published}, {"match", r.match}});
        j["compared"] = rows.size();
        j["mismatches"] = mismatches;
        out << j.dump(2) << '\n';
    } else {
        std::vector<std::vector<std::string>> table{{"check", "item", "computed", "published", "status"}};
        for (const auto& r : rows)
            table.push_back({std::to_string(r.check), r.item, r.computed, r.published, r.match ? "ok" : "MISMATCH"});
        detail::print_table(out, table);
        out << rows.size() << " values compared, " << mismatches << " mismatches\n";
    }
    return mismatches == 0 ? kExitOk : kExitMismatch;
}

/// Runs one subcommand, writing to `out` unless cfg.out names a file.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    static const std::map<std::string, int (*)(Context&, const RunConfig&, std::ostream&)> table = {
        {"enumerate", cmd_enumerate}, {"verify-relations", cmd_verify_relations},
        {"normal-forms", cmd_normal_forms}, {"classes", cmd_classes},
        {"chartable", cmd_chartable}, {"fuse", cmd_fuse},
        {"bratteli", cmd_bratteli}, {"dims", cmd_dims},
        {"molien", cmd_molien}, {"swe", cmd_swe},
        {"reproduce-paper", cmd_reproduce},
    };
    try {
        const auto it = table.find(cfg.subcommand);
        if (it == table.end()) throw UsageError("unknown subcommand '" + cfg.subcommand + "'");
        Context ctx;
        std::ostringstream buffer;
        const int code = it->second(ctx, cfg, buffer);
        if (cfg.out) {
            std::ofstream file(*cfg.out, std::ios::binary);
            if (!file) throw UsageError("cannot write " + *cfg.out);
            file << buffer.str();
        } else {
            out << buffer.str();
        }
        return code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const VerificationFailure& e) {
        err << "verification failed: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const Unsupported& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

/// Parses argv and runs. Usage errors, including CLI parse errors, exit 1.
inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations for the order-384 group generated by D and T"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string format = "auto";
    unsigned kmax = 0;
    app.add_option("--format", format, "table, json, csv or dot (default depends on the subcommand)")
        ->check(CLI::IsMember({"auto", "table", "json", "csv", "dot"}));
    app.add_option("--out", cfg.out, "write the artifact to this file");
    app.add_option("--parallel", cfg.parallel, "worker threads for group averaging")->check(CLI::Range(1u, 256u));
    app.fallthrough();

    std::map<std::string, CLI::App*> subs;
    subs["enumerate"] = app.add_subcommand("enumerate", "orders of G, its center and PG");
    subs["verify-relations"] = app.add_subcommand("verify-relations", "check R1-R8 and the PG presentation");
    subs["normal-forms"] = app.add_subcommand("normal-forms", "the 384 normal words and the automaton self-check");
    subs["classes"] = app.add_subcommand("classes", "conjugacy classes of PG");
    subs["chartable"] = app.add_subcommand("chartable", "character table of PG");
    subs["fuse"] = app.add_subcommand("fuse", "decompositions of χ7·χi and the fusion matrix");
    subs["bratteli"] = app.add_subcommand("bratteli", "Bratteli diagram of the tensor powers of ρ7");
    subs["dims"] = app.add_subcommand("dims", "multiplicities and centralizer dimensions as CSV");
    subs["molien"] = app.add_subcommand("molien", "Molien series coefficients of G");
    subs["swe"] = app.add_subcommand("swe", "symmetrized weight enumerator of a Z4-code");
    subs["reproduce-paper"] = app.add_subcommand("reproduce-paper", "compare every published value");

    std::vector<CLI::Option*> kmax_options;
    for (const char* name : {"bratteli", "dims"})
        kmax_options.push_back(
            subs[name]->add_option("--kmax", kmax, "largest tensor power")->check(CLI::Range(0u, kMaxK)));
    subs["molien"]->add_option("--dmax", cfg.dmax, "largest degree")->check(CLI::Range(0u, kMaxDegree));
    subs["swe"]->add_option("--gen", cfg.gens, "generator row of Z4 digits, e.g. 1,1,1,1 (repeatable)")
        ->required();
    subs["swe"]->add_flag("--check-invariance", cfg.check_invariance, "test invariance under D, T and G");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    for (const auto& [name, sub] : subs)
        if (sub->parsed()) cfg.subcommand = name;
    for (const auto* opt : kmax_options)
        if (opt->count()) cfg.kmax = kmax;
    try {
        cfg.format = parse_format(format);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return run(cfg, out, err);
}

}  // namespace z4cent::cli
