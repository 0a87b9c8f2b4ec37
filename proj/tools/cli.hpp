#pragma once

// Command-line front end. Results go to `out`, diagnostics to `err`.
// Exit codes: 0 success, 1 domain error, 2 usage or parse error.

#include <tame/tame.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace tame::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::size_t kMaxInlinePolynomial = 200;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline VariableNames split_names(const std::string& csv) {
    VariableNames out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.emplace_back(detail::trim(item));
    try {
        detail::validate_variables(out);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    return out;
}

inline Json step_json(const TameStep& s) { return print_step(s, default_variables(3)); }

inline Json witness_json(const TameWord& w) {
    Json steps = Json::array();
    for (const auto& s : w.steps()) steps.push_back(step_json(s));
    return steps;
}

inline Json decision_json(const Decision& d, const std::optional<TameWord>& witness, bool with_witness) {
    Json j;
    j["verdict"] = to_string(d.verdict);
    j["reason"] = to_string(d.reason);
    if (d.representation) j["representation"] = {{"s", d.representation->s}, {"t", d.representation->t}};
    if (!d.failed_hypotheses.empty()) j["failed_hypotheses"] = d.failed_hypotheses;
    if (d.verdict == Verdict::Unknown)
        if (auto hit = type_iii_constraints(d.triple))
            j["type_iii"] = {{"n", hit->n}, {"family", hit->family == TypeThreeFamily::First ? 1 : 2}};
    if (with_witness && witness) j["witness"] = witness_json(*witness);
    return j;
}

struct Context {
    std::ostream& out;
    std::ostream& err;
};

inline int cmd_decide(Context& ctx, const std::vector<std::int64_t>& degs, bool with_witness, bool json) {
    const NormalizedTriple n = normalize(degs[0], degs[1], degs[2]);
    const Decision d = decide(n.triple);
    std::optional<TameWord> witness;
    if (d.witness) witness = reorder_witness(*d.witness, n);
    if (json) {
        ctx.out << decision_json(d, witness, with_witness).dump() << '\n';
        return 0;
    }
    ctx.out << "(" << degs[0] << "," << degs[1] << "," << degs[2] << "): " << to_string(d.verdict) << " ("
            << to_string(d.reason) << ")\n";
    if (d.representation)
        ctx.out << "  d3 = " << d.representation->s << "*" << d.triple.d1 << " + " << d.representation->t << "*"
                << d.triple.d2 << "\n";
    for (const auto& h : d.failed_hypotheses) ctx.out << "  unmet: " << h << "\n";
    if (with_witness) {
        if (witness) {
            ctx.out << "  witness (" << witness->size() << " steps, mdeg " << print_mdeg(mdeg(compose_word(*witness)))
                    << "):\n";
            for (const auto& s : witness->steps()) ctx.out << "    " << print_step(s, default_variables(3)) << "\n";
        } else {
            ctx.out << "  no witness available\n";
        }
    }
    return 0;
}

inline int cmd_scan(Context& ctx, std::int64_t max_degree, const std::string& format, const std::string& out_path) {
    const auto rows = scan(max_degree);
    std::ofstream file;
    std::ostream* os = &ctx.out;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw UsageError("cannot write '" + out_path + "'");
        os = &file;
    }
    auto field = [](const std::optional<Representation>& r, bool first) -> std::string {
        if (!r) return "";
        return std::to_string(first ? r->s : r->t);
    };
    if (format == "csv") {
        *os << "d1,d2,d3,verdict,reason,s,t,witness_len\n";
        for (const auto& d : rows)
            *os << d.triple.d1 << ',' << d.triple.d2 << ',' << d.triple.d3 << ',' << to_string(d.verdict) << ','
                << to_string(d.reason) << ',' << field(d.representation, true) << ','
                << field(d.representation, false) << ',' << (d.witness ? d.witness->size() : 0) << '\n';
    } else {
        *os << "[\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& d = rows[i];
            Json j;
            j["d1"] = d.triple.d1;
            j["d2"] = d.triple.d2;
            j["d3"] = d.triple.d3;
            j["verdict"] = to_string(d.verdict);
            j["reason"] = to_string(d.reason);
            j["s"] = d.representation ? Json(d.representation->s) : Json(nullptr);
            j["t"] = d.representation ? Json(d.representation->t) : Json(nullptr);
            j["witness_len"] = d.witness ? d.witness->size() : 0;
            *os << "  " << j.dump() << (i + 1 < rows.size() ? ",\n" : "\n");
        }
        *os << "]\n";
    }
    return 0;
}

/// Polynomials given inline, or read from a map file with --file.
inline std::vector<std::string> polynomial_sources(const std::vector<std::string>& inline_args,
                                                   const std::string& file, std::size_t expected,
                                                   VariableNames& vars, std::vector<std::size_t>& lines) {
    std::vector<std::string> out;
    lines.assign(expected, 1);
    if (!file.empty()) {
        if (!inline_args.empty()) throw UsageError("give polynomials either inline or with --file, not both");
        const std::string text = read_file(file);
        auto sig = significant_lines(text);
        if (sig.empty()) throw ParseError("missing 'vars:' declaration", 1, 1);
        vars = parse_vars_declaration(sig.front().second, sig.front().first);
        if (sig.size() != expected + 1)
            throw UsageError("--file must contain exactly " + std::to_string(expected) + " polynomials");
        for (std::size_t i = 0; i < expected; ++i) {
            out.push_back(sig[i + 1].second);
            lines[i] = sig[i + 1].first;
        }
        return out;
    }
    if (inline_args.size() != expected)
        throw UsageError("expected " + std::to_string(expected) + " polynomial arguments");
    for (const auto& a : inline_args)
        if (a.size() > kMaxInlinePolynomial)
            throw UsageError("polynomial argument longer than " + std::to_string(kMaxInlinePolynomial) +
                             " characters; pass it with --file");
    return inline_args;
}

inline int cmd_bracket(Context& ctx, const std::vector<std::string>& args, const std::string& file,
                       std::string vars_csv, bool json) {
    VariableNames vars = split_names(vars_csv);
    std::vector<std::size_t> lines;
    const auto src = polynomial_sources(args, file, 2, vars, lines);
    const Polynomial f = parse_polynomial(src[0], vars, lines[0]);
    const Polynomial g = parse_polynomial(src[1], vars, lines[1]);
    const BracketValue b = poisson_bracket(f, g);
    if (json) {
        Json coeffs = Json::array();
        for (const auto& [ij, c] : b.coefficients())
            coeffs.push_back({{"i", vars[ij.first]}, {"j", vars[ij.second]}, {"coefficient", print_polynomial(c, vars)}});
        Json j;
        j["bracket"] = coeffs;
        j["degree"] = bracket_degree(b).is_neg_infinity() ? Json(nullptr) : Json(bracket_degree(b).value());
        ctx.out << j.dump() << '\n';
    } else {
        ctx.out << print_bracket(b, vars) << '\n' << "degree: " << bracket_degree(b) << '\n';
    }
    return 0;
}

inline int cmd_su_check(Context& ctx, const std::vector<std::string>& args, const std::string& file,
                        std::string vars_csv, std::string gvars_csv, bool json) {
    VariableNames vars = split_names(vars_csv);
    const VariableNames gvars = split_names(gvars_csv);
    if (gvars.size() != 2) throw UsageError("--gvars must name exactly two variables");
    std::vector<std::size_t> lines;
    const auto src = polynomial_sources(args, file, 3, vars, lines);
    const Polynomial f = parse_polynomial(src[0], vars, lines[0]);
    const Polynomial g = parse_polynomial(src[1], vars, lines[1]);
    const Polynomial G = parse_polynomial(src[2], gvars, lines[2]);
    const SuReport r = su_bound(f, g, G);
    Json j;
    j["p"] = r.p;
    j["q"] = r.q;
    j["r"] = r.r;
    j["lhs_degree"] = r.lhs_degree.value();
    j["rhs_bound"] = r.rhs_bound;
    j["bracket_degree"] = r.bracket_degree.value();
    j["holds"] = r.holds;
    if (json) {
        ctx.out << j.dump() << '\n';
    } else {
        ctx.out << "p = " << r.p << ", q = " << r.q << ", r = " << r.r << "\n"
                << "deg [f,g] = " << r.bracket_degree << "\n"
                << "deg G(f,g) = " << r.lhs_degree << " >= " << r.rhs_bound << ": "
                << (r.holds ? "holds" : "VIOLATED") << "\n";
    }
    return r.holds ? 0 : 1;
}

inline PolyMap read_map(const std::string& path) {
    const PolynomialList list = parse_map_file(read_file(path));
    if (list.polynomials.size() != list.variables.size())
        throw UsageError("map file must have one polynomial per variable");
    return PolyMap{list.polynomials};
}

inline int cmd_reduce(Context& ctx, const std::string& path, std::optional<int> target, std::optional<std::int64_t> cap) {
    const PolynomialList list = parse_map_file(read_file(path));
    if (list.polynomials.size() != 3 || list.variables.size() != 3)
        throw UsageError("reduce needs a map file with three variables and three polynomials");
    const PolyMap F{list.polynomials};
    std::optional<std::pair<std::size_t, ReductionResult>> found;
    if (target) {
        if (*target < 1 || *target > 3) throw UsageError("--target must be 1, 2 or 3");
        const std::size_t t = static_cast<std::size_t>(*target - 1);
        const Degree d = F[t].degree();
        const std::int64_t c = cap.value_or(d.is_neg_infinity() ? 0 : 2 * d.value());
        if (auto r = find_elementary_reduction({F, t, c})) found.emplace(t, std::move(*r));
    } else {
        found = find_any_reduction(F, cap);
    }
    Json j;
    j["found"] = found.has_value();
    if (found) {
        const auto& [t, r] = *found;
        j["target"] = t + 1;
        j["arguments"] = {r.first_arg + 1, r.second_arg + 1};
        j["g"] = print_polynomial(r.g, {"u", "v"});
        j["residual"] = print_polynomial(r.residual, list.variables);
        j["target_degree"] = F[t].degree().value();
        j["residual_degree"] = r.residual_degree.is_neg_infinity() ? Json(nullptr) : Json(r.residual_degree.value());
    }
    ctx.out << j.dump() << '\n';
    return 0;
}

inline int cmd_semigroup(Context& ctx, std::int64_t a, std::int64_t b, std::int64_t l) {
    const SemigroupPair pair(a, b);
    const auto rep = membership(l, pair);
    Json j;
    j["member"] = rep.has_value();
    j["s"] = rep ? Json(rep->s) : Json(nullptr);
    j["t"] = rep ? Json(rep->t) : Json(nullptr);
    if (std::gcd(a, b) == 1 && a > 1 && b > 1)
        j["frobenius"] = frobenius(pair);
    else
        j["frobenius"] = nullptr;
    ctx.out << j.dump() << '\n';
    return 0;
}

inline int cmd_mdeg(Context& ctx, const std::string& path, bool json) {
    const MDeg d = mdeg(read_map(path));
    if (json) {
        Json arr = Json::array();
        for (auto v : d) arr.push_back(v.is_neg_infinity() ? Json(nullptr) : Json(v.value()));
        ctx.out << Json{{"mdeg", arr}}.dump() << '\n';
    } else {
        ctx.out << print_mdeg(d) << '\n';
    }
    return 0;
}

inline int cmd_compose(Context& ctx, const std::string& path) {
    const ParsedWord w = parse_word_file(read_file(path));
    const PolyMap F = compose_word(w.word);
    ctx.out << print_map_file(F.components, w.variables);
    return 0;
}

inline int cmd_verify_example(Context& ctx, bool json) {
    const ExampleReport report = verify_example();
    if (json) {
        Json checks = Json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        Json j;
        j["passed"] = report.all_passed();
        j["checks"] = checks;
        ctx.out << j.dump() << '\n';
    } else {
        for (const auto& c : report.checks)
            ctx.out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    }
    if (!report.all_passed()) ctx.err << "example verification failed\n";
    return report.all_passed() ? 0 : 1;
}

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    Context ctx{out, err};
    CLI::App app{"Multidegrees of tame automorphisms of affine 3-space"};
    app.name("tame_mdeg");
    app.require_subcommand(1);

    std::vector<std::int64_t> degs;
    bool with_witness = false, json = false;
    auto* decide_cmd = app.add_subcommand("decide", "Classify a degree triple");
    decide_cmd->add_option("degrees", degs, "d1 d2 d3")->expected(3)->required();
    decide_cmd->add_flag("--witness", with_witness, "Print a verified witness word");
    decide_cmd->add_flag("--json", json, "JSON output");

    std::int64_t max_degree = 0;
    std::string format = "csv", out_path;
    auto* scan_cmd = app.add_subcommand("scan", "Classify all sorted triples up to a maximum degree");
    scan_cmd->add_option("--max", max_degree, "Largest d3")->required();
    scan_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    scan_cmd->add_option("--out", out_path, "Write to a file instead of stdout");

    std::vector<std::string> polys;
    std::string poly_file, vars_csv = "x,y,z", gvars_csv = "u,v";
    auto* bracket_cmd = app.add_subcommand("bracket", "Poisson bracket [f,g]");
    bracket_cmd->add_option("polynomials", polys, "f g");
    bracket_cmd->add_option("--file", poly_file, "Map-format file holding f and g");
    bracket_cmd->add_option("--vars", vars_csv, "Variable names, comma separated");
    bracket_cmd->add_flag("--json", json, "JSON output");

    auto* su_cmd = app.add_subcommand("su-check", "Check the degree bound for deg G(f,g)");
    su_cmd->add_option("polynomials", polys, "f g G");
    su_cmd->add_option("--file", poly_file, "Map-format file holding f, g and G");
    su_cmd->add_option("--vars", vars_csv, "Variable names of f and g");
    su_cmd->add_option("--gvars", gvars_csv, "Variable names of G");
    su_cmd->add_flag("--json", json, "JSON output");

    std::string path;
    std::optional<int> target;
    std::optional<std::int64_t> cap;
    auto* reduce_cmd = app.add_subcommand("reduce", "Search for an elementary reduction");
    reduce_cmd->add_option("mapfile", path)->required();
    reduce_cmd->add_option("--target", target, "Component to reduce (1-3)");
    reduce_cmd->add_option("--cap", cap, "Support degree cap");

    std::vector<std::int64_t> sg;
    auto* sg_cmd = app.add_subcommand("semigroup", "Membership in aN + bN");
    sg_cmd->add_option("values", sg, "a b l")->expected(3)->required();

    auto* mdeg_cmd = app.add_subcommand("mdeg", "Multidegree of a map file");
    mdeg_cmd->add_option("mapfile", path)->required();
    mdeg_cmd->add_flag("--json", json, "JSON output");

    auto* compose_cmd = app.add_subcommand("compose", "Compose a word file into a map");
    compose_cmd->add_option("wordfile", path)->required();

    auto* verify_cmd = app.add_subcommand("verify-example", "Verify the (10,23,25) example");
    verify_cmd->add_flag("--json", json, "JSON output");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (*decide_cmd) return cmd_decide(ctx, degs, with_witness, json);
        if (*scan_cmd) return cmd_scan(ctx, max_degree, format, out_path);
        if (*bracket_cmd) return cmd_bracket(ctx, polys, poly_file, vars_csv, json);
        if (*su_cmd) return cmd_su_check(ctx, polys, poly_file, vars_csv, gvars_csv, json);
        if (*reduce_cmd) return cmd_reduce(ctx, path, target, cap);
        if (*sg_cmd) return cmd_semigroup(ctx, sg[0], sg[1], sg[2]);
        if (*mdeg_cmd) return cmd_mdeg(ctx, path, json);
        if (*compose_cmd) return cmd_compose(ctx, path);
        if (*verify_cmd) return cmd_verify_example(ctx, json);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace tame::cli
