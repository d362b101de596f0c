#pragma once

#include "repstab/charpoly.hpp"
#include "repstab/errors.hpp"
#include "repstab/fistab.hpp"
#include "repstab/gamma.hpp"
#include "repstab/induct.hpp"
#include "repstab/io.hpp"
#include "repstab/partition.hpp"
#include "repstab/symchar.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace repstab::cli {

enum class Status { Success, DomainError, InvariantViolation };

struct CommandResult {
    Status status = Status::Success;
    nlohmann::json payload;  // structured result, or {"error": ...}
    std::string text;        // human-readable rendering of the same content
    bool as_json = false;

    int exit_code() const {
        switch (status) {
            case Status::Success: return 0;
            case Status::DomainError: return 2;
            case Status::InvariantViolation: return 3;
        }
        return 3;
    }

    std::string output() const { return as_json ? payload.dump(2) + "\n" : text; }
};

namespace detail {

struct Options {
    bool json = false;
    int max_size = 40;

    std::string lambda, left, right, cls;
    int n = 0, i = 0, q = 0, s = 0;
    std::optional<int> p;
    bool pages = false;
    bool expanded = false;
};

inline void check_size(const Options& o, int size, const std::string& what) {
    if (size > o.max_size)
        throw DomainError(ErrorKind::InvalidArgument, what + " = " + std::to_string(size) + " exceeds --max-size " +
                                                          std::to_string(o.max_size));
}

inline Partition partition_arg(const Options& o, const std::string& text, const std::string& what) {
    Partition p = parse_partition(text);
    check_size(o, p.size(), "|" + what + "|");
    return p;
}

using Handler = std::function<CommandResult(const Options&)>;

inline CommandResult ok(nlohmann::json payload, std::string text) {
    CommandResult r;
    r.payload = std::move(payload);
    r.text = std::move(text);
    if (r.text.empty() || r.text.back() != '\n') r.text += '\n';
    return r;
}

inline CommandResult do_charpoly(const Options& o) {
    const Partition lambda = partition_arg(o, o.lambda, "lambda");
    const CharPolynomial f = build_f_lambda(lambda);
    const std::string display = o.expanded ? f.str() : render_falling_factorials(f);
    auto payload = io::to_json(f);
    payload["lambda"] = lambda.str();
    payload["degree"] = f.degree();
    payload["text"] = render_falling_factorials(f);
    payload["expanded"] = f.str();
    payload["valid_from"] = min_padding(lambda);
    return ok(payload, display);
}

inline CommandResult do_gamma_poly(const Options& o) {
    check_size(o, o.n + o.i, "n + i");
    const gamma::GammaQuery query(o.n, o.i);
    const auto decomp = gamma::stored_decomposition(query);
    const CharPolynomial f = gamma::stable_char_poly(query);
    auto payload = io::to_json(f);
    payload["n"] = o.n;
    payload["i"] = o.i;
    payload["decomposition"] = io::to_json(decomp);
    payload["text"] = render_falling_factorials(f);
    payload["expanded"] = f.str();
    return ok(payload, o.expanded ? f.str() : render_falling_factorials(f));
}

inline CommandResult do_gamma_dim(const Options& o) {
    check_size(o, o.s, "s");
    const gamma::GammaQuery query(o.n, o.i);
    const Integer dim = gamma::stable_dimension(query, o.s);
    const auto poly = dimension_polynomial(gamma::stable_char_poly(query));
    nlohmann::json payload{{"n", o.n},
                           {"i", o.i},
                           {"s", o.s},
                           {"dimension", io::to_json(dim)},
                           {"dimension_polynomial", io::to_json(poly)}};
    return ok(payload, dim.str());
}

inline CommandResult do_gamma_decomp(const Options& o) {
    const gamma::GammaQuery query(o.n, o.i);
    const auto decomp = gamma::stored_decomposition(query);
    auto payload = io::to_json(decomp);
    payload["n"] = o.n;
    payload["i"] = o.i;
    return ok(payload, decomp.str() + "  (s >= " + std::to_string(decomp.valid_from) + ")");
}

inline CommandResult do_e2(const Options& o) {
    check_size(o, o.q, "q");
    const FIExpr e = gamma::e2_page(o.n, o.q, o.p);
    auto payload = io::to_json(e);
    payload["n"] = o.n;
    payload["q"] = o.q;
    std::string text;
    for (const auto& t : e.terms()) text += t.coeff.str() + " (x) M" + t.lambda.str() + "\n";
    text += "stability type " + e.stype().str() + ", weight <= " + std::to_string(e.weight_bound());
    return ok(payload, text);
}

inline CommandResult do_stability(const Options& o) {
    check_size(o, o.n + o.i, "n + i");
    const gamma::StabilityReport r = gamma::stability_bounds(gamma::GammaQuery(o.n, o.i));
    nlohmann::json payload{{"n", o.n},
                           {"i", o.i},
                           {"weight_bound", r.weight_bound},
                           {"stability_degree", r.stability_degree},
                           {"stable_range", r.stable_range},
                           {"provenance", r.provenance}};
    std::string text;
    if (o.pages) {
        payload["pages"] = nlohmann::json::array();
        for (const auto& g : r.pages) {
            payload["pages"].push_back(io::to_json(g));
            text += g.render() + "\n";
        }
    }
    text += "weight <= " + std::to_string(r.weight_bound) + "\n";
    text += "stability degree <= " + std::to_string(r.stability_degree) + "\n";
    text += "stable range s >= " + std::to_string(r.stable_range) + "\n";
    text += r.provenance;
    return ok(payload, text);
}

inline CommandResult do_schur_weyl(const Options& o) {
    check_size(o, o.s, "s");
    const auto r = gamma::schur_weyl_report(o.n, o.q, o.s);
    nlohmann::json payload{{"n", o.n},
                           {"q", o.q},
                           {"s", o.s},
                           {"character_side", io::to_json(r.character_side)},
                           {"schur_side", io::to_json(r.schur_side)},
                           {"expected_dimension", io::to_json(r.expected_dimension)},
                           {"matches", r.matches}};
    std::string text = "character side: " + r.character_side.str() + "\n" +
                       "schur side:     " + r.schur_side.str() + "\n" +
                       "dimension:      " + r.character_side.dimension().str() + " (expected " +
                       r.expected_dimension.str() + ")\n" + (r.matches ? "match" : "MISMATCH");
    CommandResult out = ok(payload, text);
    if (!r.matches) out.status = Status::InvariantViolation;
    return out;
}

inline CommandResult do_mn(const Options& o) {
    const Partition lambda = partition_arg(o, o.lambda, "lambda");
    const Partition cls = Partition::from_multiset(parse_parts(o.cls));
    check_size(o, cls.size(), "|class|");
    const Integer value = mn_character(lambda, cls);
    return ok({{"lambda", lambda.str()}, {"class", cls.str()}, {"value", io::to_json(value)}}, value.str());
}

inline CommandResult do_induce(const Options& o) {
    const Partition left = partition_arg(o, o.left, "left");
    const Partition right = partition_arg(o, o.right, "right");
    const IrrDecomp d = lr_coefficients(left, right);
    if (left.size() + right.size() <= 10 && d != lr_coefficients_via_characters(left, right))
        throw InvariantViolation("tableau and character Littlewood-Richardson coefficients disagree");
    auto payload = io::to_json(d);
    payload["left"] = left.str();
    payload["right"] = right.str();
    payload["dimension"] = io::to_json(d.dimension());
    return ok(payload, d.str());
}

inline CommandResult do_table(const Options& o) {
    check_size(o, o.s, "s");
    if (o.s < 0) throw DomainError(ErrorKind::InvalidArgument, "s must be >= 0");
    const CharacterTable t = character_table(o.s);
    std::string text = "classes:";
    for (const auto& c : t.classes) text += " " + c.str();
    for (const auto& [lambda, row] : t.rows) {
        text += "\n" + lambda.str() + ":";
        for (const auto& v : row) text += " " + v.str();
    }
    return ok(io::to_json(t), text);
}

}  // namespace detail

/// Parses `args` (without the program name), dispatches and renders.
inline CommandResult run(const std::vector<std::string>& args) {
    detail::Options o;
    CLI::App app{"Exact symmetric-group characters, character polynomials and FI-module stability bounds", "repstab"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "Emit JSON instead of text");
    app.add_option("--max-size", o.max_size, "Largest partition size or rank accepted")->check(CLI::NonNegativeNumber);

    detail::Handler handler;
    auto bind = [&](CLI::App* sub, detail::Handler h) { sub->callback([&handler, h] { handler = h; }); };

    auto* charpoly = app.add_subcommand("charpoly", "Character polynomial f_λ of P(λ)");
    charpoly->add_option("--lambda", o.lambda, "Partition, e.g. 2,1 (empty string for ())")->required();
    charpoly->add_flag("--expanded", o.expanded, "Print the expanded monomial form");
    bind(charpoly, detail::do_charpoly);

    auto* gamma_cmd = app.add_subcommand("gamma", "Stable data for H^i(Γ_{n,s})");
    gamma_cmd->require_subcommand(1);
    auto* poly = gamma_cmd->add_subcommand("poly", "Stable character polynomial");
    poly->add_option("--n", o.n, "Graph rank")->required();
    poly->add_option("--i", o.i, "Cohomological degree")->required();
    poly->add_flag("--expanded", o.expanded, "Print the expanded monomial form");
    bind(poly, detail::do_gamma_poly);
    auto* dim = gamma_cmd->add_subcommand("dim", "Stable dimension at s");
    dim->add_option("--n", o.n, "Graph rank")->required();
    dim->add_option("--i", o.i, "Cohomological degree")->required();
    dim->add_option("--s", o.s, "Number of marked points")->required();
    bind(dim, detail::do_gamma_dim);
    auto* decomp = gamma_cmd->add_subcommand("decomp", "Stable irreducible decomposition");
    decomp->add_option("--n", o.n, "Graph rank")->required();
    decomp->add_option("--i", o.i, "Cohomological degree")->required();
    bind(decomp, detail::do_gamma_decomp);

    auto* e2 = app.add_subcommand("e2", "Terms of the E_2 page in row q");
    e2->add_option("--n", o.n, "Graph rank (>= 2)")->required();
    e2->add_option("--q", o.q, "Row")->required();
    e2->add_option("--p", o.p, "Column used in the C_{p,λ} labels");
    bind(e2, detail::do_e2);

    auto* stability = app.add_subcommand("stability", "Weight, stability degree and stable range of H^i");
    stability->add_option("--n", o.n, "Graph rank")->required();
    stability->add_option("--i", o.i, "Cohomological degree")->required();
    stability->add_flag("--pages", o.pages, "Show every page of the spectral grid");
    bind(stability, detail::do_stability);

    auto* sw = app.add_subcommand("schur-weyl", "Check the Schur-Weyl decomposition of H^q(F_n^s)");
    sw->add_option("--n", o.n, "Rank")->required();
    sw->add_option("--q", o.q, "Degree")->required();
    sw->add_option("--s", o.s, "Number of factors")->required();
    bind(sw, detail::do_schur_weyl);

    auto* mn = app.add_subcommand("mn", "Irreducible character value χ_λ(class)");
    mn->add_option("--lambda", o.lambda, "Partition")->required();
    mn->add_option("--class", o.cls, "Cycle type, e.g. 2,2")->required();
    bind(mn, detail::do_mn);

    auto* induce = app.add_subcommand("induce", "Decompose P_left ∘ P_right");
    induce->add_option("--left", o.left, "Partition")->required();
    induce->add_option("--right", o.right, "Partition")->required();
    bind(induce, detail::do_induce);

    auto* table = app.add_subcommand("table", "Character table of S_s");
    table->add_option("--s", o.s, "Rank")->required();
    bind(table, detail::do_table);

    std::vector<std::string> argv_store{"repstab"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    CommandResult result;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        const int code = app.exit(e, out, err);
        result.text = out.str() + err.str();
        result.status = code == 0 ? Status::Success : Status::DomainError;
        result.payload = code == 0 ? nlohmann::json{{"help", out.str()}} : nlohmann::json{{"error", e.what()}};
        result.as_json = o.json && code != 0;
        return result;
    }

    try {
        result = handler(o);
    } catch (const DomainError& e) {
        result.status = Status::DomainError;
        result.payload = {{"error", e.what()}, {"kind", std::string(name(e.kind()))}};
        result.text = std::string("error: ") + e.what() + "\n";
    } catch (const InvariantViolation& e) {
        result.status = Status::InvariantViolation;
        result.payload = {{"error", e.what()}, {"kind", "InvariantViolation"}};
        result.text = std::string("invariant violation: ") + e.what() + "\n";
    }
    result.as_json = o.json;
    return result;
}

}  // namespace repstab::cli
