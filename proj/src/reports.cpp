#include "bracekit/reports.hpp"

#include "bracekit/brace_enumeration.hpp"
#include "bracekit/error.hpp"
#include "bracekit/io.hpp"
#include "bracekit/presets.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace bracekit::cli {

namespace {

constexpr const char* kPresetPrefix = "presets:";

bool is_preset(const std::string& input) { return input.rfind(kPresetPrefix, 0) == 0; }

std::string preset_name(const std::string& input) {
    return input.substr(std::string(kPresetPrefix).size());
}

// exit code 1: a verified mathematical failure; everything else is 2
int classify_error(const std::string& kind) {
    static const std::set<std::string> mathematical{
        "BraceIdentityViolation", "NotAssociative", "NotLatin",      "NoIdentity",
        "IdentityMismatch",       "JacobiViolation", "NotAntisymmetric", "AxiomViolation",
        "NotAnIdeal",             "NotCharacteristic", "CircNotSimple", "NotSemisimple"};
    return mathematical.count(kind) ? 1 : 2;
}

FiniteGroup load_group(const std::string& input) {
    if (is_preset(input)) return group_preset(preset_name(input));
    return io::read_group(io::read_file(input));
}

std::pair<GroupLaw, GroupLaw> load_brace_law(const std::string& input) {
    if (is_preset(input)) return brace_law_preset(preset_name(input));
    return io::read_bracelaw(io::read_file(input));
}

std::string subspace_line(const RationalSubspace& s) {
    std::ostringstream os;
    os << "dim " << s.dim();
    if (s.dim() > 0) os << " basis " << s.basis().to_string();
    return os.str();
}

std::string elem_set_line(const ElemSet& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i];
    return os.str();
}

struct Report {
    std::ostringstream os;

    template <typename T>
    void kv(const std::string& key, const T& value) {
        os << key << ": " << value << '\n';
    }
    void raw(const std::string& line) { os << line << '\n'; }
    std::string str() const { return os.str(); }
};

// ----------------------------------------------------------------------------
// subcommand bodies
// ----------------------------------------------------------------------------

int do_check_group(Report& rep, const std::string& input) {
    FiniteGroup g = load_group(input);
    rep.kv("status", "ok");
    rep.kv("order", g.order());
    rep.kv("group", identify_group(g));
    rep.kv("abelian", g.is_abelian() ? "true" : "false");
    rep.kv("center", center(g).size());
    auto series = derived_series(g);
    std::ostringstream chain;
    for (std::size_t i = 0; i < series.size(); ++i) chain << (i ? " " : "") << series[i].size();
    rep.kv("derived_series", chain.str());
    rep.kv("solvable", is_solvable(g) ? "true" : "false");
    rep.kv("abstractly_simple", is_abstractly_simple(g) ? "true" : "false");
    rep.kv("automorphisms", automorphisms(g).size());
    return 0;
}

int do_check_brace(Report& rep, const std::string& input) {
    FiniteSkewBrace b = io::read_brace(io::read_file(input));
    rep.kv("status", "ok");
    rep.kv("order", b.order());
    rep.kv("class", to_string(classify_triviality(b)));
    rep.kv("dot_group", identify_group(b.dot()));
    rep.kv("circ_group", identify_group(b.circ()));
    rep.kv("ideals", all_ideals(b).size());
    auto series = brace_derived_series(b);
    std::ostringstream chain;
    for (std::size_t i = 0; i < series.chain.size(); ++i)
        chain << (i ? " " : "") << series.chain[i].size();
    rep.kv("derived_series", chain.str());
    rep.kv("solvable", series.solvable ? "true" : "false");
    return 0;
}

int do_ideals(Report& rep, const std::string& input, std::size_t max_order) {
    const std::string text = io::read_file(input);
    const std::string kind = io::detect_kind(text);
    rep.kv("kind", kind);
    if (kind == "brace") {
        FiniteSkewBrace b = io::read_brace(text);
        rep.kv("order", b.order());
        auto ideals = all_ideals(b, max_order);
        rep.kv("ideal_count", ideals.size());
        for (std::size_t i = 0; i < ideals.size(); ++i)
            rep.kv("ideal " + std::to_string(i + 1), elem_set_line(ideals[i]));
    } else if (kind == "liealg") {
        LieAlgebra L = io::read_liealg(text);
        check_jacobi(L);
        rep.kv("dim", L.dim());
        auto list = all_ideals_lowdim(L);
        rep.kv("continuous_family", list.continuous_family ? "true" : "false");
        rep.kv("ideal_count", list.subspaces.size());
        for (std::size_t i = 0; i < list.subspaces.size(); ++i)
            rep.kv("ideal " + std::to_string(i + 1), subspace_line(list.subspaces[i]));
    } else if (kind == "postlie") {
        PostLieAlgebra P = io::read_postlie(text);
        check_postlie(P);
        rep.kv("dim", P.dim());
        std::vector<RationalMatrix> family;
        for (std::size_t i = 0; i < P.dim(); ++i) {
            family.push_back(P.dot().ad(i));
            family.push_back(P.circ().ad(i));
            family.push_back(P.triangle_operator(i));
        }
        auto list = invariant_subspaces_lowdim(P.dim(), family);
        rep.kv("continuous_family", list.continuous_family ? "true" : "false");
        rep.kv("brace_ideal_count", list.subspaces.size());
        for (std::size_t i = 0; i < list.subspaces.size(); ++i)
            rep.kv("brace_ideal " + std::to_string(i + 1), subspace_line(list.subspaces[i]));
        rep.kv("simple", is_simple_brace_infinitesimal(P) ? "true" : "false");
    } else {
        throw Error("Usage", "ideals expects a brace, liealg or postlie file");
    }
    rep.kv("status", "ok");
    return 0;
}

int do_derived(Report& rep, const std::string& input) {
    const std::string text = io::read_file(input);
    const std::string kind = io::detect_kind(text);
    rep.kv("kind", kind);
    std::ostringstream chain;
    bool solvable = false;
    if (kind == "brace") {
        FiniteSkewBrace b = io::read_brace(text);
        auto series = brace_derived_series(b);
        for (std::size_t i = 0; i < series.chain.size(); ++i)
            chain << (i ? " " : "") << series.chain[i].size();
        rep.kv("chain_sizes", chain.str());
        solvable = series.solvable;
        for (std::size_t i = 0; i < series.chain.size(); ++i)
            rep.kv("term " + std::to_string(i), elem_set_line(series.chain[i]));
    } else if (kind == "liealg") {
        LieAlgebra L = io::read_liealg(text);
        check_jacobi(L);
        auto series = derived_series(L);
        for (std::size_t i = 0; i < series.size(); ++i) chain << (i ? " " : "") << series[i].dim();
        rep.kv("chain_dims", chain.str());
        solvable = series.back().is_zero();
        for (std::size_t i = 0; i < series.size(); ++i)
            rep.kv("term " + std::to_string(i), subspace_line(series[i]));
    } else if (kind == "postlie") {
        PostLieAlgebra P = io::read_postlie(text);
        check_postlie(P);
        auto series = brace_derived_series_infinitesimal(P);
        for (std::size_t i = 0; i < series.chain.size(); ++i)
            chain << (i ? " " : "") << series.chain[i].dim();
        rep.kv("chain_dims", chain.str());
        solvable = series.solvable;
        for (std::size_t i = 0; i < series.chain.size(); ++i)
            rep.kv("term " + std::to_string(i), subspace_line(series.chain[i]));
    } else {
        throw Error("Usage", "derived expects a brace, liealg or postlie file");
    }
    rep.kv("solvable", solvable ? "true" : "false");
    rep.kv("status", "ok");
    return 0;
}

int do_quotient(Report& rep, const std::string& input, const std::string& ideal_spec,
                const std::string& out) {
    FiniteSkewBrace b = io::read_brace(io::read_file(input));
    ElemSet ideal;
    std::istringstream is(ideal_spec);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        ideal.push_back(static_cast<Elem>(std::stoul(tok)));
    }
    std::sort(ideal.begin(), ideal.end());
    FiniteSkewBrace q = quotient(b, ideal);
    rep.kv("order", q.order());
    rep.kv("class", to_string(classify_triviality(q)));
    const std::string text = io::write_brace(q);
    if (out == "-") {
        rep.kv("status", "ok");
        rep.raw("");
        rep.os << text;
    } else {
        io::write_file(out, text);
        rep.kv("out", out);
        rep.kv("status", "ok");
    }
    return 0;
}

int do_enumerate(Report& rep, const std::string& input, bool report_simple,
                 std::size_t max_order) {
    FiniteGroup g = load_group(input);
    rep.kv("order", g.order());
    rep.kv("additive_group", identify_group(g));
    std::size_t total = 0;
    std::map<std::string, std::size_t> class_counts;
    std::vector<FiniteSkewBrace> simples;
    enumerate_braces_visit(
        g,
        [&](const FiniteSkewBrace& b) {
            ++total;
            ++class_counts[to_string(classify_triviality(b))];
            if (report_simple && all_ideals(b, max_order).size() == 2) simples.push_back(b);
        },
        max_order);
    rep.kv("brace_count", total);
    for (const auto& [name, count] : class_counts) rep.kv("class " + name, count);
    if (report_simple) {
        rep.kv("simple_count", simples.size());
        std::map<std::string, std::size_t> signatures;
        for (const auto& s : simples)
            ++signatures["class=" + to_string(classify_triviality(s)) +
                         " circ_group=" + identify_group(s.circ())];
        for (const auto& [sig, count] : signatures)
            rep.kv("simple_signature", sig + " count=" + std::to_string(count));
        std::vector<std::size_t> reps_idx;
        for (std::size_t i = 0; i < simples.size(); ++i) {
            bool fresh = true;
            for (std::size_t r : reps_idx)
                if (braces_isomorphic(simples[i], simples[r])) {
                    fresh = false;
                    break;
                }
            if (fresh) reps_idx.push_back(i);
        }
        rep.kv("simple_iso_classes", reps_idx.size());
    }
    rep.kv("status", "ok");
    return 0;
}

int do_postlie_check(Report& rep, const std::string& input) {
    PostLieAlgebra P = io::read_postlie(io::read_file(input));
    rep.kv("dim", P.dim());
    check_postlie(P);
    rep.kv("dot_jacobi", "ok");
    rep.kv("axioms", "ok");
    check_jacobi(P.circ());
    rep.kv("circ_jacobi", "ok");
    rep.kv("status", "ok");
    return 0;
}

int do_rigidity(Report& rep, const std::string& input) {
    PostLieAlgebra P = io::read_postlie(io::read_file(input));
    rep.kv("dim", P.dim());
    check_postlie(P);
    RigidityResult r = rigidity_classify(P);
    switch (r.result) {
        case RigidityCase::case_i: rep.kv("case", "i"); break;
        case RigidityCase::case_ii: rep.kv("case", "ii"); break;
        case RigidityCase::violation: rep.kv("case", "violation"); break;
    }
    rep.kv("detail", r.detail);
    rep.kv("status", r.result == RigidityCase::violation ? "violation" : "ok");
    return r.result == RigidityCase::violation ? 1 : 0;
}

int do_lsb_check(Report& rep, const std::string& input, std::size_t samples, double tol,
                 std::uint64_t seed) {
    auto [dot, circ] = load_brace_law(input);
    rep.kv("dim", dot.dim());
    rep.kv("samples", samples);
    rep.kv("tol", format_double(tol));
    rep.kv("seed", seed);
    BraceCheckReport r = check_brace_numeric(dot, circ, samples, tol, seed);
    rep.kv("dot_identity_residual", format_double(r.dot_report.identity_residual));
    rep.kv("dot_associativity_residual", format_double(r.dot_report.associativity_residual));
    rep.kv("dot_inverse_residual", format_double(r.dot_report.inverse_residual));
    rep.kv("circ_identity_residual", format_double(r.circ_report.identity_residual));
    rep.kv("circ_associativity_residual", format_double(r.circ_report.associativity_residual));
    rep.kv("circ_inverse_residual", format_double(r.circ_report.inverse_residual));
    rep.kv("brace_residual", format_double(r.brace_residual));
    rep.kv("status", r.pass ? "pass" : "fail");
    return r.pass ? 0 : 1;
}

int do_extract(Report& rep, const std::string& input, std::size_t samples, double tol,
               std::uint64_t seed, std::size_t max_den, const std::string& out) {
    auto [dot, circ] = load_brace_law(input);
    rep.kv("dim", dot.dim());
    BraceCheckReport pre = check_brace_numeric(dot, circ, samples, tol, seed);
    rep.kv("brace_residual", format_double(pre.brace_residual));
    if (!pre.pass) {
        rep.kv("status", "fail");
        return 1;
    }
    NumericTensor dot_bracket = extract_bracket(dot);
    NumericTensor triangle = extract_triangle(dot, circ);
    rep.kv("dot_bracket_error_bound", format_double(dot_bracket.error_bound));
    rep.kv("triangle_error_bound", format_double(triangle.error_bound));
    rep.kv("max_den", max_den);
    BilinearMap dot_exact = rationalize(dot_bracket, max_den, std::max(tol, 1e-6));
    BilinearMap tri_exact = rationalize(triangle, max_den, std::max(tol, 1e-6));
    LieAlgebra dot_algebra(dot_exact);
    check_jacobi(dot_algebra);
    PostLieAlgebra P(dot_algebra, tri_exact);
    check_postlie(P);
    rep.kv("postlie_axioms", "ok");
    const std::string text = io::write_postlie(P.dot(), P.triangle());
    if (out == "-") {
        rep.kv("status", "ok");
        rep.raw("");
        rep.os << text;
    } else {
        io::write_file(out, text);
        rep.kv("out", out);
        rep.kv("status", "ok");
    }
    return 0;
}

int do_presets(Report& rep) {
    for (const auto& n : group_preset_names()) rep.kv("group", n);
    for (const auto& n : law_preset_names()) rep.kv("grouplaw", n);
    for (const auto& n : brace_law_preset_names()) rep.kv("bracelaw", n);
    rep.kv("status", "ok");
    return 0;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10e", v);
    return buf;
}

RunResult run(const std::vector<std::string>& args) {
    CLI::App app{"bracekit: exact and numeric computations for skew braces and post-Lie algebras"};
    app.require_subcommand(1);

    std::string input, ideal_spec, out = "-";
    std::size_t samples = 1000, max_den = 64, max_order = 60;
    double tol = 1e-8;
    std::uint64_t seed = 42;
    bool report_simple = false;

    auto add_input = [&](CLI::App* cmd, const std::string& what) {
        cmd->add_option("input", input, what)->required();
    };

    CLI::App* check_group =
        app.add_subcommand("check-group", "validate a group table (group file or presets:NAME)");
    add_input(check_group, "group file or presets:NAME");

    CLI::App* check_brace =
        app.add_subcommand("check-brace", "verify the compatibility identity of a brace file");
    add_input(check_brace, "brace file");

    CLI::App* ideals =
        app.add_subcommand("ideals", "list ideals of a brace, liealg or postlie file");
    add_input(ideals, "brace, liealg or postlie file");
    ideals->add_option("--max-order", max_order, "refuse braces above this order");

    CLI::App* derived = app.add_subcommand(
        "derived", "derived series of a brace, liealg or postlie file");
    add_input(derived, "brace, liealg or postlie file");

    CLI::App* quot = app.add_subcommand("quotient", "quotient of a brace file by an ideal");
    add_input(quot, "brace file");
    quot->add_option("--ideal", ideal_spec, "comma-separated element indices")->required();
    quot->add_option("--out", out, "output path, '-' for stdout");

    CLI::App* enumerate =
        app.add_subcommand("enumerate", "all braces with a given additive group");
    enumerate->add_option("--additive", input, "group file or presets:NAME")->required();
    enumerate->add_flag("--report-simple", report_simple, "also list simple braces");
    enumerate->add_option("--max-order", max_order, "refuse orders above this bound");

    CLI::App* postlie_check =
        app.add_subcommand("postlie-check", "verify the axioms of a postlie file");
    add_input(postlie_check, "postlie file");

    CLI::App* rigidity = app.add_subcommand(
        "rigidity", "classify a postlie file with simple sub-adjacent algebra");
    add_input(rigidity, "postlie file");

    CLI::App* lsb = app.add_subcommand(
        "lsb-check", "numeric group/brace checks of a bracelaw file or presets:NAME");
    add_input(lsb, "bracelaw file or presets:NAME");
    lsb->add_option("--samples", samples, "sample count");
    lsb->add_option("--tol", tol, "residual tolerance");
    lsb->add_option("--seed", seed, "PRNG seed");

    CLI::App* extract = app.add_subcommand(
        "extract", "extract bracket and triangle tensors, rationalize, write a postlie file");
    add_input(extract, "bracelaw file or presets:NAME");
    extract->add_option("--samples", samples, "pre-check sample count");
    extract->add_option("--tol", tol, "pre-check tolerance");
    extract->add_option("--seed", seed, "PRNG seed");
    extract->add_option("--max-den", max_den, "largest denominator for rationalization");
    extract->add_option("--out", out, "output path, '-' for stdout");

    CLI::App* presets = app.add_subcommand("presets", "list built-in presets");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return {0, app.help()};
    } catch (const CLI::ParseError& e) {
        Report rep;
        rep.kv("status", "UsageError");
        rep.kv("detail", e.what());
        rep.raw("");
        return {2, rep.str() + app.help()};
    }

    Report rep;
    try {
        if (check_group->parsed()) {
            rep.kv("subcommand", "check-group");
            rep.kv("input", input);
            return {do_check_group(rep, input), rep.str()};
        }
        if (check_brace->parsed()) {
            rep.kv("subcommand", "check-brace");
            rep.kv("input", input);
            return {do_check_brace(rep, input), rep.str()};
        }
        if (ideals->parsed()) {
            rep.kv("subcommand", "ideals");
            rep.kv("input", input);
            return {do_ideals(rep, input, max_order), rep.str()};
        }
        if (derived->parsed()) {
            rep.kv("subcommand", "derived");
            rep.kv("input", input);
            return {do_derived(rep, input), rep.str()};
        }
        if (quot->parsed()) {
            rep.kv("subcommand", "quotient");
            rep.kv("input", input);
            return {do_quotient(rep, input, ideal_spec, out), rep.str()};
        }
        if (enumerate->parsed()) {
            rep.kv("subcommand", "enumerate");
            rep.kv("additive", input);
            return {do_enumerate(rep, input, report_simple, max_order), rep.str()};
        }
        if (postlie_check->parsed()) {
            rep.kv("subcommand", "postlie-check");
            rep.kv("input", input);
            return {do_postlie_check(rep, input), rep.str()};
        }
        if (rigidity->parsed()) {
            rep.kv("subcommand", "rigidity");
            rep.kv("input", input);
            return {do_rigidity(rep, input), rep.str()};
        }
        if (lsb->parsed()) {
            rep.kv("subcommand", "lsb-check");
            rep.kv("input", input);
            return {do_lsb_check(rep, input, samples, tol, seed), rep.str()};
        }
        if (extract->parsed()) {
            rep.kv("subcommand", "extract");
            rep.kv("input", input);
            return {do_extract(rep, input, samples, tol, seed, max_den, out), rep.str()};
        }
        if (presets->parsed()) {
            rep.kv("subcommand", "presets");
            return {do_presets(rep), rep.str()};
        }
        return {2, "status: UsageError\ndetail: no subcommand\n"};
    } catch (const Error& e) {
        rep.kv("status", e.kind());
        const std::string what = e.what();
        rep.kv("detail", what.substr(what.find(": ") + 2));
        return {classify_error(e.kind()), rep.str()};
    } catch (const std::exception& e) {
        rep.kv("status", "InternalError");
        rep.kv("detail", e.what());
        return {2, rep.str()};
    }
}

}  // namespace bracekit::cli
