#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "mvlab/covering.hpp"
#include "mvlab/errors.hpp"
#include "mvlab/json.hpp"
#include "mvlab/theorems.hpp"
#include "mvlab/turan.hpp"
#include "mvlab/visibility.hpp"

namespace mvlab::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "json";
    std::uint64_t max_nodes = 10'000'000;
    double time_limit = 60.0;
    std::uint64_t seed = 1;

    std::string family, param, formula, pattern, what, in, out, side = "auto";
    std::string n_range, k_range = "2";
    int n = -1, k = -1, t = -1;
    int samples = 200;
    bool summary = false;
    bool cstar = false;
};

using Clock = std::chrono::steady_clock;

SearchBudget budget_from(const Options& o) {
    SearchBudget b;
    b.max_nodes = o.max_nodes;
    if (o.time_limit <= 0) throw UsageError("--time-limit must be positive");
    b.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(o.time_limit * 1000.0));
    return b;
}

// Remaining share of the subcommand's time budget.
SearchBudget remaining(const SearchBudget& b, Clock::time_point start) {
    auto used = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    SearchBudget out = b;
    out.time_limit = std::max(std::chrono::milliseconds(1), b.time_limit - used);
    return out;
}

std::pair<int, int> parse_range(const std::string& s, const char* flag) {
    auto to_int = [&](std::string_view part) {
        int v = 0;
        auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || p != part.data() + part.size())
            throw UsageError(std::string(flag) + ": expected <int> or <lo>..<hi>, got '" + s + "'");
        return v;
    };
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        int v = to_int(s);
        return {v, v};
    }
    int lo = to_int(std::string_view(s).substr(0, dots)), hi = to_int(std::string_view(s).substr(dots + 2));
    if (lo > hi) throw UsageError(std::string(flag) + ": empty range '" + s + "'");
    return {lo, hi};
}

void require(bool cond, const std::string& what) {
    if (!cond) throw UsageError(what);
}

// ---- rendering ----

std::string cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

void render(std::ostream& out, const std::string& format, const std::vector<json>& rows,
            const std::vector<std::string>& columns) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows) {
        std::vector<std::string> line;
        for (const auto& c : columns) line.push_back(r.contains(c) ? cell(r[c]) : "-");
        cells.push_back(std::move(line));
    }
    if (format == "csv") {
        for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << csv_cell(columns[i]);
        out << '\n';
        for (const auto& line : cells) {
            for (std::size_t i = 0; i < line.size(); ++i) out << (i ? "," : "") << csv_cell(line[i]);
            out << '\n';
        }
        return;
    }
    std::vector<std::size_t> width(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) {
        width[i] = columns[i].size();
        for (const auto& line : cells) width[i] = std::max(width[i], line[i].size());
    }
    auto emit = [&](const std::vector<std::string>& line) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            out << std::left << std::setw(static_cast<int>(width[i])) << line[i];
            out << (i + 1 < line.size() ? "  " : "\n");
        }
    };
    emit(columns);
    std::vector<std::string> rule;
    for (auto w : width) rule.emplace_back(w, '-');
    emit(rule);
    for (const auto& line : cells) emit(line);
}

// Like dump(2), but arrays of scalars (the sets) stay on one line.
void pretty(std::ostream& out, const json& v, int depth) {
    auto pad = [&](int d) { out << std::string(static_cast<std::size_t>(2 * d), ' '); };
    if (v.is_object() && !v.empty()) {
        out << "{\n";
        std::size_t i = 0;
        for (auto it = v.begin(); it != v.end(); ++it, ++i) {
            pad(depth + 1);
            out << json(it.key()).dump() << ": ";
            pretty(out, it.value(), depth + 1);
            out << (i + 1 < v.size() ? ",\n" : "\n");
        }
        pad(depth);
        out << '}';
    } else if (v.is_array() && !v.empty() &&
               std::any_of(v.begin(), v.end(), [](const json& e) { return e.is_structured() && !e.empty() && !(e.is_array() && std::all_of(e.begin(), e.end(), [](const json& x) { return x.is_primitive(); })); })) {
        out << "[\n";
        for (std::size_t i = 0; i < v.size(); ++i) {
            pad(depth + 1);
            pretty(out, v[i], depth + 1);
            out << (i + 1 < v.size() ? ",\n" : "\n");
        }
        pad(depth);
        out << ']';
    } else {
        out << v.dump();
    }
}

void emit(std::ostream& out, const Options& o, const json& doc, const std::vector<std::string>& columns) {
    if (o.format == "json") {
        pretty(out, doc, 0);
        out << '\n';
        return;
    }
    std::vector<json> rows;
    if (doc.is_array())
        rows.assign(doc.begin(), doc.end());
    else
        rows.push_back(doc);
    render(out, o.format, rows, columns);
}

// ---- verbs ----

int cmd_compute(const Options& o, std::ostream& out) {
    auto graph = FamilyGraph::parse(o.family);
    auto variant = parse_visibility_variant(o.param);
    require(variant.has_value(), "--param: unknown parameter '" + o.param + "'");
    VisibilityOracle oracle(graph);
    auto cert = oracle.max_visibility_number(*variant, budget_from(o));
    auto doc = to_json(cert);
    doc["size"] = graph.vertex_count();
    emit(out, o, doc, {"family", "param", "value", "status", "size", "nodes"});
    return cert.status == SearchStatus::exact ? ok : interval;
}

json summary_row(const VerificationReport& r, bool with_seconds) {
    json row = to_json(r);
    std::string params = "n=" + std::to_string(r.params.n) + " k=" + std::to_string(r.params.k);
    if (r.formula == FormulaId::sandwich_dual_outer) params += " " + std::string(to_string(r.params.family));
    row["params"] = params;
    if (with_seconds) {
        std::ostringstream s;
        s << std::fixed << std::setprecision(3) << r.seconds;
        row["seconds"] = s.str();
    }
    return row;
}

int cmd_verify(const Options& o, std::ostream& out) {
    auto id = parse_formula_id(o.formula);
    require(id.has_value(), "--formula: unknown formula '" + o.formula + "'");
    require(!o.n_range.empty(), "--n is required");
    auto [n_lo, n_hi] = parse_range(o.n_range, "--n");
    auto [k_lo, k_hi] = parse_range(o.k_range, "--k");
    FamilyKind family = FamilyKind::kneser;
    if (!o.family.empty()) {
        auto f = parse_family_kind(o.family);
        require(f.has_value(), "--family: unknown kind '" + o.family + "'");
        family = *f;
    }
    auto budget = budget_from(o);
    auto start = Clock::now();
    std::vector<VerificationReport> reports;
    for (int k = k_lo; k <= k_hi; ++k) {
        for (int n = n_lo; n <= n_hi; ++n) {
            VerifyParams p;
            p.n = n;
            p.k = k;
            p.family = family;
            p.seed = o.seed;
            p.samples = o.samples;
            reports.push_back(verify(*id, p, remaining(budget, start)));
        }
    }
    int code = ok;
    for (const auto& r : reports) {
        if (r.verdict == Verdict::fail) code = failed;
        if (r.verdict == Verdict::skipped && code == ok && r.reason.rfind("oracle beyond budget", 0) == 0)
            code = interval;
    }
    std::vector<std::string> columns{"formula", "params", "formula_value", "oracle_value", "verdict"};
    if (o.summary) {
        columns.push_back("seconds");
        std::vector<json> rows;
        for (const auto& r : reports) rows.push_back(summary_row(r, true));
        render(out, "table", rows, columns);
        return code;
    }
    json doc = json::array();
    for (const auto& r : reports) doc.push_back(o.format == "json" ? to_json(r) : summary_row(r, false));
    emit(out, o, doc, columns);
    return code;
}

Hypergraph build_named(const Options& o) {
    if (o.what == "H_nk") return build_H_nk(o.n, o.k);
    if (o.what == "generalized-triangle") return build_generalized_triangle(o.k);
    if (o.what == "complete-uniform") return build_complete_uniform(o.n, o.k);
    if (o.what == "c4-suspension") return build_c4_suspension(o.k).as_hypergraph();
    if (o.what == "k4-suspension") return build_k4_suspension(o.k).as_hypergraph();
    throw UsageError("--what: expected H_nk, generalized-triangle, complete-uniform, c4-suspension or k4-suspension");
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    f << text;
    if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

int cmd_construct(const Options& o, std::ostream& out) {
    auto h = build_named(o);
    auto tau = transversal_number(h, budget_from(o));
    json doc = {{"what", o.what}, {"n", h.n()}, {"k", h.k()}, {"edge_count", h.edge_count()},
                {"tau", tau.tau}, {"tau_exact", tau.optimal}};
    if (!o.out.empty()) {
        write_file(o.out, h.to_text());
        doc["file"] = o.out;
    } else {
        doc["hypergraph"] = to_json(h);
    }
    emit(out, o, doc, {"what", "n", "k", "edge_count", "tau"});
    return tau.optimal ? ok : interval;
}

int cmd_turan(const Options& o, std::ostream& out) {
    auto p = Pattern::parse(o.pattern);
    require(o.n >= 0, "--n is required");
    auto r = ex_uniform(o.n, p.k, p, budget_from(o));
    if (!o.out.empty()) write_file(o.out, r.extremal_witness.to_text());
    auto doc = to_json(r);
    emit(out, o, doc, {"pattern", "n", "k", "value", "status", "nodes"});
    return r.status == TuranStatus::exact ? ok : interval;
}

int cmd_covering(const Options& o, std::ostream& out) {
    auto budget = budget_from(o);
    if (o.cstar) {
        require(o.n >= 0 && o.k >= 0, "--n and --k are required");
        auto r = c_star(o.n, o.k, budget);
        emit(out, o, to_json(r), {"n", "r", "s", "value", "exact", "nodes"});
        return r.value.is_exact() ? ok : interval;
    }
    require(o.n >= 0 && o.k >= 0 && o.t >= 0, "--n, --k and --t are required");
    CoveringInstance c;
    if (o.side == "blocks")
        c = covering_number_blocks(o.n, o.k, o.t, budget);
    else if (o.side == "transversal")
        c = covering_number_transversal(o.n, o.k, o.t, budget);
    else if (o.side == "auto")
        c = covering_number(o.n, o.k, o.t, budget);
    else
        throw UsageError("--side: expected auto, blocks or transversal");
    emit(out, o, to_json(c), {"n", "k", "t", "value", "side", "nodes"});
    return c.exact() ? ok : interval;
}

int cmd_tau(const Options& o, std::ostream& out) {
    require(!o.in.empty(), "--in is required");
    std::ifstream f(o.in);
    if (!f) throw std::runtime_error("cannot open '" + o.in + "'");
    auto h = Hypergraph::read(f);
    auto t = transversal_number(h, budget_from(o));
    auto doc = to_json(t);
    doc["n"] = h.n();
    doc["k"] = h.k();
    doc["edge_count"] = h.edge_count();
    emit(out, o, doc, {"n", "k", "edge_count", "tau", "optimal", "nodes"});
    return t.optimal ? ok : interval;
}

// Raw search plus whatever proven bounds apply; nothing is asserted.
int cmd_explore(const Options& o, std::ostream& out) {
    auto graph = FamilyGraph::parse(o.family);
    auto variant = parse_visibility_variant(o.param);
    require(variant.has_value(), "--param: unknown parameter '" + o.param + "'");
    auto budget = budget_from(o);
    auto start = Clock::now();
    VisibilityOracle oracle(graph);
    auto cert = oracle.max_visibility_number(*variant, budget);
    const int n = graph.n(), k = graph.k();
    json bounds = json::array();
    auto note = [&](const char* side, const char* source, auto&& f) {
        try {
            bounds.push_back({{"side", side}, {"source", source}, {"value", to_json(f())}});
        } catch (const std::invalid_argument&) {
            // bound not proven at these parameters
        }
    };
    // mu_t lower-bounds mu, mu_d and mu_o, but says nothing about gp.
    const bool is_total = *variant == VisibilityVariant::total;
    const char* total_side = is_total ? "exact" : "lower";
    const bool use_total = *variant != VisibilityVariant::general_position;
    const bool is_mutual = *variant == VisibilityVariant::mutual;
    switch (graph.kind()) {
    case FamilyKind::kneser:
        if (use_total)
            note(total_side, "total mutual-visibility formula",
                 [&] { return mut_kneser_formula(n, k, remaining(budget, start)); });
        if (is_mutual)
            note("lower", "general-position star", [&] { return Interval::exact(mu_kneser_gp_lower_bound(n, k)); });
        break;
    case FamilyKind::bipartite_kneser:
        if (use_total)
            note(total_side, "total mutual-visibility formula",
                 [&] { return mut_bipartite_formula(n, k, remaining(budget, start)); });
        if (is_mutual)
            note("lower", "first colour class", [&] { return mu_bipartite_lower_bound(n, k, remaining(budget, start)); });
        break;
    case FamilyKind::johnson:
        if (use_total)
            note(total_side, "C4-suspension Turan number",
                 [&] { return mut_johnson_value(n, k, remaining(budget, start)); });
        if (is_mutual)
            note("upper", "K4-suspension Turan number", [&] {
                return ex_uniform(n, k, build_k4_suspension(k), remaining(budget, start)).value;
            });
        break;
    }
    json doc = {{"family", graph.spec()},
                {"param", std::string(to_string(*variant))},
                {"search", to_json(cert)},
                {"value", cert.value},
                {"status", cert.status == SearchStatus::exact ? "exact" : "incomplete"},
                {"bounds", bounds},
                {"asserted", false}};
    emit(out, o, doc, {"family", "param", "value", "status"});
    return cert.status == SearchStatus::exact ? ok : interval;
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table", "csv"}));
    sub->add_option("--max-nodes", o.max_nodes, "Node cap per search");
    sub->add_option("--time-limit", o.time_limit, "Seconds for the whole subcommand");
    sub->add_option("--seed", o.seed, "Seed for randomized sweeps");
}

json error_object(const std::string& kind, const std::string& message) {
    return {{"error", {{"kind", kind}, {"message", message}}}};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Mutual-visibility laboratory for Kneser, bipartite Kneser and Johnson graphs", "mvlab"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand("compute", "Exact visibility parameter of a family graph");
    compute->add_option("--family", o.family, "kneser:n=7,k=2 | bipartite-kneser:... | johnson:...")->required();
    compute->add_option("--param", o.param, "mu | mu-total | mu-dual | mu-outer | gp")->required();
    add_common(compute, o);

    auto* verify_cmd = app.add_subcommand("verify", "Check a closed formula against an independent oracle");
    verify_cmd->add_option("--formula", o.formula, "Formula id, e.g. mut-kneser")->required();
    verify_cmd->add_option("--n", o.n_range, "n or lo..hi")->required();
    verify_cmd->add_option("--k", o.k_range, "k or lo..hi");
    verify_cmd->add_option("--family", o.family, "Family kind for sandwich-dual-outer");
    verify_cmd->add_option("--samples", o.samples, "Random subsets for lemma-transversal-equiv");
    verify_cmd->add_flag("--summary", o.summary, "Fixed-width table with timings");
    add_common(verify_cmd, o);

    auto* construct = app.add_subcommand("construct", "Build a named hypergraph");
    construct->add_option("--what", o.what, "H_nk | generalized-triangle | complete-uniform | c4-suspension | k4-suspension")
        ->required();
    construct->add_option("--n", o.n, "Ground set size");
    construct->add_option("--k", o.k, "Uniformity")->required();
    construct->add_option("--out", o.out, "Write the hypergraph text format here");
    add_common(construct, o);

    auto* turan = app.add_subcommand("turan", "Exact Turan number of a suspension pattern");
    turan->add_option("--pattern", o.pattern, "c4sus:k=2 | k4sus:k=3 ...")->required();
    turan->add_option("--n", o.n, "Ground set size")->required();
    turan->add_option("--out", o.out, "Write the extremal witness here");
    add_common(turan, o);

    auto* covering = app.add_subcommand("covering", "Covering number C(n,k,t) or C*(n,k)");
    covering->add_option("--n", o.n)->required();
    covering->add_option("--k", o.k)->required();
    covering->add_option("--t", o.t);
    covering->add_option("--side", o.side, "auto | blocks | transversal");
    covering->add_flag("--cstar", o.cstar, "Compute C*(n,k) = C(n, n-k, 2k-1)");
    add_common(covering, o);

    auto* tau = app.add_subcommand("tau", "Transversal number of a hypergraph file");
    tau->add_option("--in", o.in, "Hypergraph text file")->required();
    add_common(tau, o);

    auto* explore = app.add_subcommand("explore", "Raw search with known bounds, for open ranges");
    explore->add_option("--family", o.family)->required();
    explore->add_option("--param", o.param)->required();
    add_common(explore, o);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << error_object("usage", e.what()).dump() << '\n';
        return usage;
    }

    try {
        if (compute->parsed()) return cmd_compute(o, out);
        if (verify_cmd->parsed()) return cmd_verify(o, out);
        if (construct->parsed()) return cmd_construct(o, out);
        if (turan->parsed()) return cmd_turan(o, out);
        if (covering->parsed()) return cmd_covering(o, out);
        if (tau->parsed()) return cmd_tau(o, out);
        if (explore->parsed()) return cmd_explore(o, out);
    } catch (const UsageError& e) {
        err << error_object("usage", e.what()).dump() << '\n';
        return usage;
    } catch (const ConstraintError& e) {
        auto obj = error_object("constraint", e.what());
        obj["error"]["constraint"] = e.constraint();
        err << obj.dump() << '\n';
        return usage;
    } catch (const PreconditionError& e) {
        auto obj = error_object("precondition", e.what());
        obj["error"]["clause"] = e.clause();
        err << obj.dump() << '\n';
        return usage;
    } catch (const DomainError& e) {
        err << error_object("domain", e.what()).dump() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << error_object("io", e.what()).dump() << '\n';
        return usage;
    }
    return usage;
}

} // namespace mvlab::cli
