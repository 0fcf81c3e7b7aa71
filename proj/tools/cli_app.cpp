#include "cli_app.hpp"

#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "antiramsey/antiramsey.hpp"
#include "antiramsey/greedy.hpp"
#include "antiramsey/oracle.hpp"
#include "antiramsey/scan.hpp"
#include "antiramsey/witness_io.hpp"

namespace antiramsey::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kDomain = 2;
constexpr int kVerification = 3;
constexpr int kResource = 4;

std::string join(const std::vector<int>& values) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

struct QueryArgs {
    std::string parts;
    int q = 0;
    std::string method = "auto";
    std::string witness_path;
    bool emit_json = false;
    std::int64_t node_budget = kDefaultNodeBudget;
    int max_n = kDefaultOracleMaxN;
    std::int64_t max_edges = kDefaultOracleMaxEdges;

    SolveOptions solve() const {
        SolveOptions opts;
        opts.method = *parse_solve_method(method); // choices enforced by the parser
        opts.node_budget = node_budget;
        opts.oracle_max_n = max_n;
        opts.oracle_max_edges = max_edges;
        return opts;
    }
};

void add_method_option(CLI::App* cmd, QueryArgs& args) {
    cmd->add_option("--method", args.method, "solution route")
        ->check(CLI::IsMember({"auto", "closed-form", "sequence-solver", "oracle"}))
        ->capture_default_str();
}

void add_cap_options(CLI::App* cmd, QueryArgs& args) {
    cmd->add_option("--node-budget", args.node_budget, "assignment search node limit")
        ->capture_default_str();
    cmd->add_option("--max-n", args.max_n, "oracle vertex cap")->capture_default_str();
    cmd->add_option("--max-edges", args.max_edges, "oracle edge cap")->capture_default_str();
}

int run_ar(const QueryArgs& args, std::ostream& out) {
    MultipartiteGraph g = parse_parts(args.parts);
    AntiRamseyResult result = anti_ramsey(g, args.q, args.solve());

    std::optional<std::string> wrote;
    if (!args.witness_path.empty()) {
        if (!result.certificate)
            throw std::logic_error("anti-Ramsey result carries no certificate");
        Coloring witness = witness_from_certificate(g, *result.certificate);
        if (witness.num_classes != result.value)
            throw std::logic_error("witness class count disagrees with the computed value");
        write_witness_file(args.witness_path, witness, args.q);
        wrote = args.witness_path;
    }

    if (args.emit_json) {
        json j;
        j["parts"] = g.parts;
        j["n"] = g.n;
        j["q"] = args.q;
        j["value"] = result.value;
        j["ellq"] = result.ellq_value;
        j["method"] = std::string(method_name(result.method));
        if (result.certificate)
            j["certificate"] = result.certificate->counts;
        if (wrote)
            j["witness_path"] = *wrote;
        out << j.dump(2) << "\n";
    } else {
        out << "ar = " << result.value << " (method: " << method_name(result.method) << ")\n";
        if (wrote)
            out << "witness written to " << *wrote << "\n";
    }
    return kOk;
}

int run_ellq(const QueryArgs& args, std::ostream& out) {
    MultipartiteGraph g = parse_parts(args.parts);
    ExtremalResult result = ellq(g, args.q, args.solve());
    if (args.emit_json) {
        json j;
        j["parts"] = g.parts;
        j["n"] = g.n;
        j["q"] = args.q;
        j["value"] = result.value;
        j["ellq"] = result.value;
        j["method"] = std::string(method_name(result.method));
        if (result.certificate)
            j["certificate"] = result.certificate->counts;
        out << j.dump(2) << "\n";
    } else {
        out << "ellq = " << result.value << " (method: " << method_name(result.method) << ")\n";
    }
    return kOk;
}

struct BoundaryArgs {
    std::string parts;
    int r = 0;
    bool emit_json = false;
};

int run_min_boundary(const BoundaryArgs& args, std::ostream& out) {
    MultipartiteGraph g = parse_parts(args.parts);
    GreedyTrace trace = algorithm_a(g, args.r);
    std::int64_t value = boundary_edge_count(g, trace.selection);
    if (args.emit_json) {
        json j;
        j["parts"] = g.parts;
        j["n"] = g.n;
        j["r"] = args.r;
        j["value"] = value;
        j["selection"] = trace.selection.counts;
        j["pick_order"] = trace.pick_order;
        j["degrees"] = trace.degrees_at_pick;
        out << j.dump(2) << "\n";
    } else {
        out << "min-boundary = " << value << "\n";
        out << "selection: " << join(trace.selection.counts) << "\n";
        for (size_t i = 0; i < trace.pick_order.size(); ++i)
            out << "pick " << i + 1 << ": part " << trace.pick_order[i] << ", degree "
                << trace.degrees_at_pick[i] << "\n";
    }
    return kOk;
}

struct SequencesArgs {
    int n = 0;
    int q = 0;
    bool emit_json = false;
};

int run_sequences(const SequencesArgs& args, std::ostream& out) {
    std::vector<ComponentSizeSequence> seqs = candidate_sequences(args.n, args.q);
    if (args.emit_json) {
        json j;
        j["n"] = args.n;
        j["q"] = args.q;
        json list = json::array();
        for (const ComponentSizeSequence& s : seqs)
            list.push_back(s.sizes);
        j["sequences"] = std::move(list);
        out << j.dump(2) << "\n";
    } else {
        for (const ComponentSizeSequence& s : seqs)
            out << join(s.sizes) << "\n";
    }
    return kOk;
}

struct CheckArgs {
    std::string file;
    std::optional<int> q;
    bool emit_json = false;
};

int run_check_coloring(const CheckArgs& args, std::ostream& out, std::ostream& err) {
    WitnessFile witness = read_witness_file(args.file);
    int q = args.q.value_or(witness.q);
    std::optional<RainbowTree> tree = find_rainbow_tree(witness.coloring, q);
    if (args.emit_json) {
        json j;
        j["file"] = args.file;
        j["parts"] = witness.coloring.graph.parts;
        j["q"] = q;
        j["classes"] = witness.coloring.num_classes;
        j["rainbow"] = tree.has_value();
        if (tree) {
            json rows = json::array();
            for (size_t i = 0; i < tree->edges.size(); ++i) {
                const LabeledEdge& e = tree->edges[i];
                rows.push_back({e.u.part, e.u.offset, e.v.part, e.v.offset, tree->colors[i]});
            }
            j["tree"] = std::move(rows);
        }
        out << j.dump(2) << "\n";
    } else if (!tree) {
        out << "no-rainbow\n";
    } else {
        for (size_t i = 0; i < tree->edges.size(); ++i) {
            const LabeledEdge& e = tree->edges[i];
            out << e.u.part << ' ' << e.u.offset << ' ' << e.v.part << ' ' << e.v.offset << ' '
                << tree->colors[i] << "\n";
        }
    }
    if (tree) {
        err << "error:" << kVerification << ": rainbow tree with " << q << " edges found\n";
        return kVerification;
    }
    return kOk;
}

int run_oracle_ellq(const QueryArgs& args, std::ostream& out) {
    MultipartiteGraph g = parse_parts(args.parts);
    OracleEllqResult result = oracle_ellq(g, args.q, args.max_n);
    if (args.emit_json) {
        json j;
        j["parts"] = g.parts;
        j["n"] = g.n;
        j["q"] = args.q;
        j["value"] = result.value;
        j["ellq"] = result.value;
        j["method"] = "oracle";
        j["certificate"] = result.certificate.counts;
        out << j.dump(2) << "\n";
    } else {
        out << "ellq = " << result.value << " (method: oracle)\n";
    }
    return kOk;
}

int run_oracle_ar(const QueryArgs& args, std::ostream& out) {
    MultipartiteGraph g = parse_parts(args.parts);
    OracleArResult result = oracle_ar(g, args.q, args.max_edges);
    std::optional<std::string> wrote;
    if (!args.witness_path.empty()) {
        write_witness_file(args.witness_path, result.witness, args.q);
        wrote = args.witness_path;
    }
    if (args.emit_json) {
        json j;
        j["parts"] = g.parts;
        j["n"] = g.n;
        j["q"] = args.q;
        j["value"] = result.value;
        j["method"] = "oracle";
        if (wrote)
            j["witness_path"] = *wrote;
        out << j.dump(2) << "\n";
    } else {
        out << "ar = " << result.value << " (method: oracle)\n";
        if (wrote)
            out << "witness written to " << *wrote << "\n";
    }
    return kOk;
}

int run_oracle_min_boundary(const BoundaryArgs& args, int max_n, std::ostream& out) {
    MultipartiteGraph g = parse_parts(args.parts);
    std::int64_t value = oracle_min_boundary(g, args.r, max_n);
    if (args.emit_json) {
        json j;
        j["parts"] = g.parts;
        j["n"] = g.n;
        j["r"] = args.r;
        j["value"] = value;
        j["method"] = "oracle";
        out << j.dump(2) << "\n";
    } else {
        out << "min-boundary = " << value << " (method: oracle)\n";
    }
    return kOk;
}

struct ScanArgs {
    ScanOptions options;
    bool emit_json = false;
};

json scan_to_json(const ScanReport& report) {
    json j;
    j["max_n"] = report.options.max_n;
    j["max_edges"] = report.options.max_edges;
    j["oracle_max_n"] = report.options.oracle_max_n;
    j["conjecture"] = report.options.conjecture;
    json instances = json::array();
    for (const ScanInstance& inst : report.instances) {
        json row;
        row["parts"] = inst.parts;
        row["q"] = inst.q;
        row["ellq"] = inst.ellq_formula;
        row["ellq_oracle"] = inst.ellq_oracle;
        row["method"] = std::string(method_name(inst.method));
        row["agree"] = inst.agree;
        if (inst.ar_formula) {
            row["ar"] = *inst.ar_formula;
            row["ar_oracle"] = *inst.ar_oracle;
        }
        if (inst.exceptional)
            row["exceptional"] = true;
        if (inst.strict_gap)
            row["strict_gap"] = true;
        if (inst.conjecture_match)
            row["conjecture_match"] = *inst.conjecture_match;
        instances.push_back(std::move(row));
    }
    j["instances"] = std::move(instances);
    json summary;
    summary["instances"] = report.summary.instances;
    summary["agreements"] = report.summary.agreements;
    summary["disagreements"] = report.summary.disagreements;
    summary["ar_checked"] = report.summary.ar_checked;
    summary["ar_agreements"] = report.summary.ar_agreements;
    summary["exceptional_hits"] = report.summary.exceptional_hits;
    summary["strict_gap_hits"] = report.summary.strict_gap_hits;
    summary["conjecture_checked"] = report.summary.conjecture_checked;
    summary["conjecture_matches"] = report.summary.conjecture_matches;
    j["summary"] = std::move(summary);
    j["truncated"] = report.truncated;
    if (report.truncated)
        j["truncation_reason"] = report.truncation_reason;
    return j;
}

void print_scan_text(const ScanReport& report, std::ostream& out) {
    out << "scan: max-n=" << report.options.max_n << " max-edges=" << report.options.max_edges
        << " oracle-max-n=" << report.options.oracle_max_n;
    if (report.options.conjecture)
        out << " conjecture";
    out << "\n";
    for (const ScanInstance& inst : report.instances) {
        out << "parts=" << join(inst.parts) << " q=" << inst.q << " ellq=" << inst.ellq_formula
            << " method=" << method_name(inst.method) << " oracle=" << inst.ellq_oracle;
        if (inst.ar_formula)
            out << " ar=" << *inst.ar_formula << " ar-oracle=" << *inst.ar_oracle;
        if (inst.exceptional)
            out << " exceptional";
        if (inst.strict_gap)
            out << " strict-gap";
        if (inst.conjecture_match)
            out << (*inst.conjecture_match ? " conjecture-match" : " conjecture-mismatch");
        out << (inst.agree ? " ok" : " MISMATCH") << "\n";
    }
    out << "instances: " << report.summary.instances << "\n";
    out << "agreements: " << report.summary.agreements << "\n";
    out << "disagreements: " << report.summary.disagreements << "\n";
    out << "ar-checked: " << report.summary.ar_checked << "\n";
    out << "ar-agreements: " << report.summary.ar_agreements << "\n";
    out << "exceptional-hits: " << report.summary.exceptional_hits << "\n";
    out << "strict-gap-hits: " << report.summary.strict_gap_hits << "\n";
    if (report.options.conjecture) {
        out << "conjecture-checked: " << report.summary.conjecture_checked << "\n";
        out << "conjecture-matches: " << report.summary.conjecture_matches << "\n";
    }
    if (report.truncated)
        out << "truncated: " << report.truncation_reason << "\n";
}

int run_scan(const ScanArgs& args, std::ostream& out, std::ostream& err) {
    ScanReport report = scan(args.options);
    if (args.emit_json)
        out << scan_to_json(report).dump(2) << "\n";
    else
        print_scan_text(report, out);
    if (report.summary.disagreements > 0) {
        err << "error:" << kVerification << ": scan found " << report.summary.disagreements
            << " disagreement(s)\n";
        return kVerification;
    }
    if (report.truncated) {
        err << "error:" << kResource << ": " << report.truncation_reason << "\n";
        return kResource;
    }
    return kOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::int64_t env_budget = kDefaultNodeBudget;
    if (const char* env = std::getenv("ANTIRAMSEY_NODE_BUDGET")) {
        try {
            size_t used = 0;
            env_budget = std::stoll(env, &used);
            if (used != std::string(env).size() || env_budget <= 0)
                throw std::invalid_argument(env);
        } catch (const std::exception&) {
            err << "error:" << kUsage << ": bad ANTIRAMSEY_NODE_BUDGET value '" << env << "'\n";
            return kUsage;
        }
    }

    CLI::App app{"anti-Ramsey numbers of complete multipartite graphs"};
    app.require_subcommand(1);

    std::function<int()> action;

    QueryArgs ar_args;
    ar_args.node_budget = env_budget;
    CLI::App* ar_cmd = app.add_subcommand("ar", "largest class count avoiding a rainbow tree");
    ar_cmd->add_option("--parts", ar_args.parts, "part sizes, e.g. 3,3,3")->required();
    ar_cmd->add_option("--q", ar_args.q, "tree edge count")->required();
    add_method_option(ar_cmd, ar_args);
    ar_cmd->add_option("--witness", ar_args.witness_path, "write the witness coloring here");
    ar_cmd->add_flag("--json", ar_args.emit_json, "emit a JSON object");
    add_cap_options(ar_cmd, ar_args);
    ar_cmd->callback([&] { action = [&] { return run_ar(ar_args, out); }; });

    QueryArgs witness_args;
    witness_args.node_budget = env_budget;
    CLI::App* witness_cmd =
        app.add_subcommand("witness", "compute ar and write the witness coloring");
    witness_cmd->add_option("--parts", witness_args.parts, "part sizes, e.g. 3,3,3")->required();
    witness_cmd->add_option("--q", witness_args.q, "tree edge count")->required();
    add_method_option(witness_cmd, witness_args);
    witness_cmd->add_option("--witness", witness_args.witness_path, "output path")->required();
    witness_cmd->add_flag("--json", witness_args.emit_json, "emit a JSON object");
    add_cap_options(witness_cmd, witness_args);
    witness_cmd->callback([&] { action = [&] { return run_ar(witness_args, out); }; });

    QueryArgs ellq_args;
    ellq_args.node_budget = env_budget;
    CLI::App* ellq_cmd =
        app.add_subcommand("ellq", "largest disconnected spanning subgraph size");
    ellq_cmd->add_option("--parts", ellq_args.parts, "part sizes, e.g. 3,3,3")->required();
    ellq_cmd->add_option("--q", ellq_args.q, "two-component vertex budget")->required();
    add_method_option(ellq_cmd, ellq_args);
    ellq_cmd->add_flag("--json", ellq_args.emit_json, "emit a JSON object");
    add_cap_options(ellq_cmd, ellq_args);
    ellq_cmd->callback([&] { action = [&] { return run_ellq(ellq_args, out); }; });

    BoundaryArgs boundary_args;
    CLI::App* boundary_cmd =
        app.add_subcommand("min-boundary", "fewest edges touching an r-vertex set");
    boundary_cmd->add_option("--parts", boundary_args.parts, "part sizes")->required();
    boundary_cmd->add_option("--r", boundary_args.r, "selection size")->required();
    boundary_cmd->add_flag("--json", boundary_args.emit_json, "emit a JSON object");
    boundary_cmd->callback([&] { action = [&] { return run_min_boundary(boundary_args, out); }; });

    SequencesArgs seq_args;
    CLI::App* seq_cmd =
        app.add_subcommand("sequences", "candidate component size sequences");
    seq_cmd->add_option("--n", seq_args.n, "vertex count")->required();
    seq_cmd->add_option("--q", seq_args.q, "two-component vertex budget")->required();
    seq_cmd->add_flag("--json", seq_args.emit_json, "emit a JSON object");
    seq_cmd->callback([&] { action = [&] { return run_sequences(seq_args, out); }; });

    CheckArgs check_args;
    CLI::App* check_cmd =
        app.add_subcommand("check-coloring", "search a witness file for a rainbow tree");
    check_cmd->add_option("--file", check_args.file, "witness file")->required();
    check_cmd->add_option("--q", check_args.q, "tree edge count (default: the file's q)");
    check_cmd->add_flag("--json", check_args.emit_json, "emit a JSON object");
    check_cmd->callback(
        [&] { action = [&] { return run_check_coloring(check_args, out, err); }; });

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "exhaustive reference computations");
    oracle_cmd->require_subcommand(1);

    QueryArgs oellq_args;
    CLI::App* oellq_cmd = oracle_cmd->add_subcommand("ellq", "spanning optimum by enumeration");
    oellq_cmd->add_option("--parts", oellq_args.parts, "part sizes")->required();
    oellq_cmd->add_option("--q", oellq_args.q, "two-component vertex budget")->required();
    oellq_cmd->add_flag("--json", oellq_args.emit_json, "emit a JSON object");
    oellq_cmd->add_option("--max-n", oellq_args.max_n, "vertex cap")->capture_default_str();
    oellq_cmd->callback([&] { action = [&] { return run_oracle_ellq(oellq_args, out); }; });

    QueryArgs oar_args;
    CLI::App* oar_cmd = oracle_cmd->add_subcommand("ar", "class maximum by edge partitions");
    oar_cmd->add_option("--parts", oar_args.parts, "part sizes")->required();
    oar_cmd->add_option("--q", oar_args.q, "tree edge count")->required();
    oar_cmd->add_option("--witness", oar_args.witness_path, "write the witness coloring here");
    oar_cmd->add_flag("--json", oar_args.emit_json, "emit a JSON object");
    oar_cmd->add_option("--max-edges", oar_args.max_edges, "edge cap")->capture_default_str();
    oar_cmd->callback([&] { action = [&] { return run_oracle_ar(oar_args, out); }; });

    BoundaryArgs oboundary_args;
    int oboundary_max_n = kDefaultOracleMaxN;
    CLI::App* oboundary_cmd =
        oracle_cmd->add_subcommand("min-boundary", "boundary minimum by subsets");
    oboundary_cmd->add_option("--parts", oboundary_args.parts, "part sizes")->required();
    oboundary_cmd->add_option("--r", oboundary_args.r, "selection size")->required();
    oboundary_cmd->add_flag("--json", oboundary_args.emit_json, "emit a JSON object");
    oboundary_cmd->add_option("--max-n", oboundary_max_n, "vertex cap")->capture_default_str();
    oboundary_cmd->callback([&] {
        action = [&] { return run_oracle_min_boundary(oboundary_args, oboundary_max_n, out); };
    });

    ScanArgs scan_args;
    scan_args.options.node_budget = env_budget;
    CLI::App* scan_cmd =
        app.add_subcommand("scan", "cross-validate formulas against the oracles");
    scan_cmd->add_option("--max-n", scan_args.options.max_n, "largest vertex count")
        ->capture_default_str();
    scan_cmd
        ->add_option("--max-edges", scan_args.options.max_edges,
                     "anti-Ramsey oracle edge bound")
        ->capture_default_str();
    scan_cmd->add_option("--oracle-max-n", scan_args.options.oracle_max_n,
                         "oracle vertex cap; reaching it truncates the scan")
        ->capture_default_str();
    scan_cmd->add_option("--node-budget", scan_args.options.node_budget,
                         "assignment search node limit")
        ->capture_default_str();
    scan_cmd->add_flag("--conjecture", scan_args.options.conjecture,
                       "also probe the boundary formula below the proven range");
    scan_cmd->add_flag("--json", scan_args.emit_json, "emit a JSON object");
    scan_cmd->callback([&] { action = [&] { return run_scan(scan_args, out, err); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error:" << kUsage << ": " << e.what() << "\n";
        return kUsage;
    }

    try {
        return action ? action() : kUsage;
    } catch (const domain_error& e) {
        err << "error:" << kDomain << ": " << e.what() << "\n";
        return kDomain;
    } catch (const resource_error& e) {
        err << "error:" << kResource << ": " << e.what() << "\n";
        return kResource;
    } catch (const std::exception& e) {
        err << "error:" << kUsage << ": " << e.what() << "\n";
        return kUsage;
    }
}

} // namespace antiramsey::cli
