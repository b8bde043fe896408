#include "threecolor/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "threecolor/analysis.hpp"
#include "threecolor/dimacs.hpp"
#include "threecolor/generate.hpp"
#include "threecolor/solver.hpp"

namespace threecolor {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

nlohmann::ordered_json stats_document(const SolveResult& res) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    doc["status"] = res.colorable ? "colorable" : "not-colorable";
    doc["stats.branch_nodes"] = res.stats.branch_nodes;
    doc["stats.csp_calls"] = res.stats.csp_calls;
    doc["stats.enumerated_assignments"] = res.stats.enumerated_assignments;
    doc["stats.wall_ms"] = res.stats.wall_ms;
    for (const auto& [key, value] : res.stats.partition_counts)
        doc["partition." + key] = value;
    return doc;
}

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stod(tok));
    }
    return out;
}

// "<coef>*<base>^<exp>[+...],<vertices>", e.g. "3*1.36443^4,8".
void parse_rate_spec(const std::string& spec, double& base,
                     std::vector<std::pair<double, double>>& terms, double& vertices) {
    auto comma = spec.rfind(',');
    if (comma == std::string::npos)
        throw std::runtime_error("rate spec needs ',<vertices>' at the end");
    vertices = std::stod(spec.substr(comma + 1));
    std::stringstream ss(spec.substr(0, comma));
    std::string term;
    base = 0.0;
    while (std::getline(ss, term, '+')) {
        double coef = 1.0, b = 1.0, e = 1.0;
        auto star = term.find('*');
        std::string rest = term;
        if (star != std::string::npos) {
            coef = std::stod(term.substr(0, star));
            rest = term.substr(star + 1);
        }
        auto caret = rest.find('^');
        if (caret != std::string::npos) {
            b = std::stod(rest.substr(0, caret));
            e = std::stod(rest.substr(caret + 1));
        } else {
            b = std::stod(rest);
        }
        if (base == 0.0) base = b;
        if (std::abs(base - b) > 1e-12)
            throw std::runtime_error("rate terms must share one base");
        terms.emplace_back(coef, e);
    }
    if (terms.empty()) throw std::runtime_error("rate spec has no terms");
}

int cmd_solve(const std::string& file, bool exhaustive, int jobs,
              const std::string& stats_path, std::ostream& out, std::ostream& err) {
    DimacsGraph dg = parse_dimacs(read_file(file));
    if (dg.edge_count_mismatch)
        err << "warning: declared edge count " << dg.declared_edges << " differs from "
            << dg.graph.edge_count() << " after deduplication\n";
    SolveOptions opts;
    opts.exhaustive = exhaustive;
    opts.jobs = jobs;
    SolveResult res = solve_3coloring(dg.graph, opts);
    if (!stats_path.empty()) write_file(stats_path, stats_document(res).dump(2) + "\n");
    if (!res.colorable) {
        err << "not 3-colorable\n";
        return 1;
    }
    out << write_coloring(dg.graph, *res.coloring);
    return 0;
}

int cmd_verify(const std::string& graph_file, const std::string& coloring_file,
               std::ostream& out, std::ostream& err) {
    DimacsGraph dg = parse_dimacs(read_file(graph_file));
    Coloring coloring = parse_coloring(read_file(coloring_file), dg.graph);
    auto witness = verify_coloring(dg.graph, coloring);
    if (witness) {
        err << "edge " << witness->first + 1 << " " << witness->second + 1
            << " has both endpoints colored " << int(coloring.at(witness->first)) << "\n";
        return 1;
    }
    out << "ok\n";
    return 0;
}

int cmd_gen(const std::string& kind, std::size_t n, std::uint64_t seed, double density,
            std::size_t copies, const std::string& name, const std::string& out_path,
            std::ostream& out) {
    Graph g;
    if (kind == "random-min-degree-3")
        g = random_min_degree_3(n, density, seed);
    else if (kind == "worst-case-family")
        g = worst_case_family(copies);
    else if (kind == "figure-fixture")
        g = figure_fixture(name);
    else
        throw std::runtime_error("unknown generator kind '" + kind + "'");
    std::string text = write_dimacs(g);
    if (out_path.empty())
        out << text;
    else
        write_file(out_path, text);
    return 0;
}

int cmd_analyze(bool lp, const std::string& work_factor_spec, const std::string& rate_spec,
                const std::string& json_path, std::ostream& out) {
    bool did_something = false;
    nlohmann::ordered_json doc;
    if (!work_factor_spec.empty()) {
        BranchVector bv{parse_number_list(work_factor_spec)};
        double wf = work_factor(bv);
        out << std::setprecision(10) << wf << "\n";
        doc["work_factor"] = wf;
        did_something = true;
    }
    if (!rate_spec.empty()) {
        double base = 0.0, vertices = 0.0;
        std::vector<std::pair<double, double>> terms;
        parse_rate_spec(rate_spec, base, terms, vertices);
        double r = rate(base, terms, vertices);
        out << std::setprecision(10) << r << "\n";
        doc["rate"] = r;
        did_something = true;
    }
    if (lp) {
        AnalysisReport rep = solve_lp(build_lp());
        out << std::left;
        for (const auto& [name, value] : rep.values) {
            out << std::setw(8) << name << std::fixed << std::setprecision(7) << value
                << "\n";
            doc["lp." + name] = value;
        }
        out.unsetf(std::ios::fixed);
        out << std::setprecision(7) << "objective " << rep.objective << "\n";
        out << "base " << std::fixed << std::setprecision(4) << rep.base << "\n";
        out.unsetf(std::ios::fixed);
        doc["lp.objective"] = rep.objective;
        doc["lp.base"] = rep.base;
        doc["lp.max_violation"] = rep.max_violation;
        doc["lp.exact_verified"] = rep.exact_verified;
        did_something = true;
    }
    if (!did_something) throw std::runtime_error("nothing to analyze; pass --lp, --work-factor or --rate");
    if (!json_path.empty()) write_file(json_path, doc.dump(2) + "\n");
    return 0;
}

int cmd_bench(const std::string& dir, std::size_t oracle_cap, std::ostream& out,
              std::ostream& err) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".col") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        err << "no .col files in " << dir << "\n";
        return 2;
    }
    std::size_t mismatches = 0, checked = 0;
    for (const auto& path : files) {
        DimacsGraph dg = parse_dimacs(read_file(path.string()));
        SolveResult res = solve_3coloring(dg.graph);
        std::string agreement = "oracle-skipped";
        if (dg.graph.vertex_count() <= oracle_cap) {
            ++checked;
            bool oracle = brute_force(dg.graph, oracle_cap);
            agreement = (oracle == res.colorable) ? "agree" : "MISMATCH";
            if (oracle != res.colorable) ++mismatches;
        }
        out << path.filename().string() << ' '
            << (res.colorable ? "colorable" : "not-colorable") << ' ' << agreement << ' '
            << std::fixed << std::setprecision(1) << res.stats.wall_ms << "ms\n";
        out.unsetf(std::ios::fixed);
    }
    out << files.size() << " instances, " << checked << " oracle-checked, " << mismatches
        << " mismatches\n";
    return mismatches == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact 3-coloring solver and runtime-analysis toolkit"};
    app.require_subcommand(1);

    auto* solve_cmd = app.add_subcommand("solve", "Decide 3-colorability of a DIMACS graph");
    std::string solve_file, stats_path;
    bool exhaustive = false;
    int jobs = 1;
    solve_cmd->add_option("file", solve_file, "graph in DIMACS .col format")->required();
    solve_cmd->add_flag("--exhaustive", exhaustive,
                        "enumerate the whole assignment space instead of stopping early");
    solve_cmd->add_option("--jobs", jobs, "worker threads for the assignment space");
    solve_cmd->add_option("--stats", stats_path, "write a JSON stats document here");

    auto* verify_cmd = app.add_subcommand("verify", "Check a coloring file against a graph");
    std::string verify_graph, verify_coloring_file;
    verify_cmd->add_option("file", verify_graph, "graph in DIMACS .col format")->required();
    verify_cmd->add_option("coloring", verify_coloring_file, "one '<label> <color>' per line")
        ->required();

    auto* gen_cmd = app.add_subcommand("gen", "Generate benchmark graphs");
    std::string gen_kind, gen_name, gen_out;
    std::size_t gen_n = 30, gen_copies = 1;
    std::uint64_t gen_seed = 0;
    double gen_density = 0.15;
    gen_cmd->add_option("kind", gen_kind,
                        "random-min-degree-3 | worst-case-family | figure-fixture")
        ->required();
    gen_cmd->add_option("--n", gen_n, "vertex count (random-min-degree-3)");
    gen_cmd->add_option("--seed", gen_seed, "generator seed");
    gen_cmd->add_option("--density", gen_density, "edge probability (random-min-degree-3)");
    gen_cmd->add_option("--copies", gen_copies, "tree copies (worst-case-family)");
    gen_cmd->add_option("--name", gen_name, "fixture name (figure-fixture)");
    gen_cmd->add_option("-o,--output", gen_out, "output file (default stdout)");

    auto* analyze_cmd = app.add_subcommand("analyze", "Work factors, rates and the runtime LP");
    bool lp = false;
    std::string wf_spec, rate_spec, analyze_json;
    analyze_cmd->add_flag("--lp", lp, "solve the worst-case linear program");
    analyze_cmd->add_option("--work-factor", wf_spec, "comma-separated reductions, e.g. 2,6,6");
    analyze_cmd->add_option("--rate", rate_spec,
                            "per-vertex rate, e.g. '3*1.36443^4,8' (terms,vertices)");
    analyze_cmd->add_option("--json", analyze_json, "write a JSON report here");

    auto* bench_cmd = app.add_subcommand("bench", "Solve every .col file in a directory");
    std::string bench_dir;
    std::size_t oracle_cap = 20;
    bench_cmd->add_option("dir", bench_dir, "corpus directory")->required();
    bench_cmd->add_option("--oracle-cap", oracle_cap,
                          "exhaustive-check graphs up to this many vertices");

    std::vector<const char*> argv;
    argv.push_back("threecolor");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        int code = app.exit(e, msg, msg);
        (code == 0 ? out : err) << msg.str();
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(solve_cmd))
            return cmd_solve(solve_file, exhaustive, jobs, stats_path, out, err);
        if (app.got_subcommand(verify_cmd))
            return cmd_verify(verify_graph, verify_coloring_file, out, err);
        if (app.got_subcommand(gen_cmd))
            return cmd_gen(gen_kind, gen_n, gen_seed, gen_density, gen_copies, gen_name,
                           gen_out, out);
        if (app.got_subcommand(analyze_cmd))
            return cmd_analyze(lp, wf_spec, rate_spec, analyze_json, out);
        if (app.got_subcommand(bench_cmd)) return cmd_bench(bench_dir, oracle_cap, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace threecolor
