#include "threecolor/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "threecolor/chromatic.hpp"
#include "threecolor/csp.hpp"

namespace threecolor {

std::map<std::string, std::uint64_t> partition_counts(const Partition& p) {
    std::map<std::string, std::uint64_t> out;
    out["R"] = p.roots.size();
    out["I"] = p.internal.size();
    out["L"] = p.leaves.size();
    out["N1"] = p.n1.size();
    out["N2"] = p.n2.size();
    for (int i = 1; i <= 8; ++i)
        out["N3_" + std::to_string(i)] = p.n3[static_cast<std::size_t>(i)].size();
    out["N_other"] = p.n_other.size();
    for (int j = 0; j <= 7; ++j)
        out["U" + std::to_string(j)] = p.u_by_n1[static_cast<std::size_t>(j)].size();
    out["Uprime"] = p.u_prime.size();
    return out;
}

namespace {

struct StatsAcc {
    std::atomic<std::uint64_t> branch_nodes{0};
    std::atomic<std::uint64_t> csp_calls{0};
    std::atomic<std::uint64_t> enumerated{0};
    std::uint64_t last_stage_space = 0;
    std::map<std::string, std::uint64_t> partition_counts;
};

// One enumerated choice in the assignment space.
struct Dimension {
    enum class Kind { BushyRoot, BushyInternal, ChromRoot, ChromTwoChild };
    Kind kind = Kind::BushyRoot;
    VertexId vertex = 0;  // root or internal vertex
    VertexId parent = 0;  // BushyInternal: already-colored tree parent
    VertexId child_a = 0, child_b = 0, root = 0;  // ChromTwoChild

    std::size_t size() const {
        switch (kind) {
            case Kind::BushyInternal: return 2;
            case Kind::ChromTwoChild: return 9;
            default: return 3;
        }
    }
};

Color nth_color_excluding(Color excluded, std::size_t k) {
    Color c = 0;
    for (;; ++c) {
        if (c == excluded) continue;
        if (k == 0) return c;
        --k;
    }
}

// Decode one point of the assignment space into fixed colors.
Coloring decode(const std::vector<Dimension>& dims, std::uint64_t index) {
    Coloring fixed;
    for (const auto& d : dims) {
        std::size_t k = static_cast<std::size_t>(index % d.size());
        index /= d.size();
        switch (d.kind) {
            case Dimension::Kind::BushyRoot:
            case Dimension::Kind::ChromRoot:
                fixed[d.vertex] = static_cast<Color>(k);
                break;
            case Dimension::Kind::BushyInternal:
                fixed[d.vertex] = nth_color_excluding(fixed.at(d.parent), k);
                break;
            case Dimension::Kind::ChromTwoChild: {
                Color ca = static_cast<Color>(k / 3);
                Color cb = static_cast<Color>(k % 3);
                fixed[d.child_a] = ca;
                fixed[d.child_b] = cb;
                if (ca != cb) fixed[d.root] = static_cast<Color>(3 - ca - cb);
                break;
            }
        }
    }
    return fixed;
}

bool fixed_conflicts(const Graph& g, const Coloring& fixed) {
    for (const auto& [v, c] : fixed)
        for (VertexId u : g.neighbors(v)) {
            auto it = fixed.find(u);
            if (it != fixed.end() && it->second == c && u > v) return true;
        }
    return false;
}

// Enumeration dimensions: bushy roots, then bushy internals in tree order
// (each after its parent), then one dimension per chromatic tree schedule.
std::vector<Dimension> build_dimensions(const BushyForest& forest,
                                        const std::vector<ChromaticTree>& trees) {
    std::vector<Dimension> dims;
    for (const auto& t : forest.trees)
        dims.push_back({Dimension::Kind::BushyRoot, t.root});
    for (const auto& t : forest.trees) {
        std::set<VertexId> done{t.root};
        while (done.size() < t.internal.size()) {
            bool progressed = false;
            for (VertexId v : t.internal) {
                if (done.count(v)) continue;
                VertexId par = t.parent.at(v);
                if (!done.count(par)) continue;
                Dimension d;
                d.kind = Dimension::Kind::BushyInternal;
                d.vertex = v;
                d.parent = par;
                dims.push_back(d);
                done.insert(v);
                progressed = true;
                break;
            }
            if (!progressed) throw std::logic_error("internal vertices not connected to root");
        }
    }
    for (const auto& t : trees) {
        EnumerationSchedule s = schedule(t);
        Dimension d;
        if (s.kind == EnumerationSchedule::Kind::RootBranch) {
            d.kind = Dimension::Kind::ChromRoot;
            d.vertex = t.root;
        } else {
            d.kind = Dimension::Kind::ChromTwoChild;
            d.child_a = t.children[s.branch_children[0]];
            d.child_b = t.children[s.branch_children[1]];
            d.root = t.root;
        }
        dims.push_back(d);
    }
    return dims;
}

struct StageResult {
    std::uint64_t index = 0;
    Coloring coloring;  // over the original component, via replay
};

// Try one fixed assignment; on success return the replayed coloring.
std::optional<Coloring> try_leaf(const Instance& inst, const Graph& work,
                                 const std::vector<TrivialConfig>& configs,
                                 const Coloring& fixed, StatsAcc& stats) {
    if (fixed_conflicts(work, fixed)) return std::nullopt;
    stats.csp_calls.fetch_add(1, std::memory_order_relaxed);
    auto sol = solve(from_partial_coloring(work, fixed));
    if (!sol) return std::nullopt;

    Coloring residual = fixed;
    for (const auto& [v, c] : sol->assignment) residual[v] = c;
    for (const auto& cfg : configs) {
        std::vector<Color> key;
        for (VertexId b : cfg.boundary) key.push_back(residual.at(b));
        auto it = cfg.rule.find(key);
        if (it == cfg.rule.end())
            throw std::logic_error("no extension for a boundary coloring");
        for (const auto& [v, c] : it->second) residual[v] = c;
    }
    if (verify_coloring(inst.graph, residual))
        throw std::logic_error("residual coloring conflicts along an edge");
    return replay(inst.trace, residual);
}

std::optional<Coloring> enumerate_stage(const Instance& inst, const Graph& work,
                                        const std::vector<TrivialConfig>& configs,
                                        const std::vector<Dimension>& dims,
                                        const SolveOptions& options, StatsAcc& stats) {
    unsigned __int128 wide_total = 1;
    for (const auto& d : dims) wide_total *= d.size();
    if (wide_total > (static_cast<unsigned __int128>(1) << 62))
        throw std::runtime_error("assignment space too large to enumerate");
    const std::uint64_t total = static_cast<std::uint64_t>(wide_total);
    stats.last_stage_space = total;

    const int jobs = std::max(1, options.jobs);
    std::atomic<bool> found{false};
    std::mutex result_mu;
    std::optional<StageResult> best;

    auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            if (!options.exhaustive && found.load(std::memory_order_relaxed)) return;
            stats.enumerated.fetch_add(1, std::memory_order_relaxed);
            auto col = try_leaf(inst, work, configs, decode(dims, idx), stats);
            if (!col) continue;
            found.store(true, std::memory_order_relaxed);
            std::lock_guard<std::mutex> lock(result_mu);
            if (!best || idx < best->index) best = StageResult{idx, std::move(*col)};
            if (!options.exhaustive) return;
        }
    };

    if (jobs == 1 || total < 2) {
        scan(0, total);
    } else {
        const std::uint64_t workers = std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), total);
        std::vector<std::thread> pool;
        for (std::uint64_t w = 0; w < workers; ++w) {
            std::uint64_t lo = total * w / workers;
            std::uint64_t hi = total * (w + 1) / workers;
            pool.emplace_back(scan, lo, hi);
        }
        for (auto& t : pool) t.join();
    }
    if (!best) return std::nullopt;
    return std::move(best->coloring);
}

std::optional<Coloring> solve_component(Instance inst, const SolveOptions& options,
                                        StatsAcc& stats) {
    stats.branch_nodes.fetch_add(1, std::memory_order_relaxed);
    eliminate_low_degree(inst);
    if (inst.graph.empty()) return replay(inst.trace, {});

    if (auto target = find_branch_target(inst)) {
        for (Instance& child : branch_on(inst, *target))
            if (auto col = solve_component(std::move(child), options, stats)) return col;
        return std::nullopt;
    }

    const Graph& g = inst.graph;
    // Every degree-three component is now an acyclic piece of at most
    // eight vertices; the forest lemmas assume exactly this.
    {
        auto comps = components_where(g, [&](VertexId v) { return g.degree(v) == 3; });
        for (const auto& comp : comps) {
            std::set<VertexId> cs(comp.begin(), comp.end());
            std::size_t edges = 0;
            for (VertexId v : comp)
                for (VertexId u : g.neighbors(v)) edges += cs.count(u);
            edges /= 2;
            if (edges >= comp.size() || comp.size() > 8)
                throw std::logic_error("degree-three structure survived reduction");
        }
    }

    BushyForest forest = to_low_magnitude(g, build_maximal_bushy_forest(g));
    Partition part = partition(g, forest);
    stats.partition_counts = partition_counts(part);

    std::set<VertexId> members = forest.all_vertices();
    std::vector<VertexId> outside;
    for (VertexId v : g.vertices())
        if (!members.count(v)) outside.push_back(v);
    Graph gs = induced_subgraph(g, outside);

    std::set<VertexId> admissible = part.u_all();
    for (VertexId v : part.n3_all())
        for (VertexId u : g.neighbors(v))
            if (part.u_prime.count(u)) {
                admissible.insert(v);
                break;
            }

    ChromaticForest cf = assign_grandchildren(g, gs, build_k13_forest(gs), admissible);
    stats.partition_counts["chromatic_trees"] = cf.trees.size();
    stats.partition_counts["chromatic_configs"] = cf.trivially_colored.size();

    Graph work = g;
    for (const auto& cfg : cf.trivially_colored)
        for (VertexId m : cfg.members) work.remove_vertex(m);

    auto dims = build_dimensions(forest, cf.trees);
    return enumerate_stage(inst, work, cf.trivially_colored, dims, options, stats);
}

}  // namespace

SolveResult solve_3coloring(const Graph& g, const SolveOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    StatsAcc acc;
    SolveResult res;
    res.colorable = true;
    Coloring all;

    auto comps = components_where(g, [](VertexId) { return true; });
    for (const auto& comp : comps) {
        Instance inst{induced_subgraph(g, comp), {}, {}};
        auto col = solve_component(std::move(inst), options, acc);
        if (!col) {
            res.colorable = false;
            all.clear();
            break;
        }
        for (const auto& [v, c] : *col) all[v] = c;
    }

    if (res.colorable) {
        if (verify_coloring(g, all))
            throw std::logic_error("solver produced an improper coloring");
        res.coloring = std::move(all);
    }
    res.stats.branch_nodes = acc.branch_nodes.load();
    res.stats.csp_calls = acc.csp_calls.load();
    res.stats.enumerated_assignments = acc.enumerated.load();
    res.stats.partition_counts = acc.partition_counts;
    res.stats.partition_counts["last_stage_space"] = acc.last_stage_space;
    res.stats.wall_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return res;
}

}  // namespace threecolor
