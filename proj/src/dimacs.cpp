#include "threecolor/dimacs.hpp"

#include <sstream>

namespace threecolor {

DimacsGraph parse_dimacs(const std::string& text) {
    DimacsGraph out;
    bool have_header = false;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) throw DimacsError(lineno, "duplicate problem line");
            std::string kind;
            long long n = -1, m = -1;
            if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
                throw DimacsError(lineno, "malformed problem line, expected 'p edge <n> <m>'");
            out.declared_vertices = static_cast<std::size_t>(n);
            out.declared_edges = static_cast<std::size_t>(m);
            out.graph = Graph::with_vertices(out.declared_vertices);
            have_header = true;
            continue;
        }
        if (tag == "e") {
            if (!have_header) throw DimacsError(lineno, "edge before problem line");
            long long u = 0, v = 0;
            if (!(ls >> u >> v)) throw DimacsError(lineno, "malformed edge line");
            if (u < 1 || v < 1 || u > static_cast<long long>(out.declared_vertices) ||
                v > static_cast<long long>(out.declared_vertices))
                throw DimacsError(lineno, "vertex label out of range");
            if (u == v) throw DimacsError(lineno, "self loop");
            out.graph.add_edge(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
            continue;
        }
        throw DimacsError(lineno, "unknown line type '" + tag + "'");
    }
    if (!have_header) throw DimacsError(lineno == 0 ? 1 : lineno, "missing problem line");
    out.edge_count_mismatch = out.graph.edge_count() != out.declared_edges;
    return out;
}

std::string write_dimacs(const Graph& g) {
    std::ostringstream out;
    auto verts = g.vertices();
    std::map<VertexId, std::size_t> label;
    for (std::size_t i = 0; i < verts.size(); ++i) label[verts[i]] = i + 1;
    out << "p edge " << verts.size() << ' ' << g.edge_count() << '\n';
    for (VertexId v : verts)
        for (VertexId u : g.neighbors(v))
            if (u > v) out << "e " << label[v] << ' ' << label[u] << '\n';
    return out.str();
}

std::string write_coloring(const Graph& g, const Coloring& coloring) {
    std::ostringstream out;
    auto verts = g.vertices();
    std::map<VertexId, std::size_t> label;
    for (std::size_t i = 0; i < verts.size(); ++i) label[verts[i]] = i + 1;
    for (VertexId v : verts) out << label[v] << ' ' << int(coloring.at(v)) << '\n';
    return out.str();
}

Coloring parse_coloring(const std::string& text, const Graph& g) {
    auto verts = g.vertices();
    Coloring out;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        long long label = 0, color = -1;
        if (!(ls >> label)) continue;
        if (!(ls >> color) || label < 1 || label > static_cast<long long>(verts.size()) ||
            color < 0 || color >= kNumColors)
            throw DimacsError(lineno, "malformed coloring line");
        out[verts[static_cast<std::size_t>(label - 1)]] = static_cast<Color>(color);
    }
    return out;
}

}  // namespace threecolor
