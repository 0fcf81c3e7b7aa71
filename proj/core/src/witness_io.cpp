#include "antiramsey/witness_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "antiramsey/multipartite.hpp"

namespace antiramsey {

void write_witness(std::ostream& out, const Coloring& coloring, int q) {
    validate_coloring(coloring);
    out << "parts: " << format_parts(coloring.graph) << "\n";
    out << "q: " << q << "\n";
    out << "t: " << coloring.num_classes << "\n";
    std::vector<LabeledEdge> edges = labeled_edges(coloring.graph);
    for (size_t idx = 0; idx < edges.size(); ++idx) {
        const LabeledEdge& e = edges[idx];
        out << e.u.part << ' ' << e.u.offset << ' ' << e.v.part << ' ' << e.v.offset << ' '
            << coloring.edge_color[idx] << "\n";
    }
}

void write_witness_file(const std::string& path, const Coloring& coloring, int q) {
    std::ofstream out(path);
    if (!out)
        throw domain_error("cannot open witness file for writing: " + path);
    write_witness(out, coloring, q);
    if (!out)
        throw domain_error("failed to write witness file: " + path);
}

namespace {

std::string expect_header(std::istream& in, const std::string& key) {
    std::string line;
    if (!std::getline(in, line))
        throw domain_error("witness file ends before '" + key + "' header");
    if (line.rfind(key + ": ", 0) != 0)
        throw domain_error("witness file missing '" + key + "' header");
    return line.substr(key.size() + 2);
}

int parse_int(const std::string& text, const std::string& what) {
    try {
        size_t used = 0;
        int value = std::stoi(text, &used);
        if (used != text.size())
            throw domain_error("bad " + what + " in witness file: '" + text + "'");
        return value;
    } catch (const std::invalid_argument&) {
        throw domain_error("bad " + what + " in witness file: '" + text + "'");
    } catch (const std::out_of_range&) {
        throw domain_error("bad " + what + " in witness file: '" + text + "'");
    }
}

} // namespace

WitnessFile read_witness(std::istream& in) {
    WitnessFile file;
    file.coloring.graph = parse_parts(expect_header(in, "parts"));
    file.q = parse_int(expect_header(in, "q"), "q");
    file.coloring.num_classes = parse_int(expect_header(in, "t"), "t");

    const MultipartiteGraph& g = file.coloring.graph;
    std::vector<LabeledEdge> edges = labeled_edges(g);
    std::int64_t expected = static_cast<std::int64_t>(edges.size());
    file.coloring.edge_color.assign(edges.size(), 0);
    std::vector<bool> seen(edges.size(), false);

    std::string line;
    std::int64_t rows = 0;
    while (std::getline(in, line)) {
        if (line.empty())
            throw domain_error("empty line in witness file");
        std::istringstream fields(line);
        int p1, o1, p2, o2, color;
        if (!(fields >> p1 >> o1 >> p2 >> o2 >> color))
            throw domain_error("bad edge line in witness file: '" + line + "'");
        std::string trailing;
        if (fields >> trailing)
            throw domain_error("trailing data on edge line: '" + line + "'");
        LabeledEdge e{Vertex{p1, o1}, Vertex{p2, o2}};
        if (!(e.u < e.v))
            throw domain_error("edge endpoints out of canonical order: '" + line + "'");
        auto at = std::lower_bound(edges.begin(), edges.end(), e);
        if (at == edges.end() || !(*at == e))
            throw domain_error("unknown edge in witness file: '" + line + "'");
        size_t idx = static_cast<size_t>(at - edges.begin());
        if (seen[idx])
            throw domain_error("duplicate edge in witness file: '" + line + "'");
        seen[idx] = true;
        file.coloring.edge_color[idx] = color;
        ++rows;
    }
    if (rows != expected)
        throw domain_error("witness file covers " + std::to_string(rows) + " edges, expected " +
                           std::to_string(expected));
    validate_coloring(file.coloring);
    if (file.q < 1 || file.q > g.n - 1)
        throw domain_error("witness q out of range");
    return file;
}

WitnessFile read_witness_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw domain_error("cannot open witness file: " + path);
    return read_witness(in);
}

} // namespace antiramsey
