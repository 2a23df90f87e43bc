#include "isokit/io.hpp"

#include <fstream>
#include <sstream>

namespace isokit {

namespace {

[[noreturn]] void fail(const std::string& source, int line, const std::string& msg) {
    throw ValidationError(source + ":" + std::to_string(line) + ": " + msg);
}

bool data_line(const std::string& line) {
    for (char c : line) {
        if (c == '#') return false;
        if (c != ' ' && c != '\t' && c != '\r') return true;
    }
    return false;
}

void parse_two_ints(const std::string& source, int line, const std::string& text, long& a,
                    long& b, const char* what) {
    std::istringstream ss(text);
    std::string extra;
    if (!(ss >> a >> b) || (ss >> extra))
        fail(source, line, std::string("expected two integers (") + what + "), got \"" + text +
                               "\"");
}

}  // namespace

Graph read_edge_list(std::istream& in, const std::string& source_name) {
    std::string line;
    int lineno = 0;
    long n = -1, m = -1;
    std::vector<Edge> edges;
    long seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!data_line(line)) continue;
        if (n < 0) {
            parse_two_ints(source_name, lineno, line, n, m, "n m");
            if (n < 0 || m < 0) fail(source_name, lineno, "n and m must be non-negative");
            if (n > Graph::max_vertices)
                fail(source_name, lineno,
                     "vertex count exceeds limit " + std::to_string(Graph::max_vertices));
            continue;
        }
        if (seen == m) fail(source_name, lineno, "more edge lines than declared by m");
        long u, v;
        parse_two_ints(source_name, lineno, line, u, v, "u v");
        if (!(0 <= u && u < v && v < n))
            fail(source_name, lineno,
                 "edge endpoints must satisfy 0 <= u < v < n, got " + std::to_string(u) + " " +
                     std::to_string(v));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        ++seen;
    }
    if (n < 0) throw ValidationError(source_name + ": empty input, expected \"n m\" header");
    if (seen != m)
        throw ValidationError(source_name + ": declared " + std::to_string(m) +
                              " edges but found " + std::to_string(seen));
    Graph g = make_graph(static_cast<int>(n), edges);
    if (g.edge_count() != m)
        throw ValidationError(source_name + ": duplicate edges in input");
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError(path + ": cannot open file");
    return read_edge_list(in, path);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream ss;
    write_edge_list(ss, g);
    return ss.str();
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw ValidationError(path + ": cannot open file for writing");
    write_edge_list(out, g);
    if (!out) throw ValidationError(path + ": write failed");
}

}  // namespace isokit
