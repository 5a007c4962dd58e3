#include "chromascope/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace chromascope {

namespace {

bool blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

template <class... Ts>
bool parse_exact(const std::string& line, Ts&... out) {
    std::istringstream is(line);
    (is >> ... >> out);
    if (!is) return false;
    std::string rest;
    return !(is >> rest);
}

Graph build(int n, const std::vector<VertexPair>& pairs, const std::vector<std::size_t>& lines) {
    try {
        return Graph::from_edge_list(n, pairs);
    } catch (const GraphError& e) {
        // Locate the offending line by re-validating incrementally.
        std::vector<VertexPair> prefix;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            prefix.push_back(pairs[i]);
            try {
                (void)Graph::from_edge_list(n, prefix);
            } catch (const GraphError& inner) {
                throw ParseError(lines[i], inner.what());
            }
        }
        throw ParseError(0, e.what());
    }
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    long long n = -1;
    long long m = -1;
    std::vector<VertexPair> pairs;
    std::vector<std::size_t> lines;
    while (std::getline(in, line)) {
        ++lineno;
        line.erase(std::min(line.find('#'), line.size()));
        if (blank(line)) continue;
        if (n < 0) {
            if (!parse_exact(line, n, m) || n < 0 || m < 0) throw ParseError(lineno, "expected header \"n m\"");
            continue;
        }
        long long u = 0;
        long long v = 0;
        if (!parse_exact(line, u, v)) throw ParseError(lineno, "expected \"u v\"");
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(lineno, "vertex out of range");
        pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
        lines.push_back(lineno);
    }
    if (n < 0) throw ParseError(lineno, "missing header");
    if (static_cast<long long>(pairs.size()) != m)
        throw ParseError(lineno, "header declares " + std::to_string(m) + " edges, found " +
                                     std::to_string(pairs.size()));
    return build(static_cast<int>(n), pairs, lines);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_dimacs(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    long long n = -1;
    long long m = -1;
    std::vector<VertexPair> pairs;
    std::vector<std::size_t> lines;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line)) continue;
        std::istringstream is(line);
        std::string tag;
        is >> tag;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (n >= 0) throw ParseError(lineno, "repeated p-line");
            if (!(is >> kind >> n >> m) || n < 0 || m < 0) throw ParseError(lineno, "malformed p-line");
        } else if (tag == "e") {
            if (n < 0) throw ParseError(lineno, "e-line before p-line");
            long long u = 0;
            long long v = 0;
            if (!(is >> u >> v)) throw ParseError(lineno, "malformed e-line");
            if (u < 1 || v < 1 || u > n || v > n) throw ParseError(lineno, "vertex out of range");
            pairs.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            lines.push_back(lineno);
        } else {
            throw ParseError(lineno, "unknown line tag \"" + tag + "\"");
        }
    }
    if (n < 0) throw ParseError(lineno, "missing p-line");
    // Many published .col files list each edge twice; fold reversed duplicates.
    std::vector<VertexPair> unique;
    std::vector<std::size_t> unique_lines;
    std::vector<std::pair<VertexPair, std::size_t>> keyed;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [a, b] = pairs[i];
        keyed.push_back({{std::min(a, b), std::max(a, b)}, i});
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](auto& x, auto& y) { return x.first < y.first; });
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i > 0 && keyed[i].first == keyed[i - 1].first) continue;
        unique.push_back(pairs[keyed[i].second]);
        unique_lines.push_back(lines[keyed[i].second]);
    }
    return build(static_cast<int>(n), unique, unique_lines);
}

Graph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        const char c = line[pos];
        in.clear();
        in.seekg(0);
        if (c == 'c' || c == 'p') return read_dimacs(in);
        return read_edge_list(in);
    }
    throw ParseError(0, "empty graph file " + path.string());
}

void write_graph_file(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_edge_list(out, g);
}

}  // namespace chromascope
