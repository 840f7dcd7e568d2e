#include "cyclex/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cyclex::io {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::vector<std::string> names;
    bool have_header = false;
    std::vector<std::pair<std::string, std::string>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize(strip_comment(line));
        if (tokens.empty()) continue;
        if (!have_header) {
            if (tokens.front() != "vertices:")
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected 'vertices: <name...>' header");
            names.assign(tokens.begin() + 1, tokens.end());
            have_header = true;
            continue;
        }
        if (tokens.size() != 2)
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected exactly two vertex names");
        edges.emplace_back(tokens[0], tokens[1]);
    }
    if (!have_header) throw ParseError("missing 'vertices:' header line");
    try {
        return Graph::from_named_edges(std::move(names), edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    std::vector<std::string> names;
    names.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) names.push_back(g.name_of(v));
    std::sort(names.begin(), names.end());
    out << "vertices:";
    for (const auto& name : names) out << ' ' << name;
    out << '\n';
    std::vector<std::pair<std::string, std::string>> edges;
    edges.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) {
        std::string a = g.name_of(u), b = g.name_of(v);
        if (b < a) std::swap(a, b);
        edges.emplace_back(std::move(a), std::move(b));
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b] : edges) out << a << ' ' << b << '\n';
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

void write_dot(std::ostream& out, const Graph& g,
               const std::vector<std::pair<std::string, std::string>>& bold_edges) {
    auto norm = [](std::string a, std::string b) {
        return b < a ? std::make_pair(std::move(b), std::move(a))
                     : std::make_pair(std::move(a), std::move(b));
    };
    std::vector<std::pair<std::string, std::string>> bold;
    for (const auto& [a, b] : bold_edges) bold.push_back(norm(a, b));
    std::sort(bold.begin(), bold.end());
    out << "graph g {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  \"" << g.name_of(v) << "\";\n";
    for (auto [u, v] : g.edges()) {
        auto e = norm(g.name_of(u), g.name_of(v));
        out << "  \"" << e.first << "\" -- \"" << e.second << "\"";
        if (std::binary_search(bold.begin(), bold.end(), e)) out << " [style=bold]";
        out << ";\n";
    }
    out << "}\n";
}

std::string to_dot(const Graph& g,
                   const std::vector<std::pair<std::string, std::string>>& bold_edges) {
    std::ostringstream out;
    write_dot(out, g, bold_edges);
    return out.str();
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace cyclex::io
