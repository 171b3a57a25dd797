#include "tg/io.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <limits>
#include <set>
#include <sstream>

namespace tg {

namespace {

// Next integer token, skipping whitespace and '#' line comments.
long long next_int(std::istream& in, const char* what) {
    for (;;) {
        const int c = in.peek();
        if (c == std::char_traits<char>::eof())
            throw std::runtime_error(std::string("edge list ended early: expected ") + what);
        if (c == '#') {
            in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
            continue;
        }
        if (std::isspace(c)) {
            in.get();
            continue;
        }
        break;
    }
    long long value = 0;
    if (!(in >> value)) throw std::runtime_error(std::string("edge list: could not read ") + what);
    return value;
}

}  // namespace

SimpleGraph read_edge_list(std::istream& in) {
    const long long n = next_int(in, "the order n");
    const long long m = next_int(in, "the size m");
    if (n < 0 || n > 1'000'000) throw std::runtime_error("edge list: order out of range");
    if (m < 0) throw std::runtime_error("edge list: negative size");
    SimpleGraph g(static_cast<int>(n));
    std::set<std::pair<long long, long long>> seen;
    for (long long i = 0; i < m; ++i) {
        const long long u = next_int(in, "an edge endpoint");
        const long long v = next_int(in, "an edge endpoint");
        if (!(0 <= u && u < v && v < n))
            throw std::runtime_error("edge list: edge " + std::to_string(u) + " " + std::to_string(v) +
                                     " violates 0 <= u < v < n");
        if (!seen.insert({u, v}).second)
            throw std::runtime_error("edge list: duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

SimpleGraph read_edge_list_file(const std::string& path) {
    if (path == "-") return read_edge_list(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const SimpleGraph& g, const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << '\n';
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_dot(std::ostream& out, const SimpleGraph& g, const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "// " << c << '\n';
    out << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

}  // namespace tg
