#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "rainbow/tree.hpp"

namespace rainbow {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Tree text format: line 1 is the order n, followed by n-1 lines `u v`
/// with 0 <= u < v < n. Tokens are whitespace-separated; no comments.
inline Tree read_tree(std::istream &in) {
    int n = 0;
    if (!(in >> n)) throw ParseError("tree file: missing order");
    if (n < 1) throw ParseError("tree file: order must be positive");
    std::vector<Edge> edges;
    edges.reserve(n > 0 ? n - 1 : 0);
    for (int i = 0; i < n - 1; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw ParseError("tree file: expected " +
                                              std::to_string(n - 1) + " edges");
        if (!(0 <= u && u < v && v < n))
            throw ParseError("tree file: edge must satisfy 0 <= u < v < n");
        edges.emplace_back(u, v);
    }
    return Tree(n, std::move(edges));
}

inline void write_tree(std::ostream &out, const Tree &t) {
    out << t.order() << '\n';
    for (auto [u, v] : t.edges()) out << u << ' ' << v << '\n';
}

inline Tree read_tree_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open tree file: " + path);
    return read_tree(in);
}

inline void write_tree_file(const std::string &path, const Tree &t) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    write_tree(out, t);
}

inline std::string tree_to_string(const Tree &t) {
    std::ostringstream out;
    write_tree(out, t);
    return out.str();
}

} // namespace rainbow
