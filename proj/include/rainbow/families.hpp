#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/tree.hpp"

namespace rainbow {

struct InvalidFamilyParams : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Family { path, star, star_plus, spider, F, F_prime, B_star, double_star };

struct FamilySpec {
    Family name;
    std::vector<int> params;
};

inline const char *family_name(Family f) {
    switch (f) {
    case Family::path: return "path";
    case Family::star: return "star";
    case Family::star_plus: return "star_plus";
    case Family::spider: return "spider";
    case Family::F: return "F";
    case Family::F_prime: return "F_prime";
    case Family::B_star: return "B_star";
    case Family::double_star: return "double_star";
    }
    return "?";
}

inline std::string to_string(const FamilySpec &spec) {
    std::string out = family_name(spec.name);
    out += ':';
    for (std::size_t i = 0; i < spec.params.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(spec.params[i]);
    }
    return out;
}

namespace detail {

inline void require(bool ok, const char *msg) {
    if (!ok) throw InvalidFamilyParams(msg);
}

// path(n): vertices labeled 0..n-1 along the path.
inline Tree make_path(int n) {
    require(n >= 1, "path: n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Tree(n, std::move(edges));
}

// star(k): center 0, leaves 1..k.
inline Tree make_star(int k) {
    require(k >= 1, "star: k >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
    return Tree(k + 1, std::move(edges));
}

// star_plus(k): star(k) with an extra pendant vertex k+1 attached to leaf 1.
inline Tree make_star_plus(int k) {
    require(k >= 1, "star_plus: k >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
    edges.emplace_back(1, k + 1);
    return Tree(k + 2, std::move(edges));
}

// spider(legs): branch vertex 0, then breadth-first across legs (depth-1
// vertices of every leg first, then depth-2, ...).
inline Tree make_spider(const std::vector<int> &legs) {
    require(legs.size() >= 3, "spider: at least 3 legs");
    int total = 1;
    int max_len = 0;
    for (int len : legs) {
        require(len >= 1, "spider: each leg >= 1");
        total += len;
        max_len = std::max(max_len, len);
    }
    std::vector<Edge> edges;
    // previous-depth label of each leg; depth 0 is the branch vertex
    std::vector<int> prev(legs.size(), 0);
    int next_label = 1;
    for (int depth = 1; depth <= max_len; ++depth)
        for (std::size_t i = 0; i < legs.size(); ++i)
            if (legs[i] >= depth) {
                edges.emplace_back(prev[i], next_label);
                prev[i] = next_label++;
            }
    return Tree(total, std::move(edges));
}

// F(m): center 0 adjacent to middles 1..m; middle i carries the two leaves
// m+2i-1 and m+2i. Order 3m+1.
inline Tree make_f(int m) {
    require(m >= 2, "F: m >= 2");
    std::vector<Edge> edges;
    for (int i = 1; i <= m; ++i) {
        edges.emplace_back(0, i);
        edges.emplace_back(i, m + 2 * i - 1);
        edges.emplace_back(i, m + 2 * i);
    }
    return Tree(3 * m + 1, std::move(edges));
}

// F_prime(m): F(m) with the swap done at the first middle vertex: the edge
// between its two leaves is added and the second leaf edge removed.
inline Tree make_f_prime(int m) {
    require(m >= 2, "F_prime: m >= 2");
    Tree f = make_f(m);
    std::vector<Edge> edges = f.edges();
    Edge removed = make_edge(1, m + 2);
    edges.erase(std::find(edges.begin(), edges.end(), removed));
    edges.push_back(make_edge(m + 1, m + 2));
    return Tree(f.order(), std::move(edges));
}

// B_star(s,t): middle vertex 0 on the path 1-0-2; vertex 1 carries leaves
// 3..s+2, vertex 2 carries leaves s+3..s+t+2. Order s+t+3.
inline Tree make_b_star(int s, int t) {
    require(s >= 1 && t >= 1, "B_star: s,t >= 1");
    std::vector<Edge> edges;
    edges.emplace_back(0, 1);
    edges.emplace_back(0, 2);
    for (int i = 0; i < s; ++i) edges.emplace_back(1, 3 + i);
    for (int i = 0; i < t; ++i) edges.emplace_back(2, 3 + s + i);
    return Tree(s + t + 3, std::move(edges));
}

// double_star(a,b): adjacent centers 0 and 1 with a and b leaves.
inline Tree make_double_star(int a, int b) {
    require(a >= 1 && b >= 1, "double_star: a,b >= 1");
    std::vector<Edge> edges;
    edges.emplace_back(0, 1);
    for (int i = 0; i < a; ++i) edges.emplace_back(0, 2 + i);
    for (int i = 0; i < b; ++i) edges.emplace_back(1, 2 + a + i);
    return Tree(a + b + 2, std::move(edges));
}

} // namespace detail

inline Tree family(const FamilySpec &spec) {
    const auto &p = spec.params;
    auto arity = [&](std::size_t k) {
        detail::require(p.size() == k, "wrong number of parameters");
    };
    switch (spec.name) {
    case Family::path: arity(1); return detail::make_path(p[0]);
    case Family::star: arity(1); return detail::make_star(p[0]);
    case Family::star_plus: arity(1); return detail::make_star_plus(p[0]);
    case Family::spider: return detail::make_spider(p);
    case Family::F: arity(1); return detail::make_f(p[0]);
    case Family::F_prime: arity(1); return detail::make_f_prime(p[0]);
    case Family::B_star: arity(2); return detail::make_b_star(p[0], p[1]);
    case Family::double_star: arity(2); return detail::make_double_star(p[0], p[1]);
    }
    throw InvalidFamilyParams("unknown family");
}

inline Tree family(Family name, std::vector<int> params) {
    return family(FamilySpec{name, std::move(params)});
}

/// Parses the CLI family format `name:k1[,k2,...]`, e.g. "F:3" or "B_star:2,2".
inline FamilySpec parse_family_spec(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw InvalidFamilyParams("expected name:params, e.g. F:3");
    std::string_view name = text.substr(0, colon);
    std::string_view rest = text.substr(colon + 1);
    FamilySpec spec;
    if (name == "path") spec.name = Family::path;
    else if (name == "star") spec.name = Family::star;
    else if (name == "star_plus") spec.name = Family::star_plus;
    else if (name == "spider") spec.name = Family::spider;
    else if (name == "F") spec.name = Family::F;
    else if (name == "F_prime") spec.name = Family::F_prime;
    else if (name == "B_star") spec.name = Family::B_star;
    else if (name == "double_star") spec.name = Family::double_star;
    else throw InvalidFamilyParams("unknown family name: " + std::string(name));
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view tok = rest.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw InvalidFamilyParams("bad integer parameter: " + std::string(tok));
        spec.params.push_back(value);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    if (spec.params.empty()) throw InvalidFamilyParams("missing parameters");
    return spec;
}

} // namespace rainbow
