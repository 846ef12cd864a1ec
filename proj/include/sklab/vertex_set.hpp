#pragma once

#include <boost/dynamic_bitset.hpp>

#include <string>
#include <vector>

namespace sklab {

// Faces are subsets of a fixed vertex universe, stored as dense bit
// vectors so that meets and subset tests are word-parallel.
using VertexSet = boost::dynamic_bitset<>;

inline VertexSet make_vertex_set(std::size_t n, const std::vector<int>& indices) {
    VertexSet s(n);
    for (int i : indices) s.set(static_cast<std::size_t>(i));
    return s;
}

inline std::vector<int> vertex_indices(const VertexSet& s) {
    std::vector<int> out;
    out.reserve(s.count());
    for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i))
        out.push_back(static_cast<int>(i));
    return out;
}

// Lexicographic order on the sorted index sequences, e.g. {0,3} < {0,4} < {1}.
// This (together with rank) fixes the canonical face order.
inline bool lex_less(const VertexSet& a, const VertexSet& b) {
    auto i = a.find_first();
    auto j = b.find_first();
    while (i != VertexSet::npos && j != VertexSet::npos) {
        if (i != j) return i < j;
        i = a.find_next(i);
        j = b.find_next(j);
    }
    return i == VertexSet::npos && j != VertexSet::npos;
}

inline std::string vertex_set_to_string(const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i)) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    }
    out += "}";
    return out;
}

}  // namespace sklab
