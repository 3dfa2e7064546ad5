#pragma once

// Helpers shared between the chart and strata translation units.  Not part
// of the installed interface.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "bfold/covering.hpp"

namespace bfold {
namespace internal {

// Sign of the permutation that sorts the tuple (entries are distinct).
inline int sort_parity(std::vector<Vertex> t) {
    int sign = 1;
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j)
            if (t[i] > t[j]) {
                std::swap(t[i], t[j]);
                sign = -sign;
            }
    return sign;
}

inline std::map<Simplex, int> top_index_map(const Complex& c) {
    std::map<Simplex, int> out;
    const std::vector<Simplex>& tops = c.top_simplices();
    for (size_t i = 0; i < tops.size(); ++i) out[tops[i]] = static_cast<int>(i);
    return out;
}

// Whether the simplicial automorphism w -> image.at(w) preserves the chosen
// orientation: for every top t with sign s, the image tuple sorts with parity
// pi onto a top of sign s * pi.
inline bool preserves_orientation(const Complex& c, const Orientation& o,
                                  const std::map<Simplex, int>& tops,
                                  const std::map<Vertex, Vertex>& image) {
    const std::vector<Simplex>& top = c.top_simplices();
    for (size_t i = 0; i < top.size(); ++i) {
        std::vector<Vertex> mapped;
        mapped.reserve(top[i].size());
        for (Vertex v : top[i]) mapped.push_back(image.at(v));
        int parity = sort_parity(mapped);
        std::sort(mapped.begin(), mapped.end());
        auto it = tops.find(mapped);
        if (it == tops.end()) return false;
        if (o.signs[i] * parity != o.signs[it->second]) return false;
    }
    return true;
}

// The vertex id of v's barycenter after `times` subdivision rounds.
inline Vertex lift_vertex(const Complex& c, Vertex v, int times) {
    Complex cur = c;
    Vertex id = v;
    for (int i = 0; i < times; ++i) {
        Vertex next = cur.index_of({id}) + 1;
        cur = cur.barycentric_subdivide().complex;
        id = next;
    }
    return id;
}

inline CoveringMap subdivide_times(CoveringMap f, int times) {
    for (int i = 0; i < times; ++i) f = subdivide_covering(f);
    return f;
}

// f with its images pushed through the vertex bijection `via` onto `base`.
inline CoveringMap rebase(const CoveringMap& f, const Complex& base,
                          const std::map<Vertex, Vertex>& via) {
    std::map<Vertex, Vertex> vm;
    for (const auto& [x, y] : f.vertex_map) vm[x] = via.at(y);
    return make_covering_map(f.total, base, std::move(vm));
}

// The restriction of p to one component of its total.
inline CoveringMap restrict_total(const CoveringMap& p, const Complex& piece) {
    std::map<Vertex, Vertex> vm;
    for (Vertex v : piece.vertices()) vm[v] = p.vertex_map.at(v);
    return make_covering_map(piece, p.base, std::move(vm));
}

// Deck transformations of r as permutations of the total's vertex ids.
inline std::vector<Perm> deck_perms(const CoveringMap& r) {
    int deg = 0;
    for (Vertex v : r.total.vertices()) deg = std::max(deg, v);
    std::vector<Perm> out;
    for (const std::map<Vertex, Vertex>& d : deck_transformations(r)) {
        std::vector<int> img(deg);
        for (int x = 1; x <= deg; ++x) img[x - 1] = x - 1;
        for (const auto& [x, y] : d) img[x - 1] = y - 1;
        out.push_back(Perm(std::move(img)));
    }
    return out;
}

}  // namespace internal
}  // namespace bfold
