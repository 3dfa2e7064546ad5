#include "bfold/goodness.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <set>

namespace bfold {

namespace {

// Union-find over simplex indices.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

std::vector<std::vector<Simplex>> open_complement_components(const Complex& c,
                                                             const Complex& s) {
    require(c.has_subcomplex(s), ErrorCode::not_a_subcomplex,
            "complement taken against a non-subcomplex");
    std::vector<Simplex> nodes;
    for (const Simplex& t : c.simplices())
        if (!s.contains(t)) nodes.push_back(t);
    UnionFind uf(nodes.size());
    // Adjacency: one simplex is a face of the other.  Linking each node to
    // its codimension-one faces inside the complement suffices: because s is
    // face-closed, a complement face of a complement simplex can only have
    // complement simplices between them in the face order.
    std::unordered_map<Simplex, int, SimplexHash> pos;
    for (size_t i = 0; i < nodes.size(); ++i) pos.emplace(nodes[i], static_cast<int>(i));
    for (size_t i = 0; i < nodes.size(); ++i) {
        const Simplex& t = nodes[i];
        if (t.size() == 1) continue;
        for (Vertex v : t) {
            Simplex f = simplex_without(t, v);
            auto it = pos.find(f);
            if (it != pos.end()) uf.unite(static_cast<int>(i), it->second);
        }
    }
    std::map<int, std::vector<Simplex>> buckets;
    for (size_t i = 0; i < nodes.size(); ++i)
        buckets[uf.find(static_cast<int>(i))].push_back(nodes[i]);
    std::vector<std::vector<Simplex>> out;
    out.reserve(buckets.size());
    for (auto& [root, comp] : buckets) out.push_back(std::move(comp));
    return out;
}

GoodnessReport good_subcomplex_report(const Complex& c, const Complex& s) {
    require(c.has_subcomplex(s), ErrorCode::not_a_subcomplex,
            "goodness asked for a non-subcomplex");
    GoodnessReport rep;
    rep.nowhere_dense = true;
    for (const Simplex& t : s.simplices())
        if (c.is_top(t)) {
            rep.nowhere_dense = false;
            break;
        }
    if (s.empty()) {
        // nothing to puncture: trivially good
        rep.link_condition = rep.star_condition = true;
        return rep;
    }

    // Work in the first barycentric subdivision: its vertices lying in |s|
    // are exactly the barycenters of simplices of s, and they meet every open
    // cell of s, where the local pair (link, link-and-s) is constant.
    //
    // Subdividing dominates the cost and the same ambient complex is often
    // queried against several subcomplexes in a row (a covering analysis
    // checks a singular and a branch set, a chart five coverings), so large
    // subdivisions are kept for reuse.
    static thread_local std::vector<std::pair<Complex, Subdivision>> cache;
    const Subdivision* cached = nullptr;
    if (c.size() > 500) {
        for (const auto& [key, entry] : cache)
            if (key == c) cached = &entry;
        if (!cached) {
            if (cache.size() >= 2) cache.erase(cache.begin());
            cache.emplace_back(c, c.barycentric_subdivide());
            cached = &cache.back().second;
        }
    }
    Subdivision local;
    if (!cached) {
        local = c.barycentric_subdivide();
        cached = &local;
    }
    const Subdivision& sd = *cached;
    const Complex& c1 = sd.complex;
    // subdivision of s = chains running inside s
    std::vector<Simplex> s1_simplices;
    for (const Simplex& chain : c1.simplices()) {
        bool inside = true;
        for (Vertex v : chain)
            if (!s.contains(sd.carrier[v - 1])) {
                inside = false;
                break;
            }
        if (inside) s1_simplices.push_back(chain);
    }
    Complex s1 = Complex::from_simplices(std::move(s1_simplices));

    // One-pass incidence index over the subdivision: the loop below needs the
    // closed star and link of every barycenter of an s-cell, and extracting
    // them by scanning c1 once per vertex is quadratic on fine subdivisions.
    std::set<Vertex> marks;
    for (Vertex v = 1; v <= static_cast<Vertex>(sd.carrier.size()); ++v)
        if (s.contains(sd.carrier[v - 1])) marks.insert(v);
    std::map<Vertex, std::vector<const Simplex*>> incident;
    for (const Simplex& t : c1.simplices())
        for (Vertex v : t)
            if (marks.count(v)) incident[v].push_back(&t);

    rep.link_condition = true;
    rep.star_condition = true;
    for (Vertex v : marks) {
        std::vector<Simplex> link_simplices;
        std::set<Simplex> star_closed;
        for (const Simplex* t : incident[v]) {
            const size_t n = t->size();
            for (uint32_t mask = 1; mask < (1u << n); ++mask) {
                Simplex f;
                for (size_t i = 0; i < n; ++i)
                    if (mask & (1u << i)) f.push_back((*t)[i]);
                star_closed.insert(std::move(f));
            }
            Simplex rest;
            rest.reserve(n - 1);
            for (Vertex u : *t)
                if (u != v) rest.push_back(u);
            if (!rest.empty()) link_simplices.push_back(std::move(rest));
        }
        Complex lk = Complex::from_simplices(std::move(link_simplices));
        std::vector<Simplex> lk_in_s;
        for (const Simplex& t : lk.simplices())
            if (s1.contains(t)) lk_in_s.push_back(t);
        Complex lk_s = Complex::from_simplices(std::move(lk_in_s));
        if (open_complement_components(lk, lk_s).size() != 1) rep.link_condition = false;

        Complex st = Complex::from_simplices(
            std::vector<Simplex>(star_closed.begin(), star_closed.end()));
        std::vector<Simplex> st_in_s;
        for (const Simplex& t : st.simplices())
            if (s1.contains(t)) st_in_s.push_back(t);
        Complex st_s = Complex::from_simplices(std::move(st_in_s));
        if (open_complement_components(st, st_s).size() != 1) rep.star_condition = false;

        if (!rep.link_condition && !rep.star_condition) break;
    }
    return rep;
}

}  // namespace bfold
