#include "bfold/monodromy.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "bfold/error.hpp"
#include "bfold/goodness.hpp"

namespace bfold {

Perm MonodromyCocycle::transition(int from_top, int to_top) const {
    auto it = transitions.find({from_top, to_top});
    return it == transitions.end() ? Perm::identity(sheets) : it->second;
}

void MonodromyCocycle::set_transition(int from_top, int to_top, const Perm& p) {
    if (p.is_identity()) {
        transitions.erase({from_top, to_top});
        transitions.erase({to_top, from_top});
        return;
    }
    transitions[{from_top, to_top}] = p;
    transitions[{to_top, from_top}] = p.inverse();
}

namespace {

std::map<Simplex, std::vector<int>> facet_table(const std::vector<Simplex>& tops) {
    std::map<Simplex, std::vector<int>> table;
    for (size_t i = 0; i < tops.size(); ++i)
        for (Vertex v : tops[i])
            table[simplex_without(tops[i], v)].push_back(static_cast<int>(i));
    return table;
}

bool tops_adjacent(const Simplex& a, const Simplex& b) {
    if (a == b) return false;
    std::vector<Vertex> shared;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(shared));
    return shared.size() + 1 == a.size();
}

}  // namespace

CocycleReport validate_cocycle(const MonodromyCocycle& mc) {
    CocycleReport report;
    const Complex& base = mc.base;
    report.base_ok = !base.empty() && base.is_connected() &&
                     (base.is_pseudo_manifold() || base.is_pseudo_manifold_with_boundary());
    report.branch_ok = (mc.branch_locus.empty() || base.has_subcomplex(mc.branch_locus)) &&
                       mc.branch_locus.dim() <= base.dim() - 2;

    const std::vector<Simplex>& tops = base.top_simplices();
    const int n = static_cast<int>(tops.size());
    report.degrees_ok = mc.sheets >= 1;
    for (const auto& [key, p] : mc.transitions) {
        if (p.degree() != mc.sheets || key.first < 0 || key.first >= n ||
            key.second < 0 || key.second >= n ||
            !tops_adjacent(tops[key.first], tops[key.second]))
            report.degrees_ok = false;
    }
    if (!report.degrees_ok) return report;

    report.symmetric = true;
    for (const auto& [key, p] : mc.transitions)
        if (mc.transition(key.second, key.first) != p.inverse()) report.symmetric = false;

    report.flat = true;
    if (base.dim() >= 2) {
        for (const Simplex& e : base.skeleton_of_dim(base.dim() - 2)) {
            if (mc.branch_locus.contains(e)) continue;
            for (const std::vector<int>& walk : dual_walks_around(base, e)) {
                if (walk.size() < 2 || walk.front() != walk.back()) continue;
                Perm product = Perm::identity(mc.sheets);
                for (size_t k = 0; k + 1 < walk.size(); ++k)
                    product = mc.transition(walk[k], walk[k + 1]) * product;
                if (!product.is_identity()) report.flat = false;
            }
        }
    }
    return report;
}

std::vector<std::vector<int>> dual_walks_around(const Complex& c, const Simplex& codim2) {
    require(c.contains(codim2) && simplex_dim(codim2) == c.dim() - 2,
            ErrorCode::param_out_of_range, "dual walks need a codimension-2 simplex");

    const std::vector<Simplex>& tops = c.top_simplices();
    std::map<Simplex, int> top_index;
    for (size_t i = 0; i < tops.size(); ++i) top_index[tops[i]] = static_cast<int>(i);

    // Top simplices around the given simplex, and the facets containing it.
    std::vector<int> around;
    for (const Simplex& t : c.star_simplices(codim2))
        if (simplex_dim(t) == c.dim()) around.push_back(top_index.at(t));
    std::map<Simplex, std::vector<int>> via;
    for (int t : around)
        for (Vertex v : tops[t])
            if (!simplex_contains(codim2, v))
                via[simplex_without(tops[t], v)].push_back(t);

    std::map<int, std::vector<int>> adj;
    for (int t : around) adj[t];
    for (const auto& [facet, cofs] : via) {
        require(cofs.size() <= 2, ErrorCode::not_pseudo_manifold,
                "more than two top simplices share a facet");
        if (cofs.size() == 2) {
            adj[cofs[0]].push_back(cofs[1]);
            adj[cofs[1]].push_back(cofs[0]);
        }
    }

    std::set<int> visited;
    std::vector<std::vector<int>> walks;
    auto follow = [&](int start) {
        std::vector<int> walk{start};
        visited.insert(start);
        int prev = -1, cur = start;
        while (true) {
            int next = -1;
            for (int nb : adj.at(cur))
                if (nb != prev) { next = nb; break; }
            if (next == -1) break;
            if (next == start) {
                walk.push_back(start);  // closed loop
                break;
            }
            if (visited.count(next)) break;
            walk.push_back(next);
            visited.insert(next);
            prev = cur;
            cur = next;
        }
        return walk;
    };

    // Paths first (endpoints have at most one neighbor), then cycles.
    for (int t : around)
        if (!visited.count(t) && adj.at(t).size() <= 1) walks.push_back(follow(t));
    for (int t : around)
        if (!visited.count(t)) walks.push_back(follow(t));
    return walks;
}

MonodromyCocycle subdivide_cocycle(const MonodromyCocycle& mc) {
    Subdivision sd = mc.base.barycentric_subdivide();
    const Complex& prime = sd.complex;

    MonodromyCocycle out;
    out.base = prime;
    out.sheets = mc.sheets;

    std::vector<Simplex> inside;
    for (const Simplex& s : prime.simplices()) {
        bool all_in = true;
        for (Vertex v : s)
            if (!mc.branch_locus.contains(sd.carrier[v - 1])) { all_in = false; break; }
        if (all_in) inside.push_back(s);
    }
    out.branch_locus = Complex::from_simplices(inside);

    std::map<Simplex, int> coarse_index;
    const std::vector<Simplex>& coarse_tops = mc.base.top_simplices();
    for (size_t i = 0; i < coarse_tops.size(); ++i) coarse_index[coarse_tops[i]] = static_cast<int>(i);

    // The coarse top containing a subdivided top is the largest carrier among
    // its vertices.
    const std::vector<Simplex>& fine_tops = prime.top_simplices();
    std::vector<int> coarse_of(fine_tops.size());
    for (size_t i = 0; i < fine_tops.size(); ++i) {
        const Simplex* largest = nullptr;
        for (Vertex v : fine_tops[i]) {
            const Simplex& carrier = sd.carrier[v - 1];
            if (!largest || carrier.size() > largest->size()) largest = &carrier;
        }
        coarse_of[i] = coarse_index.at(*largest);
    }

    for (const auto& [facet, cofs] : facet_table(fine_tops)) {
        if (cofs.size() != 2) continue;
        int a = coarse_of[cofs[0]], b = coarse_of[cofs[1]];
        if (a != b) out.set_transition(cofs[0], cofs[1], mc.transition(a, b));
    }
    return out;
}

namespace {

// One Fox completion attempt plus the fiber bookkeeping needed to derive
// vertical maps between builds over the same base.
struct FoxBuild {
    MonodromyCocycle mc;  // the cocycle realized (post-subdivision)
    int level = 0;
    CoveringMap map;

    std::vector<std::vector<int>> top_cof;  // per base simplex: covering top indices
    std::vector<std::vector<int>> comp;     // per base simplex: node -> fiber point
    std::vector<int> ncomp;                 // per base simplex: fiber point count
    std::map<std::pair<Vertex, int>, Vertex> vid;  // (base vertex, fiber point) -> total vertex

    int node_of(int sidx, int top, int sheet) const {
        const std::vector<int>& cof = top_cof[sidx];
        int pos = static_cast<int>(std::lower_bound(cof.begin(), cof.end(), top) - cof.begin());
        return pos * mc.sheets + sheet - 1;
    }
    int fiber_point(int sidx, int top, int sheet) const {
        return comp[sidx][node_of(sidx, top, sheet)];
    }
    // Some node (top, sheet) of the given fiber point.
    std::pair<int, int> representative(int sidx, int point) const {
        for (size_t n = 0; n < comp[sidx].size(); ++n)
            if (comp[sidx][n] == point)
                return {top_cof[sidx][n / mc.sheets], static_cast<int>(n % mc.sheets) + 1};
        fail(ErrorCode::internal_error, "fiber point without nodes");
    }
};

// Builds the total complex for the cocycle; returns false when two distinct
// fiber points over one simplex would receive the same vertex set, which is
// exactly the case cured by one barycentric subdivision.
bool try_fox(const MonodromyCocycle& mc, FoxBuild& out) {
    const Complex& base = mc.base;
    const int m = base.dim(), d = mc.sheets;
    const std::vector<Simplex>& tops = base.top_simplices();
    std::map<Simplex, int> top_index;
    for (size_t i = 0; i < tops.size(); ++i) top_index[tops[i]] = static_cast<int>(i);

    out.mc = mc;
    out.top_cof.assign(base.size(), {});
    out.comp.assign(base.size(), {});
    out.ncomp.assign(base.size(), 0);

    std::map<Simplex, std::vector<int>> facets = facet_table(tops);

    for (size_t sidx = 0; sidx < base.size(); ++sidx) {
        const Simplex& s = base.simplices()[sidx];
        std::vector<int>& cof = out.top_cof[sidx];
        std::vector<Simplex> shared_facets;
        for (const Simplex& t : base.star_simplices(s)) {
            if (simplex_dim(t) == m) cof.push_back(top_index.at(t));
            if (simplex_dim(t) == m - 1) shared_facets.push_back(t);
        }
        std::sort(cof.begin(), cof.end());

        // Union-find on (top, sheet) nodes, glued through the star's facets.
        int n = static_cast<int>(cof.size()) * d;
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        auto pos_of = [&cof](int top) {
            return static_cast<int>(std::lower_bound(cof.begin(), cof.end(), top) - cof.begin());
        };
        for (const Simplex& w : shared_facets) {
            const std::vector<int>& both = facets.at(w);
            if (both.size() != 2) continue;
            Perm p = mc.transition(both[0], both[1]);
            int pa = pos_of(both[0]), pb = pos_of(both[1]);
            for (int i = 1; i <= d; ++i) {
                int a = find(pa * d + i - 1), b = find(pb * d + p.apply(i) - 1);
                if (a != b) parent[a] = b;
            }
        }
        // Number fiber points by first appearance.
        std::vector<int>& comp = out.comp[sidx];
        comp.assign(n, -1);
        std::map<int, int> renumber;
        for (int node = 0; node < n; ++node) {
            int root = find(node);
            auto [it, fresh] = renumber.try_emplace(root, static_cast<int>(renumber.size()));
            comp[node] = it->second;
        }
        out.ncomp[sidx] = static_cast<int>(renumber.size());
    }

    // Total vertex ids: (base vertex, fiber point) pairs in canonical order.
    std::vector<std::pair<Vertex, int>> pairs;
    for (Vertex v : base.vertices()) {
        int sidx = base.index_of({v});
        for (int c = 0; c < out.ncomp[sidx]; ++c) pairs.push_back({v, c});
    }
    std::sort(pairs.begin(), pairs.end());
    out.vid.clear();
    for (size_t i = 0; i < pairs.size(); ++i) out.vid[pairs[i]] = static_cast<Vertex>(i + 1);

    // One total simplex per fiber point; identical vertex sets for distinct
    // fiber points mean the build needs a subdivision first.
    std::set<Simplex> total_simplices;
    std::map<Vertex, Vertex> vm;
    for (size_t sidx = 0; sidx < base.size(); ++sidx) {
        const Simplex& s = base.simplices()[sidx];
        for (int c = 0; c < out.ncomp[sidx]; ++c) {
            auto [top, sheet] = out.representative(static_cast<int>(sidx), c);
            Simplex lifted;
            for (Vertex v : s) {
                int vindex = base.index_of({v});
                Vertex id = out.vid.at({v, out.fiber_point(vindex, top, sheet)});
                lifted.push_back(id);
            }
            std::sort(lifted.begin(), lifted.end());
            if (!total_simplices.insert(lifted).second) return false;
        }
    }
    for (const auto& [pair, id] : out.vid) vm[id] = pair.first;

    Complex total = Complex::from_simplices(
        std::vector<Simplex>(total_simplices.begin(), total_simplices.end()));
    out.map = make_covering_map(std::move(total), base, std::move(vm));
    return true;
}

FoxBuild fox_build(const MonodromyCocycle& mc) {
    CocycleReport report = validate_cocycle(mc);
    require(report.base_ok, ErrorCode::base_not_pseudo_manifold,
            "covering base must be a connected pseudo-manifold");
    require(report.branch_ok && is_good_subcomplex(mc.base, mc.branch_locus),
            ErrorCode::branch_locus_not_good,
            "branch locus must be a good subcomplex of codimension at least two");
    require(report.valid(), ErrorCode::cocycle_invalid,
            "sheet transitions are not a flat symmetric cocycle");

    FoxBuild build;
    if (try_fox(mc, build)) {
        build.level = 0;
        return build;
    }
    FoxBuild finer;
    require(try_fox(subdivide_cocycle(mc), finer), ErrorCode::internal_error,
            "fiber points still collide after a barycentric subdivision");
    finer.level = 1;
    return finer;
}

MonodromyCocycle cocycle_at_level(MonodromyCocycle mc, int level) {
    for (int k = 0; k < level; ++k) mc = subdivide_cocycle(mc);
    return mc;
}

FoxBuild fox_build_at_level(const MonodromyCocycle& mc, int level) {
    FoxBuild build;
    require(try_fox(cocycle_at_level(mc, level), build), ErrorCode::internal_error,
            "fiber points collide at the agreed subdivision level");
    build.level = level;
    return build;
}

// Vertical covering between two builds over the same base, induced by an
// equivariant map of sheet sets.
CoveringMap induced_map(const FoxBuild& from, const FoxBuild& to,
                        const std::function<int(int)>& sheet_map) {
    require(from.mc.base == to.mc.base, ErrorCode::internal_error,
            "induced map needs a common base");
    std::map<Vertex, Vertex> vm;
    for (Vertex v : from.mc.base.vertices()) {
        int sidx = from.mc.base.index_of({v});
        for (int c = 0; c < from.ncomp[sidx]; ++c) {
            auto [top, sheet] = from.representative(sidx, c);
            int image_point = to.fiber_point(sidx, top, sheet_map(sheet));
            vm[from.vid.at({v, c})] = to.vid.at({v, image_point});
        }
    }
    return make_covering_map(from.map.total, to.map.total, std::move(vm));
}

}  // namespace

FoxResult fox_complete_result(const MonodromyCocycle& mc) {
    FoxBuild build = fox_build(mc);
    return FoxResult{std::move(build.map), build.level, std::move(build.mc)};
}

CoveringMap fox_complete(const MonodromyCocycle& mc) {
    return fox_complete_result(mc).map;
}

MonodromyCocycle extract_cocycle(const CoveringMap& f) {
    const Complex& base = f.base;
    require(base.is_connected(), ErrorCode::base_not_pseudo_manifold,
            "cocycle extraction needs a connected base");

    const std::vector<Simplex>& btops = base.top_simplices();
    const std::vector<Simplex>& ttops = f.total.top_simplices();
    std::map<Simplex, int> btop_index;
    for (size_t i = 0; i < btops.size(); ++i) btop_index[btops[i]] = static_cast<int>(i);

    std::map<Simplex, std::vector<int>> base_facets = facet_table(btops);
    std::map<Simplex, std::vector<int>> total_facets = facet_table(ttops);

    // Total tops over each base top, in canonical order.
    std::vector<std::vector<int>> over(btops.size());
    for (size_t i = 0; i < ttops.size(); ++i)
        over[btop_index.at(f.image(ttops[i]))].push_back(static_cast<int>(i));

    // The neighbor of a total top across the preimage of a base facet.
    auto neighbor_over = [&](int ttop, const Simplex& base_facet) {
        Simplex lifted_facet;
        for (Vertex v : ttops[ttop])
            if (simplex_contains(base_facet, f.vertex_map.at(v))) lifted_facet.push_back(v);
        require(lifted_facet.size() == base_facet.size(), ErrorCode::not_a_branched_covering,
                "facet preimage is degenerate");
        const std::vector<int>& cofs = total_facets.at(lifted_facet);
        require(cofs.size() == 2, ErrorCode::not_a_branched_covering,
                "interior facet lift lacks a second coface");
        return cofs[0] == ttop ? cofs[1] : cofs[0];
    };

    // Breadth-first sheet labeling from the least base top.
    std::vector<int> sheet_of(ttops.size(), 0);
    std::vector<bool> labeled(btops.size(), false);
    for (size_t k = 0; k < over[0].size(); ++k) sheet_of[over[0][k]] = static_cast<int>(k) + 1;
    labeled[0] = true;
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
        int t = q.front();
        q.pop();
        for (Vertex v : btops[t]) {
            Simplex w = simplex_without(btops[t], v);
            const std::vector<int>& cofs = base_facets.at(w);
            if (cofs.size() != 2) continue;
            int u = cofs[0] == t ? cofs[1] : cofs[0];
            if (labeled[u]) continue;
            for (int ttop : over[t]) sheet_of[neighbor_over(ttop, w)] = sheet_of[ttop];
            labeled[u] = true;
            q.push(u);
        }
    }

    MonodromyCocycle out;
    out.base = base;
    out.branch_locus = f.branch_set;
    out.sheets = f.degree;
    for (const auto& [w, cofs] : base_facets) {
        if (cofs.size() != 2) continue;
        int t = cofs[0], u = cofs[1];
        std::vector<int> images(f.degree);
        for (int ttop : over[t])
            images[sheet_of[ttop] - 1] = sheet_of[neighbor_over(ttop, w)] - 1;
        Perm p(images);
        out.set_transition(t, u, p);
    }
    return out;
}

namespace {

MonodromyCocycle product_cocycle(const MonodromyCocycle& a, const MonodromyCocycle& b) {
    MonodromyCocycle out;
    out.base = a.base;
    out.sheets = a.sheets * b.sheets;
    out.branch_locus = complex_union(a.branch_locus, b.branch_locus);
    std::set<std::pair<int, int>> keys;
    for (const auto& [key, p] : a.transitions) keys.insert(key);
    for (const auto& [key, p] : b.transitions) keys.insert(key);
    for (const auto& key : keys) {
        Perm pa = a.transition(key.first, key.second);
        Perm pb = b.transition(key.first, key.second);
        std::vector<int> images(out.sheets);
        for (int i = 1; i <= a.sheets; ++i)
            for (int j = 1; j <= b.sheets; ++j)
                images[(i - 1) * b.sheets + j - 1] =
                    (pa.apply(i) - 1) * b.sheets + pb.apply(j) - 1;
        out.transitions[key] = Perm(images);
    }
    return out;
}

struct PullbackBuilds {
    FoxBuild product, left, right;
    int level = 0;
};

PullbackBuilds pullback_builds(const CoveringMap& f1, const CoveringMap& f2) {
    require(f1.base == f2.base, ErrorCode::bases_differ,
            "pullback needs a common base complex");
    require(f1.total.is_connected() && f2.total.is_connected(),
            ErrorCode::total_not_connected, "pullback factors must be connected");
    MonodromyCocycle m1 = extract_cocycle(f1);
    MonodromyCocycle m2 = extract_cocycle(f2);

    FoxBuild b1 = fox_build(m1);
    FoxBuild b2 = fox_build(m2);
    FoxBuild bp = fox_build(product_cocycle(m1, m2));
    int level = std::max({b1.level, b2.level, bp.level});
    if (b1.level != level) b1 = fox_build_at_level(m1, level);
    if (b2.level != level) b2 = fox_build_at_level(m2, level);
    if (bp.level != level)
        bp = fox_build_at_level(
            product_cocycle(cocycle_at_level(m1, level), cocycle_at_level(m2, level)), 0);
    bp.level = level;
    return PullbackBuilds{std::move(bp), std::move(b1), std::move(b2), level};
}

}  // namespace

PullbackResult pullback(const CoveringMap& f1, const CoveringMap& f2) {
    PullbackBuilds builds = pullback_builds(f1, f2);
    int d2 = builds.right.mc.sheets;
    PullbackResult out;
    out.p1 = induced_map(builds.product, builds.left,
                         [d2](int pair) { return (pair - 1) / d2 + 1; });
    out.p2 = induced_map(builds.product, builds.right,
                         [d2](int pair) { return (pair - 1) % d2 + 1; });
    out.f = std::move(builds.product.map);
    out.f1 = std::move(builds.left.map);
    out.f2 = std::move(builds.right.map);
    out.level = builds.level;
    return out;
}

CoveringMap connected_pullback(const CoveringMap& f1, const CoveringMap& f2) {
    if (!is_regular(f1))
        require(is_regular(f2), ErrorCode::neither_regular,
                "connected pullback needs a regular factor");
    PullbackBuilds builds = pullback_builds(f1, f2);
    const FoxBuild& bp = builds.product;

    // The top simplex carrying sheet pair (1,1) over the least base top.
    const Simplex& least = bp.mc.base.top_simplices().front();
    Simplex marked;
    for (Vertex v : least) {
        int sidx = bp.mc.base.index_of({v});
        marked.push_back(bp.vid.at({v, bp.fiber_point(sidx, 0, 1)}));
    }
    std::sort(marked.begin(), marked.end());

    for (CoveringMap& piece : covering_components(bp.map))
        if (piece.total.contains(marked)) return piece;
    fail(ErrorCode::internal_error, "marked component not found in the pullback");
}

RegularizationResult minimal_regularization(const CoveringMap& f) {
    require(f.total.is_connected(), ErrorCode::total_not_connected,
            "regularization needs a connected covering");
    MonodromyCocycle mc = extract_cocycle(f);

    std::vector<Perm> gens;
    for (const auto& [key, p] : mc.transitions)
        if (!p.is_identity()) gens.push_back(p);
    PermGroup g = gens.empty() ? PermGroup::trivial(mc.sheets) : PermGroup::generate(gens);

    std::vector<Perm> stab;
    for (const Perm& a : g.elements())
        if (a.apply(1) == 1) stab.push_back(a);
    PermGroup h = PermGroup::from_elements(stab);
    PermGroup n = group_core(g, h);
    CosetAction cosets = coset_action(g, n);

    MonodromyCocycle reg;
    reg.base = mc.base;
    reg.branch_locus = mc.branch_locus;
    reg.sheets = cosets.index;
    for (const auto& [key, p] : mc.transitions)
        reg.transitions[key] = coset_action_image(g, n, p);

    FoxBuild bf = fox_build(mc);
    FoxBuild br = fox_build(reg);
    int level = std::max(bf.level, br.level);
    if (bf.level != level) bf = fox_build_at_level(mc, level);
    if (br.level != level) br = fox_build_at_level(reg, level);

    RegularizationResult out;
    out.s = induced_map(br, bf, [&cosets](int coset) {
        return cosets.coset_reps[coset - 1].apply(1);
    });
    out.r = std::move(br.map);
    out.f = std::move(bf.map);
    out.level = level;
    out.deck_model = cosets.generator_images.empty()
                         ? PermGroup::trivial(cosets.index)
                         : PermGroup::generate(cosets.generator_images);
    return out;
}

bool factors_through(const CoveringMap& h, const CoveringMap& f) {
    require(h.base == f.base, ErrorCode::bases_differ,
            "factorization test needs a common base");
    require(h.total.is_connected() && f.total.is_connected(),
            ErrorCode::total_not_connected, "factorization test needs connected totals");
    MonodromyCocycle mh = extract_cocycle(h);
    MonodromyCocycle mf = extract_cocycle(f);

    // Close the paired sheet transitions into the joint walk group.
    std::set<std::pair<int, int>> keys;
    for (const auto& [key, p] : mh.transitions) keys.insert(key);
    for (const auto& [key, p] : mf.transitions) keys.insert(key);
    std::vector<std::pair<Perm, Perm>> gens;
    for (const auto& key : keys)
        gens.push_back({mh.transition(key.first, key.second),
                        mf.transition(key.first, key.second)});

    std::set<std::pair<Perm, Perm>> closed;
    std::queue<std::pair<Perm, Perm>> frontier;
    std::pair<Perm, Perm> id{Perm::identity(mh.sheets), Perm::identity(mf.sheets)};
    closed.insert(id);
    frontier.push(id);
    while (!frontier.empty()) {
        auto cur = frontier.front();
        frontier.pop();
        for (const auto& [a, b] : gens) {
            std::pair<Perm, Perm> next{a * cur.first, b * cur.second};
            if (closed.insert(next).second) {
                require(closed.size() <= 1000000, ErrorCode::group_too_large,
                        "joint monodromy group exceeds the enumeration cap");
                frontier.push(next);
            }
        }
    }

    for (int j = 1; j <= mf.sheets; ++j) {
        bool ok = true;
        for (const auto& [a, b] : closed)
            if (a.apply(1) == 1 && b.apply(j) != j) { ok = false; break; }
        if (ok) return true;
    }
    return false;
}

}  // namespace bfold
