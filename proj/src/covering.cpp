#include "bfold/covering.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "bfold/error.hpp"
#include "bfold/goodness.hpp"
#include "bfold/monodromy.hpp"

namespace bfold {

namespace {

// Local degree of every total simplex: the number of top cofaces over one
// fixed top coface of the image, which must not depend on the choice.
std::vector<int> local_degrees_by_index(const Complex& total, const Complex& base,
                                        const std::map<Vertex, Vertex>& vm) {
    auto image_of = [&vm](const Simplex& s) {
        Simplex img;
        img.reserve(s.size());
        for (Vertex v : s) img.push_back(vm.at(v));
        std::sort(img.begin(), img.end());
        return img;
    };

    std::vector<int> out(total.size(), 1);
    for (size_t idx = 0; idx < total.size(); ++idx) {
        const Simplex& s = total.simplices()[idx];
        Simplex img = image_of(s);
        // Count total top cofaces of s per base top coface of img.
        std::map<Simplex, int> per_base_top;
        for (const Simplex& t : total.star_simplices(s))
            if (total.is_top(t) && simplex_dim(t) == total.dim())
                per_base_top[image_of(t)]++;
        int count = -1;
        for (const Simplex& b : base.star_simplices(img)) {
            if (!base.is_top(b) || simplex_dim(b) != base.dim()) continue;
            auto it = per_base_top.find(b);
            int here = it == per_base_top.end() ? 0 : it->second;
            require(here >= 1, ErrorCode::not_a_branched_covering,
                    "a star fails to map onto a star");
            require(count < 0 || here == count, ErrorCode::not_a_branched_covering,
                    "local degree depends on the direction of approach");
            count = here;
        }
        out[idx] = count < 0 ? 1 : count;
    }
    return out;
}

}  // namespace

Simplex CoveringMap::image(const Simplex& s) const {
    Simplex img;
    img.reserve(s.size());
    for (Vertex v : s) {
        auto it = vertex_map.find(v);
        require(it != vertex_map.end(), ErrorCode::unknown_vertex,
                "vertex outside the covering's total complex");
        img.push_back(it->second);
    }
    std::sort(img.begin(), img.end());
    require(std::adjacent_find(img.begin(), img.end()) == img.end(),
            ErrorCode::not_a_branched_covering, "degenerate image simplex");
    return img;
}

CoveringMap make_covering_map(Complex total, Complex base,
                              std::map<Vertex, Vertex> vertex_map) {
    CoveringMap f;
    f.total = std::move(total);
    f.base = std::move(base);
    f.vertex_map = std::move(vertex_map);

    require(!f.total.empty() && !f.base.empty(), ErrorCode::not_a_branched_covering,
            "empty complex in a covering map");
    for (Vertex v : f.total.vertices())
        require(f.vertex_map.count(v) && f.base.contains_vertex(f.vertex_map.at(v)),
                ErrorCode::not_a_branched_covering,
                "vertex map must send total vertices to base vertices");

    // Non-degenerate simplicial: every simplex maps injectively onto a
    // simplex of the base.
    for (const Simplex& s : f.total.simplices()) {
        Simplex img = f.image(s);
        require(img.size() == s.size() && f.base.contains(img),
                ErrorCode::not_a_branched_covering,
                "image of " + simplex_to_string(s) + " is not a base simplex");
    }

    // Constant fiber cardinality over top simplices, and surjectivity.
    std::map<Simplex, int> fiber_count;
    for (const Simplex& t : f.total.top_simplices()) {
        require(simplex_dim(t) == f.base.dim(), ErrorCode::not_a_branched_covering,
                "total complex is not homogeneous over the base");
        fiber_count[f.image(t)]++;
    }
    int d = -1;
    for (const Simplex& b : f.base.top_simplices()) {
        auto it = fiber_count.find(b);
        require(it != fiber_count.end(), ErrorCode::not_a_branched_covering,
                "covering misses the base top simplex " + simplex_to_string(b));
        require(d < 0 || it->second == d, ErrorCode::not_a_branched_covering,
                "fiber cardinality varies between top simplices");
        d = it->second;
    }
    f.degree = d;

    // Derived sets from local degrees.
    std::vector<int> ld = local_degrees_by_index(f.total, f.base, f.vertex_map);
    std::vector<Simplex> singular;
    for (size_t i = 0; i < f.total.size(); ++i)
        if (ld[i] >= 2) singular.push_back(f.total.simplices()[i]);
    f.singular_set = Complex::from_simplices(singular);

    std::set<Simplex> branch;
    for (const Simplex& s : singular) branch.insert(f.image(s));
    f.branch_set =
        Complex::from_simplices(std::vector<Simplex>(branch.begin(), branch.end()));

    std::vector<Simplex> preimage;
    for (const Simplex& s : f.total.simplices())
        if (f.branch_set.contains(f.image(s))) preimage.push_back(s);
    f.preimage_set = Complex::from_simplices(preimage);

    f.pseudo_singular_set = complex_closure_minus(f.preimage_set, f.singular_set);
    return f;
}

int local_degree(const CoveringMap& f, const Simplex& s) {
    int idx = f.total.index_of(s);
    require(idx >= 0, ErrorCode::unknown_vertex, "simplex outside the total complex");
    return local_degrees_by_index(f.total, f.base, f.vertex_map)[idx];
}

CoveringReport analyze(const CoveringMap& f) {
    // Recompute everything from the raw simplicial map.
    CoveringMap fresh = make_covering_map(f.total, f.base, f.vertex_map);
    CoveringReport report;
    report.degree = fresh.degree;
    report.singular_set = fresh.singular_set;
    report.pseudo_singular_set = fresh.pseudo_singular_set;
    report.branch_set = fresh.branch_set;
    report.preimage_set = fresh.preimage_set;

    std::vector<int> ld = local_degrees_by_index(fresh.total, fresh.base, fresh.vertex_map);
    for (Vertex v : fresh.total.vertices())
        report.local_degrees[v] = ld[fresh.total.index_of({v})];

    for (Vertex y : report.branch_set.vertices()) {
        std::vector<int>& orbits = report.branch_orbits[y];
        for (Vertex v : fresh.total.vertices())
            if (fresh.vertex_map.at(v) == y) orbits.push_back(report.local_degrees[v]);
        std::sort(orbits.begin(), orbits.end());
    }

    report.base_connected = fresh.base.is_connected();
    report.singular_set_good = is_good_subcomplex(fresh.total, report.singular_set);
    report.branch_set_good = is_good_subcomplex(fresh.base, report.branch_set);
    report.is_branched_covering =
        report.base_connected && report.singular_set_good && report.branch_set_good;
    return report;
}

CoveringMap identity_covering(const Complex& c) {
    std::map<Vertex, Vertex> vm;
    for (Vertex v : c.vertices()) vm[v] = v;
    return make_covering_map(c, c, std::move(vm));
}

CoveringMap compose(const CoveringMap& f, const CoveringMap& g) {
    require(f.base == g.total, ErrorCode::incompatible_complexes,
            "compose needs the first base to equal the second total");
    std::map<Vertex, Vertex> vm;
    for (const auto& [v, w] : f.vertex_map) vm[v] = g.vertex_map.at(w);
    return make_covering_map(f.total, g.base, std::move(vm));
}

std::vector<CoveringMap> covering_components(const CoveringMap& f) {
    std::vector<CoveringMap> out;
    for (const Complex& piece : f.total.connected_components()) {
        std::map<Vertex, Vertex> vm;
        for (Vertex v : piece.vertices()) vm[v] = f.vertex_map.at(v);
        out.push_back(make_covering_map(piece, f.base, std::move(vm)));
    }
    return out;
}

PermGroup monodromy_group(const CoveringMap& f) {
    require(f.total.is_connected(), ErrorCode::total_not_connected,
            "monodromy group of a disconnected total");
    MonodromyCocycle mc = extract_cocycle(f);
    std::vector<Perm> gens;
    for (const auto& [key, p] : mc.transitions)
        if (!p.is_identity()) gens.push_back(p);
    PermGroup g = gens.empty() ? PermGroup::trivial(mc.sheets) : PermGroup::generate(gens);
    require(g.orbits().size() == 1, ErrorCode::internal_error,
            "sheet transitions of a connected covering must be transitive");
    return g;
}

namespace {

// Enumerates simplicial maps phi : f.total -> g.total with g(phi(x)) = f(x),
// by seeding the least top simplex of f.total onto each fiber top of g.total
// over the same base top and propagating across shared facets.
std::vector<std::map<Vertex, Vertex>> lift_isomorphisms(const CoveringMap& f,
                                                        const CoveringMap& g,
                                                        bool want_all) {
    std::vector<std::map<Vertex, Vertex>> found;
    if (f.degree != g.degree || f.total.size() != g.total.size()) return found;
    const std::vector<Simplex>& ftops = f.total.top_simplices();
    const Simplex& seed = ftops.front();
    Simplex seed_base = f.image(seed);

    // Facet-to-top tables on both totals.
    auto facet_table = [](const Complex& c) {
        std::map<Simplex, std::vector<int>> t;
        for (size_t i = 0; i < c.top_simplices().size(); ++i)
            for (Vertex v : c.top_simplices()[i])
                t[simplex_without(c.top_simplices()[i], v)].push_back(static_cast<int>(i));
        return t;
    };
    std::map<Simplex, std::vector<int>> f_facets = facet_table(f.total);
    std::map<Simplex, std::vector<int>> g_facets = facet_table(g.total);
    const std::vector<Simplex>& gtops = g.total.top_simplices();

    for (size_t cand = 0; cand < gtops.size(); ++cand) {
        if (g.image(gtops[cand]) != seed_base) continue;
        std::map<Vertex, Vertex> phi;
        bool ok = true;
        // Vertex correspondence on the seed via the base images.
        for (Vertex v : seed) {
            Vertex target = 0;
            for (Vertex w : gtops[cand])
                if (g.vertex_map.at(w) == f.vertex_map.at(v)) target = w;
            if (!target) { ok = false; break; }
            phi[v] = target;
        }
        if (!ok) continue;

        std::vector<int> image_top(ftops.size(), -1);
        image_top[0] = static_cast<int>(cand);
        std::queue<int> q;
        q.push(0);
        while (ok && !q.empty()) {
            int i = q.front();
            q.pop();
            for (Vertex v : ftops[i]) {
                Simplex w = simplex_without(ftops[i], v);
                const std::vector<int>& cof = f_facets.at(w);
                if (cof.size() != 2) continue;
                int j = cof[0] == i ? cof[1] : cof[0];
                // Image facet and its other coface.
                Simplex w_img;
                for (Vertex u : w) w_img.push_back(phi.at(u));
                std::sort(w_img.begin(), w_img.end());
                auto git = g_facets.find(w_img);
                if (git == g_facets.end() || git->second.size() != 2) { ok = false; break; }
                int gi = image_top[i];
                int gj = git->second[0] == gi ? git->second[1] : git->second[0];
                if (git->second[0] != gi && git->second[1] != gi) { ok = false; break; }
                // The new vertex of ftops[j] must land on the new vertex of gtops[gj].
                Vertex fresh = 0, fresh_img = 0;
                for (Vertex u : ftops[j])
                    if (!simplex_contains(w, u)) fresh = u;
                for (Vertex u : gtops[gj])
                    if (!simplex_contains(w_img, u)) fresh_img = u;
                if (g.vertex_map.at(fresh_img) != f.vertex_map.at(fresh)) { ok = false; break; }
                auto it = phi.find(fresh);
                if (it != phi.end()) {
                    if (it->second != fresh_img) { ok = false; break; }
                } else {
                    phi[fresh] = fresh_img;
                }
                if (image_top[j] == -1) {
                    image_top[j] = gj;
                    q.push(j);
                } else if (image_top[j] != gj) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;

        // Global verification: phi is a bijection sending simplices to
        // simplices and commuting with the projections.
        if (phi.size() != f.total.vertices().size()) continue;
        std::set<Vertex> targets;
        for (const auto& [v, w] : phi) {
            if (g.vertex_map.at(w) != f.vertex_map.at(v)) { ok = false; break; }
            targets.insert(w);
        }
        if (!ok || targets.size() != phi.size()) continue;
        for (const Simplex& s : f.total.simplices()) {
            Simplex img;
            for (Vertex v : s) img.push_back(phi.at(v));
            std::sort(img.begin(), img.end());
            if (!g.total.contains(img)) { ok = false; break; }
        }
        if (!ok) continue;

        found.push_back(std::move(phi));
        if (!want_all) return found;
    }
    return found;
}

}  // namespace

std::vector<std::map<Vertex, Vertex>> deck_transformations(const CoveringMap& f) {
    require(f.total.is_connected(), ErrorCode::total_not_connected,
            "deck transformations of a disconnected total");
    return lift_isomorphisms(f, f, true);
}

RegularityReport regularity(const CoveringMap& f) {
    RegularityReport report;
    report.monodromy = monodromy_group(f);
    report.deck = deck_transformations(f);
    bool by_group = report.monodromy.order() == static_cast<size_t>(f.degree);
    bool by_deck = report.deck.size() == static_cast<size_t>(f.degree);
    require(by_group == by_deck, ErrorCode::internal_error,
            "deck count disagrees with the monodromy order test");
    report.regular = by_group;
    return report;
}

bool is_regular(const CoveringMap& f) { return regularity(f).regular; }

std::optional<std::map<Vertex, Vertex>> covering_isomorphism(const CoveringMap& f,
                                                             const CoveringMap& g) {
    require(f.base == g.base, ErrorCode::bases_differ,
            "covering isomorphism needs a common base");
    std::vector<std::map<Vertex, Vertex>> all = lift_isomorphisms(f, g, false);
    if (all.empty()) return std::nullopt;
    return all.front();
}

std::pair<long long, long long> rh_check(const CoveringMap& f) {
    require(f.base.dim() == 2, ErrorCode::dimension_not_two,
            "Riemann-Hurwitz check is for surfaces");
    long long chi_total = f.total.euler_characteristic();
    long long deficiency = 0;
    for (Vertex y : f.branch_set.vertices()) {
        long long preimages = 0;
        for (const auto& [v, w] : f.vertex_map)
            if (w == y) ++preimages;
        deficiency += f.degree - preimages;
    }
    return {chi_total, f.degree * f.base.euler_characteristic() - deficiency};
}

CoveringMap subdivide_covering(const CoveringMap& f) {
    Subdivision st = f.total.barycentric_subdivide();
    Subdivision sb = f.base.barycentric_subdivide();
    // Barycenter ids follow the canonical simplex order of the source
    // complexes, so the image of total barycenter v is the base barycenter
    // of the image of v's carrier.
    std::map<Vertex, Vertex> vm;
    for (Vertex v : st.complex.vertices())
        vm[v] = f.base.index_of(f.image(st.carrier[v - 1])) + 1;
    return make_covering_map(std::move(st.complex), std::move(sb.complex), std::move(vm));
}

AlignedPair align_coverings(CoveringMap f, CoveringMap g, int max_rounds) {
    for (int round = 0; f.base != g.total; ++round) {
        require(round < max_rounds, ErrorCode::incompatible_complexes,
                "maps do not meet on a common subdivision level");
        if (f.base.size() < g.total.size())
            f = subdivide_covering(f);
        else
            g = subdivide_covering(g);
    }
    return {std::move(f), std::move(g)};
}

CoveringMap compose_aligned(CoveringMap f, CoveringMap g, int max_rounds) {
    AlignedPair pair = align_coverings(std::move(f), std::move(g), max_rounds);
    return compose(pair.f, pair.g);
}

}  // namespace bfold
