#include "fixtures.hpp"

#include <algorithm>
#include <numeric>

namespace bfold::fix {

Complex octahedron() {
    std::vector<std::vector<Vertex>> faces;
    for (Vertex x : {1, 4})
        for (Vertex y : {2, 5})
            for (Vertex z : {3, 6}) faces.push_back({x, y, z});
    return Complex::close_and_validate(faces);
}

Complex projective_plane() {
    return Complex::close_and_validate({{1, 2, 3},
                                        {1, 2, 4},
                                        {1, 3, 5},
                                        {1, 4, 6},
                                        {1, 5, 6},
                                        {2, 3, 6},
                                        {2, 4, 5},
                                        {2, 5, 6},
                                        {3, 4, 5},
                                        {3, 4, 6}});
}

Complex cycle(int n) {
    std::vector<std::vector<Vertex>> edges;
    for (int i = 1; i <= n; ++i) edges.push_back({i, i % n + 1});
    return Complex::close_and_validate(edges);
}

Complex triangle() { return Complex::close_and_validate({{1, 2, 3}}); }

Complex tetrahedron_boundary() {
    return Complex::close_and_validate({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
}

Complex bipyramid(int n) {
    std::vector<std::vector<Vertex>> faces;
    for (int i = 1; i <= n; ++i) {
        faces.push_back({i, i % n + 1, n + 1});
        faces.push_back({i, i % n + 1, n + 2});
    }
    return Complex::close_and_validate(faces);
}

MonodromyCocycle seam_cocycle(const Complex& base, int sheets,
                              const std::vector<std::pair<Simplex, Perm>>& seams) {
    MonodromyCocycle mc;
    mc.base = base;
    mc.sheets = sheets;

    std::map<Simplex, int> top_index;
    const std::vector<Simplex>& tops = base.top_simplices();
    for (size_t i = 0; i < tops.size(); ++i) top_index[tops[i]] = static_cast<int>(i);

    for (const auto& [facet, p] : seams) {
        std::vector<int> cofs;
        for (const Simplex& t : base.cofaces(facet))
            if (base.is_top(t)) cofs.push_back(top_index.at(t));
        require(cofs.size() == 2, ErrorCode::param_out_of_range,
                "seam facet must have exactly two top cofaces");
        mc.set_transition(cofs[0], cofs[1], p);
    }

    // Branch locus: closure of the codimension-2 simplices with nontrivial
    // holonomy.
    std::vector<std::vector<Vertex>> branched;
    for (const Simplex& e : base.skeleton_of_dim(base.dim() - 2)) {
        for (const std::vector<int>& walk : dual_walks_around(base, e)) {
            if (walk.size() < 2 || walk.front() != walk.back()) continue;
            Perm holonomy = Perm::identity(sheets);
            for (size_t k = 0; k + 1 < walk.size(); ++k)
                holonomy = mc.transition(walk[k], walk[k + 1]) * holonomy;
            if (!holonomy.is_identity()) branched.push_back(e);
        }
    }
    if (!branched.empty()) mc.branch_locus = Complex::close_and_validate(branched);
    return mc;
}

MonodromyCocycle two_pole_cocycle() {
    Perm swap = Perm::parse("(1 2)", 2);
    return seam_cocycle(octahedron(), 2, {{{1, 2}, swap}, {{2, 4}, swap}});
}

MonodromyCocycle equator_cocycle() {
    Perm swap = Perm::parse("(1 2)", 2);
    return seam_cocycle(octahedron(), 2, {{{2, 3}, swap}, {{3, 5}, swap}});
}

MonodromyCocycle three_point_cocycle() {
    return seam_cocycle(octahedron(), 3,
                        {{{1, 2}, Perm::parse("(1 2)", 3)},
                         {{2, 4}, Perm::parse("(2 3)", 3)}});
}

MonodromyCocycle intransitive_cocycle() {
    Perm swap = Perm::parse("(1 2)", 3);
    return seam_cocycle(octahedron(), 3, {{{1, 2}, swap}, {{2, 4}, swap}});
}

SimplicialAction oct_half_turn() {
    return {octahedron(), PermGroup::generate({Perm::parse("(1 4)(2 5)", 6)})};
}

SimplicialAction oct_antipodal() {
    return {octahedron(), PermGroup::generate({Perm::parse("(1 4)(2 5)(3 6)", 6)})};
}

SimplicialAction oct_reflection() {
    return {octahedron(), PermGroup::generate({Perm::parse("(1 4)", 6)})};
}

SimplicialAction disk_rotation() {
    return {cycle(12).cone(13),
            PermGroup::generate({Perm::parse("(1 3 5 7 9 11)(2 4 6 8 10 12)", 13)})};
}

SimplicialAction bipyramid_dihedral() {
    return {bipyramid(6), PermGroup::generate({Perm::parse("(1 3 5)(2 4 6)", 8),
                                               Perm::parse("(2 6)(3 5)(7 8)", 8)})};
}

Complex octahedron_cone() { return octahedron().cone(7); }

Chart ball_chart() {
    // Built once per process; chart construction subdivides and quotients.
    static const Chart cached = [] {
        Perm sigma = Perm::parse("(1 4)(2 5)", 7);
        Perm rho = Perm::parse("(2 5)(3 6)", 7);
        return make_chart({octahedron_cone(), PermGroup::generate({sigma, rho})},
                          PermGroup::generate({sigma}), PermGroup::generate({rho}), 7);
    }();
    return cached;
}

Chart symmetric_cone_chart() {
    static const Chart cached = [] {
        RegularizationResult mr =
            minimal_regularization(fox_complete(three_point_cocycle()));
        Vertex apex = 0;
        for (Vertex v : mr.r.total.vertices()) apex = std::max(apex, v);
        apex += 1;
        Complex p = mr.r.total.cone(apex);
        std::vector<Perm> deck;
        for (const std::map<Vertex, Vertex>& d : deck_transformations(mr.r)) {
            std::vector<int> img(apex);
            for (int x = 1; x <= apex; ++x) img[x - 1] = x - 1;
            for (const auto& [x, y] : d) img[x - 1] = y - 1;
            deck.push_back(Perm(std::move(img)));
        }
        PermGroup g = PermGroup::from_elements(deck);
        Perm transposition;
        for (const Perm& e : g.elements())
            if (e.order() == 2) {
                transposition = e;
                break;
            }
        PermGroup h = subgroup_generated({transposition}, apex);
        return make_chart({std::move(p), g}, std::move(h), g, apex);
    }();
    return cached;
}

Chart bipyramid_chart() {
    SimplicialAction a = bipyramid_dihedral();
    PermGroup h = PermGroup::generate({Perm::parse("(2 6)(3 5)(7 8)", 8)});
    PermGroup k = PermGroup::generate({Perm::parse("(1 3 5)(2 4 6)", 8)});
    return make_chart(std::move(a), std::move(h), std::move(k), std::nullopt);
}

Chart disk12_chart(int h, int k) {
    require(h >= 1 && k >= 1 && 12 % h == 0 && 12 % k == 0,
            ErrorCode::param_out_of_range, "rim-shift orders must divide 12");
    auto shift = [](int m) {
        std::vector<int> img(13);
        for (int i = 1; i <= 12; ++i) img[i - 1] = (i - 1 + m) % 12;
        img[12] = 12;
        return Perm(std::move(img));
    };
    int l = std::lcm(h, k);
    PermGroup g = subgroup_generated({shift(12 / l)}, 13);
    PermGroup hh = subgroup_generated({shift(12 / h)}, 13);
    PermGroup kk = subgroup_generated({shift(12 / k)}, 13);
    return make_chart({cycle(12).cone(13), std::move(g)}, std::move(hh),
                      std::move(kk), 13);
}

}  // namespace bfold::fix
