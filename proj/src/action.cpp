#include "bfold/action.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "bfold/goodness.hpp"

namespace bfold {

namespace {

Simplex apply_to_simplex(const Perm& g, const Simplex& s) {
    Simplex out;
    out.reserve(s.size());
    for (Vertex v : s) out.push_back(g.apply(v));
    std::sort(out.begin(), out.end());
    return out;
}

// Least orbit member per vertex of {1..degree}.
std::map<int, int> orbit_least_map(const PermGroup& g) {
    std::map<int, int> least;
    for (const auto& orbit : g.orbits())
        for (int v : orbit) least[v] = orbit.front();
    return least;
}

Simplex orbit_image(const Simplex& s, const std::map<int, int>& least) {
    Simplex img;
    img.reserve(s.size());
    for (Vertex v : s) img.push_back(least.at(v));
    std::sort(img.begin(), img.end());
    return img;
}

}  // namespace

ActionReport validate_action_report(const SimplicialAction& a) {
    ActionReport rep;
    const Complex& c = a.complex;
    rep.simplicial = !c.empty() &&
                     (c.vertices().empty() || c.vertices().back() <= a.group.degree());
    if (rep.simplicial) {
        for (const Perm& g : a.group.generators()) {
            for (const Simplex& s : c.simplices()) {
                if (!c.contains(apply_to_simplex(g, s))) {
                    rep.simplicial = false;
                    break;
                }
            }
            if (!rep.simplicial) break;
        }
    }
    rep.effective = true;
    if (rep.simplicial) {
        for (const Perm& e : a.group.elements()) {
            if (e.is_identity()) continue;
            bool moves = false;
            for (Vertex v : c.vertices())
                if (e.apply(v) != v) { moves = true; break; }
            if (!moves) { rep.effective = false; break; }
        }
    }
    return rep;
}

bool validate_action(const SimplicialAction& a) {
    ActionReport rep = validate_action_report(a);
    require(rep.simplicial, ErrorCode::not_simplicial,
            "a group element does not carry simplices to simplices");
    require(rep.effective, ErrorCode::not_effective,
            "a nontrivial group element fixes every vertex");
    return true;
}

SimplicialAction subdivide_action(const SimplicialAction& a) {
    Subdivision sd = a.complex.barycentric_subdivide();
    const int n = static_cast<int>(sd.carrier.size());
    std::vector<Perm> gens;
    gens.reserve(a.group.generators().size());
    for (const Perm& g : a.group.generators()) {
        std::vector<int> img(n);
        for (int id = 1; id <= n; ++id) {
            // The barycenter of s is numbered index_of(s)+1, so the 0-based
            // image of id is exactly the index of the moved carrier.
            int target = a.complex.index_of(apply_to_simplex(g, sd.carrier[id - 1]));
            require(target >= 0, ErrorCode::not_simplicial,
                    "a group element does not carry simplices to simplices");
            img[id - 1] = target;
        }
        gens.push_back(Perm(std::move(img)));
    }
    PermGroup lifted = gens.empty() ? PermGroup::trivial(n) : PermGroup::generate(gens);
    return {std::move(sd.complex), std::move(lifted)};
}

bool quotient_conditions(const Complex& c, const PermGroup& g) {
    std::map<int, int> least = orbit_least_map(g);
    // (i) orbits meet each simplex at most once.
    for (const Simplex& s : c.simplices()) {
        std::set<int> classes;
        for (Vertex v : s) classes.insert(least.at(v));
        if (classes.size() != s.size()) return false;
    }
    // (ii) the vertex-orbit image separates simplex orbits.  Each orbit is
    // keyed by its lexicographically least member.
    std::map<Simplex, Simplex> image_to_orbit;
    for (const Simplex& s : c.simplices()) {
        Simplex key = s;
        for (const Perm& e : g.elements()) {
            Simplex moved = apply_to_simplex(e, s);
            if (moved < key) key = std::move(moved);
        }
        auto [it, fresh] = image_to_orbit.try_emplace(orbit_image(s, least), key);
        if (!fresh && it->second != key) return false;
    }
    return true;
}

int quotient_level(const SimplicialAction& a) {
    validate_action(a);
    SimplicialAction cur = a;
    for (int level = 0; level <= 2; ++level) {
        if (level > 0) cur = subdivide_action(cur);
        if (quotient_conditions(cur.complex, cur.group)) return level;
    }
    fail(ErrorCode::internal_error,
         "quotient conditions fail on the second barycentric subdivision");
}

QuotientData quotient_at_level(const SimplicialAction& a, int level) {
    validate_action(a);
    require(level >= 0, ErrorCode::param_out_of_range, "negative subdivision level");
    SimplicialAction cur = a;
    for (int k = 0; k < level; ++k) cur = subdivide_action(cur);
    require(quotient_conditions(cur.complex, cur.group), ErrorCode::param_out_of_range,
            "quotient is not simplicial at this subdivision level");

    std::map<int, int> least = orbit_least_map(cur.group);
    std::set<Simplex> images;
    for (const Simplex& s : cur.complex.simplices()) images.insert(orbit_image(s, least));
    Complex q = Complex::from_simplices(std::vector<Simplex>(images.begin(), images.end()));

    std::map<Vertex, Vertex> vm;
    for (Vertex v : cur.complex.vertices()) vm[v] = least.at(v);
    CoveringMap proj = make_covering_map(cur.complex, q, vm);

    // Singular set: simplices pointwise fixed by a nontrivial element that
    // does not fix their vertices' stars pointwise.
    std::map<Vertex, std::set<Vertex>> star_vertices;
    for (const Simplex& s : cur.complex.simplices())
        for (Vertex v : s) star_vertices[v].insert(s.begin(), s.end());
    std::set<Simplex> singular;
    for (const Perm& e : cur.group.elements()) {
        if (e.is_identity()) continue;
        std::set<Vertex> fixed;
        for (Vertex v : cur.complex.vertices()) {
            if (e.apply(v) != v) continue;
            bool star_fixed = true;
            for (Vertex w : star_vertices[v])
                if (e.apply(w) != w) { star_fixed = false; break; }
            if (!star_fixed) fixed.insert(v);
        }
        if (fixed.empty()) continue;
        for (const Simplex& s : cur.complex.simplices()) {
            bool all = true;
            for (Vertex v : s)
                if (!fixed.count(v)) { all = false; break; }
            if (all) singular.insert(s);
        }
    }
    Complex s_g = Complex::from_simplices(std::vector<Simplex>(singular.begin(), singular.end()));
    std::set<Simplex> downstairs;
    for (const Simplex& s : singular) downstairs.insert(orbit_image(s, least));
    Complex b_g =
        Complex::from_simplices(std::vector<Simplex>(downstairs.begin(), downstairs.end()));

    QuotientData out;
    out.quotient = std::move(q);
    out.projection = std::move(proj);
    out.s_g = std::move(s_g);
    out.b_g = std::move(b_g);
    out.level = level;
    out.lifted = std::move(cur);
    return out;
}

QuotientData quotient(const SimplicialAction& a) {
    return quotient_at_level(a, quotient_level(a));
}

bool is_good_action(const SimplicialAction& a) {
    QuotientData q = quotient(a);
    const Complex& upstairs = q.projection.total;
    bool good = is_good_subcomplex(upstairs, q.s_g);
    if (upstairs.is_pseudo_manifold()) {
        bool codim_ok = q.s_g.dim() <= upstairs.dim() - 2;
        require(good == codim_ok, ErrorCode::internal_error,
                "goodness and the codimension test disagree on a pseudo-manifold");
    }
    return good;
}

CoveringMap projection_as_covering(const SimplicialAction& a) {
    QuotientData q = quotient(a);
    require(is_good_subcomplex(q.projection.total, q.s_g), ErrorCode::not_good_action,
            "the singular set of the action is not a good subcomplex");
    require(q.quotient.is_connected(), ErrorCode::total_not_connected,
            "projection of an action needs a connected quotient");
    require(q.projection.degree == static_cast<int>(a.group.order()),
            ErrorCode::internal_error, "projection degree differs from the group order");
    RegularityReport reg = regularity(q.projection);
    require(reg.regular, ErrorCode::internal_error,
            "projection of a good action must be regular");
    return q.projection;
}

RestrictionResult restrict_to_subgroup(const SimplicialAction& a, const PermGroup& h) {
    validate_action(a);
    require(h.degree() == a.group.degree() && h.is_subgroup_of(a.group),
            ErrorCode::not_subgroup, "h is not a subgroup of the acting group");

    // Smallest level at which both quotients are simplicial.
    SimplicialAction g_cur = a;
    SimplicialAction h_cur{a.complex, h};
    int level = -1;
    for (int k = 0; k <= 2; ++k) {
        if (k > 0) {
            g_cur = subdivide_action(g_cur);
            h_cur = subdivide_action(h_cur);
        }
        if (quotient_conditions(g_cur.complex, g_cur.group) &&
            quotient_conditions(h_cur.complex, h_cur.group)) {
            level = k;
            break;
        }
    }
    require(level >= 0, ErrorCode::internal_error,
            "quotient conditions fail on the second barycentric subdivision");

    QuotientData qg = quotient_at_level(a, level);
    QuotientData qh = quotient_at_level({a.complex, h}, level);

    // Orbit-least vertices of P/h are vertices upstairs; mapping them through
    // the G-projection is the induced simplicial map P/h -> P/G.
    std::map<Vertex, Vertex> vm;
    for (Vertex v : qh.quotient.vertices()) vm[v] = qg.projection.vertex_map.at(v);
    CoveringMap mid = make_covering_map(qh.quotient, qg.quotient, vm);

    RestrictionResult out;
    out.restricted = SimplicialAction{a.complex, h};
    out.level = level;
    out.upper = std::move(qh.projection);
    out.lower = std::move(qg.projection);
    out.intermediate = std::move(mid);
    return out;
}

}  // namespace bfold
