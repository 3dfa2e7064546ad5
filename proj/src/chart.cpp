#include "bfold/chart.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "bfold/error.hpp"
#include "bfold/monodromy.hpp"
#include "internal.hpp"

namespace bfold {

using internal::deck_perms;
using internal::lift_vertex;
using internal::preserves_orientation;
using internal::rebase;
using internal::restrict_total;
using internal::subdivide_times;
using internal::top_index_map;

namespace {

struct LevelData {
    int level = -1;  // -1: no level <= 2 satisfies the quotient conditions
    SimplicialAction g, h, k;
};

// Smallest subdivision level at which all three quotients are simplicial.
LevelData common_level(const SimplicialAction& action, const PermGroup& h,
                       const PermGroup& k) {
    LevelData out;
    out.g = action;
    out.h = {action.complex, h};
    out.k = {action.complex, k};
    for (int lvl = 0; lvl <= 2; ++lvl) {
        if (quotient_conditions(out.g.complex, out.g.group) &&
            quotient_conditions(out.h.complex, out.h.group) &&
            quotient_conditions(out.k.complex, out.k.group)) {
            out.level = lvl;
            return out;
        }
        if (lvl < 2) {
            out.g = subdivide_action(out.g);
            out.h = subdivide_action(out.h);
            out.k = subdivide_action(out.k);
        }
    }
    return out;
}

struct BuildResult {
    ChartReport report;
    std::optional<Chart> chart;
};

BuildResult build_chart(const SimplicialAction& action, const PermGroup& h,
                        const PermGroup& k, std::optional<Vertex> apex) {
    BuildResult out;
    ChartReport& rep = out.report;
    rep.action = validate_action_report(action);
    if (!rep.action.valid()) return out;
    rep.relations = subgroup_relations(action.group, h, k);
    if (!rep.relations.h_subgroup || !rep.relations.k_normal ||
        !rep.relations.product_is_g)
        return out;

    const Complex& p = action.complex;
    rep.p_connected = p.is_connected();
    rep.p_oriented = p.is_pseudo_manifold_with_boundary() && p.orient().orientable;
    if (!rep.p_connected || !rep.p_oriented) return out;

    if (apex) {
        rep.apex_ok = p.contains_vertex(*apex);
        if (rep.apex_ok)
            for (const Perm& e : action.group.elements())
                if (e.apply(*apex) != *apex) {
                    rep.apex_ok = false;
                    break;
                }
        if (!rep.apex_ok) return out;
    }

    try {
        rep.action_good = is_good_action(action);
        if (!rep.action_good) return out;

        LevelData lv = common_level(action, h, k);
        rep.quotient_ok = lv.level >= 0;
        if (!rep.quotient_ok) return out;

        Chart c;
        c.action = action;
        c.h = h;
        c.k = k;
        c.apex = apex;
        c.level = lv.level;

        QuotientData qg = quotient_at_level(action, lv.level);
        QuotientData qh = quotient_at_level({p, h}, lv.level);
        QuotientData qk = quotient_at_level({p, k}, lv.level);
        c.lifted = qg.lifted;
        c.h_lifted = qh.lifted.group;
        c.k_lifted = qk.lifted.group;
        if (apex) c.apex_lifted = lift_vertex(p, *apex, lv.level);
        c.u = qh.quotient;
        c.v = qk.quotient;
        c.pmodg = qg.quotient;
        c.pi_h = std::move(qh.projection);
        c.pi_k = std::move(qk.projection);
        c.pi_g = std::move(qg.projection);

        rep.v_oriented =
            c.v.is_pseudo_manifold_with_boundary() && c.v.orient().orientable;
        if (!rep.v_oriented) return out;

        // The induced action of G/K on V: effectiveness is measured by the
        // number of distinct induced vertex maps, orientation on generators.
        const std::vector<Vertex> v_vertices = c.v.vertices();
        std::set<std::vector<Vertex>> rows;
        for (const Perm& a : c.lifted.group.elements()) {
            std::vector<Vertex> row;
            row.reserve(v_vertices.size());
            for (Vertex w : v_vertices) row.push_back(c.pi_k.vertex_map.at(a.apply(w)));
            rows.insert(std::move(row));
        }
        rep.gk_effective = rows.size() * k.order() == action.group.order();
        if (!rep.gk_effective) return out;

        Orientation vo = c.v.orient();
        std::map<Simplex, int> vtops = top_index_map(c.v);
        rep.gk_oriented = true;
        for (const Perm& a : c.lifted.group.generators()) {
            std::map<Vertex, Vertex> im;
            for (Vertex w : v_vertices) im[w] = c.pi_k.vertex_map.at(a.apply(w));
            if (!preserves_orientation(c.v, vo, vtops, im)) {
                rep.gk_oriented = false;
                break;
            }
        }
        if (!rep.gk_oriented) return out;

        std::map<Vertex, Vertex> p_vm, pgk_vm;
        for (Vertex uv : c.u.vertices()) p_vm[uv] = c.pi_g.vertex_map.at(uv);
        for (Vertex vv : v_vertices) pgk_vm[vv] = c.pi_g.vertex_map.at(vv);
        rep.commutes = true;
        for (Vertex x : c.lifted.complex.vertices()) {
            Vertex gx = c.pi_g.vertex_map.at(x);
            if (p_vm.at(c.pi_h.vertex_map.at(x)) != gx ||
                pgk_vm.at(c.pi_k.vertex_map.at(x)) != gx) {
                rep.commutes = false;
                break;
            }
        }
        if (!rep.commutes) return out;

        c.p = make_covering_map(c.u, c.pmodg, std::move(p_vm));
        c.p_gk = make_covering_map(c.v, c.pmodg, std::move(pgk_vm));
        rep.coverings_ok = analyze(c.pi_h).is_branched_covering &&
                           analyze(c.pi_k).is_branched_covering &&
                           analyze(c.pi_g).is_branched_covering &&
                           analyze(c.p).is_branched_covering &&
                           analyze(c.p_gk).is_branched_covering;
        if (!rep.coverings_ok) return out;

        out.chart = std::move(c);
    } catch (const Error&) {
        // a stage that cannot even be built leaves its flag false
    }
    return out;
}

std::string failed_flags(const ChartReport& r) {
    std::vector<std::string> bad;
    if (!r.action.simplicial) bad.push_back("simplicial");
    if (!r.action.effective) bad.push_back("effective");
    if (!r.relations.h_subgroup) bad.push_back("h_subgroup");
    if (!r.relations.k_normal) bad.push_back("k_normal");
    if (!r.relations.product_is_g) bad.push_back("product_is_g");
    if (!r.p_connected) bad.push_back("p_connected");
    if (!r.p_oriented) bad.push_back("p_oriented");
    if (!r.apex_ok) bad.push_back("apex_ok");
    if (!r.action_good) bad.push_back("action_good");
    if (!r.quotient_ok) bad.push_back("quotient_ok");
    if (!r.v_oriented) bad.push_back("v_oriented");
    if (!r.gk_effective) bad.push_back("gk_effective");
    if (!r.gk_oriented) bad.push_back("gk_oriented");
    if (!r.commutes) bad.push_back("commutes");
    if (!r.coverings_ok) bad.push_back("coverings_ok");
    std::string text;
    for (const std::string& flag : bad) {
        if (!text.empty()) text += ", ";
        text += flag;
    }
    return text;
}

}  // namespace

ChartReport validate_chart(const SimplicialAction& action, const PermGroup& h,
                           const PermGroup& k, std::optional<Vertex> apex) {
    return build_chart(action, h, k, apex).report;
}

ChartReport validate_chart(const Chart& c) {
    return validate_chart(c.action, c.h, c.k, c.apex);
}

Chart make_chart(SimplicialAction action, PermGroup h, PermGroup k,
                 std::optional<Vertex> apex) {
    BuildResult b = build_chart(action, h, k, apex);
    if (b.chart) return std::move(*b.chart);
    fail(ErrorCode::chart_invalid, "chart invariants failed: " + failed_flags(b.report));
}

Chart disk_model(int h, int k) {
    require(h >= 1 && k >= 1, ErrorCode::param_out_of_range,
            "disk model orders must be positive");
    long long l = std::lcm(static_cast<long long>(h), static_cast<long long>(k));
    require(l <= 100, ErrorCode::param_out_of_range, "disk model rim too large");
    int n = std::max(static_cast<int>(2 * l), 3);
    std::vector<std::vector<Vertex>> rim;
    for (int i = 1; i <= n; ++i) rim.push_back({i, i % n + 1});
    Complex disk = Complex::close_and_validate(rim).cone(n + 1);
    auto shift = [&](int m) {
        std::vector<int> img(n + 1);
        for (int i = 1; i <= n; ++i) img[i - 1] = (i - 1 + m) % n;
        img[n] = n;
        return Perm(std::move(img));
    };
    PermGroup g = subgroup_generated({shift(n / static_cast<int>(l))}, n + 1);
    PermGroup hh = subgroup_generated({shift(n / h)}, n + 1);
    PermGroup kk = subgroup_generated({shift(n / k)}, n + 1);
    return make_chart({std::move(disk), std::move(g)}, std::move(hh), std::move(kk),
                      n + 1);
}

Chart subdivide_chart(const Chart& c) {
    SimplicialAction sg = subdivide_action(c.action);
    SimplicialAction sh = subdivide_action({c.action.complex, c.h});
    SimplicialAction sk = subdivide_action({c.action.complex, c.k});
    std::optional<Vertex> apex;
    if (c.apex) apex = c.action.complex.index_of({*c.apex}) + 1;
    return make_chart(std::move(sg), std::move(sh.group), std::move(sk.group), apex);
}

bool is_conical(const Chart& c) {
    return c.apex && c.action.complex.star({*c.apex}) == c.action.complex;
}

std::string fraction_text(const IndexFraction& f) {
    if (f.den == 1) return std::to_string(f.num);
    return std::to_string(f.num) + "/" + std::to_string(f.den);
}

IndexFraction chart_index(const Chart& c) {
    require(is_conical(c), ErrorCode::not_conical, "index of a non-conical chart");
    long long hn = static_cast<long long>(c.h.order());
    long long kn = static_cast<long long>(c.k.order());
    long long g = std::gcd(hn, kn);
    return {hn / g, kn / g};
}

Chart conical_restriction(const Chart& c, Vertex x) {
    require(c.action.complex.contains_vertex(x), ErrorCode::unknown_vertex,
            "restriction at a vertex outside the complex");
    Complex star = c.action.complex.star({x});
    auto stabilizer = [&](const PermGroup& grp) {
        std::vector<Perm> fixed;
        for (const Perm& e : grp.elements())
            if (e.apply(x) == x) fixed.push_back(e);
        return PermGroup::from_elements(std::move(fixed));
    };
    PermGroup hs = stabilizer(c.h);
    PermGroup ks = stabilizer(c.k);
    std::vector<Perm> gens = hs.elements();
    gens.insert(gens.end(), ks.elements().begin(), ks.elements().end());
    PermGroup gs = subgroup_generated(gens, c.action.group.degree());
    return make_chart({std::move(star), std::move(gs)}, std::move(hs), std::move(ks), x);
}

namespace {

// The chart collapsed by a normal subgroup n of G contained in H and K: the
// quotient complex P/n with the image groups G/n, H/n, K/n acting on it.
ChartReduction chart_mod_normal(const Chart& c, const PermGroup& n) {
    if (n.is_trivial())
        return {c, n, identity_covering(c.action.complex)};
    QuotientData qn = quotient({c.action.complex, n});

    SimplicialAction ag = c.action;
    SimplicialAction ah{c.action.complex, c.h};
    SimplicialAction ak{c.action.complex, c.k};
    std::optional<Vertex> apex = c.apex;
    for (int i = 0; i < qn.level; ++i) {
        if (apex) apex = ag.complex.index_of({*apex}) + 1;
        ag = subdivide_action(ag);
        ah = subdivide_action(ah);
        ak = subdivide_action(ak);
    }

    const std::vector<Vertex> qverts = qn.quotient.vertices();
    std::set<Vertex> qset(qverts.begin(), qverts.end());
    int deg = std::max({ag.group.degree(), ah.group.degree(), ak.group.degree()});
    // The induced permutation on the quotient: orbit representatives map to
    // the representatives of their images, everything else stays fixed.
    auto image_perm = [&](const Perm& a) {
        std::vector<int> img(deg);
        for (int x = 1; x <= deg; ++x) {
            int y = x <= a.degree() ? a.apply(x) : x;
            img[x - 1] = (qset.count(x) ? qn.projection.vertex_map.at(y) : x) - 1;
        }
        return Perm(std::move(img));
    };
    auto image_group = [&](const SimplicialAction& act) {
        std::vector<Perm> gens;
        for (const Perm& e : act.group.generators()) gens.push_back(image_perm(e));
        return gens.empty() ? PermGroup::trivial(deg) : subgroup_generated(gens, deg);
    };
    PermGroup gq = image_group(ag);
    PermGroup hq = image_group(ah);
    PermGroup kq = image_group(ak);
    std::optional<Vertex> apexq;
    if (apex) apexq = qn.projection.vertex_map.at(*apex);

    Chart chart = make_chart({qn.quotient, std::move(gq)}, std::move(hq),
                             std::move(kq), apexq);
    return {std::move(chart), n, std::move(qn.projection)};
}

}  // namespace

ChartReduction reduce_chart(const Chart& c) {
    return chart_mod_normal(c, group_core(c.action.group, group_intersection(c.h, c.k)));
}

bool is_reduced(const Chart& c) {
    return group_core(c.action.group, group_intersection(c.h, c.k)).is_trivial();
}

namespace {

constexpr size_t iso_group_cap = 24;
constexpr size_t iso_size_cap = 6000;

// The acting data of a chart without its derived quotients; cheap to
// subdivide when two charts must be compared across triangulations.
struct ChartShape {
    Complex p;
    PermGroup g, h, k;
    std::optional<Vertex> apex;
};

ChartShape shape_of(const Chart& c) {
    return {c.action.complex, c.action.group, c.h, c.k, c.apex};
}

ChartShape subdivide_shape(const ChartShape& s) {
    SimplicialAction sg = subdivide_action({s.p, s.g});
    SimplicialAction sh = subdivide_action({s.p, s.h});
    SimplicialAction sk = subdivide_action({s.p, s.k});
    std::optional<Vertex> apex;
    if (s.apex) apex = s.p.index_of({*s.apex}) + 1;
    return {std::move(sg.complex), std::move(sg.group), std::move(sh.group),
            std::move(sk.group), apex};
}

// All vertex-image rows of a group over a fixed vertex list.
std::set<std::vector<Vertex>> action_table(const PermGroup& grp,
                                           const std::vector<Vertex>& verts) {
    std::set<std::vector<Vertex>> rows;
    for (const Perm& e : grp.elements()) {
        std::vector<Vertex> row;
        row.reserve(verts.size());
        for (Vertex v : verts) row.push_back(e.apply(v));
        rows.insert(std::move(row));
    }
    return rows;
}

// Exact chart isomorphism search: a backtracking simplicial isomorphism of
// the complexes that conjugates G into G, H into H and K into K, pinning the
// apexes onto each other when both charts have one.
std::optional<std::map<Vertex, Vertex>> iso_search(const ChartShape& a,
                                                   const ChartShape& b) {
    if (a.g.order() != b.g.order() || a.h.order() != b.h.order() ||
        a.k.order() != b.k.order())
        return std::nullopt;
    if (a.p.size() != b.p.size() || a.p.dim() != b.p.dim()) return std::nullopt;
    const std::vector<Vertex> va = a.p.vertices();
    const std::vector<Vertex> vb = b.p.vertices();
    if (va.size() != vb.size()) return std::nullopt;

    // vertex signatures: star-simplex counts by dimension
    auto signature = [](const Complex& c, Vertex v) {
        std::vector<int> sig(static_cast<size_t>(c.dim()) + 1, 0);
        for (const Simplex& s : c.star_simplices({v})) sig[s.size() - 1]++;
        return sig;
    };
    std::map<Vertex, std::vector<int>> siga, sigb;
    std::map<std::vector<int>, std::vector<Vertex>> classes_b;
    for (Vertex v : va) siga[v] = signature(a.p, v);
    for (Vertex w : vb) {
        sigb[w] = signature(b.p, w);
        classes_b[sigb[w]].push_back(w);
    }
    {
        std::map<std::vector<int>, int> count_a;
        for (const auto& [v, sig] : siga) count_a[sig]++;
        for (const auto& [sig, members] : classes_b)
            if (count_a[sig] != static_cast<int>(members.size())) return std::nullopt;
    }

    // Facet-adjacency data: an isomorphism of pseudo-manifolds is rigid once
    // one top simplex is placed, so the search seeds a single top simplex and
    // propagates across shared facets.  Backtracking only happens where the
    // dual graph is disconnected or a facet has more than two cofacets.
    const std::vector<Simplex> tops_a = a.p.top_simplices();
    const std::vector<Simplex> tops_b = b.p.top_simplices();
    if (tops_a.size() != tops_b.size()) return std::nullopt;
    const int nt = static_cast<int>(tops_a.size());

    auto facets_of = [](const Simplex& t) {
        std::vector<Simplex> out;
        out.reserve(t.size());
        for (size_t j = 0; j < t.size(); ++j) {
            Simplex f;
            f.reserve(t.size() - 1);
            for (size_t l = 0; l < t.size(); ++l)
                if (l != j) f.push_back(t[l]);
            out.push_back(std::move(f));
        }
        return out;
    };
    auto facet_index = [&](const std::vector<Simplex>& tops) {
        std::map<Simplex, std::vector<int>> idx;
        for (int i = 0; i < static_cast<int>(tops.size()); ++i)
            for (Simplex& f : facets_of(tops[i])) idx[std::move(f)].push_back(i);
        return idx;
    };
    const std::map<Simplex, std::vector<int>> fac_a = facet_index(tops_a);
    const std::map<Simplex, std::vector<int>> fac_b = facet_index(tops_b);

    const std::set<std::vector<Vertex>> table_g = action_table(b.g, vb);
    const std::set<std::vector<Vertex>> table_h = action_table(b.h, vb);
    const std::set<std::vector<Vertex>> table_k = action_table(b.k, vb);

    std::map<Vertex, Vertex> phi, inv;
    std::vector<int> timg(nt, -1);
    std::vector<char> used_b(nt, 0);

    auto bind = [&](Vertex v, Vertex w, std::vector<Vertex>& vtrail) {
        auto it = phi.find(v);
        if (it != phi.end()) return it->second == w;
        if (inv.count(w)) return false;
        if (siga.at(v) != sigb.at(w)) return false;
        if (a.apex && b.apex && ((v == *a.apex) != (w == *b.apex))) return false;
        phi[v] = w;
        inv[w] = v;
        vtrail.push_back(v);
        return true;
    };
    auto place_top = [&](int t, int img, std::vector<int>& ttrail) {
        timg[t] = img;
        used_b[img] = 1;
        ttrail.push_back(t);
    };
    auto rollback = [&](std::vector<Vertex>& vtrail, std::vector<int>& ttrail) {
        for (int t : ttrail) {
            used_b[timg[t]] = 0;
            timg[t] = -1;
        }
        for (Vertex v : vtrail) {
            inv.erase(phi.at(v));
            phi.erase(v);
        }
    };

    // Walk the dual graph out of the tops already placed, extending the
    // vertex map one forced vertex at a time.
    auto propagate = [&](std::vector<int> stack, std::vector<Vertex>& vtrail,
                         std::vector<int>& ttrail) {
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (const Simplex& f : facets_of(tops_a[t])) {
                Simplex fi;
                fi.reserve(f.size());
                for (Vertex v : f) fi.push_back(phi.at(v));
                std::sort(fi.begin(), fi.end());
                const std::vector<int>& around_a = fac_a.at(f);
                auto itb = fac_b.find(fi);
                size_t valence_b = itb == fac_b.end() ? 0 : itb->second.size();
                if (around_a.size() != valence_b) return false;
                if (around_a.size() != 2) continue;  // boundary or ambiguous
                int u = around_a[0] == t ? around_a[1] : around_a[0];
                int w = itb->second[0] == timg[t] ? itb->second[1] : itb->second[0];
                if (timg[u] != -1) {
                    if (timg[u] != w) return false;
                    continue;
                }
                if (used_b[w]) return false;
                Vertex ru = 0, rw = 0;
                for (Vertex v : tops_a[u])
                    if (!std::binary_search(f.begin(), f.end(), v)) ru = v;
                for (Vertex v : tops_b[w])
                    if (!std::binary_search(fi.begin(), fi.end(), v)) rw = v;
                if (!bind(ru, rw, vtrail)) return false;
                place_top(u, w, ttrail);
                stack.push_back(u);
            }
        }
        return true;
    };

    auto conjugates = [&](const PermGroup& ga, const std::set<std::vector<Vertex>>& tb) {
        for (const Perm& gen : ga.generators()) {
            std::vector<Vertex> row;
            row.reserve(vb.size());
            for (Vertex w : vb) row.push_back(phi.at(gen.apply(inv.at(w))));
            if (!tb.count(row)) return false;
        }
        return true;
    };
    auto complete = [&] {
        for (const Simplex& s : a.p.simplices()) {
            Simplex img;
            img.reserve(s.size());
            for (Vertex v : s) img.push_back(phi.at(v));
            std::sort(img.begin(), img.end());
            if (!b.p.contains(img)) return false;
        }
        return conjugates(a.g, table_g) && conjugates(a.h, table_h) &&
               conjugates(a.k, table_k);
    };

    std::function<bool()> solve = [&]() -> bool {
        int next = -1;
        size_t best_mapped = 0;
        for (int i = 0; i < nt; ++i) {
            if (timg[i] != -1) continue;
            size_t mapped = 0;
            for (Vertex v : tops_a[i]) mapped += phi.count(v);
            if (next == -1 || mapped > best_mapped) {
                next = i;
                best_mapped = mapped;
            }
        }
        if (next == -1) return complete();
        const Simplex& ta = tops_a[next];
        for (int bi = 0; bi < nt; ++bi) {
            if (used_b[bi] || tops_b[bi].size() != ta.size()) continue;
            std::vector<Vertex> perm = tops_b[bi];
            do {
                std::vector<Vertex> vtrail;
                std::vector<int> ttrail;
                bool ok = true;
                for (size_t j = 0; j < ta.size() && ok; ++j)
                    ok = bind(ta[j], perm[j], vtrail);
                if (ok) {
                    place_top(next, bi, ttrail);
                    if (propagate({next}, vtrail, ttrail) && solve()) return true;
                }
                rollback(vtrail, ttrail);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        return false;
    };
    if (!solve()) return std::nullopt;
    return phi;
}

struct AlignedIso {
    std::map<Vertex, Vertex> map;
    int rounds_a = 0;
    int rounds_b = 0;
};

// Isomorphism up to triangulation: both shapes may be barycentrically
// subdivided a few rounds before the exact search runs.  Attempts are gated
// on matching sizes, so at most one pairing per round is searched.
std::optional<AlignedIso> aligned_isomorphism(const ChartShape& a, const ChartShape& b,
                                              int max_rounds = 2) {
    if (a.g.order() != b.g.order() || a.h.order() != b.h.order() ||
        a.k.order() != b.k.order())
        return std::nullopt;
    if (a.g.order() > iso_group_cap || b.g.order() > iso_group_cap)
        return std::nullopt;
    std::vector<ChartShape> ta{a}, tb{b};
    for (int ra = 0; ra <= max_rounds; ++ra) {
        if (ra > 0) ta.push_back(subdivide_shape(ta.back()));
        for (int rb = 0; rb <= max_rounds; ++rb) {
            while (static_cast<int>(tb.size()) <= rb) tb.push_back(subdivide_shape(tb.back()));
            if (tb[rb].p.size() > ta[ra].p.size()) break;
            if (tb[rb].p.size() != ta[ra].p.size()) continue;
            if (ta[ra].p.size() > iso_size_cap) continue;
            if (auto m = iso_search(ta[ra], tb[rb]))
                return AlignedIso{std::move(*m), ra, rb};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::map<Vertex, Vertex>> chart_isomorphism(const Chart& a,
                                                          const Chart& b) {
    if (a.action.group.order() > iso_group_cap ||
        b.action.group.order() > iso_group_cap)
        return std::nullopt;
    if (a.action.complex.size() > iso_size_cap ||
        b.action.complex.size() > iso_size_cap)
        return std::nullopt;
    return iso_search(shape_of(a), shape_of(b));
}

std::optional<DominationWitness> dominates(const Chart& c1, const Chart& c2) {
    const size_t g1 = c1.action.group.order(), g2 = c2.action.group.order();
    const size_t h1 = c1.h.order(), h2 = c2.h.order();
    const size_t k1 = c1.k.order(), k2 = c2.k.order();
    if (g1 % g2 || h1 % h2 || k1 % k2) return std::nullopt;
    const size_t q = g1 / g2;
    if (h1 / h2 != q || k1 / k2 != q) return std::nullopt;
    PermGroup meet = group_intersection(c1.h, c1.k);
    if (meet.order() % q) return std::nullopt;
    for (const PermGroup& n : all_subgroups(meet)) {
        if (n.order() != q || !n.is_normal_in(c1.action.group)) continue;
        try {
            ChartReduction red = chart_mod_normal(c1, n);
            if (auto ai = aligned_isomorphism(shape_of(red.chart), shape_of(c2)))
                return DominationWitness{n, std::move(red.chart),
                                         std::move(red.projection), std::move(ai->map),
                                         ai->rounds_a, ai->rounds_b};
        } catch (const Error&) {
            // this subgroup does not collapse c1 onto a chart; try the next
        }
    }
    return std::nullopt;
}

bool charts_equivalent(const Chart& c1, const Chart& c2) {
    Chart r1 = reduce_chart(c1).chart;
    Chart r2 = reduce_chart(c2).chart;
    return aligned_isomorphism(shape_of(r1), shape_of(r2)).has_value();
}

CommonDomination common_dominating_chart(const Chart& c1, const Chart& c2) {
    ChartReduction r1 = reduce_chart(c1);
    ChartReduction r2 = reduce_chart(c2);
    auto ai = aligned_isomorphism(shape_of(r2.chart), shape_of(r1.chart));
    require(ai.has_value(), ErrorCode::not_equivalent,
            "charts without isomorphic reductions have no common dominating chart");

    // Both reduction coverings, aligned over the common reduced complex.
    CoveringMap pi1 = subdivide_times(r1.projection, ai->rounds_b);
    CoveringMap pi2 = rebase(subdivide_times(r2.projection, ai->rounds_a), pi1.base,
                             ai->map);

    PullbackResult pb = pullback(pi1, pi2);
    CoveringMap piece = covering_components(pb.f).front();
    CoveringMap rp1 = restrict_total(pb.p1, piece.total);
    CoveringMap rp2 = restrict_total(pb.p2, piece.total);

    // Glue the rebuilt pullback factors back onto the subdivision towers of
    // the original complexes.
    CoveringMap pi1l = subdivide_times(pi1, pb.level);
    CoveringMap pi2l = subdivide_times(pi2, pb.level);
    auto phi1 = covering_isomorphism(pb.f1, pi1l);
    auto phi2 = covering_isomorphism(pb.f2, pi2l);
    require(phi1.has_value() && phi2.has_value(), ErrorCode::internal_error,
            "pullback factors fail to match their subdivided originals");
    CoveringMap rp1g = rebase(rp1, pi1l.total, *phi1);
    CoveringMap rp2g = rebase(rp2, pi2l.total, *phi2);

    // Regularize the composite down to the reduced chart's P/G.
    CoveringMap tau = compose_aligned(piece, r1.chart.pi_g);
    RegularizationResult mr = minimal_regularization(tau);
    CoveringMap taul = subdivide_times(tau, mr.level);
    auto phi = covering_isomorphism(mr.f, taul);
    require(phi.has_value(), ErrorCode::internal_error,
            "regularization fails to match the subdivided covering");
    CoveringMap s2 = rebase(mr.s, taul.total, *phi);

    CoveringMap d1 = compose_aligned(s2, rp1g);
    CoveringMap d2 = compose_aligned(s2, rp2g);

    // Align the composite with c1's own chart projections upstairs.
    CoveringMap d1a = d1, piu = c1.pi_h, piv = c1.pi_k;
    int lifted_rounds = 0, guard = 0;
    while (d1a.base != piu.total) {
        require(++guard <= 6, ErrorCode::internal_error,
                "no common subdivision level with the dominated chart");
        if (d1a.base.size() < piu.total.size()) {
            d1a = subdivide_covering(d1a);
            ++lifted_rounds;
        } else {
            piu = subdivide_covering(piu);
            piv = subdivide_covering(piv);
        }
    }
    CoveringMap t_u = compose(d1a, piu);
    CoveringMap t_v = compose(d1a, piv);
    CoveringMap d2a = subdivide_times(d2, lifted_rounds);

    // H and K of the common chart: the deck transformations preserving the
    // fibers of the factor maps to U and to V.
    SimplicialAction deck{mr.r.total, PermGroup::from_elements(deck_perms(mr.r))};
    for (int i = 0; i < lifted_rounds; ++i) deck = subdivide_action(deck);
    const std::vector<Vertex> rverts = deck.complex.vertices();
    std::vector<Perm> hels, kels;
    for (const Perm& e : deck.group.elements()) {
        bool fix_u = true, fix_v = true;
        for (Vertex x : rverts) {
            Vertex y = e.apply(x);
            if (fix_u && t_u.vertex_map.at(y) != t_u.vertex_map.at(x)) fix_u = false;
            if (fix_v && t_v.vertex_map.at(y) != t_v.vertex_map.at(x)) fix_v = false;
            if (!fix_u && !fix_v) break;
        }
        if (fix_u) hels.push_back(e);
        if (fix_v) kels.push_back(e);
    }
    std::vector<Perm> ggens = hels;
    ggens.insert(ggens.end(), kels.begin(), kels.end());
    PermGroup ggrp = subgroup_generated(ggens, deck.group.degree());
    Chart chart = make_chart({deck.complex, std::move(ggrp)},
                             PermGroup::from_elements(std::move(hels)),
                             PermGroup::from_elements(std::move(kels)), std::nullopt);
    return {std::move(chart), std::move(d1a), std::move(d2a)};
}

std::string model_label(const CodimTwoModel& m) {
    if (m.k == 1) return std::to_string(m.h);
    return std::to_string(m.h) + "/" + std::to_string(m.k);
}

CodimTwoModel classify_codim2(const Chart& c) {
    require(is_conical(c), ErrorCode::not_conical,
            "codimension-two classification of a non-conical chart");
    require(is_reduced(c), ErrorCode::not_codim_two,
            "chart must be reduced before classification");
    const PermGroup& g = c.action.group;
    if (g.is_trivial()) return {1, 1};

    auto cyclic = [](const PermGroup& grp) {
        for (const Perm& e : grp.elements())
            if (static_cast<size_t>(e.order()) == grp.order()) return true;
        return false;
    };
    const size_t ho = c.h.order(), ko = c.k.order();
    require(cyclic(c.h) && cyclic(c.k) && cyclic(g) && g.order() == ho * ko &&
                std::gcd(ho, ko) == 1,
            ErrorCode::not_codim_two,
            "rotation groups of a codimension-two model must be cyclic of coprime orders");

    // Every nontrivial element must fix one common axis of codimension two
    // through the apex.
    std::optional<std::set<Vertex>> axis;
    for (const Perm& e : g.elements()) {
        if (e.is_identity()) continue;
        std::set<Vertex> fixed;
        for (Vertex v : c.action.complex.vertices())
            if (e.apply(v) == v) fixed.insert(v);
        if (!axis)
            axis = std::move(fixed);
        else
            require(*axis == fixed, ErrorCode::not_codim_two,
                    "rotation elements fix different axes");
    }
    require(axis->count(*c.apex) > 0, ErrorCode::not_codim_two,
            "the fixed axis misses the apex");
    int axis_dim = -1;
    for (const Simplex& s : c.action.complex.simplices()) {
        bool inside = true;
        for (Vertex v : s)
            if (!axis->count(v)) {
                inside = false;
                break;
            }
        if (inside) axis_dim = std::max(axis_dim, static_cast<int>(s.size()) - 1);
    }
    require(axis_dim == c.action.complex.dim() - 2, ErrorCode::not_codim_two,
            "the fixed axis is not of codimension two");
    return {static_cast<int>(ho), static_cast<int>(ko)};
}

BranchfoldKind classify_kind(const std::vector<Chart>& models) {
    bool all_k_trivial = true, all_pure = true;
    for (const Chart& c : models) {
        if (!c.k.is_trivial()) all_k_trivial = false;
        if (!c.h.is_subgroup_of(c.k)) all_pure = false;
    }
    if (all_k_trivial) return BranchfoldKind::orbifold;
    if (all_pure) return BranchfoldKind::pure;
    return BranchfoldKind::mixed;
}

}  // namespace bfold
