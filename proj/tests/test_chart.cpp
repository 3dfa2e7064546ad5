#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "bfold/chart.hpp"
#include "fixtures.hpp"

using namespace bfold;

namespace {

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::none;
}

bool same_fraction(const IndexFraction& a, const IndexFraction& b) {
    return a.num == b.num && a.den == b.den;
}

}  // namespace

TEST_CASE("disk model charts validate with the expected quotient data") {
    Chart c = disk_model(3, 2);
    CHECK(validate_chart(c).valid());
    CHECK(c.level == 1);
    CHECK(c.pi_h.degree == 3);
    CHECK(c.pi_k.degree == 2);
    CHECK(c.pi_g.degree == 6);
    CHECK(c.p.degree == 2);
    CHECK(c.p_gk.degree == 3);
    // U, V and P/G are all disks.
    CHECK(c.u.euler_characteristic() == 1);
    CHECK(c.v.euler_characteristic() == 1);
    CHECK(c.pmodg.euler_characteristic() == 1);
    // The square commutes on the nose.
    CHECK(compose(c.pi_h, c.p).vertex_map == c.pi_g.vertex_map);
    CHECK(compose(c.pi_k, c.p_gk).vertex_map == c.pi_g.vertex_map);
    CHECK(is_conical(c));
}

TEST_CASE("the trivial disk model is the identity chart") {
    Chart c = disk_model(1, 1);
    CHECK(c.level == 0);
    CHECK(c.action.group.is_trivial());
    CHECK(c.u == c.action.complex);
    CHECK(c.v == c.action.complex);
    CHECK(c.pmodg == c.action.complex);
    CHECK(c.pi_g.degree == 1);
}

TEST_CASE("validate_chart reports failures without throwing") {
    SUBCASE("non-normal K") {
        SimplicialAction a = fix::bipyramid_dihedral();
        PermGroup h = PermGroup::generate({Perm::parse("(1 3 5)(2 4 6)", 8)});
        PermGroup k = PermGroup::generate({Perm::parse("(2 6)(3 5)(7 8)", 8)});
        ChartReport rep = validate_chart(a, h, k);
        CHECK_FALSE(rep.valid());
        CHECK(rep.action.valid());
        CHECK(rep.relations.h_subgroup);
        CHECK_FALSE(rep.relations.k_normal);
    }
    SUBCASE("bad action goodness") {
        SimplicialAction a = fix::oct_reflection();
        ChartReport rep = validate_chart(a, a.group, a.group);
        CHECK_FALSE(rep.valid());
        CHECK(rep.relations.k_normal);
        CHECK(rep.p_oriented);
        CHECK_FALSE(rep.action_good);
        CHECK(code_of([&] { make_chart(a, a.group, a.group); }) ==
              ErrorCode::chart_invalid);
    }
    SUBCASE("apex must be fixed by the whole group") {
        SimplicialAction a = fix::disk_rotation();
        ChartReport rep = validate_chart(a, a.group, a.group, 1);
        CHECK_FALSE(rep.valid());
        CHECK_FALSE(rep.apex_ok);
    }
}

TEST_CASE("the octahedron-cone ball chart is a valid mixed 3-dimensional chart") {
    Chart c = fix::ball_chart();
    CHECK(validate_chart(c).valid());
    CHECK(c.action.complex.dim() == 3);
    CHECK(c.action.group.order() == 4);
    CHECK(is_conical(c));
    CHECK(fraction_text(chart_index(c)) == "1");

    SUBCASE("restriction on the H-axis is the (2,1) model") {
        Chart r = conical_restriction(c, 3);
        CHECK(r.h.order() == 2);
        CHECK(r.k.order() == 1);
        CodimTwoModel m = classify_codim2(r);
        CHECK(m.h == 2);
        CHECK(m.k == 1);
    }
    SUBCASE("restriction on the K-axis is the (1,2) model") {
        Chart r = conical_restriction(c, 1);
        CHECK(r.h.order() == 1);
        CHECK(r.k.order() == 2);
        CodimTwoModel m = classify_codim2(r);
        CHECK(m.h == 1);
        CHECK(m.k == 2);
    }
    SUBCASE("the third axis is nonsingular although its stabilizer is not") {
        int stab = 0;
        for (const Perm& e : c.action.group.elements())
            if (e.apply(2) == 2) ++stab;
        CHECK(stab == 2);  // <sigma rho> fixes the vertex...
        Chart r = conical_restriction(c, 2);
        CHECK(r.action.group.is_trivial());  // ...but H' K' is trivial
        CodimTwoModel m = classify_codim2(r);
        CHECK(m.h == 1);
        CHECK(m.k == 1);
    }
    SUBCASE("the apex is a junction, not a codimension-two point") {
        Chart r = conical_restriction(c, 7);
        CHECK(r.action.group.order() == 4);
        CHECK(code_of([&] { classify_codim2(r); }) == ErrorCode::not_codim_two);
    }
}

TEST_CASE("chart_index reduces the fraction and needs a cone") {
    CHECK(same_fraction(chart_index(disk_model(3, 2)), {3, 2}));
    CHECK(fraction_text(chart_index(disk_model(3, 2))) == "3/2");
    CHECK(same_fraction(chart_index(disk_model(5, 1)), {5, 1}));
    CHECK(fraction_text(chart_index(disk_model(5, 1))) == "5");
    CHECK(same_fraction(chart_index(disk_model(1, 4)), {1, 4}));
    CHECK(fraction_text(chart_index(disk_model(1, 4))) == "1/4");
    CHECK(same_fraction(chart_index(disk_model(6, 4)), {3, 2}));
    CHECK(code_of([&] { chart_index(fix::bipyramid_chart()); }) ==
          ErrorCode::not_conical);
}

TEST_CASE("conical restriction at the apex and at a free vertex") {
    Chart c = disk_model(3, 2);
    SUBCASE("apex restriction returns the chart itself") {
        Chart r = conical_restriction(c, 13);
        CHECK(r.action.complex == c.action.complex);
        CHECK(r.action.group == c.action.group);
        CHECK(r.h == c.h);
        CHECK(r.k == c.k);
    }
    SUBCASE("free rim vertex gives the trivial chart") {
        Chart r = conical_restriction(c, 1);
        CHECK(r.action.group.is_trivial());
        CHECK(r.h.is_trivial());
        CHECK(r.k.is_trivial());
    }
    SUBCASE("unknown vertex is rejected") {
        CHECK(code_of([&] { conical_restriction(c, 99); }) == ErrorCode::unknown_vertex);
    }
}

TEST_CASE("reduce_chart collapses the core of H meet K") {
    Chart c64 = disk_model(6, 4);
    CHECK_FALSE(is_reduced(c64));
    ChartReduction red = reduce_chart(c64);
    CHECK(red.n.order() == 2);
    CHECK(red.projection.degree == 2);
    CHECK(is_reduced(red.chart));
    CHECK(red.chart.h.order() == 3);
    CHECK(red.chart.k.order() == 2);
    // The reduction is the (3,2) disk model up to relabeling.
    CHECK(chart_isomorphism(red.chart, disk_model(3, 2)).has_value());
    // The index is invariant under reduction.
    CHECK(same_fraction(chart_index(red.chart), chart_index(c64)));

    SUBCASE("idempotent") {
        ChartReduction again = reduce_chart(red.chart);
        CHECK(again.n.is_trivial());
        CHECK(again.projection.degree == 1);
        CHECK(again.chart.action.complex == red.chart.action.complex);
    }
    SUBCASE("already reduced charts are untouched") {
        Chart c52 = disk_model(5, 2);
        CHECK(is_reduced(c52));
        ChartReduction r = reduce_chart(c52);
        CHECK(r.n.is_trivial());
        CHECK(r.chart.action.complex == c52.action.complex);
    }
    SUBCASE("orbifold charts have trivial core") {
        Chart c51 = disk_model(5, 1);
        CHECK(is_reduced(c51));
        CHECK(reduce_chart(c51).n.is_trivial());
    }
}

TEST_CASE("chart_isomorphism demands matching group data") {
    Chart c32 = disk_model(3, 2);
    SUBCASE("identity") {
        auto iso = chart_isomorphism(c32, c32);
        REQUIRE(iso.has_value());
        for (const auto& [v, w] : *iso) CHECK(c32.action.complex.contains_vertex(w));
    }
    SUBCASE("relabeled copy") {
        CHECK(chart_isomorphism(c32, fix::disk12_chart(3, 2)).has_value());
    }
    SUBCASE("H and K cannot be swapped") {
        CHECK_FALSE(chart_isomorphism(c32, disk_model(2, 3)).has_value());
    }
    SUBCASE("size caps reject large groups") {
        Chart big = disk_model(25, 1);
        CHECK_FALSE(chart_isomorphism(big, big).has_value());
    }
}

TEST_CASE("dominates finds the collapsing subgroup") {
    Chart c64 = disk_model(6, 4);
    Chart c32 = disk_model(3, 2);
    SUBCASE("(6,4) dominates (3,2) through N of order 2") {
        auto w = dominates(c64, c32);
        REQUIRE(w.has_value());
        CHECK(w->n.order() == 2);
        CHECK(w->projection.degree == 2);
        CHECK(validate_chart(w->quotient).valid());
        CHECK(same_fraction(chart_index(w->quotient), chart_index(c64)));
    }
    SUBCASE("every chart dominates itself trivially") {
        auto w = dominates(c32, c32);
        REQUIRE(w.has_value());
        CHECK(w->n.is_trivial());
    }
    SUBCASE("(3,2) does not dominate (2,3)") {
        CHECK_FALSE(dominates(c32, disk_model(2, 3)).has_value());
    }
    SUBCASE("(3,2) does not dominate (6,4)") {
        CHECK_FALSE(dominates(c32, c64).has_value());
    }
}

TEST_CASE("charts_equivalent is an equivalence relation on the disk family") {
    std::vector<Chart> family;
    family.push_back(disk_model(3, 2));        // class 0
    family.push_back(disk_model(6, 4));        // class 0
    family.push_back(disk_model(12, 8));       // class 0
    family.push_back(fix::disk12_chart(3, 2)); // class 0, relabeled
    family.push_back(disk_model(2, 3));        // class 1
    family.push_back(disk_model(4, 6));        // class 1
    const std::vector<int> cls{0, 0, 0, 0, 1, 1};

    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = 0; j < family.size(); ++j) {
            bool expected = cls[i] == cls[j];
            CAPTURE(i);
            CAPTURE(j);
            CHECK(charts_equivalent(family[i], family[j]) == expected);
        }
}

TEST_CASE("a subdivided chart stays equivalent") {
    Chart c = disk_model(3, 2);
    Chart sub = subdivide_chart(c);
    CHECK(sub.action.complex.size() > c.action.complex.size());
    // Subdivision keeps the marked apex but destroys the combinatorial cone
    // structure: the closed star of the apex is now a proper subcomplex.
    CHECK(sub.apex.has_value());
    CHECK_FALSE(is_conical(sub));
    CHECK(charts_equivalent(sub, c));
}

TEST_CASE("common_dominating_chart dominates both inputs") {
    Chart c64 = disk_model(6, 4);
    Chart c128 = disk_model(12, 8);
    CommonDomination cd = common_dominating_chart(c64, c128);
    CHECK(validate_chart(cd.chart).valid());
    CHECK(analyze(cd.to_first).is_branched_covering);
    CHECK(analyze(cd.to_second).is_branched_covering);
    // The witness degrees measure the collapsed groups.
    CHECK(cd.to_first.degree * c64.action.group.order() ==
          cd.chart.action.group.order());
    CHECK(cd.to_second.degree * c128.action.group.order() ==
          cd.chart.action.group.order());
    CHECK(dominates(cd.chart, c64).has_value());
    CHECK(dominates(cd.chart, c128).has_value());

    SUBCASE("inequivalent charts have no common dominating chart") {
        CHECK(code_of([&] { common_dominating_chart(c64, disk_model(2, 3)); }) ==
              ErrorCode::not_equivalent);
    }
}

TEST_CASE("classify_codim2 on the rotation models") {
    for (auto [h, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {5, 3}, {1, 4}}) {
        CAPTURE(h);
        CAPTURE(k);
        Chart c = disk_model(h, k);
        CodimTwoModel m = classify_codim2(c);
        CHECK(m.h == h);
        CHECK(m.k == k);
        // Rebuilding the chart from the classified model and reducing gives
        // an equivalent chart.
        Chart rebuilt = disk_model(m.h, m.k);
        CHECK(charts_equivalent(rebuilt, c));
        CodimTwoModel again = classify_codim2(reduce_chart(rebuilt).chart);
        CHECK(again.h == m.h);
        CHECK(again.k == m.k);
    }
    CHECK(model_label(classify_codim2(disk_model(3, 2))) == "3/2");
    CHECK(model_label(classify_codim2(disk_model(5, 1))) == "5");

    SUBCASE("the trivial chart is the nonsingular model") {
        CodimTwoModel m = classify_codim2(disk_model(1, 1));
        CHECK(m.h == 1);
        CHECK(m.k == 1);
    }
    SUBCASE("unreduced charts are rejected") {
        CHECK(code_of([&] { classify_codim2(disk_model(6, 4)); }) ==
              ErrorCode::not_codim_two);
    }
    SUBCASE("non-conical charts are rejected") {
        CHECK(code_of([&] { classify_codim2(fix::bipyramid_chart()); }) ==
              ErrorCode::not_conical);
    }
}

TEST_CASE("the symmetric cone chart is pure and not a codimension-two model") {
    Chart c = fix::symmetric_cone_chart();
    CHECK(validate_chart(c).valid());
    CHECK(c.action.group.order() == 6);
    CHECK(c.k.order() == 6);
    CHECK(c.h.order() == 2);
    CHECK(is_conical(c));
    CHECK(is_reduced(c));
    CHECK(code_of([&] { classify_codim2(c); }) == ErrorCode::not_codim_two);
    CHECK(classify_kind({c}) == BranchfoldKind::pure);
}

TEST_CASE("classify_kind distinguishes orbifold, pure and mixed data") {
    std::vector<Chart> orbifold;
    orbifold.push_back(disk_model(2, 1));
    orbifold.push_back(disk_model(5, 1));
    CHECK(classify_kind(orbifold) == BranchfoldKind::orbifold);

    std::vector<Chart> pure;
    pure.push_back(disk_model(1, 2));
    pure.push_back(disk_model(1, 1));
    CHECK(classify_kind(pure) == BranchfoldKind::pure);

    std::vector<Chart> mixed;
    mixed.push_back(disk_model(3, 2));
    CHECK(classify_kind(mixed) == BranchfoldKind::mixed);

    CHECK(classify_kind({}) == BranchfoldKind::orbifold);
}

TEST_CASE("the bipyramid chart is a valid mixed chart without an apex") {
    Chart c = fix::bipyramid_chart();
    CHECK(validate_chart(c).valid());
    CHECK_FALSE(is_conical(c));
    CHECK(c.pi_h.degree == 2);
    CHECK(c.pi_k.degree == 3);
    CHECK(c.pi_g.degree == 6);
    CHECK(classify_kind({c}) == BranchfoldKind::mixed);
}
