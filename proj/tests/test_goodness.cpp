#include <doctest.h>

#include <algorithm>
#include <vector>

#include "bfold/complex.hpp"
#include "bfold/error.hpp"
#include "bfold/goodness.hpp"
#include "fixtures.hpp"

using namespace bfold;

namespace {

// Suspension of the octahedron with apexes 7 and 8: a 3-sphere with 16
// tetrahedra, the smallest handy 3-pseudo-manifold.
Complex suspension() {
    Complex oct = fix::octahedron();
    std::vector<std::vector<Vertex>> tops;
    for (const Simplex& f : oct.top_simplices())
        for (Vertex apex : {7, 8}) {
            Simplex t = f;
            t.push_back(apex);
            tops.push_back(t);
        }
    return Complex::close_and_validate(tops);
}

Complex sub(const std::vector<std::vector<Vertex>>& tops) {
    return Complex::close_and_validate(tops);
}

}  // namespace

TEST_CASE("open complement components") {
    Complex tri = fix::triangle();
    CHECK(open_complement_components(tri, tri.skeleton(1)).size() == 1);

    CHECK(open_complement_components(fix::cycle(3), sub({{1}})).size() == 1);
    CHECK(open_complement_components(fix::cycle(4), sub({{1}, {3}})).size() == 2);
    // Two adjacent punctures still leave two arcs (one is the open edge).
    CHECK(open_complement_components(fix::cycle(4), sub({{1}, {2}})).size() == 2);
    // Removing a closed edge leaves a single arc.
    CHECK(open_complement_components(fix::cycle(4), sub({{1, 2}})).size() == 1);
    CHECK(open_complement_components(fix::cycle(6), sub({{1}, {3}, {5}})).size() == 3);

    // Equator separates the octahedron into the two open hemispheres.
    Complex equator = sub({{2, 3}, {3, 5}, {5, 6}, {2, 6}});
    CHECK(open_complement_components(fix::octahedron(), equator).size() == 2);

    // Empty subcomplex of a connected complex: a single component.
    CHECK(open_complement_components(fix::octahedron(), Complex()).size() == 1);

    // Complement of everything is empty.
    CHECK(open_complement_components(tri, tri).empty());

    CHECK_THROWS_AS(open_complement_components(fix::octahedron(), sub({{2, 5}})), Error);
}

TEST_CASE("goodness on the octahedron") {
    Complex oct = fix::octahedron();

    CHECK(is_good_subcomplex(oct, sub({{1}, {4}})));   // the two poles
    CHECK(is_good_subcomplex(oct, sub({{1}})));
    CHECK(is_good_subcomplex(oct, oct.skeleton(0)));   // all six vertices
    CHECK(is_good_subcomplex(oct, Complex()));

    // A closed edge is codimension one: its barycenter separates the link.
    CHECK_FALSE(is_good_subcomplex(oct, sub({{1, 2}})));
    // Same for the equator circle.
    CHECK_FALSE(is_good_subcomplex(oct, sub({{2, 3}, {3, 5}, {5, 6}, {2, 6}})));
    // A top simplex violates nowhere-density.
    GoodnessReport top_report = good_subcomplex_report(oct, sub({{1, 2, 3}}));
    CHECK_FALSE(top_report.nowhere_dense);
    CHECK_FALSE(top_report.good());
}

TEST_CASE("goodness in dimension one") {
    // In a circle only the empty subcomplex is good: any vertex disconnects
    // its link (two isolated points).
    CHECK(is_good_subcomplex(fix::cycle(5), Complex()));
    CHECK_FALSE(is_good_subcomplex(fix::cycle(5), sub({{1}})));
    CHECK_FALSE(is_good_subcomplex(fix::cycle(4), sub({{1}, {3}})));
}

TEST_CASE("goodness in dimension three") {
    Complex s3 = suspension();
    CHECK(s3.is_pseudo_manifold());
    CHECK(s3.euler_characteristic() == 0);

    CHECK(is_good_subcomplex(s3, sub({{1, 2}})));            // an edge
    CHECK(is_good_subcomplex(s3, sub({{1, 2}, {4, 5}})));    // two disjoint edges
    CHECK(is_good_subcomplex(s3, sub({{1, 2}, {2, 3}})));    // a path
    CHECK(is_good_subcomplex(s3, sub({{2, 3}, {3, 5}, {5, 6}, {2, 6}})));  // a circle
    CHECK(is_good_subcomplex(s3, sub({{7}, {8}})));          // the two apexes

    CHECK_FALSE(is_good_subcomplex(s3, sub({{1, 2, 3}})));   // codimension one
    CHECK_FALSE(is_good_subcomplex(s3, sub({{1, 2, 3, 7}})));  // a top simplex
}

TEST_CASE("star and link formulations agree") {
    std::vector<std::pair<Complex, Complex>> fixtures;
    Complex oct = fix::octahedron();
    fixtures.push_back({oct, sub({{1}, {4}})});
    fixtures.push_back({oct, sub({{1, 2}})});
    fixtures.push_back({oct, sub({{2, 3}, {3, 5}, {5, 6}, {2, 6}})});
    fixtures.push_back({oct, oct.skeleton(0)});
    fixtures.push_back({fix::cycle(4), sub({{1}, {3}})});
    fixtures.push_back({fix::cycle(3), sub({{2}})});
    fixtures.push_back({fix::projective_plane(), sub({{1}, {2, 3}})});
    fixtures.push_back({suspension(), sub({{1, 2}, {2, 3}})});
    fixtures.push_back({suspension(), sub({{1, 2, 3}})});
    fixtures.push_back({fix::bipyramid(4), sub({{5}, {6}})});

    for (const auto& [c, s] : fixtures) {
        GoodnessReport report = good_subcomplex_report(c, s);
        CHECK(report.link_condition == report.star_condition);
    }
}

TEST_CASE("good subcomplexes restrict") {
    // Every subcomplex of a good subcomplex is good.  Enumerate all
    // face-closed simplex families inside small good fixtures.
    auto all_subcomplexes = [](const Complex& s) {
        std::vector<Complex> out;
        const std::vector<Simplex>& xs = s.simplices();
        size_t n = xs.size();
        for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
            std::vector<Simplex> chosen;
            for (size_t i = 0; i < n; ++i)
                if (mask >> i & 1) chosen.push_back(xs[i]);
            bool closed = true;
            for (const Simplex& a : chosen)
                for (const Simplex& b : xs)
                    if (is_face_of(b, a) &&
                        std::find(chosen.begin(), chosen.end(), b) == chosen.end())
                        closed = false;
            if (closed) out.push_back(Complex::from_simplices(chosen));
        }
        return out;
    };

    Complex oct = fix::octahedron();
    Complex poles = sub({{1}, {4}});
    REQUIRE(is_good_subcomplex(oct, poles));
    for (const Complex& r : all_subcomplexes(poles)) CHECK(is_good_subcomplex(oct, r));

    Complex s3 = suspension();
    Complex path = sub({{1, 2}, {2, 3}, {7}});
    REQUIRE(is_good_subcomplex(s3, path));
    for (const Complex& r : all_subcomplexes(path)) CHECK(is_good_subcomplex(s3, r));
}

TEST_CASE("unions of good subcomplexes are good") {
    Complex oct = fix::octahedron();
    CHECK(is_good_subcomplex(oct, complex_union(sub({{1}}), sub({{4}}))));
    CHECK(is_good_subcomplex(oct, complex_union(sub({{1}, {2}}), sub({{2}, {4}}))));

    Complex s3 = suspension();
    Complex a = sub({{1, 2}, {2, 3}});
    Complex b = sub({{2, 3}, {3, 4}, {1, 7}});
    REQUIRE(is_good_subcomplex(s3, a));
    REQUIRE(is_good_subcomplex(s3, b));
    CHECK(is_good_subcomplex(s3, complex_union(a, b)));
}

TEST_CASE("good subcomplexes do not disconnect") {
    std::vector<std::pair<Complex, Complex>> fixtures;
    fixtures.push_back({fix::octahedron(), sub({{1}, {4}})});
    fixtures.push_back({fix::octahedron(), fix::octahedron().skeleton(0)});
    fixtures.push_back({suspension(), sub({{2, 3}, {3, 5}, {5, 6}, {2, 6}})});
    fixtures.push_back({fix::projective_plane(), sub({{1}, {2}, {3}})});

    for (const auto& [c, s] : fixtures) {
        REQUIRE(c.is_connected());
        REQUIRE(is_good_subcomplex(c, s));
        CHECK(open_complement_components(c, s).size() == 1);
    }
}

TEST_CASE("pseudo-manifold goodness is a dimension test") {
    // On a pseudo-manifold, a subcomplex is good exactly when its dimension
    // is at most m-2.
    Complex oct = fix::octahedron();
    for (const Simplex& s : oct.simplices()) {
        bool good = is_good_subcomplex(oct, Complex::from_simplices([&] {
            std::vector<Simplex> faces;
            for (const Simplex& f : oct.simplices())
                if (is_face_of(f, s)) faces.push_back(f);
            return faces;
        }()));
        CHECK(good == (simplex_dim(s) <= oct.dim() - 2));
    }
}
