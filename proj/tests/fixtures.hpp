#pragma once

#include <utility>
#include <vector>

#include "bfold/action.hpp"
#include "bfold/chart.hpp"
#include "bfold/complex.hpp"
#include "bfold/monodromy.hpp"

namespace bfold::fix {

// Boundary of the octahedron: vertices 1..6 with antipodal pairs (1,4),
// (2,5), (3,6); the eight faces pick one vertex from each pair.  A standard
// triangulation of the 2-sphere.
Complex octahedron();

// Minimal 6-vertex triangulation of the real projective plane.
Complex projective_plane();

// Cycle on n >= 3 vertices 1..n (a triangulated circle).
Complex cycle(int n);

// One 2-simplex {1,2,3} with its faces.
Complex triangle();

// Boundary of the tetrahedron on vertices 1..4.
Complex tetrahedron_boundary();

// Double cone (suspension) over the cycle on `n` vertices: base vertices
// 1..n, apexes n+1 ("north") and n+2 ("south").  A 2-sphere for every n.
Complex bipyramid(int n);

// Cocycle on `base` with the given sheet count whose transitions are `p`
// across each listed interior facet (both cofaces are looked up) and the
// identity elsewhere.  The branch locus is computed: the closure of the
// codimension-2 simplices whose dual-loop holonomy is nontrivial.
MonodromyCocycle seam_cocycle(const Complex& base, int sheets,
                              const std::vector<std::pair<Simplex, Perm>>& seams);

// Degree-2 cocycle on the octahedron branched at the poles 1 and 4: the
// sheets swap across the meridian edges {1,2} and {2,4}.
MonodromyCocycle two_pole_cocycle();

// Degree-2 cocycle on the octahedron branched at the equator vertices 2 and
// 5 (seams across {2,3} and {3,5}).
MonodromyCocycle equator_cocycle();

// Degree-3 cocycle on the octahedron branched at 1, 2 and 4 with local
// monodromies in the classes of (1 2), a 3-cycle and (2 3): the smallest
// irregular example.  Its Fox completion forces one subdivision round.
MonodromyCocycle three_point_cocycle();

// Same seams as two_pole_cocycle but with a third, untouched sheet: the
// completion splits into components of degrees 2 and 1.
MonodromyCocycle intransitive_cocycle();

// Half-turn of the octahedron about the axis through 3 and 6.  Good action;
// the quotient is a sphere branched at two points.
SimplicialAction oct_half_turn();

// The antipodal involution of the octahedron.  Free action; the quotient is
// the projective plane.
SimplicialAction oct_antipodal();

// Reflection of the octahedron swapping only 1 and 4.  Valid action, but the
// fixed equator has codimension one, so it is not good.
SimplicialAction oct_reflection();

// Rotation group of order six on the 12-gon disk (cone over cycle(12) with
// apex 13).  Good action fixing only the apex.
SimplicialAction disk_rotation();

// Orientation-preserving dihedral group of order six on bipyramid(6): the
// rotation (1 3 5)(2 4 6) and the half-turn (2 6)(3 5)(7 8).  Good action
// with six singular points on the equator and one at each pole.
SimplicialAction bipyramid_dihedral();

// Cone over the octahedron with apex 7: a triangulated 3-ball on which the
// half-turns about the three coordinate axes act.
Complex octahedron_cone();

// The mixed 3-ball chart on the octahedron cone: sigma = (1 4)(2 5) and
// rho = (2 5)(3 6) generate G ≅ Z2 x Z2 with H = <sigma>, K = <rho> and the
// apex 7 as the cone point.  Restrictions at 3, 1 and 2 realize the local
// types (2,1), (1,2) and nonsingular.
Chart ball_chart();

// The pure chart with G = K ≅ Sigma3: the cone over the minimal
// regularization of the three-seam covering (a 2-sphere with the symmetric
// deck action), H generated by one transposition.  Conical but with an apex
// of codimension three.
Chart symmetric_cone_chart();

// Mixed chart without a cone structure: the dihedral action on bipyramid(6)
// with H the half-turn and K the rotation subgroup.
Chart bipyramid_chart();

// Chart on the fixed 12-gon disk (apex 13) with rim-shift groups of orders
// h, k and lcm(h,k); each order must divide 12.  disk12_chart(3, 2) carries
// the same data as disk_model(3, 2) on this complex.
Chart disk12_chart(int h, int k);

}  // namespace bfold::fix
