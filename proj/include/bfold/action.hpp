#pragma once

#include "bfold/covering.hpp"

namespace bfold {

// A finite group acting simplicially on a complex: group elements are
// permutations of the vertex ids (degree at least the largest id) that carry
// simplices to simplices.  The action must be effective: only the identity
// may fix every vertex of the complex.
struct SimplicialAction {
    Complex complex;
    PermGroup group;
};

struct ActionReport {
    bool simplicial = false;  // every generator preserves the simplex set
    bool effective = false;   // no nontrivial element fixes all vertices
    bool valid() const { return simplicial && effective; }
};

ActionReport validate_action_report(const SimplicialAction& a);
// Throwing variant; returns true when the report is clean.
bool validate_action(const SimplicialAction& a);

// The induced action on the barycentric subdivision: the barycenter of s is
// carried to the barycenter of g(s).
SimplicialAction subdivide_action(const SimplicialAction& a);

// Whether the quotient of c by g is simplicial as it stands: (i) no simplex
// contains two vertices of one orbit, and (ii) distinct simplex orbits have
// distinct vertex-orbit images.  Both conditions always hold on the second
// barycentric subdivision; often they already hold earlier.
bool quotient_conditions(const Complex& c, const PermGroup& g);

// Smallest number of subdivision rounds (0, 1 or 2) after which
// quotient_conditions holds for the lifted action.
int quotient_level(const SimplicialAction& a);

struct QuotientData {
    Complex quotient;        // orbit complex, vertices named by least orbit member
    CoveringMap projection;  // from the level-subdivided complex onto the quotient
    Complex s_g;             // singular set upstairs: closure of the fixed sets
    Complex b_g;             // its image downstairs
    int level = 0;           // subdivision rounds applied before quotienting
    SimplicialAction lifted; // the action at that level
};

// Quotient at a forced subdivision level (quotient_conditions must hold
// there) or at the minimal level.  The projection's fibers are exactly the
// group orbits; S_G collects the simplices pointwise fixed by some
// nontrivial element whose star is not fixed.
QuotientData quotient_at_level(const SimplicialAction& a, int level);
QuotientData quotient(const SimplicialAction& a);

// Whether S_G is a good subcomplex of the (subdivided) complex.  On closed
// pseudo-manifolds this must agree with the codimension test
// dim S_G <= dim - 2, and the agreement is checked.
bool is_good_action(const SimplicialAction& a);

// The canonical projection of a good action as a regular branched covering
// of degree |G|.  Requires a connected quotient.
CoveringMap projection_as_covering(const SimplicialAction& a);

struct RestrictionResult {
    SimplicialAction restricted;  // the subgroup acting on the same complex
    int level = 0;                // common subdivision level of the two quotients
    CoveringMap upper;            // P -> P/H at that level
    CoveringMap lower;            // P -> P/G at that level
    CoveringMap intermediate;     // P/H -> P/G; regular iff H is normal in G
};

// Quotients by a subgroup h of a.group and by a.group itself at a common
// subdivision level, with the intermediate covering between them.
RestrictionResult restrict_to_subgroup(const SimplicialAction& a, const PermGroup& h);

}  // namespace bfold
