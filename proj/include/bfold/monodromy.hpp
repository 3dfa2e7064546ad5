#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bfold/covering.hpp"

namespace bfold {

// Sheet-transition data for a branched covering presented over a base
// complex: one permutation of {1..sheets} per ordered pair of adjacent top
// simplices (indices into base.top_simplices()), with transitions(tau,sigma)
// = transitions(sigma,tau)^-1 and the product around the dual loop of every
// codimension-2 simplex off the branch locus equal to the identity.
struct MonodromyCocycle {
    Complex base;
    Complex branch_locus;
    int sheets = 1;
    std::map<std::pair<int, int>, Perm> transitions;

    // Transition across the shared facet, identity if none was recorded.
    Perm transition(int from_top, int to_top) const;
    // Records both directions.
    void set_transition(int from_top, int to_top, const Perm& p);
};

struct CocycleReport {
    bool base_ok = false;          // connected pseudo-manifold (boundary allowed)
    bool branch_ok = false;        // subcomplex of codimension >= 2
    bool degrees_ok = false;       // permutation degrees match the sheet count
    bool symmetric = false;        // inverse pairing holds
    bool flat = false;             // identity around codim-2 simplices off the locus
    bool valid() const { return base_ok && branch_ok && degrees_ok && symmetric && flat; }
};

CocycleReport validate_cocycle(const MonodromyCocycle& mc);

// Cyclic (or, along a boundary, linear) orderings of the top simplices
// around a codimension-2 simplex: each walk steps through the shared facets
// containing it.  Closed loops are returned with the entry repeated at the
// end; boundary-to-boundary paths are returned as-is.
std::vector<std::vector<int>> dual_walks_around(const Complex& c, const Simplex& codim2);

// Pushes a cocycle to the first barycentric subdivision of its base:
// transitions between subdivided top simplices inside one original top are
// the identity, across original facets they are the original transitions.
MonodromyCocycle subdivide_cocycle(const MonodromyCocycle& mc);

struct FoxResult {
    CoveringMap map;
    // Rounds of barycentric subdivision applied to the input base (0 or 1);
    // one round is taken exactly when distinct fiber points over some input
    // simplex would otherwise share all their vertices.
    int level = 0;
    // The cocycle actually realized, over map.base (the input base subdivided
    // `level` times).
    MonodromyCocycle built;
};

// Fox completion: builds the total complex over the base with the given
// sheet transitions.  Fiber points over a simplex s are the components of
// the graph on (top coface of s, sheet) nodes whose edges follow the
// transitions through the star of s; the local degree of a fiber point is
// the number of sheets it absorbs.
FoxResult fox_complete_result(const MonodromyCocycle& mc);
CoveringMap fox_complete(const MonodromyCocycle& mc);

// Reads the sheet transitions back off a covering map.  Sheets are labeled
// canonically: breadth-first from the least top simplex of the base, so that
// transitions along the BFS tree are the identity.  The branch locus is the
// recomputed branch set.
MonodromyCocycle extract_cocycle(const CoveringMap& f);

struct PullbackResult {
    CoveringMap f;    // the pullback covering over the (possibly subdivided) base
    CoveringMap p1;   // projection onto the first factor's total
    CoveringMap p2;   // projection onto the second factor's total
    CoveringMap f1;   // the factors, rebuilt at the common subdivision level
    CoveringMap f2;
    int level = 0;    // subdivision rounds applied to the original base
};

// Fiber product of two coverings of the same base: Fox completion of the
// product cocycle on sheet pairs over the union of the branch sets, with the
// two node projections.  compose(p1, f1) == f == compose(p2, f2).
PullbackResult pullback(const CoveringMap& f1, const CoveringMap& f2);

// The component of the pullback total containing the (1,1) sheet pair over
// the least top simplex.  At least one factor must be regular for the choice
// of component to be immaterial; that factor is checked first.
CoveringMap connected_pullback(const CoveringMap& f1, const CoveringMap& f2);

struct RegularizationResult {
    CoveringMap r;    // the regularization R -> base, a regular covering
    CoveringMap s;    // the factor map R -> total with r = compose(s, f)
    CoveringMap f;    // the input, rebuilt at the common subdivision level
    int level = 0;
    PermGroup deck_model;  // G/N as a permutation group: the deck group of r
};

// Minimal regularization of a connected covering: with G the monodromy
// image, H the stabilizer of sheet 1 and N the core of H in G, the result is
// the Fox completion of the G/N coset cocycle.  Its degree |G/N| divides
// degree(f)!.
RegularizationResult minimal_regularization(const CoveringMap& f);

// Whether h factors through f (both over the same base): some sheet of f is
// fixed by every based monodromy word fixing sheet 1 of h.  Totals must be
// connected.
bool factors_through(const CoveringMap& h, const CoveringMap& f);

}  // namespace bfold
