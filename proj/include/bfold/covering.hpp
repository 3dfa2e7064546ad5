#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bfold/complex.hpp"
#include "bfold/perm.hpp"

namespace bfold {

// A non-degenerate simplicial map total -> base with branched-covering
// bookkeeping.  Vertex maps send every simplex bijectively onto a simplex of
// the same dimension, and every fiber over a top simplex has exactly `degree`
// elements.  The four derived sets are recomputed from the map on
// construction:
//   singular_set         S  = simplices of total with local degree >= 2
//   branch_set           B  = image of S in base
//   preimage_set         T  = full preimage of B in total
//   pseudo_singular_set  S' = closure of T - S
struct CoveringMap {
    Complex total;
    Complex base;
    std::map<Vertex, Vertex> vertex_map;
    int degree = 1;

    Complex singular_set;
    Complex pseudo_singular_set;
    Complex branch_set;
    Complex preimage_set;

    // Image simplex under the vertex map.
    Simplex image(const Simplex& s) const;
};

// Validates the triple and fills in the derived fields.  Throws
// NotABranchedCovering when the map is degenerate or fibers over top
// simplices are not constant.
CoveringMap make_covering_map(Complex total, Complex base,
                              std::map<Vertex, Vertex> vertex_map);

// Local degree of a total simplex: the number of top cofaces lying over any
// fixed top coface of its image (checked to be independent of the choice).
int local_degree(const CoveringMap& f, const Simplex& s);

struct CoveringReport {
    bool base_connected = false;
    bool singular_set_good = false;   // S good in total
    bool branch_set_good = false;     // B good in base
    bool is_branched_covering = false;
    int degree = 1;
    std::map<Vertex, int> local_degrees;              // per total vertex
    // For each vertex of the branch set: the multiset of local degrees of the
    // fiber points over it (the orbit structure of the local monodromy).
    std::map<Vertex, std::vector<int>> branch_orbits;
    Complex singular_set, pseudo_singular_set, branch_set, preimage_set;
};

// Recomputes every derived quantity of `f` from the raw simplicial map.
CoveringReport analyze(const CoveringMap& f);

// The identity covering of a complex.
CoveringMap identity_covering(const Complex& c);

// Composite covering "g after f"; requires f.base == g.total exactly.
CoveringMap compose(const CoveringMap& f, const CoveringMap& g);

// One restriction per connected component of the total complex; their
// degrees sum to f.degree when the base is connected.
std::vector<CoveringMap> covering_components(const CoveringMap& f);

// Monodromy image of f on {1..degree}: the group generated by the sheet
// transitions along closed dual walks from the least top simplex of the
// base.  Requires a connected total (sheet transitivity is checked).
PermGroup monodromy_group(const CoveringMap& f);

// Deck transformations: simplicial automorphisms t of total with f(t(x)) =
// f(x), found by propagating each admissible seed across the dual graph.
std::vector<std::map<Vertex, Vertex>> deck_transformations(const CoveringMap& f);

struct RegularityReport {
    bool regular = false;
    PermGroup monodromy;                               // image on sheets
    std::vector<std::map<Vertex, Vertex>> deck;        // all deck transformations
};

// A connected covering is regular exactly when the deck group acts
// transitively on a fiber, equivalently |monodromy image| = degree.
RegularityReport regularity(const CoveringMap& f);
bool is_regular(const CoveringMap& f);

// Simplicial isomorphism phi of totals with g(phi(x)) = f(x), if one exists.
// Both maps must have the same base complex.
std::optional<std::map<Vertex, Vertex>> covering_isomorphism(const CoveringMap& f,
                                                             const CoveringMap& g);

// Riemann-Hurwitz cross-check for 2-dimensional coverings: returns the pair
// (chi of total, degree * chi of base - sum of branch-vertex deficiencies).
// Equality of the two numbers is the oracle.
std::pair<long long, long long> rh_check(const CoveringMap& f);

// The induced covering between the barycentric subdivisions: the barycenter
// of a total simplex s is sent to the barycenter of f(s).  Degree and branch
// structure are preserved.
CoveringMap subdivide_covering(const CoveringMap& f);

// Two composable-up-to-subdivision maps, brought to a common middle complex:
// f.base == g.total after subdividing the coarser side.
struct AlignedPair {
    CoveringMap f;
    CoveringMap g;
};

// Subdivides f (when its base is coarser) or g (when its total is coarser)
// until f.base == g.total; both inputs must sit on the same subdivision tower
// within `max_rounds` rounds of each other.
AlignedPair align_coverings(CoveringMap f, CoveringMap g, int max_rounds = 3);

// Composite "g after f" through align_coverings.
CoveringMap compose_aligned(CoveringMap f, CoveringMap g, int max_rounds = 3);

}  // namespace bfold
