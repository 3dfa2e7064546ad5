#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bfold/action.hpp"

namespace bfold {

// A branchfold chart: a finite group G acting simplicially on a connected
// complex P, with a subgroup H and a normal subgroup K satisfying HK = G.
// The two quotients U = P/H (the instance side) and V = P/K (the manifold
// side) project onto P/G in a commuting square of branched coverings
//
//            P
//     pi_h /   \ pi_k
//         U     V
//       p  \   / p_gk
//           P/G
//
// Quotients are taken at the smallest common subdivision level where all
// three orbit complexes are simplicial; the level and the lifted data are
// recorded alongside the derived maps.  Conical charts (local models)
// additionally carry a G-fixed apex with P equal to its closed star.
struct Chart {
    SimplicialAction action;      // G acting on P
    PermGroup h;
    PermGroup k;
    std::optional<Vertex> apex;   // G-fixed cone vertex of a local model

    int level = 0;                // common quotient level of H, K and G
    SimplicialAction lifted;      // G on the level-subdivided P
    PermGroup h_lifted;
    PermGroup k_lifted;
    std::optional<Vertex> apex_lifted;

    Complex u;                    // P/H at the common level
    Complex v;                    // P/K
    Complex pmodg;                // P/G
    CoveringMap pi_h;             // subdivided P -> U
    CoveringMap pi_k;             // subdivided P -> V
    CoveringMap pi_g;             // subdivided P -> P/G
    CoveringMap p;                // U -> P/G
    CoveringMap p_gk;             // V -> P/G
};

// Outcome of every chart invariant, recorded separately so a failing input
// can be diagnosed without throwing.
struct ChartReport {
    ActionReport action;          // G acts simplicially and effectively
    SubgroupRelations relations;  // H <= G, K normal in G, HK = G
    bool p_connected = false;
    bool p_oriented = false;      // P is an orientable pseudo-manifold (boundary ok)
    bool apex_ok = true;          // the apex, when given, is a G-fixed vertex
    bool action_good = false;     // the singular set S_G is good in P
    bool quotient_ok = false;     // a common quotient level <= 2 exists
    bool v_oriented = false;      // V is an orientable pseudo-manifold
    bool gk_effective = false;    // G/K acts effectively on V
    bool gk_oriented = false;     // ...preserving an orientation of V
    bool commutes = false;        // p o pi_h == p_gk o pi_k == pi_g
    bool coverings_ok = false;    // the derived maps analyze as branched coverings

    bool valid() const {
        return action.valid() && relations.h_subgroup && relations.k_normal &&
               relations.product_is_g && p_connected && p_oriented && apex_ok &&
               action_good && quotient_ok && v_oriented && gk_effective &&
               gk_oriented && commutes && coverings_ok;
    }
};

// Checks every chart invariant without throwing; derived data that cannot be
// built (for example when no quotient level works) simply leaves the
// corresponding flags false.
ChartReport validate_chart(const SimplicialAction& action, const PermGroup& h,
                           const PermGroup& k,
                           std::optional<Vertex> apex = std::nullopt);
ChartReport validate_chart(const Chart& c);

// Builds the chart with all derived data, or throws ChartInvalid naming the
// failed invariants.
Chart make_chart(SimplicialAction action, PermGroup h, PermGroup k,
                 std::optional<Vertex> apex = std::nullopt);

// The canonical (h, k) disk model: the cone over a 2*lcm(h, k)-gon with the
// rotation groups G = Z_lcm, H = Z_h and K = Z_k generated by rim shifts.
// The apex is the cone vertex.  For h = k = 1 the rim degenerates to a
// triangle and all groups are trivial.
Chart disk_model(int h, int k);

// The chart carried to the first barycentric subdivision of P: groups are
// lifted barycenter-wise, the apex becomes its own barycenter.
Chart subdivide_chart(const Chart& c);

// Whether the chart is a cone: an apex is recorded and P is its closed star.
bool is_conical(const Chart& c);

// A reduced fraction num/den.
struct IndexFraction {
    long long num = 1;
    long long den = 1;
};

// "num/den", with a trivial denominator printed as plain "num".
std::string fraction_text(const IndexFraction& f);

// The index |H|/|K| of a conical chart, as a reduced fraction.  Throws
// NotConical for charts without a cone structure.
IndexFraction chart_index(const Chart& c);

// The chart induced at a vertex x of P: the closed star of x acted on by
// H' = H n Stab(x) and K' = K n Stab(x), with G' = H'K' and apex x.  The
// restriction of a conical chart at its own apex is the chart itself.
Chart conical_restriction(const Chart& c, Vertex x);

// A chart together with the covering that collapsed it from a finer one.
struct ChartReduction {
    Chart chart;
    PermGroup n;            // the normal subgroup that was quotiented out
    CoveringMap projection; // P (at n's quotient level) -> chart's P
};

// Quotient by the core N of H n K in G: P/N with the image groups G/N, H/N,
// K/N.  Idempotent; when N is already trivial the chart is returned
// unchanged with the identity projection.
ChartReduction reduce_chart(const Chart& c);

// Whether the core of H n K in G is trivial.
bool is_reduced(const Chart& c);

// Chart isomorphism: a simplicial isomorphism of the P complexes carrying
// G to G, H to H and K to K by conjugation (and apex to apex when both
// charts are conical).  Group orders above 24 and complexes above the
// internal size cap are rejected.
std::optional<std::map<Vertex, Vertex>> chart_isomorphism(const Chart& a,
                                                          const Chart& b);

// Witness that c1 dominates c2: a normal subgroup N of G1 inside H1 n K1
// whose quotient chart is isomorphic to c2, up to aligning triangulations by
// barycentric subdivision.
struct DominationWitness {
    PermGroup n;
    Chart quotient;                 // c1 / N
    CoveringMap projection;         // the covering collapsing c1 onto it
    std::map<Vertex, Vertex> iso;   // aligned isomorphism quotient -> c2
    int rounds_quotient = 0;        // subdivision rounds applied to c1/N
    int rounds_target = 0;          // ...and to c2, before the isomorphism
};

// Searches the normal subgroups of G1 inside H1 n K1 for a quotient chart
// isomorphic to c2.  The trivial subgroup witnesses isomorphic charts.
std::optional<DominationWitness> dominates(const Chart& c1, const Chart& c2);

// Equivalence: both charts reduce to isomorphic reduced charts (after
// triangulation alignment).  This is reflexive, symmetric and transitive.
bool charts_equivalent(const Chart& c1, const Chart& c2);

// A chart dominating both inputs, with the two witness maps.
struct CommonDomination {
    Chart chart;
    CoveringMap to_first;   // chart's P -> a subdivision of c1's P
    CoveringMap to_second;  // chart's P -> a subdivision of c2's P
};

// Builds a common dominating chart for two equivalent charts: the connected
// pullback of their reduction coverings, regularized over the common reduced
// chart's P/G; the deck stabilizers of the two factor maps to U and V become
// H and K.  Throws NotEquivalent when the reductions are not isomorphic.
CommonDomination common_dominating_chart(const Chart& c1, const Chart& c2);

// A codimension-two local model type: rotation orders (h, k), coprime.
struct CodimTwoModel {
    int h = 1;
    int k = 1;
};

// "h/k" with k = 1 printed as plain "h".
std::string model_label(const CodimTwoModel& m);

// Classifies a reduced conical chart as a codimension-two rotation model:
// H, K and G must be cyclic and every nontrivial element of G must fix
// exactly one common axis of codimension two through the apex.  Returns the
// coprime pair (|H|, |K|); the trivial chart classifies as (1, 1).  Throws
// NotConical without a cone structure and NotCodimTwo otherwise.
CodimTwoModel classify_codim2(const Chart& c);

enum class BranchfoldKind { orbifold, pure, mixed };

// Orbifold when every K is trivial; pure when every H lies inside its K;
// mixed otherwise.
BranchfoldKind classify_kind(const std::vector<Chart>& models);

}  // namespace bfold
