#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bfold/chart.hpp"

namespace bfold {

// The coset action of a chart's local loops on H/(H n K): loops in the
// nonsingular part of U act on the fiber of P/(H n K) -> P/H, and the
// kernel of this action is exactly the subgroup of loops that lift to the
// manifold side V.  The chart is an orbifold chart when the order is |H|
// and a purely branched one when the order is 1.
struct LocalCharacteristic {
    PermGroup image;   // monodromy image on the cosets of H n K in H
    size_t order = 1;  // |image|
};

LocalCharacteristic local_characteristic(const Chart& c);

// The reduced conical local models of the chart's instance U = P/H, one per
// singular vertex.  A vertex is singular when the reduced restriction of
// the chart at (a preimage of) it carries a nontrivial group; nonsingular
// vertices are omitted from the map.
std::map<Vertex, Chart> instance_models(const Chart& c);

// One connected open piece of a stratum of the singular locus: the
// simplices of Sigma_i minus Sigma_(i-1) it consists of, the stratum
// dimension i, and the (h, k) rotation type of the local model carried
// along it.  Pieces of deeper strata (junctions), where the local model is
// conical but not of rotation type, carry h = k = 0.
struct StratumComponent {
    std::vector<Simplex> simplices;
    int dim = 0;
    int h = 0;
    int k = 0;
};

// The filtration Sigma_0 <= Sigma_1 <= ... <= Sigma_(m-2) of the singular
// locus of an m-dimensional instance, together with its open-stratum
// components.  sigma[i] is the full subcomplex spanned by the singular
// vertices whose model fixes a subcomplex of dimension at most i.
struct Stratification {
    std::vector<Complex> sigma;
    std::vector<StratumComponent> components;
};

// Stratifies the instance x from its local models (as produced by
// instance_models): the singular locus is the full subcomplex on the model
// vertices, filtered by the dimension of the model's fixed locus.  The
// rotation type must be constant along every open component; otherwise
// InconsistentModels is thrown.
Stratification stratify(const Complex& x, const std::map<Vertex, Chart>& models);

// A finite group presentation.  Generators are numbered 1..generators;
// relation words list them as +g for the generator and -g for its inverse.
struct Presentation {
    int generators = 0;
    std::vector<std::vector<int>> relations;
};

// The branchfold fundamental group of an instance whose singular locus is a
// closed codimension-two stratum: the dual-graph presentation of the
// complement of the singular locus, with the dual walk around each singular
// cell imposed to the power h of its component (and to the first power
// around nonsingular cells).  Throws SingularLocusNotCodimTwo when some
// component is a junction or of the wrong dimension.
Presentation branchfold_pi1(const Complex& x, const Stratification& strata);

// Invariant factors of the abelianization of p: the torsion factors in
// divisibility order (trivial ones dropped), followed by one 0 per free
// rank.
std::vector<long long> abelian_invariants(const Presentation& p);

// A chart lifted through a branched covering of its instance, with the maps
// relating the new total space to the old one and to the covering space.
struct LiftedChart {
    Chart chart;           // the induced chart upstairs
    CoveringMap to_p;      // chart's P -> a subdivision of the input chart's P
    CoveringMap to_space;  // chart's P -> a subdivision of the covering space
};

// Lifts the chart c through a branched covering f onto its instance U: the
// chosen connected component of the pullback of pi_h and f, regularized
// over P/G, becomes the new P, and the deck transformations preserving the
// fibers over the covering space and over V become H and K.  Throws
// NotABranchedCovering when f fails to analyze, IncompatibleComplexes when
// its base does not sit over U, and ParamOutOfRange for a bad component
// index.
LiftedChart lift_chart(const CoveringMap& f, const Chart& c, int component = 0);

// The chart induced on the quotient of the instance by a group l of
// simplicial automorphisms of U: each generator must lift through pi_h to
// an orientation-preserving automorphism of P, and the lifts extend H.
// Throws NotLiftable when a generator is not simplicial on U or has no
// lift, and OrientationViolation when a lift reverses the orientation of P.
Chart quotient_chart(const Chart& c, const PermGroup& l);

}  // namespace bfold
