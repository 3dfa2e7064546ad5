#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "bfold/simplex.hpp"

namespace bfold {

class Complex;

// Report produced by pseudo_manifold_report(); the verdict is the conjunction
// of the three recorded properties.
struct PseudoManifoldReport {
    bool homogeneous = false;     // every maximal simplex has top dimension
    bool two_cofaces = false;     // every (m-1)-simplex has exactly two m-cofaces
    bool skeleton_good = false;   // the (m-2)-skeleton is a good subcomplex
    bool verdict() const { return homogeneous && two_cofaces && skeleton_good; }
};

// Coherent orientation of the top simplices: sign[i] is +1/-1 relative to the
// sorted vertex order of top_simplices()[i].
struct Orientation {
    bool orientable = false;
    std::vector<int> signs;  // aligned with Complex::top_simplices()
};

struct Subdivision;

// A finite abstract simplicial complex.  Simplices are stored face-closed,
// deduplicated and in canonical (lexicographic) order; the empty complex is
// allowed.  Instances are immutable after construction.
class Complex {
public:
    Complex() = default;

    // Face-closes the given top simplices and validates vertex lists.
    // Vertex ids must be positive; duplicates inside one simplex are an error.
    static Complex close_and_validate(const std::vector<std::vector<Vertex>>& top);

    // Builds from an already face-closed family (validated in debug paths).
    static Complex from_simplices(std::vector<Simplex> simplices);

    const std::vector<Simplex>& simplices() const { return simplices_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    int dim() const { return dim_; }
    bool empty() const { return simplices_.empty(); }
    size_t size() const { return simplices_.size(); }

    bool contains(const Simplex& s) const { return index_of(s) >= 0; }
    bool contains_vertex(Vertex v) const;
    // Position in simplices(), or -1.
    int index_of(const Simplex& s) const;

    // Maximal simplices (not a proper face of any other simplex).
    const std::vector<Simplex>& top_simplices() const { return tops_; }
    bool is_top(const Simplex& s) const;

    // Simplices of the given dimension.
    std::vector<Simplex> skeleton_of_dim(int d) const;
    // The full k-skeleton as a complex.
    Complex skeleton(int k) const;

    // Cofaces of s of dimension dim(s)+1.
    std::vector<Simplex> cofaces(const Simplex& s) const;
    // All simplices having s as a face (s itself included).
    std::vector<Simplex> star_simplices(const Simplex& s) const;

    // Closed star and link of a simplex, as subcomplexes.
    Complex star(const Simplex& s) const;
    Complex link(const Simplex& s) const;

    long long euler_characteristic() const;

    // Connected components (face-incidence connectivity), each a complex.
    std::vector<Complex> connected_components() const;
    bool is_connected() const;

    // Three-property pseudo-manifold report; see PseudoManifoldReport.
    PseudoManifoldReport pseudo_manifold_report() const;
    bool is_pseudo_manifold() const { return pseudo_manifold_report().verdict(); }

    // Relaxed variant for complexes with boundary: (m-1)-simplices may have
    // one or two top cofaces.  Used by chart validation, where local models
    // are compact cones standing in for open stars.
    bool is_pseudo_manifold_with_boundary() const;

    // Coherent orientation via breadth-first propagation over the dual graph.
    // (m-1)-simplices with a single coface (boundary) impose no constraint.
    Orientation orient() const;
    bool is_orientable() const { return orient().orientable; }

    // One barycentric subdivision round with carrier bookkeeping.
    Subdivision barycentric_subdivide() const;
    // `times` rounds; carriers are tracked to the immediately preceding round
    // composed down to original-complex carriers (smallest original simplex
    // containing the new vertex).
    Subdivision barycentric_subdivide(int times) const;

    // Cone over this complex with a fresh apex vertex.  The apex id must not
    // collide with existing vertices.  cone(empty) is the single vertex.
    Complex cone(Vertex apex) const;

    // True when every simplex of `sub` belongs to this complex.
    bool has_subcomplex(const Complex& sub) const;

    // Renumbers vertices densely to 1..n preserving order; returns the new
    // complex and the old-id list indexed by new id.
    std::pair<Complex, std::vector<Vertex>> compress_ids() const;

    bool operator==(const Complex& other) const { return simplices_ == other.simplices_; }
    bool operator!=(const Complex& other) const { return !(*this == other); }

private:
    void build_tables();

    std::vector<Simplex> simplices_;  // canonical order, face-closed
    std::vector<Simplex> tops_;
    std::vector<Vertex> vertices_;    // sorted
    int dim_ = -1;
    std::unordered_map<Simplex, int, SimplexHash> index_;
};

// Result of barycentric subdivision: the subdivided complex plus a carrier
// table mapping every new vertex to the original simplex in whose interior it
// sits (for one round, the simplex it is the barycenter of).  New vertex ids
// are 1..N in canonical simplex order of the source complex.
struct Subdivision {
    Complex complex;
    std::vector<Simplex> carrier;  // carrier[v-1] = carrier simplex of new vertex v
};

// Union of two subcomplex families (must live in a common parent complex).
Complex complex_union(const Complex& a, const Complex& b);
// Simplices of `a` not in `b`, face-closed (i.e. the closure of a - b).
Complex complex_closure_minus(const Complex& a, const Complex& b);

}  // namespace bfold
