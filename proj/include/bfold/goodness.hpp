#pragma once

#include <vector>

#include "bfold/complex.hpp"

namespace bfold {

// Connected components of |c| - |s| in the open-cell model: nodes are the
// simplices of c not in s, adjacent when one is a face of the other.  Each
// component is returned as its sorted simplex list.  `s` must be a subcomplex
// of `c` (the empty complex is fine).
std::vector<std::vector<Simplex>> open_complement_components(const Complex& c,
                                                             const Complex& s);

// Detail behind is_good_subcomplex: per-vertex complement counts at the
// barycenters of s, via links (the primary test) and via stars (the
// equivalent formulation, kept for cross-checking).
struct GoodnessReport {
    bool nowhere_dense = false;  // s contains no top simplex of c
    bool link_condition = false;   // each link complement is connected
    bool star_condition = false;   // each star complement is connected
    bool good() const { return nowhere_dense && link_condition; }
};

// Decides whether s is a good subcomplex of c: s is nowhere dense and, at
// every vertex of the first barycentric subdivision of c lying in |s|, the
// open complement of s in that vertex's link is connected.  The star-based
// variant is evaluated alongside and reported for the equivalence check.
GoodnessReport good_subcomplex_report(const Complex& c, const Complex& s);

inline bool is_good_subcomplex(const Complex& c, const Complex& s) {
    return good_subcomplex_report(c, s).good();
}

}  // namespace bfold
