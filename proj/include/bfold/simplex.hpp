#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bfold/error.hpp"

namespace bfold {

// Vertices are positive integer ids.  An abstract simplex is the strictly
// increasing list of its vertices; the empty list is not a simplex.
using Vertex = int;
using Simplex = std::vector<Vertex>;

// Canonical simplex order: plain lexicographic comparison of the sorted
// vertex sequences.  All deterministic tie-breaking in the library uses it.
inline bool simplex_less(const Simplex& a, const Simplex& b) { return a < b; }

inline int simplex_dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

// Sorts and validates a raw vertex list; repeated vertices are an error.
Simplex make_simplex(std::vector<Vertex> vertices);

inline bool is_face_of(const Simplex& face, const Simplex& s) {
    return std::includes(s.begin(), s.end(), face.begin(), face.end());
}

// True when one simplex is a face of the other (used for open-cell adjacency).
inline bool face_related(const Simplex& a, const Simplex& b) {
    return a.size() <= b.size() ? is_face_of(a, b) : is_face_of(b, a);
}

inline bool simplex_contains(const Simplex& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

// s minus one vertex (v must belong to s).
Simplex simplex_without(const Simplex& s, Vertex v);

std::string simplex_to_string(const Simplex& s);

struct SimplexHash {
    size_t operator()(const Simplex& s) const {
        // FNV-1a over the vertex words; plenty for the table sizes we meet.
        uint64_t h = 1469598103934665603ull;
        for (Vertex v : s) {
            h ^= static_cast<uint64_t>(static_cast<uint32_t>(v));
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

}  // namespace bfold
