#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bfold/error.hpp"

namespace bfold {

// A permutation of {1..n}, stored as the image table in 0-based memory.
// Composition is right-to-left: (a * b)(x) = a(b(x)).
class Perm {
public:
    Perm() = default;
    explicit Perm(int degree);                    // identity
    explicit Perm(std::vector<int> images);       // 0-based image table

    static Perm identity(int degree) { return Perm(degree); }
    // Parses disjoint-cycle text over 1-based points, e.g. "(1 2 3)(4 5)";
    // "()" is the identity.  Points beyond the cycles are fixed.
    static Perm parse(const std::string& text, int degree);

    int degree() const { return static_cast<int>(img_.size()); }
    int apply0(int x) const { return img_[x]; }               // 0-based
    int apply(int x) const { return img_[x - 1] + 1; }        // 1-based

    Perm inverse() const;
    Perm operator*(const Perm& other) const;
    bool is_identity() const;

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    // Disjoint-cycle text with 1-based points; identity prints as "()".
    std::string to_string() const;

    const std::vector<int>& images() const { return img_; }

    // Parity: +1 even, -1 odd.
    int sign() const;
    int order() const;

private:
    std::vector<int> img_;
};

// A finite permutation group given by generators, with all elements
// materialized (breadth-first closure).  Enumeration is capped; exceeding the
// cap raises GroupTooLarge.
class PermGroup {
public:
    static constexpr size_t default_cap = 1000000;

    PermGroup() = default;
    // trivial group of the given degree
    static PermGroup trivial(int degree);
    static PermGroup generate(const std::vector<Perm>& generators,
                              size_t cap = default_cap);
    // wraps an already closed element set (must contain the identity)
    static PermGroup from_elements(std::vector<Perm> elements,
                                   std::vector<Perm> generators = {});

    int degree() const { return degree_; }
    size_t order() const { return elements_.size(); }
    const std::vector<Perm>& elements() const { return elements_; }     // sorted
    const std::vector<Perm>& generators() const { return generators_; }

    bool contains(const Perm& p) const;
    bool is_trivial() const { return order() == 1; }

    // Orbits of {1..degree}, each sorted, listed by least member.
    std::vector<std::vector<int>> orbits() const;

    bool is_subgroup_of(const PermGroup& g) const;
    bool is_normal_in(const PermGroup& g) const;
    bool operator==(const PermGroup& o) const { return elements_ == o.elements_; }

private:
    int degree_ = 0;
    std::vector<Perm> elements_;
    std::vector<Perm> generators_;
};

struct SubgroupRelations {
    bool h_subgroup = false;   // H <= G
    bool k_normal = false;     // K normal in G
    bool product_is_g = false; // HK = G as sets
};

// Relations of a candidate pair (H, K) inside G.
SubgroupRelations subgroup_relations(const PermGroup& g, const PermGroup& h,
                                     const PermGroup& k);

// Intersection of the conjugates of h over g: the largest subgroup of h that
// is normal in g.  h must be a subgroup of g.
PermGroup group_core(const PermGroup& g, const PermGroup& h);

// Set intersection of two groups on the same degree.
PermGroup group_intersection(const PermGroup& a, const PermGroup& b);

// Pointwise product set {h*k}; a group when one factor normalizes the other.
std::vector<Perm> product_set(const PermGroup& h, const PermGroup& k);

// Left-coset action of g on g/h.  Cosets are numbered 1..index by their
// lexicographically least representative (so the coset of the identity is
// always point 1).  Returns the images of g's generators plus the index.
struct CosetAction {
    int index = 0;
    std::vector<Perm> generator_images;  // aligned with g.generators()
    std::vector<Perm> coset_reps;        // least representative per coset
};
CosetAction coset_action(const PermGroup& g, const PermGroup& h);
// Image of an arbitrary element of g under the same coset numbering.
Perm coset_action_image(const PermGroup& g, const PermGroup& h, const Perm& a);

// All subgroups of g (small-order lattice walk; intended for |g| <= a few
// hundred).  Sorted by (order, element list).
std::vector<PermGroup> all_subgroups(const PermGroup& g);

// Subgroup generated inside an ambient degree by a subset of elements.
PermGroup subgroup_generated(const std::vector<Perm>& gens, int degree,
                             size_t cap = PermGroup::default_cap);

// Centralizer of the given elements within the full symmetric group of that
// degree, found by backtracking (degree is expected to stay small).
PermGroup symmetric_centralizer(const std::vector<Perm>& elements, int degree,
                                size_t cap = PermGroup::default_cap);

// Group isomorphism test by generator-image backtracking (small orders).
bool groups_isomorphic(const PermGroup& a, const PermGroup& b);

}  // namespace bfold
