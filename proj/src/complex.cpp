#include "bfold/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "bfold/goodness.hpp"

namespace bfold {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::none: return "None";
        case ErrorCode::duplicate_vertex_in_simplex: return "DuplicateVertexInSimplex";
        case ErrorCode::unknown_vertex: return "UnknownVertex";
        case ErrorCode::apex_collision: return "ApexCollision";
        case ErrorCode::not_pseudo_manifold: return "NotPseudoManifold";
        case ErrorCode::not_a_subcomplex: return "NotASubcomplex";
        case ErrorCode::group_too_large: return "GroupTooLarge";
        case ErrorCode::not_subgroup: return "NotSubgroup";
        case ErrorCode::bad_permutation: return "BadPermutation";
        case ErrorCode::cocycle_invalid: return "CocycleInvalid";
        case ErrorCode::base_not_pseudo_manifold: return "BaseNotPseudoManifold";
        case ErrorCode::branch_locus_not_good: return "BranchLocusNotGood";
        case ErrorCode::incompatible_complexes: return "IncompatibleComplexes";
        case ErrorCode::total_not_connected: return "TotalNotConnected";
        case ErrorCode::bases_differ: return "BasesDiffer";
        case ErrorCode::neither_regular: return "NeitherRegular";
        case ErrorCode::dimension_not_two: return "DimensionNotTwo";
        case ErrorCode::not_a_branched_covering: return "NotABranchedCovering";
        case ErrorCode::not_simplicial: return "NotSimplicial";
        case ErrorCode::not_effective: return "NotEffective";
        case ErrorCode::not_good_action: return "NotGoodAction";
        case ErrorCode::chart_invalid: return "ChartInvalid";
        case ErrorCode::not_conical: return "NotConical";
        case ErrorCode::not_codim_two: return "NotCodimTwo";
        case ErrorCode::inconsistent_models: return "InconsistentModels";
        case ErrorCode::singular_locus_not_codim_two: return "SingularLocusNotCodimTwo";
        case ErrorCode::not_liftable: return "NotLiftable";
        case ErrorCode::orientation_violation: return "OrientationViolation";
        case ErrorCode::not_equivalent: return "NotEquivalent";
        case ErrorCode::param_out_of_range: return "ParamOutOfRange";
        case ErrorCode::io_failure: return "IOFailure";
        case ErrorCode::usage_error: return "UsageError";
        case ErrorCode::internal_error: return "InternalError";
    }
    return "Unknown";
}

Simplex make_simplex(std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    for (size_t i = 0; i + 1 < vertices.size(); ++i)
        require(vertices[i] != vertices[i + 1], ErrorCode::duplicate_vertex_in_simplex,
                "vertex " + std::to_string(vertices[i]) + " repeats in a simplex");
    require(!vertices.empty(), ErrorCode::usage_error, "a simplex needs at least one vertex");
    require(vertices.front() > 0, ErrorCode::unknown_vertex, "vertex ids must be positive");
    return vertices;
}

Simplex simplex_without(const Simplex& s, Vertex v) {
    Simplex out;
    out.reserve(s.size() - 1);
    for (Vertex w : s)
        if (w != v) out.push_back(w);
    return out;
}

std::string simplex_to_string(const Simplex& s) {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) os << ' ';
        os << s[i];
    }
    os << '}';
    return os.str();
}

namespace {

// All nonempty proper and improper faces of s, s included.
void append_faces(const Simplex& s, std::set<Simplex>& out) {
    const size_t n = s.size();
    // subsets by bitmask; simplex dimensions stay tiny in this library
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        Simplex f;
        for (size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) f.push_back(s[i]);
        out.insert(std::move(f));
    }
}

}  // namespace

Complex Complex::close_and_validate(const std::vector<std::vector<Vertex>>& top) {
    std::set<Simplex> closed;
    for (const auto& raw : top) {
        Simplex s = make_simplex(raw);
        require(s.size() <= 30, ErrorCode::usage_error, "simplex dimension out of supported range");
        append_faces(s, closed);
    }
    return from_simplices(std::vector<Simplex>(closed.begin(), closed.end()));
}

Complex Complex::from_simplices(std::vector<Simplex> simplices) {
    std::sort(simplices.begin(), simplices.end());
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    Complex c;
    c.simplices_ = std::move(simplices);
    c.build_tables();
    return c;
}

void Complex::build_tables() {
    index_.clear();
    index_.reserve(simplices_.size() * 2);
    std::set<Vertex> vs;
    dim_ = -1;
    for (size_t i = 0; i < simplices_.size(); ++i) {
        index_.emplace(simplices_[i], static_cast<int>(i));
        dim_ = std::max(dim_, simplex_dim(simplices_[i]));
        for (Vertex v : simplices_[i]) vs.insert(v);
    }
    vertices_.assign(vs.begin(), vs.end());
    // A simplex is maximal when no coface of one dimension higher exists.
    tops_.clear();
    for (const Simplex& s : simplices_) {
        bool maximal = true;
        if (simplex_dim(s) < dim_) {
            for (Vertex v : vertices_) {
                if (simplex_contains(s, v)) continue;
                Simplex bigger = s;
                bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), v), v);
                if (index_.count(bigger)) {
                    maximal = false;
                    break;
                }
            }
        }
        if (maximal) tops_.push_back(s);
    }
}

bool Complex::contains_vertex(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int Complex::index_of(const Simplex& s) const {
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
}

bool Complex::is_top(const Simplex& s) const {
    return std::binary_search(tops_.begin(), tops_.end(), s);
}

std::vector<Simplex> Complex::skeleton_of_dim(int d) const {
    std::vector<Simplex> out;
    for (const Simplex& s : simplices_)
        if (simplex_dim(s) == d) out.push_back(s);
    return out;
}

Complex Complex::skeleton(int k) const {
    std::vector<Simplex> out;
    for (const Simplex& s : simplices_)
        if (simplex_dim(s) <= k) out.push_back(s);
    return Complex::from_simplices(std::move(out));
}

std::vector<Simplex> Complex::cofaces(const Simplex& s) const {
    std::vector<Simplex> out;
    for (Vertex v : vertices_) {
        if (simplex_contains(s, v)) continue;
        Simplex bigger = s;
        bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), v), v);
        if (index_.count(bigger)) out.push_back(std::move(bigger));
    }
    return out;
}

std::vector<Simplex> Complex::star_simplices(const Simplex& s) const {
    std::vector<Simplex> out;
    for (const Simplex& t : simplices_)
        if (is_face_of(s, t)) out.push_back(t);
    return out;
}

Complex Complex::star(const Simplex& s) const {
    require(contains(s), ErrorCode::unknown_vertex, "star of a simplex outside the complex");
    std::set<Simplex> closed;
    for (const Simplex& t : star_simplices(s)) append_faces(t, closed);
    return Complex::from_simplices(std::vector<Simplex>(closed.begin(), closed.end()));
}

Complex Complex::link(const Simplex& s) const {
    require(contains(s), ErrorCode::unknown_vertex, "link of a simplex outside the complex");
    std::vector<Simplex> out;
    for (const Simplex& t : simplices_) {
        if (!is_face_of(s, t)) continue;
        Simplex rest;
        std::set_difference(t.begin(), t.end(), s.begin(), s.end(), std::back_inserter(rest));
        if (!rest.empty()) out.push_back(std::move(rest));
    }
    return Complex::from_simplices(std::move(out));
}

long long Complex::euler_characteristic() const {
    long long chi = 0;
    for (const Simplex& s : simplices_)
        chi += (simplex_dim(s) % 2 == 0) ? 1 : -1;
    return chi;
}

std::vector<Complex> Complex::connected_components() const {
    // Vertex-level union-find; simplices join the component of their vertices.
    std::map<Vertex, Vertex> parent;
    std::function<Vertex(Vertex)> find = [&](Vertex v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (Vertex v : vertices_) parent[v] = v;
    for (const Simplex& s : simplices_)
        for (size_t i = 1; i < s.size(); ++i) {
            Vertex a = find(s[0]), b = find(s[i]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<Vertex, std::vector<Simplex>> buckets;
    for (const Simplex& s : simplices_) buckets[find(s[0])].push_back(s);
    std::vector<Complex> out;
    for (auto& [root, simps] : buckets) out.push_back(Complex::from_simplices(std::move(simps)));
    return out;
}

bool Complex::is_connected() const {
    if (empty()) return false;
    return connected_components().size() == 1;
}

bool Complex::is_pseudo_manifold_with_boundary() const {
    if (empty()) return false;
    const int m = dim_;
    for (const Simplex& t : tops_)
        if (simplex_dim(t) != m) return false;
    if (m == 0) return true;
    for (const Simplex& s : simplices_) {
        if (simplex_dim(s) != m - 1) continue;
        size_t n = cofaces(s).size();
        if (n < 1 || n > 2) return false;
    }
    return true;
}

Orientation Complex::orient() const {
    Orientation out;
    out.signs.assign(tops_.size(), 0);
    if (empty()) return out;
    const int m = dim_;
    for (const Simplex& t : tops_)
        require(simplex_dim(t) == m, ErrorCode::not_pseudo_manifold,
                "orientation of an inhomogeneous complex");

    // index of each top simplex and the facet-to-cofaces table
    std::unordered_map<Simplex, std::vector<int>, SimplexHash> by_facet;
    for (size_t i = 0; i < tops_.size(); ++i)
        for (Vertex v : tops_[i])
            by_facet[simplex_without(tops_[i], v)].push_back(static_cast<int>(i));
    for (auto& [facet, ids] : by_facet)
        require(ids.size() <= 2, ErrorCode::not_pseudo_manifold,
                "orientation undefined along a facet with more than two cofaces");

    // position of the removed vertex decides the induced sign on a facet
    auto removed_parity = [](const Simplex& top, const Simplex& facet) {
        for (size_t i = 0; i < top.size(); ++i)
            if (!simplex_contains(facet, top[i])) return static_cast<int>(i);
        return -1;
    };

    std::vector<int> sign(tops_.size(), 0);
    for (size_t seed = 0; seed < tops_.size(); ++seed) {
        if (sign[seed] != 0) continue;
        sign[seed] = 1;
        std::queue<int> q;
        q.push(static_cast<int>(seed));
        while (!q.empty()) {
            int i = q.front();
            q.pop();
            for (Vertex v : tops_[i]) {
                Simplex facet = simplex_without(tops_[i], v);
                if (facet.empty()) continue;
                const auto& ids = by_facet[facet];
                if (ids.size() != 2) continue;
                int j = ids[0] == i ? ids[1] : ids[0];
                int pi = removed_parity(tops_[i], facet);
                int pj = removed_parity(tops_[j], facet);
                // coherence: induced orientations on the shared facet oppose
                int needed = -sign[i] * ((pi + pj) % 2 == 0 ? 1 : -1);
                if (sign[j] == 0) {
                    sign[j] = needed;
                    q.push(j);
                } else if (sign[j] != needed) {
                    return out;  // conflict: non-orientable
                }
            }
        }
    }
    out.orientable = true;
    out.signs = std::move(sign);
    return out;
}

Subdivision Complex::barycentric_subdivide() const {
    Subdivision sd;
    sd.carrier = simplices_;  // vertex i+1 is the barycenter of simplices()[i]
    // New simplices are the chains s0 < s1 < ... < sk of the face order; each
    // chain is enumerated once, descending from its maximal element.
    std::vector<Simplex> out;
    std::vector<int> chain;
    std::vector<std::vector<int>> faces_of(simplices_.size());
    for (size_t i = 0; i < simplices_.size(); ++i) {
        std::set<Simplex> fs;
        append_faces(simplices_[i], fs);
        for (const Simplex& f : fs)
            if (f != simplices_[i]) faces_of[i].push_back(index_of(f));
        std::sort(faces_of[i].begin(), faces_of[i].end());
    }
    std::function<void(int)> walk = [&](int i) {
        chain.push_back(i);
        Simplex s;
        for (int id : chain) s.push_back(id + 1);
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
        for (int f : faces_of[i]) walk(f);
        chain.pop_back();
    };
    for (size_t i = 0; i < simplices_.size(); ++i) walk(static_cast<int>(i));
    sd.complex = Complex::from_simplices(std::move(out));
    return sd;
}

Subdivision Complex::barycentric_subdivide(int times) const {
    require(times >= 1, ErrorCode::usage_error, "subdivision count must be positive");
    Subdivision sd = barycentric_subdivide();
    for (int round = 1; round < times; ++round) {
        Subdivision next = sd.complex.barycentric_subdivide();
        // compose carriers: the carrier of a new vertex is the largest (hence
        // carrying) element of its chain, resolved in the original complex
        std::vector<Simplex> composed(next.carrier.size());
        for (size_t i = 0; i < next.carrier.size(); ++i) {
            const Simplex& chain = next.carrier[i];  // vertices of the previous round
            Simplex best;
            for (Vertex pv : chain) {
                const Simplex& cand = sd.carrier[pv - 1];
                if (cand.size() > best.size() || (cand.size() == best.size() && cand > best))
                    best = cand;
            }
            composed[i] = best;
        }
        next.carrier = std::move(composed);
        sd = std::move(next);
    }
    return sd;
}

Complex Complex::cone(Vertex apex) const {
    require(apex > 0, ErrorCode::unknown_vertex, "apex id must be positive");
    require(!contains_vertex(apex), ErrorCode::apex_collision,
            "apex " + std::to_string(apex) + " already belongs to the complex");
    std::vector<Simplex> out = simplices_;
    out.push_back(Simplex{apex});
    for (const Simplex& s : simplices_) {
        Simplex t = s;
        t.insert(std::upper_bound(t.begin(), t.end(), apex), apex);
        out.push_back(std::move(t));
    }
    return Complex::from_simplices(std::move(out));
}

bool Complex::has_subcomplex(const Complex& sub) const {
    for (const Simplex& s : sub.simplices())
        if (!contains(s)) return false;
    return true;
}

std::pair<Complex, std::vector<Vertex>> Complex::compress_ids() const {
    std::vector<Vertex> old_ids = vertices_;
    std::map<Vertex, Vertex> to_new;
    for (size_t i = 0; i < old_ids.size(); ++i) to_new[old_ids[i]] = static_cast<Vertex>(i + 1);
    std::vector<Simplex> out;
    out.reserve(simplices_.size());
    for (const Simplex& s : simplices_) {
        Simplex t;
        t.reserve(s.size());
        for (Vertex v : s) t.push_back(to_new[v]);
        out.push_back(std::move(t));
    }
    return {Complex::from_simplices(std::move(out)), old_ids};
}

Complex complex_union(const Complex& a, const Complex& b) {
    std::vector<Simplex> out = a.simplices();
    out.insert(out.end(), b.simplices().begin(), b.simplices().end());
    return Complex::from_simplices(std::move(out));
}

Complex complex_closure_minus(const Complex& a, const Complex& b) {
    std::set<Simplex> closed;
    for (const Simplex& s : a.simplices())
        if (!b.contains(s)) append_faces(s, closed);
    return Complex::from_simplices(std::vector<Simplex>(closed.begin(), closed.end()));
}

PseudoManifoldReport Complex::pseudo_manifold_report() const {
    PseudoManifoldReport rep;
    if (empty()) return rep;
    const int m = dim_;
    rep.homogeneous = true;
    for (const Simplex& t : tops_)
        if (simplex_dim(t) != m) {
            rep.homogeneous = false;
            break;
        }
    rep.two_cofaces = true;
    if (m >= 1) {
        for (const Simplex& s : simplices_) {
            if (simplex_dim(s) != m - 1) continue;
            if (cofaces(s).size() != 2) {
                rep.two_cofaces = false;
                break;
            }
        }
    }
    rep.skeleton_good =
        (m - 2 < 0) ? true  // the empty skeleton is good
                    : is_good_subcomplex(*this, skeleton(m - 2));
    return rep;
}

}  // namespace bfold
