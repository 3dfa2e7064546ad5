#include "bfold/perm.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace bfold {

Perm::Perm(int degree) : img_(degree) { std::iota(img_.begin(), img_.end(), 0); }

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int x : img_) {
        require(x >= 0 && x < static_cast<int>(img_.size()) && !seen[x],
                ErrorCode::bad_permutation, "image table is not a bijection");
        seen[x] = true;
    }
}

Perm Perm::parse(const std::string& text, int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    bool any = false;
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        require(text[i] == '(', ErrorCode::bad_permutation,
                "expected '(' in cycle text: " + text);
        ++i;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            require(i < text.size(), ErrorCode::bad_permutation, "unterminated cycle: " + text);
            if (text[i] == ')') {
                ++i;
                break;
            }
            if (text[i] == ',') {
                ++i;
                continue;
            }
            require(isdigit(static_cast<unsigned char>(text[i])), ErrorCode::bad_permutation,
                    "unexpected character in cycle text: " + text);
            int value = 0;
            while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
                value = value * 10 + (text[i] - '0');
                ++i;
            }
            require(value >= 1 && value <= degree, ErrorCode::bad_permutation,
                    "cycle point " + std::to_string(value) + " outside 1.." +
                        std::to_string(degree));
            cycle.push_back(value - 1);
        }
        for (size_t j = 0; j < cycle.size(); ++j) {
            for (size_t l = j + 1; l < cycle.size(); ++l)
                require(cycle[j] != cycle[l], ErrorCode::bad_permutation,
                        "repeated point in a cycle: " + text);
        }
        if (cycle.size() >= 2) {
            for (size_t j = 0; j < cycle.size(); ++j)
                img[cycle[j]] = cycle[(j + 1) % cycle.size()];
        }
        any = true;
        skip_ws();
    }
    require(any, ErrorCode::bad_permutation, "empty permutation text");
    return Perm(img);
}

Perm Perm::inverse() const {
    std::vector<int> inv(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<int>(i);
    return Perm(std::move(inv));
}

Perm Perm::operator*(const Perm& other) const {
    require(degree() == other.degree(), ErrorCode::bad_permutation,
            "composing permutations of different degrees");
    std::vector<int> img(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) img[i] = img_[other.img_[i]];
    return Perm(std::move(img));
}

bool Perm::is_identity() const {
    for (size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i)) return false;
    return true;
}

std::string Perm::to_string() const {
    std::ostringstream os;
    std::vector<bool> seen(img_.size(), false);
    bool any = false;
    for (size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == static_cast<int>(i)) continue;
        os << '(';
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) os << ' ';
            os << (j + 1);
            first = false;
            j = static_cast<size_t>(img_[j]);
        }
        os << ')';
        any = true;
    }
    if (!any) return "()";
    return os.str();
}

int Perm::sign() const {
    std::vector<bool> seen(img_.size(), false);
    int sgn = 1;
    for (size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        size_t len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<size_t>(img_[j]);
            ++len;
        }
        if (len % 2 == 0) sgn = -sgn;
    }
    return sgn;
}

int Perm::order() const {
    Perm p = *this;
    int n = 1;
    while (!p.is_identity()) {
        p = p * (*this);
        ++n;
        require(n <= 1 << 20, ErrorCode::internal_error, "runaway permutation order");
    }
    return n;
}

PermGroup PermGroup::trivial(int degree) {
    PermGroup g;
    g.degree_ = degree;
    g.elements_ = {Perm::identity(degree)};
    return g;
}

PermGroup PermGroup::generate(const std::vector<Perm>& generators, size_t cap) {
    require(!generators.empty(), ErrorCode::bad_permutation,
            "generate needs at least one permutation (use trivial() for the empty set)");
    int degree = generators.front().degree();
    for (const Perm& p : generators)
        require(p.degree() == degree, ErrorCode::bad_permutation,
                "generators act on different degrees");
    std::set<Perm> closed;
    std::queue<Perm> frontier;
    Perm id = Perm::identity(degree);
    closed.insert(id);
    frontier.push(id);
    while (!frontier.empty()) {
        Perm cur = frontier.front();
        frontier.pop();
        for (const Perm& g : generators) {
            Perm next = g * cur;
            if (closed.insert(next).second) {
                require(closed.size() <= cap, ErrorCode::group_too_large,
                        "group enumeration exceeded cap of " + std::to_string(cap));
                frontier.push(std::move(next));
            }
        }
    }
    PermGroup out;
    out.degree_ = degree;
    out.elements_.assign(closed.begin(), closed.end());
    out.generators_ = generators;
    return out;
}

PermGroup PermGroup::from_elements(std::vector<Perm> elements, std::vector<Perm> generators) {
    require(!elements.empty(), ErrorCode::bad_permutation, "a group needs elements");
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    PermGroup out;
    out.degree_ = elements.front().degree();
    out.elements_ = std::move(elements);
    out.generators_ = std::move(generators);
    if (out.generators_.empty() && out.elements_.size() > 1) {
        for (const Perm& p : out.elements_)
            if (!p.is_identity()) out.generators_.push_back(p);
    }
    return out;
}

bool PermGroup::contains(const Perm& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::vector<std::vector<int>> PermGroup::orbits() const {
    std::vector<int> parent(degree_);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    const std::vector<Perm>& gens = generators_.empty() ? elements_ : generators_;
    for (const Perm& g : gens)
        for (int x = 0; x < degree_; ++x) {
            int a = find(x), b = find(g.apply0(x));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<int, std::vector<int>> buckets;
    for (int x = 0; x < degree_; ++x) buckets[find(x)].push_back(x + 1);
    std::vector<std::vector<int>> out;
    for (auto& [root, orbit] : buckets) out.push_back(std::move(orbit));
    return out;
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
    if (degree_ != g.degree()) return false;
    for (const Perm& p : elements_)
        if (!g.contains(p)) return false;
    return true;
}

bool PermGroup::is_normal_in(const PermGroup& g) const {
    if (!is_subgroup_of(g)) return false;
    for (const Perm& a : g.elements()) {
        Perm ai = a.inverse();
        for (const Perm& x : elements_)
            if (!contains(a * x * ai)) return false;
    }
    return true;
}

SubgroupRelations subgroup_relations(const PermGroup& g, const PermGroup& h,
                                     const PermGroup& k) {
    SubgroupRelations rel;
    rel.h_subgroup = h.is_subgroup_of(g);
    rel.k_normal = k.is_normal_in(g);
    std::vector<Perm> prod = product_set(h, k);
    rel.product_is_g =
        prod.size() == g.order() && std::equal(prod.begin(), prod.end(), g.elements().begin());
    return rel;
}

PermGroup group_core(const PermGroup& g, const PermGroup& h) {
    require(h.is_subgroup_of(g), ErrorCode::not_subgroup, "core of a non-subgroup");
    std::set<Perm> core(h.elements().begin(), h.elements().end());
    for (const Perm& a : g.elements()) {
        Perm ai = a.inverse();
        std::set<Perm> conj;
        for (const Perm& x : h.elements()) conj.insert(a * x * ai);
        std::set<Perm> kept;
        for (const Perm& x : core)
            if (conj.count(x)) kept.insert(x);
        core = std::move(kept);
        if (core.size() == 1) break;
    }
    return PermGroup::from_elements(std::vector<Perm>(core.begin(), core.end()));
}

PermGroup group_intersection(const PermGroup& a, const PermGroup& b) {
    require(a.degree() == b.degree(), ErrorCode::bad_permutation,
            "intersecting groups of different degrees");
    std::vector<Perm> out;
    for (const Perm& p : a.elements())
        if (b.contains(p)) out.push_back(p);
    return PermGroup::from_elements(std::move(out));
}

std::vector<Perm> product_set(const PermGroup& h, const PermGroup& k) {
    std::set<Perm> prod;
    for (const Perm& a : h.elements())
        for (const Perm& b : k.elements()) prod.insert(a * b);
    return std::vector<Perm>(prod.begin(), prod.end());
}

CosetAction coset_action(const PermGroup& g, const PermGroup& h) {
    require(h.is_subgroup_of(g), ErrorCode::not_subgroup, "coset action of a non-subgroup");
    // Left cosets aH; each is keyed by its least element.  The identity is
    // the least permutation overall, so H itself is always coset 1.
    std::map<Perm, int> coset_of;        // element -> coset id (0-based)
    std::vector<Perm> reps;              // least representative per coset
    std::vector<std::vector<Perm>> members;
    for (const Perm& a : g.elements()) {
        if (coset_of.count(a)) continue;
        std::vector<Perm> coset;
        for (const Perm& x : h.elements()) coset.push_back(a * x);
        std::sort(coset.begin(), coset.end());
        int id = static_cast<int>(reps.size());
        for (const Perm& c : coset) coset_of[c] = id;
        reps.push_back(coset.front());
        members.push_back(std::move(coset));
    }
    // renumber cosets by least representative
    std::vector<int> order(reps.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return reps[x] < reps[y]; });
    std::vector<int> rank(reps.size());
    for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);

    CosetAction ca;
    ca.index = static_cast<int>(reps.size());
    ca.coset_reps.resize(reps.size(), Perm::identity(g.degree()));
    for (size_t i = 0; i < reps.size(); ++i) ca.coset_reps[rank[i]] = reps[i];
    auto image_of = [&](const Perm& a) {
        std::vector<int> img(reps.size());
        for (size_t c = 0; c < reps.size(); ++c) {
            const Perm& rep = ca.coset_reps[c];
            img[c] = rank[coset_of.at(a * rep)];
        }
        return Perm(std::move(img));
    };
    for (const Perm& gen : g.generators()) ca.generator_images.push_back(image_of(gen));
    return ca;
}

Perm coset_action_image(const PermGroup& g, const PermGroup& h, const Perm& a) {
    require(g.contains(a), ErrorCode::not_subgroup, "element outside the acting group");
    CosetAction ca = coset_action(g, h);
    std::vector<int> img(ca.index);
    // locate a * rep's coset by comparing least elements
    auto coset_id = [&](const Perm& p) {
        Perm least = p;
        for (const Perm& x : h.elements()) {
            Perm cand = p * x;
            if (cand < least) least = cand;
        }
        for (size_t c = 0; c < ca.coset_reps.size(); ++c)
            if (ca.coset_reps[c] == least) return static_cast<int>(c);
        fail(ErrorCode::internal_error, "coset representative not found");
        return -1;  // unreachable
    };
    for (int c = 0; c < ca.index; ++c) img[c] = coset_id(a * ca.coset_reps[c]);
    return Perm(std::move(img));
}

std::vector<PermGroup> all_subgroups(const PermGroup& g) {
    require(g.order() <= 2000, ErrorCode::group_too_large,
            "subgroup lattice walk capped at order 2000");
    std::set<std::vector<Perm>> seen;
    std::vector<PermGroup> out;
    std::queue<PermGroup> frontier;
    PermGroup triv = PermGroup::trivial(g.degree());
    seen.insert(triv.elements());
    out.push_back(triv);
    frontier.push(triv);
    while (!frontier.empty()) {
        PermGroup cur = frontier.front();
        frontier.pop();
        for (const Perm& a : g.elements()) {
            if (cur.contains(a)) continue;
            std::vector<Perm> gens = cur.generators();
            gens.push_back(a);
            PermGroup bigger = PermGroup::generate(gens);
            if (seen.insert(bigger.elements()).second) {
                out.push_back(bigger);
                frontier.push(std::move(bigger));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return out;
}

PermGroup subgroup_generated(const std::vector<Perm>& gens, int degree, size_t cap) {
    if (gens.empty()) return PermGroup::trivial(degree);
    return PermGroup::generate(gens, cap);
}

PermGroup symmetric_centralizer(const std::vector<Perm>& elements, int degree, size_t cap) {
    // Backtracking over images point by point; fine for the small degrees the
    // covering engine produces.  phi centralizes e iff phi(e(x)) = e(phi(x)).
    std::vector<Perm> inverses;
    for (const Perm& e : elements) inverses.push_back(e.inverse());
    std::vector<Perm> found;
    std::vector<int> img(degree, -1);
    std::vector<bool> used(degree, false);
    std::function<void(int)> rec = [&](int x) {
        if (x == degree) {
            found.push_back(Perm(img));
            require(found.size() <= cap, ErrorCode::group_too_large, "centralizer too large");
            return;
        }
        for (int y = 0; y < degree; ++y) {
            if (used[y]) continue;
            bool ok = true;
            for (size_t k = 0; k < elements.size() && ok; ++k) {
                const Perm& e = elements[k];
                int ex = e.apply0(x), ey = e.apply0(y);
                if (img[ex] != -1 && img[ex] != ey) ok = false;  // forward constraint
                int px = inverses[k].apply0(x);
                if (ok && img[px] != -1 && e.apply0(img[px]) != y) ok = false;  // backward
            }
            if (!ok) continue;
            img[x] = y;
            used[y] = true;
            rec(x + 1);
            img[x] = -1;
            used[y] = false;
        }
    };
    rec(0);
    return PermGroup::from_elements(std::move(found));
}

// Greedy small generating set: scan by decreasing element order, keep what
// enlarges the closure.  Keeps isomorphism backtracking shallow.
static std::vector<Perm> small_generating_set(const PermGroup& g) {
    if (g.order() == 1) return {};
    std::vector<Perm> pool = g.elements();
    std::sort(pool.begin(), pool.end(), [](const Perm& a, const Perm& b) {
        int oa = a.order(), ob = b.order();
        if (oa != ob) return oa > ob;
        return a < b;
    });
    std::vector<Perm> gens;
    PermGroup cur = PermGroup::trivial(g.degree());
    for (const Perm& p : pool) {
        if (cur.contains(p)) continue;
        gens.push_back(p);
        cur = PermGroup::generate(gens);
        if (cur.order() == g.order()) break;
    }
    return gens;
}

namespace {

bool iso_backtrack(const std::vector<Perm>& gens, const PermGroup& a, const PermGroup& b,
                   std::map<Perm, Perm>& image, size_t idx) {
    if (idx == gens.size()) {
        // verify multiplication table on the generated set
        std::map<Perm, Perm> full;
        std::queue<Perm> frontier;
        Perm ida = Perm::identity(a.degree());
        Perm idb = Perm::identity(b.degree());
        full[ida] = idb;
        frontier.push(ida);
        while (!frontier.empty()) {
            Perm cur = frontier.front();
            frontier.pop();
            for (const Perm& g : gens) {
                Perm nxt = g * cur;
                Perm img = image.at(g) * full.at(cur);
                auto it = full.find(nxt);
                if (it == full.end()) {
                    full[nxt] = img;
                    frontier.push(nxt);
                } else if (it->second != img) {
                    return false;
                }
            }
        }
        if (full.size() != a.order()) return false;
        std::set<Perm> image_set;
        for (auto& [k, v] : full) image_set.insert(v);
        return image_set.size() == b.order();
    }
    const Perm& g = gens[idx];
    int want = g.order();
    for (const Perm& cand : b.elements()) {
        if (cand.order() != want) continue;
        image[g] = cand;
        if (iso_backtrack(gens, a, b, image, idx + 1)) return true;
    }
    image.erase(g);
    return false;
}

}  // namespace

bool groups_isomorphic(const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return false;
    // order statistics must match
    std::multiset<int> oa, ob;
    for (const Perm& p : a.elements()) oa.insert(p.order());
    for (const Perm& p : b.elements()) ob.insert(p.order());
    if (oa != ob) return false;
    std::vector<Perm> gens = small_generating_set(a);
    if (gens.empty()) return true;  // trivial
    std::map<Perm, Perm> image;
    return iso_backtrack(gens, a, b, image, 0);
}

}  // namespace bfold
