#pragma once

// Finite unitriangular matrix groups over F_p: enumeration, named subgroups,
// conjugacy structure, centralizers, elementary abelian subgroups and
// isomorphism testing.  Everything is immutable after construction.

#include "workbench/intx.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace workbench {

constexpr size_t kEnumerationBudget = 1000000;

// Upper triangular matrix with unit diagonal, entries mod p.
struct MatrixElement {
    int n = 0;
    int p = 0;
    std::vector<uint8_t> a;  // row-major n*n

    static MatrixElement identity(int n, int p) {
        MatrixElement m;
        m.n = n;
        m.p = p;
        m.a.assign(size_t(n) * n, 0);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    uint8_t& at(int i, int j) { return a[size_t(i) * n + j]; }
    uint8_t at(int i, int j) const { return a[size_t(i) * n + j]; }

    bool is_unitriangular() const {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j)
                if (at(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    MatrixElement mul(const MatrixElement& o) const {
        MatrixElement r = identity(n, p);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                int s = 0;
                for (int k = i; k <= j; ++k) s += int(at(i, k)) * o.at(k, j);
                r.at(i, j) = uint8_t(s % p);
            }
        return r;
    }

    MatrixElement inverse() const {
        // (I+N)^-1 = I - N + N^2 - ... ; N is nilpotent of index <= n
        MatrixElement nil = *this;
        for (int i = 0; i < n; ++i) nil.at(i, i) = 0;
        MatrixElement acc = identity(n, p);
        MatrixElement pw = identity(n, p);
        int sign = -1;
        for (int k = 1; k < n; ++k) {
            pw = pw.mul(nil);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    int v = int(acc.at(i, j)) + sign * int(pw.at(i, j));
                    v %= p;
                    if (v < 0) v += p;
                    acc.at(i, j) = uint8_t(v);
                }
            sign = -sign;
        }
        return acc;
    }

    int order() const {
        MatrixElement id = identity(n, p);
        MatrixElement x = *this;
        int k = 1;
        while (!(x == id)) {
            x = x.mul(*this);
            ++k;
            if (k > p * n * n + 1) throw error("MatrixElement::order: runaway");
        }
        return k;
    }

    // Canonical byte encoding; element identity and ordering use this.
    std::string key() const { return std::string(a.begin(), a.end()); }

    friend bool operator==(const MatrixElement& x, const MatrixElement& y) {
        return x.n == y.n && x.p == y.p && x.a == y.a;
    }
    friend bool operator<(const MatrixElement& x, const MatrixElement& y) { return x.a < y.a; }

    std::string str() const {
        std::ostringstream os;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) os << int(at(i, j)) << (j + 1 < n ? " " : "");
            os << "\n";
        }
        return os.str();
    }
};

// E_{i,j}: identity with a 1 in position (i,j); 1-based indices as customary.
inline MatrixElement elementary_e(int n, int p, int i, int j, int value = 1) {
    MatrixElement m = MatrixElement::identity(n, p);
    int v = value % p;
    if (v < 0) v += p;
    m.at(i - 1, j - 1) = uint8_t(v);
    return m;
}

struct FiniteMatrixGroup {
    int n = 0;
    int p = 0;
    std::string name;
    std::vector<MatrixElement> elements;  // sorted by encoding; index 0 need not be 1
    std::vector<int> generators;          // indices into elements
    std::vector<std::vector<uint16_t>> mult;  // cached index multiplication table
    std::vector<uint16_t> inv;                // index of inverse
    int identity_index = -1;

    size_t order() const { return elements.size(); }

    int index_of(const MatrixElement& m) const {
        auto it = std::lower_bound(elements.begin(), elements.end(), m);
        if (it == elements.end() || !(*it == m)) return -1;
        return int(it - elements.begin());
    }

    int mul_idx(int i, int j) const { return mult[size_t(i)][size_t(j)]; }
    int inv_idx(int i) const { return inv[size_t(i)]; }

    bool contains(const MatrixElement& m) const { return index_of(m) >= 0; }

    bool is_abelian() const {
        for (size_t i = 0; i < order(); ++i)
            for (size_t j = i + 1; j < order(); ++j)
                if (mult[i][j] != mult[j][i]) return false;
        return true;
    }

    int exponent() const {
        long e = 1;
        for (const auto& g : elements) e = lcm(Int(e), Int(g.order())).get_si();
        return int(e);
    }

    int element_order(int i) const { return elements[size_t(i)].order(); }
};

inline FiniteMatrixGroup group_from_elements(int n, int p, std::vector<MatrixElement> elems,
                                             std::vector<MatrixElement> gens,
                                             const std::string& name) {
    FiniteMatrixGroup g;
    g.n = n;
    g.p = p;
    g.name = name;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    g.elements = std::move(elems);
    if (g.order() > 65535) throw error("group too large for index table");
    g.identity_index = g.index_of(MatrixElement::identity(n, p));
    if (g.identity_index < 0) throw error("group does not contain the identity");
    for (const auto& x : gens) {
        int idx = g.index_of(x);
        if (idx < 0) throw error("generator not in element list");
        g.generators.push_back(idx);
    }
    size_t m = g.order();
    g.mult.assign(m, std::vector<uint16_t>(m, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            int k = g.index_of(g.elements[i].mul(g.elements[j]));
            if (k < 0) throw error("group not closed under multiplication");
            g.mult[i][j] = uint16_t(k);
        }
    g.inv.assign(m, 0);
    for (size_t i = 0; i < m; ++i) {
        int k = g.index_of(g.elements[i].inverse());
        if (k < 0) throw error("group not closed under inversion");
        g.inv[i] = uint16_t(k);
    }
    return g;
}

inline FiniteMatrixGroup group_from_generators(int n, int p, std::vector<MatrixElement> gens,
                                               const std::string& name,
                                               size_t budget = kEnumerationBudget) {
    std::set<std::string> seen;
    std::vector<MatrixElement> elems{MatrixElement::identity(n, p)};
    seen.insert(elems[0].key());
    std::vector<MatrixElement> frontier = elems;
    while (!frontier.empty()) {
        std::vector<MatrixElement> next;
        for (const auto& x : frontier)
            for (const auto& gEl : gens) {
                MatrixElement y = x.mul(gEl);
                if (seen.insert(y.key()).second) {
                    if (seen.size() > budget)
                        throw error("enumeration budget exceeded for group " + name);
                    elems.push_back(y);
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    return group_from_elements(n, p, std::move(elems), std::move(gens), name);
}

// Full unitriangular group U(n,p), order p^(n(n-1)/2), generated by the E_{i,j}.
inline FiniteMatrixGroup unitriangular_group(int n, int p, size_t budget = kEnumerationBudget) {
    if (n < 1) throw error("unitriangular_group: need n >= 1");
    if (!is_prime_ul(static_cast<unsigned long>(p))) throw error("unitriangular_group: p must be prime");
    unsigned long k = static_cast<unsigned long>(n) * (n - 1) / 2;
    Int size = int_pow(Int(p), k);
    if (size > Int(static_cast<unsigned long>(budget)))
        throw error("enumeration budget exceeded: |U(" + std::to_string(n) + "," +
                    std::to_string(p) + ")| = " + size.get_str());
    std::vector<MatrixElement> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) gens.push_back(elementary_e(n, p, i, j));
    FiniteMatrixGroup g = group_from_generators(
        n, p, gens, "U(" + std::to_string(n) + "," + std::to_string(p) + ")", budget);
    if (Int(static_cast<unsigned long>(g.order())) != size)
        throw error("unitriangular_group: closure has unexpected order");
    return g;
}

// ---------------------------------------------------------------------------
// Conjugacy structure

struct ConjugacyData {
    struct ClassInfo {
        int representative = 0;          // element index (minimal in encoding order)
        std::vector<int> members;        // element indices
        size_t size() const { return members.size(); }
    };
    std::vector<ClassInfo> classes;
    std::vector<int> class_of;                 // element index -> class index
    std::vector<std::vector<int>> power_map;   // [class][k] = class of g^k, 0 <= k < exponent
    int exponent = 1;
};

inline ConjugacyData conjugacy_classes(const FiniteMatrixGroup& g) {
    size_t m = g.order();
    ConjugacyData data;
    data.class_of.assign(m, -1);
    for (size_t i = 0; i < m; ++i) {
        if (data.class_of[i] >= 0) continue;
        ConjugacyData::ClassInfo cls;
        cls.representative = int(i);
        for (size_t h = 0; h < m; ++h) {
            int c = g.mul_idx(g.mul_idx(int(h), int(i)), g.inv_idx(int(h)));
            if (data.class_of[size_t(c)] < 0) {
                data.class_of[size_t(c)] = int(data.classes.size());
                cls.members.push_back(c);
            }
        }
        std::sort(cls.members.begin(), cls.members.end());
        cls.representative = cls.members.front();
        data.classes.push_back(std::move(cls));
    }
    size_t total = 0;
    for (const auto& c : data.classes) total += c.size();
    if (total != m) throw error("conjugacy_classes: classes do not partition the group");

    data.exponent = g.exponent();
    data.power_map.assign(data.classes.size(), std::vector<int>(size_t(data.exponent), 0));
    for (size_t c = 0; c < data.classes.size(); ++c) {
        int rep = data.classes[c].representative;
        int x = g.identity_index;
        for (int k = 0; k < data.exponent; ++k) {
            data.power_map[c][size_t(k)] = data.class_of[size_t(x)];
            x = g.mul_idx(x, rep);
        }
    }
    // power map must not depend on the representative
    for (size_t c = 0; c < data.classes.size(); ++c)
        for (int member : data.classes[c].members) {
            int x = g.identity_index;
            for (int k = 0; k < data.exponent; ++k) {
                if (data.class_of[size_t(x)] != data.power_map[c][size_t(k)])
                    throw error("conjugacy_classes: power map depends on representative");
                x = g.mul_idx(x, member);
            }
        }
    return data;
}

inline long count_commuting_pairs(const FiniteMatrixGroup& g) {
    long count = 0;
    size_t m = g.order();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (g.mult[i][j] == g.mult[j][i]) ++count;
    return count;
}

// ---------------------------------------------------------------------------
// Subgroups

inline FiniteMatrixGroup subgroup_from_indices(const FiniteMatrixGroup& g, std::vector<int> idx,
                                               const std::string& name) {
    std::vector<MatrixElement> elems;
    elems.reserve(idx.size());
    for (int i : idx) elems.push_back(g.elements[size_t(i)]);
    std::vector<MatrixElement> gens;  // greedy generating set in encoding order
    std::set<std::string> have;
    std::vector<MatrixElement> closure{MatrixElement::identity(g.n, g.p)};
    have.insert(closure[0].key());
    std::sort(elems.begin(), elems.end());
    for (const auto& e : elems) {
        if (have.count(e.key())) continue;
        gens.push_back(e);
        std::vector<MatrixElement> frontier = closure;
        frontier.push_back(e);
        while (!frontier.empty()) {
            std::vector<MatrixElement> next;
            for (const auto& x : frontier)
                for (const auto& gn : gens) {
                    MatrixElement y = x.mul(gn);
                    if (have.insert(y.key()).second) next.push_back(y);
                    y = gn.mul(x);
                    if (have.insert(y.key()).second) next.push_back(y);
                }
            for (auto& e2 : next) closure.push_back(e2);
            frontier = std::move(next);
        }
    }
    return group_from_elements(g.n, g.p, elems, gens, name);
}

inline FiniteMatrixGroup centralizer(const FiniteMatrixGroup& g,
                                     const std::vector<MatrixElement>& s,
                                     const std::string& name = "") {
    for (const auto& x : s)
        if (!g.contains(x)) throw error("centralizer: set not contained in the group");
    std::vector<int> idx;
    for (size_t i = 0; i < g.order(); ++i) {
        bool ok = true;
        for (const auto& x : s) {
            int xi = g.index_of(x);
            if (g.mul_idx(int(i), xi) != g.mul_idx(xi, int(i))) {
                ok = false;
                break;
            }
        }
        if (ok) idx.push_back(int(i));
    }
    return subgroup_from_indices(g, idx, name.empty() ? "centralizer" : name);
}

inline FiniteMatrixGroup center(const FiniteMatrixGroup& g, const std::string& name = "Z") {
    return centralizer(g, g.elements, name);
}

inline int center_p_rank(const FiniteMatrixGroup& g) {
    FiniteMatrixGroup z = center(g, "Z");
    // p-rank = rank of the subgroup of elements of order dividing p
    std::vector<int> idx;
    for (size_t i = 0; i < z.order(); ++i)
        if (z.element_order(int(i)) <= g.p) idx.push_back(int(i));
    size_t m = idx.size();
    int rank = 0;
    size_t q = 1;
    while (q < m) {
        q *= size_t(g.p);
        ++rank;
    }
    if (q != m) throw error("center_p_rank: torsion subgroup is not elementary abelian");
    return rank;
}

// n - c detection bound from a faithful degree and the center's p-rank.
inline int detection_bound(int min_faithful_degree, int center_rank) {
    return min_faithful_degree - center_rank;
}

// max degrees of generators / relations given the degrees y_i of a polynomial
// subalgebra over which the ring is a finitely generated module:
// sigma = sum(|y_i| - 1), generators <= max{|y_i|, sigma},
// relations <= max{|y_i|, sigma + 1, 2 sigma}.
inline std::pair<int, int> regularity_bounds(const std::vector<int>& degrees) {
    if (degrees.empty()) throw error("regularity_bounds: empty degree list");
    int sigma = 0, dmax = 0;
    for (int d : degrees) {
        sigma += d - 1;
        dmax = std::max(dmax, d);
    }
    int gen_bound = std::max(dmax, sigma);
    int rel_bound = std::max({dmax, sigma + 1, 2 * sigma});
    return {gen_bound, rel_bound};
}

// All elementary abelian subgroups (subgroups isomorphic to C_p^k, k >= 1),
// optionally only the maximal ones.  Deterministic order by element-set key.
inline std::vector<FiniteMatrixGroup> elementary_abelian_subgroups(const FiniteMatrixGroup& g,
                                                                   bool maximal_only) {
    std::vector<int> involutions;  // elements of order exactly p
    for (size_t i = 0; i < g.order(); ++i)
        if (int(i) != g.identity_index && g.element_order(int(i)) == g.p)
            involutions.push_back(int(i));

    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> groups;  // sorted index sets
    std::vector<int> unit{g.identity_index};
    // BFS over subgroups: extend by commuting elements of order p
    std::vector<std::vector<int>> frontier{unit};
    seen.insert(unit);
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& sub : frontier) {
            for (int e : involutions) {
                if (std::binary_search(sub.begin(), sub.end(), e)) continue;
                bool commutes = true;
                for (int x : sub)
                    if (g.mul_idx(x, e) != g.mul_idx(e, x)) {
                        commutes = false;
                        break;
                    }
                if (!commutes) continue;
                std::set<int> bigger(sub.begin(), sub.end());
                int pw = e;
                for (int k = 1; k < g.p; ++k) {
                    for (int x : sub) bigger.insert(g.mul_idx(x, pw));
                    pw = g.mul_idx(pw, e);
                }
                std::vector<int> key(bigger.begin(), bigger.end());
                if (seen.insert(key).second) next.push_back(key);
            }
        }
        for (auto& s : next) groups.push_back(s);
        frontier = std::move(next);
    }
    std::sort(groups.begin(), groups.end());
    std::vector<FiniteMatrixGroup> out;
    for (size_t i = 0; i < groups.size(); ++i) {
        if (maximal_only) {
            bool contained = false;
            for (size_t j = 0; j < groups.size() && !contained; ++j) {
                if (i == j || groups[j].size() <= groups[i].size()) continue;
                contained = std::includes(groups[j].begin(), groups[j].end(), groups[i].begin(),
                                          groups[i].end());
            }
            if (contained) continue;
        }
        out.push_back(subgroup_from_indices(g, groups[i], "elementary_abelian"));
    }
    return out;
}

// Whether two subgroups (given by their element lists) are conjugate in g.
inline bool subgroups_conjugate(const FiniteMatrixGroup& g, const FiniteMatrixGroup& s1,
                                const FiniteMatrixGroup& s2) {
    if (s1.order() != s2.order()) return false;
    std::vector<int> set2;
    for (const auto& m : s2.elements) set2.push_back(g.index_of(m));
    std::sort(set2.begin(), set2.end());
    std::vector<int> set1;
    for (const auto& m : s1.elements) set1.push_back(g.index_of(m));
    for (size_t t = 0; t < g.order(); ++t) {
        std::vector<int> conj;
        conj.reserve(set1.size());
        for (int x : set1)
            conj.push_back(g.mul_idx(g.mul_idx(int(t), x), g.inv_idx(int(t))));
        std::sort(conj.begin(), conj.end());
        if (conj == set2) return true;
    }
    return false;
}

// One representative per conjugacy class of maximal elementary abelian
// subgroups, ordered deterministically by the representative's element keys.
inline std::vector<FiniteMatrixGroup> maximal_elementary_abelian_classes(
    const FiniteMatrixGroup& g) {
    std::vector<FiniteMatrixGroup> maximal = elementary_abelian_subgroups(g, true);
    std::vector<FiniteMatrixGroup> reps;
    for (auto& s : maximal) {
        bool seen = false;
        for (const auto& r : reps)
            if (subgroups_conjugate(g, s, r)) {
                seen = true;
                break;
            }
        if (!seen) reps.push_back(std::move(s));
    }
    return reps;
}

// ---------------------------------------------------------------------------
// Isomorphism testing by generator-image backtracking.

namespace detail {

inline std::vector<int> minimal_generating_sequence(const FiniteMatrixGroup& g) {
    std::vector<int> gens;
    std::vector<char> in_closure(g.order(), 0);
    std::vector<int> closure{g.identity_index};
    in_closure[size_t(g.identity_index)] = 1;
    while (closure.size() < g.order()) {
        int pick = -1;
        for (size_t i = 0; i < g.order(); ++i)
            if (!in_closure[i]) {
                pick = int(i);
                break;
            }
        gens.push_back(pick);
        std::vector<int> frontier{pick};
        in_closure[size_t(pick)] = 1;
        closure.push_back(pick);
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int x : frontier)
                for (int y : closure) {
                    for (int z : {g.mul_idx(x, y), g.mul_idx(y, x)}) {
                        if (!in_closure[size_t(z)]) {
                            in_closure[size_t(z)] = 1;
                            closure.push_back(z);
                            next.push_back(z);
                        }
                    }
                }
            frontier = std::move(next);
        }
    }
    return gens;
}

}  // namespace detail

// Isomorphism witness: bijection element-index(A) -> element-index(B), or nullopt.
// Backtracking over generator images, pruned by incremental Cayley-graph
// consistency (conflict-free labelling of the subgroup generated so far).
inline std::optional<std::vector<int>> group_isomorphic(const FiniteMatrixGroup& a,
                                                        const FiniteMatrixGroup& b,
                                                        size_t budget = 2000000) {
    if (a.order() != b.order()) return std::nullopt;
    if (a.order() > 1000) throw error("group_isomorphic: order above supported bound");
    std::map<int, int> ordA, ordB;
    for (size_t i = 0; i < a.order(); ++i) ++ordA[a.element_order(int(i))];
    for (size_t i = 0; i < b.order(); ++i) ++ordB[b.element_order(int(i))];
    if (ordA != ordB) return std::nullopt;

    ConjugacyData ca = conjugacy_classes(a), cb = conjugacy_classes(b);
    std::vector<int> gens = detail::minimal_generating_sequence(a);

    // candidate images share order and conjugacy-class size
    std::vector<std::vector<int>> candidates(gens.size());
    for (size_t s = 0; s < gens.size(); ++s) {
        int o = a.element_order(gens[s]);
        size_t csz = ca.classes[size_t(ca.class_of[size_t(gens[s])])].size();
        for (size_t j = 0; j < b.order(); ++j)
            if (b.element_order(int(j)) == o &&
                cb.classes[size_t(cb.class_of[j])].size() == csz)
                candidates[s].push_back(int(j));
    }

    std::vector<int> img(gens.size(), -1);
    size_t tried = 0;

    // conflict-free BFS labelling of <g_0..g_s> under the chosen images;
    // conflict-freeness over all generator edges makes the labelling a
    // homomorphism on the generated subgroup
    auto attempt = [&](size_t upto) -> std::optional<std::vector<int>> {
        std::vector<int> phi(a.order(), -1);
        std::vector<char> used(b.order(), 0);
        phi[size_t(a.identity_index)] = b.identity_index;
        used[size_t(b.identity_index)] = 1;
        std::vector<int> queue{a.identity_index};
        for (size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            for (size_t s = 0; s <= upto; ++s) {
                int y = a.mul_idx(x, gens[s]);
                int image = b.mul_idx(phi[size_t(x)], img[s]);
                if (phi[size_t(y)] < 0) {
                    if (used[size_t(image)]) return std::nullopt;
                    phi[size_t(y)] = image;
                    used[size_t(image)] = 1;
                    queue.push_back(y);
                } else if (phi[size_t(y)] != image) {
                    return std::nullopt;
                }
            }
        }
        return phi;
    };

    std::function<std::optional<std::vector<int>>(size_t)> rec =
        [&](size_t s) -> std::optional<std::vector<int>> {
        if (s == gens.size()) {
            auto phi = attempt(s - 1);
            if (!phi) return std::nullopt;
            for (int v : *phi)
                if (v < 0) return std::nullopt;  // generators of A must generate
            // full homomorphism check (the labelling argument already implies it)
            for (size_t i = 0; i < a.order(); ++i)
                for (size_t j = 0; j < a.order(); ++j)
                    if ((*phi)[size_t(a.mult[i][j])] != b.mul_idx((*phi)[i], (*phi)[j]))
                        return std::nullopt;
            return phi;
        }
        for (int cand : candidates[s]) {
            if (++tried > budget) throw error("group_isomorphic: search budget exceeded");
            img[s] = cand;
            if (attempt(s).has_value()) {
                auto res = rec(s + 1);
                if (res) return res;
            }
        }
        img[s] = -1;
        return std::nullopt;
    };
    return rec(0);
}

// Direct product as block-diagonal matrices of size n_a + n_b.
inline FiniteMatrixGroup direct_product(const FiniteMatrixGroup& a, const FiniteMatrixGroup& b,
                                        const std::string& name) {
    if (a.p != b.p) throw error("direct_product: different characteristics");
    int n = a.n + b.n;
    std::vector<MatrixElement> elems;
    for (const auto& x : a.elements)
        for (const auto& y : b.elements) {
            MatrixElement m = MatrixElement::identity(n, a.p);
            for (int i = 0; i < a.n; ++i)
                for (int j = 0; j < a.n; ++j) m.at(i, j) = x.at(i, j);
            for (int i = 0; i < b.n; ++i)
                for (int j = 0; j < b.n; ++j) m.at(a.n + i, a.n + j) = y.at(i, j);
            elems.push_back(m);
        }
    std::vector<MatrixElement> gens;
    for (int gi : a.generators) {
        MatrixElement m = MatrixElement::identity(n, a.p);
        const auto& x = a.elements[size_t(gi)];
        for (int i = 0; i < a.n; ++i)
            for (int j = 0; j < a.n; ++j) m.at(i, j) = x.at(i, j);
        gens.push_back(m);
    }
    for (int gi : b.generators) {
        MatrixElement m = MatrixElement::identity(n, a.p);
        const auto& y = b.elements[size_t(gi)];
        for (int i = 0; i < b.n; ++i)
            for (int j = 0; j < b.n; ++j) m.at(a.n + i, a.n + j) = y.at(i, j);
        gens.push_back(m);
    }
    return group_from_elements(n, a.p, std::move(elems), std::move(gens), name);
}

// ---------------------------------------------------------------------------
// Named subgroup registry.
//
// Keys for ambient U(3,p):   "Z", "C(n,k)"  (cyclic generated by I + n*E12 + k*E23)
// Keys for ambient U(4,p):   "L" (= L(0,1)), "L(n,k)", "N(n,k)", "Z",
//                            "H0", "Hinf", "I0", "Iinf",
//                            "C2_2G", "C2_3G", "C2_3G0", "C2_3G1", "C2_3Ginf", "C2_4G"
//                            (the last six are the p = 2 constructions)

namespace detail {

inline void parse_two_params(const std::string& key, size_t open, int& n, int& k) {
    size_t comma = key.find(',', open);
    size_t close = key.find(')', open);
    if (comma == std::string::npos || close == std::string::npos)
        throw error("named_subgroup: malformed key '" + key + "'");
    n = std::stoi(key.substr(open + 1, comma - open - 1));
    k = std::stoi(key.substr(comma + 1, close - comma - 1));
}

}  // namespace detail

inline FiniteMatrixGroup named_subgroup(const FiniteMatrixGroup& g, const std::string& key) {
    int p = g.p;
    auto E = [&](int i, int j, int v = 1) { return elementary_e(g.n, p, i, j, v); };

    if (g.n == 3) {
        if (key == "Z") return group_from_generators(3, p, {E(1, 3)}, "Z(" + g.name + ")");
        if (key.rfind("C(", 0) == 0) {
            int n, k;
            detail::parse_two_params(key, 1, n, k);
            if (n % p == 0 && k % p == 0) throw error("named_subgroup: n,k must not both be zero");
            MatrixElement m = MatrixElement::identity(3, p);
            m.at(0, 1) = uint8_t(((n % p) + p) % p);
            m.at(1, 2) = uint8_t(((k % p) + p) % p);
            return group_from_generators(3, p, {m}, "C(" + std::to_string(n) + "," + std::to_string(k) + ")");
        }
    }
    if (g.n == 4) {
        if (key == "Z") return group_from_generators(4, p, {E(1, 4)}, "Z(" + g.name + ")");
        if (key == "L" || key.rfind("L(", 0) == 0) {
            int n = 0, k = 1;
            if (key != "L") detail::parse_two_params(key, 1, n, k);
            if (n % p == 0 && k % p == 0) throw error("named_subgroup: n,k must not both be zero");
            // centralizer of the rank-2 subgroup {I + x(n E13 + k E24) + z E14}
            MatrixElement v = MatrixElement::identity(4, p);
            v.at(0, 2) = uint8_t(((n % p) + p) % p);
            v.at(1, 3) = uint8_t(((k % p) + p) % p);
            return centralizer(g, {v, E(1, 4)}, key == "L" ? "L" : key);
        }
        if (key.rfind("N(", 0) == 0) {
            int n, k;
            detail::parse_two_params(key, 1, n, k);
            if (n % p == 0 && k % p == 0) throw error("named_subgroup: n,k must not both be zero");
            // {I + x(n E12 + k E34) + y(n E13 - k E24) + z E14}
            MatrixElement a = MatrixElement::identity(4, p);
            a.at(0, 1) = uint8_t(((n % p) + p) % p);
            a.at(2, 3) = uint8_t(((k % p) + p) % p);
            MatrixElement b = MatrixElement::identity(4, p);
            b.at(0, 2) = uint8_t(((n % p) + p) % p);
            b.at(1, 3) = uint8_t(((-k % p) + p) % p);
            return group_from_generators(4, p, {a, b, E(1, 4)}, key);
        }
        if (key == "H0") return group_from_generators(4, p, {E(2, 3), E(2, 4), E(3, 4)}, "H0");
        if (key == "Hinf") return group_from_generators(4, p, {E(1, 2), E(1, 3), E(2, 3)}, "Hinf");
        if (key == "I0") return group_from_generators(4, p, {E(1, 3), E(1, 4), E(3, 4)}, "I0");
        if (key == "Iinf") return group_from_generators(4, p, {E(1, 2), E(1, 4), E(2, 4)}, "Iinf");
        if (key == "C2_2G") return group_from_generators(4, p, {E(1, 2), E(3, 4)}, "C2_2G");
        if (key == "C2_3G") return group_from_generators(4, p, {E(1, 2), E(3, 4), E(1, 4)}, "C2_3G");
        if (key == "C2_3G0") return group_from_generators(4, p, {E(1, 2), E(1, 3), E(1, 4)}, "C2_3G0");
        if (key == "C2_3Ginf") return group_from_generators(4, p, {E(3, 4), E(2, 4), E(1, 4)}, "C2_3Ginf");
        if (key == "C2_3G1") {
            MatrixElement a = MatrixElement::identity(4, p);
            a.at(0, 1) = 1;
            a.at(2, 3) = 1;
            MatrixElement b = MatrixElement::identity(4, p);
            b.at(0, 2) = 1;
            b.at(1, 3) = 1;
            return group_from_generators(4, p, {a, b, E(1, 4)}, "C2_3G1");
        }
        if (key == "C2_4G") return group_from_generators(4, p, {E(2, 3), E(1, 3), E(2, 4), E(1, 4)}, "C2_4G");
        if (key == "C2_4L") return group_from_generators(4, p, {E(1, 3), E(2, 3), E(1, 4), E(2, 4)}, "C2_4L");
        if (key == "C2_3L") return group_from_generators(4, p, {E(3, 4), E(2, 4), E(1, 4)}, "C2_3L");
        if (key == "ZL") return group_from_generators(4, p, {E(2, 4), E(1, 4)}, "ZL");
    }
    throw error("named_subgroup: unknown key '" + key + "' for ambient " + g.name);
}

inline std::string named_subgroup_help() {
    return "U(3,p):  Z, C(n,k)\n"
           "U(4,p):  L, L(n,k), N(n,k), Z, H0, Hinf, I0, Iinf,\n"
           "         C2_2G, C2_3G, C2_3G0, C2_3G1, C2_3Ginf, C2_4G, C2_4L, C2_3L, ZL\n";
}

// ---------------------------------------------------------------------------
// Text format: header "p n", then one generator per line as n*n digits row-major.

inline FiniteMatrixGroup group_from_text(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    int p, n;
    if (!(in >> p >> n)) throw error("group_from_text: missing header");
    std::vector<MatrixElement> gens;
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::string digits;
        for (char c : line)
            if (!isspace(static_cast<unsigned char>(c))) digits.push_back(c);
        if (digits.empty()) continue;
        if (digits.size() != size_t(n) * size_t(n))
            throw error("group_from_text: generator needs " + std::to_string(n * n) + " digits");
        MatrixElement m;
        m.n = n;
        m.p = p;
        m.a.resize(size_t(n) * n);
        for (size_t i = 0; i < m.a.size(); ++i) {
            if (!isdigit(static_cast<unsigned char>(digits[i])))
                throw error("group_from_text: non-digit entry");
            m.a[i] = uint8_t(digits[i] - '0');
        }
        if (!m.is_unitriangular()) throw error("group_from_text: generator not unitriangular");
        gens.push_back(m);
    }
    return group_from_generators(n, p, gens, name);
}

inline std::string group_to_text(const FiniteMatrixGroup& g) {
    std::ostringstream os;
    os << g.p << " " << g.n << "\n";
    for (int gi : g.generators) {
        const auto& m = g.elements[size_t(gi)];
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j) os << int(m.at(i, j));
        os << "\n";
    }
    return os.str();
}

}  // namespace workbench
