#pragma once

// Universal polynomials for Chern classes of tensor products and exterior
// powers, computed through the splitting principle: expand the elementary
// symmetric function of the derived Chern roots and rewrite it in the
// elementary symmetric polynomials of the original roots (lexicographic
// leading-term elimination, exact integer arithmetic throughout).

#include "workbench/tables.hpp"

#include <map>
#include <mutex>

namespace workbench {

// --- polynomials in Chern-class variables -----------------------------------

// variable c_i(atom); degree i
struct ChernVar {
    std::string atom;
    int index = 1;
    friend bool operator<(const ChernVar& a, const ChernVar& b) {
        return std::tie(a.atom, a.index) < std::tie(b.atom, b.index);
    }
    friend bool operator==(const ChernVar& a, const ChernVar& b) {
        return a.atom == b.atom && a.index == b.index;
    }
};

using ChernMono = std::vector<std::pair<ChernVar, int>>;  // sorted, exponents > 0

class ChernPolynomial {
public:
    ChernPolynomial() = default;
    static ChernPolynomial constant(Int c) {
        ChernPolynomial p;
        if (c != 0) p.terms_[ChernMono{}] = std::move(c);
        return p;
    }
    static ChernPolynomial variable(const std::string& atom, int index) {
        ChernPolynomial p;
        p.terms_[ChernMono{{ChernVar{atom, index}, 1}}] = 1;
        return p;
    }

    const std::map<ChernMono, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend ChernPolynomial operator+(const ChernPolynomial& a, const ChernPolynomial& b) {
        ChernPolynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend ChernPolynomial operator-(const ChernPolynomial& a, const ChernPolynomial& b) {
        ChernPolynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend ChernPolynomial operator*(const ChernPolynomial& a, const ChernPolynomial& b) {
        ChernPolynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }
    friend ChernPolynomial operator*(const Int& k, const ChernPolynomial& a) {
        ChernPolynomial r;
        for (const auto& [m, c] : a.terms_) r.add_term(m, k * c);
        return r;
    }
    friend bool operator==(const ChernPolynomial& a, const ChernPolynomial& b) {
        return a.terms_ == b.terms_;
    }

    int degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
        return d;
    }
    bool homogeneous_of_degree(int d) const {
        for (const auto& [m, c] : terms_)
            if (mono_degree(m) != d) return false;
        return true;
    }

    // substitute each variable by another polynomial (missing vars untouched)
    ChernPolynomial substituted(
        const std::function<ChernPolynomial(const ChernVar&)>& image) const {
        ChernPolynomial out;
        for (const auto& [m, c] : terms_) {
            ChernPolynomial term = constant(c);
            for (const auto& [v, e] : m) {
                ChernPolynomial base = image(v);
                for (int i = 0; i < e; ++i) term = term * base;
            }
            out = out + term;
        }
        return out;
    }

    // exact evaluation with integer variable values
    Int evaluate(const std::function<Int(const ChernVar&)>& value) const {
        Int acc = 0;
        for (const auto& [m, c] : terms_) {
            Int t = c;
            for (const auto& [v, e] : m)
                for (int i = 0; i < e; ++i) t *= value(v);
            acc += t;
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Int v = c;
            if (first) {
                if (v < 0) { os << "-"; v = -v; }
            } else {
                os << (v < 0 ? " - " : " + ");
                if (v < 0) v = -v;
            }
            first = false;
            bool need_coeff = (v != 1) || m.empty();
            if (need_coeff) os << v.get_str();
            bool started = false;
            for (const auto& [var, e] : m) {
                if (started || need_coeff) os << "*";
                os << "c_" << var.index << "(" << var.atom << ")";
                if (e > 1) os << "^" << e;
                started = true;
            }
        }
        return os.str();
    }

    // machine-readable term list: one "coeff:monomial" line per term
    std::string term_lines() const {
        std::ostringstream os;
        for (const auto& [m, c] : terms_) {
            os << c.get_str() << ":";
            if (m.empty()) os << "1";
            for (size_t i = 0; i < m.size(); ++i) {
                if (i) os << "*";
                os << "c_" << m[i].first.index << "(" << m[i].first.atom << ")";
                if (m[i].second > 1) os << "^" << m[i].second;
            }
            os << "\n";
        }
        return os.str();
    }

    static int mono_degree(const ChernMono& m) {
        int d = 0;
        for (const auto& [v, e] : m) d += v.index * e;
        return d;
    }

private:
    void add_term(const ChernMono& m, const Int& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    static ChernMono mono_mul(const ChernMono& a, const ChernMono& b) {
        std::map<ChernVar, int> acc;
        for (const auto& [v, e] : a) acc[v] += e;
        for (const auto& [v, e] : b) acc[v] += e;
        ChernMono out(acc.begin(), acc.end());
        return out;
    }

    std::map<ChernMono, Int> terms_;
};

// --- symmetric reduction over the Chern roots --------------------------------

namespace sym {

using Expo = std::vector<int>;            // exponent vector over the roots
using RootPoly = std::map<Expo, Int>;     // dense-exponent sparse-term polynomial

inline void add_term(RootPoly& p, const Expo& e, const Int& c) {
    auto it = p.find(e);
    if (it == p.end()) {
        if (c != 0) p[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

inline RootPoly mul(const RootPoly& a, const RootPoly& b, size_t budget) {
    RootPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Expo e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            add_term(r, e, ca * cb);
            if (r.size() > budget) throw error("symmetric reduction budget exceeded");
        }
    return r;
}

// elementary symmetric e_k over the variable block [lo, lo+len) of an
// exponent space with `vars` variables
inline RootPoly elementary(size_t vars, size_t lo, size_t len, int k, size_t budget) {
    RootPoly p;
    if (k == 0) {
        p[Expo(vars, 0)] = 1;
        return p;
    }
    std::vector<size_t> idx(static_cast<size_t>(k), 0);
    std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t start) {
        if (pos == size_t(k)) {
            Expo e(vars, 0);
            for (size_t i : idx) e[i] = 1;
            add_term(p, e, Int(1));
            return;
        }
        for (size_t i = start; i + (size_t(k) - pos - 1) < lo + len; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, lo);
    if (p.size() > budget) throw error("symmetric reduction budget exceeded");
    return p;
}

// Rewrite a polynomial that is symmetric in the blocks [0,n) and [n,n+m)
// separately as a polynomial in e_i(alpha) ("x") and e_j(beta) ("y").
inline ChernPolynomial reduce_two_blocks(RootPoly p, size_t n, size_t m,
                                         const std::string& xname, const std::string& yname,
                                         size_t budget) {
    size_t vars = n + m;
    std::map<std::pair<size_t, int>, RootPoly> e_cache;
    auto elem = [&](size_t block, int k) -> const RootPoly& {
        auto key = std::make_pair(block, k);
        auto it = e_cache.find(key);
        if (it == e_cache.end()) {
            RootPoly e = block == 0 ? elementary(vars, 0, n, k, budget)
                                    : elementary(vars, n, m, k, budget);
            it = e_cache.emplace(key, std::move(e)).first;
        }
        return it->second;
    };

    ChernPolynomial out;
    size_t guard = 0;
    while (!p.empty()) {
        if (++guard > budget) throw error("symmetric reduction budget exceeded");
        // lex-largest exponent vector; by symmetry its block parts are sorted
        // in non-increasing order
        auto lead = std::max_element(p.begin(), p.end(), [](const auto& a, const auto& b) {
            return a.first < b.first;
        });
        Expo lambda = lead->first;
        Int coeff = lead->second;
        for (size_t i = 0; i + 1 < n; ++i)
            if (lambda[i] < lambda[i + 1])
                throw error("reduce_two_blocks: polynomial is not block-symmetric");
        for (size_t i = n; i + 1 < vars; ++i)
            if (lambda[i] < lambda[i + 1])
                throw error("reduce_two_blocks: polynomial is not block-symmetric");
        // staircase exponents
        ChernPolynomial mono_c = ChernPolynomial::constant(coeff);
        RootPoly prod;
        prod[Expo(vars, 0)] = 1;
        for (size_t i = 0; i < n; ++i) {
            int a = lambda[i] - (i + 1 < n ? lambda[i + 1] : 0);
            for (int rep = 0; rep < a; ++rep) prod = mul(prod, elem(0, int(i) + 1), budget);
            if (a > 0) {
                ChernPolynomial v = ChernPolynomial::variable(xname, int(i) + 1);
                for (int rep = 0; rep < a; ++rep) mono_c = mono_c * v;
            }
        }
        for (size_t i = n; i < vars; ++i) {
            int a = lambda[i] - (i + 1 < vars ? lambda[i + 1] : 0);
            for (int rep = 0; rep < a; ++rep)
                prod = mul(prod, elem(1, int(i - n) + 1), budget);
            if (a > 0) {
                ChernPolynomial v = ChernPolynomial::variable(yname, int(i - n) + 1);
                for (int rep = 0; rep < a; ++rep) mono_c = mono_c * v;
            }
        }
        out = out + mono_c;
        for (const auto& [e, c] : prod) add_term(p, e, -coeff * c);
    }
    return out;
}

}  // namespace sym

// --- the universal polynomials -----------------------------------------------

// c_k(x (x) y) for deg x = n, deg y = m, expressed in c_i(x), c_j(y).
inline ChernPolynomial chern_of_tensor(int n, int m, int k, size_t budget = 2000000) {
    if (n < 0 || m < 0 || k < 0) throw error("chern_of_tensor: negative argument");
    if (n * m > 36) throw error("chern_of_tensor: budget exceeded (deg x * deg y > 36)");
    if (k > n * m) return ChernPolynomial();
    if (k == 0) return ChernPolynomial::constant(1);
    static std::map<std::tuple<int, int, int>, ChernPolynomial> cache;
    static std::mutex mutex;
    {
        std::scoped_lock lock(mutex);
        auto it = cache.find({n, m, k});
        if (it != cache.end()) return it->second;
    }
    size_t vars = size_t(n) + size_t(m);
    // roots alpha_a + beta_b; expand e_k of them
    std::vector<sym::RootPoly> roots;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b) {
            sym::RootPoly r;
            sym::Expo ea(vars, 0), eb(vars, 0);
            ea[size_t(a)] = 1;
            eb[size_t(n) + size_t(b)] = 1;
            r[ea] = 1;
            r[eb] = 1;
            roots.push_back(std::move(r));
        }
    // e_k over the roots via the generating product, truncated at degree k in T
    std::vector<sym::RootPoly> elem(size_t(k) + 1);
    elem[0][sym::Expo(vars, 0)] = 1;
    for (const sym::RootPoly& r : roots) {
        for (int j = k; j >= 1; --j) {
            if (elem[size_t(j - 1)].empty()) continue;
            sym::RootPoly shifted = sym::mul(elem[size_t(j - 1)], r, budget);
            for (const auto& [e, c] : shifted) sym::add_term(elem[size_t(j)], e, c);
        }
    }
    ChernPolynomial out =
        sym::reduce_two_blocks(std::move(elem[size_t(k)]), size_t(n), size_t(m), "x", "y", budget);
    std::scoped_lock lock(mutex);
    cache[{n, m, k}] = out;
    return out;
}

// c_k(lambda^l x) for deg x = n, expressed in c_i(x).
inline ChernPolynomial chern_of_exterior(int n, int l, int k, size_t budget = 2000000) {
    if (n < 0 || l < 0 || k < 0) throw error("chern_of_exterior: negative argument");
    Int dim = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(l));
    if (dim > 36) throw error("chern_of_exterior: budget exceeded (C(n,l) > 36)");
    if (Int(k) > dim) return ChernPolynomial();
    if (k == 0) return ChernPolynomial::constant(1);
    static std::map<std::tuple<int, int, int>, ChernPolynomial> cache;
    static std::mutex mutex;
    {
        std::scoped_lock lock(mutex);
        auto it = cache.find({n, l, k});
        if (it != cache.end()) return it->second;
    }
    size_t vars = size_t(n);
    // roots: sums over l-element subsets of the alpha
    std::vector<sym::RootPoly> roots;
    std::vector<size_t> idx(static_cast<size_t>(l), 0);
    std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t start) {
        if (pos == size_t(l)) {
            sym::RootPoly r;
            for (size_t i : idx) {
                sym::Expo e(vars, 0);
                e[i] = 1;
                sym::add_term(r, e, Int(1));
            }
            roots.push_back(std::move(r));
            return;
        }
        for (size_t i = start; i < vars; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    if (l == 0) {
        roots.push_back(sym::RootPoly{});  // the empty sum is the zero root
    } else {
        rec(0, 0);
    }
    std::vector<sym::RootPoly> elem(size_t(k) + 1);
    elem[0][sym::Expo(vars, 0)] = 1;
    for (const sym::RootPoly& r : roots) {
        for (int j = k; j >= 1; --j) {
            if (elem[size_t(j - 1)].empty() || r.empty()) continue;
            sym::RootPoly shifted = sym::mul(elem[size_t(j - 1)], r, budget);
            for (const auto& [e, c] : shifted) sym::add_term(elem[size_t(j)], e, c);
        }
    }
    ChernPolynomial out =
        sym::reduce_two_blocks(std::move(elem[size_t(k)]), vars, 0, "x", "y", budget);
    std::scoped_lock lock(mutex);
    cache[{n, l, k}] = out;
    return out;
}

// Total Chern class of a sum of labelled parts, truncated at max_degree;
// result[d] is c_d of the sum as a polynomial in c_i(<label>).
inline std::vector<ChernPolynomial> whitney_total(
    const std::vector<std::pair<int, std::string>>& parts, int max_degree) {
    std::vector<ChernPolynomial> series(size_t(max_degree) + 1);
    series[0] = ChernPolynomial::constant(1);
    for (const auto& [deg, label] : parts) {
        std::vector<ChernPolynomial> factor(size_t(max_degree) + 1);
        factor[0] = ChernPolynomial::constant(1);
        for (int i = 1; i <= std::min(max_degree, deg); ++i)
            factor[size_t(i)] = ChernPolynomial::variable(label, i);
        std::vector<ChernPolynomial> next(size_t(max_degree) + 1);
        for (int d = 0; d <= max_degree; ++d)
            for (int i = 0; i <= d; ++i) next[size_t(d)] = next[size_t(d)] + series[size_t(i)] * factor[size_t(d - i)];
        series = std::move(next);
    }
    return series;
}

// --- expression language for universal-polynomial identities ------------------

struct ChernExpr {
    enum class Kind { Atom, Sum, Tensor, Exterior, Multiple };
    Kind kind = Kind::Atom;
    std::string atom;
    std::vector<ChernExpr> args;
    int k = 0;  // exterior index / integer multiple

    static ChernExpr atom_of(std::string label) {
        ChernExpr e;
        e.kind = Kind::Atom;
        e.atom = std::move(label);
        return e;
    }
    static ChernExpr sum(std::vector<ChernExpr> parts) {
        ChernExpr e;
        e.kind = Kind::Sum;
        e.args = std::move(parts);
        return e;
    }
    static ChernExpr tensor(ChernExpr a, ChernExpr b) {
        ChernExpr e;
        e.kind = Kind::Tensor;
        e.args = {std::move(a), std::move(b)};
        return e;
    }
    static ChernExpr exterior(ChernExpr a, int k) {
        ChernExpr e;
        e.kind = Kind::Exterior;
        e.args = {std::move(a)};
        e.k = k;
        return e;
    }
    static ChernExpr multiple(ChernExpr a, int n) {
        ChernExpr e;
        e.kind = Kind::Multiple;
        e.args = {std::move(a)};
        e.k = n;
        return e;
    }
};

// evaluate in R(G); atoms resolved through the table's labels
inline VirtualRep evaluate_expr(const ChernExpr& e, const TableRef& t) {
    switch (e.kind) {
        case ChernExpr::Kind::Atom:
            return rep_by_label(t, e.atom);
        case ChernExpr::Kind::Sum: {
            VirtualRep acc = VirtualRep::zero(t);
            for (const auto& a : e.args) acc = acc + evaluate_expr(a, t);
            return acc;
        }
        case ChernExpr::Kind::Tensor:
            return evaluate_expr(e.args[0], t) * evaluate_expr(e.args[1], t);
        case ChernExpr::Kind::Exterior:
            return evaluate_expr(e.args[0], t).exterior_power(e.k);
        case ChernExpr::Kind::Multiple:
            return Int(e.k) * evaluate_expr(e.args[0], t);
    }
    throw error("evaluate_expr: bad expression");
}

inline int expr_degree(const ChernExpr& e, const std::map<std::string, int>& atom_degrees) {
    switch (e.kind) {
        case ChernExpr::Kind::Atom: {
            auto it = atom_degrees.find(e.atom);
            if (it == atom_degrees.end()) throw error("unknown atom '" + e.atom + "'");
            return it->second;
        }
        case ChernExpr::Kind::Sum: {
            int d = 0;
            for (const auto& a : e.args) d += expr_degree(a, atom_degrees);
            return d;
        }
        case ChernExpr::Kind::Tensor:
            return expr_degree(e.args[0], atom_degrees) * expr_degree(e.args[1], atom_degrees);
        case ChernExpr::Kind::Exterior: {
            Int c = binomial(static_cast<unsigned long>(expr_degree(e.args[0], atom_degrees)),
                             static_cast<unsigned long>(e.k));
            return int(to_long(c));
        }
        case ChernExpr::Kind::Multiple:
            return e.k * expr_degree(e.args[0], atom_degrees);
    }
    throw error("expr_degree: bad expression");
}

// c_k of the expression, expanded in Chern classes of the atoms
inline ChernPolynomial chern_class_of_expr(const ChernExpr& e, int k,
                                           const std::map<std::string, int>& atom_degrees) {
    if (k == 0) return ChernPolynomial::constant(1);
    switch (e.kind) {
        case ChernExpr::Kind::Atom: {
            int d = expr_degree(e, atom_degrees);
            if (k > d) return ChernPolynomial();
            return ChernPolynomial::variable(e.atom, k);
        }
        case ChernExpr::Kind::Sum: {
            // Whitney over the parts
            ChernPolynomial acc;
            std::function<void(size_t, int, ChernPolynomial)> rec = [&](size_t i, int left,
                                                                        ChernPolynomial cur) {
                if (i == e.args.size()) {
                    if (left == 0) acc = acc + cur;
                    return;
                }
                for (int j = 0; j <= left; ++j) {
                    ChernPolynomial cj = chern_class_of_expr(e.args[i], j, atom_degrees);
                    if (cj.is_zero() && j > 0) continue;
                    rec(i + 1, left - j, cur * cj);
                }
            };
            rec(0, k, ChernPolynomial::constant(1));
            return acc;
        }
        case ChernExpr::Kind::Multiple: {
            std::vector<ChernExpr> parts(static_cast<size_t>(e.k), e.args[0]);
            return chern_class_of_expr(ChernExpr::sum(parts), k, atom_degrees);
        }
        case ChernExpr::Kind::Tensor: {
            int n = expr_degree(e.args[0], atom_degrees);
            int m = expr_degree(e.args[1], atom_degrees);
            ChernPolynomial univ = chern_of_tensor(n, m, k);
            return univ.substituted([&](const ChernVar& v) {
                return chern_class_of_expr(e.args[v.atom == "x" ? 0 : 1], v.index, atom_degrees);
            });
        }
        case ChernExpr::Kind::Exterior: {
            int n = expr_degree(e.args[0], atom_degrees);
            ChernPolynomial univ = chern_of_exterior(n, e.k, k);
            return univ.substituted([&](const ChernVar& v) {
                return chern_class_of_expr(e.args[0], v.index, atom_degrees);
            });
        }
    }
    throw error("chern_class_of_expr: bad expression");
}

// The polynomial identity c_k(lhs) - c_k(rhs) among Chern classes of the
// atoms, valid in gr_gamma, CH* and H*; refuses when lhs != rhs in R(G).
inline ChernPolynomial relation_from_identity(const ChernExpr& lhs, const ChernExpr& rhs, int k,
                                              const TableRef& t) {
    VirtualRep l = evaluate_expr(lhs, t), r = evaluate_expr(rhs, t);
    if (!(l == r))
        throw error("relation_from_identity: the two expressions differ as virtual characters");
    std::map<std::string, int> degrees;
    std::function<void(const ChernExpr&)> collect = [&](const ChernExpr& e) {
        if (e.kind == ChernExpr::Kind::Atom)
            degrees[e.atom] = int(to_long(rep_by_label(t, e.atom).degree()));
        for (const auto& a : e.args) collect(a);
    };
    collect(lhs);
    collect(rhs);
    return chern_class_of_expr(lhs, k, degrees) - chern_class_of_expr(rhs, k, degrees);
}

}  // namespace workbench
