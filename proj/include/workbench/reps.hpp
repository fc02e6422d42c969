#pragma once

// Exact complex representation theory of the enumerated matrix groups:
// class functions with cyclotomic values, character tables (explicit
// constructions for the unitriangular families, Dixon-Schneider as a generic
// fallback), tensor decomposition, Adams operations, exterior powers and
// restriction along subgroup fusion.

#include "workbench/cyclotomic.hpp"
#include "workbench/matgroup.hpp"

#include <array>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>

namespace workbench {

struct GroupData {
    FiniteMatrixGroup group;
    ConjugacyData conj;
    unsigned long exponent = 1;

    size_t class_count() const { return conj.classes.size(); }
    int class_of_element(int element_index) const { return conj.class_of[size_t(element_index)]; }
    const MatrixElement& class_rep(size_t c) const {
        return group.elements[size_t(conj.classes[c].representative)];
    }
};

using GroupRef = std::shared_ptr<const GroupData>;

inline GroupRef make_group_data(FiniteMatrixGroup g) {
    auto data = std::make_shared<GroupData>();
    data->group = std::move(g);
    data->conj = conjugacy_classes(data->group);
    data->exponent = static_cast<unsigned long>(data->conj.exponent);
    return data;
}

// ---------------------------------------------------------------------------

class ClassFunction {
public:
    ClassFunction() = default;
    ClassFunction(GroupRef g, std::vector<Cyclotomic> values)
        : g_(std::move(g)), v_(std::move(values)) {
        if (v_.size() != g_->class_count()) throw error("ClassFunction: wrong value count");
    }

    static ClassFunction constant(GroupRef g, Int c) {
        std::vector<Cyclotomic> v(g->class_count(), Cyclotomic::integer(g->exponent, c));
        return ClassFunction(std::move(g), std::move(v));
    }

    const GroupRef& group() const { return g_; }
    const std::vector<Cyclotomic>& values() const { return v_; }
    const Cyclotomic& value(size_t cls) const { return v_[cls]; }

    Int degree() const { return v_[size_t(identity_class())].rational_value(); }

    int identity_class() const { return g_->class_of_element(g_->group.identity_index); }

    friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
        a.check_same(b);
        std::vector<Cyclotomic> v(a.v_.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = a.v_[i] + b.v_[i];
        return ClassFunction(a.g_, std::move(v));
    }
    friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
        a.check_same(b);
        std::vector<Cyclotomic> v(a.v_.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = a.v_[i] - b.v_[i];
        return ClassFunction(a.g_, std::move(v));
    }
    friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
        a.check_same(b);
        std::vector<Cyclotomic> v(a.v_.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = a.v_[i] * b.v_[i];
        return ClassFunction(a.g_, std::move(v));
    }
    friend ClassFunction operator*(const Int& k, const ClassFunction& a) {
        std::vector<Cyclotomic> v(a.v_.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = k * a.v_[i];
        return ClassFunction(a.g_, std::move(v));
    }

    bool operator==(const ClassFunction& o) const { return v_ == o.v_; }

    bool is_zero() const {
        for (const auto& x : v_)
            if (!x.is_zero()) return false;
        return true;
    }

    // <a, b> = (1/|G|) sum |C| a(C) conj(b(C)); exact.
    Cyclotomic inner_raw(const ClassFunction& b) const {
        check_same(b);
        Cyclotomic s = Cyclotomic::zero(g_->exponent);
        for (size_t c = 0; c < v_.size(); ++c) {
            Cyclotomic term = v_[c] * b.v_[c].conj();
            s += Int(static_cast<unsigned long>(g_->conj.classes[c].size())) * term;
        }
        return s;
    }

    // Inner product as an exact integer; throws on non-integral result.
    Int inner(const ClassFunction& b) const {
        Cyclotomic s = inner_raw(b);
        if (!s.is_rational()) throw error("inner product is not rational");
        return divide_exact(s.rational_value(), Int(static_cast<unsigned long>(g_->group.order())));
    }

    // Adams operation: (psi^k chi)(g) = chi(g^k), through the class power map.
    ClassFunction adams(long k) const {
        long e = long(g_->exponent);
        long m = ((k % e) + e) % e;
        std::vector<Cyclotomic> v(v_.size());
        for (size_t c = 0; c < v_.size(); ++c)
            v[c] = v_[size_t(g_->conj.power_map[c][size_t(m)])];
        return ClassFunction(g_, std::move(v));
    }

    ClassFunction conj_values() const {
        std::vector<Cyclotomic> v(v_.size());
        for (size_t i = 0; i < v_.size(); ++i) v[i] = v_[i].conj();
        return ClassFunction(g_, std::move(v));
    }

    // k-th exterior power as a class function, by the Newton recurrence
    //   k lam^k = sum_{i=1..k} (-1)^{i-1} lam^{k-i} psi^i,
    // valid for every virtual element; the divisions must be exact.
    ClassFunction exterior_power(int k) const {
        if (k < 0) throw error("exterior_power: negative index");
        std::vector<ClassFunction> lam;
        lam.push_back(constant(g_, 1));
        std::vector<ClassFunction> psi;  // psi[i] = adams(i+1)
        for (int i = 1; i <= k; ++i) psi.push_back(adams(i));
        for (int m = 1; m <= k; ++m) {
            std::vector<Cyclotomic> acc(v_.size(), Cyclotomic::zero(g_->exponent));
            for (int i = 1; i <= m; ++i) {
                int sign = (i % 2 == 1) ? 1 : -1;
                for (size_t c = 0; c < v_.size(); ++c) {
                    Cyclotomic t = lam[size_t(m - i)].v_[c] * psi[size_t(i - 1)].v_[c];
                    acc[c] += Int(sign) * t;
                }
            }
            std::vector<Cyclotomic> vals(v_.size());
            for (size_t c = 0; c < v_.size(); ++c) {
                try {
                    vals[c] = acc[c].divided_by(Int(m));
                } catch (const error&) {
                    throw error("exterior_power: inexact Newton division (internal inconsistency)");
                }
            }
            lam.emplace_back(g_, std::move(vals));
        }
        return lam.back();
    }

    // Kernel of a character: classes where the value equals the degree.
    std::vector<char> kernel_classes() const {
        Int deg = degree();
        Cyclotomic d = Cyclotomic::integer(g_->exponent, deg);
        std::vector<char> ker(v_.size(), 0);
        for (size_t c = 0; c < v_.size(); ++c) ker[c] = (v_[c] == d) ? 1 : 0;
        return ker;
    }

private:
    void check_same(const ClassFunction& o) const {
        if (g_.get() != o.g_.get()) throw error("class functions live on different groups");
    }

    GroupRef g_;
    std::vector<Cyclotomic> v_;
};

// ---------------------------------------------------------------------------

class CharacterTable {
public:
    CharacterTable() = default;
    CharacterTable(GroupRef g, std::vector<ClassFunction> irr, std::vector<std::string> labels)
        : g_(std::move(g)), irr_(std::move(irr)), labels_(std::move(labels)) {
        sort_canonically();
        validate();
    }

    const GroupRef& group() const { return g_; }
    size_t size() const { return irr_.size(); }
    const ClassFunction& irreducible(size_t i) const { return irr_[i]; }
    const std::vector<ClassFunction>& irreducibles() const { return irr_; }
    const std::string& label(size_t i) const { return labels_[i]; }
    Int degree(size_t i) const { return degrees_[i]; }
    const IntVec& degrees() const { return degrees_; }

    int index_of_label(const std::string& label) const {
        for (size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label) return int(i);
        return -1;
    }
    const ClassFunction& by_label(const std::string& label) const {
        int i = index_of_label(label);
        if (i < 0) throw error("no irreducible labelled '" + label + "'");
        return irr_[size_t(i)];
    }

    // Multiplicity vector of a class function over the irreducibles; every
    // coordinate must be an exact integer.
    IntVec decompose(const ClassFunction& chi) const {
        IntVec out(irr_.size());
        for (size_t i = 0; i < irr_.size(); ++i) {
            try {
                out[i] = chi.inner(irr_[i]);
            } catch (const error&) {
                throw error("decompose: non-integer multiplicity (not a virtual character)");
            }
        }
        // exactness: the reconstruction must reproduce chi
        ClassFunction rec = reconstruct(out);
        if (!(rec == chi)) throw error("decompose: reconstruction mismatch (not a virtual character)");
        return out;
    }

    ClassFunction reconstruct(const IntVec& coords) const {
        if (coords.size() != irr_.size()) throw error("reconstruct: wrong length");
        std::vector<Cyclotomic> v(g_->class_count(), Cyclotomic::zero(g_->exponent));
        for (size_t i = 0; i < coords.size(); ++i) {
            if (coords[i] == 0) continue;
            for (size_t c = 0; c < v.size(); ++c) v[c] += coords[i] * irr_[i].value(c);
        }
        return ClassFunction(g_, std::move(v));
    }

    std::vector<size_t> linear_character_indices() const {
        std::vector<size_t> out;
        for (size_t i = 0; i < irr_.size(); ++i)
            if (degrees_[i] == 1) out.push_back(i);
        return out;
    }

    size_t trivial_index() const {
        Cyclotomic one = Cyclotomic::one(g_->exponent);
        for (size_t i = 0; i < irr_.size(); ++i) {
            if (degrees_[i] != 1) continue;
            bool triv = true;
            for (const auto& v : irr_[i].values())
                if (!(v == one)) {
                    triv = false;
                    break;
                }
            if (triv) return i;
        }
        throw error("character table: trivial character missing");
    }

    // Structure constants chi_i * chi_j = sum_k c[i][j][k] chi_k, cached.
    const IntVec& product_coords(size_t i, size_t j) const {
        std::scoped_lock lock(cache_->mutex);
        auto key = std::make_pair(std::min(i, j), std::max(i, j));
        auto it = cache_->products.find(key);
        if (it == cache_->products.end()) {
            IntVec coords = decompose(irr_[key.first] * irr_[key.second]);
            it = cache_->products.emplace(key, std::move(coords)).first;
        }
        return it->second;
    }

    void validate() const {
        Int sum = 0;
        for (size_t i = 0; i < irr_.size(); ++i) {
            for (size_t j = 0; j < irr_.size(); ++j) {
                Int ip = irr_[i].inner(irr_[j]);
                if (ip != Int(i == j ? 1 : 0))
                    throw error("character table fails exact orthonormality");
            }
            sum += degrees_[i] * degrees_[i];
        }
        if (sum != Int(static_cast<unsigned long>(g_->group.order())))
            throw error("character table: sum of squared degrees != |G|");
        if (irr_.size() != g_->class_count())
            throw error("character table: irreducible count != class count");
    }

    std::string dump() const {
        std::ostringstream os;
        for (size_t i = 0; i < irr_.size(); ++i) {
            os << labels_[i] << " | " << degrees_[i].get_str() << " | ";
            for (size_t c = 0; c < g_->class_count(); ++c)
                os << irr_[i].value(c).str() << (c + 1 < g_->class_count() ? ", " : "");
            os << "\n";
        }
        return os.str();
    }

private:
    void sort_canonically() {
        // order by degree, then lexicographically on the value encoding
        auto encode = [](const ClassFunction& f) {
            std::ostringstream os;
            for (const auto& v : f.values()) {
                for (const auto& c : v.coeffs()) os << c.get_str() << ",";
                os << ";";
            }
            return os.str();
        };
        std::vector<size_t> order(irr_.size());
        std::iota(order.begin(), order.end(), 0);
        std::vector<std::string> enc(irr_.size());
        std::vector<Int> deg(irr_.size());
        for (size_t i = 0; i < irr_.size(); ++i) {
            enc[i] = encode(irr_[i]);
            deg[i] = irr_[i].degree();
        }
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            if (deg[a] != deg[b]) return deg[a] < deg[b];
            return enc[a] < enc[b];
        });
        std::vector<ClassFunction> irr;
        std::vector<std::string> labels;
        for (size_t i : order) {
            irr.push_back(std::move(irr_[i]));
            labels.push_back(std::move(labels_[i]));
        }
        irr_ = std::move(irr);
        labels_ = std::move(labels);
        // generic constructions leave a sentinel; name rows by canonical position
        for (size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == "?") labels_[i] = "x" + std::to_string(i + 1);
        degrees_.clear();
        for (const auto& f : irr_) degrees_.push_back(f.degree());
    }

    struct ProductCache {
        std::mutex mutex;
        std::map<std::pair<size_t, size_t>, IntVec> products;
    };

    GroupRef g_;
    std::vector<ClassFunction> irr_;
    std::vector<std::string> labels_;
    IntVec degrees_;
    std::shared_ptr<ProductCache> cache_ = std::make_shared<ProductCache>();
};

using TableRef = std::shared_ptr<const CharacterTable>;

// ---------------------------------------------------------------------------
// Virtual representations: integer vectors over the irreducibles.

class VirtualRep {
public:
    VirtualRep() = default;
    VirtualRep(TableRef t, IntVec coords) : t_(std::move(t)), c_(std::move(coords)) {
        if (c_.size() != t_->size()) throw error("VirtualRep: wrong coordinate count");
    }

    static VirtualRep zero(TableRef t) {
        IntVec c(t->size(), Int(0));
        return VirtualRep(std::move(t), std::move(c));
    }
    static VirtualRep basis(TableRef t, size_t i) {
        IntVec c(t->size(), Int(0));
        c[i] = 1;
        return VirtualRep(std::move(t), std::move(c));
    }
    static VirtualRep integer(TableRef t, Int n) {
        // n copies of the trivial representation
        IntVec c(t->size(), Int(0));
        c[t->trivial_index()] = std::move(n);
        return VirtualRep(std::move(t), std::move(c));
    }

    const TableRef& table() const { return t_; }
    const IntVec& coords() const { return c_; }

    Int degree() const {
        Int d = 0;
        for (size_t i = 0; i < c_.size(); ++i) d += c_[i] * t_->degree(i);
        return d;
    }

    ClassFunction character() const { return t_->reconstruct(c_); }

    friend VirtualRep operator+(const VirtualRep& a, const VirtualRep& b) {
        a.check_same(b);
        IntVec c(a.c_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
        return VirtualRep(a.t_, std::move(c));
    }
    friend VirtualRep operator-(const VirtualRep& a, const VirtualRep& b) {
        a.check_same(b);
        IntVec c(a.c_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
        return VirtualRep(a.t_, std::move(c));
    }
    friend VirtualRep operator*(const Int& k, const VirtualRep& a) {
        IntVec c(a.c_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = k * a.c_[i];
        return VirtualRep(a.t_, std::move(c));
    }
    friend VirtualRep operator*(const VirtualRep& a, const VirtualRep& b) {
        a.check_same(b);
        IntVec out(a.c_.size(), Int(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] == 0) continue;
                const IntVec& pc = a.t_->product_coords(i, j);
                Int m = a.c_[i] * b.c_[j];
                for (size_t k = 0; k < out.size(); ++k) out[k] += m * pc[k];
            }
        }
        return VirtualRep(a.t_, std::move(out));
    }

    bool operator==(const VirtualRep& o) const { return c_ == o.c_; }
    bool is_zero() const {
        for (const Int& x : c_)
            if (x != 0) return false;
        return true;
    }

    VirtualRep adams(long k) const {
        return VirtualRep(t_, t_->decompose(character().adams(k)));
    }
    VirtualRep exterior_power(int k) const {
        return VirtualRep(t_, t_->decompose(character().exterior_power(k)));
    }
    // gamma^i(x) = lambda^i(x + i - 1)
    VirtualRep gamma_op(int i) const {
        if (i < 0) throw error("gamma_op: negative index");
        VirtualRep shifted = *this + VirtualRep::integer(t_, Int(i - 1));
        return shifted.exterior_power(i);
    }
    // C_i(x) = gamma^i(x - deg x); vanishes for i > deg x when x is genuine
    VirtualRep big_C(int i) const {
        VirtualRep reduced = *this - VirtualRep::integer(t_, degree());
        return reduced.gamma_op(i);
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!first) os << (c_[i] > 0 ? " + " : " - ");
            else if (c_[i] < 0)
                os << "-";
            first = false;
            Int v = abs(c_[i]);
            if (v != 1) os << v.get_str() << "*";
            os << t_->label(i);
        }
        if (first) os << "0";
        return os.str();
    }

private:
    void check_same(const VirtualRep& o) const {
        if (t_.get() != o.t_.get()) throw error("virtual reps live on different tables");
    }

    TableRef t_;
    IntVec c_;
};

// Express a cyclotomic value in Z[zeta_target] where target | N and the value
// lies in the smaller field; exact, throws otherwise.
inline Cyclotomic reduce_to_field(const Cyclotomic& v, unsigned long target) {
    if (v.modulus() == target) return v;
    unsigned long m = lcm(Int(target), Int(v.modulus())).get_ui();
    Cyclotomic big = v.embedded(m);
    size_t dim_m = euler_phi(m), dim_t = euler_phi(target);
    // solve sum_i x_i * embed(zeta_target^i) = big over Q (integral solution)
    std::vector<std::vector<mpq_class>> aug(dim_m, std::vector<mpq_class>(dim_t + 1, 0));
    for (size_t i = 0; i < dim_t; ++i) {
        Cyclotomic b = Cyclotomic::root(target, long(i)).embedded(m);
        for (size_t r = 0; r < dim_m; ++r) aug[r][i] = mpq_class(b.coeffs()[r]);
    }
    for (size_t r = 0; r < dim_m; ++r) aug[r][dim_t] = mpq_class(big.coeffs()[r]);
    // Gaussian elimination
    size_t row = 0;
    std::vector<long> pivot_of_col(dim_t, -1);
    for (size_t col = 0; col < dim_t && row < dim_m; ++col) {
        size_t pr = row;
        while (pr < dim_m && aug[pr][col] == 0) ++pr;
        if (pr == dim_m) continue;
        std::swap(aug[row], aug[pr]);
        mpq_class inv = 1 / aug[row][col];
        for (size_t j = col; j <= dim_t; ++j) aug[row][j] *= inv;
        for (size_t r = 0; r < dim_m; ++r) {
            if (r == row || aug[r][col] == 0) continue;
            mpq_class f = aug[r][col];
            for (size_t j = col; j <= dim_t; ++j) aug[r][j] -= f * aug[row][j];
        }
        pivot_of_col[col] = long(row);
        ++row;
    }
    for (size_t r = row; r < dim_m; ++r)
        if (aug[r][dim_t] != 0) throw error("value does not lie in the requested cyclotomic field");
    IntVec coeffs(dim_t, Int(0));
    for (size_t col = 0; col < dim_t; ++col) {
        if (pivot_of_col[col] < 0) continue;
        mpq_class x = aug[size_t(pivot_of_col[col])][dim_t];
        if (x.get_den() != 1) throw error("field reduction produced a non-integral coefficient");
        coeffs[col] = x.get_num();
    }
    Cyclotomic out(target, std::move(coeffs));
    if (!(out == v)) throw error("field reduction mismatch");
    return out;
}

// Restriction of a class function along a subgroup inclusion.  The subgroup's
// elements must all occur in the ambient group (matrix-level fusion).
inline ClassFunction restrict_class_function(const ClassFunction& chi, const GroupRef& sub) {
    const GroupRef& amb = chi.group();
    std::vector<Cyclotomic> vals(sub->class_count());
    for (size_t c = 0; c < sub->class_count(); ++c) {
        const MatrixElement& m = sub->class_rep(c);
        int idx = amb->group.index_of(m);
        if (idx < 0) throw error("restrict: subgroup element not found in the ambient group");
        vals[c] = reduce_to_field(chi.value(size_t(amb->class_of_element(idx))), sub->exponent);
    }
    return ClassFunction(sub, std::move(vals));
}

inline VirtualRep restrict_virtual(const VirtualRep& x, const TableRef& sub_table) {
    ClassFunction res = restrict_class_function(x.character(), sub_table->group());
    return VirtualRep(sub_table, sub_table->decompose(res));
}

}  // namespace workbench
