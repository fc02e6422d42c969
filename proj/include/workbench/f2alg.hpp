#pragma once

// Graded commutative polynomial algebras over F_2 with homogeneous relations:
// per-degree normal forms by linear spinning (no Groebner machinery --- every
// computation here is degree-truncated), homomorphism kernels, and minimal new
// relation generators of a subalgebra presentation degree by degree.

#include "workbench/f2linalg.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace workbench {

// monomial: exponent vector over the generators
using F2Mono = std::vector<int>;

struct F2Poly {
    // set of monomials with coefficient 1, kept sorted
    std::vector<F2Mono> monos;

    static F2Poly zero() { return {}; }
    static F2Poly one(size_t gens) { return F2Poly{{F2Mono(gens, 0)}}; }
    static F2Poly monomial(F2Mono m) { return F2Poly{{std::move(m)}}; }

    bool is_zero() const { return monos.empty(); }

    F2Poly& normalize() {
        std::sort(monos.begin(), monos.end());
        // XOR semantics: monomials appearing twice cancel
        std::vector<F2Mono> out;
        for (size_t i = 0; i < monos.size();) {
            size_t j = i;
            while (j < monos.size() && monos[j] == monos[i]) ++j;
            if ((j - i) % 2) out.push_back(monos[i]);
            i = j;
        }
        monos = std::move(out);
        return *this;
    }

    friend F2Poly operator+(const F2Poly& a, const F2Poly& b) {
        F2Poly r;
        r.monos = a.monos;
        r.monos.insert(r.monos.end(), b.monos.begin(), b.monos.end());
        return r.normalize();
    }
    friend F2Poly operator*(const F2Poly& a, const F2Poly& b) {
        F2Poly r;
        for (const auto& ma : a.monos)
            for (const auto& mb : b.monos) {
                F2Mono m = ma;
                for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
                r.monos.push_back(std::move(m));
            }
        return r.normalize();
    }
    friend bool operator==(const F2Poly& a, const F2Poly& b) { return a.monos == b.monos; }
};

class F2GradedAlgebra {
public:
    enum class Grading { Chow, Cohomology };

    F2GradedAlgebra(std::vector<std::pair<std::string, int>> generators,
                    std::vector<F2Poly> relations, Grading grading, int degree_bound = 24)
        : gens_(std::move(generators)),
          rels_(std::move(relations)),
          grading_(grading),
          bound_(degree_bound) {
        for (auto& [name, deg] : gens_)
            if (deg <= 0) throw error("F2GradedAlgebra: generator degrees must be positive");
        for (const F2Poly& r : rels_) {
            if (r.is_zero()) throw error("F2GradedAlgebra: zero relation");
            int d = mono_degree(r.monos[0]);
            for (const auto& m : r.monos)
                if (mono_degree(m) != d) throw error("F2GradedAlgebra: relation not homogeneous");
        }
    }

    const std::vector<std::pair<std::string, int>>& generators() const { return gens_; }
    const std::vector<F2Poly>& relations() const { return rels_; }
    Grading grading() const { return grading_; }
    int degree_bound() const { return bound_; }
    size_t gen_count() const { return gens_.size(); }

    int gen_index(const std::string& name) const {
        for (size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].first == name) return int(i);
        return -1;
    }

    int mono_degree(const F2Mono& m) const {
        int d = 0;
        for (size_t i = 0; i < m.size(); ++i) d += m[i] * gens_[i].second;
        return d;
    }
    int poly_degree(const F2Poly& p) const {
        return p.is_zero() ? 0 : mono_degree(p.monos[0]);
    }

    // monomials of total degree d, ordered graded-lexicographically
    const std::vector<F2Mono>& monomials(int d) const {
        seal(d);
        return data_[size_t(d)].monomials;
    }

    size_t monomial_index(int d, const F2Mono& m) const {
        const auto& list = monomials(d);
        auto it = std::lower_bound(list.begin(), list.end(), m, lex_less);
        if (it == list.end() || *it != m) throw error("monomial_index: not a degree-d monomial");
        return size_t(it - list.begin());
    }

    // echelon basis of the degree-d graded piece of the relation ideal
    const F2Matrix& relation_space(int d) const {
        seal(d);
        return data_[size_t(d)].relation_space;
    }

    // monomials surviving in the quotient at degree d
    const std::vector<F2Mono>& quotient_basis(int d) const {
        seal(d);
        return data_[size_t(d)].quotient_basis;
    }
    size_t quotient_dim(int d) const { return quotient_basis(d).size(); }

    F2Vec to_vec(const F2Poly& p, int d) const {
        F2Vec v(monomials(d).size());
        for (const auto& m : p.monos) {
            if (mono_degree(m) != d) throw error("to_vec: inhomogeneous polynomial");
            v.flip(monomial_index(d, m));
        }
        return v;
    }
    F2Poly from_vec(const F2Vec& v, int d) const {
        F2Poly p;
        const auto& list = monomials(d);
        for (size_t i = 0; i < list.size(); ++i)
            if (v.get(i)) p.monos.push_back(list[i]);
        return p.normalize();
    }
    // reconstruction from coordinates over the degree-d quotient basis
    F2Poly from_quotient_vec(const F2Vec& v, int d) const {
        F2Poly p;
        const auto& basis = quotient_basis(d);
        for (size_t i = 0; i < basis.size(); ++i)
            if (v.get(i)) p.monos.push_back(basis[i]);
        return p.normalize();
    }

    // normal form: reduce along the echelonized relation space; linear and
    // idempotent by construction
    F2Poly nf(const F2Poly& p) const {
        if (p.is_zero()) return p;
        // split by degree
        std::map<int, F2Poly> parts;
        for (const auto& m : p.monos) parts[mono_degree(m)].monos.push_back(m);
        F2Poly out;
        for (auto& [d, q] : parts) {
            q.normalize();
            F2Vec v = to_vec(q, d);
            const F2Matrix& rel = relation_space(d);
            for (const F2Vec& row : rel.data()) {
                long piv = row.lowest_set();
                if (piv >= 0 && v.get(size_t(piv))) v ^= row;
            }
            out = out + from_vec(v, d);
        }
        return out;
    }

    // coordinates of nf(p) over the degree-d quotient basis
    F2Vec quotient_coords(const F2Poly& p, int d) const {
        F2Poly reduced = nf(p);
        F2Vec out(quotient_dim(d));
        const auto& basis = quotient_basis(d);
        for (const auto& m : reduced.monos) {
            if (mono_degree(m) != d) throw error("quotient_coords: inhomogeneous polynomial");
            auto it = std::lower_bound(basis.begin(), basis.end(), m, lex_less);
            if (it == basis.end() || *it != m)
                throw error("quotient_coords: normal form not over the quotient basis");
            out.flip(size_t(it - basis.begin()));
        }
        return out;
    }

    F2Poly parse(const std::string& text) const;
    std::string poly_str(const F2Poly& p) const {
        if (p.is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& m : p.monos) {
            if (!first) os << "+";
            first = false;
            bool started = false;
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (started) os << "*";
                started = true;
                os << gens_[i].first;
                if (m[i] > 1) os << "^" << m[i];
            }
            if (!started) os << "1";
        }
        return os.str();
    }

    static bool lex_less(const F2Mono& a, const F2Mono& b) { return a < b; }

private:
    struct DegreeData {
        std::vector<F2Mono> monomials;
        F2Matrix relation_space;
        std::vector<F2Mono> quotient_basis;
    };

    void seal(int d) const {
        if (d < 0) throw error("F2GradedAlgebra: negative degree");
        if (d > bound_) throw error("F2GradedAlgebra: degree beyond the configured bound");
        while (int(data_.size()) <= d) {
            int cur = int(data_.size());
            DegreeData dd;
            dd.monomials = enumerate_monomials(cur);
            // spin: every relation times every monomial of complementary degree
            F2Matrix space(dd.monomials.size());
            for (const F2Poly& r : rels_) {
                int rd = poly_degree(r);
                if (rd > cur) continue;
                for (const F2Mono& m : enumerate_monomials(cur - rd)) {
                    F2Poly prod = r * F2Poly::monomial(m);
                    F2Vec v(dd.monomials.size());
                    for (const auto& mono : prod.monos) {
                        auto it = std::lower_bound(dd.monomials.begin(), dd.monomials.end(), mono,
                                                   lex_less);
                        v.flip(size_t(it - dd.monomials.begin()));
                    }
                    space.add_row(std::move(v));
                }
            }
            space.echelonize();
            std::vector<char> pivot(dd.monomials.size(), 0);
            for (const F2Vec& row : space.data()) pivot[size_t(row.lowest_set())] = 1;
            for (size_t i = 0; i < dd.monomials.size(); ++i)
                if (!pivot[i]) dd.quotient_basis.push_back(dd.monomials[i]);
            dd.relation_space = std::move(space);
            data_.push_back(std::move(dd));
        }
    }

    std::vector<F2Mono> enumerate_monomials(int d) const {
        std::vector<F2Mono> out;
        F2Mono cur(gens_.size(), 0);
        std::function<void(size_t, int)> rec = [&](size_t i, int left) {
            if (left == 0) {
                out.push_back(cur);
                return;
            }
            if (i == gens_.size()) return;
            int gd = gens_[i].second;
            for (int e = 0; e * gd <= left; ++e) {
                cur[i] = e;
                rec(i + 1, left - e * gd);
            }
            cur[i] = 0;
        };
        rec(0, d);
        std::sort(out.begin(), out.end(), lex_less);
        return out;
    }

    std::vector<std::pair<std::string, int>> gens_;
    std::vector<F2Poly> rels_;
    Grading grading_;
    int bound_;
    mutable std::vector<DegreeData> data_;
};

inline F2Poly F2GradedAlgebra::parse(const std::string& text) const {
    F2Poly out;
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty() || s == "0") return out;
    size_t i = 0;
    while (i < s.size()) {
        F2Mono m(gens_.size(), 0);
        bool saw_factor = false;
        for (;;) {
            if (i < s.size() && s[i] == '1') {
                ++i;
                saw_factor = true;
            } else {
                size_t best = 0;
                int idx = -1;
                for (size_t gi = 0; gi < gens_.size(); ++gi) {
                    const std::string& name = gens_[gi].first;
                    if (s.compare(i, name.size(), name) == 0 && name.size() > best) {
                        best = name.size();
                        idx = int(gi);
                    }
                }
                if (idx < 0) throw error("F2 parse: unknown generator at '" + s.substr(i) + "'");
                i += best;
                int e = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    std::string digits;
                    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i])))
                        digits.push_back(s[i++]);
                    if (digits.empty()) throw error("F2 parse: missing exponent");
                    e = std::stoi(digits);
                }
                m[size_t(idx)] += e;
                saw_factor = true;
            }
            if (i < s.size() && s[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!saw_factor) throw error("F2 parse: empty term in '" + text + "'");
        out.monos.push_back(std::move(m));
        if (i < s.size()) {
            if (s[i] != '+') throw error("F2 parse: expected '+' in '" + text + "'");
            ++i;
        }
    }
    return out.normalize();
}

// Degree-preserving homomorphism given by generator images (with the Chow/
// cohomology degree-doubling convention applied when the gradings differ).
class AlgebraHom {
public:
    AlgebraHom(std::shared_ptr<const F2GradedAlgebra> source,
               std::shared_ptr<const F2GradedAlgebra> target, std::vector<F2Poly> images)
        : src_(std::move(source)), dst_(std::move(target)), images_(std::move(images)) {
        if (images_.size() != src_->gen_count()) throw error("AlgebraHom: one image per generator");
        scale_ = 1;
        if (src_->grading() == F2GradedAlgebra::Grading::Chow &&
            dst_->grading() == F2GradedAlgebra::Grading::Cohomology)
            scale_ = 2;
        for (size_t i = 0; i < images_.size(); ++i) {
            int want = src_->generators()[i].second * scale_;
            for (const auto& m : images_[i].monos)
                if (dst_->mono_degree(m) != want)
                    throw error("AlgebraHom: image of " + src_->generators()[i].first +
                                " is not homogeneous of degree " + std::to_string(want));
        }
        for (const F2Poly& r : src_->relations())
            if (!dst_->nf(apply(r)).is_zero())
                throw error("AlgebraHom: relation " + src_->poly_str(r) +
                            " does not map to zero");
    }

    const std::shared_ptr<const F2GradedAlgebra>& source() const { return src_; }
    const std::shared_ptr<const F2GradedAlgebra>& target() const { return dst_; }
    int degree_scale() const { return scale_; }
    const F2Poly& image(size_t i) const { return images_[i]; }

    F2Poly apply(const F2Poly& p) const {
        F2Poly out;
        for (const auto& m : p.monos) {
            F2Poly term = F2Poly::one(dst_->gen_count());
            for (size_t i = 0; i < m.size(); ++i)
                for (int e = 0; e < m[i]; ++e) term = term * images_[i];
            out = out + term;
        }
        return out;
    }

    // matrix of the degree-d component over the quotient bases
    F2Matrix degree_matrix(int d) const {
        const auto& src_basis = src_->quotient_basis(d);
        size_t cols = dst_->quotient_dim(d * scale_);
        F2Matrix m(cols);
        for (const F2Mono& mono : src_basis)
            m.add_row(dst_->quotient_coords(apply(F2Poly::monomial(mono)), d * scale_));
        return m;
    }

    // basis of the degree-d kernel, as polynomials of the source
    std::vector<F2Poly> kernel(int d) const {
        const auto& src_basis = src_->quotient_basis(d);
        // rows indexed by target coordinates, columns by source basis monomials
        std::vector<F2Vec> images;
        for (const F2Mono& mono : src_basis)
            images.push_back(dst_->quotient_coords(apply(F2Poly::monomial(mono)), d * scale_));
        size_t tdim = dst_->quotient_dim(d * scale_);
        F2Matrix system(src_basis.size());
        for (size_t t = 0; t < tdim; ++t) {
            F2Vec row(src_basis.size());
            for (size_t s = 0; s < src_basis.size(); ++s)
                if (images[s].get(t)) row.set(s, true);
            system.add_row(std::move(row));
        }
        F2Matrix ker = system.nullspace();
        std::vector<F2Poly> out;
        for (const F2Vec& v : ker.data()) {
            F2Poly p;
            for (size_t s = 0; s < src_basis.size(); ++s)
                if (v.get(s)) p.monos.push_back(src_basis[s]);
            out.push_back(p.normalize());
        }
        return out;
    }

private:
    std::shared_ptr<const F2GradedAlgebra> src_;
    std::shared_ptr<const F2GradedAlgebra> dst_;
    std::vector<F2Poly> images_;
    int scale_ = 1;
};

// Minimal new relation generators per degree <= bound for the subalgebra
// presented by a hom from a free graded algebra: in each degree, the kernel
// modulo the spin of the lower-degree relations.
inline std::map<int, std::vector<F2Poly>> subalgebra_relations(const AlgebraHom& f, int bound) {
    const F2GradedAlgebra& src = *f.source();
    if (!src.relations().empty()) throw error("subalgebra_relations: source must be free");
    std::map<int, std::vector<F2Poly>> out;
    std::vector<F2Poly> found;  // all relation generators so far
    for (int d = 1; d <= bound; ++d) {
        // spin of the found relations in degree d
        F2Matrix old_space(src.monomials(d).size());
        for (const F2Poly& r : found) {
            int rd = src.poly_degree(r);
            if (rd > d) continue;
            for (const F2Mono& m : src.monomials(d - rd))
                old_space.add_row(src.to_vec(r * F2Poly::monomial(m), d));
        }
        old_space.echelonize();
        // kernel in degree d
        std::vector<F2Poly> ker = f.kernel(d);
        std::vector<F2Poly> fresh;
        F2Matrix span = old_space;
        for (const F2Poly& k : ker) {
            F2Vec v = src.to_vec(k, d);
            if (span.in_row_space(v)) continue;
            span.add_row(v);
            span.echelonize();
            fresh.push_back(k);
        }
        if (!fresh.empty()) out[d] = fresh;
        for (const F2Poly& r : fresh) found.push_back(r);
    }
    return out;
}

// CH*(B C_p^n)/p in the requested grading: a polynomial algebra on n
// generators (degree 1 in the Chow grading).
inline F2GradedAlgebra chow_ring_of_elementary_abelian(int rank,
                                                       F2GradedAlgebra::Grading grading) {
    std::vector<std::pair<std::string, int>> gens;
    for (int i = 1; i <= rank; ++i) gens.emplace_back("x" + std::to_string(i), 1);
    return F2GradedAlgebra(std::move(gens), {}, grading);
}

}  // namespace workbench
