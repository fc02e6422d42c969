#pragma once

// The gamma filtration on a representation ring: gamma ideals as explicit
// sublattices of Z^r, graded pieces as finite abelian groups via Smith normal
// form, Chern classes of representations inside them, and relation detection.
//
// Gamma^n is finitely generated as an ideal by the products
// prod C_{s(i)}(x_i) over irreducibles x_i with total weight in [n, n+m),
// m the maximal irreducible degree.  As an abelian group this becomes the sum
// over weights w in [n, n+m) of the module lattices
//   M_w = span_Z { chi * P : chi irreducible, P a weight-w product },
// which satisfy M_0 = Z^r and M_w = sum_a M_{w - wt(a)} * a over the atoms
// a = C_i(x); the ladder makes the construction polynomial instead of
// enumerating products.

#include "workbench/f2linalg.hpp"
#include "workbench/lattice.hpp"
#include "workbench/tables.hpp"

#include <optional>

namespace workbench {

struct ChernMonomial {
    // factors (irreducible index, class index i), kept sorted
    std::vector<std::pair<size_t, int>> factors;

    int total_degree() const {
        int d = 0;
        for (auto& [rep, i] : factors) d += i;
        return d;
    }
    std::string str(const CharacterTable& t) const {
        if (factors.empty()) return "1";
        std::ostringstream os;
        for (size_t k = 0; k < factors.size(); ++k) {
            if (k) os << "*";
            os << "c_" << factors[k].second << "(" << t.label(factors[k].first) << ")";
        }
        return os.str();
    }
};

struct GradedPiece {
    int degree = 0;
    size_t ambient_rank = 0;           // rank of Gamma^n
    QuotientStructure quotient;        // Z^ambient_rank / (Gamma^{n+1} in base coords)
    std::vector<Int> invariants;       // invariant factors > 1 (0 = free factor)

    Int order_of(const IntVec& base_coords) const { return quotient.class_order(base_coords); }
};

class GammaFiltration {
public:
    explicit GammaFiltration(TableRef table, size_t budget = kEnumerationBudget)
        : t_(std::move(table)), budget_(budget) {
        size_t r = t_->size();
        atoms_.clear();
        max_deg_ = 1;
        for (size_t i = 0; i < r; ++i) max_deg_ = std::max(max_deg_, int(to_long(t_->degree(i))));
        for (size_t i = 0; i < r; ++i) {
            VirtualRep rep = VirtualRep::basis(t_, i);
            int d = int(to_long(t_->degree(i)));
            for (int k = 1; k <= d; ++k) atoms_.push_back(Atom{i, k, rep.big_C(k).coords()});
        }
    }

    const TableRef& table() const { return t_; }
    int max_irreducible_degree() const { return max_deg_; }

    // Gamma^n as a Hermite basis inside Z^r; window defaults to [n, n+m).
    const HermiteBasis& lattice(int n) {
        auto it = lattices_.find(n);
        if (it != lattices_.end()) return it->second;
        HermiteBasis basis = build_lattice(n, max_deg_);
        return lattices_.emplace(n, std::move(basis)).first->second;
    }

    // Same construction with an enlarged weight window [n, n+m+extra); used to
    // check that the generating window is saturated.
    HermiteBasis lattice_with_window(int n, int extra) { return build_lattice(n, max_deg_ + extra); }

    bool member(const VirtualRep& x, int n) { return lattice(n).member(x.coords()); }

    // Membership certificate: coefficients over the Hermite basis rows.
    std::optional<IntVec> in_gamma(const VirtualRep& x, int n) {
        return lattice(n).coordinates(x.coords());
    }

    GradedPiece graded_piece(int n) {
        auto it = pieces_.find(n);
        if (it != pieces_.end()) return it->second;
        const HermiteBasis& big = lattice(n);
        const HermiteBasis& small = lattice(n + 1);
        IntMat rows;
        for (const IntVec& row : small.rows()) {
            auto coords = big.coordinates(row);
            if (!coords)
                throw error("graded_piece: Gamma^{n+1} is not contained in Gamma^n (invariant breach)");
            rows.push_back(std::move(*coords));
        }
        GradedPiece piece;
        piece.degree = n;
        piece.ambient_rank = big.rank();
        piece.quotient = quotient_structure(rows, big.rank());
        piece.invariants = piece.quotient.invariant_factors();
        pieces_.emplace(n, piece);
        return piece;
    }

    // Coordinates of x inside Gamma^n's basis (throws if not a member).
    IntVec base_coordinates(const VirtualRep& x, int n) {
        auto c = lattice(n).coordinates(x.coords());
        if (!c) throw error("base_coordinates: element does not lie in the lattice");
        return *c;
    }

    VirtualRep monomial_lift(const ChernMonomial& mono) const {
        VirtualRep acc = VirtualRep::integer(t_, 1);
        for (auto& [rep, i] : mono.factors) acc = acc * VirtualRep::basis(t_, rep).big_C(i);
        return acc;
    }

    // Additive order of the monomial's class in gr^n = Gamma^n / Gamma^{n+1}.
    Int chern_order(const ChernMonomial& mono) {
        int n = mono.total_degree();
        GradedPiece piece = graded_piece(n);
        return piece.order_of(base_coordinates(monomial_lift(mono), n));
    }

    // All degree-n monomials in the Chern classes of the given generators.
    std::vector<ChernMonomial> chern_monomials(const std::vector<size_t>& gens, int n) const {
        std::vector<ChernMonomial> out;
        ChernMonomial cur;
        std::function<void(size_t, int, int)> rec = [&](size_t gi, int min_i, int left) {
            if (left == 0) {
                out.push_back(cur);
                return;
            }
            if (gi == gens.size()) return;
            int d = int(to_long(t_->degree(gens[gi])));
            // either skip this generator or add a factor c_i with i >= min_i
            rec(gi + 1, 1, left);
            for (int i = min_i; i <= d && i <= left; ++i) {
                cur.factors.emplace_back(gens[gi], i);
                rec(gi, i, left - i);
                cur.factors.pop_back();
            }
        };
        rec(0, 1, n);
        std::sort(out.begin(), out.end(), [](const ChernMonomial& a, const ChernMonomial& b) {
            return a.factors < b.factors;
        });
        out.erase(std::unique(out.begin(), out.end(),
                              [](const ChernMonomial& a, const ChernMonomial& b) {
                                  return a.factors == b.factors;
                              }),
                  out.end());
        return out;
    }

    // F_2 coordinates of a 2-torsion class of gr^n over its 2-torsion summands.
    F2Vec torsion2_coords(const IntVec& base_coords, const GradedPiece& piece) {
        IntVec w = piece.quotient.reduce(base_coords);
        F2Vec out(w.size());
        for (size_t j = 0; j < w.size(); ++j) {
            const Int& d = piece.quotient.diag[j];
            if (w[j] == 0) continue;
            if (d == 0) throw error("torsion2_coords: class has infinite order");
            Int half = d / 2;
            if (d % 2 != 0 || w[j] != half)
                throw error("torsion2_coords: class is not 2-torsion");
            out.set(j, true);
        }
        return out;
    }

    // Integer combinations of the monomials vanishing in gr^n: the kernel
    // lattice of Z^k -> Gamma^n / Gamma^{n+1}, as Hermite-reduced rows.
    IntMat chern_relations_integer(const std::vector<ChernMonomial>& monomials, int n) {
        size_t r = t_->size();
        IntMat rows;
        for (const auto& mono : monomials) {
            if (mono.total_degree() != n) throw error("chern_relations: wrong monomial degree");
            rows.push_back(monomial_lift(mono).coords());
        }
        size_t k = rows.size();
        // augment with a basis of Gamma^{n+1}; kernel vectors supported on the
        // monomial block give the vanishing combinations
        IntMat stacked = rows;
        for (const IntVec& b : lattice(n + 1).rows()) stacked.push_back(b);
        IntMat full = integer_row_kernel(stacked, r);
        IntMat out;
        for (const IntVec& lambda : full) {
            IntVec head(lambda.begin(), lambda.begin() + long(k));
            bool nonzero = false;
            for (const Int& x : head)
                if (x != 0) nonzero = true;
            if (nonzero) out.push_back(std::move(head));
        }
        // Hermite-reduce the projected kernel
        HermiteBasis h(k);
        for (IntVec& v : out) h.insert(std::move(v));
        return IntMat(h.rows().begin(), h.rows().end());
    }

    // Kernel of the F_2 span of the given monomials inside gr^n (modulus 2).
    F2Matrix chern_relations_mod2(const std::vector<ChernMonomial>& monomials, int n) {
        GradedPiece piece = graded_piece(n);
        // matrix: rows = quotient coordinates of each monomial; kernel of the
        // transpose gives the vanishing combinations
        size_t cols = monomials.size();
        F2Matrix m(cols);
        size_t qdim = piece.quotient.diag.size();
        std::vector<F2Vec> mono_coords;
        for (const auto& mono : monomials) {
            if (mono.total_degree() != n) throw error("chern_relations: wrong monomial degree");
            mono_coords.push_back(torsion2_coords(base_coordinates(monomial_lift(mono), n), piece));
        }
        for (size_t j = 0; j < qdim; ++j) {
            F2Vec row(cols);
            for (size_t i = 0; i < cols; ++i)
                if (mono_coords[i].get(j)) row.set(i, true);
            m.add_row(std::move(row));
        }
        return m.nullspace();
    }

private:
    struct Atom {
        size_t rep;
        int weight;
        IntVec coords;
    };

    IntVec coord_mul(const IntVec& u, const IntVec& v) const {
        size_t r = t_->size();
        IntVec out(r, Int(0));
        for (size_t i = 0; i < r; ++i) {
            if (u[i] == 0) continue;
            for (size_t j = 0; j < r; ++j) {
                if (v[j] == 0) continue;
                const IntVec& pc = t_->product_coords(i, j);
                Int m = u[i] * v[j];
                for (size_t k = 0; k < r; ++k)
                    if (pc[k] != 0) out[k] += m * pc[k];
            }
        }
        return out;
    }

    // M_w ladder up to weight w_max inclusive.
    void extend_ladder(int w_max) {
        size_t r = t_->size();
        if (ladder_.empty()) {
            HermiteBasis full(r);
            for (size_t i = 0; i < r; ++i) {
                IntVec e(r, Int(0));
                e[i] = 1;
                full.insert(std::move(e));
            }
            ladder_.push_back(std::move(full));
        }
        size_t ops = 0;
        while (int(ladder_.size()) <= w_max) {
            int w = int(ladder_.size());
            HermiteBasis next(r);
            for (const Atom& a : atoms_) {
                if (a.weight > w) continue;
                for (const IntVec& row : ladder_[size_t(w - a.weight)].rows()) {
                    if (++ops > budget_) throw error("gamma_lattice: enumeration budget exceeded");
                    next.insert(coord_mul(row, a.coords));
                }
            }
            ladder_.push_back(std::move(next));
        }
    }

    HermiteBasis build_lattice(int n, int window) {
        if (n < 0) throw error("gamma lattice: negative degree");
        size_t r = t_->size();
        extend_ladder(n + window - 1);
        HermiteBasis out(r);
        for (int w = n; w < n + window; ++w)
            for (const IntVec& row : ladder_[size_t(w)].rows()) out.insert(row);
        return out;
    }

    TableRef t_;
    size_t budget_;
    std::vector<Atom> atoms_;
    int max_deg_ = 1;
    std::vector<HermiteBasis> ladder_;  // M_0, M_1, ...
    std::map<int, HermiteBasis> lattices_;
    std::map<int, GradedPiece> pieces_;
};

// gamma^i(x) and C_i(x) free-standing forms matching the operation names.
inline VirtualRep gamma_op(const VirtualRep& x, int i) { return x.gamma_op(i); }
inline VirtualRep big_C(const VirtualRep& x, int i) { return x.big_C(i); }

}  // namespace workbench
