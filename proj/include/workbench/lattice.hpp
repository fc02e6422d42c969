#pragma once

// Exact integer lattice algebra: Hermite normal form bases with membership
// certificates, and Smith normal form with a column transform for quotient
// group structure.  Deterministic pivoting throughout.

#include "workbench/intx.hpp"

#include <algorithm>
#include <optional>

namespace workbench {

// Row-style Hermite basis of a sublattice of Z^cols: rows sorted by pivot
// column, pivots positive, entries above a pivot reduced into [0, pivot).
class HermiteBasis {
public:
    explicit HermiteBasis(size_t cols) : cols_(cols) {}

    size_t cols() const { return cols_; }
    size_t rank() const { return rows_.size(); }
    const std::vector<IntVec>& rows() const { return rows_; }
    const std::vector<size_t>& pivot_columns() const { return pivots_; }

    // Adds the vector to the lattice; returns true when the lattice grew.
    bool insert(IntVec v) {
        if (v.size() != cols_) throw error("HermiteBasis::insert: wrong length");
        bool grew = false;
        for (size_t c = 0; c < cols_; ++c) {
            if (v[c] == 0) continue;
            size_t r = row_with_pivot(c);
            if (r == npos) {
                if (v[c] < 0)
                    for (Int& x : v) x = -x;
                insert_row(c, std::move(v));
                grew = true;
                break;
            }
            Int a = rows_[r][c], b = v[c];
            if (b % a == 0) {
                Int q = b / a;
                for (size_t j = c; j < cols_; ++j) v[j] -= q * rows_[r][j];
            } else {
                grew = true;  // pivot strictly divides down
                Int s, t;
                Int g = gcdext(a, b, s, t);
                Int ua = a / g, ub = b / g;
                IntVec comb(cols_, Int(0)), rest(cols_, Int(0));
                for (size_t j = c; j < cols_; ++j) {
                    comb[j] = s * rows_[r][j] + t * v[j];
                    rest[j] = ua * v[j] - ub * rows_[r][j];
                }
                rows_[r] = std::move(comb);
                v = std::move(rest);
            }
        }
        if (grew) normalize();
        return grew;
    }

    bool member(const IntVec& v) const { return coordinates(v).has_value(); }

    // Certificate coefficients x with x * rows = v, or nullopt.
    std::optional<IntVec> coordinates(const IntVec& v) const {
        if (v.size() != cols_) throw error("HermiteBasis::coordinates: wrong length");
        IntVec w = v;
        IntVec coef(rows_.size(), Int(0));
        for (size_t r = 0; r < rows_.size(); ++r) {
            size_t c = pivots_[r];
            for (size_t cc = (r == 0 ? 0 : pivots_[r - 1] + 1); cc < c; ++cc)
                if (w[cc] != 0) return std::nullopt;
            if (w[c] == 0) continue;
            if (w[c] % rows_[r][c] != 0) return std::nullopt;
            Int q = w[c] / rows_[r][c];
            coef[r] = q;
            for (size_t j = c; j < cols_; ++j) w[j] -= q * rows_[r][j];
        }
        for (const Int& x : w)
            if (x != 0) return std::nullopt;
        return coef;
    }

    // Index of the sublattice spanned by `other` inside this lattice
    // (product of the SNF diagonal of the coordinate matrix).
    friend bool operator==(const HermiteBasis& a, const HermiteBasis& b) {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }

private:
    static constexpr size_t npos = size_t(-1);

    size_t row_with_pivot(size_t c) const {
        for (size_t r = 0; r < rows_.size(); ++r)
            if (pivots_[r] == c) return r;
        return npos;
    }

    void insert_row(size_t pivot_col, IntVec v) {
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < pivot_col) ++pos;
        rows_.insert(rows_.begin() + long(pos), std::move(v));
        pivots_.insert(pivots_.begin() + long(pos), pivot_col);
    }

    void normalize() {
        // refresh pivot columns (gcd steps may have shifted them)
        std::vector<IntVec> work = std::move(rows_);
        rows_.clear();
        pivots_.clear();
        std::sort(work.begin(), work.end(), [](const IntVec& x, const IntVec& y) {
            size_t px = 0, py = 0;
            while (px < x.size() && x[px] == 0) ++px;
            while (py < y.size() && y[py] == 0) ++py;
            return px < py;
        });
        for (IntVec& v : work) {
            // re-insert without recursion: v is already reduced against earlier pivots
            size_t c = 0;
            while (c < cols_ && v[c] == 0) ++c;
            if (c == cols_) continue;
            if (v[c] < 0)
                for (Int& x : v) x = -x;
            rows_.push_back(std::move(v));
            pivots_.push_back(c);
        }
        // reduce entries above each pivot into [0, pivot)
        for (size_t r = 0; r < rows_.size(); ++r) {
            for (size_t rr = 0; rr < r; ++rr) {
                Int q = fdiv(rows_[rr][pivots_[r]], rows_[r][pivots_[r]]);
                if (q == 0) continue;
                for (size_t j = pivots_[r]; j < cols_; ++j) rows_[rr][j] -= q * rows_[r][j];
            }
        }
    }

    size_t cols_;
    std::vector<IntVec> rows_;
    std::vector<size_t> pivots_;
};

// Integer row kernel {x : x M = 0} of a matrix given by rows, via the Hermite
// form of [M | I]: basis rows supported entirely on the identity block.
inline IntMat integer_row_kernel(const IntMat& rows, size_t cols) {
    size_t k = rows.size();
    HermiteBasis h(cols + k);
    for (size_t i = 0; i < k; ++i) {
        IntVec v(cols + k, Int(0));
        for (size_t j = 0; j < cols; ++j) v[j] = rows[i][j];
        v[cols + i] = 1;
        h.insert(std::move(v));
    }
    IntMat kernel;
    for (size_t r = 0; r < h.rank(); ++r) {
        if (h.pivot_columns()[r] < cols) continue;
        IntVec lambda(k);
        for (size_t j = 0; j < k; ++j) lambda[j] = h.rows()[r][cols + j];
        kernel.push_back(std::move(lambda));
    }
    return kernel;
}

// Smith normal form of an integer matrix: diag(d_1 | d_2 | ...) together with
// the right transform V (unimodular, cols x cols) such that rowspace(A)·V is
// spanned by {d_i e_i}.  Quotients Z^cols / rowspace(A) are read off as
// y |-> (y·V mod d_i).
struct SmithResult {
    std::vector<Int> diag;  // one entry per column; zero means a free factor
    IntMat V;               // cols x cols
};

inline SmithResult smith_normal_form(IntMat a, size_t cols) {
    size_t rows = a.size();
    for (const auto& r : a)
        if (r.size() != cols) throw error("smith_normal_form: ragged matrix");
    IntMat v(cols, IntVec(cols, Int(0)));
    for (size_t i = 0; i < cols; ++i) v[i][i] = 1;

    auto col_swap = [&](size_t c1, size_t c2) {
        if (c1 == c2) return;
        for (size_t i = 0; i < rows; ++i) std::swap(a[i][c1], a[i][c2]);
        std::swap(v[c1], v[c2]);  // row i of v tracks column i of a
    };
    auto col_addmul = [&](size_t dst, size_t src, const Int& q) {
        if (q == 0) return;
        for (size_t i = 0; i < rows; ++i) a[i][dst] += q * a[i][src];
        for (size_t k = 0; k < cols; ++k) v[dst][k] += q * v[src][k];
    };

    size_t t = 0;
    while (t < rows && t < cols) {
        for (;;) {
            // pivot: smallest nonzero |value| in the remaining block, row-major tie break
            size_t pi = size_t(-1), pj = size_t(-1);
            Int best = 0;
            for (size_t i = t; i < rows; ++i)
                for (size_t j = t; j < cols; ++j) {
                    if (a[i][j] == 0) continue;
                    Int mag = abs(a[i][j]);
                    if (pi == size_t(-1) || mag < best) {
                        best = mag;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == size_t(-1)) {
                t = std::min(rows, cols);  // block exhausted
                break;
            }
            std::swap(a[t], a[pi]);
            col_swap(t, pj);
            if (a[t][t] < 0) {
                for (size_t i = 0; i < rows; ++i) a[i][t] = -a[i][t];
                for (size_t k = 0; k < cols; ++k) v[t][k] = -v[t][k];
            }
            // reduce column t (row operations, no transform tracked)
            bool touched = false;
            for (size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Int q = fdiv(a[i][t], a[t][t]);
                for (size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) touched = true;  // remainder becomes a smaller pivot next pass
            }
            // reduce row t (column operations)
            for (size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Int q = fdiv(a[t][j], a[t][t]);
                col_addmul(j, t, -q);
                if (a[t][j] != 0) touched = true;
            }
            if (touched) continue;
            // pivot must divide the whole remaining block for the invariant-factor chain
            bool divides_all = true;
            for (size_t i = t + 1; i < rows && divides_all; ++i)
                for (size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
                        divides_all = false;
                        break;
                    }
            if (!divides_all) continue;
            ++t;
            break;
        }
        if (t == std::min(rows, cols)) break;
    }
    SmithResult res;
    res.diag.assign(cols, Int(0));
    for (size_t i = 0; i < std::min(rows, cols); ++i) {
        Int d = i < a.size() ? a[i][i] : Int(0);
        if (d < 0) d = -d;
        res.diag[i] = d;
    }
    // the working array tracked columns as rows; hand back V itself
    res.V.assign(cols, IntVec(cols, Int(0)));
    for (size_t i = 0; i < cols; ++i)
        for (size_t j = 0; j < cols; ++j) res.V[i][j] = v[j][i];
    return res;
}

// Quotient Z^m / rowspace(A) described by invariant factors and a coordinate map.
struct QuotientStructure {
    std::vector<Int> diag;  // full diagonal, one per coordinate (0 = free)
    IntMat V;               // m x m; class of y is (y·V mod diag) componentwise

    std::vector<Int> invariant_factors() const {
        std::vector<Int> f;
        for (const Int& d : diag)
            if (d == 0 || d > 1) f.push_back(d);
        return f;
    }

    IntVec reduce(const IntVec& y) const {
        size_t m = diag.size();
        IntVec w(m, Int(0));
        for (size_t j = 0; j < m; ++j) {
            Int s = 0;
            for (size_t i = 0; i < m; ++i) s += y[i] * V[i][j];
            if (diag[j] != 0) {
                s %= diag[j];
                if (s < 0) s += diag[j];
            }
            w[j] = s;
        }
        return w;
    }

    bool is_zero_class(const IntVec& y) const {
        IntVec w = reduce(y);
        for (const Int& x : w)
            if (x != 0) return false;
        return true;
    }

    // Additive order of the class of y (throws when infinite).
    Int class_order(const IntVec& y) const {
        IntVec w = reduce(y);
        Int ord = 1;
        for (size_t j = 0; j < diag.size(); ++j) {
            if (w[j] == 0) continue;
            if (diag[j] == 0) throw error("class_order: infinite order");
            Int d = diag[j] / gcd(diag[j], w[j]);
            ord = lcm(ord, d);
        }
        return ord;
    }
};

inline QuotientStructure quotient_structure(const IntMat& sublattice_rows, size_t m) {
    SmithResult s = smith_normal_form(sublattice_rows, m);
    QuotientStructure q;
    q.diag = std::move(s.diag);
    q.V = std::move(s.V);
    return q;
}

}  // namespace workbench
