#pragma once

// Dense F_2 linear algebra on bit-packed rows: echelon forms, nullspaces,
// row-space comparisons and intersections.

#include "workbench/intx.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <vector>

namespace workbench {

struct F2Vec {
    size_t n = 0;
    std::vector<uint64_t> w;

    F2Vec() = default;
    explicit F2Vec(size_t bits) : n(bits), w((bits + 63) / 64, 0) {}

    bool get(size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool v) {
        uint64_t mask = uint64_t(1) << (i & 63);
        if (v)
            w[i >> 6] |= mask;
        else
            w[i >> 6] &= ~mask;
    }
    void flip(size_t i) { w[i >> 6] ^= uint64_t(1) << (i & 63); }
    F2Vec& operator^=(const F2Vec& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
        return *this;
    }
    bool is_zero() const {
        for (uint64_t x : w)
            if (x) return false;
        return true;
    }
    long lowest_set() const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i]) return long(i * 64 + size_t(__builtin_ctzll(w[i])));
        return -1;
    }
    friend bool operator==(const F2Vec& a, const F2Vec& b) { return a.n == b.n && a.w == b.w; }
    friend bool operator<(const F2Vec& a, const F2Vec& b) { return a.w < b.w; }
};

class F2Matrix {
public:
    F2Matrix() = default;
    explicit F2Matrix(size_t cols) : cols_(cols) {}

    size_t cols() const { return cols_; }
    size_t rows() const { return rows_.size(); }
    const std::vector<F2Vec>& data() const { return rows_; }

    void add_row(F2Vec v) {
        if (v.n != cols_) throw error("F2Matrix: wrong row length");
        rows_.push_back(std::move(v));
    }
    void add_row_bits(const std::vector<int>& bits) {
        F2Vec v(cols_);
        for (size_t i = 0; i < bits.size(); ++i)
            if (bits[i] % 2) v.set(i, true);
        rows_.push_back(std::move(v));
    }

    // Reduced row echelon form; returns the rank. Pivot = lowest set bit.
    size_t echelonize() {
        std::vector<F2Vec> basis;   // echelon rows
        std::vector<long> pivots;
        for (F2Vec v : rows_) {
            for (size_t r = 0; r < basis.size(); ++r)
                if (v.get(size_t(pivots[r]))) v ^= basis[r];
            long p = v.lowest_set();
            if (p < 0) continue;
            for (size_t r = 0; r < basis.size(); ++r)
                if (basis[r].get(size_t(p))) basis[r] ^= v;
            basis.push_back(std::move(v));
            pivots.push_back(p);
        }
        // sort by pivot for a canonical form
        std::vector<size_t> order(basis.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return pivots[a] < pivots[b]; });
        std::vector<F2Vec> out;
        for (size_t i : order) out.push_back(std::move(basis[i]));
        rows_ = std::move(out);
        return rows_.size();
    }

    size_t rank() const {
        F2Matrix copy = *this;
        return copy.echelonize();
    }

    bool in_row_space(const F2Vec& v) const {
        F2Matrix copy = *this;
        copy.echelonize();
        F2Vec w = v;
        for (const F2Vec& row : copy.rows_) {
            long p = row.lowest_set();
            if (p >= 0 && w.get(size_t(p))) w ^= row;
        }
        return w.is_zero();
    }

    static bool same_row_space(const F2Matrix& a, const F2Matrix& b) {
        F2Matrix ea = a, eb = b;
        ea.echelonize();
        eb.echelonize();
        return ea.rows_ == eb.rows_;
    }

    // Nullspace basis: all v with M v = 0 (v indexed by columns).
    F2Matrix nullspace() const {
        // transpose-free: echelonize and track pivot columns
        F2Matrix copy = *this;
        copy.echelonize();
        std::vector<long> pivot_col(copy.rows_.size());
        std::vector<char> is_pivot(cols_, 0);
        for (size_t r = 0; r < copy.rows_.size(); ++r) {
            pivot_col[r] = copy.rows_[r].lowest_set();
            is_pivot[size_t(pivot_col[r])] = 1;
        }
        F2Matrix ker(cols_);
        for (size_t free_col = 0; free_col < cols_; ++free_col) {
            if (is_pivot[free_col]) continue;
            F2Vec v(cols_);
            v.set(free_col, true);
            for (size_t r = 0; r < copy.rows_.size(); ++r)
                if (copy.rows_[r].get(free_col)) v.set(size_t(pivot_col[r]), true);
            ker.add_row(std::move(v));
        }
        return ker;
    }

    // Row-space intersection (Zassenhaus).
    static F2Matrix row_space_intersection(const F2Matrix& a, const F2Matrix& b) {
        size_t n = a.cols_;
        if (b.cols_ != n) throw error("row_space_intersection: size mismatch");
        // rows [u | u] for u in a, [v | 0] for v in b; echelonize; rows with
        // zero left half carry the intersection in the right half
        F2Matrix big(2 * n);
        auto widen = [&](const F2Vec& u, bool duplicate) {
            F2Vec w(2 * n);
            for (size_t i = 0; i < n; ++i)
                if (u.get(i)) {
                    w.set(i, true);
                    if (duplicate) w.set(n + i, true);
                }
            return w;
        };
        for (const F2Vec& u : a.rows_) big.add_row(widen(u, true));
        for (const F2Vec& v : b.rows_) big.add_row(widen(v, false));
        big.echelonize();
        F2Matrix out(n);
        for (const F2Vec& w : big.rows_) {
            bool left_zero = true;
            for (size_t i = 0; i < n && left_zero; ++i)
                if (w.get(i)) left_zero = false;
            if (!left_zero) continue;
            F2Vec v(n);
            for (size_t i = 0; i < n; ++i)
                if (w.get(n + i)) v.set(i, true);
            if (!v.is_zero()) out.add_row(std::move(v));
        }
        out.echelonize();
        return out;
    }

    std::string str() const {
        std::ostringstream os;
        for (const auto& r : rows_) {
            for (size_t i = 0; i < cols_; ++i) os << (r.get(i) ? '1' : '0') << (i + 1 < cols_ ? " " : "");
            os << "\n";
        }
        return os.str();
    }

private:
    size_t cols_ = 0;
    std::vector<F2Vec> rows_;
};

}  // namespace workbench
