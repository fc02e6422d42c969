#pragma once

// Character table constructions: explicit families for the unitriangular
// groups U(3,p), U(4,p) and the order-p^5 centralizer family inside U(4,p),
// dual-basis tables for abelian groups, and a Dixon-Schneider class-algebra
// fallback for everything else.

#include "workbench/reps.hpp"

#include <array>
#include <cmath>

namespace workbench {

namespace tables {

inline Cyclotomic zeta_pow(unsigned long table_mod, int p, long e) {
    // zeta_p^e inside Z[zeta_table_mod]
    Cyclotomic z = Cyclotomic::root(static_cast<unsigned long>(p), e);
    if (z.modulus() == table_mod) return z;
    return z.embedded(lcm(Int(table_mod), Int(p)).get_ui());
}

// ---------------------------------------------------------------------------
// U(3,p) family: p^2 linear characters f(a,b) and p-1 characters of degree p.
// `coords` extracts (x, y, z) with x the (1,2)-slot, y the (2,3)-slot and z
// the (1,3)-slot of the distinguished 3x3 block.

using Coords3 = std::function<std::array<int, 3>(const MatrixElement&)>;

inline CharacterTable table_u3_family(GroupRef g, int p, const Coords3& coords) {
    unsigned long n = g->exponent;
    std::vector<ClassFunction> irr;
    std::vector<std::string> labels;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) {
            std::vector<Cyclotomic> vals;
            for (size_t c = 0; c < g->class_count(); ++c) {
                auto [x, y, z] = coords(g->class_rep(c));
                (void)z;
                vals.push_back(zeta_pow(n, p, a * x + b * y));
            }
            irr.emplace_back(g, std::move(vals));
            labels.push_back("f(" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    for (int k = 1; k < p; ++k) {
        std::vector<Cyclotomic> vals;
        for (size_t c = 0; c < g->class_count(); ++c) {
            auto [x, y, z] = coords(g->class_rep(c));
            if (x == 0 && y == 0)
                vals.push_back(Int(p) * zeta_pow(n, p, long(k) * z));
            else
                vals.push_back(Cyclotomic::zero(n));
        }
        irr.emplace_back(g, std::move(vals));
        labels.push_back(p == 2 ? "phi" : "phi(" + std::to_string(k) + ")");
    }
    return CharacterTable(std::move(g), std::move(irr), std::move(labels));
}

// ---------------------------------------------------------------------------
// The order-p^5 centralizer L = {(1 0 a e; 0 1 b d; 0 0 1 c; 0 0 0 1)}.

struct LCoords {
    int a, b, c, d, e;
};

inline LCoords l_coords(const MatrixElement& m) {
    return {m.at(0, 2), m.at(1, 2), m.at(2, 3), m.at(1, 3), m.at(0, 3)};
}

// ell ranges over F_p and infinity, encoded as pairs (n, k): t -> (t, 1),
// infinity -> (1, 0).
inline CharacterTable table_L(GroupRef g, int p) {
    unsigned long mod = g->exponent;
    std::vector<ClassFunction> irr;
    std::vector<std::string> labels;

    auto linear_value = [&](int a, int b, int cc, const LCoords& m) {
        return zeta_pow(mod, p, a * m.a + b * m.b + cc * m.c);
    };

    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int cc = 0; cc < p; ++cc) {
                std::vector<Cyclotomic> vals;
                for (size_t c = 0; c < g->class_count(); ++c)
                    vals.push_back(linear_value(a, b, cc, l_coords(g->class_rep(c))));
                irr.emplace_back(g, std::move(vals));
                labels.push_back("f(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                 std::to_string(cc) + ")");
            }

    // base characters phi_{ell, i}: inflations through the quotients by N(n,k)
    auto base_value = [&](int n, int k, int i, const LCoords& m) -> Cyclotomic {
        if (m.c != 0) return Cyclotomic::zero(mod);
        bool in_line = false;
        for (int y = 0; y < p && !in_line; ++y)
            if (m.a == (n * y) % p && m.b == (k * y) % p) in_line = true;
        if (!in_line) return Cyclotomic::zero(mod);
        long expo;
        if (n % p == 0)
            expo = long(i) * m.e;
        else if (k % p == 0)
            expo = -long(i) * m.d;
        else {
            // e - n k^{-1} d
            int kinv = 1;
            while ((k * kinv) % p != 1) ++kinv;
            expo = long(i) * (m.e - ((n * kinv) % p) * m.d);
        }
        return Int(p) * zeta_pow(mod, p, expo);
    };

    std::vector<std::pair<int, int>> ells;  // (n, k)
    for (int t = 0; t < p; ++t) ells.emplace_back(t, 1);
    ells.emplace_back(1, 0);  // infinity

    std::set<std::string> seen;
    auto encode = [&](const std::vector<Cyclotomic>& vals) {
        std::ostringstream os;
        for (const auto& v : vals) {
            for (const auto& c : v.coeffs()) os << c.get_str() << ",";
            os << ";";
        }
        return os.str();
    };

    for (auto [n, k] : ells) {
        std::string lname = (k == 0) ? "inf" : std::to_string(n);
        for (int i = 1; i < p; ++i) {
            for (int a = 0; a < p; ++a)
                for (int b = 0; b < p; ++b)
                    for (int cc = 0; cc < p; ++cc) {
                        std::vector<Cyclotomic> vals;
                        for (size_t c = 0; c < g->class_count(); ++c) {
                            LCoords m = l_coords(g->class_rep(c));
                            vals.push_back(linear_value(a, b, cc, m) * base_value(n, k, i, m));
                        }
                        if (!seen.insert(encode(vals)).second) continue;
                        std::string label = "phi(" + lname + ";" + std::to_string(i) + ")";
                        if (a || b || cc)
                            label = "f(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                    std::to_string(cc) + ")*" + label;
                        irr.emplace_back(g, std::move(vals));
                        labels.push_back(label);
                    }
        }
    }
    return CharacterTable(std::move(g), std::move(irr), std::move(labels));
}

// ---------------------------------------------------------------------------
// U(4,p).

struct GCoords {
    int u, x, z, v, y, w;
};

inline GCoords g_coords(const MatrixElement& m) {
    return {m.at(0, 1), m.at(0, 2), m.at(0, 3), m.at(1, 2), m.at(1, 3), m.at(2, 3)};
}

inline CharacterTable table_u4(GroupRef g, int p) {
    unsigned long mod = g->exponent;
    std::vector<ClassFunction> irr;
    std::vector<std::string> labels;

    auto linear_value = [&](int a, int b, int cc, const GCoords& m) {
        return zeta_pow(mod, p, a * m.u + b * m.v + cc * m.w);
    };

    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int cc = 0; cc < p; ++cc) {
                std::vector<Cyclotomic> vals;
                for (size_t c = 0; c < g->class_count(); ++c)
                    vals.push_back(linear_value(a, b, cc, g_coords(g->class_rep(c))));
                irr.emplace_back(g, std::move(vals));
                labels.push_back("f(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                 std::to_string(cc) + ")");
            }

    // degree-p characters phi_{i,ell,j}; ell in F_p uses j = infinity,
    // ell = infinity uses j = 0
    auto phi_value = [&](int ell, bool ell_inf, int i, const GCoords& m) -> Cyclotomic {
        if (ell_inf) {
            if (m.w != 0 || m.v != 0) return Cyclotomic::zero(mod);
            return Int(p) * zeta_pow(mod, p, long(i) * m.y);
        }
        if ((ell * m.w) % p != m.u % p || m.v != 0) return Cyclotomic::zero(mod);
        return Int(p) * zeta_pow(mod, p, long(i) * (m.x + ell * m.y));
    };
    // degree-p^2 characters psi_k
    auto psi_value = [&](int k, const GCoords& m) -> Cyclotomic {
        if (m.u == 0 && m.w == 0 && m.v != 0) {
            int vinv = 1;
            while ((m.v * vinv) % p != 1) ++vinv;
            return Int(p) * zeta_pow(mod, p, long(k) * (m.x * m.y * vinv + m.z));
        }
        if (m.u == 0 && m.v == 0 && m.w == 0 && m.x == 0 && m.y == 0)
            return Int(p) * Int(p) * zeta_pow(mod, p, long(k) * m.z);
        return Cyclotomic::zero(mod);
    };

    std::set<std::string> seen;
    auto encode = [&](const std::vector<Cyclotomic>& vals) {
        std::ostringstream os;
        for (const auto& v : vals) {
            for (const auto& c : v.coeffs()) os << c.get_str() << ",";
            os << ";";
        }
        return os.str();
    };
    auto add_orbit = [&](const std::function<Cyclotomic(const GCoords&)>& base,
                         const std::string& base_label) {
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b)
                for (int cc = 0; cc < p; ++cc) {
                    std::vector<Cyclotomic> vals;
                    for (size_t c = 0; c < g->class_count(); ++c) {
                        GCoords m = g_coords(g->class_rep(c));
                        vals.push_back(linear_value(a, b, cc, m) * base(m));
                    }
                    if (!seen.insert(encode(vals)).second) continue;
                    std::string label = base_label;
                    if (a || b || cc)
                        label = "f(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                std::to_string(cc) + ")*" + label;
                    irr.emplace_back(g, std::move(vals));
                    labels.push_back(label);
                }
    };

    for (int ell = 0; ell < p; ++ell)
        for (int i = 1; i < p; ++i)
            add_orbit([&, ell, i](const GCoords& m) { return phi_value(ell, false, i, m); },
                      "phi(" + std::to_string(ell) + ";" + std::to_string(i) + ")");
    for (int i = 1; i < p; ++i)
        add_orbit([&, i](const GCoords& m) { return phi_value(0, true, i, m); },
                  "phi(inf;" + std::to_string(i) + ")");
    for (int k = 1; k < p; ++k)
        add_orbit([&, k](const GCoords& m) { return psi_value(k, m); },
                  "psi(" + std::to_string(k) + ")");

    return CharacterTable(std::move(g), std::move(irr), std::move(labels));
}

// ---------------------------------------------------------------------------
// Abelian tables with dual-basis labels s1, s2, ... for the listed generators.

inline std::vector<std::vector<int>> abelian_exponent_vectors(const GroupRef& g,
                                                              const std::vector<int>& gens,
                                                              const std::vector<int>& orders) {
    const FiniteMatrixGroup& grp = g->group;
    std::vector<std::vector<int>> expo(grp.order());
    std::vector<char> done(grp.order(), 0);
    expo[size_t(grp.identity_index)].assign(gens.size(), 0);
    done[size_t(grp.identity_index)] = 1;
    std::vector<int> frontier{grp.identity_index};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (size_t s = 0; s < gens.size(); ++s) {
                int y = grp.mul_idx(x, gens[s]);
                if (done[size_t(y)]) continue;
                done[size_t(y)] = 1;
                expo[size_t(y)] = expo[size_t(x)];
                expo[size_t(y)][s] = (expo[size_t(y)][s] + 1) % orders[s];
                next.push_back(y);
            }
        frontier = std::move(next);
    }
    for (char d : done)
        if (!d) throw error("abelian table: generators do not generate");
    return expo;
}

inline CharacterTable table_abelian(GroupRef g) {
    const FiniteMatrixGroup& grp = g->group;
    if (!grp.is_abelian()) throw error("table_abelian: group is not abelian");
    std::vector<int> gens = grp.generators;
    if (gens.empty()) gens.push_back(grp.identity_index);
    // drop redundant generators greedily, keeping the given order
    {
        std::vector<int> kept;
        std::set<int> closure{grp.identity_index};
        for (int ge : gens) {
            if (closure.count(ge)) continue;
            kept.push_back(ge);
            std::vector<int> cur(closure.begin(), closure.end());
            for (int x : cur) {
                int y = x;
                for (int k = 1; k < grp.element_order(ge) + 1; ++k) {
                    y = grp.mul_idx(y, ge);
                    closure.insert(y);
                }
            }
        }
        if (closure.size() != grp.order()) throw error("table_abelian: closure mismatch");
        if (!kept.empty()) gens = kept;
    }
    std::vector<int> orders;
    size_t prod = 1;
    for (int ge : gens) {
        orders.push_back(grp.element_order(ge));
        prod *= size_t(orders.back());
    }
    if (prod != grp.order())
        throw error("table_abelian: generators are not independent; use the generic table");
    auto expo = abelian_exponent_vectors(g, gens, orders);

    unsigned long mod = g->exponent;
    std::vector<ClassFunction> irr;
    std::vector<std::string> labels;
    std::vector<int> t(gens.size(), 0);
    for (;;) {
        std::vector<Cyclotomic> vals;
        for (size_t c = 0; c < g->class_count(); ++c) {
            int rep = g->conj.classes[c].representative;
            Cyclotomic v = Cyclotomic::one(mod);
            for (size_t s = 0; s < gens.size(); ++s) {
                Cyclotomic z = Cyclotomic::root(static_cast<unsigned long>(orders[s]),
                                                long(t[s]) * expo[size_t(rep)][s]);
                v = v * z.embedded(lcm(Int(mod), Int(orders[s])).get_ui());
            }
            vals.push_back(reduce_to_field(v, mod));
        }
        std::ostringstream label;
        bool first = true;
        for (size_t s = 0; s < gens.size(); ++s) {
            if (t[s] == 0) continue;
            if (!first) label << "*";
            first = false;
            label << "s" << (s + 1);
            if (t[s] > 1) label << "^" << t[s];
        }
        if (first) label << "1";
        irr.emplace_back(g, std::move(vals));
        labels.push_back(label.str());
        // increment the exponent tuple
        size_t s = 0;
        while (s < t.size()) {
            if (++t[s] < orders[s]) break;
            t[s] = 0;
            ++s;
        }
        if (s == t.size()) break;
    }
    return CharacterTable(std::move(g), std::move(irr), std::move(labels));
}

// ---------------------------------------------------------------------------
// Dixon-Schneider: simultaneous diagonalisation of the class-algebra
// multiplication matrices over a prime field F_q with q = 1 mod exp(G),
// q > 2 sqrt(|G|), then exact lifting by discrete Fourier inversion.

namespace dixon {

inline long inv_mod(long a, long q) {
    long t = 0, newt = 1, r = q, newr = ((a % q) + q) % q;
    while (newr != 0) {
        long quo = r / newr;
        long tmp = t - quo * newt;
        t = newt;
        newt = tmp;
        tmp = r - quo * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw error("inv_mod: not invertible");
    return ((t % q) + q) % q;
}

using Vec = std::vector<long>;
using Mat = std::vector<Vec>;

// solve B x = y with B an m x d matrix of full column rank over F_q
inline Vec solve_full_rank(const Mat& b, const Vec& y, long q) {
    size_t m = b.size(), d = b.empty() ? 0 : b[0].size();
    Mat aug(m, Vec(d + 1, 0));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < d; ++j) aug[i][j] = b[i][j];
        aug[i][d] = y[i];
    }
    size_t row = 0;
    std::vector<size_t> pivot_rows;
    for (size_t col = 0; col < d && row < m; ++col) {
        size_t pr = row;
        while (pr < m && aug[pr][col] == 0) ++pr;
        if (pr == m) throw error("solve_full_rank: rank deficiency");
        std::swap(aug[row], aug[pr]);
        long inv = inv_mod(aug[row][col], q);
        for (size_t j = col; j <= d; ++j) aug[row][j] = aug[row][j] * inv % q;
        for (size_t r = 0; r < m; ++r) {
            if (r == row || aug[r][col] == 0) continue;
            long f = aug[r][col];
            for (size_t j = col; j <= d; ++j)
                aug[r][j] = ((aug[r][j] - f * aug[row][j]) % q + q) % q;
        }
        pivot_rows.push_back(row);
        ++row;
    }
    for (size_t r = row; r < m; ++r)
        if (aug[r][d] != 0) throw error("solve_full_rank: inconsistent system");
    Vec x(d, 0);
    for (size_t col = 0; col < d; ++col) x[col] = aug[col][d];
    return x;
}

// kernel basis of a d x d matrix over F_q
inline Mat kernel_basis(Mat a, long q) {
    size_t d = a.size();
    std::vector<long> pivot_col_of_row;
    std::vector<char> is_pivot(d, 0);
    size_t row = 0;
    for (size_t col = 0; col < d && row < d; ++col) {
        size_t pr = row;
        while (pr < d && a[pr][col] == 0) ++pr;
        if (pr == d) continue;
        std::swap(a[row], a[pr]);
        long inv = inv_mod(a[row][col], q);
        for (size_t j = 0; j < d; ++j) a[row][j] = a[row][j] * inv % q;
        for (size_t r = 0; r < d; ++r) {
            if (r == row || a[r][col] == 0) continue;
            long f = a[r][col];
            for (size_t j = 0; j < d; ++j) a[r][j] = ((a[r][j] - f * a[row][j]) % q + q) % q;
        }
        pivot_col_of_row.push_back(long(col));
        is_pivot[col] = 1;
        ++row;
    }
    Mat ker;
    for (size_t free_col = 0; free_col < d; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(d, 0);
        v[free_col] = 1;
        for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
            long pc = pivot_col_of_row[r];
            v[size_t(pc)] = ((-a[r][free_col]) % q + q) % q;
        }
        ker.push_back(v);
    }
    return ker;
}

}  // namespace dixon

inline CharacterTable table_generic(GroupRef g) {
    const FiniteMatrixGroup& grp = g->group;
    if (grp.order() > 1000) throw error("table_generic: group order above supported bound");
    size_t r = g->class_count();
    unsigned long e = g->exponent;
    size_t n = grp.order();

    // prime q = 1 mod e, q > 2 sqrt(n)
    long q = long(e) + 1;
    while (!is_prime_ul(static_cast<unsigned long>(q)) || double(q) <= 2.0 * std::sqrt(double(n)))
        q += long(e);

    // primitive e-th root of unity in F_q
    long omega = 0;
    for (long cand = 2; cand < q; ++cand) {
        long x = 1;
        bool primitive = true;
        for (unsigned long k = 1; k < e; ++k) {
            x = x * cand % q;
            if (x == 1) {
                primitive = false;
                break;
            }
        }
        x = x * cand % q;
        if (primitive && x == 1) {
            omega = cand;
            break;
        }
    }
    if (e == 1) omega = 1;
    if (omega == 0) throw error("table_generic: no primitive root found");

    // class-algebra structure constants a[i][j][k]
    std::vector<std::vector<std::vector<long>>> a(
        r, std::vector<std::vector<long>>(r, std::vector<long>(r, 0)));
    for (size_t i = 0; i < r; ++i)
        for (int x : g->conj.classes[i].members)
            for (size_t k = 0; k < r; ++k) {
                int y = grp.mul_idx(grp.inv_idx(x), g->conj.classes[k].representative);
                a[i][size_t(g->conj.class_of[size_t(y)])][k] += 1;
            }

    // split the class-function space into common eigenspaces
    using dixon::Mat;
    using dixon::Vec;
    std::vector<Mat> subspaces;  // bases as columns: subspace[s][row][col]
    {
        Mat full(r, Vec(r, 0));
        for (size_t i = 0; i < r; ++i) full[i][i] = 1;
        subspaces.push_back(full);
    }
    for (size_t i = 1; i < r; ++i) {
        // multiplication-by-class-i matrix: M[k][j] = a[i][j][k]
        Mat m(r, Vec(r, 0));
        for (size_t j = 0; j < r; ++j)
            for (size_t k = 0; k < r; ++k) m[k][j] = a[i][j][k] % q;
        std::vector<Mat> next;
        for (const Mat& basis : subspaces) {
            size_t d = basis[0].size();
            if (d == 1) {
                next.push_back(basis);
                continue;
            }
            // restriction A with M * basis = basis * A
            Mat mb(r, Vec(d, 0));
            for (size_t row = 0; row < r; ++row)
                for (size_t col = 0; col < d; ++col) {
                    long s = 0;
                    for (size_t k = 0; k < r; ++k) s = (s + m[row][k] * basis[k][col]) % q;
                    mb[row][col] = s;
                }
            Mat restr(d, Vec(d, 0));
            for (size_t col = 0; col < d; ++col) {
                Vec y(r);
                for (size_t row = 0; row < r; ++row) y[row] = mb[row][col];
                Vec x = dixon::solve_full_rank(basis, y, q);
                for (size_t rr = 0; rr < d; ++rr) restr[rr][col] = x[rr];
            }
            // split by eigenvalues; the class algebra splits completely over F_q
            size_t found = 0;
            for (long lam = 0; lam < q && found < d; ++lam) {
                Mat shifted = restr;
                for (size_t t = 0; t < d; ++t) shifted[t][t] = ((shifted[t][t] - lam) % q + q) % q;
                Mat ker = dixon::kernel_basis(shifted, q);
                if (ker.empty()) continue;
                // subspace basis columns: basis * ker^T
                Mat sub(r, Vec(ker.size(), 0));
                for (size_t row = 0; row < r; ++row)
                    for (size_t kc = 0; kc < ker.size(); ++kc) {
                        long s = 0;
                        for (size_t t = 0; t < d; ++t) s = (s + basis[row][t] * ker[kc][t]) % q;
                        sub[row][kc] = s;
                    }
                next.push_back(sub);
                found += ker.size();
            }
            if (found != d) throw error("table_generic: eigen splitting failed");
        }
        subspaces = std::move(next);
        bool all_one = true;
        for (const Mat& s : subspaces)
            if (s[0].size() != 1) all_one = false;
        if (all_one) break;
    }
    for (const Mat& s : subspaces)
        if (s[0].size() != 1) throw error("table_generic: could not separate characters");
    if (subspaces.size() != r) throw error("table_generic: wrong eigenspace count");

    size_t id_class = size_t(g->conj.class_of[size_t(grp.identity_index)]);
    // inverse-class map
    std::vector<size_t> inv_class(r);
    for (size_t c = 0; c < r; ++c) {
        int rep = g->conj.classes[c].representative;
        inv_class[c] = size_t(g->conj.class_of[size_t(grp.inv_idx(rep))]);
    }

    std::vector<ClassFunction> irr;
    std::vector<std::string> labels;
    for (const Mat& s : subspaces) {
        // the eigenvector is proportional to the central idempotent coordinates
        // epsilon_j = (chi(1)/|G|) chi(g_j^{-1}); normalised at the identity:
        // v_j = chi(g_j^{-1}) / chi(1)
        Vec v(r);
        for (size_t row = 0; row < r; ++row) v[row] = s[row][0];
        if (v[id_class] == 0) throw error("table_generic: eigenvector vanishes at the identity");
        long norm = dixon::inv_mod(v[id_class], q);
        for (size_t row = 0; row < r; ++row) v[row] = v[row] * norm % q;
        // orthogonality: d^2 sum_j |C_j| v_j v_{j*} = |G| (mod q), d dividing |G|
        long acc = 0;
        for (size_t j = 0; j < r; ++j) {
            long term = v[j] * v[inv_class[j]] % q;
            term = term * (long(g->conj.classes[j].size()) % q) % q;
            acc = (acc + term) % q;
        }
        long rhs = long(n % static_cast<unsigned long>(q)) * dixon::inv_mod(acc, q) % q;
        long deg = 0;
        for (long d = 1; d * d <= long(n); ++d) {
            if (long(n) % d != 0) continue;
            if (d * d % q == rhs) {
                deg = d;
                break;
            }
        }
        if (deg == 0) throw error("table_generic: degree recovery failed");

        // chi(C_j) = deg * v_{j*} in F_q; lift by Fourier inversion over the
        // power map: mult_m(j) = (1/e) sum_k chi(C_{j^k}) omega^{-mk}
        Vec chi_q(r);
        for (size_t j = 0; j < r; ++j) chi_q[j] = deg % q * v[inv_class[j]] % q;
        long einv = dixon::inv_mod(long(e) % q, q);
        long omega_inv = dixon::inv_mod(omega, q);
        std::vector<Cyclotomic> vals(r);
        for (size_t j = 0; j < r; ++j) {
            Cyclotomic val = Cyclotomic::zero(e);
            for (unsigned long mth = 0; mth < e; ++mth) {
                long s2 = 0, w = 1;  // w = omega^{-m k}
                long w_step = 1;
                for (unsigned long k2 = 0; k2 < mth; ++k2) w_step = w_step * omega_inv % q;
                for (unsigned long k = 0; k < e; ++k) {
                    s2 = (s2 + chi_q[size_t(g->conj.power_map[j][k])] * w) % q;
                    w = w * w_step % q;
                }
                long mult = s2 * einv % q;
                if (mult > deg) throw error("table_generic: lifted multiplicity out of range");
                if (mult != 0) val += Int(mult) * Cyclotomic::root(e, long(mth));
            }
            vals[j] = val;
        }
        irr.emplace_back(g, std::move(vals));
        labels.push_back("?");
    }
    return CharacterTable(std::move(g), std::move(irr), std::move(labels));
}

}  // namespace tables

// ---------------------------------------------------------------------------
// Dispatch: explicit constructions when the group shape is recognized,
// Dixon-Schneider otherwise.

namespace detail {

inline bool supported_on(const FiniteMatrixGroup& g, const std::vector<std::pair<int, int>>& slots) {
    for (const auto& m : g.elements)
        for (int i = 0; i < g.n; ++i)
            for (int j = i + 1; j < g.n; ++j) {
                if (m.at(i, j) == 0) continue;
                bool ok = false;
                for (auto [si, sj] : slots)
                    if (si == i && sj == j) ok = true;
                if (!ok) return false;
            }
    return true;
}

}  // namespace detail

inline CharacterTable character_table(GroupRef g) {
    const FiniteMatrixGroup& grp = g->group;
    size_t n = grp.order();
    int p = grp.p;
    auto pk = [&](int k) { return int_pow(Int(p), static_cast<unsigned long>(k)); };

    if (grp.is_abelian()) {
        try {
            return tables::table_abelian(g);
        } catch (const error&) {
            return tables::table_generic(g);
        }
    }
    if (grp.n == 3 && Int(static_cast<unsigned long>(n)) == pk(3))
        return tables::table_u3_family(g, p, [](const MatrixElement& m) {
            return std::array<int, 3>{m.at(0, 1), m.at(1, 2), m.at(0, 2)};
        });
    if (grp.n == 4 && Int(static_cast<unsigned long>(n)) == pk(3)) {
        // block copies of U(3,p) inside U(4,p)
        if (detail::supported_on(grp, {{1, 2}, {2, 3}, {1, 3}}))  // rows 2..4
            return tables::table_u3_family(g, p, [](const MatrixElement& m) {
                return std::array<int, 3>{m.at(1, 2), m.at(2, 3), m.at(1, 3)};
            });
        if (detail::supported_on(grp, {{0, 1}, {1, 2}, {0, 2}}))  // rows 1..3
            return tables::table_u3_family(g, p, [](const MatrixElement& m) {
                return std::array<int, 3>{m.at(0, 1), m.at(1, 2), m.at(0, 2)};
            });
        if (detail::supported_on(grp, {{0, 2}, {2, 3}, {0, 3}}))  // rows 1,3,4
            return tables::table_u3_family(g, p, [](const MatrixElement& m) {
                return std::array<int, 3>{m.at(0, 2), m.at(2, 3), m.at(0, 3)};
            });
        if (detail::supported_on(grp, {{0, 1}, {1, 3}, {0, 3}}))  // rows 1,2,4
            return tables::table_u3_family(g, p, [](const MatrixElement& m) {
                return std::array<int, 3>{m.at(0, 1), m.at(1, 3), m.at(0, 3)};
            });
    }
    if (grp.n == 4 && Int(static_cast<unsigned long>(n)) == pk(5) &&
        detail::supported_on(grp, {{0, 2}, {1, 2}, {2, 3}, {1, 3}, {0, 3}}))
        return tables::table_L(g, p);
    if (grp.n == 4 && Int(static_cast<unsigned long>(n)) == pk(6)) return tables::table_u4(g, p);
    return tables::table_generic(g);
}

// Common label aliases for the p = 2 tables.
inline int resolve_label(const CharacterTable& t, const std::string& name) {
    int idx = t.index_of_label(name);
    if (idx >= 0) return idx;
    static const std::map<std::string, std::string> aliases = {
        {"phi0", "phi(0;1)"}, {"phi1", "phi(1;1)"},   {"phiinf", "phi(inf;1)"},
        {"psi", "psi(1)"},    {"A", "phi(0;1)"},      {"B", "phi(1;1)"},
        {"C", "phi(inf;1)"},  {"f10", "f(1,0)"},      {"f01", "f(0,1)"},
        {"f11", "f(1,1)"},    {"1", "f(0,0)"},
    };
    auto it = aliases.find(name);
    if (it != aliases.end()) {
        idx = t.index_of_label(it->second);
        if (idx >= 0) return idx;
    }
    throw error("no irreducible labelled '" + name + "'");
}

inline VirtualRep rep_by_label(const TableRef& t, const std::string& name) {
    return VirtualRep::basis(t, size_t(resolve_label(*t, name)));
}

// ---------------------------------------------------------------------------
// Explicit matrix models over Z[zeta], used as an independent oracle for
// exterior powers (trace of the k-th exterior power vs the Newton route).

using CycMatrix = std::vector<std::vector<Cyclotomic>>;

inline CycMatrix cyc_identity(size_t n, unsigned long mod) {
    CycMatrix m(n, std::vector<Cyclotomic>(n, Cyclotomic::zero(mod)));
    for (size_t i = 0; i < n; ++i) m[i][i] = Cyclotomic::one(mod);
    return m;
}

inline CycMatrix cyc_mul(const CycMatrix& a, const CycMatrix& b) {
    size_t n = a.size();
    CycMatrix r(n, std::vector<Cyclotomic>(n, Cyclotomic::zero(a[0][0].modulus())));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) {
                if (b[k][j].is_zero()) continue;
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    return r;
}

inline Cyclotomic cyc_trace(const CycMatrix& m) {
    Cyclotomic t = Cyclotomic::zero(m[0][0].modulus());
    for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

inline Cyclotomic cyc_det(const CycMatrix& m) {
    size_t n = m.size();
    if (n == 0) return Cyclotomic(Int(1));
    if (n == 1) return m[0][0];
    Cyclotomic acc = Cyclotomic::zero(m[0][0].modulus());
    std::vector<size_t> rows(n - 1);
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        CycMatrix minor(n - 1, std::vector<Cyclotomic>(n - 1, Cyclotomic::zero(m[0][0].modulus())));
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        }
        Cyclotomic term = m[0][j] * cyc_det(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

// trace of the k-th exterior power: sum of principal k x k minors
inline Cyclotomic exterior_trace(const CycMatrix& m, int k) {
    size_t n = m.size();
    if (k == 0) return Cyclotomic(Int(1)).embedded(m[0][0].modulus());
    Cyclotomic acc = Cyclotomic::zero(m[0][0].modulus());
    std::vector<size_t> idx(static_cast<size_t>(k), 0);
    std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t start) {
        if (pos == size_t(k)) {
            CycMatrix sub{size_t(k), std::vector<Cyclotomic>(size_t(k))};
            for (size_t i = 0; i < size_t(k); ++i)
                for (size_t j = 0; j < size_t(k); ++j) sub[i][j] = m[idx[i]][idx[j]];
            acc += cyc_det(sub);
            return;
        }
        for (size_t i = start; i < n; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
    return acc;
}

// Image of every group element under the homomorphism determined by the given
// generator images, built by BFS; multiplicativity must be verified by the
// caller when the images are not known to satisfy the relations.
inline std::vector<CycMatrix> matrix_model(const GroupRef& g,
                                           const std::vector<std::pair<MatrixElement, CycMatrix>>&
                                               generator_images) {
    const FiniteMatrixGroup& grp = g->group;
    size_t dim = generator_images.at(0).second.size();
    unsigned long mod = generator_images.at(0).second[0][0].modulus();
    std::vector<CycMatrix> image(grp.order());
    std::vector<char> have(grp.order(), 0);
    image[size_t(grp.identity_index)] = cyc_identity(dim, mod);
    have[size_t(grp.identity_index)] = 1;
    std::vector<int> queue{grp.identity_index};
    std::vector<std::pair<int, const CycMatrix*>> gens;
    for (const auto& [el, mat] : generator_images) {
        int idx = grp.index_of(el);
        if (idx < 0) throw error("matrix_model: generator not in the group");
        gens.emplace_back(idx, &mat);
    }
    for (size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (auto& [gi, mat] : gens) {
            int y = grp.mul_idx(x, gi);
            if (have[size_t(y)]) continue;
            have[size_t(y)] = 1;
            image[size_t(y)] = cyc_mul(image[size_t(x)], *mat);
            queue.push_back(y);
        }
    }
    for (char h : have)
        if (!h) throw error("matrix_model: images given for a non-generating set");
    return image;
}

// phi_k model for U(3,p): E12 -> p-cycle, E23 -> diag(zeta_p^{-ik}), which
// makes the central element E13 act as zeta_p^k and matches the table labels.
inline std::vector<std::pair<MatrixElement, CycMatrix>> phi_generator_images(int p, int k,
                                                                             unsigned long mod) {
    CycMatrix shift(size_t(p), std::vector<Cyclotomic>(size_t(p), Cyclotomic::zero(mod)));
    for (int j = 0; j < p; ++j) shift[size_t((j + 1) % p)][size_t(j)] = Cyclotomic::one(mod);
    CycMatrix diag(size_t(p), std::vector<Cyclotomic>(size_t(p), Cyclotomic::zero(mod)));
    for (int i = 0; i < p; ++i)
        diag[size_t(i)][size_t(i)] = tables::zeta_pow(mod, p, -long(i) * k);
    return {{elementary_e(3, p, 1, 2), shift}, {elementary_e(3, p, 2, 3), diag}};
}

// psi_k model for U(4,p): basis indexed by (i,j) lexicographically;
// E12 shifts j, E23 is diag(zeta^{ijk}), E34 shifts i.
inline std::vector<std::pair<MatrixElement, CycMatrix>> psi_generator_images(int p, int k,
                                                                             unsigned long mod) {
    size_t d = size_t(p) * size_t(p);
    auto at = [&](int i, int j) { return size_t(i) * size_t(p) + size_t(j); };
    CycMatrix e12(d, std::vector<Cyclotomic>(d, Cyclotomic::zero(mod)));
    CycMatrix e23(d, std::vector<Cyclotomic>(d, Cyclotomic::zero(mod)));
    CycMatrix e34(d, std::vector<Cyclotomic>(d, Cyclotomic::zero(mod)));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            e12[at(i, (j + 1) % p)][at(i, j)] = Cyclotomic::one(mod);
            e23[at(i, j)][at(i, j)] = tables::zeta_pow(mod, p, long(i) * j * k);
            e34[at((i + 1) % p, j)][at(i, j)] = Cyclotomic::one(mod);
        }
    return {{elementary_e(4, p, 1, 2), e12},
            {elementary_e(4, p, 2, 3), e23},
            {elementary_e(4, p, 3, 4), e34}};
}

// Minimum total degree over sets of irreducibles whose kernels intersect
// trivially (a faithful virtual "detecting" family always exists).
inline int min_faithful_degree(const CharacterTable& t) {
    size_t r = t.size();
    if (r > 25) throw error("min_faithful_degree: too many irreducibles");
    size_t id_class = size_t(t.group()->class_of_element(t.group()->group.identity_index));
    std::vector<uint64_t> kernels(r, 0);
    for (size_t i = 0; i < r; ++i) {
        auto ker = t.irreducible(i).kernel_classes();
        uint64_t mask = 0;
        for (size_t c = 0; c < ker.size(); ++c)
            if (ker[c]) mask |= (uint64_t(1) << c);
        kernels[i] = mask;
    }
    uint64_t trivial = uint64_t(1) << id_class;
    int best = 0;
    for (size_t i = 0; i < r; ++i) best += int(to_long(t.degree(i)));
    std::function<void(size_t, uint64_t, int)> rec = [&](size_t i, uint64_t mask, int deg) {
        if (deg >= best) return;
        if (mask == trivial) {
            best = deg;
            return;
        }
        if (i == r) return;
        rec(i + 1, mask, deg);
        rec(i + 1, mask & kernels[i], deg + int(to_long(t.degree(i))));
    };
    rec(0, ~uint64_t(0) >> (64 - t.group()->class_count()), 0);
    return best;
}

}  // namespace workbench
