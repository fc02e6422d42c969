#pragma once

// The verification suite: every pinned number and identity, one report line
// each.  Identities printed with broken index conventions in the source
// catalogs are verified against the honestly computed decomposition and the
// difference is reported as an INFO discrepancy rather than silently skipped.

#include "workbench/pipeline.hpp"

namespace workbench {

namespace verify_detail {

using pipeline_detail::push;
using pipeline_detail::show_multiset;
using pipeline_detail::invariants_of;

struct CatalogTally {
    int verified = 0;
    std::vector<std::string> failures;
    std::vector<std::pair<std::string, std::string>> flagged;  // id -> computed form

    void check(const std::string& id, const VirtualRep& lhs, const VirtualRep& rhs) {
        if (lhs == rhs)
            ++verified;
        else
            failures.push_back(id);
    }
    // identities whose printed indexing is inconsistent: verified against the
    // computed decomposition, recorded as a discrepancy when they differ
    void check_or_flag(const std::string& id, const VirtualRep& lhs, const VirtualRep& printed) {
        if (lhs == printed) {
            ++verified;
        } else {
            flagged.emplace_back(id, lhs.str());
        }
    }
};

inline VirtualRep f_rep(const TableRef& t, std::vector<int> e) {
    std::string label = "f(";
    for (size_t i = 0; i < e.size(); ++i) label += (i ? "," : "") + std::to_string(e[i]);
    label += ")";
    return rep_by_label(t, label);
}

// --- decomposition catalogs ---------------------------------------------------

inline void catalog_u3(CatalogTally& tally, const TableRef& t, int p) {
    auto phi = [&](int i) {
        int ii = ((i % p) + p) % p;
        return rep_by_label(t, p == 2 ? std::string("phi")
                                      : "phi(" + std::to_string(ii) + ")");
    };
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int a2 = 0; a2 < p; ++a2)
                for (int b2 = 0; b2 < p; ++b2)
                    tally.check("u3-f-product", f_rep(t, {a, b}) * f_rep(t, {a2, b2}),
                                f_rep(t, {(a + a2) % p, (b + b2) % p}));
    for (int i = 1; i < p; ++i)
        for (int j = 1; j < p; ++j) {
            if ((i + j) % p != 0) {
                tally.check("u3-phi-product", phi(i) * phi(j), Int(p) * phi(i + j));
            } else {
                VirtualRep all = VirtualRep::zero(t);
                for (int a = 0; a < p; ++a)
                    for (int b = 0; b < p; ++b) all = all + f_rep(t, {a, b});
                tally.check("u3-phi-dual-product", phi(i) * phi(j), all);
            }
        }
    for (int i = 1; i < p; ++i) {
        for (int k = 1; k < p; ++k) {
            Int coeff = divide_exact(binomial(static_cast<unsigned long>(p),
                                              static_cast<unsigned long>(k)),
                                     Int(p));
            tally.check("u3-lambda", phi(i).exterior_power(k), coeff * phi(k * i));
        }
        if (p == 2)
            tally.check("u3-lambda-top", phi(i).exterior_power(2), f_rep(t, {1, 1}));
        else
            tally.check("u3-lambda-top", phi(i).exterior_power(p), f_rep(t, {0, 0}));
    }
}

inline void catalog_L(CatalogTally& tally, const TableRef& t, int p) {
    // ell parametrized canonically: finite t -> (t, 1), infinity -> (1, 0)
    auto phi = [&](int n, int k, int i) {
        int ii = ((i % p) + p) % p;
        std::string lname = (k % p == 0) ? "inf" : std::to_string(((n % p) + p) % p);
        return rep_by_label(t, "phi(" + lname + ";" + std::to_string(ii) + ")");
    };
    auto f3 = [&](int a, int b, int c) {
        return f_rep(t, {((a % p) + p) % p, ((b % p) + p) % p, ((c % p) + p) % p});
    };
    std::vector<std::pair<int, int>> ells;
    for (int n = 0; n < p; ++n) ells.emplace_back(n, 1);
    ells.emplace_back(1, 0);
    for (auto [n, k] : ells)
        for (int i = 1; i < p; ++i) {
            // phi (x) phi with the same ell
            for (int i2 = 1; i2 < p; ++i2) {
                if ((i + i2) % p != 0) {
                    tally.check("L-phi-same-ell", phi(n, k, i) * phi(n, k, i2),
                                Int(p) * phi(n, k, i + i2));
                } else {
                    // sum over the characters trivial on the inflation kernel:
                    // f_{(kx, -nx, y)} (the printed form drops the sign, which
                    // only shows at odd p)
                    VirtualRep sum = VirtualRep::zero(t);
                    for (int x = 0; x < p; ++x)
                        for (int y = 0; y < p; ++y) sum = sum + f3(k * x, -n * x, y);
                    tally.check("L-phi-square-sum", phi(n, k, i) * phi(n, k, i2), sum);
                }
            }
            // exterior powers
            for (int j = 1; j < p; ++j) {
                Int coeff = divide_exact(binomial(static_cast<unsigned long>(p),
                                                  static_cast<unsigned long>(j)),
                                         Int(p));
                tally.check("L-lambda", phi(n, k, i).exterior_power(j), coeff * phi(n, k, j * i));
            }
            if (p == 2)
                tally.check("L-lambda-top", phi(n, k, i).exterior_power(p), f3(k, n, 1));
            else
                tally.check("L-lambda-top", phi(n, k, i).exterior_power(p), f3(0, 0, 0));
        }
    // cross-ell products as printed, verified or flagged (k = 1 throughout)
    for (int n = 0; n < p; ++n)
        for (int n2 = 0; n2 < p; ++n2) {
            if (n == n2) continue;
            for (int i = 1; i < p; ++i)
                for (int i2 = 1; i2 < p; ++i2) {
                    VirtualRep lhs = phi(n, 1, i) * phi(n2, 1, i2);
                    if ((i + i2) % p != 0) {
                        // sum_x f_{(k(i+i')x, (n+n')x, 0)} phi_{(n+n')(i+i')^{-1}, i+i'}
                        int isum = (i + i2) % p;
                        int iinv = 1;
                        while ((isum * iinv) % p != 1) ++iinv;
                        VirtualRep rhs = VirtualRep::zero(t);
                        for (int x = 0; x < p; ++x)
                            rhs = rhs + f3(isum * x, (n + n2) * x, 0) *
                                            phi((n + n2) * iinv, 1, isum);
                        tally.check_or_flag("L-phi-cross-ell", lhs, rhs);
                    } else {
                        // sum_x f_{(0,x,0)} phi_{inf, i + n + i' n'}
                        int expo = ((i + n + i2 * n2) % p + p) % p;
                        if (expo == 0) {
                            tally.flagged.emplace_back("L-phi-cross-dual(index undefined)",
                                                       lhs.str());
                            continue;
                        }
                        VirtualRep rhs = VirtualRep::zero(t);
                        for (int x = 0; x < p; ++x) rhs = rhs + f3(0, x, 0) * phi(1, 0, expo);
                        tally.check_or_flag("L-phi-cross-dual", lhs, rhs);
                    }
                }
        }
    // phi_{n,i} (x) phi_{inf,i'} = sum_x f_{(ix,(n+i')x,0)} phi_{(n+i')/i, i}
    for (int n = 0; n < p; ++n)
        for (int i = 1; i < p; ++i)
            for (int i2 = 1; i2 < p; ++i2) {
                VirtualRep lhs = phi(n, 1, i) * phi(1, 0, i2);
                int iinv = 1;
                while ((i * iinv) % p != 1) ++iinv;
                VirtualRep rhs = VirtualRep::zero(t);
                for (int x = 0; x < p; ++x)
                    rhs = rhs + f3(i * x, (n + i2) * x, 0) * phi((n + i2) * iinv, 1, i);
                tally.check_or_flag("L-phi-times-inf", lhs, rhs);
            }
    // the two-member-orbit products at p = 2
    if (p == 2) {
        auto orbit_sum = [&](const VirtualRep& base) {
            std::set<IntVec> members;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    for (int c = 0; c < 2; ++c) members.insert((f3(a, b, c) * base).coords());
            VirtualRep sum = VirtualRep::zero(t);
            for (const auto& cv : members) sum = sum + VirtualRep(t, cv);
            return sum;
        };
        tally.check("L-orbit-product-AB", phi(0, 1, 1) * phi(1, 1, 1), orbit_sum(phi(1, 0, 1)));
        tally.check("L-orbit-product-AC", phi(0, 1, 1) * phi(1, 0, 1), orbit_sum(phi(1, 1, 1)));
        tally.check("L-orbit-product-BC", phi(1, 1, 1) * phi(1, 0, 1), orbit_sum(phi(0, 1, 1)));
    }
}

inline void catalog_G(CatalogTally& tally, const TableRef& t) {
    // p = 2 only; the table labels phi(l;i) with l in {0,1,inf} and psi(k)
    VirtualRep phi0 = rep_by_label(t, "phi0"), phi1 = rep_by_label(t, "phi1"),
               phiinf = rep_by_label(t, "phiinf"), psi = rep_by_label(t, "psi");
    auto f3 = [&](int a, int b, int c) { return f_rep(t, {a, b, c}); };
    // squares of the degree-2 generators: phi^2 = sum f_{(ka, b, -na)}
    VirtualRep exp0 = VirtualRep::zero(t), exp1 = VirtualRep::zero(t),
               expinf = VirtualRep::zero(t);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            exp0 = exp0 + f3(a, b, 0);     // (n,k) = (0,1)
            exp1 = exp1 + f3(a, b, a);     // (n,k) = (1,1)
            expinf = expinf + f3(0, b, a); // (n,k) = (1,0)
        }
    tally.check("G-phi0-square", phi0 * phi0, exp0);
    tally.check("G-phi1-square", phi1 * phi1, exp1);
    tally.check("G-phiinf-square", phiinf * phiinf, expinf);
    // pairwise products hit the two-element orbit of the third
    tally.check("G-phi-product-01", phi0 * phi1, phiinf + f3(1, 0, 0) * phiinf);
    tally.check("G-phi-product-0inf", phi0 * phiinf, phi1 + f3(0, 0, 1) * phi1);
    tally.check("G-phi-product-1inf", phi1 * phiinf, phi0 + f3(0, 0, 1) * phi0);
    // psi times degree-2 generators
    for (const VirtualRep* f : {&phi0, &phi1, &phiinf})
        tally.check("G-phi-psi", (*f) * psi, psi + f3(0, 1, 0) * psi);
    // exterior powers
    tally.check("G-lambda2-phi0", phi0.exterior_power(2), f3(1, 1, 0));
    tally.check("G-lambda2-phi1", phi1.exterior_power(2), f3(1, 1, 1));
    tally.check("G-lambda2-phiinf", phiinf.exterior_power(2), f3(0, 1, 1));
    tally.check("G-lambda2-psi", psi.exterior_power(2),
                f3(0, 0, 1) * phi0 + f3(0, 0, 1) * phi1 + f3(1, 0, 0) * phiinf);
    tally.check("G-lambda3-psi", psi.exterior_power(3), f3(0, 1, 0) * psi);
    tally.check("G-lambda4-psi", psi.exterior_power(4), f3(0, 1, 0));
    // psi (x) psi by the dual-pair formula (k = -k at p = 2)
    VirtualRep expect = VirtualRep::zero(t);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) expect = expect + f3(a, 0, b);
    for (int a = 0; a < 2; ++a)
        for (int l = 0; l < 2; ++l)
            expect = expect + f3(0, 0, a) * rep_by_label(t, "phi(" + std::to_string(l) + ";1)");
    for (int a = 0; a < 2; ++a) expect = expect + f3(a, 0, 0) * phiinf;
    tally.check("G-psi-square", psi * psi, expect);
    // the k != -k specialisation printed with the generator relations does not
    // apply at p = 2; flagged with the verified decomposition
    tally.check_or_flag("G-psi-square-printed-specialisation", psi * psi,
                        Int(3) * psi + f3(0, 1, 0) * psi);
    // cross-ell degree-2 products as printed (each right side is an
    // over-counted orbit sum at p = 2); flagged with the verified value
    VirtualRep rhs_printed = VirtualRep::zero(t);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) rhs_printed = rhs_printed + f3(a, 0, b) * phi0;
    tally.check_or_flag("G-phi-cross-printed[phi(1)*phi(inf)]", phi1 * phiinf, rhs_printed);
}

// --- restriction catalogs ------------------------------------------------------

inline void restrictions_u3(CatalogTally& tally, Workbench& wb, const std::string& base, int p) {
    TableRef h = wb.table(base);
    auto phi = [&](int i) {
        return rep_by_label(h, p == 2 ? std::string("phi") : "phi(" + std::to_string(i) + ")");
    };
    // center: phi_k -> p tau^k, f -> trivial
    TableRef z = wb.table(base + "/Z");
    VirtualRep tau = rep_by_label(z, "s1");
    for (int k = 1; k < p; ++k) {
        VirtualRep tk = VirtualRep::integer(z, 1);
        for (int j = 0; j < k; ++j) tk = tk * tau;
        tally.check("u3-restrict-center-phi", restrict_virtual(phi(k), z), Int(p) * tk);
    }
    tally.check("u3-restrict-center-f", restrict_virtual(f_rep(h, {1, 0}), z),
                VirtualRep::integer(z, 1));
    // cyclic subgroups C(n,k): f_{(a,b)} -> sigma^{an+bk}; phi_k -> sum sigma^i
    for (int n = 0; n < p; ++n)
        for (int k = 0; k < p; ++k) {
            if (n == 0 && k == 0) continue;
            if (p == 2 && n == 1 && k == 1) continue;  // order-4 case below
            std::string key = base + "/C(" + std::to_string(n) + "," + std::to_string(k) + ")";
            TableRef cyc = wb.table(key);
            VirtualRep sigma = rep_by_label(cyc, "s1");
            for (int a = 0; a < p; ++a)
                for (int b = 0; b < p; ++b) {
                    VirtualRep expect = VirtualRep::integer(cyc, 1);
                    for (int j = 0; j < ((a * n + b * k) % p + p) % p; ++j)
                        expect = expect * sigma;
                    tally.check("u3-restrict-cyclic-f", restrict_virtual(f_rep(h, {a, b}), cyc),
                                expect);
                }
            for (int i = 1; i < p; ++i) {
                VirtualRep expect = VirtualRep::zero(cyc), power = VirtualRep::integer(cyc, 1);
                for (int j = 0; j < p; ++j) {
                    expect = expect + power;
                    power = power * sigma;
                }
                tally.check("u3-restrict-cyclic-phi", restrict_virtual(phi(i), cyc), expect);
            }
        }
    if (p == 2) {
        // the order-4 cyclic subgroup: phi -> sigma + sigma^3
        TableRef c4 = wb.table(base + "/C(1,1)");
        VirtualRep s = rep_by_label(c4, "s1");
        tally.check("u3-restrict-c4-phi", restrict_virtual(phi(1), c4), s + s * s * s);
    }
}

inline void restrictions_L(CatalogTally& tally, Workbench& wb, const std::string& ambient, int p) {
    std::string lkey = (p == 2) ? "L" : "L3";
    TableRef l = wb.table(lkey);
    auto phi = [&](int n, int k, int i) {
        std::string lname = (k % p == 0) ? "inf" : std::to_string(((n % p) + p) % p);
        return rep_by_label(l, "phi(" + lname + ";" + std::to_string(i) + ")");
    };
    auto sig = [&](const TableRef& v, std::vector<int> e) {
        VirtualRep out = VirtualRep::integer(v, 1);
        for (size_t j = 0; j < e.size(); ++j) {
            VirtualRep s = rep_by_label(v, "s" + std::to_string(j + 1));
            for (int rep = 0; rep < ((e[j] % p) + p) % p; ++rep) out = out * s;
        }
        return out;
    };
    TableRef v4 = wb.table(ambient + "/C2_4L");
    TableRef v3 = wb.table(ambient + "/C2_3L");
    TableRef vz = wb.table(ambient + "/ZL");
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c) {
                tally.check("L-restrict-4L-f", restrict_virtual(f_rep(l, {a, b, c}), v4),
                            sig(v4, {a, b, 0, 0}));
                tally.check("L-restrict-3L-f", restrict_virtual(f_rep(l, {a, b, c}), v3),
                            sig(v3, {c, 0, 0}));
                tally.check("L-restrict-Z-f", restrict_virtual(f_rep(l, {a, b, c}), vz),
                            VirtualRep::integer(vz, 1));
            }
    std::vector<std::pair<int, int>> ells;
    for (int n = 0; n < p; ++n) ells.emplace_back(n, 1);
    ells.emplace_back(1, 0);
    for (auto [n, k] : ells)
        for (int i = 1; i < p; ++i) {
            VirtualRep r4 = VirtualRep::zero(v4), r3 = VirtualRep::zero(v3);
            if (k != 0) {
                int kinv = 1;
                while ((k * kinv) % p != 1) ++kinv;
                int l4 = ((-i * n * kinv) % p + p) % p;
                for (int j = 0; j < p; ++j)
                    r4 = r4 + sig(v4, {k * j, -n * j, i, -i * n * kinv});
                for (int j = 0; j < p; ++j) r3 = r3 + sig(v3, {j, l4, i});
            } else {
                for (int j = 0; j < p; ++j) r4 = r4 + sig(v4, {0, j, 0, -i});
                for (int j = 0; j < p; ++j) r3 = r3 + sig(v3, {j, -i, 0});
            }
            tally.check("L-restrict-4L-phi", restrict_virtual(phi(n, k, i), v4), r4);
            tally.check("L-restrict-3L-phi", restrict_virtual(phi(n, k, i), v3), r3);
            VirtualRep rz = (k != 0) ? [&] {
                int kinv = 1;
                while ((k * kinv) % p != 1) ++kinv;
                return Int(p) * sig(vz, {-i * n * kinv, i});
            }()
                                     : Int(p) * sig(vz, {-i, 0});
            tally.check("L-restrict-Z-phi", restrict_virtual(phi(n, k, i), vz), rz);
        }
}

inline void restrictions_resg(CatalogTally& tally, Workbench& wb,
                              std::vector<ReportItem>& items) {
    TableRef g = wb.table("G");
    struct Row {
        const char* sub;
        const char* rep;
        std::function<VirtualRep(const TableRef&)> expect;
    };
    auto one = [](const TableRef& t) { return VirtualRep::integer(t, 1); };
    auto r = [](const char* lbl) {
        return [lbl](const TableRef& t) { return rep_by_label(t, lbl); };
    };
    auto sum = [](std::function<VirtualRep(const TableRef&)> a,
                  std::function<VirtualRep(const TableRef&)> b) {
        return [a, b](const TableRef& t) { return a(t) + b(t); };
    };
    auto twice = [](std::function<VirtualRep(const TableRef&)> a) {
        return [a](const TableRef& t) { return Int(2) * a(t); };
    };
    std::vector<Row> rows = {
        // the computed-correct catalog (see the discrepancy notes for the
        // printed H-row swap and the printed phi(1;1) entries)
        {"H0", "phi0", sum(one, r("f(1,0)"))},
        {"H0", "phi1", r("phi")},
        {"H0", "phiinf", r("phi")},
        {"H0", "psi", sum(sum(one, r("f(0,1)")), r("phi"))},
        {"Hinf", "phi0", r("phi")},
        {"Hinf", "phi1", r("phi")},
        {"Hinf", "phiinf", sum(one, r("f(0,1)"))},
        {"Hinf", "psi", sum(sum(one, r("f(1,0)")), r("phi"))},
        {"I0", "phi0", twice(r("f(1,0)"))},
        {"I0", "phi1", sum(r("f(1,0)"), r("f(1,1)"))},
        {"I0", "phiinf", sum(one, r("f(0,1)"))},
        {"I0", "psi", twice(r("phi"))},
        {"Iinf", "phi0", sum(one, r("f(1,0)"))},
        {"Iinf", "phi1", sum(r("f(0,1)"), r("f(1,1)"))},
        {"Iinf", "phiinf", twice(r("f(0,1)"))},
        {"Iinf", "psi", twice(r("phi"))},
        {"C2_2G", "phi0", sum(one, r("s1"))},
        {"C2_2G", "phi1", sum(one, r("s1*s2"))},
        {"C2_2G", "phiinf", sum(one, r("s2"))},
        {"C2_2G", "psi", sum(sum(one, r("s1")), sum(r("s2"), r("s1*s2")))},
    };
    for (const Row& row : rows) {
        TableRef sub = wb.table(std::string("G/") + row.sub);
        tally.check(std::string("resg-") + row.sub + "-" + row.rep,
                    restrict_virtual(rep_by_label(g, row.rep), sub), row.expect(sub));
    }
    // the printed proposition's swapped H-rows and phi(1;1) entries, reported
    TableRef h0 = wb.table("G/H0");
    bool printed_h0_phi0 = restrict_virtual(rep_by_label(g, "phi0"), h0) == rep_by_label(h0, "phi");
    pipeline_detail::push(items, "resg-printed-H-rows",
                          "the printed subgroup catalog swaps the two order-8 block rows and "
                          "lists a non-faithful value for the middle degree-2 generator; the "
                          "computed catalog is pinned instead",
                          printed_h0_phi0 ? "printed-holds" : "printed-differs", "printed-differs",
                          /*info=*/true);
}

}  // namespace verify_detail

// ---------------------------------------------------------------------------

inline std::vector<ReportItem> cmd_verify(Workbench& wb, const PipelineConfig& cfg) {
    using namespace pipeline_detail;
    using namespace verify_detail;
    std::vector<ReportItem> out;

    // 1. class counts
    {
        auto count = [&](const char* key) {
            return wb.group_data(key)->class_count();
        };
        push(out, "classes-u32", "class count of U(3,2) (= p^2 + p - 1)",
             std::to_string(count("H")), "5");
        push(out, "classes-L", "class count of the order-32 centralizer (= 2p^3 - p)",
             std::to_string(count("L")), "14");
        push(out, "classes-u42", "class count of U(4,2) (= p(p-1) + p(p+1)(p-1) + p^3)",
             std::to_string(count("G")), "16");
        push(out, "classes-u33", "class count of U(3,3)", std::to_string(count("U(3,3)")), "11");
        bool burnside = true;
        for (const char* key : {"H", "L", "G", "U(3,3)"}) {
            const FiniteMatrixGroup& grp = wb.group(key);
            if (count_commuting_pairs(grp) !=
                long(wb.group_data(key)->class_count()) * long(grp.order()))
                burnside = false;
        }
        push(out, "classes-burnside", "commuting pairs = class count x order on every test group",
             burnside ? "holds" : "fails", "holds");
    }

    // 2. character tables
    {
        auto degrees = [&](const char* key) {
            TableRef t = wb.table(key);
            std::multiset<long> d;
            for (size_t i = 0; i < t->size(); ++i) d.insert(to_long(t->degree(i)));
            return d;
        };
        bool valid = true;
        for (const char* key : {"H", "L", "G", "U(3,3)", "L3"}) {
            try {
                wb.table(key)->validate();
            } catch (const error&) {
                valid = false;
            }
        }
        push(out, "tables-orthonormal",
             "exact row orthonormality and degree sums for the five tables",
             valid ? "valid" : "invalid", "valid");
        push(out, "tables-degrees-H", "degree multiset of U(3,2)",
             show_multiset(degrees("H")), "{1,1,1,1,2}");
        push(out, "tables-degrees-L", "degree multiset of the order-32 group",
             show_multiset(degrees("L")), "{1,1,1,1,1,1,1,1,2,2,2,2,2,2}");
        push(out, "tables-degrees-G", "degree multiset of U(4,2)",
             show_multiset(degrees("G")), "{1,1,1,1,1,1,1,1,2,2,2,2,2,2,4,4}");
    }

    // 3. decomposition catalogs
    {
        CatalogTally tally;
        catalog_u3(tally, wb.table("H"), 2);
        catalog_u3(tally, wb.table("U(3,3)"), 3);
        catalog_L(tally, wb.table("L"), 2);
        catalog_L(tally, wb.table("L3"), 3);
        catalog_G(tally, wb.table("G"));
        push(out, "catalog-decompositions",
             "product/exterior catalogs for the three families at p = 2 and p = 3",
             std::to_string(tally.verified) + " verified, " +
                 std::to_string(tally.failures.size()) + " failed",
             "188 verified, 0 failed");
        for (const std::string& f : tally.failures)
            push(out, "decomposition-failed[" + f + "]", "failed catalog identity", "failed",
                 "verified");
        std::set<std::string> seen_flags;
        for (auto& [id, computed] : tally.flagged) {
            if (!seen_flags.insert(id + "|" + computed).second) continue;
            push(out, "catalog-discrepancy[" + id + "]",
                 "printed identity fails as a character equation; computed decomposition recorded",
                 computed, computed, /*info=*/true);
        }
    }

    // 4. restriction catalogs
    {
        CatalogTally tally;
        restrictions_u3(tally, wb, "H", 2);
        restrictions_u3(tally, wb, "U(3,3)", 3);
        restrictions_L(tally, wb, "G", 2);
        restrictions_L(tally, wb, "U(4,3)", 3);
        restrictions_resg(tally, wb, out);
        push(out, "catalog-restrictions",
             "restriction catalogs (cyclic/center, order-32 family, order-64 subgroups)",
             std::to_string(tally.verified) + " verified, " +
                 std::to_string(tally.failures.size()) + " failed",
             "262 verified, 0 failed");
        for (const std::string& f : tally.failures)
            push(out, "restriction-failed[" + f + "]", "failed restriction identity", "failed",
                 "verified");
    }

    // 5. gamma graded pieces
    {
        GammaFiltration& gh = wb.gamma("H");
        GammaFiltration& gg = wb.gamma("G");
        push(out, "gamma-gr1-G", "gr^1 of the order-64 group",
             show_multiset(invariants_of(gg.graded_piece(1))), "{2,2,2}");
        push(out, "gamma-gr2-G", "gr^2 of the order-64 group",
             show_multiset(invariants_of(gg.graded_piece(2))), "{2,2,2,2,4,4,4}");
        push(out, "gamma-gr2-H", "gr^2 of the order-8 group",
             show_multiset(invariants_of(gh.graded_piece(2))), "{2,2,4}");
        // SNF oracle from the integral presentation, degree 2
        IntMat rows = {
            {Int(2), Int(0), Int(0), Int(0)}, {Int(0), Int(2), Int(0), Int(0)},
            {Int(0), Int(0), Int(2), Int(0)}, {Int(0), Int(0), Int(0), Int(4)},
            {Int(1), Int(1), Int(0), Int(0)},
        };
        std::multiset<long> oracle;
        for (const Int& d : quotient_structure(rows, 4).invariant_factors())
            oracle.insert(to_long(d));
        push(out, "gamma-gr2-H-oracle",
             "gr^2 of the order-8 group matches the presentation's Smith normal form",
             show_multiset(invariants_of(gh.graded_piece(2))), show_multiset(oracle));
        TableRef h = wb.table("H");
        TableRef g = wb.table("G");
        push(out, "gamma-order-c2phi", "order of c_2(phi) in gr^2 of the order-8 group",
             gh.chern_order(make_mono(h, {{"phi", 2}})).get_str(), "4");
        push(out, "gamma-order-c2psi", "order of c_2(psi) in gr^2 of the order-64 group",
             gg.chern_order(make_mono(g, {{"psi", 2}})).get_str(), "4");
        push(out, "gamma-order-c1f", "order of c_1(f) in gr^1 of the order-8 group",
             gh.chern_order(make_mono(h, {{"f(1,0)", 1}})).get_str(), "2");
    }

    // 6. the degree-3 linear algebra block
    for (ReportItem& item : degree3_bookkeeping(wb, cfg)) out.push_back(std::move(item));

    // 7. cycle-class solving
    {
        // order 8
        CycleSolveProblem probH = problem_for_H(wb);
        auto candsH = solve_cycle_map(probH);
        push(out, "cycle-H-count", "cycle-map candidates for the order-8 group",
             std::to_string(candsH.size()), "2");
        const auto& algH = *probH.cohom.algebra;
        bool h_images = candsH.size() == 2;
        std::set<std::string> f_images;
        for (const auto& c : candsH) {
            if (!(c.assignment[2] == algH.nf(algH.parse("c_2_2^2")))) h_images = false;
            if (!(c.assignment[1] == algH.nf(algH.parse("b_1_0^2+b_1_1^2")))) h_images = false;
            if (!candidate_sound(probH, c)) h_images = false;
            f_images.insert(algH.poly_str(c.assignment[0]));
        }
        if (f_images != std::set<std::string>{"b_1_0^2", "b_1_1^2"}) h_images = false;
        push(out, "cycle-H-images",
             "both candidates: c2(phi) -> c_2_2^2, c1(phi) -> b_1_0^2 + b_1_1^2, and the pair "
             "is swapped by b_1_0 <-> b_1_1",
             h_images ? "as-published" : "different", "as-published");

        // order 32
        CycleSolveProblem probL = problem_for_L(wb);
        auto candsL = solve_cycle_map(probL);
        push(out, "cycle-L-count", "cycle-map candidates for the order-32 group",
             std::to_string(candsL.size()), "2");
        const auto& algL = *probL.cohom.algebra;
        auto nfsL = [&](std::initializer_list<const char*> texts) {
            std::string s;
            for (const char* t : texts) s += algL.poly_str(algL.nf(algL.parse(t))) + ";";
            return s;
        };
        std::set<std::string> gotL, expectL;
        for (const auto& c : candsL) {
            std::string s;
            for (const auto& piece : c.assignment) s += algL.poly_str(piece) + ";";
            gotL.insert(s);
        }
        expectL.insert(nfsL({"b_1_0^2+b_1_1^2", "b_1_0^2+b_1_1^2+b_1_2^2", "b_1_0^2+b_1_2^2",
                             "c_2_5^2", "c_2_5^2+b_2_4^2+c_2_6^2", "c_2_6^2"}));
        expectL.insert(nfsL({"b_1_0^2+b_1_2^2", "b_1_0^2+b_1_1^2+b_1_2^2", "b_1_0^2+b_1_1^2",
                             "c_2_6^2", "c_2_5^2+b_2_4^2+c_2_6^2", "c_2_5^2"}));
        push(out, "cycle-L-images",
             "the two candidates are the published pair (normal forms), swapped by "
             "c_2_5 <-> c_2_6, b_1_1 <-> b_1_2",
             gotL == expectL ? "as-published" : "different", "as-published");

        // order 64
        CycleSolveProblem probG = problem_for_G(wb);
        auto candsG = solve_cycle_map(probG);
        push(out, "cycle-G-count", "cycle-map candidates for the order-64 group",
             std::to_string(candsG.size()), "2");
        const auto& algG = *probG.cohom.algebra;
        const CycleClassCandidate& cand = choose_candidate(candsG, probG.cohom,
                                                           cfg.swap_generators);
        // the symmetry choice picks out exactly one candidate
        int marked = 0;
        F2Poly marker = algG.parse(cfg.swap_generators ? "b_1_2^2" : "b_1_1^2");
        for (const auto& c : candsG)
            for (const auto& m : c.assignment.at(0).monos)
                if (m == marker.monos[0]) ++marked;
        push(out, "cycle-G-unique-after-choice",
             "exactly one candidate survives the generator-assignment choice",
             std::to_string(marked), "1");
        push(out, "cycle-G-sound", "the chosen candidate re-restricts exactly on every slot",
             candidate_sound(probG, cand) ? "sound" : "unsound", "sound");
        auto eqG = [&](size_t idx, const char* text) {
            return cand.assignment[idx] == algG.nf(algG.parse(text));
        };
        bool exact = eqG(0, "b_1_0^2+b_1_1^2") && eqG(1, "b_1_0^2+b_1_2^2") && eqG(2, "b_1_0^2") &&
                     eqG(3, "b_2_4^2") && eqG(7, "c_4_18^2") &&
                     eqG(5, "b_2_4^2+b_2_5^2+b_2_6^2+b_1_1^4+b_1_1^2*b_1_2^2+b_1_2^4");
        push(out, "cycle-G-images-published",
             "the published images of c1(phi0), c1(phiinf), c1(psi), c2(phi0), c2(psi), c4(psi) "
             "hold exactly (c2(psi) modulo the relations)",
             exact ? "as-published" : "different", "as-published");
        push(out, "cycle-G-c2phiinf",
             "c2(phiinf) maps to b_2_6^2 (the published b_2_4^2 cannot restrict to zero where "
             "phiinf is trivial; b_2_6^2 is its image under the presentation symmetry)",
             algG.poly_str(cand.assignment[4]), "b_2_6^2");
        push(out, "cycle-G-c3psi-published",
             "the published c3(psi) value differs from the solved one by a class that the "
             "doubled-line rank-3 slot detects; the solved value is the unique consistent one",
             eqG(6, "b_3_11^2+b_1_2^2*b_2_6^2+b_1_1^2*b_2_4^2+b_1_1^2*b_1_2^4+b_1_1^4*b_1_2^2")
                 ? "printed-holds"
                 : "printed-differs",
             "printed-differs", /*info=*/true);
        // closure of the candidate set under the declared presentation symmetry
        auto swapped_poly = [&](const F2Poly& p) {
            // b_1_1 <-> b_1_2, b_2_4 <-> b_2_6; generator order: b_1_0, b_1_1,
            // b_1_2, b_2_4, b_2_5, b_2_6, b_3_11, c_4_18
            F2Poly q;
            for (F2Mono m : p.monos) {
                std::swap(m[1], m[2]);
                std::swap(m[3], m[5]);
                q.monos.push_back(std::move(m));
            }
            return algG.nf(q.normalize());
        };
        bool closed = false;
        for (const auto& other : candsG) {
            bool all = true;
            for (size_t i = 0; i < cand.assignment.size() && all; ++i) {
                size_t j = i;  // the symmetry also swaps the roles of phi0 and phiinf
                if (i == 0) j = 1;
                else if (i == 1) j = 0;
                else if (i == 3) j = 4;
                else if (i == 4) j = 3;
                if (!(swapped_poly(cand.assignment[i]) == algG.nf(other.assignment[j]))) all = false;
            }
            if (all) closed = true;
        }
        push(out, "cycle-G-symmetry",
             "the candidate pair is closed under the presentation symmetry combined with the "
             "phi0 <-> phiinf swap",
             closed ? "closed" : "not-closed", "closed");
    }

    // 8. presentations (gated on the configured degree bound; the published
    // lists need degree 6)
    if (cfg.degree_bound < 6) {
        ReportItem item;
        item.id = "presentations-skipped";
        item.claim = "presentation comparisons need degree bound >= 6";
        item.computed = "skipped at bound " + std::to_string(cfg.degree_bound);
        item.expected = item.computed;
        item.pass = true;
        item.info = true;
        out.push_back(std::move(item));
    } else {
        // order 8, mod 2: a single new relation in degree 2
        CycleSolveProblem probH = problem_for_H(wb);
        auto candsH = solve_cycle_map(probH);
        std::shared_ptr<F2GradedAlgebra> freeH;
        auto relsH = kernel_mod2(probH.cohom, probH.generators, candsH.at(0), cfg.degree_bound,
                                 &freeH);
        bool h_ok = relsH.size() == 1 && relsH.count(2) == 1 && relsH[2].size() == 1 &&
                    relsH[2][0] == freeH->parse("c_1(f(1,0))^2+c_1(f(1,0))*c_1(phi)");
        push(out, "presentation-H-mod2",
             "mod-2 presentation of the order-8 group: one relation, "
             "c1(f)^2 + c1(f) c1(phi), through degree " + std::to_string(cfg.degree_bound),
             h_ok ? "as-published" : "different", "as-published");
        ChowResult chowL = cmd_chow_mod2(wb, 'L', cfg);
        for (ReportItem& item : chowL.checks) out.push_back(std::move(item));
        ChowResult chowG = cmd_chow_mod2(wb, 'G', cfg);
        for (ReportItem& item : chowG.checks) out.push_back(std::move(item));
    }

    // 9. the integral presentation of the order-8 group
    for (ReportItem& item : cmd_chow_H(wb).checks) out.push_back(std::move(item));

    // 10. property suites (always on; randomized parts take the seed)
    {
        std::mt19937 rng(cfg.seed);
        TableRef g = wb.table("G");
        TableRef h = wb.table("H");
        bool whitney = true, adams = true;
        for (int trial = 0; trial < 4; ++trial) {
            VirtualRep x = VirtualRep::basis(g, rng() % g->size());
            VirtualRep y = VirtualRep::basis(g, rng() % g->size());
            for (int n = 1; n <= 3; ++n) {
                VirtualRep rhs = VirtualRep::zero(g);
                for (int i = 0; i <= n; ++i)
                    rhs = rhs + x.exterior_power(i) * y.exterior_power(n - i);
                if (!((x + y).exterior_power(n) == rhs)) whitney = false;
            }
            for (long k : {2L, 3L}) {
                if (!((x * y).adams(k) == x.adams(k) * y.adams(k))) adams = false;
                if (!((x + y).adams(k) == x.adams(k) + y.adams(k))) adams = false;
            }
        }
        push(out, "property-whitney", "exterior-power Whitney sums on random characters",
             whitney ? "holds" : "fails", "holds");
        push(out, "property-adams", "Adams operations are additive and multiplicative",
             adams ? "holds" : "fails", "holds");
        GammaFiltration& gg = wb.gamma("G");
        GammaFiltration& gh = wb.gamma("H");
        bool chain = true, products = true, torsion = true;
        for (auto [gamma_ptr, maxn] :
             {std::pair<GammaFiltration*, int>{&gh, 4}, {&gg, 3}}) {
            GammaFiltration& gamma = *gamma_ptr;
            for (int n = 0; n < maxn; ++n)
                for (const IntVec& row : gamma.lattice(n + 1).rows())
                    if (!gamma.lattice(n).member(row)) chain = false;
            TableRef t = gamma.table();
            for (int a = 1; a <= 2; ++a)
                for (int b = 1; a + b <= maxn; ++b)
                    for (int trial = 0; trial < 3; ++trial) {
                        const auto& ra = gamma.lattice(a).rows();
                        const auto& rb = gamma.lattice(b).rows();
                        VirtualRep x(t, ra[rng() % ra.size()]);
                        VirtualRep y(t, rb[rng() % rb.size()]);
                        if (!gamma.member(x * y, a + b)) products = false;
                    }
            Int order(static_cast<unsigned long>(t->group()->group.order()));
            for (int n = 1; n <= maxn; ++n)
                for (const Int& d : gamma.graded_piece(n).invariants)
                    if (d == 0 || order % d != 0) torsion = false;
        }
        push(out, "property-gamma-chain", "gamma ideals form a descending chain",
             chain ? "holds" : "fails", "holds");
        push(out, "property-gamma-products", "products multiply filtration degrees",
             products ? "holds" : "fails", "holds");
        push(out, "property-gamma-torsion", "invariant factors divide the group order",
             torsion ? "holds" : "fails", "holds");
        // universal polynomials: random root specialization
        bool special = true;
        int done = 0;
        while (done < 100) {
            int n = 1 + int(rng() % 3), m = 1 + int(rng() % 2), k = 1 + int(rng() % (n * m));
            std::vector<long> alpha(static_cast<size_t>(n), 0), beta(static_cast<size_t>(m), 0);
            for (auto& a : alpha) a = long(rng() % 7) - 3;
            for (auto& b : beta) b = long(rng() % 7) - 3;
            auto esym = [](const std::vector<long>& xs) {
                std::vector<Int> e(xs.size() + 1, Int(0));
                e[0] = 1;
                for (long x : xs)
                    for (size_t j = xs.size(); j >= 1; --j) e[j] += Int(x) * e[j - 1];
                return e;
            };
            auto ea = esym(alpha), eb = esym(beta);
            Int lhs = chern_of_tensor(n, m, k).evaluate([&](const ChernVar& v) {
                const auto& e = (v.atom == "x") ? ea : eb;
                return size_t(v.index) < e.size() ? e[size_t(v.index)] : Int(0);
            });
            std::vector<long> sums;
            for (long a : alpha)
                for (long b : beta) sums.push_back(a + b);
            if (lhs != esym(sums)[size_t(k)]) special = false;
            ++done;
        }
        push(out, "property-universal-specialization",
             "universal tensor polynomials agree with direct root evaluation (100 assignments)",
             special ? "holds" : "fails", "holds");
        // f2 algebra: nf idempotence and kernel soundness on the order-32 map
        CycleSolveProblem probL = problem_for_L(wb);
        auto candsL = solve_cycle_map(probL);
        std::shared_ptr<F2GradedAlgebra> freeL;
        auto relsL = kernel_mod2(probL.cohom, probL.generators, candsL.at(0), 4, &freeL);
        bool nf_ok = true, kernel_ok = true;
        const auto& algL = *probL.cohom.algebra;
        for (int d = 1; d <= 4; ++d) {
            const auto& monos = algL.monomials(d);
            for (int trial = 0; trial < 5; ++trial) {
                F2Poly p;
                for (const auto& mono : monos)
                    if (rng() % 2) p.monos.push_back(mono);
                p.normalize();
                F2Poly np = algL.nf(p);
                if (!(algL.nf(np) == np)) nf_ok = false;
            }
        }
        AlgebraHom fL(freeL, probL.cohom.algebra, candsL.at(0).assignment);
        for (const auto& [d, list] : relsL)
            for (const F2Poly& rpoly : list)
                if (!algL.nf(fL.apply(rpoly)).is_zero()) kernel_ok = false;
        push(out, "property-f2-nf", "normal forms are idempotent",
             nf_ok ? "holds" : "fails", "holds");
        push(out, "property-f2-kernel", "presentation relations map to zero in cohomology",
             kernel_ok ? "holds" : "fails", "holds");
    }

    // detection report for the order-64 group
    {
        DetectionReport rep = cmd_detect(wb, "G");
        push(out, "detect-bound", "detection bound n - c for the order-64 group",
             std::to_string(rep.bound), "3");
        std::map<std::string, int> counts;
        for (const auto& row : rep.rows) ++counts[row.type];
        bool unclassified = counts.count("unclassified") > 0;
        push(out, "detect-types",
             "centralizer types of elementary abelian subgroups: elementary abelian, copies of "
             "the order-32 centralizer, C2 x U(3,2) products, or the whole group",
             unclassified ? "unclassified-present" : "all-classified", "all-classified");
        std::ostringstream os;
        for (auto& [type, n] : counts) os << type << ":" << n << " ";
        push(out, "detect-multiset", "observed centralizer-type multiset", os.str(),
             "C2xU(3,2):18 G:1 L:9 elementary-abelian:81 ");
    }

    return out;
}

}  // namespace workbench
