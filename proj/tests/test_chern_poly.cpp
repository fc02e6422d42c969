// Universal Chern-class polynomials via the splitting principle.

#include "workbench/symfunc.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace workbench;

namespace {

ChernPolynomial cvar(const char* atom, int i) { return ChernPolynomial::variable(atom, i); }

TableRef make_table(FiniteMatrixGroup g) {
    return std::make_shared<CharacterTable>(character_table(make_group_data(std::move(g))));
}

}  // namespace

TEST(ChernTensor, SmallCases) {
    // c_2(x (x) y) for deg x = 2, deg y = 1
    ChernPolynomial p = chern_of_tensor(2, 1, 2);
    ChernPolynomial expect = cvar("x", 2) + cvar("x", 1) * cvar("y", 1) + cvar("y", 1) * cvar("y", 1);
    EXPECT_TRUE(p == expect);
    // c_1(x (x) y) for two lines
    EXPECT_TRUE(chern_of_tensor(1, 1, 1) == cvar("x", 1) + cvar("y", 1));
    // c_0 is always 1
    EXPECT_TRUE(chern_of_tensor(3, 2, 0) == ChernPolynomial::constant(1));
    // beyond the top class everything vanishes
    EXPECT_TRUE(chern_of_tensor(2, 1, 3).is_zero());
    // budget guard
    EXPECT_THROW(chern_of_tensor(7, 6, 1), error);
}

TEST(ChernExterior, SmallCases) {
    // c_1(lambda^2 x) = c_1(x) for deg x = 2
    EXPECT_TRUE(chern_of_exterior(2, 2, 1) == cvar("x", 1));
    // deg x = 4: each root appears in 3 of the 6 pair sums
    EXPECT_TRUE(chern_of_exterior(4, 2, 1) == Int(3) * cvar("x", 1));
    // lambda^1 is the identity
    for (int k = 1; k <= 3; ++k) EXPECT_TRUE(chern_of_exterior(3, 1, k) == cvar("x", k));
    // lambda^0 is trivial
    EXPECT_TRUE(chern_of_exterior(3, 0, 0) == ChernPolynomial::constant(1));
    EXPECT_TRUE(chern_of_exterior(3, 0, 1).is_zero());
    EXPECT_THROW(chern_of_exterior(10, 5, 1), error);
}

TEST(ChernPoly, Homogeneity) {
    for (auto [n, m] : {std::pair<int, int>{2, 2}, {3, 2}, {4, 1}})
        for (int k = 1; k <= n * m; ++k)
            EXPECT_TRUE(chern_of_tensor(n, m, k).homogeneous_of_degree(k));
    for (int k = 1; k <= 6; ++k)
        EXPECT_TRUE(chern_of_exterior(4, 2, k).homogeneous_of_degree(k));
}

TEST(ChernPoly, ReductionIsExact) {
    // re-expanding the output in the roots reproduces the input expansion
    for (auto [n, m] : {std::pair<int, int>{2, 2}, {3, 2}, {2, 1}, {4, 3}, {6, 2}}) {
        if (n * m > 12) continue;
        for (int k = 1; k <= n * m; ++k) {
            ChernPolynomial p = chern_of_tensor(n, m, k);
            size_t vars = size_t(n + m);
            // substitute e_i back in as root polynomials
            sym::RootPoly expansion;
            expansion[sym::Expo(vars, 0)] = 0;
            expansion.clear();
            for (const auto& [mono, coeff] : p.terms()) {
                sym::RootPoly term;
                term[sym::Expo(vars, 0)] = coeff;
                for (const auto& [v, e] : mono)
                    for (int rep = 0; rep < e; ++rep)
                        term = sym::mul(term,
                                        v.atom == "x"
                                            ? sym::elementary(vars, 0, size_t(n), v.index, 1u << 22)
                                            : sym::elementary(vars, size_t(n), size_t(m), v.index,
                                                              1u << 22),
                                        1u << 22);
                for (const auto& [e, c] : term) sym::add_term(expansion, e, c);
            }
            // direct expansion of e_k over the root sums
            std::vector<sym::RootPoly> elem(size_t(k) + 1);
            elem[0][sym::Expo(vars, 0)] = 1;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < m; ++b) {
                    sym::RootPoly r;
                    sym::Expo ea(vars, 0), eb(vars, 0);
                    ea[size_t(a)] = 1;
                    eb[size_t(n) + size_t(b)] = 1;
                    r[ea] = 1;
                    r[eb] = 1;
                    for (int j = k; j >= 1; --j) {
                        if (elem[size_t(j - 1)].empty()) continue;
                        sym::RootPoly shifted = sym::mul(elem[size_t(j - 1)], r, 1u << 22);
                        for (const auto& [e, c] : shifted) sym::add_term(elem[size_t(j)], e, c);
                    }
                }
            EXPECT_EQ(expansion, elem[size_t(k)]) << n << " " << m << " " << k;
        }
    }
}

TEST(ChernPoly, RandomSpecialization) {
    // assign small integers to the roots; both routes must agree exactly
    std::mt19937 rng(2024);
    int assignments = 0;
    while (assignments < 120) {
        int n = 1 + int(rng() % 3), m = 1 + int(rng() % 2), k = 1 + int(rng() % (n * m));
        std::vector<long> alpha(static_cast<size_t>(n), 0), beta(static_cast<size_t>(m), 0);
        for (auto& a : alpha) a = long(rng() % 7) - 3;
        for (auto& b : beta) b = long(rng() % 7) - 3;
        // e_i of a value list
        auto esym = [](const std::vector<long>& xs, int i) {
            std::vector<Int> e(xs.size() + 1, Int(0));
            e[0] = 1;
            for (long x : xs)
                for (size_t j = std::min(e.size() - 1, xs.size()); j >= 1; --j)
                    e[j] += Int(x) * e[j - 1];
            return e;
        };
        auto ea = esym(alpha, 0), eb = esym(beta, 0);
        ChernPolynomial p = chern_of_tensor(n, m, k);
        Int lhs = p.evaluate([&](const ChernVar& v) {
            const auto& e = (v.atom == "x") ? ea : eb;
            return size_t(v.index) < e.size() ? e[size_t(v.index)] : Int(0);
        });
        std::vector<long> sums;
        for (long a : alpha)
            for (long b : beta) sums.push_back(a + b);
        Int rhs = esym(sums, 0)[size_t(k)];
        EXPECT_EQ(lhs, rhs);
        ++assignments;
    }
}

TEST(ChernPoly, WhitneyTotal) {
    // sum of two lines
    auto series = whitney_total({{1, "l1"}, {1, "l2"}}, 2);
    EXPECT_TRUE(series[1] == cvar("l1", 1) + cvar("l2", 1));
    EXPECT_TRUE(series[2] == cvar("l1", 1) * cvar("l2", 1));
    // the empty sum has total class 1
    auto empty = whitney_total({}, 3);
    EXPECT_TRUE(empty[0] == ChernPolynomial::constant(1));
    for (int d = 1; d <= 3; ++d) EXPECT_TRUE(empty[size_t(d)].is_zero());
    // four lines: c_2 is the second elementary symmetric polynomial
    auto four = whitney_total({{1, "a"}, {1, "b"}, {1, "c"}, {1, "d"}}, 2);
    ChernPolynomial e2;
    const char* names[] = {"a", "b", "c", "d"};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) e2 = e2 + cvar(names[i], 1) * cvar(names[j], 1);
    EXPECT_TRUE(four[2] == e2);
}

TEST(RelationFromIdentity, PhiTensorLine) {
    // phi (x) f = phi in R(U(3,2)); at k = 2 the universal polynomial forces
    // c_1(phi) c_1(f) + c_1(f)^2 to vanish
    TableRef h = make_table(unitriangular_group(3, 2));
    ChernExpr lhs = ChernExpr::tensor(ChernExpr::atom_of("phi"), ChernExpr::atom_of("f(1,0)"));
    ChernExpr rhs = ChernExpr::atom_of("phi");
    ChernPolynomial rel = relation_from_identity(lhs, rhs, 2, h);
    ChernPolynomial expect = cvar("phi", 1) * cvar("f(1,0)", 1) + cvar("f(1,0)", 1) * cvar("f(1,0)", 1);
    EXPECT_TRUE(rel == expect);
    // any expression differs from itself by zero
    EXPECT_TRUE(relation_from_identity(rhs, rhs, 2, h).is_zero());
    // refuses when the characters differ
    EXPECT_THROW(relation_from_identity(ChernExpr::atom_of("phi"), ChernExpr::atom_of("f(1,0)"), 1, h),
                 error);
}

TEST(RelationFromIdentity, LambdaCubePsi) {
    // lambda^3(psi) = f(0,1,0) (x) psi at k = 3.  The exact universal
    // polynomials (validated by root specialization) are
    //   c_3(lambda^3 x) = c1^3 + 2 c1 c2 - c3              (deg x = 4)
    //   c_3(f (x) x)    = c3 + 2 c1(f) c2 + 3 c1(f)^2 c1 + 4 c1(f)^3
    TableRef g = make_table(unitriangular_group(4, 2));
    ChernExpr lhs = ChernExpr::exterior(ChernExpr::atom_of("psi"), 3);
    ChernExpr rhs = ChernExpr::tensor(ChernExpr::atom_of("f(0,1,0)"), ChernExpr::atom_of("psi"));
    ChernPolynomial rel = relation_from_identity(lhs, rhs, 3, g);
    ChernPolynomial c1 = cvar("psi", 1), c2 = cvar("psi", 2), c3 = cvar("psi", 3);
    ChernPolynomial cf = cvar("f(0,1,0)", 1);
    ChernPolynomial true_lhs = c1 * c1 * c1 + Int(2) * c1 * c2 - c3;
    ChernPolynomial true_rhs = c3 + Int(2) * cf * c2 + Int(3) * cf * cf * c1 + Int(4) * cf * cf * cf;
    EXPECT_TRUE(rel == true_lhs - true_rhs);
    // consequence used downstream: substituting c1(f(0,1,0)) = c1(psi) (they
    // agree in degree 1) leaves -6 c1^3 - 2 c3, i.e. 2 c3(psi) = 0 once first
    // Chern classes are 2-torsion
    ChernPolynomial sub = rel.substituted([&](const ChernVar& v) {
        if (v.atom == "f(0,1,0)") return ChernPolynomial::variable("psi", v.index);
        return ChernPolynomial::variable(v.atom, v.index);
    });
    EXPECT_TRUE(sub == ChernPolynomial::constant(-6) * c1 * c1 * c1 -
                           ChernPolynomial::constant(2) * c3);
}

TEST(ChernPoly, Printing) {
    ChernPolynomial p = chern_of_tensor(2, 1, 2);
    EXPECT_EQ(p.str(), "c_1(x)*c_1(y) + c_2(x) + c_1(y)^2");
    EXPECT_NE(p.term_lines().find("1:c_2(x)"), std::string::npos);
}
