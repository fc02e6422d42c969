#pragma once

// Shipped F_2-cohomology presentations with their restriction maps to the
// maximal elementary abelian subgroups (one per conjugacy class) and, where
// used, to the center.  Transcribed from the Green-King computations of mod-p
// cohomology rings of small p-groups; SLOT order follows the database order.
// Every map is re-validated at load time (all relations must die).

namespace workbench::cohom_builtin {

// SmallGroup(8,3): dihedral of order 8
inline const char* k8_3 = R"(# mod-2 cohomology of SmallGroup(8,3), after the Green-King database
ALGEBRA 8#3
GEN b_1_0 1
GEN b_1_1 1
GEN c_2_2 2
REL b_1_0*b_1_1
SLOT 1 2
MAP b_1_0 -> 0
MAP b_1_1 -> c_1_0
MAP c_2_2 -> c_1_0*c_1_1+c_1_1^2
SLOT 2 2
MAP b_1_0 -> c_1_0
MAP b_1_1 -> 0
MAP c_2_2 -> c_1_0*c_1_1+c_1_1^2
CENTER 1
MAP b_1_0 -> 0
MAP b_1_1 -> 0
MAP c_2_2 -> c_1_0^2
)";

// SmallGroup(32,27)
inline const char* k32_27 = R"(# mod-2 cohomology of SmallGroup(32,27), after the Green-King database
# (the mixed relation and the rank-3 restriction of c_2_6 homogenised:
#  c_2_5*b_1_2 -> c_2_5*b_1_2^2 and c_1_1*c_1_3 -> c_1_1*c_1_2 in rank 3)
ALGEBRA 32#27
GEN b_1_0 1
GEN b_1_1 1
GEN b_1_2 1
GEN b_2_4 2
GEN c_2_5 2
GEN c_2_6 2
REL b_1_0*b_1_1
REL b_1_0*b_1_2
REL b_1_0*b_2_4
REL b_2_4*b_1_1*b_1_2+b_2_4^2+c_2_6*b_1_1^2+c_2_5*b_1_2^2
SLOT 1 4
MAP b_1_0 -> 0
MAP b_1_1 -> c_1_2
MAP b_1_2 -> c_1_3
MAP b_2_4 -> c_1_1*c_1_2+c_1_0*c_1_3
MAP c_2_5 -> c_1_0*c_1_2+c_1_0^2
MAP c_2_6 -> c_1_1*c_1_3+c_1_1^2
SLOT 2 3
MAP b_1_0 -> c_1_2
MAP b_1_1 -> 0
MAP b_1_2 -> 0
MAP b_2_4 -> 0
MAP c_2_5 -> c_1_0*c_1_2+c_1_0^2
MAP c_2_6 -> c_1_1*c_1_2+c_1_1^2
CENTER 2
MAP b_1_0 -> 0
MAP b_1_1 -> 0
MAP b_1_2 -> 0
MAP b_2_4 -> 0
MAP c_2_5 -> c_1_0^2
MAP c_2_6 -> c_1_1^2
)";

// SmallGroup(64,138)
inline const char* k64_138 = R"(# mod-2 cohomology of SmallGroup(64,138), after the Green-King database
ALGEBRA 64#138
GEN b_1_0 1
GEN b_1_1 1
GEN b_1_2 1
GEN b_2_4 2
GEN b_2_5 2
GEN b_2_6 2
GEN b_3_11 3
GEN c_4_18 4
REL b_1_0*b_1_1
REL b_1_0*b_1_2
REL b_2_5*b_1_2+b_2_4*b_1_2
REL b_2_5*b_1_1+b_2_4*b_1_2
REL b_2_6*b_1_1+b_2_4*b_1_2
REL b_1_2*b_3_11
REL b_1_1*b_3_11
REL b_1_0*b_3_11+b_2_5^2+b_2_4*b_2_6
REL b_3_11^2+b_2_5^2*b_2_6+b_2_5^3+b_2_4*b_2_5*b_2_6+b_2_4*b_2_5^2+c_4_18*b_1_0^2
SLOT 1 3
MAP b_1_0 -> 0
MAP b_1_1 -> c_1_0
MAP b_1_2 -> c_1_1
MAP b_2_4 -> 0
MAP b_2_5 -> 0
MAP b_2_6 -> 0
MAP b_3_11 -> 0
# two terms of this restriction homogenised against the slot's own degree-1
# lines and the rank-3 top Chern value (c_1_0^2*c_1_1^2+c_1_0^4 would place the
# faithful line in the b_1_1-direction, contradicting the other seven maps)
MAP c_4_18 -> c_1_0*c_1_1*c_1_2^2+c_1_0*c_1_1^2*c_1_2+c_1_0^2*c_1_2^2+c_1_0^2*c_1_1*c_1_2+c_1_1^2*c_1_2^2+c_1_2^4
SLOT 2 3
MAP b_1_0 -> 0
MAP b_1_1 -> c_1_1
MAP b_1_2 -> 0
MAP b_2_4 -> c_1_2^2+c_1_1*c_1_2
MAP b_2_5 -> 0
MAP b_2_6 -> 0
MAP b_3_11 -> 0
MAP c_4_18 -> c_1_0*c_1_1*c_1_2^2+c_1_0*c_1_1^2*c_1_2+c_1_0^2*c_1_2^2+c_1_0^2*c_1_1*c_1_2+c_1_0^2*c_1_1^2+c_1_0^4
SLOT 3 3
MAP b_1_0 -> 0
MAP b_1_1 -> 0
MAP b_1_2 -> c_1_1
MAP b_2_4 -> 0
MAP b_2_5 -> 0
MAP b_2_6 -> c_1_2^2+c_1_1*c_1_2
MAP b_3_11 -> 0
MAP c_4_18 -> c_1_0*c_1_1*c_1_2^2+c_1_0*c_1_1^2*c_1_2+c_1_0^2*c_1_2^2+c_1_0^2*c_1_1*c_1_2+c_1_0^2*c_1_1^2+c_1_0^4
SLOT 4 3
MAP b_1_0 -> 0
MAP b_1_1 -> c_1_1
MAP b_1_2 -> c_1_1
MAP b_2_4 -> c_1_2^2+c_1_1*c_1_2
MAP b_2_5 -> c_1_2^2+c_1_1*c_1_2
MAP b_2_6 -> c_1_2^2+c_1_1*c_1_2
MAP b_3_11 -> 0
MAP c_4_18 -> c_1_0*c_1_1*c_1_2^2+c_1_0*c_1_1^2*c_1_2+c_1_0^2*c_1_2^2+c_1_0^2*c_1_1*c_1_2+c_1_0^2*c_1_1^2+c_1_0^4
SLOT 5 4
MAP b_1_0 -> c_1_1
MAP b_1_1 -> 0
MAP b_1_2 -> 0
MAP b_2_4 -> c_1_2^2+c_1_1*c_1_2
MAP b_2_5 -> c_1_2*c_1_3+c_1_0*c_1_1
MAP b_2_6 -> c_1_3^2+c_1_1*c_1_3
MAP b_3_11 -> c_1_2*c_1_3^2+c_1_2^2*c_1_3+c_1_1*c_1_2*c_1_3+c_1_0^2*c_1_1
MAP c_4_18 -> c_1_0*c_1_2*c_1_3^2+c_1_0*c_1_2^2*c_1_3+c_1_0*c_1_1*c_1_2*c_1_3+c_1_0^2*c_1_3^2+c_1_0^2*c_1_2*c_1_3+c_1_0^2*c_1_2^2+c_1_0^2*c_1_1*c_1_3+c_1_0^2*c_1_1*c_1_2+c_1_0^3*c_1_1+c_1_0^4
)";

}  // namespace workbench::cohom_builtin
