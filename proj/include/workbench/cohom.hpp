#pragma once

// Bridge between the representation-theoretic Chern data and the shipped
// F_2-cohomology presentations: loading and validating the presentations,
// restricting Chern classes to elementary abelian subgroups, solving for all
// cycle-class-map candidates consistent with naturality, and pulling back the
// zero ideal to present the mod-2 Chern subring.

#include "workbench/cohom_data.hpp"
#include "workbench/f2alg.hpp"
#include "workbench/gamma.hpp"

#include <fstream>
#include <future>
#include <optional>

namespace workbench {

struct CohomSlot {
    std::string id;
    int rank = 0;
    std::vector<F2Poly> images;  // one per algebra generator, in F_2[c_1_0..c_1_{rank-1}]
    std::shared_ptr<F2GradedAlgebra> target;
};

struct CohomData {
    std::string name;
    std::shared_ptr<F2GradedAlgebra> algebra;  // cohomology grading
    std::vector<CohomSlot> slots;
    std::optional<CohomSlot> center;

    // every slot restriction must annihilate every relation
    void validate() const {
        auto check = [&](const CohomSlot& s) {
            AlgebraHom hom(algebra, s.target, s.images);  // throws with the offending relation
            (void)hom;
        };
        for (const CohomSlot& s : slots) check(s);
        if (center) check(*center);
    }
};

namespace detail {

inline std::shared_ptr<F2GradedAlgebra> slot_target(int rank) {
    std::vector<std::pair<std::string, int>> gens;
    for (int i = 0; i < rank; ++i) gens.emplace_back("c_1_" + std::to_string(i), 1);
    return std::make_shared<F2GradedAlgebra>(std::move(gens), std::vector<F2Poly>{},
                                             F2GradedAlgebra::Grading::Cohomology);
}

}  // namespace detail

inline CohomData load_cohom_text(const std::string& text) {
    CohomData data;
    std::vector<std::pair<std::string, int>> gens;
    std::vector<std::string> rel_texts;
    std::istringstream in(text);
    std::string line;
    struct PendingSlot {
        std::string id;
        int rank;
        std::map<std::string, std::string> maps;
        bool is_center;
    };
    std::vector<PendingSlot> pending;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "ALGEBRA") {
            ls >> data.name;
        } else if (word == "GEN") {
            std::string name;
            int deg;
            if (!(ls >> name >> deg)) throw error("cohom data: bad GEN line");
            gens.emplace_back(name, deg);
        } else if (word == "REL") {
            std::string rest;
            std::getline(ls, rest);
            rel_texts.push_back(rest);
        } else if (word == "SLOT" || word == "CENTER") {
            PendingSlot s;
            s.is_center = (word == "CENTER");
            if (s.is_center) {
                if (!(ls >> s.rank)) throw error("cohom data: bad CENTER line");
                s.id = "center";
            } else {
                if (!(ls >> s.id >> s.rank)) throw error("cohom data: bad SLOT line");
            }
            pending.push_back(std::move(s));
        } else if (word == "MAP") {
            if (pending.empty()) throw error("cohom data: MAP before any SLOT");
            std::string gen, arrow, rest;
            ls >> gen >> arrow;
            if (arrow != "->") throw error("cohom data: MAP needs '->'");
            std::getline(ls, rest);
            pending.back().maps[gen] = rest;
        } else {
            throw error("cohom data: unknown directive '" + word + "'");
        }
    }
    if (gens.empty()) throw error("cohom data: no generators");
    F2GradedAlgebra probe(gens, {}, F2GradedAlgebra::Grading::Cohomology);
    std::vector<F2Poly> rels;
    for (const std::string& rt : rel_texts) rels.push_back(probe.parse(rt));
    data.algebra = std::make_shared<F2GradedAlgebra>(gens, rels,
                                                     F2GradedAlgebra::Grading::Cohomology);
    for (PendingSlot& p : pending) {
        CohomSlot slot;
        slot.id = p.id;
        slot.rank = p.rank;
        slot.target = detail::slot_target(p.rank);
        for (const auto& [gname, gdeg] : gens) {
            auto it = p.maps.find(gname);
            if (it == p.maps.end())
                throw error("cohom data: slot " + p.id + " missing a map for " + gname);
            slot.images.push_back(slot.target->parse(it->second));
        }
        if (p.is_center)
            data.center = std::move(slot);
        else
            data.slots.push_back(std::move(slot));
    }
    data.validate();
    return data;
}

inline CohomData load_cohom(const std::string& key_or_path_or_text) {
    if (key_or_path_or_text.rfind("builtin:", 0) == 0) {
        std::string key = key_or_path_or_text.substr(8);
        if (key == "8#3") return load_cohom_text(cohom_builtin::k8_3);
        if (key == "32#27") return load_cohom_text(cohom_builtin::k32_27);
        if (key == "64#138") return load_cohom_text(cohom_builtin::k64_138);
        throw error("load_cohom: unknown builtin '" + key + "'");
    }
    std::ifstream file(key_or_path_or_text);
    if (file.good()) {
        std::ostringstream buf;
        buf << file.rdbuf();
        return load_cohom_text(buf.str());
    }
    return load_cohom_text(key_or_path_or_text);
}

inline unsigned worker_threads() {
    const char* env = std::getenv("WORKBENCH_THREADS");
    if (!env) return 1;
    long n = std::strtol(env, nullptr, 10);
    return n > 1 ? unsigned(n) : 1u;
}

// --- Chern restrictions to elementary abelian subgroups ----------------------

// exponent vector of a linear character of an elementary abelian group with
// respect to the dual basis of its listed generators
inline std::vector<int> line_exponents(const CharacterTable& vtab, size_t irr) {
    const GroupRef& v = vtab.group();
    int p = v->group.p;
    std::vector<int> out;
    for (int gi : v->group.generators) {
        const Cyclotomic& val = vtab.irreducible(irr).value(size_t(v->class_of_element(gi)));
        int t = -1;
        for (int e = 0; e < p; ++e)
            if (reduce_to_field(Cyclotomic::root(static_cast<unsigned long>(p), e),
                                v->exponent) == val)
                t = e;
        if (t < 0) throw error("line_exponents: value is not a p-th root of unity");
        out.push_back(t);
    }
    return out;
}

// c_k of the restriction of x to the abelian subgroup, in the Chow ring
// F_2[x_1..x_n] of the subgroup (Chow grading, x_i dual to generator i).
inline F2Poly chern_restriction(const VirtualRep& x, const TableRef& vtab,
                                const F2GradedAlgebra& chow, int k) {
    VirtualRep res = restrict_virtual(x, vtab);
    size_t n = chow.gen_count();
    // total Chern series, truncated at degree k
    std::vector<F2Poly> series(size_t(k) + 1);
    series[0] = F2Poly::one(n);
    for (size_t i = 0; i < vtab->size(); ++i) {
        Int mult = res.coords()[i];
        if (mult < 0) throw error("chern_restriction: restriction is not a genuine character");
        std::vector<int> expo = line_exponents(*vtab, i);
        // first Chern class of the line: the sum of the dual-basis variables
        F2Poly cls;
        for (size_t j = 0; j < n; ++j)
            if (expo[j] % 2) {
                F2Mono m(n, 0);
                m[j] = 1;
                cls.monos.push_back(std::move(m));
            }
        cls.normalize();
        if (cls.is_zero()) continue;  // trivial line contributes nothing
        for (Int c = 0; c < mult; ++c) {
            std::vector<F2Poly> next(size_t(k) + 1);
            for (int d = 0; d <= k; ++d) {
                next[size_t(d)] = series[size_t(d)];
                if (d >= 1) next[size_t(d)] = next[size_t(d)] + series[size_t(d - 1)] * cls;
            }
            series = std::move(next);
        }
    }
    return series[size_t(k)];
}

// --- the cycle-class-map solver ----------------------------------------------

struct ChernGenerator {
    std::string rep_label;
    int index = 1;  // c_index(rep); Chow degree = index
    std::string name() const { return "c_" + std::to_string(index) + "(" + rep_label + ")"; }
};

struct CycleClassCandidate {
    std::vector<F2Poly> assignment;                            // per Chern generator
    std::vector<std::pair<std::string, std::string>> pairing;  // subgroup name -> slot id
};

struct CycleSolveProblem {
    TableRef table;
    CohomData cohom;
    std::vector<ChernGenerator> generators;
    // subgroup tables in deterministic order; names for the audit record
    std::vector<std::pair<std::string, TableRef>> subgroups;
    std::optional<std::pair<std::string, TableRef>> center;
    size_t enumeration_limit = 4096;  // cap on points per affine solution set
};

namespace detail {

struct AffineSet {
    // empty, or point + row space of directions
    bool empty = false;
    F2Vec point;
    F2Matrix directions;

    static AffineSet whole(size_t dim) {
        AffineSet s;
        s.point = F2Vec(dim);
        s.directions = F2Matrix(dim);
        for (size_t i = 0; i < dim; ++i) {
            F2Vec e(dim);
            e.set(i, true);
            s.directions.add_row(std::move(e));
        }
        return s;
    }

    // intersect with {x : M x = v}; rows of M indexed by constraint coordinates
    void constrain(const std::vector<F2Vec>& m_rows, const F2Vec& v) {
        if (empty) return;
        // substitute x = point + sum t_d dir_d: constraints on t
        size_t k = directions.rows();
        std::vector<F2Vec> sys;  // rows over t-coordinates, plus rhs bit
        for (size_t c = 0; c < m_rows.size(); ++c) {
            F2Vec row(k + 1);
            for (size_t d = 0; d < k; ++d) {
                // (M dir_d)_c
                bool bit = false;
                const F2Vec& dir = directions.data()[d];
                for (size_t i = 0; i < dir.n; ++i)
                    if (dir.get(i) && m_rows[c].get(i)) bit = !bit;
                row.set(d, bit);
            }
            bool rhs = v.get(c);
            for (size_t i = 0; i < point.n; ++i)
                if (point.get(i) && m_rows[c].get(i)) rhs = !rhs;
            row.set(k, rhs);
            sys.push_back(std::move(row));
        }
        // solve the affine system over t
        F2Matrix mat(k + 1);
        for (auto& r : sys) mat.add_row(std::move(r));
        mat.echelonize();
        std::vector<long> pivots;
        for (const F2Vec& r : mat.data()) {
            long p = r.lowest_set();
            if (p == long(k)) {  // 0 = 1
                empty = true;
                return;
            }
            pivots.push_back(p);
        }
        // particular solution for t, free coordinates zero
        F2Vec t(k);
        for (size_t r = 0; r < mat.rows(); ++r)
            if (mat.data()[r].get(k)) t.set(size_t(pivots[r]), true);
        // new point
        F2Vec np = point;
        for (size_t d = 0; d < k; ++d)
            if (t.get(d)) np ^= directions.data()[d];
        // new directions: homogeneous kernel of the t-system
        F2Matrix tsys(k);
        for (const F2Vec& r : mat.data()) {
            F2Vec hr(k);
            for (size_t d = 0; d < k; ++d)
                if (r.get(d)) hr.set(d, true);
            tsys.add_row(std::move(hr));
        }
        F2Matrix tker = tsys.nullspace();
        F2Matrix nd(point.n);
        for (const F2Vec& kv : tker.data()) {
            F2Vec dir(point.n);
            for (size_t d = 0; d < k; ++d)
                if (kv.get(d)) dir ^= directions.data()[d];
            if (!dir.is_zero()) nd.add_row(std::move(dir));
        }
        nd.echelonize();
        point = std::move(np);
        directions = std::move(nd);
    }

    size_t count() const { return empty ? 0 : (size_t(1) << directions.rows()); }

    std::vector<F2Vec> enumerate(size_t limit) const {
        if (empty) return {};
        if (count() > limit) throw error("cycle-map solver: solution set too large to enumerate");
        std::vector<F2Vec> out{point};
        for (const F2Vec& d : directions.data()) {
            size_t sz = out.size();
            for (size_t i = 0; i < sz; ++i) {
                F2Vec v = out[i];
                v ^= d;
                out.push_back(std::move(v));
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

// Coordinate re-orderings x_i -> x_{pi(i)}, rows as exponent masks.  The
// shipped slot data is coordinate-dual to the chosen subgroup bases up to
// ordering, so the identification search ranges over permutations; general
// basis changes would admit assignments no group isomorphism induces.
inline const std::vector<std::vector<unsigned>>& permutation_matrices(int rank) {
    static std::map<int, std::vector<std::vector<unsigned>>> cache;
    auto it = cache.find(rank);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<unsigned>> out;
    std::vector<int> perm(static_cast<size_t>(rank));
    for (int i = 0; i < rank; ++i) perm[size_t(i)] = i;
    do {
        std::vector<unsigned> rows(static_cast<size_t>(rank));
        for (int i = 0; i < rank; ++i) rows[size_t(i)] = 1u << perm[size_t(i)];
        out.push_back(std::move(rows));
    } while (std::next_permutation(perm.begin(), perm.end()));
    cache[rank] = out;
    return cache[rank];
}

// apply the basis change x_i -> sum_j m[i][j] x_j to a Chow polynomial
inline F2Poly apply_basis_change(const F2Poly& p, const std::vector<unsigned>& m, size_t rank) {
    F2Poly out;
    for (const F2Mono& mono : p.monos) {
        F2Poly term;
        term.monos.push_back(F2Mono(rank, 0));
        for (size_t i = 0; i < rank; ++i) {
            for (int e = 0; e < mono[i]; ++e) {
                F2Poly lin;
                for (size_t j = 0; j < rank; ++j)
                    if (m[i] & (1u << j)) {
                        F2Mono lm(rank, 0);
                        lm[j] = 1;
                        lin.monos.push_back(std::move(lm));
                    }
                lin.normalize();
                term = term * lin;
            }
        }
        out = out + term;
    }
    return out;
}

// squaring substitution: Chow x_j -> c_1_j^2
inline F2Poly square_to_cohomology(const F2Poly& chow_poly) {
    F2Poly out;
    for (const F2Mono& m : chow_poly.monos) {
        F2Mono doubled(m.size(), 0);
        for (size_t i = 0; i < m.size(); ++i) doubled[i] = 2 * m[i];
        out.monos.push_back(std::move(doubled));
    }
    return out.normalize();
}

}  // namespace detail

inline std::vector<CycleClassCandidate> solve_cycle_map(const CycleSolveProblem& prob) {
    const CohomData& cohom = prob.cohom;
    const auto& alg = *cohom.algebra;
    size_t ngen = prob.generators.size();

    // resolve generator reps and Chow degrees
    std::vector<VirtualRep> reps;
    std::vector<int> degrees;
    for (const auto& g : prob.generators) {
        reps.push_back(rep_by_label(prob.table, g.rep_label));
        degrees.push_back(g.index);
    }

    // per-degree restriction matrices of the big algebra onto each slot
    struct SlotCtx {
        const CohomSlot* slot;
        std::map<int, std::vector<F2Vec>> res_rows;  // cohomology degree -> matrix rows
    };
    auto restriction_rows = [&](const CohomSlot& slot, int d) {
        AlgebraHom hom(cohom.algebra, slot.target, slot.images);
        // rows indexed by target coordinates, columns by source quotient basis
        const auto& src_basis = alg.quotient_basis(d);
        size_t tdim = slot.target->quotient_dim(d);
        std::vector<F2Vec> rows(tdim, F2Vec(src_basis.size()));
        for (size_t s = 0; s < src_basis.size(); ++s) {
            F2Vec img = slot.target->quotient_coords(hom.apply(F2Poly::monomial(src_basis[s])), d);
            for (size_t t = 0; t < tdim; ++t)
                if (img.get(t)) rows[t].set(s, true);
        }
        return rows;
    };

    // chow restriction of each generator to each subgroup
    struct SubgroupCtx {
        std::string name;
        TableRef table;
        int rank;
        std::vector<F2Poly> chow_res;  // per generator, in F_2[x_1..x_rank]
    };
    std::vector<SubgroupCtx> subs;
    auto build_sub = [&](const std::string& name, const TableRef& vt) {
        SubgroupCtx ctx;
        ctx.name = name;
        ctx.table = vt;
        ctx.rank = int(vt->group()->group.generators.size());
        F2GradedAlgebra chow = chow_ring_of_elementary_abelian(ctx.rank,
                                                               F2GradedAlgebra::Grading::Chow);
        for (size_t g = 0; g < ngen; ++g)
            ctx.chow_res.push_back(chern_restriction(reps[g], vt, chow, degrees[g]));
        return ctx;
    };
    if (worker_threads() > 1) {
        // independent per subgroup; joined in listed order, so results are
        // identical to the sequential run
        std::vector<std::future<SubgroupCtx>> futures;
        for (const auto& [name, vt] : prob.subgroups)
            futures.push_back(std::async(std::launch::async, build_sub, name, vt));
        for (auto& f : futures) subs.push_back(f.get());
    } else {
        for (const auto& [name, vt] : prob.subgroups) subs.push_back(build_sub(name, vt));
    }
    std::optional<SubgroupCtx> center_sub;
    if (prob.center) center_sub = build_sub(prob.center->first, prob.center->second);
    if (bool(center_sub) != bool(cohom.center))
        throw error("solve_cycle_map: center slot and center subgroup must come together");
    {
        // rank profile must match between slots and subgroup classes
        std::multiset<int> a, b;
        for (const auto& s : cohom.slots) a.insert(s.rank);
        for (const auto& s : subs) b.insert(s.rank);
        if (a != b) throw error("solve_cycle_map: slot ranks do not match the subgroup ranks");
        if (center_sub && center_sub->rank != cohom.center->rank)
            throw error("solve_cycle_map: center rank mismatch");
    }

    // process: center first (forced pairing), then slots in listed order
    struct Step {
        const CohomSlot* slot;
        std::vector<size_t> sub_choices;  // indices into subs; center flagged by npos
        bool is_center = false;
    };
    std::vector<Step> steps;
    if (cohom.center) steps.push_back({&*cohom.center, {}, true});
    for (const auto& s : cohom.slots) {
        Step st{&s, {}, false};
        for (size_t i = 0; i < subs.size(); ++i)
            if (subs[i].rank == s.rank) st.sub_choices.push_back(i);
        steps.push_back(st);
    }

    std::vector<CycleClassCandidate> found;
    std::vector<detail::AffineSet> state;
    for (size_t g = 0; g < ngen; ++g)
        state.push_back(detail::AffineSet::whole(alg.quotient_dim(2 * degrees[g])));
    std::vector<char> used(subs.size(), 0);
    std::vector<std::pair<std::string, std::string>> pairing;

    std::function<void(size_t)> dfs = [&](size_t step_idx) {
        if (step_idx == steps.size()) {
            // enumerate all assignments remaining
            std::vector<std::vector<F2Vec>> points;
            size_t total = 1;
            for (const auto& s : state) {
                points.push_back(s.enumerate(prob.enumeration_limit));
                total *= points.back().size();
                if (points.back().empty()) return;
            }
            if (total > prob.enumeration_limit)
                throw error("cycle-map solver: candidate space too large");
            std::vector<size_t> pick(ngen, 0);
            for (;;) {
                CycleClassCandidate cand;
                cand.pairing = pairing;
                for (size_t g = 0; g < ngen; ++g)
                    cand.assignment.push_back(
                        alg.from_quotient_vec(points[g][pick[g]], 2 * degrees[g]));
                found.push_back(std::move(cand));
                size_t g = 0;
                while (g < ngen && ++pick[g] == points[g].size()) pick[g++] = 0;
                if (g == ngen) break;
            }
            return;
        }
        const Step& st = steps[step_idx];
        // precompute restriction rows per needed degree
        std::map<int, std::vector<F2Vec>> rows;
        for (size_t g = 0; g < ngen; ++g) {
            int d = 2 * degrees[g];
            if (!rows.count(d)) rows[d] = restriction_rows(*st.slot, d);
        }
        auto process_sub = [&](const SubgroupCtx& sub, bool mark, size_t sub_idx) {
            // deduplicate basis changes by the induced required-value tuple
            std::set<std::vector<F2Vec>> seen;
            for (const auto& iota : detail::permutation_matrices(sub.rank)) {
                std::vector<F2Vec> required;
                for (size_t g = 0; g < ngen; ++g) {
                    F2Poly moved =
                        detail::apply_basis_change(sub.chow_res[g], iota, size_t(sub.rank));
                    F2Poly squared = detail::square_to_cohomology(moved);
                    required.push_back(st.slot->target->quotient_coords(squared, 2 * degrees[g]));
                }
                if (!seen.insert(required).second) continue;
                // branch: constrain each generator
                std::vector<detail::AffineSet> saved = state;
                bool ok = true;
                for (size_t g = 0; g < ngen && ok; ++g) {
                    state[g].constrain(rows[2 * degrees[g]], required[g]);
                    if (state[g].empty) ok = false;
                }
                if (ok) {
                    if (mark) used[sub_idx] = 1;
                    pairing.emplace_back(sub.name, st.slot->id);
                    dfs(step_idx + 1);
                    pairing.pop_back();
                    if (mark) used[sub_idx] = 0;
                }
                state = std::move(saved);
            }
        };
        if (st.is_center) {
            process_sub(*center_sub, false, 0);
        } else {
            for (size_t i : st.sub_choices) {
                if (used[i]) continue;
                process_sub(subs[i], true, i);
            }
        }
    };
    dfs(0);

    // deduplicate identical assignments (different pairings may induce the
    // same map); deterministic order by the assignment encoding
    auto key = [&](const CycleClassCandidate& c) {
        std::ostringstream os;
        for (const auto& p : c.assignment) os << alg.poly_str(p) << ";";
        return os.str();
    };
    std::map<std::string, CycleClassCandidate> unique;
    for (auto& c : found) unique.emplace(key(c), std::move(c));
    std::vector<CycleClassCandidate> out;
    for (auto& [k, c] : unique) out.push_back(std::move(c));
    return out;
}

// certificate check: every assigned image restricts on every paired slot to
// the squared Chern restriction under some basis identification
inline bool candidate_sound(const CycleSolveProblem& prob, const CycleClassCandidate& cand) {
    for (const auto& [sub_name, slot_id] : cand.pairing) {
        const CohomSlot* slot = nullptr;
        for (const auto& s : prob.cohom.slots)
            if (s.id == slot_id) slot = &s;
        if (!slot && prob.cohom.center && slot_id == "center") slot = &*prob.cohom.center;
        if (!slot) return false;
        TableRef vt;
        for (const auto& [n, t] : prob.subgroups)
            if (n == sub_name) vt = t;
        if (!vt && prob.center && prob.center->first == sub_name) vt = prob.center->second;
        if (!vt) return false;
        AlgebraHom hom(prob.cohom.algebra, slot->target, slot->images);
        int rank = int(vt->group()->group.generators.size());
        F2GradedAlgebra chow = chow_ring_of_elementary_abelian(rank,
                                                               F2GradedAlgebra::Grading::Chow);
        bool some_iota = false;
        for (const auto& iota : detail::permutation_matrices(rank)) {
            bool all = true;
            for (size_t g = 0; g < prob.generators.size(); ++g) {
                VirtualRep rep = rep_by_label(prob.table, prob.generators[g].rep_label);
                F2Poly res = chern_restriction(rep, vt, chow, prob.generators[g].index);
                F2Poly expected = detail::square_to_cohomology(
                    detail::apply_basis_change(res, iota, size_t(rank)));
                if (!(slot->target->nf(hom.apply(cand.assignment[g]) + expected).is_zero())) {
                    all = false;
                    break;
                }
            }
            if (all) {
                some_iota = true;
                break;
            }
        }
        if (!some_iota) return false;
    }
    return true;
}

// Relations of the mod-2 Chern subring: preimage of zero under the candidate
// map from the free algebra on the Chern generators.
inline std::map<int, std::vector<F2Poly>> kernel_mod2(const CohomData& cohom,
                                                      const std::vector<ChernGenerator>& gens,
                                                      const CycleClassCandidate& cand, int bound,
                                                      std::shared_ptr<F2GradedAlgebra>* chern_free =
                                                          nullptr) {
    std::vector<std::pair<std::string, int>> free_gens;
    for (const auto& g : gens) free_gens.emplace_back(g.name(), g.index);
    auto src = std::make_shared<F2GradedAlgebra>(free_gens, std::vector<F2Poly>{},
                                                 F2GradedAlgebra::Grading::Chow,
                                                 std::max(bound, 12));
    AlgebraHom f(src, cohom.algebra, cand.assignment);
    if (chern_free) *chern_free = src;
    return subalgebra_relations(f, bound);
}

}  // namespace workbench
