// Command-line interface to the computational workbench: group reports,
// character tables, gamma-filtration graded pieces, the three Chow-ring
// computations, cycle-class-map solving, detection reports and the full
// verification suite.

#include "workbench/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace workbench;

namespace {

void print_group_info(Workbench& wb, const std::string& key) {
    const FiniteMatrixGroup& g = wb.group(key);
    GroupRef data = wb.group_data(key);
    std::cout << "group " << g.name << "  (key " << key << ")\n";
    std::cout << "order " << g.order() << ", exponent " << data->exponent << ", "
              << data->class_count() << " conjugacy classes\n";
    std::cout << "commuting pairs " << count_commuting_pairs(g) << "\n";
    std::cout << "center p-rank " << center_p_rank(g) << "\n";
    std::cout << "generators:\n";
    for (int gi : g.generators) std::cout << g.elements[size_t(gi)].str() << "\n";
    std::cout << "text format:\n" << group_to_text(g);
}

void print_gr_gamma(Workbench& wb, const std::string& key, int degree) {
    GammaFiltration& gamma = wb.gamma(key);
    TableRef t = wb.table(key);
    GradedPiece piece = gamma.graded_piece(degree);
    std::cout << "gr^" << degree << " of " << wb.group(key).name << ":\n";
    std::cout << "invariant factors:";
    if (piece.invariants.empty()) std::cout << " (trivial)";
    for (const Int& d : piece.invariants) std::cout << " " << d.get_str();
    std::cout << "\n";
    // Chern monomial coordinates over the quotient
    std::vector<size_t> gens;
    for (size_t i = 0; i < t->size(); ++i)
        if (t->degree(i) > 1 || !VirtualRep::basis(t, i).big_C(1).is_zero()) gens.push_back(i);
    std::cout << "labelled Chern monomial classes (coordinates over the cyclic factors):\n";
    for (const ChernMonomial& mono : gamma.chern_monomials(gens, degree)) {
        IntVec coords = piece.quotient.reduce(gamma.base_coordinates(gamma.monomial_lift(mono),
                                                                     degree));
        std::cout << "  " << mono.str(*t) << " -> (";
        bool first = true;
        for (size_t j = 0; j < coords.size(); ++j) {
            if (piece.quotient.diag[j] == 1) continue;
            std::cout << (first ? "" : ",") << coords[j].get_str();
            first = false;
        }
        std::cout << ")  order " << gamma.chern_order(mono).get_str() << "\n";
    }
    auto monos = gamma.chern_monomials(gens, degree);
    std::cout << "integer relation basis (rows = vanishing combinations, Hermite form):\n";
    IntMat integral = gamma.chern_relations_integer(monos, degree);
    for (const IntVec& row : integral) {
        std::cout << "  ";
        for (size_t j = 0; j < row.size(); ++j) std::cout << row[j].get_str() << (j + 1 < row.size() ? " " : "");
        std::cout << "\n";
    }
    bool all2 = true;
    for (const auto& mono : monos) {
        Int ord = gamma.chern_order(mono);
        if (ord != 1 && ord != 2) all2 = false;
    }
    if (all2) {
        F2Matrix mod2 = gamma.chern_relations_mod2(monos, degree);
        mod2.echelonize();
        std::cout << "mod-2 relation basis (row echelon form):\n" << mod2.str();
    }
}

void print_detect(Workbench& wb, const std::string& key) {
    DetectionReport rep = cmd_detect(wb, key);
    std::cout << "faithful degree " << rep.min_faithful << ", center p-rank " << rep.center_rank
              << ", detection bound " << rep.bound << "\n";
    std::cout << "elementary abelian subgroups and centralizer types:\n";
    for (const auto& row : rep.rows)
        std::cout << "  V [" << row.subgroup << "] order " << row.subgroup_order
                  << "  C_G(V) order " << row.centralizer_order << "  type " << row.type << "\n";
}

void print_cycle_map(Workbench& wb, const std::string& group_key, const std::string& cohom_key,
                     const PipelineConfig& cfg) {
    CycleSolveProblem prob;
    if (group_key == "H" || group_key == "u3_2") prob = pipeline_detail::problem_for_H(wb);
    else if (group_key == "L" || group_key == "l32_27") prob = pipeline_detail::problem_for_L(wb);
    else if (group_key == "G" || group_key == "g64_138" || group_key == "u4_2")
        prob = pipeline_detail::problem_for_G(wb);
    else
        throw error("cycle-map supports the keys H, L and G (g64_138)");
    if (!cohom_key.empty()) prob.cohom = load_cohom(cohom_key);
    auto cands = solve_cycle_map(prob);
    std::cout << cands.size() << " candidate(s)\n";
    for (size_t c = 0; c < cands.size(); ++c) {
        std::cout << "candidate " << (c + 1) << " (pairing:";
        for (auto& [sub, slot] : cands[c].pairing) std::cout << " " << sub << "->" << slot;
        std::cout << ")\n";
        for (size_t i = 0; i < prob.generators.size(); ++i)
            std::cout << "  " << prob.generators[i].name() << " -> "
                      << prob.cohom.algebra->poly_str(cands[c].assignment[i]) << "\n";
    }
    (void)cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational workbench for Chow rings of small 2-group classifying spaces"};
    app.require_subcommand(1);
    PipelineConfig cfg;

    auto* group_cmd = app.add_subcommand("group", "group construction and reports");
    auto* info_cmd = group_cmd->add_subcommand("info", "order, classes, generators");
    std::string key;
    info_cmd->add_option("key", key, Workbench::registry_help())->required();

    auto* table_cmd = app.add_subcommand("table", "character table dump");
    std::string table_key;
    table_cmd->add_option("key", table_key)->required();

    auto* gr_cmd = app.add_subcommand("gr-gamma", "gamma-filtration graded piece");
    std::string gr_key;
    int gr_degree = 1;
    gr_cmd->add_option("key", gr_key)->required();
    gr_cmd->add_option("--degree", gr_degree, "filtration degree")->required();

    auto* chow_cmd = app.add_subcommand("chow", "Chow-ring presentation of H, L or G");
    std::string chow_target;
    chow_cmd->add_option("target", chow_target, "H | L | G")->required();

    auto* cycle_cmd = app.add_subcommand("cycle-map", "solve for cycle-class-map candidates");
    std::string cycle_group, cycle_cohom;
    cycle_cmd->add_option("--group", cycle_group, "H | L | g64_138")->required();
    cycle_cmd->add_option("--cohom", cycle_cohom,
                          "builtin:8#3 | builtin:32#27 | builtin:64#138 or a data file path");

    auto* detect_cmd = app.add_subcommand("detect", "detection report");
    std::string detect_key;
    detect_cmd->add_option("key", detect_key)->required();

    auto* verify_cmd = app.add_subcommand("verify", "run the full verification suite");
    verify_cmd->add_option("--seed", cfg.seed, "seed for randomized property checks only");
    verify_cmd->add_option("--bound", cfg.degree_bound, "presentation degree bound");
    verify_cmd->add_option("--h3-rank", cfg.h3_rank, "configured rank of H^3 (degree-3 balance)");
    bool swap_choice = false;
    verify_cmd->add_flag("--swap-choice", swap_choice,
                         "take the mirror generator assignment for the order-64 cycle map");

    CLI11_PARSE(app, argc, argv);
    cfg.swap_generators = swap_choice;

    Workbench wb;
    try {
        if (*info_cmd) print_group_info(wb, key);
        if (*table_cmd) std::cout << wb.table(table_key)->dump();
        if (*gr_cmd) print_gr_gamma(wb, gr_key, gr_degree);
        if (*chow_cmd) {
            ChowResult result;
            if (chow_target == "H")
                result = cmd_chow_H(wb);
            else if (chow_target == "L" || chow_target == "G")
                result = cmd_chow_mod2(wb, chow_target[0], cfg);
            else
                throw error("chow target must be H, L or G");
            if (chow_target == "G")
                for (auto& item : degree3_bookkeeping(wb, cfg)) result.checks.push_back(item);
            for (const auto& item : result.checks) std::cout << item.line() << "\n";
            std::cout << "presentation:\n" << result.presentation << "\n";
            for (const auto& item : result.checks)
                if (!item.pass && !item.info) return 1;
        }
        if (*cycle_cmd) print_cycle_map(wb, cycle_group, cycle_cohom, cfg);
        if (*detect_cmd) print_detect(wb, detect_key);
        if (*verify_cmd) {
            auto items = cmd_verify(wb, cfg);
            int failed = 0;
            for (const auto& item : items) {
                std::cout << item.line() << "\n";
                if (!item.pass && !item.info) ++failed;
            }
            std::cout << (failed ? "FAIL" : "PASS") << " (" << items.size() << " items)\n";
            return failed ? 1 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
