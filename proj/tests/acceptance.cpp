// Acceptance suite: runs every pinned criterion and prints one line per item
// in the machine-readable protocol id|verdict|computed|expected.
// Exit status is nonzero when any non-informational item fails.

#include "workbench/verify.hpp"

#include <iostream>

int main(int argc, char** argv) {
    workbench::PipelineConfig cfg;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--seed" && i + 1 < argc) cfg.seed = unsigned(std::stoul(argv[++i]));
        if (arg == "--bound" && i + 1 < argc) cfg.degree_bound = std::stoi(argv[++i]);
    }
    workbench::Workbench wb;
    std::vector<workbench::ReportItem> items;
    try {
        items = workbench::cmd_verify(wb, cfg);
    } catch (const std::exception& e) {
        std::cout << "verify-aborted|FAIL|" << e.what() << "|no exception" << std::endl;
        return 2;
    }
    int failed = 0, passed = 0, info = 0;
    for (const auto& item : items) {
        std::cout << item.line() << "\n";
        if (item.info)
            ++info;
        else if (item.pass)
            ++passed;
        else
            ++failed;
    }
    std::cout << passed << " passed, " << failed << " failed, " << info
              << " informational notes" << std::endl;
    return failed == 0 ? 0 : 1;
}
