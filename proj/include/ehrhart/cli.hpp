#pragma once

// Command dispatch behind the ehrhart command-line tool.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "ehrhart/report.hpp"

namespace ehrhart {

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    long max_n = 5;
    int trials = 10;
    std::uint64_t seed = 20100131;
    std::string flavor = "vertices";  // or "all"
    std::string out;                  // empty: stdout
    int n = 3;
    long rmax = -1;                   // semimagic table length; -1 for the default
    std::vector<std::string> x0;      // specialization points
    std::string corpus;               // empty: default_corpus_dir()
    std::size_t random_count = 20;
};

struct RunResult {
    int exit_code = 0;
    Json output;
};

std::vector<std::string> commands();

/// Runs one command. Errors raised by the library become exit code 1 with an
/// {"error": ..., "kind": ...} document.
RunResult run(const RunConfig& config);

/// run() plus emission to config.out or `out`; returns the exit code.
int run_and_emit(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ehrhart
