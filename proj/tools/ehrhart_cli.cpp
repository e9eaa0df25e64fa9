// ehrhart: lattice-point counting, Ehrhart data and theorem checks from the command line.
//
//   ehrhart ehrhart square.json
//   ehrhart semimagic --n 3 --rmax 5
//   ehrhart corpus-verify --seed 7 --out report.json

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ehrhart/cli.hpp"

int main(int argc, char** argv) {
    ehrhart::RunConfig cfg;
    CLI::App app{"Lattice-point counting and Ehrhart theory checks"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub, int inputs) {
        if (inputs > 0) sub->add_option("inputs", cfg.inputs, "polytope or cone JSON file(s)")->expected(inputs)->required();
        sub->add_option("--out", cfg.out, "write the JSON report to this file");
        sub->add_option("--max-n", cfg.max_n, "largest dilate checked")->capture_default_str();
        sub->add_option("--trials", cfg.trials, "random evaluation points per cone")->capture_default_str();
        sub->add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
        sub->add_option("--flavor", cfg.flavor, "triangulation points: vertices | all")->capture_default_str();
        sub->add_option("--n", cfg.n, "semimagic square size")->capture_default_str();
        sub->add_option("--rmax", cfg.rmax, "largest r in the semimagic table");
        sub->add_option("--x0", cfg.x0, "comma-separated rational specialization points")->delimiter(',');
        sub->add_option("--corpus", cfg.corpus, "corpus directory (default $EHRHART_CORPUS or the source tree)");
        sub->add_option("--random", cfg.random_count, "random lattice polytopes in corpus-verify")->capture_default_str();
    };

    struct Spec {
        const char* name;
        int inputs;
        const char* help;
    };
    const std::vector<Spec> specs{
        {"count", 1, "closed and interior counts of nP for n = 0..max-n"},
        {"ehrhart", 1, "Ehrhart (quasi)polynomial, interior polynomial and h*"},
        {"hstar", 1, "h*-vector with degree, codegree and the counts used"},
        {"reciprocity", 1, "ehr(-n) against signed interior counts"},
        {"cone-reciprocity", 1, "generating-function reciprocity of a cone at random points"},
        {"specialize", 1, "cone series at (1,...,1,x0) against the Ehrhart series"},
        {"decompose", 1, "h* assembled from a placing triangulation"},
        {"triangulate", 1, "placing triangulation, f-vector and h-polynomial"},
        {"inequalities", 1, "linear inequality families on h*"},
        {"hibi", 1, "palindromic h* versus a reflexive dilate"},
        {"ab", 1, "a/b decomposition of h*"},
        {"monotonic", 2, "h* of an inner polytope bounded by the outer one"},
        {"semimagic", 0, "semimagic square counts and their polynomial"},
        {"corpus-verify", 0, "every check over the corpus and random polytopes"},
    };
    for (const auto& spec : specs) {
        auto* sub = app.add_subcommand(spec.name, spec.help);
        common(sub, spec.inputs);
        sub->callback([&cfg, name = std::string(spec.name)] { cfg.command = name; });
    }

    CLI11_PARSE(app, argc, argv);

    return ehrhart::run_and_emit(cfg, std::cout, std::cerr);
}
