#include "ehrhart/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

#include "ehrhart/errors.hpp"

#ifndef EHRHART_SOURCE_CORPUS
#define EHRHART_SOURCE_CORPUS "corpus"
#endif

namespace ehrhart {

namespace {

std::vector<std::filesystem::path> json_files(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> out;
    if (!std::filesystem::is_directory(dir)) return out;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json") out.push_back(entry.path());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::filesystem::path default_corpus_dir() {
    if (const char* env = std::getenv("EHRHART_CORPUS"); env && *env) return env;
    return EHRHART_SOURCE_CORPUS;
}

Corpus load_corpus(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw InvalidArgument("corpus directory not found: " + dir.string());
    Corpus c;
    for (const auto& f : json_files(dir / "polytopes")) c.polytopes.push_back(read_polytope(f));
    for (const auto& f : json_files(dir / "cones")) c.cones.push_back(read_cone(f));
    return c;
}

std::vector<RationalPolytope> random_lattice_polytopes(std::size_t count, std::uint64_t seed, long max_dim) {
    std::mt19937_64 rng(seed);
    std::vector<RationalPolytope> out;
    for (std::size_t i = 0; i < count; ++i) {
        const long dim = 1 + static_cast<long>(i) % max_dim;
        while (true) {
            const std::size_t npoints = static_cast<std::size_t>(dim) + 1 + rng() % 3;
            std::vector<IntVec> pts;
            for (std::size_t k = 0; k < npoints; ++k) {
                IntVec v;
                for (long j = 0; j < dim; ++j) v.push_back(static_cast<long>(rng() % 4) - 1);
                pts.push_back(std::move(v));
            }
            RationalPolytope p = normalize(pts, "random-" + std::to_string(i));
            if (p.dim() == dim) {
                out.push_back(std::move(p));
                break;
            }
        }
    }
    return out;
}

}  // namespace ehrhart
