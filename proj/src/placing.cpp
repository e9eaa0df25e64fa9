#include "ehrhart/placing.hpp"

#include <algorithm>
#include <map>

#include "ehrhart/errors.hpp"
#include "ehrhart/linalg.hpp"

namespace ehrhart {

std::vector<IntVec> span_complement(const std::vector<IntVec>& vectors, std::size_t ambient) {
    RatMatrix rows;
    for (const auto& v : vectors) rows.push_back(to_rat(v));
    std::vector<IntVec> out;
    for (const auto& b : nullspace(rows, ambient)) out.push_back(primitive(b));
    return out;
}

IntVec facet_normal(const std::vector<IntVec>& vectors, const Cell& cell, std::size_t drop,
                    const std::vector<IntVec>& complement) {
    const std::size_t ambient = vectors[cell.front()].size();
    RatMatrix rows;
    for (std::size_t i = 0; i < cell.size(); ++i)
        if (i != drop) rows.push_back(to_rat(vectors[cell[i]]));
    for (const auto& c : complement) rows.push_back(to_rat(c));
    const auto ns = nullspace(rows, ambient);
    if (ns.size() != 1) throw InvalidArgument("facet_normal: cell vectors are not independent");
    IntVec a = primitive(ns.front());
    if (dot(a, vectors[cell[drop]]) < 0)
        for (auto& x : a) x = -x;
    return a;
}

std::vector<Cell> place_vectors(const std::vector<IntVec>& vectors) {
    std::vector<Cell> cells;
    std::vector<IntVec> placed;
    std::vector<IntVec> complement;
    if (vectors.empty()) return cells;
    const std::size_t ambient = vectors.front().size();

    for (std::size_t i = 0; i < vectors.size(); ++i) {
        const IntVec& v = vectors[i];
        if (std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; }))
            throw InvalidArgument("place_vectors: zero vector");
        if (cells.empty()) {
            cells.push_back({i});
            placed.push_back(v);
            complement = span_complement(placed, ambient);
            continue;
        }
        const bool outside_span =
            std::any_of(complement.begin(), complement.end(), [&](const IntVec& c) { return dot(c, v) != 0; });
        if (outside_span) {
            for (auto& c : cells) c.push_back(i);  // i exceeds every earlier index, order stays sorted
            placed.push_back(v);
            complement = span_complement(placed, ambient);
            continue;
        }
        // Boundary facets: facets that belong to exactly one cell.
        std::map<Cell, std::pair<int, std::pair<std::size_t, std::size_t>>> facet_owner;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            for (std::size_t drop = 0; drop < cells[c].size(); ++drop) {
                Cell f;
                for (std::size_t j = 0; j < cells[c].size(); ++j)
                    if (j != drop) f.push_back(cells[c][j]);
                auto& entry = facet_owner[f];
                ++entry.first;
                entry.second = {c, drop};
            }
        }
        std::vector<Cell> added;
        for (const auto& [facet, entry] : facet_owner) {
            if (entry.first != 1) continue;
            const auto [c, drop] = entry.second;
            const IntVec a = facet_normal(vectors, cells[c], drop, complement);
            if (dot(a, v) < 0) {
                Cell n = facet;
                n.push_back(i);
                added.push_back(std::move(n));
            }
        }
        for (auto& n : added) cells.push_back(std::move(n));
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

}  // namespace ehrhart
