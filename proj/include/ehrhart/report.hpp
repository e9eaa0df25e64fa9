#pragma once

// Pass/fail reports emitted by every theorem check.
//
// JSON shape:
//   { "theorem": string,
//     "verdict": "pass" | "fail" | "hypothesis-not-met",
//     "instances": [ { "index": ..., "lhs": rat, "rhs": rat, "pass": bool, ... } ],
//     "details": { ... } }

#include <string>
#include <vector>

#include <json.hpp>

#include "ehrhart/rational.hpp"

namespace ehrhart {

using Json = nlohmann::ordered_json;

enum class Verdict { pass, fail, hypothesis_not_met };

std::string to_string(Verdict v);

struct Instance {
    Json index;
    Rat lhs;
    Rat rhs;
    bool pass = false;
    Json extra = Json::object();  // merged into the instance object
};

struct Report {
    std::string theorem;
    std::vector<Instance> instances;
    Verdict verdict = Verdict::pass;
    Json details = Json::object();

    void add(Json index, Rat lhs, Rat rhs, bool pass, Json extra = Json::object());

    /// Sets verdict to fail if any instance failed, pass otherwise.
    Report& conclude();

    bool ok() const { return verdict != Verdict::fail; }
    std::size_t failures() const;
};

Json rat_json(const Rat& r);
Json rat_array(const RatVec& v);
Json int_array(const IntVec& v);

Json to_json(const Report& r);

/// Worst verdict: fail beats hypothesis-not-met beats pass.
Verdict combine(Verdict a, Verdict b);

}  // namespace ehrhart
