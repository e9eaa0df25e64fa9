#include "ehrhart/report.hpp"

#include <algorithm>

namespace ehrhart {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::hypothesis_not_met: return "hypothesis-not-met";
    }
    return "fail";
}

void Report::add(Json index, Rat lhs, Rat rhs, bool pass, Json extra) {
    instances.push_back(Instance{std::move(index), std::move(lhs), std::move(rhs), pass, std::move(extra)});
}

Report& Report::conclude() {
    verdict = failures() == 0 ? Verdict::pass : Verdict::fail;
    return *this;
}

std::size_t Report::failures() const {
    return static_cast<std::size_t>(
        std::count_if(instances.begin(), instances.end(), [](const Instance& i) { return !i.pass; }));
}

Json rat_json(const Rat& r) { return r.get_str(); }

Json rat_array(const RatVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

Json int_array(const IntVec& v) {
    Json a = Json::array();
    for (const auto& x : v) {
        if (x.fits_slong_p())
            a.push_back(x.get_si());
        else
            a.push_back(x.get_str());
    }
    return a;
}

Json to_json(const Report& r) {
    Json j;
    j["theorem"] = r.theorem;
    j["verdict"] = to_string(r.verdict);
    Json inst = Json::array();
    for (const auto& i : r.instances) {
        Json o;
        o["index"] = i.index;
        o["lhs"] = rat_json(i.lhs);
        o["rhs"] = rat_json(i.rhs);
        o["pass"] = i.pass;
        for (auto it = i.extra.begin(); it != i.extra.end(); ++it) o[it.key()] = it.value();
        inst.push_back(std::move(o));
    }
    j["instances"] = std::move(inst);
    if (!r.details.empty()) j["details"] = r.details;
    return j;
}

Verdict combine(Verdict a, Verdict b) {
    if (a == Verdict::fail || b == Verdict::fail) return Verdict::fail;
    if (a == Verdict::hypothesis_not_met || b == Verdict::hypothesis_not_met) return Verdict::hypothesis_not_met;
    return Verdict::pass;
}

}  // namespace ehrhart
