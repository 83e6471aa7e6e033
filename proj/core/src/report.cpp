#include "gradix/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace gradix {

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

std::size_t Report::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return !c.pass; }));
}

void Report::add(std::string name, std::string expected, std::string got) {
    CheckRecord r;
    r.pass = expected == got;
    r.name = std::move(name);
    r.expected = std::move(expected);
    r.got = std::move(got);
    checks.push_back(std::move(r));
}

void Report::add_bool(std::string name, bool expected, bool got) {
    add(std::move(name), expected ? "true" : "false", got ? "true" : "false");
}

std::string Report::to_table() const {
    std::string out = "== " + title;
    if (seed) out += " (seed " + std::to_string(seed) + ")";
    out += " ==\n";
    for (const auto& c : checks) {
        out += c.pass ? "[PASS] " : "[FAIL] ";
        out += c.name + ": expected " + c.expected + ", got " + c.got + "\n";
    }
    out += std::to_string(checks.size() - failures()) + "/" + std::to_string(checks.size()) +
           " checks passed\n";
    return out;
}

std::string Report::to_json() const {
    nlohmann::json j;
    j["title"] = title;
    j["seed"] = seed;
    j["pass"] = all_pass();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
        j["checks"].push_back(
            {{"name", c.name}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass}});
    return j.dump(2);
}

}  // namespace gradix
