#include "confobs/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace confobs {

using json = nlohmann::ordered_json;

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Paper: return "paper";
        case Provenance::Trivial: return "trivial";
        case Provenance::Derived: return "derived";
    }
    return "derived";
}

Provenance parse_provenance(const std::string& s) {
    if (s == "paper") return Provenance::Paper;
    if (s == "trivial") return Provenance::Trivial;
    if (s == "derived") return Provenance::Derived;
    throw std::invalid_argument("unknown provenance: " + s);
}

void Report::expect(std::string name, std::string expected, std::string computed, Provenance p) {
    const bool pass = expected == computed;
    checks.push_back({std::move(name), std::move(expected), std::move(computed), pass, p});
}

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string Report::to_json() const {
    json j;
    j["version"] = version;
    j["command"] = command;
    json params_json = json::object();
    for (const auto& [k, v] : params) params_json[k] = v;
    j["params"] = params_json;
    j["checks"] = json::array();
    for (const auto& c : checks)
        j["checks"].push_back({{"name", c.name},
                               {"expected", c.expected},
                               {"computed", c.computed},
                               {"pass", c.pass},
                               {"provenance", to_string(c.provenance)}});
    j["verdict"] = verdict;
    return j.dump(2) + "\n";
}

Report Report::from_json(const std::string& text) {
    const json j = json::parse(text);
    Report r;
    r.version = j.at("version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) r.params.emplace_back(k, v.get<std::string>());
    for (const auto& c : j.at("checks"))
        r.checks.push_back({c.at("name").get<std::string>(), c.at("expected").get<std::string>(),
                            c.at("computed").get<std::string>(), c.at("pass").get<bool>(),
                            parse_provenance(c.at("provenance").get<std::string>())});
    r.verdict = j.at("verdict").get<std::string>();
    return r;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "confobs " << version << "  " << command;
    for (const auto& [k, v] : params) os << "  " << k << "=" << v;
    os << "\n";
    for (const auto& c : checks) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "  (" << to_string(c.provenance) << ")\n";
        os << "    expected: " << c.expected << "\n";
        if (c.computed != c.expected) os << "    computed: " << c.computed << "\n";
    }
    os << "verdict: " << verdict << "\n";
    return os.str();
}

}  // namespace confobs
