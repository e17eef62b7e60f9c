#pragma once

// Verification reports: a list of named checks rendered as text or JSON.

#include <string>
#include <utility>
#include <vector>

namespace confobs {

enum class Provenance { Paper, Trivial, Derived };

std::string to_string(Provenance p);
Provenance parse_provenance(const std::string& s);

struct Check {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
    Provenance provenance = Provenance::Derived;

    friend bool operator==(const Check&, const Check&) = default;
};

struct Report {
    std::string version;
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<Check> checks;
    std::string verdict;

    /// Adds a check whose pass flag is expected == computed.
    void expect(std::string name, std::string expected, std::string computed, Provenance p);
    void add(Check c) { checks.push_back(std::move(c)); }
    bool all_pass() const;

    std::string to_json() const;
    static Report from_json(const std::string& text);
    std::string to_text() const;

    friend bool operator==(const Report&, const Report&) = default;
};

}  // namespace confobs
