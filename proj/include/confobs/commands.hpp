#pragma once

// Report builders behind the command-line subcommands.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "confobs/algebra.hpp"
#include "confobs/obstruction.hpp"
#include "confobs/report.hpp"

namespace confobs {

/// Bad command-line parameters (exit code 2).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Default top degree for `dims`: the full range, except (4, 3) stops at 5.
int default_max_degree(int k, int t);

Report cmd_dims(int k, int t, std::optional<int> max_degree);
Report cmd_verify_basics();

struct ObstructOptions {
    std::optional<std::uint64_t> gauge_seed;
};
Report cmd_obstruct(const ObstructOptions& opts, AlphaMap* alpha_out = nullptr);

/// Sum of raw products such as "A14.A12 + A12.A24", normalized.
ArnoldElement parse_arnold_element(const std::string& text);

/// The α matrix with row and column labels; alpha_from_json inverts it.
std::string alpha_json(const AlphaMap& a);
AlphaMap alpha_from_json(const std::string& text);

}  // namespace confobs
