/*
   Copyright 2026 The magiclab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MAGICLAB_CLI_HPP
#define MAGICLAB_CLI_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "magiclab/labelings.hpp"

namespace magiclab::cli {

enum class Command { count, verify, table, fit, series, polytope };
enum class Format { text, json, csv };

enum ExitCode : int {
    ok = 0,
    math_failure = 1,
    usage_error = 2,
    resource_cap = 3,
};

/// Which generating-function family `table` and `series` work on.
enum class Family { none, el, ec, fl2, fc2 };

struct RunConfig {
    Command command = Command::count;
    Format format = Format::text;

    std::optional<GraphKind> kind;
    std::optional<unsigned> n;
    std::optional<unsigned> m;
    std::vector<unsigned> k;  ///< one value broadcasts to every vertex

    std::optional<unsigned> s;  ///< series: fixed magic sum
    std::optional<unsigned> s_max;
    std::optional<unsigned> n_max;
    std::optional<std::size_t> order;
    std::optional<unsigned> degree;  ///< fit: overrides sum k

    bool brute = false;  ///< count: use the exhaustive oracle
    unsigned brute_cap = BruteForceCaps{}.max_variables;

    bool all_identities = false;
    std::vector<std::string> identity_ids;

    Family family = Family::none;
    bool hyperplane_only = false;  ///< polytope
};

/// Parses argv into a RunConfig. Throws CLI::ParseError (including the
/// success-flavoured CLI::CallForHelp) on bad or help-only input.
RunConfig parse_args(int argc, const char* const* argv);

/// Runs a parsed configuration; returns an ExitCode.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + execute, with every error mapped to its exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace magiclab::cli

#endif  // MAGICLAB_CLI_HPP
