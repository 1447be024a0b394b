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

#ifndef MAGICLAB_LABELINGS_HPP
#define MAGICLAB_LABELINGS_HPP

#include <map>
#include <string>
#include <vector>

#include "magiclab/bigpoly.hpp"

namespace magiclab {

enum class GraphKind { line, cycle };

/// A pseudo-line L_{n,m} or pseudo-cycle C_{n,k}. Vertex i carries loops[i]
/// self-loops. Lines may have n = 0; cycles need n >= 1.
struct GraphSpec {
    GraphKind kind = GraphKind::line;
    unsigned n = 0;
    std::vector<unsigned> loops;

    static GraphSpec line(unsigned n, unsigned m);
    static GraphSpec cycle(std::vector<unsigned> loops);
    static GraphSpec uniform_cycle(unsigned n, unsigned m);

    /// Throws LengthMismatchError / std::invalid_argument on a broken invariant.
    void validate() const;

    /// Number of edge labels: non-loop edges plus every loop.
    unsigned variable_count() const;

    /// "L_{3,2}", "C_{3,(1,1,2)}"
    std::string name() const;

    friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

/// Number of labelings of L_{n,m} with magic sum s. n = 0 gives s+1 by convention.
Integer count_line(unsigned n, unsigned m, unsigned s);

/// Number of labelings of C_{n,k} with magic sum s.
/// Throws LengthMismatchError when loops.size() != n.
Integer count_cycle(unsigned n, const std::vector<unsigned>& loops, unsigned s);

Integer count(const GraphSpec& spec, unsigned s);

struct BruteForceCaps {
    unsigned max_variables = 10;
    unsigned max_sum = 8;
};

/// Exhaustive enumeration of every edge labelling; the independent oracle for
/// count(). Throws InstanceTooLargeError beyond the caps.
Integer brute_force_count(const GraphSpec& spec, unsigned s, const BruteForceCaps& caps = {});

struct CountTable {
    GraphSpec spec;
    std::map<unsigned, Integer> counts;
};

/// h(s) for s = 0..s_max.
CountTable count_table(const GraphSpec& spec, unsigned s_max);
CountTable brute_force_table(const GraphSpec& spec, unsigned s_max, const BruteForceCaps& caps = {});

std::string to_csv(const CountTable& table);
void to_json(nlohmann::json& j, const GraphSpec& spec);
void to_json(nlohmann::json& j, const CountTable& table);

}  // namespace magiclab

#endif  // MAGICLAB_LABELINGS_HPP
