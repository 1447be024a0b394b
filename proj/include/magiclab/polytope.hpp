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

#ifndef MAGICLAB_POLYTOPE_HPP
#define MAGICLAB_POLYTOPE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "magiclab/bigpoly.hpp"

namespace magiclab {

// Cycle vertices are 0..n-1; edge i joins vertex i and vertex i+1 (mod n).
// For the polytope of C_{n,1}, beta_i labels vertex i's membership and alpha_i
// the loop at vertex i, with beta_i + alpha_i + beta_{i+1} = 1.

struct StableSet {
    unsigned n = 0;
    std::vector<unsigned> members;  ///< sorted

    bool contains(unsigned v) const;
    friend bool operator==(const StableSet&, const StableSet&) = default;
};

/// Every stable set of the n-cycle (n >= 3), ordered by size, then lexicographically.
std::vector<StableSet> stable_sets(unsigned n);

/// n/(n-k) * C(n-k, k); zero when 2k > n.
Integer kaplansky_count(unsigned n, unsigned k);

/// Number of maximum stable sets: 2 for even n, n for odd n.
unsigned max_stable_count(unsigned n);

enum class VertexKind { integral, fractional };

struct PolytopeVertex {
    std::vector<Rational> alpha;
    std::vector<Rational> beta;
    VertexKind kind = VertexKind::integral;
    std::optional<StableSet> stable_set;  ///< set for integral vertices

    /// beta_i + alpha_i + beta_{i+1} = 1 and nonnegativity, exactly.
    bool satisfies_constraints() const;
    Rational beta_sum() const;
    friend bool operator==(const PolytopeVertex&, const PolytopeVertex&) = default;
};

PolytopeVertex integral_vertex(const StableSet& s);
/// alpha = 0, beta = 1/2. Only a vertex for odd n.
PolytopeVertex fractional_vertex(unsigned n);

/// One integral vertex per stable set, then the fractional vertex iff n is odd.
std::vector<PolytopeVertex> vertices(unsigned n);

/// Vertices on sum beta = (n-1)/2: exactly those of the maximum stable sets.
/// Throws EvenNError for even n.
std::vector<PolytopeVertex> hyperplane_vertices(unsigned n);

/// Sign of sum beta - (n-1)/2: -1 below, 0 on, +1 above.
int hyperplane_side(const PolytopeVertex& v, unsigned n);

/// Rank over Q of the homogenized (alpha, beta, 1) rows of the given points.
std::size_t homogenized_rank(const std::vector<PolytopeVertex>& points);

/// True iff the hyperplane vertices and the fractional vertex are affinely
/// independent (homogenized rank n+1). Throws EvenNError for even n.
bool simplex_affinely_independent(unsigned n);

/// Expansion of 1 / ((1-t)^n (1-t^2)). Throws EvenNError for even n.
SeriesTrunc simplex_series(unsigned n, std::size_t order);

void to_json(nlohmann::json& j, const StableSet& s);
void to_json(nlohmann::json& j, const PolytopeVertex& v);

}  // namespace magiclab

#endif  // MAGICLAB_POLYTOPE_HPP
