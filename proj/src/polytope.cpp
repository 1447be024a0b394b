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

#include "magiclab/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "magiclab/matrix.hpp"

namespace magiclab {

namespace {

void require_cycle(unsigned n) {
    if (n < 3) throw std::invalid_argument("polytope results need a cycle with n >= 3, got " + std::to_string(n));
    if (n > 24) throw std::invalid_argument("stable-set enumeration is limited to n <= 24");
}

void require_odd(unsigned n) {
    require_cycle(n);
    if (n % 2 == 0) throw EvenNError("n must be odd, got " + std::to_string(n));
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer c = 1;
    for (unsigned i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

}  // namespace

bool StableSet::contains(unsigned v) const { return std::binary_search(members.begin(), members.end(), v); }

std::vector<StableSet> stable_sets(unsigned n) {
    require_cycle(n);
    std::vector<StableSet> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const std::uint32_t rotated = ((mask >> 1) | ((mask & 1u) << (n - 1)));
        if (mask & rotated) continue;  // some i and i+1 (mod n) both present
        StableSet s{n, {}};
        for (unsigned v = 0; v < n; ++v)
            if (mask & (1u << v)) s.members.push_back(v);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const StableSet& a, const StableSet& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.members < b.members;
    });
    return out;
}

Integer kaplansky_count(unsigned n, unsigned k) {
    if (k == 0) return 1;
    if (2 * k > n) return 0;
    return Integer(n) * binomial(n - k, k) / (n - k);
}

unsigned max_stable_count(unsigned n) {
    require_cycle(n);
    return n % 2 == 0 ? 2 : n;
}

bool PolytopeVertex::satisfies_constraints() const {
    const std::size_t n = beta.size();
    if (alpha.size() != n || n == 0) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (alpha[i] < 0 || beta[i] < 0) return false;
        if (beta[i] + alpha[i] + beta[(i + 1) % n] != 1) return false;
    }
    return true;
}

Rational PolytopeVertex::beta_sum() const {
    Rational sum(0);
    for (const auto& b : beta) sum += b;
    return sum;
}

PolytopeVertex integral_vertex(const StableSet& s) {
    PolytopeVertex v{std::vector<Rational>(s.n), std::vector<Rational>(s.n), VertexKind::integral, s};
    for (unsigned i = 0; i < s.n; ++i) {
        v.beta[i] = s.contains(i) ? 1 : 0;
        v.alpha[i] = (s.contains(i) || s.contains((i + 1) % s.n)) ? 0 : 1;
    }
    return v;
}

PolytopeVertex fractional_vertex(unsigned n) {
    return PolytopeVertex{std::vector<Rational>(n, Rational(0)), std::vector<Rational>(n, Rational(1, 2)),
                          VertexKind::fractional, std::nullopt};
}

std::vector<PolytopeVertex> vertices(unsigned n) {
    std::vector<PolytopeVertex> out;
    for (const auto& s : stable_sets(n)) out.push_back(integral_vertex(s));
    if (n % 2 == 1) out.push_back(fractional_vertex(n));
    return out;
}

int hyperplane_side(const PolytopeVertex& v, unsigned n) {
    const Rational diff = v.beta_sum() - Rational(n - 1, 2);
    return diff < 0 ? -1 : (diff > 0 ? 1 : 0);
}

std::vector<PolytopeVertex> hyperplane_vertices(unsigned n) {
    require_odd(n);
    std::vector<PolytopeVertex> out;
    for (auto& v : vertices(n))
        if (hyperplane_side(v, n) == 0) out.push_back(std::move(v));
    return out;
}

std::size_t homogenized_rank(const std::vector<PolytopeVertex>& points) {
    // Coordinates have denominator 1 or 2; doubling every row keeps the rank.
    std::vector<std::vector<Integer>> rows;
    for (const auto& p : points) {
        std::vector<Integer> row;
        for (const auto* part : {&p.alpha, &p.beta}) {
            for (const auto& c : *part) {
                const Rational twice = c * 2;
                if (!is_integral(twice)) throw std::domain_error("homogenized_rank: denominator exceeds 2");
                row.push_back(boost::multiprecision::numerator(twice));
            }
        }
        row.emplace_back(2);
        rows.push_back(std::move(row));
    }
    return rank(std::move(rows));
}

bool simplex_affinely_independent(unsigned n) {
    auto points = hyperplane_vertices(n);
    points.push_back(fractional_vertex(n));
    return homogenized_rank(points) == n + 1;
}

SeriesTrunc simplex_series(unsigned n, std::size_t order) {
    require_odd(n);
    const IntPoly den = pow(IntPoly{1, -1}, n) * IntPoly{1, 0, -1};
    return series_quotient(IntPoly{1}, den, order);
}

void to_json(nlohmann::json& j, const StableSet& s) { j = s.members; }

void to_json(nlohmann::json& j, const PolytopeVertex& v) {
    auto render = [](const std::vector<Rational>& xs) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& x : xs) arr.push_back(to_string(x));
        return arr;
    };
    j = nlohmann::json{{"kind", v.kind == VertexKind::integral ? "integral" : "fractional"},
                       {"alpha", render(v.alpha)},
                       {"beta", render(v.beta)}};
    if (v.stable_set) j["stable_set"] = *v.stable_set;
}

}  // namespace magiclab
