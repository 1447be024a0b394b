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

#ifndef MAGICLAB_GENFUN_HPP
#define MAGICLAB_GENFUN_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "magiclab/bigpoly.hpp"

namespace magiclab {

/// [h_{L_{0,2}}(s), ..., h_{L_{order,2}}(s)] from P_s / Q_s.
SeriesTrunc fl2_series(unsigned s, std::size_t order);

/// [h_{C_{0,2}}(s), ..., h_{C_{order,2}}(s)] from -y Q_s'(y) / Q_s(y) + s + 1.
SeriesTrunc fc2_series(unsigned s, std::size_t order);

/// Which magic-sum generating function: EL_{n,2}(x) over pseudo-lines or
/// EC_{n,2}(x) over pseudo-cycles.
enum class SeriesKind { EL, EC };

std::string to_string(SeriesKind kind);

/// (1-x)^one_minus_x_power, times (1+x) when one_plus_x is set.
struct ClearingFactor {
    unsigned one_minus_x_power = 0;
    bool one_plus_x = false;

    IntPoly polynomial() const;
    unsigned degree() const { return one_minus_x_power + (one_plus_x ? 1u : 0u); }
    /// "(1-x)^7(1+x)"
    std::string to_string() const;
};

/// EL: (1-x)^{2n+2}. EC: (1-x)^{2n+1}, times (1+x) for odd n; n = 0 uses (1-x)^2.
ClearingFactor clearing_factor(SeriesKind kind, unsigned n);

struct NumeratorReport {
    SeriesKind kind;
    unsigned n;
    ClearingFactor factor;
    IntPoly numerator;
    /// Largest numerator degree the clearing factor admits (its degree minus one).
    unsigned degree_bound;
    std::size_t order;
    /// True iff every cleared coefficient in (degree_bound, order] is zero.
    bool stabilized;
};

/// degree_bound + 8.
std::size_t default_numerator_order(SeriesKind kind, unsigned n);

/// Magic-sum counts h(0..order) for L_{n,2} or C_{n,2}; C_{0,2} follows the s+1 convention.
std::vector<Integer> magic_sum_counts(SeriesKind kind, unsigned n, std::size_t order);

/// Multiplies the truncated series by the clearing factor. Never throws on a
/// tail that fails to vanish; the report says so.
NumeratorReport clear_denominator(SeriesKind kind, unsigned n, std::optional<std::size_t> order = {});

/// As clear_denominator, but throws NotStabilizedError unless stabilized.
NumeratorReport ehrhart_numerator(SeriesKind kind, unsigned n, std::optional<std::size_t> order = {});

bool is_palindromic(const IntPoly& p);

/// h(s) = phi(s) + (-1)^s psi.
struct QuasiPoly {
    RatPoly phi;
    Rational psi;
    unsigned degree = 0;

    Rational evaluate(unsigned s) const;
};

/// Exact solve for phi (degree+1 coefficients) and psi from the first
/// degree+2 samples, then checks every sample. Samples must sit at
/// consecutive s. Throws InconsistentSamplesError.
QuasiPoly quasipoly_fit(const std::map<unsigned, Integer>& samples, unsigned degree);

/// Smallest degree in 0..max_degree whose fit reproduces every sample.
/// Throws InconsistentSamplesError when none does.
QuasiPoly fit_minimal_degree(const std::map<unsigned, Integer>& samples, unsigned max_degree);

/// (1 + (-1)^{n+1}) / 2^{sum k + 2}. Requires every k_i >= 1.
Rational psi_formula(unsigned n, const std::vector<unsigned>& loops);

/// [h(0), ..., h(order)] for C_{n,k} in the magic-sum variable t.
SeriesTrunc cycle_series_s(unsigned n, const std::vector<unsigned>& loops, std::size_t order);

/// A rational function num(t) / den(t).
struct RationalFunction {
    RatPoly num;
    RatPoly den;
};

/// Closed form of sum_s (phi(s) + (-1)^s psi) t^s, over the denominator
/// (1-t)^{degree+1} (1+t).
RationalFunction generating_function(const QuasiPoly& q);

/// Fits h_{C_{n,k}}(0..order), rebuilds the generating function H(t) and
/// returns (1+t) H(t) at t = -1. Throws InconsistentSamplesError when no
/// quasi-polynomial fits, or when the rebuilt H(t) does not expand back to the samples.
Rational psi_limit_check(unsigned n, const std::vector<unsigned>& loops, std::size_t order);

void to_json(nlohmann::json& j, const QuasiPoly& q);
void to_json(nlohmann::json& j, const NumeratorReport& r);

}  // namespace magiclab

#endif  // MAGICLAB_GENFUN_HPP
