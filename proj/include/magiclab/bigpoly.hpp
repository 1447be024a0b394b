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

#ifndef MAGICLAB_BIGPOLY_HPP
#define MAGICLAB_BIGPOLY_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"
#include "magiclab/errors.hpp"

namespace magiclab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Decimal rendering; rationals print as "p/q", or "p" when integral.
std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed text.
Integer parse_integer(const std::string& text);
Rational parse_rational(const std::string& text);

bool is_integral(const Rational& v);

/// Dense univariate polynomial, coefficients ascending by degree.
///
/// The zero polynomial is stored as an empty coefficient vector; every other
/// value has a nonzero leading coefficient. Equality is therefore structural.
template <class Coeff>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }
    explicit Poly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly constant(Coeff c) { return Poly(std::vector<Coeff>{std::move(c)}); }
    /// c * y^k
    static Poly monomial(Coeff c, std::size_t k) {
        std::vector<Coeff> v(k + 1);
        v[k] = std::move(c);
        return Poly(std::move(v));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    /// Coefficient of y^i; zero beyond the degree.
    Coeff operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff{0}; }
    const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }

    Coeff evaluate(const Coeff& x) const {
        Coeff acc{0};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Coeff> r(std::max(a.size(), b.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a) {
        std::vector<Coeff> r(a.coeffs_);
        for (auto& c : r) c = -c;
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Coeff> r(std::max(a.size(), b.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly{};
        std::vector<Coeff> r(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const Coeff& c, const Poly& p) {
        std::vector<Coeff> r(p.coeffs_);
        for (auto& x : r) x *= c;
        return Poly(std::move(r));
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Coeff> coeffs_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

enum class PolyOp { add, sub, mul };

IntPoly poly_arith(const IntPoly& a, const IntPoly& b, PolyOp op);

/// p(-y).
template <class Coeff>
Poly<Coeff> alternate_sign(const Poly<Coeff>& p) {
    std::vector<Coeff> r(p.coeffs());
    for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return Poly<Coeff>(std::move(r));
}

template <class Coeff>
Poly<Coeff> derivative(const Poly<Coeff>& p) {
    if (p.size() <= 1) return {};
    std::vector<Coeff> r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Coeff(i);
    return Poly<Coeff>(std::move(r));
}

template <class Coeff>
Poly<Coeff> pow(const Poly<Coeff>& p, unsigned e) {
    Poly<Coeff> result = Poly<Coeff>::constant(Coeff{1});
    for (unsigned i = 0; i < e; ++i) result *= p;
    return result;
}

RatPoly to_rational(const IntPoly& p);

/// Throws std::domain_error if some coefficient is not an integer.
IntPoly to_integer(const RatPoly& p);

/// Exact Lagrange interpolation through (xs[i], values[i]); xs must be distinct.
RatPoly interpolate(std::span<const Integer> xs, std::span<const Integer> values);

/// Truncated power series c_0 + c_1 t + ... + c_N t^N with exact rational
/// coefficients. Holds exactly N+1 entries.
class SeriesTrunc {
public:
    explicit SeriesTrunc(std::size_t order) : coeffs_(order + 1) {}
    explicit SeriesTrunc(std::vector<Rational> coeffs);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
    Rational& operator[](std::size_t i) { return coeffs_.at(i); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    /// Throws std::domain_error when a coefficient is not integral.
    std::vector<Integer> to_integers() const;

    friend bool operator==(const SeriesTrunc&, const SeriesTrunc&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// First order+1 Taylor coefficients of num/den at 0.
/// Throws ZeroConstantTermError when den(0) = 0.
SeriesTrunc series_quotient(const RatPoly& num, const RatPoly& den, std::size_t order);
SeriesTrunc series_quotient(const IntPoly& num, const IntPoly& den, std::size_t order);

/// Product of p with the series, truncated at the series' order.
SeriesTrunc multiply_truncated(const RatPoly& p, const SeriesTrunc& s);

std::ostream& operator<<(std::ostream& os, const IntPoly& p);
std::ostream& operator<<(std::ostream& os, const RatPoly& p);

// JSON: arrays of decimal strings, ascending degree.
void to_json(nlohmann::json& j, const IntPoly& p);
void from_json(const nlohmann::json& j, IntPoly& p);
void to_json(nlohmann::json& j, const RatPoly& p);
void from_json(const nlohmann::json& j, RatPoly& p);
void to_json(nlohmann::json& j, const SeriesTrunc& s);

}  // namespace magiclab

#endif  // MAGICLAB_BIGPOLY_HPP
