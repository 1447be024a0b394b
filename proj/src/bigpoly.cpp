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

#include "magiclab/bigpoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace magiclab {

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& v) {
    const Integer num = boost::multiprecision::numerator(v);
    const Integer den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Integer parse_integer(const std::string& text) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size() ||
        !std::all_of(text.begin() + static_cast<long>(start), text.end(),
                     [](unsigned char c) { return std::isdigit(c); })) {
        throw std::invalid_argument("not a decimal integer: '" + text + "'");
    }
    return Integer(text);
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    const Integer num = parse_integer(text.substr(0, slash));
    const Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return Rational(num, den);
}

bool is_integral(const Rational& v) { return boost::multiprecision::denominator(v) == 1; }

IntPoly poly_arith(const IntPoly& a, const IntPoly& b, PolyOp op) {
    switch (op) {
        case PolyOp::add: return a + b;
        case PolyOp::sub: return a - b;
        case PolyOp::mul: return a * b;
    }
    throw std::invalid_argument("unknown polynomial operation");
}

RatPoly to_rational(const IntPoly& p) {
    std::vector<Rational> r;
    r.reserve(p.size());
    for (const auto& c : p.coeffs()) r.emplace_back(c);
    return RatPoly(std::move(r));
}

IntPoly to_integer(const RatPoly& p) {
    std::vector<Integer> r;
    r.reserve(p.size());
    for (const auto& c : p.coeffs()) {
        if (!is_integral(c)) throw std::domain_error("non-integral coefficient " + to_string(c));
        r.push_back(boost::multiprecision::numerator(c));
    }
    return IntPoly(std::move(r));
}

RatPoly interpolate(std::span<const Integer> xs, std::span<const Integer> values) {
    if (xs.size() != values.size()) throw LengthMismatchError("interpolate: point/value count mismatch");
    RatPoly result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        RatPoly basis = RatPoly::constant(Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            if (xs[i] == xs[j]) throw std::invalid_argument("interpolate: repeated abscissa");
            basis *= RatPoly{Rational(-xs[j]), Rational(1)};
            denom *= Rational(xs[i] - xs[j]);
        }
        result += (Rational(values[i]) / denom) * basis;
    }
    return result;
}

SeriesTrunc::SeriesTrunc(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("SeriesTrunc needs at least one coefficient");
}

std::vector<Integer> SeriesTrunc::to_integers() const {
    std::vector<Integer> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        if (!is_integral(c)) throw std::domain_error("non-integral series coefficient " + to_string(c));
        out.push_back(boost::multiprecision::numerator(c));
    }
    return out;
}

SeriesTrunc series_quotient(const RatPoly& num, const RatPoly& den, std::size_t order) {
    if (den[0] == 0) throw ZeroConstantTermError("series_quotient: denominator vanishes at 0");
    SeriesTrunc out(order);
    const Rational inv = Rational(1) / den[0];
    for (std::size_t k = 0; k <= order; ++k) {
        Rational acc = num[k];
        const std::size_t top = std::min<std::size_t>(k, den.size() ? den.size() - 1 : 0);
        for (std::size_t j = 1; j <= top; ++j) acc -= den[j] * out[k - j];
        out[k] = acc * inv;
    }
    return out;
}

SeriesTrunc series_quotient(const IntPoly& num, const IntPoly& den, std::size_t order) {
    return series_quotient(to_rational(num), to_rational(den), order);
}

SeriesTrunc multiply_truncated(const RatPoly& p, const SeriesTrunc& s) {
    SeriesTrunc out(s.order());
    for (std::size_t k = 0; k <= s.order(); ++k) {
        Rational acc(0);
        const std::size_t top = std::min<std::size_t>(k, p.size() ? p.size() - 1 : 0);
        for (std::size_t j = 0; j <= top && j < p.size(); ++j) acc += p[j] * s[k - j];
        out[k] = acc;
    }
    return out;
}

namespace {

template <class Coeff>
void print_poly(std::ostream& os, const Poly<Coeff>& p) {
    if (p.is_zero()) {
        os << "0";
        return;
    }
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Coeff& c = p.coeffs()[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Coeff mag = negative ? Coeff(-c) : c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) os << to_string(mag);
        if (i >= 1) os << "y";
        if (i >= 2) os << "^" << i;
    }
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
    print_poly(os, p);
    return os;
}

std::ostream& operator<<(std::ostream& os, const RatPoly& p) {
    print_poly(os, p);
    return os;
}

void to_json(nlohmann::json& j, const IntPoly& p) {
    j = nlohmann::json::array();
    for (const auto& c : p.coeffs()) j.push_back(to_string(c));
}

void from_json(const nlohmann::json& j, IntPoly& p) {
    std::vector<Integer> coeffs;
    for (const auto& e : j) coeffs.push_back(parse_integer(e.get<std::string>()));
    p = IntPoly(std::move(coeffs));
}

void to_json(nlohmann::json& j, const RatPoly& p) {
    j = nlohmann::json::array();
    for (const auto& c : p.coeffs()) j.push_back(to_string(c));
}

void from_json(const nlohmann::json& j, RatPoly& p) {
    std::vector<Rational> coeffs;
    for (const auto& e : j) coeffs.push_back(parse_rational(e.get<std::string>()));
    p = RatPoly(std::move(coeffs));
}

void to_json(nlohmann::json& j, const SeriesTrunc& s) {
    j = nlohmann::json::array();
    for (const auto& c : s.coeffs()) j.push_back(to_string(c));
}

}  // namespace magiclab
