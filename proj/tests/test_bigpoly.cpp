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

#include <sstream>

#include "doctest.h"
#include "generators.hpp"
#include "magiclab/bigpoly.hpp"

using namespace magiclab;
using magiclab::testing::random_int_poly;
using magiclab::testing::random_rat_poly;
using magiclab::testing::random_unit_constant_poly;

namespace {

SeriesTrunc series_of(std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (long x : xs) v.emplace_back(x);
    return SeriesTrunc(std::move(v));
}

std::string render(const IntPoly& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

}  // namespace

TEST_CASE("canonical form trims trailing zeros") {
    CHECK(IntPoly{0, 0, 0}.is_zero());
    CHECK(IntPoly{0, 0, 0} == IntPoly{});
    CHECK(IntPoly{1, 2, 0} == IntPoly{1, 2});
    CHECK(IntPoly{}.degree() == -1);
    CHECK(IntPoly{7}.degree() == 0);
    CHECK(IntPoly{1, 0, 3}.degree() == 2);
    CHECK(IntPoly{1, 2}[5] == 0);
    CHECK((IntPoly{1, 2} - IntPoly{1, 2}).is_zero());
    CHECK(IntPoly::monomial(3, 2) == IntPoly{0, 0, 3});
}

TEST_CASE("arithmetic") {
    CHECK(poly_arith(IntPoly{1, -1}, IntPoly{1, -2, -1}, PolyOp::add) == IntPoly{2, -3, -1});
    CHECK(poly_arith(IntPoly{1, -1}, IntPoly{1}, PolyOp::mul) == IntPoly{1, -1});
    CHECK(poly_arith(IntPoly{1, 1}, IntPoly{1, -1}, PolyOp::mul) == IntPoly{1, 0, -1});
    CHECK(poly_arith(IntPoly{1, 1}, IntPoly{1, 1}, PolyOp::sub).is_zero());
    CHECK((IntPoly{} * IntPoly{1, 2}).is_zero());
    CHECK(pow(IntPoly{1, -1}, 3) == IntPoly{1, -3, 3, -1});
    CHECK(pow(IntPoly{1, -1}, 0) == IntPoly{1});
}

TEST_CASE("big coefficients survive arithmetic") {
    const Integer big = Integer(1) << 200;
    const IntPoly p{big, 1};
    CHECK((p * p)[0] == big * big);
    CHECK((p * p)[1] == 2 * big);
    const Integer square = big * big;
    CHECK(to_string(square) == square.str());
    CHECK(parse_integer(to_string(square)) == square);
}

TEST_CASE("alternate_sign") {
    CHECK(alternate_sign(IntPoly{1, -2, -1}) == IntPoly{1, 2, -1});
    CHECK(alternate_sign(IntPoly{}).is_zero());
    CHECK(alternate_sign(IntPoly{1, -6, -7, 2, 1}) == IntPoly{1, 6, -7, -2, 1});
}

TEST_CASE("derivative") {
    CHECK(derivative(IntPoly{1, -2, -1}) == IntPoly{-2, -2});
    CHECK(derivative(IntPoly{5}).is_zero());
    CHECK(derivative(IntPoly{}).is_zero());
    CHECK(derivative(IntPoly{1, -4, -2, 1}) == IntPoly{-4, -4, 3});
}

TEST_CASE("series_quotient") {
    CHECK(series_quotient(IntPoly{2}, IntPoly{1, -2, -1}, 3) == series_of({2, 4, 10, 24}));
    CHECK(series_quotient(IntPoly{1}, IntPoly{1, -1}, 4) == series_of({1, 1, 1, 1, 1}));

    // (t^2+t+1) / ((t+1)(1-t)^4) at order 0.
    const IntPoly den = IntPoly{1, 1} * pow(IntPoly{1, -1}, 4);
    CHECK(series_quotient(IntPoly{1, 1, 1}, den, 0) == series_of({1}));

    CHECK(series_quotient(IntPoly{}, IntPoly{3}, 2) == series_of({0, 0, 0}));
    const SeriesTrunc third = series_quotient(IntPoly{1}, IntPoly{3}, 1);
    CHECK(third[0] == Rational(1, 3));
    CHECK(third[1] == 0);

    CHECK_THROWS_AS(series_quotient(IntPoly{1}, IntPoly{0, 1}, 3), ZeroConstantTermError);
    CHECK_THROWS_AS(series_quotient(IntPoly{1}, IntPoly{}, 3), ZeroConstantTermError);
}

TEST_CASE("SeriesTrunc integrality and bounds") {
    CHECK(series_of({1, 2, 3}).to_integers() == std::vector<Integer>{1, 2, 3});
    SeriesTrunc s(2);
    s[1] = Rational(1, 2);
    CHECK_THROWS_AS(s.to_integers(), std::domain_error);
    CHECK_THROWS_AS(s[3], std::out_of_range);
    CHECK_THROWS_AS(SeriesTrunc(std::vector<Rational>{}), std::invalid_argument);
}

TEST_CASE("interpolate recovers the polynomial") {
    const std::vector<Integer> xs{0, 1, 2, 3};
    const std::vector<Integer> ys{1, 0, 3, 16};
    const RatPoly p = interpolate(xs, ys);
    for (std::size_t i = 0; i < xs.size(); ++i) CHECK(p.evaluate(Rational(xs[i])) == Rational(ys[i]));
    CHECK(p.degree() <= 3);
    CHECK_THROWS_AS(interpolate(std::vector<Integer>{0, 0}, std::vector<Integer>{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(interpolate(std::vector<Integer>{0, 1}, std::vector<Integer>{1}), LengthMismatchError);
}

TEST_CASE("conversions") {
    CHECK(to_integer(to_rational(IntPoly{1, -2, 3})) == IntPoly{1, -2, 3});
    CHECK_THROWS_AS(to_integer(RatPoly{Rational(1, 2)}), std::domain_error);
    CHECK(to_string(Rational(6, 4)) == "3/2");
    CHECK(to_string(Rational(-4, 2)) == "-2");
    CHECK(parse_rational("3/2") == Rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_integer("-123456789012345678901234567890") == Integer("-123456789012345678901234567890"));
    CHECK_THROWS_AS(parse_integer("12a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_integer(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("printing") {
    CHECK(render(IntPoly{1, -2, -1}) == "1 - 2y - y^2");
    CHECK(render(IntPoly{}) == "0");
    CHECK(render(IntPoly{0, -1}) == "-y");
    CHECK(render(IntPoly{0, 0, 3}) == "3y^2");
}

TEST_CASE("json round trip") {
    const IntPoly p{1, -6, -7, 2, 1};
    const nlohmann::json j = p;
    CHECK(j.dump() == R"(["1","-6","-7","2","1"])");
    CHECK(j.get<IntPoly>() == p);

    const RatPoly r{Rational(3, 4), Rational(-1, 2)};
    const nlohmann::json jr = r;
    CHECK(jr.dump() == R"(["3/4","-1/2"])");
    CHECK(jr.get<RatPoly>() == r);
    CHECK(nlohmann::json(IntPoly{}).dump() == "[]");
}

// Property tests on seeded random inputs.

TEST_CASE("property: alternate_sign is an involution") {
    for (int trial = 0; trial < 200; ++trial) {
        const IntPoly p = random_int_poly(12);
        CHECK(alternate_sign(alternate_sign(p)) == p);
    }
}

TEST_CASE("property: product rule") {
    for (int trial = 0; trial < 200; ++trial) {
        const IntPoly p = random_int_poly(8);
        const IntPoly q = random_int_poly(8);
        CHECK(derivative(p * q) == derivative(p) * q + p * derivative(q));
    }
}

TEST_CASE("property: quotient times denominator gives the numerator") {
    for (int trial = 0; trial < 100; ++trial) {
        const RatPoly num = random_rat_poly(6);
        RatPoly den = random_rat_poly(5);
        if (den[0] == 0) den += RatPoly{Rational(1)};
        const std::size_t order = static_cast<std::size_t>(magiclab::testing::uniform(0, 12));
        const SeriesTrunc q = series_quotient(num, den, order);
        const SeriesTrunc back = multiply_truncated(den, q);
        for (std::size_t i = 0; i <= order; ++i) CHECK(back[i] == num[i]);
    }
}

TEST_CASE("property: integer denominators with unit constant term give integer series") {
    for (int trial = 0; trial < 100; ++trial) {
        const IntPoly num = random_int_poly(5);
        const IntPoly den = random_unit_constant_poly(5);
        CHECK_NOTHROW(series_quotient(num, den, 10).to_integers());
    }
}

TEST_CASE("property: add and mul are commutative and associative") {
    for (int trial = 0; trial < 200; ++trial) {
        const IntPoly a = random_int_poly(6);
        const IntPoly b = random_int_poly(6);
        const IntPoly c = random_int_poly(6);
        for (PolyOp op : {PolyOp::add, PolyOp::mul}) {
            CHECK(poly_arith(a, b, op) == poly_arith(b, a, op));
            CHECK(poly_arith(poly_arith(a, b, op), c, op) == poly_arith(a, poly_arith(b, c, op), op));
        }
        CHECK(a * (b + c) == a * b + a * c);
    }
}
