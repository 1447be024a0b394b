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

// Seeded generators for the property tests. Every suite uses a fixed seed so
// failures reproduce.

#ifndef MAGICLAB_TESTS_GENERATORS_HPP
#define MAGICLAB_TESTS_GENERATORS_HPP

#include <random>
#include <vector>

#include "magiclab/bigpoly.hpp"
#include "magiclab/matrix.hpp"

namespace magiclab::testing {

inline std::mt19937& rng() {
    static std::mt19937 gen(20260101u);
    return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

/// Coefficients in [-bound, bound]; occasionally with a huge coefficient so
/// the big-integer paths get exercised.
inline IntPoly random_int_poly(int max_degree, long bound = 20) {
    const long deg = uniform(-1, max_degree);
    std::vector<Integer> c;
    for (long i = 0; i <= deg; ++i) {
        Integer v = uniform(-bound, bound);
        if (uniform(0, 9) == 0) v *= Integer(1) << 80;
        c.push_back(v);
    }
    return IntPoly(std::move(c));
}

inline IntPoly random_unit_constant_poly(int max_degree, long bound = 20) {
    IntPoly p = random_int_poly(max_degree, bound);
    std::vector<Integer> c = p.coeffs();
    if (c.empty()) c.push_back(0);
    c[0] = uniform(0, 1) ? 1 : -1;
    return IntPoly(std::move(c));
}

inline RatPoly random_rat_poly(int max_degree, long bound = 9) {
    const long deg = uniform(-1, max_degree);
    std::vector<Rational> c;
    for (long i = 0; i <= deg; ++i) c.emplace_back(uniform(-bound, bound), uniform(1, bound));
    return RatPoly(std::move(c));
}

inline IntMatrix random_matrix(std::size_t n, long bound = 5) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = uniform(-bound, bound);
    return m;
}

}  // namespace magiclab::testing

#endif  // MAGICLAB_TESTS_GENERATORS_HPP
