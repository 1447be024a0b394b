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

#ifndef MAGICLAB_MATRIX_HPP
#define MAGICLAB_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "magiclab/bigpoly.hpp"

namespace magiclab {

/// Dense square matrix of arbitrary-precision integers, row-major.
/// All indices are 0-based; order 0 is allowed (its determinant is 1).
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t order) : order_(order), entries_(order * order) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t order);

    std::size_t order() const noexcept { return order_; }
    Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t order_ = 0;
    std::vector<Integer> entries_;
};

/// B_{s+1}: entry (i, j) = s+1-i-j when i+j <= s, else 0.
IntMatrix build_transfer_matrix(unsigned s);

/// Inverse of B_n. With 1-based (i, j) the entries are 1, -2, 1 on the
/// anti-diagonal bands i+j = n+1, n+2, n+3; 0-based that is i+j = n-1, n, n+1.
IntMatrix build_B_inverse(unsigned n);

/// A_n and D_n: bands -1, 2, -1 on i+j = n-2, n-1, n (0-based), except the
/// top-right corner, which is 1 for A_n and 2 for D_n.
IntMatrix build_A(unsigned n);
IntMatrix build_D(unsigned n);

/// Throws DimensionMismatchError when orders differ.
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_pow(const IntMatrix& m, unsigned e);

/// u^T M u with u all ones, i.e. the sum of all entries.
Integer quadratic_form_all_ones(const IntMatrix& m);
Integer trace(const IntMatrix& m);

/// Fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

/// det(C + y L) as a polynomial in y, by evaluation at order+1 integer points
/// and exact interpolation. The result is checked to be integral.
IntPoly det_linear_pencil(const IntMatrix& constant, const IntMatrix& linear);

/// det(I - yM).
IntPoly det_I_minus_yM(const IntMatrix& m);

/// det(yI - M), monic of degree order(M).
IntPoly char_poly(const IntMatrix& m);

/// u^T adj(I - yM) u, via -det([[0, u^T], [u, I - yM]]).
IntPoly adjugate_quadratic_form(const IntMatrix& m);

/// Transpose of the cofactor matrix, entry by entry. Slow; used as a cross-check.
IntMatrix adjugate(const IntMatrix& m);

/// Rank over the rationals of a rectangular integer matrix (rows of equal length).
std::size_t rank(std::vector<std::vector<Integer>> rows);

void to_json(nlohmann::json& j, const IntMatrix& m);
void from_json(const nlohmann::json& j, IntMatrix& m);

}  // namespace magiclab

#endif  // MAGICLAB_MATRIX_HPP
