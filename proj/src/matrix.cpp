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

#include "magiclab/matrix.hpp"

#include <stdexcept>
#include <string>

namespace magiclab {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : order_(rows.size()), entries_() {
    entries_.reserve(order_ * order_);
    for (const auto& row : rows) {
        if (row.size() != order_) throw DimensionMismatchError("IntMatrix: rows must form a square");
        for (long v : row) entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t order) {
    IntMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m(i, i) = 1;
    return m;
}

IntMatrix build_transfer_matrix(unsigned s) {
    const std::size_t n = s + 1;
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j <= s; ++j) m(i, j) = static_cast<long>(s + 1 - i - j);
    return m;
}

IntMatrix build_B_inverse(unsigned n) {
    if (n == 0) throw std::invalid_argument("build_B_inverse: n must be positive");
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t band = i + j + 2;  // 1-based i + j
            if (band == n + 1) m(i, j) = 1;
            else if (band == n + 2) m(i, j) = -2;
            else if (band == n + 3) m(i, j) = 1;
        }
    }
    return m;
}

namespace {

IntMatrix anti_tridiagonal(unsigned n, long corner) {
    if (n == 0) throw std::invalid_argument("anti-tridiagonal family needs n >= 1");
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t band = i + j + 2;
            if (band == n) m(i, j) = -1;
            else if (band == n + 1) m(i, j) = 2;
            else if (band == n + 2) m(i, j) = -1;
        }
    }
    m(0, n - 1) = corner;
    return m;
}

}  // namespace

IntMatrix build_A(unsigned n) { return anti_tridiagonal(n, 1); }
IntMatrix build_D(unsigned n) { return anti_tridiagonal(n, 2); }

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.order() != b.order())
        throw DimensionMismatchError("mat_mul: orders " + std::to_string(a.order()) + " and " +
                                     std::to_string(b.order()));
    const std::size_t n = a.order();
    IntMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

IntMatrix mat_pow(const IntMatrix& m, unsigned e) {
    IntMatrix result = IntMatrix::identity(m.order());
    IntMatrix base = m;
    while (e > 0) {
        if (e & 1u) result = mat_mul(result, base);
        e >>= 1;
        if (e > 0) base = mat_mul(base, base);
    }
    return result;
}

Integer quadratic_form_all_ones(const IntMatrix& m) {
    Integer sum = 0;
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j) sum += m(i, j);
    return sum;
}

Integer trace(const IntMatrix& m) {
    Integer sum = 0;
    for (std::size_t i = 0; i < m.order(); ++i) sum += m(i, i);
    return sum;
}

Integer determinant(const IntMatrix& input) {
    const std::size_t n = input.order();
    if (n == 0) return 1;
    IntMatrix m = input;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Exact by Sylvester's identity.
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

IntPoly det_linear_pencil(const IntMatrix& constant, const IntMatrix& linear) {
    if (constant.order() != linear.order()) throw DimensionMismatchError("det_linear_pencil: order mismatch");
    const std::size_t n = constant.order();
    std::vector<Integer> xs(n + 1);
    std::vector<Integer> values(n + 1);
    for (std::size_t p = 0; p <= n; ++p) {
        const Integer x = p;
        IntMatrix at(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) at(i, j) = constant(i, j) + x * linear(i, j);
        xs[p] = x;
        values[p] = determinant(at);
    }
    return to_integer(interpolate(xs, values));
}

IntPoly det_I_minus_yM(const IntMatrix& m) {
    IntMatrix neg(m.order());
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j) neg(i, j) = -m(i, j);
    return det_linear_pencil(IntMatrix::identity(m.order()), neg);
}

IntPoly char_poly(const IntMatrix& m) {
    IntMatrix neg(m.order());
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j) neg(i, j) = -m(i, j);
    return det_linear_pencil(neg, IntMatrix::identity(m.order()));
}

IntPoly adjugate_quadratic_form(const IntMatrix& m) {
    const std::size_t n = m.order();
    IntMatrix constant(n + 1);
    IntMatrix linear(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        constant(0, i) = 1;
        constant(i, 0) = 1;
        constant(i, i) = 1;
        for (std::size_t j = 1; j <= n; ++j) linear(i, j) = -m(i - 1, j - 1);
    }
    // The bordered determinant has degree <= n - 1 in y, so n + 2 points are plenty.
    return -det_linear_pencil(constant, linear);
}

IntMatrix adjugate(const IntMatrix& m) {
    const std::size_t n = m.order();
    IntMatrix adj(n);
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            IntMatrix minor(n - 1);
            for (std::size_t i = 0, mi = 0; i < n; ++i) {
                if (i == r) continue;
                for (std::size_t j = 0, mj = 0; j < n; ++j) {
                    if (j == c) continue;
                    minor(mi, mj++) = m(i, j);
                }
                ++mi;
            }
            const Integer cof = ((r + c) % 2 == 0 ? 1 : -1) * determinant(minor);
            adj(c, r) = cof;
        }
    }
    return adj;
}

std::size_t rank(std::vector<std::vector<Integer>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != cols) throw DimensionMismatchError("rank: ragged rows");
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                rows[i][j] = (rows[i][j] * rows[r][c] - rows[i][c] * rows[r][j]) / prev;
            rows[i][c] = 0;
        }
        prev = rows[r][c];
        ++r;
    }
    return r;
}

void to_json(nlohmann::json& j, const IntMatrix& m) {
    j = nlohmann::json::array();
    for (std::size_t i = 0; i < m.order(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < m.order(); ++k) row.push_back(to_string(m(i, k)));
        j.push_back(std::move(row));
    }
}

void from_json(const nlohmann::json& j, IntMatrix& m) {
    IntMatrix out(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i].size() != j.size()) throw DimensionMismatchError("matrix JSON is not square");
        for (std::size_t k = 0; k < j.size(); ++k) out(i, k) = parse_integer(j[i][k].get<std::string>());
    }
    m = std::move(out);
}

}  // namespace magiclab
