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

#ifndef MAGICLAB_RECURRENCES_HPP
#define MAGICLAB_RECURRENCES_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "magiclab/bigpoly.hpp"

namespace magiclab {

/// Numerator family of FL_2(s, y):
/// P_n(y) = -y[P_{n-1}(-y) + P_{n-3}(-y)] + 2 P_{n-2}(y) - P_{n-4}(y) for n >= 4.
IntPoly gen_P(unsigned n);
/// Denominator family, same recurrence with its own initial values.
IntPoly gen_Q(unsigned n);

/// The polynomial identities relating the characteristic polynomials of
/// A_n, D_n, B_n^{-1}, det(I - yB_n) and the adjugate form g_n.
/// Throughout, fA(n) = det(yI - A_n), fD likewise, fBi(n) = det(yI - B_n^{-1}),
/// fbar(n) = det(I - yB_n) and g(n) = u^T adj(I - yB_n) u.
enum class IdentityId {
    fa_diff_eq_fd_sum,        ///< fA(n) - fA(n-2) = fD(n) + fD(n-2), n >= 3
    fbinv_via_fd,             ///< fBi(n) = (-1)^{n-1} y fD(n-1)(-y) - fBi(n-2), n >= 3
    fbinv_eq_fa,              ///< fBi(n) = fA(n), n >= 1
    fbinv_diff_eq_fd_sum,     ///< fBi(n) - fBi(n-2) = fD(n) + fD(n-2), n >= 5
    fbinv_via_three_fd,       ///< 2 fBi(n) = fD(n) + (-1)^{n-1} y fD(n-1)(-y) + fD(n-2), n >= 5
    fd_recurrence,            ///< fD-only four-term recurrence, n >= 5
    fbinv_recurrence,         ///< fBi-only four-term recurrence, n >= 5
    fbinv_eq_signed_fbar,     ///< fBi(n) = (-1)^{n(n+1)/2} fbar(n), n >= 1
    fbar_recurrence,          ///< fbar-only four-term recurrence, n >= 5
    g_recurrence_with_fbar,   ///< g(n) = 2g(n-2) - g(n-4) + 2[fbar(n-2) - fbar(n-4)], n >= 5
    g_sum_eq_fd,              ///< g(n) + g(n-2) = (-1)^{n(n+1)/2+1} 2 fD(n-2), n >= 5
    fbar_diff_eq_g_sum,       ///< 2[fbar(n-2) - fbar(n-4)] = -y[g(n-1)(-y) + g(n-3)(-y)], n >= 5
    g_recurrence,             ///< g-only four-term recurrence, n >= 5
    index_bridge,             ///< Q_s = fbar(s+1) and P_s = g(s+1), s >= 0
};

struct IdentityInfo {
    IdentityId id;
    std::string_view key;          ///< CLI name, e.g. "fBnInv-eq-fAn"
    unsigned min_index;            ///< smallest index at which the identity is claimed
    std::string_view statement;
};

std::span<const IdentityInfo> identity_catalog();
const IdentityInfo& identity_info(IdentityId id);
/// Throws UnknownIdentityError.
IdentityId parse_identity(std::string_view key);

struct IndexRange {
    unsigned lo = 0;
    unsigned hi = 0;
};

struct IdentityCheck {
    unsigned index;
    bool holds;
    IntPoly difference;  ///< lhs - rhs; zero iff holds
};

struct IdentityReport {
    IdentityId id;
    IndexRange range;                  ///< as requested
    std::vector<IdentityCheck> checks; ///< indices below min_index are skipped

    std::size_t pass_count() const;
    bool all_hold() const;
    std::optional<IdentityCheck> first_failure() const;
};

/// Caches the matrix-side polynomial families so a batch of identity checks
/// computes each determinant once. Not thread-safe.
class PolynomialFamilies {
public:
    const IntPoly& fA(unsigned n);
    const IntPoly& fD(unsigned n);
    const IntPoly& fBinv(unsigned n);
    const IntPoly& fbar(unsigned n);
    const IntPoly& g(unsigned n);

private:
    std::map<unsigned, IntPoly> fa_, fd_, fbinv_, fbar_, g_;
};

/// Checks one identity at every index of the range that meets its minimum.
IdentityReport verify_identity(IdentityId id, IndexRange range);
IdentityReport verify_identity(IdentityId id, IndexRange range, PolynomialFamilies& cache);

void to_json(nlohmann::json& j, const IdentityReport& report);

}  // namespace magiclab

#endif  // MAGICLAB_RECURRENCES_HPP
