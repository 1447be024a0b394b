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

#include "magiclab/recurrences.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "magiclab/matrix.hpp"

namespace magiclab {

namespace {

const IntPoly kY{0, 1};

IntPoly four_term_step(const std::vector<IntPoly>& seq, std::size_t n) {
    return -(kY * (alternate_sign(seq[n - 1]) + alternate_sign(seq[n - 3]))) + Integer(2) * seq[n - 2] -
           seq[n - 4];
}

IntPoly run_recurrence(std::vector<IntPoly> seq, unsigned n) {
    for (std::size_t k = seq.size(); k <= n; ++k) seq.push_back(four_term_step(seq, k));
    return seq[n];
}

Integer sign_pow(unsigned long e) { return (e % 2 == 0) ? Integer(1) : Integer(-1); }

constexpr std::array<IdentityInfo, 14> kCatalog{{
    {IdentityId::fa_diff_eq_fd_sum, "fAn-diff-eq-fDn-sum", 3, "fA(n) - fA(n-2) = fD(n) + fD(n-2)"},
    {IdentityId::fbinv_via_fd, "fBnInv-via-fDn1", 3, "fBi(n) = (-1)^(n-1) y fD(n-1)(-y) - fBi(n-2)"},
    {IdentityId::fbinv_eq_fa, "fBnInv-eq-fAn", 1, "fBi(n) = fA(n)"},
    {IdentityId::fbinv_diff_eq_fd_sum, "fBnInv-diff-eq-fDn-sum", 5, "fBi(n) - fBi(n-2) = fD(n) + fD(n-2)"},
    {IdentityId::fbinv_via_three_fd, "fBnInv-via-three-fD", 5,
     "fBi(n) = [fD(n) + (-1)^(n-1) y fD(n-1)(-y) + fD(n-2)] / 2"},
    {IdentityId::fd_recurrence, "fDn-rec", 5,
     "fD(n) = (-1)^(n-1) y [fD(n-1)(-y) - fD(n-3)(-y)] - 2 fD(n-2) - fD(n-4)"},
    {IdentityId::fbinv_recurrence, "fBnInv-rec", 5,
     "fBi(n) = (-1)^(n-1) y [fBi(n-1)(-y) - fBi(n-3)(-y)] - 2 fBi(n-2) - fBi(n-4)"},
    {IdentityId::fbinv_eq_signed_fbar, "fBnInv-eq-signed-fbar", 1, "fBi(n) = (-1)^(n(n+1)/2) det(I - yB_n)"},
    {IdentityId::fbar_recurrence, "fbar-rec", 5,
     "fbar(n) = -y [fbar(n-1)(-y) + fbar(n-3)(-y)] + 2 fbar(n-2) - fbar(n-4)"},
    {IdentityId::g_recurrence_with_fbar, "gn-rec-with-fbar", 5,
     "g(n) = 2 g(n-2) - g(n-4) + 2 [fbar(n-2) - fbar(n-4)]"},
    {IdentityId::g_sum_eq_fd, "gn-sum-eq-fD", 5, "g(n) + g(n-2) = (-1)^(n(n+1)/2+1) 2 fD(n-2)"},
    {IdentityId::fbar_diff_eq_g_sum, "fbar-diff-eq-gn-sum", 5,
     "2 [fbar(n-2) - fbar(n-4)] = -y [g(n-1)(-y) + g(n-3)(-y)]"},
    {IdentityId::g_recurrence, "gn-rec", 5, "g(n) = -y [g(n-1)(-y) + g(n-3)(-y)] + 2 g(n-2) - g(n-4)"},
    {IdentityId::index_bridge, "index-bridge", 0, "Q_s = det(I - yB_{s+1}) and P_s = g(s+1)"},
}};

template <class Fn>
const IntPoly& memo(std::map<unsigned, IntPoly>& table, unsigned n, Fn&& compute) {
    auto it = table.find(n);
    if (it == table.end()) it = table.emplace(n, compute()).first;
    return it->second;
}

}  // namespace

IntPoly gen_P(unsigned n) {
    return run_recurrence({IntPoly{1}, IntPoly{2}, IntPoly{3, -2}, IntPoly{4, -4, -2}}, n);
}

IntPoly gen_Q(unsigned n) {
    return run_recurrence({IntPoly{1, -1}, IntPoly{1, -2, -1}, IntPoly{1, -4, -2, 1}, IntPoly{1, -6, -7, 2, 1}}, n);
}

std::span<const IdentityInfo> identity_catalog() { return kCatalog; }

const IdentityInfo& identity_info(IdentityId id) {
    for (const auto& info : kCatalog)
        if (info.id == id) return info;
    throw UnknownIdentityError("identity not in catalog");
}

IdentityId parse_identity(std::string_view key) {
    for (const auto& info : kCatalog)
        if (info.key == key) return info.id;
    throw UnknownIdentityError("unknown identity '" + std::string(key) + "'");
}

std::size_t IdentityReport::pass_count() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.holds; }));
}

bool IdentityReport::all_hold() const { return pass_count() == checks.size(); }

std::optional<IdentityCheck> IdentityReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.holds) return c;
    return std::nullopt;
}

// Order-0 matrices do not occur: every identity's minimum index keeps the
// smallest referenced order at 1.
const IntPoly& PolynomialFamilies::fA(unsigned n) {
    return memo(fa_, n, [n] { return char_poly(build_A(n)); });
}
const IntPoly& PolynomialFamilies::fD(unsigned n) {
    return memo(fd_, n, [n] { return char_poly(build_D(n)); });
}
const IntPoly& PolynomialFamilies::fBinv(unsigned n) {
    return memo(fbinv_, n, [n] { return char_poly(build_B_inverse(n)); });
}
const IntPoly& PolynomialFamilies::fbar(unsigned n) {
    return memo(fbar_, n, [n] { return det_I_minus_yM(build_transfer_matrix(n - 1)); });
}
const IntPoly& PolynomialFamilies::g(unsigned n) {
    return memo(g_, n, [n] { return adjugate_quadratic_form(build_transfer_matrix(n - 1)); });
}

namespace {

IntPoly difference_at(IdentityId id, unsigned n, PolynomialFamilies& f) {
    const auto neg = [](const IntPoly& p) { return alternate_sign(p); };
    const Integer two = 2;
    switch (id) {
        case IdentityId::fa_diff_eq_fd_sum:
            return (f.fA(n) - f.fA(n - 2)) - (f.fD(n) + f.fD(n - 2));
        case IdentityId::fbinv_via_fd:
            return f.fBinv(n) - (sign_pow(n - 1) * (kY * neg(f.fD(n - 1))) - f.fBinv(n - 2));
        case IdentityId::fbinv_eq_fa:
            return f.fBinv(n) - f.fA(n);
        case IdentityId::fbinv_diff_eq_fd_sum:
            return (f.fBinv(n) - f.fBinv(n - 2)) - (f.fD(n) + f.fD(n - 2));
        case IdentityId::fbinv_via_three_fd:
            return two * f.fBinv(n) - (f.fD(n) + sign_pow(n - 1) * (kY * neg(f.fD(n - 1))) + f.fD(n - 2));
        case IdentityId::fd_recurrence:
            return f.fD(n) - (sign_pow(n - 1) * (kY * (neg(f.fD(n - 1)) - neg(f.fD(n - 3)))) -
                              two * f.fD(n - 2) - f.fD(n - 4));
        case IdentityId::fbinv_recurrence:
            return f.fBinv(n) - (sign_pow(n - 1) * (kY * (neg(f.fBinv(n - 1)) - neg(f.fBinv(n - 3)))) -
                                 two * f.fBinv(n - 2) - f.fBinv(n - 4));
        case IdentityId::fbinv_eq_signed_fbar:
            return f.fBinv(n) - sign_pow(static_cast<unsigned long>(n) * (n + 1) / 2) * f.fbar(n);
        case IdentityId::fbar_recurrence:
            return f.fbar(n) - (-(kY * (neg(f.fbar(n - 1)) + neg(f.fbar(n - 3)))) + two * f.fbar(n - 2) -
                                f.fbar(n - 4));
        case IdentityId::g_recurrence_with_fbar:
            return f.g(n) - (two * f.g(n - 2) - f.g(n - 4) + two * (f.fbar(n - 2) - f.fbar(n - 4)));
        case IdentityId::g_sum_eq_fd:
            return (f.g(n) + f.g(n - 2)) -
                   sign_pow(static_cast<unsigned long>(n) * (n + 1) / 2 + 1) * (two * f.fD(n - 2));
        case IdentityId::fbar_diff_eq_g_sum:
            return two * (f.fbar(n - 2) - f.fbar(n - 4)) + kY * (neg(f.g(n - 1)) + neg(f.g(n - 3)));
        case IdentityId::g_recurrence:
            return f.g(n) - (-(kY * (neg(f.g(n - 1)) + neg(f.g(n - 3)))) + two * f.g(n - 2) - f.g(n - 4));
        case IdentityId::index_bridge: {
            // Reports the Q-side difference first, then the P-side one.
            IntPoly dq = gen_Q(n) - f.fbar(n + 1);
            if (!dq.is_zero()) return dq;
            return gen_P(n) - f.g(n + 1);
        }
    }
    throw UnknownIdentityError("identity not in catalog");
}

}  // namespace

IdentityReport verify_identity(IdentityId id, IndexRange range, PolynomialFamilies& cache) {
    const auto& info = identity_info(id);
    IdentityReport report{id, range, {}};
    for (unsigned n = std::max(range.lo, info.min_index); n <= range.hi; ++n) {
        IntPoly diff = difference_at(id, n, cache);
        const bool holds = diff.is_zero();
        report.checks.push_back(IdentityCheck{n, holds, std::move(diff)});
    }
    return report;
}

IdentityReport verify_identity(IdentityId id, IndexRange range) {
    PolynomialFamilies cache;
    return verify_identity(id, range, cache);
}

void to_json(nlohmann::json& j, const IdentityReport& report) {
    const auto& info = identity_info(report.id);
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json entry{{"n", c.index}, {"holds", c.holds}};
        if (!c.holds) entry["difference"] = c.difference;
        checks.push_back(std::move(entry));
    }
    j = nlohmann::json{{"id", std::string(info.key)},
                       {"statement", std::string(info.statement)},
                       {"range", {report.range.lo, report.range.hi}},
                       {"checked", report.checks.size()},
                       {"passed", report.pass_count()},
                       {"checks", std::move(checks)}};
}

}  // namespace magiclab
