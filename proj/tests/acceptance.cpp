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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails. Every comparison is exact.

#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "magiclab/genfun.hpp"
#include "magiclab/labelings.hpp"
#include "magiclab/matrix.hpp"
#include "magiclab/polytope.hpp"
#include "magiclab/recurrences.hpp"

using namespace magiclab;

namespace {

// Tallies checks and keeps the first failure for the report line.
class Tally {
public:
    template <class A, class B>
    void expect_eq(const A& got, const B& want, const std::string& what) {
        ++checks_;
        if (got == want) return;
        ++failures_;
        if (first_.empty()) first_ = what;
    }
    void expect(bool ok, const std::string& what) { expect_eq(ok, true, what); }

    bool passed() const { return failures_ == 0 && checks_ > 0; }
    std::string summary() const {
        std::ostringstream os;
        os << checks_ - failures_ << "/" << checks_ << " checks";
        if (!first_.empty()) os << "; first failure: " << first_;
        return os.str();
    }

private:
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::string first_;
};

std::vector<unsigned> uniform(unsigned n, unsigned k) { return std::vector<unsigned>(n, k); }

std::string at(const char* label, unsigned a) { return std::string(label) + "=" + std::to_string(a); }
std::string at(const char* label, unsigned a, unsigned b) {
    return std::string(label) + "=(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void small_cycle_values(Tally& t) {
    t.expect_eq(count_cycle(1, {2}, 2), Integer(4), "h_{C_{1,2}}(2)");
    t.expect_eq(count_cycle(1, {2}, 3), Integer(6), "h_{C_{1,2}}(3)");
}

void transfer_matrix_equivalence(Tally& t) {
    for (unsigned n = 0; n <= 8; ++n) {
        for (unsigned s = 0; s <= 8; ++s) {
            const IntMatrix p = mat_pow(build_transfer_matrix(s), n);
            const Integer line = n == 0 ? Integer(s + 1) : quadratic_form_all_ones(p);
            const Integer cycle = n == 0 ? Integer(s + 1) : trace(p);
            t.expect_eq(count_line(n, 2, s), line, at("line (n,s)", n, s));
            const Integer counted = n == 0 ? Integer(s + 1) : count_cycle(n, uniform(n, 2), s);
            t.expect_eq(counted, cycle, at("cycle (n,s)", n, s));
        }
    }
}

void line_generating_function(Tally& t) {
    for (unsigned s = 0; s <= 8; ++s) {
        const SeriesTrunc series = fl2_series(s, 8);
        for (unsigned n = 0; n <= 8; ++n)
            t.expect_eq(series[n], Rational(count_line(n, 2, s)), at("FL_2 coefficient (s,n)", s, n));
    }
    PolynomialFamilies f;
    for (unsigned s = 0; s <= 10; ++s) {
        const IntMatrix b = build_transfer_matrix(s);
        t.expect_eq(gen_Q(s), det_I_minus_yM(b), at("Q_s vs det(I - yB_{s+1}), s", s));
        t.expect_eq(gen_P(s), adjugate_quadratic_form(b), at("P_s vs adjugate form, s", s));
    }
    // Initial values as printed.
    const std::vector<IntPoly> g{{1}, {2}, {3, -2}, {4, -4, -2}};
    const std::vector<IntPoly> fbar{{1, -1}, {1, -2, -1}, {1, -4, -2, 1}, {1, -6, -7, 2, 1}};
    for (unsigned i = 0; i < 4; ++i) {
        t.expect_eq(f.g(i + 1), g[i], at("g_n anchor, n", i + 1));
        t.expect_eq(f.fbar(i + 1), fbar[i], at("fbar_n anchor, n", i + 1));
        t.expect_eq(gen_P(i), g[i], at("P_s anchor, s", i));
        t.expect_eq(gen_Q(i), fbar[i], at("Q_s anchor, s", i));
    }
}

void cycle_generating_function(Tally& t) {
    for (unsigned s = 0; s <= 8; ++s) {
        const SeriesTrunc series = fc2_series(s, 8);
        t.expect_eq(series[0], Rational(s + 1), at("FC_2 constant term, s", s));
        for (unsigned n = 1; n <= 8; ++n)
            t.expect_eq(series[n], Rational(count_cycle(n, uniform(n, 2), s)), at("FC_2 coefficient (s,n)", s, n));
    }
}

void identity_catalog_holds(Tally& t) {
    PolynomialFamilies cache;
    for (const auto& info : identity_catalog()) {
        const IdentityReport r = verify_identity(info.id, {0, 12}, cache);
        for (const auto& c : r.checks) {
            std::ostringstream what;
            what << info.key << " at n=" << c.index << " (difference " << c.difference << ")";
            t.expect(c.holds, what.str());
        }
    }
}

void numerator_tables(Tally& t) {
    // Table of EL_{m,2}(x)(1-x)^{2m+2}, m = 0..6.
    const std::vector<IntPoly> el{
        {1},
        {1},
        {1, 4, 1},
        {1, 16, 37, 16, 1},
        {1, 48, 351, 656, 351, 48, 1},
        {1, 128, 2286, 11120, 18471, 11120, 2286, 128, 1},
        {1, 324, 12530, 130420, 490309, 753488, 490309, 130420, 12530, 324, 1},
    };
    for (unsigned m = 0; m < el.size(); ++m) {
        const NumeratorReport r = clear_denominator(SeriesKind::EL, m);
        t.expect(r.stabilized, at("EL stabilized, m", m));
        t.expect_eq(r.numerator, el[m], at("EL numerator, m", m));
    }

    const std::vector<IntPoly> ec{{1}, {1}, {1, 1}, {1, 8, 15, 8, 1}, {1, 25, 106, 106, 25, 1}};
    for (unsigned n = 0; n < ec.size(); ++n) {
        const NumeratorReport r = clear_denominator(SeriesKind::EC, n);
        t.expect(r.stabilized, at("EC stabilized, n", n));
        t.expect_eq(r.numerator, ec[n], at("EC numerator, n", n));
    }

    // Only a prefix of the n = 5 row is printed.
    const NumeratorReport five = clear_denominator(SeriesKind::EC, 5);
    t.expect(five.stabilized, "EC stabilized, n=5");
    t.expect(is_palindromic(five.numerator), "EC n=5 palindromic");
    t.expect_eq(five.numerator.degree(), 8L, "EC n=5 degree");
    const std::vector<Integer> prefix{1, 72, 878, 3304, 4995};
    for (std::size_t i = 0; i < prefix.size(); ++i)
        t.expect_eq(five.numerator[i], prefix[i], at("EC n=5 prefix coefficient", static_cast<unsigned>(i)));
}

void quasi_polynomial_fits(Tally& t) {
    constexpr unsigned holdouts = 10;
    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<unsigned> k;
            unsigned total = 0;
            for (unsigned i = 0; i < n; ++i) {
                k.push_back((mask >> i & 1u) ? 2u : 1u);
                total += k.back();
            }
            const std::string name = GraphSpec::cycle(k).name();

            // Solve on exactly degree+2 samples, then predict the holdouts.
            std::map<unsigned, Integer> window, all;
            for (unsigned s = 0; s < total + 2 + holdouts; ++s) {
                const Integer h = count_cycle(n, k, s);
                if (s < total + 2) window.emplace(s, h);
                all.emplace(s, h);
            }
            const QuasiPoly q = quasipoly_fit(window, total);
            t.expect_eq(q.phi.degree(), static_cast<long>(total), name + " degree");
            t.expect_eq(q.psi, psi_formula(n, k), name + " psi");
            for (unsigned s = total + 2; s < total + 2 + holdouts; ++s)
                t.expect_eq(q.evaluate(s), Rational(all.at(s)), name + " holdout s=" + std::to_string(s));

            // No lower degree explains the full window.
            t.expect_eq(fit_minimal_degree(all, total).degree, total, name + " minimal degree");
        }
    }
}

void three_cycle_closed_form(Tally& t) {
    const IntPoly den = IntPoly{1, 1} * pow(IntPoly{1, -1}, 4);
    const SeriesTrunc closed = series_quotient(IntPoly{1, 1, 1}, den, 12);
    for (unsigned s = 0; s <= 12; ++s)
        t.expect_eq(closed[s], Rational(count_cycle(3, {1, 1, 1}, s)), at("closed form coefficient, s", s));
    t.expect_eq(psi_limit_check(3, {1, 1, 1}, 12), Rational(1, 16), "psi limit");
}

std::vector<Rational> rats(std::initializer_list<Rational> xs) { return std::vector<Rational>(xs); }

void polytope_claims(Tally& t) {
    const Rational h(1, 2);
    const std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> example{
        {rats({1, 1, 1}), rats({0, 0, 0})},
        {rats({0, 1, 0}), rats({1, 0, 0})},
        {rats({0, 0, 1}), rats({0, 1, 0})},
        {rats({1, 0, 0}), rats({0, 0, 1})},
        {rats({0, 0, 0}), rats({h, h, h})},
    };
    const auto v3 = vertices(3);
    t.expect_eq(v3.size(), example.size(), "vertex count n=3");
    for (std::size_t i = 0; i < std::min(v3.size(), example.size()); ++i) {
        t.expect_eq(v3[i].alpha, example[i].first, at("n=3 vertex alpha", static_cast<unsigned>(i)));
        t.expect_eq(v3[i].beta, example[i].second, at("n=3 vertex beta", static_cast<unsigned>(i)));
    }

    for (unsigned n = 3; n <= 10; ++n)
        t.expect_eq(vertices(n).size(), stable_sets(n).size() + (n % 2), at("vertex count, n", n));

    for (unsigned n = 3; n <= 12; ++n) {
        const auto sets = stable_sets(n);
        std::map<std::size_t, std::size_t> by_size;
        for (const auto& s : sets) ++by_size[s.members.size()];
        t.expect_eq(Integer(by_size[n / 2]), Integer(n % 2 == 0 ? 2 : n), at("maximum stable sets, n", n));
        t.expect_eq(max_stable_count(n), n % 2 == 0 ? 2u : n, at("max_stable_count, n", n));
        for (unsigned k = 0; k <= n; ++k)
            t.expect_eq(kaplansky_count(n, k), Integer(by_size[k]), at("Kaplansky (n,k)", n, k));
    }

    for (unsigned n = 3; n <= 9; n += 2) {
        t.expect(simplex_affinely_independent(n), at("affine independence, n", n));
        t.expect_eq(hyperplane_vertices(n).size(), std::size_t{n}, at("hyperplane vertex count, n", n));
    }
}

void loop_free_closed_forms(Tally& t) {
    for (unsigned n = 0; n <= 6; ++n)
        for (unsigned s = 0; s <= 8; ++s) t.expect_eq(count_line(n, 0, s), Integer(s + 1), at("L_{n,0} (n,s)", n, s));
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned s = 0; s <= 8; ++s) {
            const Integer want = n % 2 == 0 ? Integer(s + 1) : Integer(s % 2 == 0 ? 1 : 0);
            t.expect_eq(count_cycle(n, uniform(n, 0), s), want, at("C_{n,0} (n,s)", n, s));
        }
}

struct Criterion {
    const char* name;
    std::function<void(Tally&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"small cycle values", small_cycle_values},
        {"transfer-matrix equivalence", transfer_matrix_equivalence},
        {"pseudo-line generating function and index bridge", line_generating_function},
        {"pseudo-cycle generating function", cycle_generating_function},
        {"identity catalog through n=12", identity_catalog_holds},
        {"Ehrhart numerator tables", numerator_tables},
        {"quasi-polynomial degree and alternating constant", quasi_polynomial_fits},
        {"three-cycle closed form and psi limit", three_cycle_closed_form},
        {"polytope vertices and stable sets", polytope_claims},
        {"loop-free closed forms", loop_free_closed_forms},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Tally t;
        std::string error;
        try {
            criteria[i].run(t);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const bool ok = error.empty() && t.passed();
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].name << ": " << t.summary();
        if (!error.empty()) std::cout << "; exception: " << error;
        std::cout << '\n';
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
