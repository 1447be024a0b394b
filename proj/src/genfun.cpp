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

#include "magiclab/genfun.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "magiclab/labelings.hpp"
#include "magiclab/recurrences.hpp"

namespace magiclab {

SeriesTrunc fl2_series(unsigned s, std::size_t order) { return series_quotient(gen_P(s), gen_Q(s), order); }

SeriesTrunc fc2_series(unsigned s, std::size_t order) {
    const IntPoly q = gen_Q(s);
    SeriesTrunc out = series_quotient(-(IntPoly{0, 1} * derivative(q)), q, order);
    out[0] += Rational(s + 1);
    return out;
}

std::string to_string(SeriesKind kind) { return kind == SeriesKind::EL ? "EL" : "EC"; }

IntPoly ClearingFactor::polynomial() const {
    IntPoly p = pow(IntPoly{1, -1}, one_minus_x_power);
    if (one_plus_x) p *= IntPoly{1, 1};
    return p;
}

std::string ClearingFactor::to_string() const {
    std::ostringstream os;
    os << "(1-x)^" << one_minus_x_power;
    if (one_plus_x) os << "(1+x)";
    return os.str();
}

ClearingFactor clearing_factor(SeriesKind kind, unsigned n) {
    if (kind == SeriesKind::EL) return {2 * n + 2, false};
    if (n == 0) return {2, false};
    return {2 * n + 1, n % 2 == 1};
}

std::size_t default_numerator_order(SeriesKind kind, unsigned n) {
    return clearing_factor(kind, n).degree() - 1 + 8;
}

std::vector<Integer> magic_sum_counts(SeriesKind kind, unsigned n, std::size_t order) {
    std::vector<Integer> h;
    h.reserve(order + 1);
    for (unsigned s = 0; s <= order; ++s) {
        if (kind == SeriesKind::EL) h.push_back(count_line(n, 2, s));
        else if (n == 0) h.push_back(Integer(s) + 1);
        else h.push_back(count_cycle(n, std::vector<unsigned>(n, 2), s));
    }
    return h;
}

NumeratorReport clear_denominator(SeriesKind kind, unsigned n, std::optional<std::size_t> order) {
    const ClearingFactor factor = clearing_factor(kind, n);
    const unsigned bound = factor.degree() - 1;
    const std::size_t N = order.value_or(default_numerator_order(kind, n));

    std::vector<Rational> h;
    for (const auto& v : magic_sum_counts(kind, n, N)) h.emplace_back(v);
    const SeriesTrunc cleared = multiply_truncated(to_rational(factor.polynomial()), SeriesTrunc(std::move(h)));

    bool stabilized = N > bound;
    for (std::size_t i = bound + 1; i <= N; ++i) stabilized = stabilized && cleared[i] == 0;

    std::vector<Integer> head;
    for (std::size_t i = 0; i <= std::min<std::size_t>(bound, N); ++i)
        head.push_back(boost::multiprecision::numerator(cleared[i]));
    return NumeratorReport{kind, n, factor, IntPoly(std::move(head)), bound, N, stabilized};
}

NumeratorReport ehrhart_numerator(SeriesKind kind, unsigned n, std::optional<std::size_t> order) {
    NumeratorReport report = clear_denominator(kind, n, order);
    if (!report.stabilized) {
        std::ostringstream os;
        os << to_string(kind) << "_{" << n << ",2}(x)" << report.factor.to_string()
           << " has nonzero coefficients past degree " << report.degree_bound << " up to order " << report.order;
        throw NotStabilizedError(os.str());
    }
    return report;
}

bool is_palindromic(const IntPoly& p) {
    const auto& c = p.coeffs();
    return std::equal(c.begin(), c.begin() + static_cast<long>(c.size() / 2), c.rbegin());
}

Rational QuasiPoly::evaluate(unsigned s) const {
    const Rational alt = (s % 2 == 0) ? psi : Rational(-psi);
    return phi.evaluate(Rational(s)) + alt;
}

QuasiPoly quasipoly_fit(const std::map<unsigned, Integer>& samples, unsigned degree) {
    const std::size_t unknowns = degree + 2;
    if (samples.size() < unknowns)
        throw InconsistentSamplesError("need at least " + std::to_string(unknowns) + " samples for degree " +
                                       std::to_string(degree));
    {
        unsigned expect = samples.begin()->first;
        for (const auto& [s, v] : samples) {
            if (s != expect) throw std::invalid_argument("quasipoly_fit: samples must sit at consecutive s");
            ++expect;
        }
    }

    // Rows: [1, s, ..., s^degree, (-1)^s | h(s)].
    std::vector<std::vector<Rational>> a;
    auto it = samples.begin();
    for (std::size_t r = 0; r < unknowns; ++r, ++it) {
        std::vector<Rational> row;
        Rational power(1);
        for (unsigned j = 0; j <= degree; ++j) {
            row.push_back(power);
            power *= Rational(it->first);
        }
        row.emplace_back(it->first % 2 == 0 ? 1 : -1);
        row.emplace_back(it->second);
        a.push_back(std::move(row));
    }
    for (std::size_t c = 0; c < unknowns; ++c) {
        std::size_t p = c;
        while (p < unknowns && a[p][c] == 0) ++p;
        if (p == unknowns) throw InconsistentSamplesError("quasipoly_fit: singular sample system");
        std::swap(a[c], a[p]);
        for (std::size_t r = 0; r < unknowns; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k <= unknowns; ++k) a[r][k] -= f * a[c][k];
        }
    }
    std::vector<Rational> phi(degree + 1);
    for (unsigned j = 0; j <= degree; ++j) phi[j] = a[j][unknowns] / a[j][j];
    QuasiPoly q{RatPoly(std::move(phi)), a[unknowns - 1][unknowns] / a[unknowns - 1][unknowns - 1], degree};

    for (const auto& [s, v] : samples) {
        if (q.evaluate(s) != Rational(v)) {
            throw InconsistentSamplesError("degree-" + std::to_string(degree) +
                                           " quasi-polynomial misses the sample at s=" + std::to_string(s));
        }
    }
    return q;
}

QuasiPoly fit_minimal_degree(const std::map<unsigned, Integer>& samples, unsigned max_degree) {
    for (unsigned d = 0; d <= max_degree && d + 2 <= samples.size(); ++d) {
        try {
            QuasiPoly q = quasipoly_fit(samples, d);
            q.degree = q.phi.is_zero() ? 0u : static_cast<unsigned>(q.phi.degree());
            return q;
        } catch (const InconsistentSamplesError&) {
        }
    }
    throw InconsistentSamplesError("no quasi-polynomial of degree <= " + std::to_string(max_degree) +
                                   " fits the samples");
}

Rational psi_formula(unsigned n, const std::vector<unsigned>& loops) {
    if (loops.size() != n) throw LengthMismatchError("psi_formula: loop vector length differs from n");
    if (n == 0) throw std::invalid_argument("psi_formula: n must be positive");
    unsigned total = 0;
    for (unsigned k : loops) {
        if (k == 0) throw std::invalid_argument("psi_formula: every vertex needs at least one loop");
        total += k;
    }
    if (n % 2 == 0) return Rational(0);
    return Rational(2, Integer(1) << (total + 2));
}

SeriesTrunc cycle_series_s(unsigned n, const std::vector<unsigned>& loops, std::size_t order) {
    SeriesTrunc out(order);
    for (unsigned s = 0; s <= order; ++s) out[s] = Rational(count_cycle(n, loops, s));
    return out;
}

RationalFunction generating_function(const QuasiPoly& q) {
    const unsigned d = q.degree;
    const RatPoly one_minus_t{Rational(1), Rational(-1)};
    const RatPoly one_plus_t{Rational(1), Rational(1)};
    const RatPoly t{Rational(0), Rational(1)};

    // sum_s s^j t^s = E_j(t) / (1-t)^{j+1}, with E_{j+1} = t[(1-t)E_j' + (j+1)E_j].
    std::vector<RatPoly> eulerian{RatPoly::constant(Rational(1))};
    for (unsigned j = 0; j < d; ++j) {
        const RatPoly& e = eulerian.back();
        eulerian.push_back(t * (one_minus_t * derivative(e) + Rational(j + 1) * e));
    }
    RatPoly poly_part;
    for (unsigned j = 0; j <= d; ++j) {
        if (q.phi[j] == 0) continue;
        poly_part += q.phi[j] * (eulerian[j] * pow(one_minus_t, d - j));
    }
    const RatPoly base = pow(one_minus_t, d + 1);
    return RationalFunction{poly_part * one_plus_t + q.psi * base, base * one_plus_t};
}

namespace {

// p(t) / (t - root); throws if the remainder is nonzero.
RatPoly divide_exact_linear(const RatPoly& p, const Rational& root) {
    if (p.is_zero()) return {};
    const std::size_t deg = p.size() - 1;
    std::vector<Rational> quotient(deg);
    Rational carry(0);
    for (std::size_t i = deg + 1; i-- > 0;) {
        const Rational value = p[i] + carry * root;
        if (i == 0) {
            if (value != 0) throw std::domain_error("divide_exact_linear: nonzero remainder");
        } else {
            quotient[i - 1] = value;
        }
        carry = value;
    }
    return RatPoly(std::move(quotient));
}

}  // namespace

Rational psi_limit_check(unsigned n, const std::vector<unsigned>& loops, std::size_t order) {
    std::map<unsigned, Integer> samples;
    for (unsigned s = 0; s <= order; ++s) samples.emplace(s, count_cycle(n, loops, s));
    const unsigned max_degree = static_cast<unsigned>(samples.size()) - 2;
    const QuasiPoly q = fit_minimal_degree(samples, max_degree);
    const RationalFunction h = generating_function(q);

    const SeriesTrunc expanded = series_quotient(h.num, h.den, order);
    for (unsigned s = 0; s <= order; ++s)
        if (expanded[s] != Rational(samples.at(s)))
            throw InconsistentSamplesError("rebuilt generating function misses h(" + std::to_string(s) + ")");

    // (1+t) H(t): clear the (1+t) in the denominator, then evaluate at t = -1.
    const RatPoly reduced_den = divide_exact_linear(h.den, Rational(-1));
    return h.num.evaluate(Rational(-1)) / reduced_den.evaluate(Rational(-1));
}

void to_json(nlohmann::json& j, const QuasiPoly& q) {
    j = nlohmann::json{{"phi", q.phi}, {"psi", to_string(q.psi)}, {"degree", q.degree}};
}

void to_json(nlohmann::json& j, const NumeratorReport& r) {
    j = nlohmann::json{{"kind", to_string(r.kind)},
                       {"n", r.n},
                       {"one_minus_x_power", r.factor.one_minus_x_power},
                       {"one_plus_x", r.factor.one_plus_x},
                       {"numerator", r.numerator},
                       {"degree_bound", r.degree_bound},
                       {"order", r.order},
                       {"stabilized", r.stabilized}};
}

}  // namespace magiclab
