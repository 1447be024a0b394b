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

#include "magiclab/labelings.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace magiclab {

GraphSpec GraphSpec::line(unsigned n, unsigned m) {
    return GraphSpec{GraphKind::line, n, std::vector<unsigned>(n, m)};
}

GraphSpec GraphSpec::cycle(std::vector<unsigned> loops) {
    GraphSpec spec{GraphKind::cycle, static_cast<unsigned>(loops.size()), std::move(loops)};
    spec.validate();
    return spec;
}

GraphSpec GraphSpec::uniform_cycle(unsigned n, unsigned m) { return cycle(std::vector<unsigned>(n, m)); }

void GraphSpec::validate() const {
    if (loops.size() != n)
        throw LengthMismatchError("loop vector has length " + std::to_string(loops.size()) + ", expected " +
                                  std::to_string(n));
    if (kind == GraphKind::cycle && n == 0) throw std::invalid_argument("a pseudo-cycle needs n >= 1");
}

unsigned GraphSpec::variable_count() const {
    const unsigned loop_total = std::accumulate(loops.begin(), loops.end(), 0u);
    if (kind == GraphKind::cycle) return n + loop_total;
    return n == 0 ? 0 : n + 1 + loop_total;
}

std::string GraphSpec::name() const {
    std::ostringstream os;
    const bool uniform =
        !loops.empty() && std::all_of(loops.begin(), loops.end(), [&](unsigned k) { return k == loops[0]; });
    os << (kind == GraphKind::line ? "L_{" : "C_{") << n << ",";
    if (uniform || loops.empty()) {
        os << (loops.empty() ? 0 : loops[0]);
    } else {
        os << "(";
        for (std::size_t i = 0; i < loops.size(); ++i) os << (i ? "," : "") << loops[i];
        os << ")";
    }
    os << "}";
    return os.str();
}

namespace {

// Ways to split delta among k loop labels: C(delta+k-1, k-1); k = 0 forces delta = 0.
std::vector<Integer> loop_weights(unsigned k, unsigned s) {
    std::vector<Integer> w(s + 1);
    if (k == 0) {
        w[0] = 1;
        return w;
    }
    for (unsigned delta = 0; delta <= s; ++delta) {
        Integer c = 1;
        for (unsigned i = 1; i < k; ++i) c = c * (delta + i) / i;
        w[delta] = c;
    }
    return w;
}

// f'(b') = sum_b f(b) w(s - b - b') over b + b' <= s.
std::vector<Integer> step(const std::vector<Integer>& f, const std::vector<Integer>& w, unsigned s) {
    std::vector<Integer> next(s + 1);
    for (unsigned b = 0; b <= s; ++b) {
        if (f[b] == 0) continue;
        for (unsigned b2 = 0; b + b2 <= s; ++b2) next[b2] += f[b] * w[s - b - b2];
    }
    return next;
}

}  // namespace

Integer count_line(unsigned n, unsigned m, unsigned s) {
    if (n == 0) return Integer(s) + 1;
    const auto w = loop_weights(m, s);
    std::vector<Integer> f(s + 1, Integer(1));
    for (unsigned i = 0; i < n; ++i) f = step(f, w, s);
    return std::accumulate(f.begin(), f.end(), Integer(0));
}

Integer count_cycle(unsigned n, const std::vector<unsigned>& loops, unsigned s) {
    if (loops.size() != n)
        throw LengthMismatchError("loop vector has length " + std::to_string(loops.size()) + ", expected " +
                                  std::to_string(n));
    if (n == 0) throw std::invalid_argument("count_cycle: n must be positive");

    std::vector<std::vector<Integer>> w;
    w.reserve(n);
    for (unsigned k : loops) w.push_back(loop_weights(k, s));

    Integer total = 0;
    if (n == 1) {
        // The single vertex sees its one non-loop label twice.
        for (unsigned b = 0; 2 * b <= s; ++b) total += w[0][s - 2 * b];
        return total;
    }
    for (unsigned first = 0; first <= s; ++first) {
        std::vector<Integer> f(s + 1);
        f[first] = 1;
        for (unsigned i = 0; i + 1 < n; ++i) f = step(f, w[i], s);
        for (unsigned last = 0; last + first <= s; ++last) total += f[last] * w[n - 1][s - last - first];
    }
    return total;
}

Integer count(const GraphSpec& spec, unsigned s) {
    spec.validate();
    if (spec.kind == GraphKind::cycle) return count_cycle(spec.n, spec.loops, s);
    if (spec.n == 0) return Integer(s) + 1;
    if (!std::all_of(spec.loops.begin(), spec.loops.end(), [&](unsigned k) { return k == spec.loops[0]; }))
        throw std::invalid_argument("count: pseudo-lines carry the same loop count at every vertex");
    return count_line(spec.n, spec.loops[0], s);
}

namespace {

struct Variable {
    std::vector<unsigned> vertices;  // with multiplicity
};

class Enumerator {
public:
    Enumerator(std::vector<Variable> vars, unsigned vertex_count, unsigned s)
        : vars_(std::move(vars)), sums_(vertex_count, 0), closes_(vars_.size()), s_(s) {
        std::vector<std::size_t> last(vertex_count, 0);
        for (std::size_t i = 0; i < vars_.size(); ++i)
            for (unsigned v : vars_[i].vertices) last[v] = i;
        for (unsigned v = 0; v < vertex_count; ++v) closes_[last[v]].push_back(v);
    }

    Integer run() {
        recurse(0);
        return total_;
    }

private:
    void recurse(std::size_t idx) {
        if (idx == vars_.size()) {
            ++total_;
            return;
        }
        const auto& incident = vars_[idx].vertices;
        for (unsigned value = 0;; ++value) {
            bool over = false;
            for (unsigned v : incident) {
                sums_[v] += value;
                over = over || sums_[v] > s_;
            }
            bool closed_ok = !over;
            for (unsigned v : closes_[idx]) closed_ok = closed_ok && sums_[v] == s_;
            if (closed_ok) recurse(idx + 1);
            for (unsigned v : incident) sums_[v] -= value;
            if (over) break;
        }
    }

    std::vector<Variable> vars_;
    std::vector<unsigned> sums_;
    std::vector<std::vector<unsigned>> closes_;
    unsigned s_;
    Integer total_ = 0;
};

std::vector<Variable> edge_variables(const GraphSpec& spec) {
    std::vector<Variable> vars;
    const unsigned n = spec.n;
    if (spec.kind == GraphKind::line) {
        // n+1 path edges; the two end edges hang off a single vertex.
        for (unsigned e = 0; e <= n; ++e) {
            Variable v;
            if (e > 0) v.vertices.push_back(e - 1);
            if (e < n) v.vertices.push_back(e);
            vars.push_back(std::move(v));
        }
    } else {
        // Edge i joins vertex i-1 and vertex i (mod n); for n = 1 both ends are vertex 0.
        for (unsigned e = 0; e < n; ++e) vars.push_back(Variable{{(e + n - 1) % n, e}});
    }
    for (unsigned v = 0; v < n; ++v)
        for (unsigned j = 0; j < spec.loops[v]; ++j) vars.push_back(Variable{{v}});
    return vars;
}

}  // namespace

Integer brute_force_count(const GraphSpec& spec, unsigned s, const BruteForceCaps& caps) {
    spec.validate();
    if (spec.variable_count() > caps.max_variables)
        throw InstanceTooLargeError(spec.name() + " has " + std::to_string(spec.variable_count()) +
                                    " edge labels; brute-force cap is " + std::to_string(caps.max_variables));
    if (s > caps.max_sum)
        throw InstanceTooLargeError("magic sum " + std::to_string(s) + " exceeds brute-force cap " +
                                    std::to_string(caps.max_sum));
    if (spec.kind == GraphKind::line && spec.n == 0) return Integer(s) + 1;
    return Enumerator(edge_variables(spec), spec.n, s).run();
}

CountTable count_table(const GraphSpec& spec, unsigned s_max) {
    CountTable table{spec, {}};
    for (unsigned s = 0; s <= s_max; ++s) table.counts.emplace(s, count(spec, s));
    return table;
}

CountTable brute_force_table(const GraphSpec& spec, unsigned s_max, const BruteForceCaps& caps) {
    CountTable table{spec, {}};
    for (unsigned s = 0; s <= s_max; ++s) table.counts.emplace(s, brute_force_count(spec, s, caps));
    return table;
}

std::string to_csv(const CountTable& table) {
    std::ostringstream os;
    os << "s,count\n";
    for (const auto& [s, c] : table.counts) os << s << "," << to_string(c) << "\n";
    return os.str();
}

void to_json(nlohmann::json& j, const GraphSpec& spec) {
    j = nlohmann::json{{"kind", spec.kind == GraphKind::line ? "line" : "cycle"},
                       {"n", spec.n},
                       {"loops", spec.loops}};
}

void to_json(nlohmann::json& j, const CountTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [s, c] : table.counts) rows.push_back({{"s", s}, {"count", to_string(c)}});
    j = nlohmann::json{{"graph", table.spec}, {"counts", std::move(rows)}};
}

}  // namespace magiclab
