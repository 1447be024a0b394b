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

#include "magiclab/cli.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "magiclab/genfun.hpp"
#include "magiclab/polytope.hpp"
#include "magiclab/recurrences.hpp"

namespace magiclab::cli {

namespace {

constexpr unsigned kDefaultSMax = 10;
constexpr unsigned kDefaultVerifyNMax = 12;
constexpr unsigned kDefaultTableNMax = 4;
constexpr std::size_t kDefaultSeriesOrder = 8;
constexpr unsigned kFitHoldouts = 10;

struct Flags {
    bool line = false;
    bool cycle = false;
    bool el = false;
    bool ec = false;
    bool fl2 = false;
    bool fc2 = false;
    std::string format = "text";
};

void add_graph_options(CLI::App* sub, RunConfig& c, Flags& f) {
    auto* line = sub->add_flag("--line", f.line, "pseudo-line L_{n,m}");
    auto* cycle = sub->add_flag("--cycle", f.cycle, "pseudo-cycle C_{n,k}");
    line->excludes(cycle);
    sub->add_option("-n", c.n, "number of vertices");
    sub->add_option("-m", c.m, "loops per vertex (lines)");
    sub->add_option("-k", c.k, "loops per vertex, comma separated; one value applies to every vertex")
        ->delimiter(',');
}

void build_app(CLI::App& app, RunConfig& c, Flags& f) {
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", f.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--order", c.order, "series truncation order");
    app.add_option("--s-max", c.s_max, "largest magic sum");
    app.add_option("--n-max", c.n_max, "largest index n");
    app.add_option("--brute-cap", c.brute_cap, "largest variable count the exhaustive counter accepts");

    auto* count = app.add_subcommand("count", "count magic labelings for s = 0..s-max");
    add_graph_options(count, c, f);
    count->add_flag("--brute", c.brute, "count by exhaustive enumeration");
    count->callback([&c] { c.command = Command::count; });

    auto* verify = app.add_subcommand("verify", "check polynomial identities for n <= n-max");
    auto* all = verify->add_flag("--all", c.all_identities, "every identity in the catalog");
    auto* id = verify->add_option("--id", c.identity_ids, "identity key (repeatable)")->delimiter(',');
    all->excludes(id);
    verify->callback([&c] { c.command = Command::verify; });

    auto* table = app.add_subcommand("table", "Ehrhart numerators of the magic-sum generating functions");
    auto* el = table->add_flag("--el", f.el, "pseudo-lines L_{n,2}");
    auto* ec = table->add_flag("--ec", f.ec, "pseudo-cycles C_{n,2}");
    el->excludes(ec);
    table->add_option("-n", c.n, "single row n");
    table->callback([&c] { c.command = Command::table; });

    auto* fit = app.add_subcommand("fit", "fit phi(s) + (-1)^s psi to a cycle's counts");
    add_graph_options(fit, c, f);
    fit->add_option("--degree", c.degree, "degree of phi (default: total loop count)");
    fit->callback([&c] { c.command = Command::fit; });

    auto* series = app.add_subcommand("series", "series coefficients");
    add_graph_options(series, c, f);
    auto* fl2 = series->add_flag("--fl2", f.fl2, "h_{L_{n,2}}(s) over n");
    auto* fc2 = series->add_flag("--fc2", f.fc2, "h_{C_{n,2}}(s) over n");
    fl2->excludes(fc2);
    series->add_option("-s", c.s, "magic sum for --fl2 / --fc2");
    series->callback([&c] { c.command = Command::series; });

    auto* poly = app.add_subcommand("polytope", "vertices of the C_{n,1} labeling polytope");
    poly->add_option("-n", c.n, "cycle length (n >= 3)")->required();
    poly->add_flag("--hyperplane", c.hyperplane_only, "only vertices on sum beta = (n-1)/2 (odd n)");
    poly->callback([&c] { c.command = Command::polytope; });
}

void finish_config(RunConfig& c, const Flags& f) {
    c.format = f.format == "json" ? Format::json : (f.format == "csv" ? Format::csv : Format::text);
    if (f.line) c.kind = GraphKind::line;
    if (f.cycle) c.kind = GraphKind::cycle;
    if (f.el) c.family = Family::el;
    if (f.ec) c.family = Family::ec;
    if (f.fl2) c.family = Family::fl2;
    if (f.fc2) c.family = Family::fc2;
}

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

template <class T>
std::vector<std::string> render_all(const std::vector<T>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(to_string(x));
    return out;
}

// Left-aligned columns, two spaces apart.
void print_columns(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (width.size() <= i) width.push_back(0);
            width[i] = std::max(width[i], r[i].size());
        }
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
        }
        out << line << '\n';
    }
}

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

GraphSpec graph_from(const RunConfig& c) {
    if (!c.kind) throw UsageError("choose --line or --cycle");
    if (*c.kind == GraphKind::line) {
        if (!c.n || !c.m) throw UsageError("--line needs -n and -m");
        if (!c.k.empty()) throw UsageError("--line takes -m, not -k");
        return GraphSpec::line(*c.n, *c.m);
    }
    if (c.m) throw UsageError("--cycle takes -k, not -m");
    if (c.k.empty()) throw UsageError("--cycle needs -k");
    std::vector<unsigned> loops = c.k;
    const unsigned n = c.n.value_or(static_cast<unsigned>(loops.size()));
    if (loops.size() == 1 && n != 1) loops.assign(n, loops.front());
    if (loops.size() != n)
        throw LengthMismatchError("-k has " + std::to_string(loops.size()) + " entries but n = " + std::to_string(n));
    if (n == 0) throw UsageError("cycles need n >= 1");
    return GraphSpec::cycle(std::move(loops));
}

int cmd_count(const RunConfig& c, std::ostream& out) {
    const GraphSpec spec = graph_from(c);
    const unsigned s_max = c.s_max.value_or(kDefaultSMax);
    const CountTable table =
        c.brute ? brute_force_table(spec, s_max, BruteForceCaps{c.brute_cap, BruteForceCaps{}.max_sum})
                : count_table(spec, s_max);
    switch (c.format) {
        case Format::json:
            print_json(out, table);
            break;
        case Format::csv:
            out << to_csv(table);
            break;
        case Format::text: {
            out << spec.name() << '\n';
            std::vector<std::vector<std::string>> rows{{"s", "count"}};
            for (const auto& [s, v] : table.counts) rows.push_back({std::to_string(s), to_string(v)});
            print_columns(out, rows);
        }
    }
    return ExitCode::ok;
}

std::string poly_text(const IntPoly& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

// The stream operator names the variable y; phi is a polynomial in s.
std::string in_variable_s(const RatPoly& p) {
    std::ostringstream os;
    os << p;
    std::string text = os.str();
    std::replace(text.begin(), text.end(), 'y', 's');
    return text;
}

std::string csv_field(std::string s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    std::vector<IdentityId> ids;
    if (c.all_identities) {
        for (const auto& info : identity_catalog()) ids.push_back(info.id);
    } else {
        if (c.identity_ids.empty()) throw UsageError("verify needs --all or --id");
        for (const auto& key : c.identity_ids) ids.push_back(parse_identity(key));
    }
    const IndexRange range{0, c.n_max.value_or(kDefaultVerifyNMax)};

    PolynomialFamilies cache;
    std::vector<IdentityReport> reports;
    for (auto id : ids) reports.push_back(verify_identity(id, range, cache));
    const bool all_hold = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.all_hold(); });

    switch (c.format) {
        case Format::json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : reports) arr.push_back(r);
            print_json(out, nlohmann::json{{"all_hold", all_hold}, {"reports", std::move(arr)}});
            break;
        }
        case Format::csv:
            out << "id,lo,hi,checked,passed,first_failure,difference\n";
            for (const auto& r : reports) {
                const auto fail = r.first_failure();
                out << identity_info(r.id).key << ',' << range.lo << ',' << range.hi << ',' << r.checks.size() << ','
                    << r.pass_count() << ',' << (fail ? std::to_string(fail->index) : "") << ','
                    << (fail ? csv_field(poly_text(fail->difference)) : "") << '\n';
            }
            break;
        case Format::text: {
            std::vector<std::vector<std::string>> rows{{"identity", "range", "passed", "first failure"}};
            for (const auto& r : reports) {
                const auto& info = identity_info(r.id);
                const auto fail = r.first_failure();
                const unsigned lo = std::max(range.lo, info.min_index);
                rows.push_back({std::string(info.key),
                                r.checks.empty() ? "-" : std::to_string(lo) + ".." + std::to_string(range.hi),
                                std::to_string(r.pass_count()) + "/" + std::to_string(r.checks.size()),
                                fail ? "n=" + std::to_string(fail->index) + ": " + poly_text(fail->difference) : "-"});
            }
            print_columns(out, rows);
            const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.all_hold(); });
            if (all_hold) out << "PASS: " << reports.size() << " of " << reports.size() << " identities hold\n";
            else out << "FAIL: " << failed << " of " << reports.size() << " identities fail\n";
        }
    }
    return all_hold ? ExitCode::ok : ExitCode::math_failure;
}

int cmd_table(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (c.family != Family::el && c.family != Family::ec) throw UsageError("table needs --el or --ec");
    const SeriesKind kind = c.family == Family::el ? SeriesKind::EL : SeriesKind::EC;
    std::vector<unsigned> rows_n;
    if (c.n) rows_n.push_back(*c.n);
    else for (unsigned n = 0; n <= c.n_max.value_or(kDefaultTableNMax); ++n) rows_n.push_back(n);

    std::vector<NumeratorReport> reports;
    for (unsigned n : rows_n) reports.push_back(clear_denominator(kind, n, c.order));
    const bool stabilized =
        std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.stabilized; });

    switch (c.format) {
        case Format::json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : reports) arr.push_back(r);
            print_json(out, arr);
            break;
        }
        case Format::csv: {
            std::size_t width = 0;
            for (const auto& r : reports) width = std::max(width, r.numerator.size());
            out << "n,factor,stabilized";
            for (std::size_t i = 0; i < width; ++i) out << ",c" << i;
            out << '\n';
            for (const auto& r : reports) {
                out << r.n << ',' << r.factor.to_string() << ',' << (r.stabilized ? "true" : "false");
                for (std::size_t i = 0; i < width; ++i) out << ',' << to_string(r.numerator[i]);
                out << '\n';
            }
            break;
        }
        case Format::text: {
            std::vector<std::vector<std::string>> rows{{"n", "factor", "numerator"}};
            for (const auto& r : reports)
                rows.push_back({std::to_string(r.n), r.factor.to_string(),
                                join(render_all(r.numerator.coeffs()), ",") + (r.stabilized ? "" : "  (not stabilized)")});
            print_columns(out, rows);
        }
    }
    if (!stabilized) {
        for (const auto& r : reports)
            if (!r.stabilized)
                err << "error: " << to_string(kind) << " n=" << r.n << " did not stabilize by order " << r.order << '\n';
        return ExitCode::math_failure;
    }
    return ExitCode::ok;
}

int cmd_fit(const RunConfig& c, std::ostream& out) {
    const GraphSpec spec = graph_from(c);
    if (spec.kind != GraphKind::cycle) throw UsageError("fit works on --cycle graphs");
    const unsigned total = std::accumulate(spec.loops.begin(), spec.loops.end(), 0u);
    const unsigned degree = c.degree.value_or(total);
    const unsigned s_max = c.s_max.value_or(degree + 1 + kFitHoldouts);

    std::map<unsigned, Integer> samples;
    for (unsigned s = 0; s <= s_max; ++s) samples.emplace(s, count_cycle(spec.n, spec.loops, s));
    const QuasiPoly q = quasipoly_fit(samples, degree);

    const bool predictable = std::none_of(spec.loops.begin(), spec.loops.end(), [](unsigned k) { return k == 0; });
    std::optional<Rational> predicted;
    if (predictable) predicted = psi_formula(spec.n, spec.loops);
    const bool match = predicted && q.psi == *predicted && q.phi.degree() == static_cast<long>(total);
    const std::string verdict = predicted ? (match ? "MATCH" : "MISMATCH") : "NO PREDICTION";

    switch (c.format) {
        case Format::json:
            print_json(out, nlohmann::json{{"graph", spec},
                                           {"window", {0, s_max}},
                                           {"fit", q},
                                           {"predicted_psi", predicted ? nlohmann::json(to_string(*predicted))
                                                                       : nlohmann::json(nullptr)},
                                           {"verdict", verdict}});
            break;
        case Format::csv:
            out << "term,coefficient\n";
            for (unsigned j = 0; j <= degree; ++j) out << "phi_" << j << ',' << to_string(q.phi[j]) << '\n';
            out << "psi," << to_string(q.psi) << '\n';
            if (predicted) out << "predicted_psi," << to_string(*predicted) << '\n';
            break;
        case Format::text:
            out << spec.name() << '\n';
            out << "window: s = 0.." << s_max << " (" << samples.size() << " samples, degree " << degree << ")\n";
            out << "phi(s) = " << in_variable_s(q.phi) << '\n';
            out << "psi = " << to_string(q.psi) << '\n';
            if (predicted) out << "predicted psi = " << to_string(*predicted) << '\n';
            out << verdict << '\n';
    }
    return (!predicted || match) ? ExitCode::ok : ExitCode::math_failure;
}

int cmd_series(const RunConfig& c, std::ostream& out) {
    const std::size_t order = c.order.value_or(kDefaultSeriesOrder);
    std::string title;
    std::optional<SeriesTrunc> series;
    if (c.family == Family::fl2 || c.family == Family::fc2) {
        if (!c.s) throw UsageError("--fl2 / --fc2 need -s");
        if (c.kind) throw UsageError("--fl2 / --fc2 do not take --line or --cycle");
        const bool lines = c.family == Family::fl2;
        series = lines ? fl2_series(*c.s, order) : fc2_series(*c.s, order);
        title = std::string(lines ? "FL_2" : "FC_2") + "(" + std::to_string(*c.s) + ", y)";
    } else {
        const GraphSpec spec = graph_from(c);
        if (spec.kind != GraphKind::cycle) throw UsageError("series over s needs --cycle, or use --fl2 / --fc2");
        series = cycle_series_s(spec.n, spec.loops, order);
        title = spec.name() + " over t";
    }
    switch (c.format) {
        case Format::json:
            print_json(out, nlohmann::json{{"series", title}, {"coefficients", *series}});
            break;
        case Format::csv:
            out << "index,coefficient\n";
            for (std::size_t i = 0; i <= series->order(); ++i) out << i << ',' << to_string((*series)[i]) << '\n';
            break;
        case Format::text: {
            out << title << '\n';
            std::vector<std::vector<std::string>> rows{{"index", "coefficient"}};
            for (std::size_t i = 0; i <= series->order(); ++i)
                rows.push_back({std::to_string(i), to_string((*series)[i])});
            print_columns(out, rows);
        }
    }
    return ExitCode::ok;
}

std::string kind_name(VertexKind k) { return k == VertexKind::integral ? "integral" : "fractional"; }

int cmd_polytope(const RunConfig& c, std::ostream& out) {
    const unsigned n = *c.n;
    const std::vector<PolytopeVertex> vs = c.hyperplane_only ? hyperplane_vertices(n) : vertices(n);
    std::optional<bool> simplex;
    if (n % 2 == 1) simplex = simplex_affinely_independent(n);

    switch (c.format) {
        case Format::json: {
            nlohmann::json j{{"n", n}, {"vertices", vs}};
            if (simplex) j["simplex_affinely_independent"] = *simplex;
            print_json(out, j);
            break;
        }
        case Format::csv:
            out << "kind";
            for (unsigned i = 0; i < n; ++i) out << ",alpha_" << i;
            for (unsigned i = 0; i < n; ++i) out << ",beta_" << i;
            out << '\n';
            for (const auto& v : vs)
                out << kind_name(v.kind) << ',' << join(render_all(v.alpha), ",") << ','
                    << join(render_all(v.beta), ",") << '\n';
            break;
        case Format::text: {
            out << "C_{" << n << ",1} polytope: " << vs.size() << (c.hyperplane_only ? " hyperplane" : "")
                << " vertices\n";
            std::vector<std::vector<std::string>> rows{{"kind", "alpha", "beta"}};
            for (const auto& v : vs)
                rows.push_back({kind_name(v.kind), join(render_all(v.alpha), " "), join(render_all(v.beta), " ")});
            print_columns(out, rows);
            if (simplex)
                out << "hyperplane vertices + fractional vertex affinely independent: " << (*simplex ? "yes" : "no")
                    << '\n';
        }
    }
    return ExitCode::ok;
}

}  // namespace

RunConfig parse_args(int argc, const char* const* argv) {
    RunConfig config;
    Flags flags;
    CLI::App app{"exact magic labeling counts", "magiclab"};
    build_app(app, config, flags);
    app.parse(argc, argv);
    finish_config(config, flags);
    return config;
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case Command::count: return cmd_count(config, out);
            case Command::verify: return cmd_verify(config, out);
            case Command::table: return cmd_table(config, out, err);
            case Command::fit: return cmd_fit(config, out);
            case Command::series: return cmd_series(config, out);
            case Command::polytope: return cmd_polytope(config, out);
        }
    } catch (const InstanceTooLargeError& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::resource_cap;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::usage_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::math_failure;
    }
    return ExitCode::usage_error;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig config;
    Flags flags;
    CLI::App app{"exact magic labeling counts", "magiclab"};
    build_app(app, config, flags);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ExitCode::ok : ExitCode::usage_error;
    }
    finish_config(config, flags);
    return execute(config, out, err);
}

}  // namespace magiclab::cli
