// Command-line front end: exact distributions, moments, verification
// suites, descent canonicalization, and Monte Carlo sampling for colored
// permutation groups.
//
// Exit codes: 0 success, 1 verification failure, 2 infeasible size,
// 3 precondition violation, 4 bad input.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cperm/asymptotics.hpp"
#include "cperm/blocks.hpp"
#include "cperm/degree.hpp"
#include "cperm/enumerate.hpp"
#include "cperm/moments.hpp"
#include "cperm/version.hpp"
#include "json.hpp"

using namespace cperm;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitBadInput = 4;

struct OutputOptions {
    std::string format = "text";
    std::string out_path;
    int jobs = 1;
    std::uint64_t cap = kDefaultEnumerationCap;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_path, "Write the report to this file instead of stdout");
    cmd->add_option("--jobs", opts.jobs, "Worker thread cap for enumeration sweeps")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--cap", opts.cap, "Maximum number of elements to enumerate")
        ->capture_default_str();
}

void emit(const OutputOptions& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) throw error("cannot open output file " + opts.out_path);
    out << text;
}

ordered_json envelope(const std::string& command, ordered_json request, ordered_json result) {
    ordered_json report;
    report["library"] = {{"name", kLibraryName}, {"version", kLibraryVersion}};
    request["command"] = command;
    report["request"] = std::move(request);
    report["result"] = std::move(result);
    return report;
}

std::string render_json(const ordered_json& report) { return report.dump(2) + "\n"; }

TotalOrder parse_order(const std::string& name) {
    if (name == "descent") return TotalOrder::descent();
    if (name == "adin-roichman") return TotalOrder::adin_roichman();
    throw parse_error("unknown order '" + name + "'");
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        const auto first = token.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        try {
            values.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw parse_error("bad integer '" + token + "'");
        }
    }
    return values;
}

ordered_json rational_json(const Rational& q) { return q.get_str(); }

ordered_json lambda_json(const RPartition& lambda) {
    ordered_json parts = ordered_json::array();
    for (const auto& list : lambda.parts) parts.push_back(list);
    return parts;
}

ordered_json coefficients_json(const QPolynomial& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : p.coefficients()) arr.push_back(c.get_str());
    return arr;
}

// ---------------------------------------------------------------------------
// distribution cache: content-addressed JSON files under $CPERM_CACHE_DIR

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream out;
    out << std::hex << v;
    return out.str();
}

std::optional<QPolynomial> cache_read(const std::string& key, std::string* status) {
    const char* dir = std::getenv("CPERM_CACHE_DIR");
    if (!dir || !*dir) {
        *status = "off";
        return std::nullopt;
    }
    const std::filesystem::path path =
        std::filesystem::path(dir) / (hex64(fnv1a(key)) + ".json");
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        *status = "miss";
        return std::nullopt;
    }
    try {
        const auto entry = ordered_json::parse(in);
        if (entry.at("key").get<std::string>() != key) {
            *status = "miss";
            return std::nullopt;
        }
        const std::string payload = entry.at("coefficients").dump();
        if (entry.at("payload_hash").get<std::string>() != hex64(fnv1a(payload))) {
            *status = "corrupt";
            return std::nullopt;
        }
        std::vector<Int> coeffs;
        for (const auto& c : entry.at("coefficients")) coeffs.emplace_back(c.get<std::string>());
        *status = "hit";
        return QPolynomial(std::move(coeffs));
    } catch (const std::exception&) {
        *status = "corrupt";
        return std::nullopt;
    }
}

void cache_write(const std::string& key, const QPolynomial& poly) {
    const char* dir = std::getenv("CPERM_CACHE_DIR");
    if (!dir || !*dir) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const std::filesystem::path path =
        std::filesystem::path(dir) / (hex64(fnv1a(key)) + ".json");
    if (std::filesystem::exists(path)) return;  // entries are immutable
    ordered_json entry;
    entry["key"] = key;
    entry["coefficients"] = coefficients_json(poly);
    entry["payload_hash"] = hex64(fnv1a(entry["coefficients"].dump()));
    std::ofstream out(path, std::ios::binary);
    out << entry.dump(2) << "\n";
}

// ---------------------------------------------------------------------------

struct DomainArgs {
    int n = 0;
    int r = 0;
    std::string lambda_text;
    std::string orbit_text;

    Domain build() const {
        if (!lambda_text.empty() && !orbit_text.empty())
            throw invalid_argument_error("--class and --orbit are mutually exclusive");
        if (!lambda_text.empty()) {
            RPartition lambda = RPartition::parse(lambda_text, r);
            if (n != 0 && lambda.n != n)
                throw invalid_argument_error("--n disagrees with the class weight");
            return Domain::conjugacy_class(std::move(lambda));
        }
        if (!orbit_text.empty()) {
            auto colors = parse_int_list(orbit_text);
            if (n != 0 && static_cast<int>(colors.size()) != n)
                throw invalid_argument_error("--n disagrees with the orbit length");
            return Domain::color_orbit(std::move(colors), r);
        }
        return Domain::group(n, r);
    }

    ordered_json echo() const {
        ordered_json j;
        j["n"] = n;
        j["r"] = r;
        if (!lambda_text.empty()) j["class"] = lambda_text;
        if (!orbit_text.empty()) j["orbit"] = orbit_text;
        return j;
    }
};

// ---------------------------------------------------------------------------
// dist

int run_dist(const std::string& stat_name, const DomainArgs& domain_args,
             const std::string& order_name, const OutputOptions& opts) {
    const Statistic stat = Statistic::parse(stat_name);
    const TotalOrder order = parse_order(order_name);
    const Domain domain = domain_args.build();

    ordered_json key_json;
    key_json["stat"] = stat.name();
    key_json["n"] = domain.n;
    key_json["r"] = domain.r;
    key_json["domain"] = domain.describe();
    key_json["order"] = order_name;
    const std::string key = key_json.dump();

    std::string cache_status;
    QPolynomial gf;
    if (auto cached = cache_read(key, &cache_status)) {
        gf = *cached;
    } else {
        gf = gf_distribution(stat, domain, order, opts.cap, opts.jobs);
        cache_write(key, gf);
    }
    std::cerr << "cache: " << cache_status << "\n";

    ordered_json request = domain_args.echo();
    request["stat"] = stat.name();
    request["order"] = order_name;
    request["cap"] = opts.cap;

    ordered_json result;
    result["domain"] = domain.describe();
    result["size"] = domain.size().get_str();
    result["degree"] = gf.degree();
    result["coefficients"] = coefficients_json(gf);
    const auto report = envelope("dist", request, result);

    if (opts.format == "json") {
        emit(opts, render_json(report));
    } else if (opts.format == "csv") {
        std::ostringstream out;
        out << "value,count\n";
        for (int d = 0; d <= gf.degree(); ++d) out << d << "," << gf.coeff(d).get_str() << "\n";
        emit(opts, out.str());
    } else {
        std::ostringstream out;
        out << stat.name() << " on " << domain.describe() << " (" << domain.size().get_str()
            << " elements)\n";
        out << "coefficients:";
        for (int d = 0; d <= gf.degree(); ++d) out << " " << gf.coeff(d).get_str();
        out << "\n";
        emit(opts, out.str());
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// moments

int run_moments(const std::string& stat_name, int k, const DomainArgs& domain_args,
                const std::string& order_name, const std::string& method,
                const OutputOptions& opts) {
    const Statistic stat = Statistic::parse(stat_name);
    const TotalOrder order = parse_order(order_name);
    const Domain domain = domain_args.build();

    std::vector<MomentReport> reports;
    const auto add = [&](const std::string& how, const Rational& value) {
        reports.push_back({stat.name(), domain.describe(), k, value, how});
    };

    const bool want_all = method == "all";
    if (want_all || method == "enumeration")
        add("enumeration", moment_enumerated(stat, domain, k, order, opts.cap, opts.jobs));
    if (want_all || method == "generating-function") {
        const QPolynomial gf = gf_distribution(stat, domain, order, opts.cap, opts.jobs);
        Int weighted = 0, total = 0;
        for (int d = 0; d <= gf.degree(); ++d) {
            Int term = gf.coeff(d);
            for (int h = 0; h < k; ++h) term *= d;
            weighted += term;
            total += gf.coeff(d);
        }
        add("generating-function", Rational(weighted) / Rational(total));
    }
    if (want_all || method == "closed-form") {
        bool have = false;
        Rational value;
        if (stat.kind == Statistic::Kind::X && domain.kind == Domain::Kind::Group) {
            value = expect_X_product_group({stat.i}, domain.n, domain.r);
            have = true;
        } else if (stat.kind == Statistic::Kind::X && domain.kind == Domain::Kind::Class) {
            value = expect_X_product_class({stat.i}, domain.lambda);
            have = true;
        } else if (stat.kind == Statistic::Kind::Y && domain.kind == Domain::Kind::Group) {
            value = expect_XY_product({}, {{stat.i, stat.c}}, domain.n, domain.r);
            have = true;
        } else if (stat.kind == Statistic::Kind::Y && domain.kind == Domain::Kind::Class) {
            value = expect_XY_product_class({}, {{stat.i, stat.c}}, domain.lambda);
            have = true;
        } else if (k <= 2 && domain.kind == Domain::Kind::Group &&
                   (stat.kind == Statistic::Kind::Des || stat.kind == Statistic::Kind::Maj ||
                    stat.kind == Statistic::Kind::Fmaj) &&
                   order.kind() == OrderKind::Descent) {
            const auto tm = theoretical_moments(stat, domain.n, domain.r);
            value = k == 1 ? tm.mu : Rational(tm.sigma_sq + tm.mu * tm.mu);
            have = true;
        }
        if (have)
            add("closed-form", value);
        else if (!want_all)
            throw invalid_argument_error("no closed form covers this request");
    }
    if (reports.empty()) throw invalid_argument_error("unknown method '" + method + "'");

    bool agree = true;
    for (const auto& rep : reports) agree = agree && rep.value == reports.front().value;

    ordered_json request = domain_args.echo();
    request["stat"] = stat.name();
    request["k"] = k;
    request["order"] = order_name;
    request["method"] = method;

    ordered_json result;
    result["domain"] = reports.front().domain;
    ordered_json values = ordered_json::array();
    for (const auto& rep : reports)
        values.push_back({{"method", rep.method}, {"value", rational_json(rep.value)}});
    result["moments"] = values;
    result["methods_agree"] = agree;
    const auto report = envelope("moments", request, result);

    if (opts.format == "json") {
        emit(opts, render_json(report));
    } else {
        std::ostringstream out;
        out << "E[" << stat.name() << "^" << k << "] on " << reports.front().domain << "\n";
        for (const auto& rep : reports)
            out << "  " << rep.method << ": " << rep.value.get_str() << "\n";
        if (!agree) out << "  METHODS DISAGREE\n";
        emit(opts, out.str());
    }
    return agree ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOutcome {
    ordered_json instances = ordered_json::array();
    int failures = 0;
    int checked = 0;
    int skipped = 0;

    void record(bool ok, ordered_json instance) {
        instance["ok"] = ok;
        instances.push_back(std::move(instance));
        ++checked;
        if (!ok) ++failures;
    }
    void skip(ordered_json instance) {
        instance["skipped"] = true;
        instances.push_back(std::move(instance));
        ++skipped;
    }
};

int finish_verify(const std::string& target, ordered_json request, VerifyOutcome outcome,
                  const OutputOptions& opts) {
    ordered_json result;
    result["target"] = target;
    result["checked"] = outcome.checked;
    result["failures"] = outcome.failures;
    result["skipped"] = outcome.skipped;
    result["instances"] = std::move(outcome.instances);
    const auto report = envelope("verify", std::move(request), result);

    if (opts.format == "json") {
        emit(opts, render_json(report));
    } else {
        std::ostringstream out;
        out << "verify " << target << ": " << outcome.checked << " checked, "
            << outcome.failures << " failed, " << outcome.skipped << " skipped\n";
        for (const auto& inst : report["result"]["instances"]) {
            if (inst.contains("skipped")) {
                out << "  skip " << inst.dump() << "\n";
            } else if (!inst["ok"].get<bool>()) {
                out << "  FAIL " << inst.dump() << "\n";
            }
        }
        emit(opts, out.str());
    }
    return outcome.failures == 0 ? kExitOk : kExitVerifyFailed;
}

int run_verify_eq1(int n_max, int r_max, int depth, const OutputOptions& opts) {
    VerifyOutcome outcome;
    for (int n = 1; n <= n_max; ++n)
        for (int r = 1; r <= r_max; ++r) {
            const auto rep = verify_eq1(n, r, depth, opts.cap, opts.jobs);
            ordered_json inst{{"n", n}, {"r", r}, {"depth", depth}};
            if (!rep.ok) inst["mismatched_degrees"] = rep.mismatched_degrees;
            outcome.record(rep.ok, std::move(inst));
        }
    ordered_json request{{"n_max", n_max}, {"r_max", r_max}, {"depth", depth}};
    return finish_verify("eq1", request, std::move(outcome), opts);
}

int run_verify_eq2(int n_max, int r_max, const OutputOptions& opts) {
    VerifyOutcome outcome;
    for (int n = 1; n <= n_max; ++n)
        for (int r = 1; r <= r_max; ++r) {
            const auto rep = verify_eq2(n, r, opts.cap, opts.jobs);
            ordered_json inst{{"n", n}, {"r", r}};
            if (!rep.ok) {
                inst["lhs"] = coefficients_json(rep.lhs);
                inst["rhs"] = coefficients_json(rep.rhs);
            }
            outcome.record(rep.ok, std::move(inst));
        }
    ordered_json request{{"n_max", n_max}, {"r_max", r_max}};
    return finish_verify("eq2", request, std::move(outcome), opts);
}

int run_verify_theorem1(int n, int r, int k, const std::string& stat_name,
                        const OutputOptions& opts) {
    VerifyOutcome outcome;
    std::vector<Statistic> stats;
    if (stat_name == "all")
        stats = {Statistic::des(), Statistic::fmaj(), Statistic::maj()};
    else
        stats = {Statistic::parse(stat_name)};

    for (const auto& stat : stats) {
        const auto [by_class, group_moment] = class_moments_sweep(n, r, k, stat);
        const Rational symmetric =
            stat.kind == Statistic::Kind::Maj
                ? moment_enumerated(stat, Domain::group(n, 1), k, TotalOrder::descent(),
                                    opts.cap, opts.jobs)
                : Rational(0);
        for (const auto& [lambda, class_moment] : by_class) {
            ordered_json inst{{"stat", stat.name()},
                              {"lambda", lambda.to_string()},
                              {"k", k},
                              {"class_moment", rational_json(class_moment)},
                              {"group_moment", rational_json(group_moment)}};
            if (!has_no_short_cycles(lambda, 2 * k)) {
                outcome.skip(std::move(inst));
                continue;
            }
            bool ok = class_moment == group_moment;
            if (stat.kind == Statistic::Kind::Maj) {
                inst["symmetric_group_moment"] = rational_json(symmetric);
                ok = ok && class_moment == symmetric;
            }
            outcome.record(ok, std::move(inst));
        }
    }
    ordered_json request{{"n", n}, {"r", r}, {"k", k}, {"stat", stat_name}};
    return finish_verify("theorem1", request, std::move(outcome), opts);
}

int run_verify_lemmas(int n_max, int r_max, int k_max, const OutputOptions& opts) {
    VerifyOutcome outcome;
    for (int n = 2; n <= n_max; ++n)
        for (int r = 1; r <= r_max; ++r) {
            std::vector<std::vector<int>> subsets;
            std::vector<int> cur;
            const std::function<void(int)> rec = [&](int from) {
                if (!cur.empty()) subsets.push_back(cur);
                if (static_cast<int>(cur.size()) == k_max) return;
                for (int v = from; v <= n; ++v) {
                    cur.push_back(v);
                    rec(v + 1);
                    cur.pop_back();
                }
            };
            rec(1);
            for (const auto& subset : subsets) {
                const Rational closed = expect_X_product_group(subset, n, r);
                Int sum = 0;
                for_each_element(n, r, [&](const ColoredPermutation& x) {
                    long prod = 1;
                    for (int a : subset) prod *= descent_at(x, a) ? 1 : 0;
                    sum += prod;
                });
                const Rational brute = Rational(sum) / Rational(group_order(n, r));
                ordered_json inst{{"n", n},
                                  {"r", r},
                                  {"indices", subset},
                                  {"closed_form", rational_json(closed)},
                                  {"enumeration", rational_json(brute)}};
                outcome.record(closed == brute, std::move(inst));
            }
        }
    ordered_json request{{"n_max", n_max}, {"r_max", r_max}, {"k_max", k_max}};
    return finish_verify("lemmas", request, std::move(outcome), opts);
}

int run_verify_degree(int n_max, int r_max, int m, const OutputOptions& opts) {
    VerifyOutcome outcome;
    for (int n = 2; n <= n_max; ++n)
        for (int r = 1; r <= r_max; ++r) {
            const std::vector<std::vector<Int>> targets{
                statistic_vector(Statistic::des(), n, r),
                statistic_vector(Statistic::maj(), n, r),
                statistic_vector(Statistic::fmaj(), n, r)};
            const auto verdict = degree_upper_bound_check_multi(targets, m, n, r);
            const char* names[] = {"des", "maj", "fmaj"};
            for (int s = 0; s < 3; ++s) {
                ordered_json inst{{"n", n}, {"r", r}, {"stat", names[s]}, {"m", m}};
                outcome.record(verdict[static_cast<std::size_t>(s)], std::move(inst));
            }
        }
    ordered_json request{{"n_max", n_max}, {"r_max", r_max}, {"m", m}};
    return finish_verify("degree", request, std::move(outcome), opts);
}

int run_verify_orbits(int n, int r, int k, const OutputOptions& opts) {
    VerifyOutcome outcome;
    for (const auto& lambda : r_partitions(n, r)) {
        if (!has_no_short_cycles(lambda, 2 * k)) {
            outcome.skip(ordered_json{{"lambda", lambda.to_string()}});
            continue;
        }
        std::vector<ColoredPermutation> cls;
        for_each_in_class(lambda, [&](const ColoredPermutation& x) { cls.push_back(x); });

        std::vector<std::vector<int>> index_sets;
        std::vector<int> cur;
        const std::function<void(int)> rec = [&](int from) {
            if (!cur.empty() && static_cast<int>(cur.size()) <= k) index_sets.push_back(cur);
            if (static_cast<int>(cur.size()) == k) return;
            for (int v = from; v <= n - 1; ++v) {
                cur.push_back(v);
                rec(v + 1);
                cur.pop_back();
            }
        };
        rec(1);

        for (const auto& indices : index_sets) {
            const Blocks blocks = induced_blocks(indices, n);
            const Int expected_size = young_order(blocks);
            std::map<ColoredPermutation, std::pair<long, long>> orbits;  // size, descending
            std::map<ColoredPermutation, ColoredPermutation> orbit_of;
            for (const auto& x : cls) {
                ColoredPermutation least = x;
                for_each_young_element(blocks, [&](const std::vector<int>& pi) {
                    const auto y = j_conjugate(pi, blocks, x);
                    if (y < least) least = y;
                });
                auto& counts = orbits.emplace(least, std::make_pair(0L, 0L)).first->second;
                ++counts.first;
                bool all = true;
                for (int a : indices) all = all && descent_at(x, a);
                if (all) ++counts.second;
                orbit_of.emplace(x, least);
            }
            bool ok = true;
            for (const auto& [key, counts] : orbits)
                ok = ok && Int(counts.first) == expected_size && counts.second == 1;
            // The canonicalization must land on the descending representative.
            for (const auto& x : cls) {
                const auto y = colored_descents(x, indices);
                bool all = true;
                for (int a : indices) all = all && descent_at(y, a);
                ok = ok && all && orbit_of.at(y) == orbit_of.at(x);
                if (!ok) break;
            }
            ordered_json inst{{"lambda", lambda.to_string()},
                              {"indices", indices},
                              {"orbits", orbits.size()},
                              {"orbit_size", expected_size.get_str()}};
            outcome.record(ok, std::move(inst));
        }
    }
    ordered_json request{{"n", n}, {"r", r}, {"k", k}};
    return finish_verify("orbits", request, std::move(outcome), opts);
}

// ---------------------------------------------------------------------------
// canonicalize

int run_canonicalize(const std::string& element_text, int r, const std::string& indices_text,
                     bool trace, const OutputOptions& opts) {
    const std::vector<int> indices = parse_int_list(indices_text);

    const auto first = element_text.find_first_not_of(" \t");
    RawCycles cycles;
    int n = 0;
    if (first != std::string::npos && element_text[first] == '(') {
        cycles = parse_raw_cycles(element_text, r, &n);
        from_raw_cycles(cycles, n, r);  // validate before running
    } else {
        const auto x = parse_element(element_text, r);
        n = x.n();
        cycles = to_cycles(x).cycles;
    }

    std::vector<std::string> trace_lines;
    const RawCycles result = colored_descents_cycles(
        cycles, indices, n, r,
        trace ? std::function<void(const RawCycles&)>(
                    [&](const RawCycles& state) { trace_lines.push_back(raw_cycles_string(state)); })
              : std::function<void(const RawCycles&)>{});
    const ColoredPermutation out_element = from_raw_cycles(result, n, r);

    ordered_json request{{"element", element_text}, {"r", r}, {"indices", indices},
                         {"trace", trace}};
    ordered_json json_result;
    json_result["input"] = raw_cycles_string(cycles);
    json_result["output"] = raw_cycles_string(result);
    json_result["one_line"] = one_line_string(out_element);
    json_result["descents"] = descent_set(out_element);
    if (trace) json_result["trace"] = trace_lines;
    const auto report = envelope("canonicalize", request, json_result);

    if (opts.format == "json") {
        emit(opts, render_json(report));
    } else {
        std::ostringstream out;
        if (trace)
            for (const auto& line : trace_lines) out << line << "\n";
        if (trace_lines.empty() || trace_lines.back() != raw_cycles_string(result))
            out << raw_cycles_string(result) << "\n";
        emit(opts, out.str());
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// sample

int run_sample(const std::string& stat_name, const std::string& lambda_text, int r,
               std::uint64_t num, std::uint64_t seed, int bins, const std::string& plot_path,
               const OutputOptions& opts) {
    const Statistic stat = Statistic::parse(stat_name);
    const RPartition lambda = RPartition::parse(lambda_text, r);
    const int effective_bins = bins > 0 ? bins : (plot_path.empty() ? 0 : 101);
    const auto summary = mc_class_sample(stat, lambda, num, seed, effective_bins);

    if (!plot_path.empty()) {
        std::ofstream plot(plot_path);
        if (!plot) throw error("cannot open plot file " + plot_path);
        plot << "# standardized_bin_center count\n";
        for (const auto& [center, count] : summary.histogram)
            plot << center << " " << count << "\n";
    }

    ordered_json request{{"stat", stat.name()}, {"class", lambda_text}, {"r", r},
                         {"num", num},          {"seed", seed},         {"bins", effective_bins}};
    ordered_json result;
    result["count"] = summary.count;
    result["seed"] = summary.seed;
    result["mu"] = rational_json(summary.mu);
    result["sigma_sq"] = rational_json(summary.sigma_sq);
    result["raw_mean"] = summary.raw_mean;
    result["raw_variance"] = summary.raw_variance;
    result["standardized_mean"] = summary.mean;
    result["standardized_variance"] = summary.variance;
    result["ks_distance"] = summary.ks;
    result["ks_note"] =
        "threshold judgements for integer-valued statistics must budget for the "
        "lattice floor ~ 0.3989/(2*sigma)";
    if (effective_bins > 0) {
        ordered_json hist = ordered_json::array();
        for (const auto& [center, count] : summary.histogram)
            hist.push_back({{"bin", center}, {"count", count}});
        result["histogram"] = hist;
    }
    const auto report = envelope("sample", request, result);

    if (opts.format == "json") {
        emit(opts, render_json(report));
    } else if (opts.format == "csv") {
        std::ostringstream out;
        out << "bin,count\n";
        for (const auto& [center, count] : summary.histogram) out << center << "," << count << "\n";
        emit(opts, out.str());
    } else {
        std::ostringstream out;
        out << stat.name() << " on class " << lambda.to_string() << ", N=" << num
            << ", seed=" << seed << "\n";
        out << "  raw mean " << summary.raw_mean << ", raw variance " << summary.raw_variance
            << "\n";
        out << "  standardized mean " << summary.mean << ", variance " << summary.variance
            << ", ks " << summary.ks << "\n";
        emit(opts, out.str());
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// class

int run_class_size(const std::string& lambda_text, int r, const OutputOptions& opts) {
    const RPartition lambda = RPartition::parse(lambda_text, r);
    ordered_json request{{"class", lambda_text}, {"r", r}};
    ordered_json result;
    result["lambda"] = lambda_json(lambda);
    result["n"] = lambda.n;
    result["size"] = class_size(lambda).get_str();
    result["centralizer_order"] = centralizer_order(lambda).get_str();
    result["group_order"] = group_order(lambda.n, lambda.r).get_str();
    const auto report = envelope("class-size", request, result);
    if (opts.format == "json") {
        emit(opts, render_json(report));
    } else {
        emit(opts, "|C_" + lambda.to_string() + "| = " + class_size(lambda).get_str() + "\n");
    }
    return kExitOk;
}

int run_class_list(const std::string& lambda_text, int r, const OutputOptions& opts) {
    const RPartition lambda = RPartition::parse(lambda_text, r);
    if (class_size(lambda) > Int(static_cast<unsigned long>(opts.cap)))
        throw infeasible_error("class has " + class_size(lambda).get_str() +
                               " elements; raise --cap to list");
    ordered_json request{{"class", lambda_text}, {"r", r}};
    std::vector<std::string> lines;
    for_each_in_class(lambda, [&](const ColoredPermutation& x) {
        lines.push_back(one_line_string(x));
    });
    if (opts.format == "json") {
        ordered_json result;
        result["size"] = lines.size();
        result["elements"] = lines;
        emit(opts, render_json(envelope("class-list", request, result)));
    } else {
        std::ostringstream out;
        for (const auto& line : lines) out << line << "\n";
        emit(opts, out.str());
    }
    return kExitOk;
}

int run_class_types(int n, int r, const OutputOptions& opts) {
    ordered_json request{{"n", n}, {"r", r}};
    const auto types = r_partitions(n, r);
    if (opts.format == "json") {
        ordered_json result;
        result["count"] = types.size();
        ordered_json arr = ordered_json::array();
        for (const auto& lambda : types)
            arr.push_back({{"lambda", lambda.to_string()}, {"size", class_size(lambda).get_str()}});
        result["classes"] = arr;
        emit(opts, render_json(envelope("class-types", request, result)));
    } else {
        std::ostringstream out;
        for (const auto& lambda : types)
            out << lambda.to_string() << "  " << class_size(lambda).get_str() << "\n";
        emit(opts, out.str());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact statistics on colored permutation groups"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kLibraryName) + " " + kLibraryVersion);

    OutputOptions opts;

    // dist
    auto* dist = app.add_subcommand("dist", "Exact distribution of a statistic");
    std::string stat_name = "des", order_name = "descent";
    DomainArgs domain_args;
    dist->add_option("--stat", stat_name, "Statistic name")->required();
    dist->add_option("--n", domain_args.n, "Number of positions");
    dist->add_option("--r", domain_args.r, "Number of colors")->required();
    dist->add_option("--class", domain_args.lambda_text, "Conjugacy class, e.g. \"0:[5]\"");
    dist->add_option("--orbit", domain_args.orbit_text, "Color orbit, e.g. \"1,0,2\"");
    dist->add_option("--order", order_name, "Total order: descent or adin-roichman")
        ->capture_default_str();
    add_output_options(dist, opts);

    // moments
    auto* moments = app.add_subcommand("moments", "Exact k-th moment by several methods");
    int moment_k = 1;
    std::string method = "all";
    moments->add_option("--stat", stat_name, "Statistic name")->required();
    moments->add_option("--k", moment_k, "Moment order")->check(CLI::NonNegativeNumber);
    moments->add_option("--n", domain_args.n, "Number of positions");
    moments->add_option("--r", domain_args.r, "Number of colors")->required();
    moments->add_option("--class", domain_args.lambda_text, "Conjugacy class");
    moments->add_option("--orbit", domain_args.orbit_text, "Color orbit");
    moments->add_option("--order", order_name, "Total order")->capture_default_str();
    moments
        ->add_option("--method", method,
                     "closed-form, enumeration, generating-function, or all")
        ->check(CLI::IsMember({"closed-form", "enumeration", "generating-function", "all"}))
        ->capture_default_str();
    add_output_options(moments, opts);

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->require_subcommand(1);
    int n_max = 4, r_max = 3, depth = 30, vn = 5, vr = 2, vk = 1, k_max = 2, m_bound = 2;
    std::string verify_stat = "all";

    auto* v_eq1 = verify->add_subcommand("eq1", "Series identity for the des distribution");
    v_eq1->add_option("--n-max", n_max)->capture_default_str();
    v_eq1->add_option("--r-max", r_max)->capture_default_str();
    v_eq1->add_option("--depth", depth)->capture_default_str();
    add_output_options(v_eq1, opts);

    auto* v_eq2 = verify->add_subcommand("eq2", "Product formula for the fmaj distribution");
    v_eq2->add_option("--n-max", n_max)->capture_default_str();
    v_eq2->add_option("--r-max", r_max)->capture_default_str();
    add_output_options(v_eq2, opts);

    auto* v_thm = verify->add_subcommand("theorem1", "Class moments match the group");
    v_thm->add_option("--n", vn)->required();
    v_thm->add_option("--r", vr)->required();
    v_thm->add_option("--k", vk)->capture_default_str();
    v_thm->add_option("--stat", verify_stat, "des, fmaj, maj or all")->capture_default_str();
    add_output_options(v_thm, opts);

    auto* v_lem = verify->add_subcommand("lemmas", "Closed-form descent products vs enumeration");
    v_lem->add_option("--n-max", n_max)->capture_default_str();
    v_lem->add_option("--r-max", r_max)->capture_default_str();
    v_lem->add_option("--k-max", k_max)->capture_default_str();
    add_output_options(v_lem, opts);

    auto* v_deg = verify->add_subcommand("degree", "Span membership degree bounds");
    v_deg->add_option("--n-max", n_max)->capture_default_str();
    v_deg->add_option("--r-max", r_max)->capture_default_str();
    v_deg->add_option("--m", m_bound)->capture_default_str();
    add_output_options(v_deg, opts);

    auto* v_orb = verify->add_subcommand("orbits", "Young orbit sizes and descent uniqueness");
    v_orb->add_option("--n", vn)->required();
    v_orb->add_option("--r", vr)->required();
    v_orb->add_option("--k", vk)->capture_default_str();
    add_output_options(v_orb, opts);

    // canonicalize
    auto* canon = app.add_subcommand("canonicalize", "Orbit element with prescribed descents");
    std::string element_text, indices_text;
    bool trace = false;
    int canon_r = 0;
    canon->add_option("--element", element_text, "Cycle or one-line notation")->required();
    canon->add_option("--r", canon_r, "Number of colors")->required();
    canon->add_option("--indices", indices_text, "Comma-separated descent positions")
        ->required();
    canon->add_flag("--trace", trace, "Print each refinement pass");
    add_output_options(canon, opts);

    // sample
    auto* sample = app.add_subcommand("sample", "Monte Carlo sampling on a conjugacy class");
    std::uint64_t num = 0, seed = 0;
    int bins = 0;
    std::string plot_path, sample_lambda;
    int sample_r = 0;
    sample->add_option("--stat", stat_name, "Statistic name")->required();
    sample->add_option("--class", sample_lambda, "Conjugacy class")->required();
    sample->add_option("--r", sample_r, "Number of colors")->required();
    sample->add_option("--num", num, "Number of samples")->required();
    sample->add_option("--seed", seed, "RNG seed")->required();
    sample->add_option("--bins", bins, "Histogram bins over [-5, 5]");
    sample->add_option("--plot-data", plot_path, "Write gnuplot-ready histogram columns");
    add_output_options(sample, opts);

    // class
    auto* cls = app.add_subcommand("class", "Conjugacy class sizes and listings");
    cls->require_subcommand(1);
    std::string cls_lambda;
    int cls_r = 0, cls_n = 0;
    auto* cls_size = cls->add_subcommand("size", "Class size from the centralizer order");
    cls_size->add_option("--lambda", cls_lambda)->required();
    cls_size->add_option("--r", cls_r)->required();
    add_output_options(cls_size, opts);
    auto* cls_list = cls->add_subcommand("list", "List every class element");
    cls_list->add_option("--lambda", cls_lambda)->required();
    cls_list->add_option("--r", cls_r)->required();
    add_output_options(cls_list, opts);
    auto* cls_types = cls->add_subcommand("types", "All cycle types with class sizes");
    cls_types->add_option("--n", cls_n)->required();
    cls_types->add_option("--r", cls_r)->required();
    add_output_options(cls_types, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (dist->parsed()) return run_dist(stat_name, domain_args, order_name, opts);
        if (moments->parsed())
            return run_moments(stat_name, moment_k, domain_args, order_name, method, opts);
        if (verify->parsed()) {
            if (v_eq1->parsed()) return run_verify_eq1(n_max, r_max, depth, opts);
            if (v_eq2->parsed()) return run_verify_eq2(n_max, r_max, opts);
            if (v_thm->parsed()) return run_verify_theorem1(vn, vr, vk, verify_stat, opts);
            if (v_lem->parsed()) return run_verify_lemmas(n_max, r_max, k_max, opts);
            if (v_deg->parsed()) return run_verify_degree(n_max, r_max, m_bound, opts);
            if (v_orb->parsed()) return run_verify_orbits(vn, vr, vk, opts);
        }
        if (canon->parsed())
            return run_canonicalize(element_text, canon_r, indices_text, trace, opts);
        if (sample->parsed())
            return run_sample(stat_name, sample_lambda, sample_r, num, seed, bins, plot_path,
                              opts);
        if (cls->parsed()) {
            if (cls_size->parsed()) return run_class_size(cls_lambda, cls_r, opts);
            if (cls_list->parsed()) return run_class_list(cls_lambda, cls_r, opts);
            if (cls_types->parsed()) return run_class_types(cls_n, cls_r, opts);
        }
        std::cerr << "no subcommand\n";
        return kExitBadInput;
    } catch (const short_cycle_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const infeasible_error& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const parse_error& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const invalid_argument_error& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}
