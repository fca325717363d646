// Command-line surface: selftest, converge, kernels, cesaro-table, and
// transform over the CSV/JSON formats of the library. Exit codes: 0 on
// success, 1 when a selftest check fails, 2 on usage or config errors.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vilenkin/approximation.hpp"
#include "vilenkin/config.hpp"
#include "vilenkin/io.hpp"
#include "vilenkin/kernels.hpp"
#include "vilenkin/rng.hpp"
#include "vilenkin/selftest.hpp"

namespace {

using vilenkin::RunConfig;
using OrderedJson = nlohmann::ordered_json;

void emit(const std::string& path, const std::string& contents) {
    if (path.empty()) {
        std::fwrite(contents.data(), 1, contents.size(), stdout);
    } else {
        vilenkin::write_file(path, contents);
    }
}

OrderedJson config_echo(const RunConfig& config, const vilenkin::RadixStructure& s) {
    OrderedJson echo;
    echo["radices"] = std::vector<int>(s.radices().begin(), s.radices().end());
    echo["level"] = s.level();
    echo["alpha"] = config.alpha;
    echo["p"] = config.p;
    echo["function"] = config.function;
    echo["seed"] = config.seed;
    echo["n_policy"] = config.n_policy;
    echo["k_min"] = config.k_min;
    echo["k_max"] = config.k_max;
    echo["format"] = config.format;
    return echo;
}

/// Attaches the shared config options to a subcommand; each option writes
/// into `config` only when passed, so files and defaults stay visible.
void add_common_options(CLI::App* cmd, RunConfig& config, std::string& config_path) {
    cmd->add_option("--config", config_path, "flat JSON config file");
    cmd->add_option("--radices", config.radices, "radix spec, e.g. 2,3,2,3 or 2^13");
    cmd->add_option("--level", config.level,
                    "digit count; a short radix list repeats cyclically to this length");
    cmd->add_option("--alpha", config.alpha, "order parameter in (0,1)");
    cmd->add_option("--p", config.p, "norm exponent: 1 | 2 | inf");
    cmd->add_option("--function", config.function,
                    "lacunary:beta=B | indicator:r=R,label=L | random:seed=S,r=R | constant");
    cmd->add_option("--seed", config.seed, "seed for seeded checks");
    cmd->add_option("--n-policy", config.n_policy, "mk | mk1 | random:<seed>");
    cmd->add_option("--k-min", config.k_min, "first block level");
    cmd->add_option("--k-max", config.k_max, "last block level");
    cmd->add_option("--out", config.out, "output path (stdout when omitted)");
    cmd->add_option("--format", config.format, "csv | json");
}

/// Config precedence: defaults, then file entries, then explicit flags.
RunConfig resolve_config(CLI::App* cmd, const RunConfig& parsed, const std::string& config_path) {
    RunConfig merged;  // defaults
    if (!config_path.empty()) {
        merged.apply_json(vilenkin::read_file(config_path));
    }
    const auto take = [&](const char* flag, auto member) {
        if (cmd->count(flag) > 0) {
            merged.*member = parsed.*member;
        }
    };
    take("--radices", &RunConfig::radices);
    take("--level", &RunConfig::level);
    take("--alpha", &RunConfig::alpha);
    take("--p", &RunConfig::p);
    take("--function", &RunConfig::function);
    take("--seed", &RunConfig::seed);
    take("--n-policy", &RunConfig::n_policy);
    take("--k-min", &RunConfig::k_min);
    take("--k-max", &RunConfig::k_max);
    take("--out", &RunConfig::out);
    take("--format", &RunConfig::format);
    return merged;
}

int run_selftest_cmd(const RunConfig& config) {
    const vilenkin::RadixStructure s = vilenkin::resolve_structure(config);
    const auto results = vilenkin::run_selftest(s, config.seed);
    bool all_pass = true;
    for (const auto& check : results) {
        std::printf("[%s] %-55s residual %.3e (tolerance %.1e)\n", check.pass ? "ok" : "FAIL",
                    check.name.c_str(), check.residual, check.tolerance);
        all_pass = all_pass && check.pass;
    }
    std::printf("%zu checks, %s\n", results.size(), all_pass ? "all passed" : "FAILURES");
    return all_pass ? 0 : 1;
}

int run_converge_cmd(const RunConfig& config) {
    const vilenkin::RadixStructure s = vilenkin::resolve_structure(config);
    const vilenkin::StepFunction f = vilenkin::make_function(config.function, s);
    const double p = vilenkin::parse_exponent(config.p);
    const vilenkin::NPolicy policy = vilenkin::parse_npolicy(config.n_policy);
    const int k_lo = config.k_min > 0 ? config.k_min : 3;
    const int k_hi = config.k_max > 0 ? config.k_max : s.level() - 1;
    const auto rows = vilenkin::convergence_table(f, config.alpha, p, k_lo, k_hi, policy);

    if (config.format == "csv") {
        emit(config.out, vilenkin::convergence_to_csv(rows));
        return 0;
    }
    if (config.format != "json") {
        throw vilenkin::ParseError("format must be csv or json");
    }
    const vilenkin::ModulusProfile profile = vilenkin::modulus_profile(f, p);
    OrderedJson doc;
    doc["config"] = config_echo(config, s);
    doc["tolerances"] = {{"ratio_spread_max", 10.0}};
    doc["modulus_profile"] = {{"p", config.p}, {"omegas", profile.omegas}};
    OrderedJson out_rows = OrderedJson::array();
    for (const auto& row : rows) {
        OrderedJson item;
        item["k"] = row.k;
        item["n"] = row.n;
        item["error"] = row.error;
        item["bound"] = row.bound;
        if (row.ratio) {
            item["ratio"] = *row.ratio;
        } else {
            item["ratio"] = nullptr;
        }
        out_rows.push_back(std::move(item));
    }
    doc["rows"] = std::move(out_rows);
    emit(config.out, doc.dump(2) + "\n");
    return 0;
}

int run_kernels_cmd(const RunConfig& config) {
    const vilenkin::RadixStructure s = vilenkin::resolve_structure(config);
    const vilenkin::NPolicy policy = vilenkin::parse_npolicy(config.n_policy);
    const int k_lo = config.k_min > 0 ? config.k_min : 2;
    const int k_hi = config.k_max > 0 ? config.k_max : s.level() - 1;
    if (k_lo < 2 || k_lo > k_hi) {
        throw vilenkin::LevelOutOfRange("kernel profiles need 2 <= k-min <= k-max");
    }
    std::vector<vilenkin::KernelProfile> profiles;
    for (int k = k_lo; k <= k_hi; ++k) {
        std::int64_t n = s.cumulative(k);
        if (policy.kind == vilenkin::NPolicy::Kind::BlockEnd) {
            n = s.cumulative(k + 1) - 1;
        } else if (policy.kind == vilenkin::NPolicy::Kind::Random) {
            vilenkin::Rng rng(policy.seed + 1000003ULL * static_cast<std::uint64_t>(k));
            n += static_cast<std::int64_t>(
                rng.below(static_cast<std::uint64_t>(s.cumulative(k + 1) - s.cumulative(k))));
        }
        profiles.push_back(vilenkin::shell_profile(s, k, n, config.alpha));
    }
    if (config.format == "csv") {
        emit(config.out, vilenkin::profiles_to_csv(profiles));
        return 0;
    }
    if (config.format != "json") {
        throw vilenkin::ParseError("format must be csv or json");
    }
    OrderedJson doc;
    doc["config"] = config_echo(config, s);
    OrderedJson items = OrderedJson::array();
    for (const auto& profile : profiles) {
        OrderedJson item;
        item["k"] = profile.k;
        item["n"] = profile.n;
        item["alpha"] = profile.alpha;
        item["l1_norm"] = profile.l1_norm;
        item["max_ratio"] = profile.max_ratio();
        OrderedJson shells = OrderedJson::array();
        for (std::size_t i = 0; i < profile.shell_max.size(); ++i) {
            shells.push_back({{"A", i + 1},
                              {"shell_max", profile.shell_max[i]},
                              {"normalizer", profile.normalizer[i]},
                              {"ratio", profile.shell_max[i] / profile.normalizer[i]}});
        }
        item["shells"] = std::move(shells);
        items.push_back(std::move(item));
    }
    doc["profiles"] = std::move(items);
    emit(config.out, doc.dump(2) + "\n");
    return 0;
}

int run_cesaro_cmd(const RunConfig& config, std::int64_t n) {
    const vilenkin::CesaroTable table = vilenkin::cesaro_numbers(config.alpha, n);
    emit(config.out, vilenkin::cesaro_to_csv(table));
    return 0;
}

int run_transform_cmd(const RunConfig& config, const std::string& direction,
                      const std::string& in_path) {
    const std::string text = vilenkin::read_file(in_path);
    const bool json_in = !text.empty() && text.find_first_not_of(" \t\r\n") != std::string::npos &&
                         text[text.find_first_not_of(" \t\r\n")] == '{';
    const bool json_out = config.format == "json";
    if (!json_out && config.format != "csv") {
        throw vilenkin::ParseError("format must be csv or json");
    }
    if (direction == "forward") {
        vilenkin::StepFunction f =
            json_in ? vilenkin::step_from_json(text)
                    : vilenkin::step_from_csv(vilenkin::resolve_structure(config), text);
        const vilenkin::Spectrum spec = vilenkin::forward(f);
        emit(config.out,
             json_out ? vilenkin::spectrum_to_json(spec) : vilenkin::spectrum_to_csv(spec));
        return 0;
    }
    if (direction == "inverse") {
        vilenkin::Spectrum spec =
            json_in ? vilenkin::spectrum_from_json(text)
                    : vilenkin::spectrum_from_csv(vilenkin::resolve_structure(config), text);
        const vilenkin::StepFunction f = vilenkin::inverse(spec);
        emit(config.out, json_out ? vilenkin::step_to_json(f) : vilenkin::step_to_csv(f));
        return 0;
    }
    throw vilenkin::ParseError("direction must be forward or inverse");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vilenkin analysis toolkit: mixed-radix transforms, summation means, "
                 "kernel profiles, and convergence experiments"};
    app.require_subcommand(1);

    RunConfig parsed;
    std::string config_path;

    CLI::App* selftest = app.add_subcommand("selftest", "run the identity check suites");
    add_common_options(selftest, parsed, config_path);

    CLI::App* converge =
        app.add_subcommand("converge", "measure mean-vs-function errors against the modulus bound");
    add_common_options(converge, parsed, config_path);

    CLI::App* kernels = app.add_subcommand("kernels", "shell profiles of block kernels");
    add_common_options(kernels, parsed, config_path);

    CLI::App* cesaro = app.add_subcommand("cesaro-table", "table of Cesaro numbers");
    std::int64_t cesaro_n = 100;
    cesaro->add_option("--n", cesaro_n, "last index");
    add_common_options(cesaro, parsed, config_path);

    CLI::App* transform = app.add_subcommand("transform", "transform a serialized function");
    std::string direction = "forward";
    std::string in_path;
    transform->add_option("--direction", direction, "forward | inverse");
    transform->add_option("--in", in_path, "input file (CSV or JSON)")->required();
    add_common_options(transform, parsed, config_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (selftest->parsed()) {
            return run_selftest_cmd(resolve_config(selftest, parsed, config_path));
        }
        if (converge->parsed()) {
            return run_converge_cmd(resolve_config(converge, parsed, config_path));
        }
        if (kernels->parsed()) {
            return run_kernels_cmd(resolve_config(kernels, parsed, config_path));
        }
        if (cesaro->parsed()) {
            return run_cesaro_cmd(resolve_config(cesaro, parsed, config_path), cesaro_n);
        }
        if (transform->parsed()) {
            return run_transform_cmd(resolve_config(transform, parsed, config_path), direction,
                                     in_path);
        }
    } catch (const vilenkin::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 2;
    }
    return 2;
}
