#include "vilenkin/config.hpp"

#include <charconv>
#include <map>

#include <json.hpp>

namespace vilenkin {

void RunConfig::apply_json(const std::string& text) {
    nlohmann::json obj;
    try {
        obj = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("config file: ") + e.what());
    }
    if (!obj.is_object()) {
        throw ParseError("config file must hold a flat JSON object");
    }
    for (const auto& [key, value] : obj.items()) {
        if (key == "radices") {
            radices = value.get<std::string>();
        } else if (key == "level") {
            level = value.get<int>();
        } else if (key == "alpha") {
            alpha = value.get<double>();
        } else if (key == "p") {
            p = value.is_string() ? value.get<std::string>() : value.dump();
        } else if (key == "function") {
            function = value.get<std::string>();
        } else if (key == "seed") {
            seed = value.get<std::uint64_t>();
        } else if (key == "n_policy") {
            n_policy = value.get<std::string>();
        } else if (key == "k_min") {
            k_min = value.get<int>();
        } else if (key == "k_max") {
            k_max = value.get<int>();
        } else if (key == "out") {
            out = value.get<std::string>();
        } else if (key == "format") {
            format = value.get<std::string>();
        } else {
            throw ParseError("unknown config key: '" + key + "'");
        }
    }
}

RadixStructure resolve_structure(const RunConfig& config) {
    RadixStructure parsed = RadixStructure::parse(config.radices);
    if (config.level == 0 || config.level == parsed.level()) {
        return parsed;
    }
    if (config.level < parsed.level()) {
        throw ParseError("level is smaller than the parsed radix list");
    }
    std::vector<int> extended;
    extended.reserve(static_cast<std::size_t>(config.level));
    for (int i = 0; i < config.level; ++i) {
        extended.push_back(parsed.radix(i % parsed.level()));
    }
    return RadixStructure(std::move(extended));
}

double parse_exponent(const std::string& token) {
    if (token == "inf" || token == "Inf" || token == "INF") {
        return kInfinityExponent;
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError("invalid norm exponent: '" + token + "'");
    }
    if (value < 1.0) {
        throw BadExponent("norm exponent must satisfy p >= 1");
    }
    return value;
}

NPolicy parse_npolicy(const std::string& token) {
    if (token == "mk") return NPolicy::block_start();
    if (token == "mk1") return NPolicy::block_end();
    if (token.rfind("random:", 0) == 0) {
        const std::string seed_text = token.substr(7);
        std::uint64_t seed = 0;
        auto [ptr, ec] =
            std::from_chars(seed_text.data(), seed_text.data() + seed_text.size(), seed);
        if (ec != std::errc{} || ptr != seed_text.data() + seed_text.size()) {
            throw ParseError("invalid policy seed: '" + token + "'");
        }
        return NPolicy::random(seed);
    }
    throw ParseError("invalid n policy: '" + token + "' (want mk | mk1 | random:<seed>)");
}

namespace {

std::map<std::string, std::string> parse_kv(const std::string& text) {
    std::map<std::string, std::string> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw ParseError("expected key=value, got '" + item + "'");
        }
        out[item.substr(0, eq)] = item.substr(eq + 1);
        pos = comma + 1;
    }
    return out;
}

double kv_double(const std::map<std::string, std::string>& kv, const std::string& key) {
    const auto it = kv.find(key);
    if (it == kv.end()) {
        throw ParseError("missing parameter '" + key + "'");
    }
    try {
        return std::stod(it->second);
    } catch (const std::exception&) {
        throw ParseError("invalid value for '" + key + "': '" + it->second + "'");
    }
}

std::int64_t kv_int(const std::map<std::string, std::string>& kv, const std::string& key,
                    std::optional<std::int64_t> fallback = std::nullopt) {
    const auto it = kv.find(key);
    if (it == kv.end()) {
        if (fallback) return *fallback;
        throw ParseError("missing parameter '" + key + "'");
    }
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(it->second.data(), it->second.data() + it->second.size(), value);
    if (ec != std::errc{} || ptr != it->second.data() + it->second.size()) {
        throw ParseError("invalid value for '" + key + "': '" + it->second + "'");
    }
    return value;
}

}  // namespace

StepFunction make_function(const std::string& spec, const RadixStructure& s) {
    const std::size_t colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (name == "lacunary") {
        const auto kv = parse_kv(args);
        return gen_lacunary(kv_double(kv, "beta"), s);
    }
    if (name == "indicator") {
        const auto kv = parse_kv(args);
        return gen_indicator(static_cast<int>(kv_int(kv, "r")), kv_int(kv, "label", 0), s);
    }
    if (name == "random") {
        const auto kv = parse_kv(args);
        const std::int64_t seed = kv_int(kv, "seed", 42);
        const std::int64_t r = kv_int(kv, "r", s.level());
        return gen_random(static_cast<std::uint64_t>(seed), static_cast<int>(r), s);
    }
    if (name == "constant") {
        std::vector<Complex> values(static_cast<std::size_t>(s.size()), Complex{1.0, 0.0});
        return StepFunction{s, std::move(values)};
    }
    throw ParseError("unknown function spec '" + spec +
                     "' (want lacunary:... | indicator:... | random:... | constant)");
}

}  // namespace vilenkin
