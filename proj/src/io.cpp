#include "vilenkin/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace vilenkin {

namespace {

using OrderedJson = nlohmann::ordered_json;

double parse_double(std::string_view text) {
    try {
        std::size_t used = 0;
        const std::string copy(text);
        const double value = std::stod(copy, &used);
        if (used != copy.size()) {
            throw ParseError("trailing characters after number: '" + copy + "'");
        }
        return value;
    } catch (const std::exception&) {
        throw ParseError("invalid number: '" + std::string(text) + "'");
    }
}

std::vector<Complex> complex_array_from_csv(const RadixStructure& s, std::string_view text,
                                            const char* what) {
    std::vector<Complex> values;
    values.reserve(static_cast<std::size_t>(s.size()));
    std::istringstream stream{std::string(text)};
    std::string line;
    bool first = true;
    std::int64_t expected_index = 0;
    while (std::getline(stream, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line == "index,re,im") continue;  // header optional on input
        }
        const std::size_t c1 = line.find(',');
        const std::size_t c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
        if (c2 == std::string::npos) {
            throw ParseError(std::string(what) + ": expected 'index,re,im' row, got '" + line + "'");
        }
        const std::int64_t index = static_cast<std::int64_t>(parse_double(line.substr(0, c1)));
        if (index != expected_index) {
            throw ParseError(std::string(what) + ": rows must be consecutive from 0");
        }
        ++expected_index;
        values.emplace_back(parse_double(line.substr(c1 + 1, c2 - c1 - 1)),
                            parse_double(line.substr(c2 + 1)));
    }
    if (static_cast<std::int64_t>(values.size()) != s.size()) {
        throw LengthMismatch(std::string(what) + ": row count does not equal M_N");
    }
    return values;
}

std::string complex_array_to_csv(const std::vector<Complex>& values) {
    std::string out = "index,re,im\n";
    for (std::size_t j = 0; j < values.size(); ++j) {
        out += std::to_string(j);
        out += ',';
        out += format_double(values[j].real());
        out += ',';
        out += format_double(values[j].imag());
        out += '\n';
    }
    return out;
}

OrderedJson complex_object_to_json(const RadixStructure& s, const std::vector<Complex>& values) {
    OrderedJson obj;
    obj["radices"] = std::vector<int>(s.radices().begin(), s.radices().end());
    obj["level"] = s.level();
    OrderedJson rows = OrderedJson::array();
    for (const Complex& z : values) {
        rows.push_back({z.real(), z.imag()});
    }
    obj["values"] = std::move(rows);
    return obj;
}

std::pair<RadixStructure, std::vector<Complex>> complex_object_from_json(std::string_view text,
                                                                         const char* what) {
    OrderedJson obj;
    try {
        obj = OrderedJson::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
    if (!obj.contains("radices") || !obj.contains("values")) {
        throw ParseError(std::string(what) + ": missing 'radices' or 'values'");
    }
    RadixStructure s{obj["radices"].get<std::vector<int>>()};
    if (obj.contains("level") && obj["level"].get<int>() != s.level()) {
        throw ParseError(std::string(what) + ": level does not match radices");
    }
    std::vector<Complex> values;
    for (const auto& row : obj["values"]) {
        if (!row.is_array() || row.size() != 2) {
            throw ParseError(std::string(what) + ": values must be [re,im] pairs");
        }
        values.emplace_back(row[0].get<double>(), row[1].get<double>());
    }
    if (static_cast<std::int64_t>(values.size()) != s.size()) {
        throw LengthMismatch(std::string(what) + ": value count does not equal M_N");
    }
    return {std::move(s), std::move(values)};
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string step_to_csv(const StepFunction& f) { return complex_array_to_csv(f.values); }

std::string spectrum_to_csv(const Spectrum& s) { return complex_array_to_csv(s.coeffs); }

StepFunction step_from_csv(const RadixStructure& s, std::string_view text) {
    return StepFunction{s, complex_array_from_csv(s, text, "step function CSV")};
}

Spectrum spectrum_from_csv(const RadixStructure& s, std::string_view text) {
    return Spectrum{s, complex_array_from_csv(s, text, "spectrum CSV")};
}

std::string step_to_json(const StepFunction& f) {
    return complex_object_to_json(f.structure, f.values).dump(2) + "\n";
}

std::string spectrum_to_json(const Spectrum& s) {
    return complex_object_to_json(s.structure, s.coeffs).dump(2) + "\n";
}

StepFunction step_from_json(std::string_view text) {
    auto [s, values] = complex_object_from_json(text, "step function JSON");
    return StepFunction{std::move(s), std::move(values)};
}

Spectrum spectrum_from_json(std::string_view text) {
    auto [s, values] = complex_object_from_json(text, "spectrum JSON");
    return Spectrum{std::move(s), std::move(values)};
}

std::string cesaro_to_csv(const CesaroTable& table) {
    std::string out = "j,A_j\n";
    for (std::size_t j = 0; j < table.values.size(); ++j) {
        out += std::to_string(j);
        out += ',';
        out += format_double(table.values[j]);
        out += '\n';
    }
    return out;
}

std::string profiles_to_csv(const std::vector<KernelProfile>& profiles) {
    std::string out = "k,A,shell_max,normalizer,ratio\n";
    for (const KernelProfile& profile : profiles) {
        for (std::size_t i = 0; i < profile.shell_max.size(); ++i) {
            out += std::to_string(profile.k);
            out += ',';
            out += std::to_string(i + 1);
            out += ',';
            out += format_double(profile.shell_max[i]);
            out += ',';
            out += format_double(profile.normalizer[i]);
            out += ',';
            out += format_double(profile.shell_max[i] / profile.normalizer[i]);
            out += '\n';
        }
    }
    return out;
}

std::string convergence_to_csv(const std::vector<ConvergenceRow>& rows) {
    std::string out = "k,n,error,bound,ratio\n";
    for (const ConvergenceRow& row : rows) {
        out += std::to_string(row.k);
        out += ',';
        out += std::to_string(row.n);
        out += ',';
        out += format_double(row.error);
        out += ',';
        out += format_double(row.bound);
        out += ',';
        if (row.ratio) out += format_double(*row.ratio);
        out += '\n';
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot write file: " + path);
    }
    out << contents;
}

}  // namespace vilenkin
