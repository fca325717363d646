#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vilenkin/approximation.hpp"
#include "vilenkin/cesaro.hpp"
#include "vilenkin/kernels.hpp"
#include "vilenkin/transform.hpp"

namespace vilenkin {

/// 17-significant-digit rendering; decimal text parses back to the same bits.
std::string format_double(double value);

// CSV: complex arrays carry columns index,re,im; the radix structure is
// supplied out of band by the caller.
std::string step_to_csv(const StepFunction& f);
std::string spectrum_to_csv(const Spectrum& s);
StepFunction step_from_csv(const RadixStructure& s, std::string_view text);
Spectrum spectrum_from_csv(const RadixStructure& s, std::string_view text);

// JSON: self-describing object {radices, level, values:[[re,im],...]}.
std::string step_to_json(const StepFunction& f);
std::string spectrum_to_json(const Spectrum& s);
StepFunction step_from_json(std::string_view text);
Spectrum spectrum_from_json(std::string_view text);

std::string cesaro_to_csv(const CesaroTable& table);

/// Rows k,A,shell_max,normalizer,ratio for a collection of profiles.
std::string profiles_to_csv(const std::vector<KernelProfile>& profiles);

std::string convergence_to_csv(const std::vector<ConvergenceRow>& rows);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace vilenkin
