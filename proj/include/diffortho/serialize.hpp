#pragma once

// JSON and CSV emission. Every number is written as a decimal string with a
// precision-derived digit count so that files round-trip through
// parse_scalar and are byte-identical across runs.

#include "diffortho/asymptotics.hpp"
#include "diffortho/hydro.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace diffortho {

std::string format_complex(const ExtComplex& z);

std::string spec_json(const MeasureSpec& spec);
/// Throws Error(Shape) on malformed documents and Error(Measure) via validation.
MeasureSpec parse_spec_json(const std::string& text);

std::string poly_json(const DiffOrthoPoly& d);
std::string flow_json(const FlowSystem& sys);

std::string zeros_csv(const ZeroCloud& zc);
std::string curve_csv(const LevelCurve& curve);
std::string nth_root_csv(const std::vector<NthRootRow>& rows);
std::string ratio_csv(const std::vector<RatioRow>& rows);
std::string field_csv(const std::vector<FieldSample>& samples);
std::string coeff_growth_csv(const std::vector<CoeffGrowthRow>& rows);

/// Writes through a temporary file in the same directory and renames it into
/// place, so readers never observe a partial file.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace diffortho
