#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ssga/harness/experiment.hpp"

namespace ssga::harness {

inline constexpr int kDefaultPrecision = 6;

/// Locale-independent shortest form with at most `precision` significant digits.
std::string format_number(double value, int precision = kDefaultPrecision);

/// Rounds every floating-point value in `j` to `precision` significant digits.
void round_numbers(nlohmann::json& j, int precision = kDefaultPrecision);

inline constexpr std::string_view kCsvHeader =
    "name,algorithm,n,mu,c,runs,mean,std_dev,normalized_mean,normalized_std,capped_count";

/// One row per point; missing normalizations are left empty.
void write_csv(const ExperimentResult& result, std::ostream& out);
std::string to_csv(const ExperimentResult& result);

/// {"name", "normalization", "sweep", "rows": [...]} with the CSV fields per row,
/// plus "warning" when any run hit the evaluation cap.
nlohmann::json to_json(const ExperimentResult& result);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

} // namespace ssga::harness
