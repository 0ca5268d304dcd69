#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "conehankel/nehari.hpp"
#include "conehankel/operators.hpp"
#include "conehankel/spectral.hpp"

namespace conehankel::io {

using json = nlohmann::json;

/// Version stamp embedded in every artifact.
inline constexpr const char* kToolVersion = "0.1.0";

std::string format_double(double v);  // 17 significant digits

/// FNV-1a hash of a canonical config string, hex-encoded.
std::string config_hash(const std::string& canonical);

/// Writes content through a temp file plus rename, so partial artifacts
/// never appear under the final name.
void atomic_write(const std::filesystem::path& path, const std::string& content);

// ---- order specs ----
json order_spec_to_json(const OrderSpec& spec);
OrderSpec order_spec_from_json(const json& j);
OrderSpec load_order_spec(const std::filesystem::path& path);

json validation_report_to_json(const OrderSpec& spec, const ValidationReport& report);

// ---- symbols ----
json symbol_to_json(const FourierCoeffs& f);
FourierCoeffs symbol_from_json(const json& j);
FourierCoeffs load_symbol(const std::filesystem::path& path);

// ---- matrices: a JSON index/metadata file plus a CSV of nonzero entries ----
void save_matrix(const OperatorMatrix& M, const std::filesystem::path& base);
OperatorMatrix load_matrix(const std::filesystem::path& base);

// ---- study reports ----
json study_report_to_json(const StudyReport& report);
std::string study_report_to_csv(const StudyReport& report);
std::string study_plot_script(const StudyReport& report, const std::string& csv_name);

// ---- extension results ----
json extension_result_to_json(const ExtensionResult& result, const OrderSpec& spec);

}  // namespace conehankel::io
