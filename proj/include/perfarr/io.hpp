#pragma once

#include "perfarr/checkers.hpp"
#include "perfarr/correlation.hpp"
#include "perfarr/exponent_array.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>

namespace perfarr {

/// Canonical interchange form: {"exponents": [...], "modulus": r, "shape": [...]}
/// with sorted keys and compact separators — byte-stable for fixtures.
nlohmann::json array_to_json(const ExponentArray& a);
ExponentArray array_from_json(const nlohmann::json& j);
std::string canonical_json(const ExponentArray& a);

nlohmann::json table_to_json(const CorrelationTable& table);
nlohmann::json report_to_json(const PropertyReport& report);
nlohmann::json bench_to_json(const BenchReport& report);

ExponentArray load_array(const std::filesystem::path& path);

/// Writes via a sibling temp file plus rename, so readers never observe a
/// partial file.
void atomic_write(const std::filesystem::path& path, const std::string& bytes);

} // namespace perfarr
