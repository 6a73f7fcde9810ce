#pragma once

#include <filesystem>
#include <string>

#include "scalefree/transformer.hpp"

namespace scalefree {

inline constexpr int kModelFormatVersion = 1;

/// JSON text with keys {format_version, kind, psi?, t?, seed?, fingerprint,
/// columns}. Doubles are written in shortest round-trip form.
[[nodiscard]] std::string serialize_model(const FittedTransformer& ft);
/// Throws CorruptModel on malformed or inconsistent content and
/// UnsupportedVersion on a newer format_version.
[[nodiscard]] FittedTransformer deserialize_model(const std::string& text);

void save_model(const FittedTransformer& ft, const std::filesystem::path& path);
[[nodiscard]] FittedTransformer load_model(const std::filesystem::path& path);

/// Hex fingerprint stored alongside the columns; derived from the column count.
[[nodiscard]] std::string model_fingerprint(std::size_t column_count);

}  // namespace scalefree
