#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "scalefree/dataset.hpp"

namespace scalefree {

/// Reads a comma-separated file with a header row. `label_column` selects
/// the label column by header name or, failing that, by zero-based index.
/// All other cells must parse as finite reals; missing cells are rejected.
[[nodiscard]] Dataset load_csv(const std::filesystem::path& path,
                               const std::optional<std::string>& label_column = std::nullopt);

[[nodiscard]] Dataset parse_csv(std::istream& in, std::string name,
                                const std::optional<std::string>& label_column = std::nullopt);

/// Writes the dataset in its input layout (label column at its original
/// position). Numbers use the shortest round-trip decimal form.
void write_csv(const Dataset& data, const std::filesystem::path& path);
void write_csv(const Dataset& data, std::ostream& out);

/// Shortest decimal string that parses back to exactly `v`.
[[nodiscard]] std::string format_double(double v);

}  // namespace scalefree
