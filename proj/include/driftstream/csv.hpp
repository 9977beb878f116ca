#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "driftstream/arff.hpp"
#include "driftstream/instance.hpp"
#include "driftstream/schema.hpp"
#include "driftstream/stream.hpp"

namespace driftstream {

/// Parses a CSV dataset with a header row. Column types are inferred: a column
/// is numeric when every non-missing cell parses as a number, nominal
/// otherwise, with nominal values ordered by first appearance. `class_column`
/// names the label column (defaults to the last one); a name not present in
/// the header raises UnknownColumnError. Empty cells and "?" are missing.
/// Inference tracks a bounded number of distinct numeric-looking values per
/// column, so memory stays flat on large numeric files; a column that turns
/// textual after thousands of distinct numbers is rejected with ParseError.
ParsedDataset parse_csv(std::string text, std::string_view class_column = "");
ParsedDataset parse_csv_file(const std::filesystem::path& path, std::string_view class_column = "");

/// Writes instances as CSV with a header row; the class column is emitted last
/// under the schema's class name. Missing values become empty cells.
std::string serialize_csv(const Schema& schema, std::span<const Instance> rows);
void write_csv(std::ostream& out, const Schema& schema, InstanceSource& source,
               std::uint64_t limit = 0);

}  // namespace driftstream
