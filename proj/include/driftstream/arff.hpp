#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "driftstream/stream.hpp"

namespace driftstream {

/// A parsed header plus a lazy row stream. The stream holds the schema and
/// one row of state at a time, so memory use is bounded regardless of the
/// file size. Row errors (bad arity, unknown nominal value, junk in a
/// numeric cell) surface as ParseError from next(), with the line number.
struct ParsedDataset {
  std::shared_ptr<const Schema> schema;
  std::unique_ptr<InstanceSource> stream;
};

/// Parse the supported ARFF subset: @relation, @attribute name
/// numeric|real|integer|{v1,v2,...}, @data, comma-separated rows, '%'
/// comments, '?' missing values. Keywords are case-insensitive; the last
/// declared attribute becomes the class and must be nominal.
ParsedDataset parse_arff(std::string text);
ParsedDataset parse_arff_file(const std::filesystem::path& path);

std::string serialize_arff(const Schema& schema, std::span<const Instance> rows,
                           std::string_view relation = "stream");
/// Stream up to `limit` instances (0 = all) straight to `out`.
void write_arff(std::ostream& out, const Schema& schema, InstanceSource& source,
                std::uint64_t limit = 0, std::string_view relation = "stream");

}  // namespace driftstream
