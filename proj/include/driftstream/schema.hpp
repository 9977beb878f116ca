#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace driftstream {

/// One column of a stream. An empty value list means numeric; a non-empty
/// list makes the attribute nominal over exactly those values.
struct AttributeSpec {
  std::string name;
  std::vector<std::string> values;

  bool is_nominal() const { return !values.empty(); }

  bool operator==(const AttributeSpec&) const = default;
};

/// Attribute layout plus class value set shared by every instance of a
/// stream. Plain data; call validate() before using a schema for learning.
struct Schema {
  std::vector<AttributeSpec> attributes;
  std::vector<std::string> class_values;
  std::string class_name = "class";

  std::size_t attribute_count() const { return attributes.size(); }
  int class_count() const { return static_cast<int>(class_values.size()); }

  /// Throws std::invalid_argument unless attribute names are unique and
  /// non-empty, every nominal attribute declares at least two distinct
  /// values, and there are at least two distinct class values.
  void validate() const;

  bool operator==(const Schema&) const = default;
};

}  // namespace driftstream
