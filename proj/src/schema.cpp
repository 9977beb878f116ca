#include "driftstream/schema.hpp"

#include <stdexcept>
#include <unordered_set>

namespace driftstream {

void Schema::validate() const {
  std::unordered_set<std::string> names;
  for (const auto& attr : attributes) {
    if (attr.name.empty()) throw std::invalid_argument("attribute with empty name");
    if (!names.insert(attr.name).second)
      throw std::invalid_argument("duplicate attribute name: " + attr.name);
    if (attr.is_nominal()) {
      if (attr.values.size() < 2)
        throw std::invalid_argument("nominal attribute '" + attr.name +
                                    "' needs at least two values");
      std::unordered_set<std::string> vals(attr.values.begin(), attr.values.end());
      if (vals.size() != attr.values.size())
        throw std::invalid_argument("duplicate value in attribute '" + attr.name + "'");
    }
  }
  if (class_values.size() < 2) throw std::invalid_argument("need at least two class values");
  std::unordered_set<std::string> cls(class_values.begin(), class_values.end());
  if (cls.size() != class_values.size()) throw std::invalid_argument("duplicate class value");
}

}  // namespace driftstream
