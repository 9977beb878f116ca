#include "driftstream/arff.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <utility>
#include <vector>

#include "driftstream/errors.hpp"
#include "driftstream/text.hpp"

namespace driftstream {

namespace {

using ValueLookup = std::unordered_map<std::string, int>;

struct RowReader {
  std::shared_ptr<const Schema> schema;
  std::vector<ValueLookup> attr_lookup;  // empty map for numeric attributes
  ValueLookup class_lookup;

  void build() {
    attr_lookup.resize(schema->attribute_count());
    for (std::size_t a = 0; a < schema->attribute_count(); ++a) {
      const auto& values = schema->attributes[a].values;
      for (int i = 0; i < static_cast<int>(values.size()); ++i) attr_lookup[a][values[i]] = i;
    }
    for (int i = 0; i < schema->class_count(); ++i) class_lookup[schema->class_values[i]] = i;
  }

  Instance parse_row(std::string_view line, std::size_t line_no) const {
    auto cells = split(line, ',');
    if (cells.size() != schema->attribute_count() + 1) {
      throw ParseError(line_no, "expected " + std::to_string(schema->attribute_count() + 1) +
                                    " cells, got " + std::to_string(cells.size()));
    }
    Instance inst;
    inst.values.resize(schema->attribute_count());
    for (std::size_t a = 0; a < schema->attribute_count(); ++a) {
      std::string_view cell = trim(cells[a]);
      if (cell.empty() || cell == "?") {
        inst.values[a] = Instance::missing_value();
        continue;
      }
      if (schema->attributes[a].is_nominal()) {
        auto it = attr_lookup[a].find(std::string(cell));
        if (it == attr_lookup[a].end()) {
          throw ParseError(line_no, "unknown value '" + std::string(cell) + "' for attribute '" +
                                        schema->attributes[a].name + "'");
        }
        inst.values[a] = static_cast<double>(it->second);
      } else {
        auto num = parse_double(cell);
        if (!num) {
          throw ParseError(line_no, "expected a number in attribute '" +
                                        schema->attributes[a].name + "', got '" +
                                        std::string(cell) + "'");
        }
        inst.values[a] = *num;
      }
    }
    std::string_view cls = trim(cells.back());
    if (cls.empty() || cls == "?") throw ParseError(line_no, "missing class value");
    auto it = class_lookup.find(std::string(cls));
    if (it == class_lookup.end()) {
      throw ParseError(line_no, "unknown class value '" + std::string(cls) + "'");
    }
    inst.true_class = it->second;
    inst.visible_class = it->second;
    return inst;
  }
};

class ArffSource : public InstanceSource {
 public:
  ArffSource(RowReader reader, std::unique_ptr<std::istream> in, std::size_t line_no)
      : reader_(std::move(reader)), in_(std::move(in)), line_no_(line_no) {}

  const Schema& schema() const override { return *reader_.schema; }

  std::optional<Instance> next() override {
    std::string line;
    while (std::getline(*in_, line)) {
      ++line_no_;
      std::string_view body = trim(line);
      if (body.empty() || body.front() == '%') continue;
      return reader_.parse_row(body, line_no_);
    }
    return std::nullopt;
  }

 private:
  RowReader reader_;
  std::unique_ptr<std::istream> in_;
  std::size_t line_no_;
};

bool ci_starts_with(std::string_view line, std::string_view keyword) {
  if (line.size() < keyword.size()) return false;
  return to_lower(line.substr(0, keyword.size())) == keyword;
}

std::vector<std::string> parse_value_list(std::string_view body, std::size_t line_no) {
  body = trim(body);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}') {
    throw ParseError(line_no, "expected numeric, real, integer or {v1,v2,...}");
  }
  body.remove_prefix(1);
  body.remove_suffix(1);
  std::vector<std::string> values;
  for (auto piece : split(body, ',')) {
    std::string v(trim(piece));
    if (v.empty()) throw ParseError(line_no, "empty nominal value");
    values.push_back(std::move(v));
  }
  if (values.size() < 2) throw ParseError(line_no, "nominal attribute needs at least two values");
  return values;
}

ParsedDataset parse_arff_stream(std::unique_ptr<std::istream> in) {
  std::size_t line_no = 0;
  std::string line;
  std::vector<AttributeSpec> declared;
  bool saw_data = false;
  while (std::getline(*in, line)) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '%') continue;
    if (ci_starts_with(body, "@relation")) continue;
    if (ci_starts_with(body, "@data")) {
      saw_data = true;
      break;
    }
    if (!ci_starts_with(body, "@attribute")) {
      throw ParseError(line_no, "expected @attribute or @data, got '" + std::string(body) + "'");
    }
    body = trim(body.substr(10));
    std::size_t name_end = body.find_first_of(" \t");
    if (name_end == std::string_view::npos) throw ParseError(line_no, "attribute without a type");
    AttributeSpec spec;
    spec.name = std::string(body.substr(0, name_end));
    std::string_view type = trim(body.substr(name_end));
    std::string type_lc = to_lower(type);
    if (type_lc == "numeric" || type_lc == "real" || type_lc == "integer") {
      // numeric attribute, no declared values
    } else {
      spec.values = parse_value_list(type, line_no);
    }
    declared.push_back(std::move(spec));
  }
  if (!saw_data) throw ParseError(line_no, "missing @data section");
  if (declared.size() < 2) {
    throw ParseError(line_no, "need at least one attribute plus a class attribute");
  }

  auto schema = std::make_shared<Schema>();
  AttributeSpec class_attr = std::move(declared.back());
  declared.pop_back();
  if (!class_attr.is_nominal()) throw ParseError(line_no, "class attribute must be nominal");
  schema->attributes = std::move(declared);
  schema->class_values = std::move(class_attr.values);
  schema->class_name = std::move(class_attr.name);

  RowReader reader{schema, {}, {}};
  reader.build();
  ParsedDataset out;
  out.schema = schema;
  out.stream = std::make_unique<ArffSource>(std::move(reader), std::move(in), line_no);
  return out;
}

void write_cell(std::string& out, const Schema& schema, const Instance& inst, std::size_t a) {
  if (inst.is_missing(a)) {
    out += '?';
  } else if (schema.attributes[a].is_nominal()) {
    out += schema.attributes[a].values[inst.nominal(a)];
  } else {
    out += format_double(inst.values[a]);
  }
}

std::string format_row(const Schema& schema, const Instance& inst) {
  std::string row;
  for (std::size_t a = 0; a < schema.attribute_count(); ++a) {
    write_cell(row, schema, inst, a);
    row += ',';
  }
  row += schema.class_values[inst.true_class];
  row += '\n';
  return row;
}

std::string format_header(const Schema& schema, std::string_view relation) {
  std::string out;
  out += "@relation ";
  out += relation;
  out += "\n";
  for (const auto& attr : schema.attributes) {
    out += "@attribute " + attr.name + " ";
    if (attr.is_nominal()) {
      out += '{';
      for (std::size_t i = 0; i < attr.values.size(); ++i) {
        if (i) out += ',';
        out += attr.values[i];
      }
      out += '}';
    } else {
      out += "numeric";
    }
    out += '\n';
  }
  out += "@attribute " + schema.class_name + " {";
  for (std::size_t i = 0; i < schema.class_values.size(); ++i) {
    if (i) out += ',';
    out += schema.class_values[i];
  }
  out += "}\n@data\n";
  return out;
}

}  // namespace

ParsedDataset parse_arff(std::string text) {
  return parse_arff_stream(std::make_unique<std::istringstream>(std::move(text)));
}

ParsedDataset parse_arff_file(const std::filesystem::path& path) {
  auto in = std::make_unique<std::ifstream>(path);
  if (!*in) throw std::runtime_error("cannot open " + path.string());
  return parse_arff_stream(std::move(in));
}

std::string serialize_arff(const Schema& schema, std::span<const Instance> rows,
                           std::string_view relation) {
  std::string out = format_header(schema, relation);
  for (const Instance& inst : rows) out += format_row(schema, inst);
  return out;
}

void write_arff(std::ostream& out, const Schema& schema, InstanceSource& source,
                std::uint64_t limit, std::string_view relation) {
  out << format_header(schema, relation);
  std::uint64_t n = 0;
  while (limit == 0 || n < limit) {
    auto inst = source.next();
    if (!inst) break;
    out << format_row(schema, *inst);
    ++n;
  }
}

}  // namespace driftstream
