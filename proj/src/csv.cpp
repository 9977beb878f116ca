#include "driftstream/csv.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "driftstream/errors.hpp"
#include "driftstream/text.hpp"

namespace driftstream {

namespace {

using ValueLookup = std::unordered_map<std::string, int>;

// Distinct cell values of one column in first-appearance order, plus whether
// every non-missing cell parsed as a number. Columns that look numeric stop
// hoarding candidate values after kNumericCandidateCap distinct ones, so a
// plain numeric column costs bounded memory no matter how long the file is;
// only a column that turns textual after that many distinct numbers is
// rejected.
constexpr std::size_t kNumericCandidateCap = 4096;

struct ColumnScan {
  bool all_numeric = true;
  bool candidates_dropped = false;
  std::vector<std::string> values;
  std::unordered_set<std::string> seen;

  void note(std::string_view cell, std::size_t line_no) {
    if (all_numeric && !parse_double(cell)) {
      all_numeric = false;
      if (candidates_dropped) {
        throw ParseError(line_no,
                         "column mixes text with too many distinct numbers to be nominal");
      }
    }
    if (candidates_dropped) return;
    std::string v(cell);
    if (seen.insert(v).second) {
      values.push_back(std::move(v));
      if (all_numeric && values.size() > kNumericCandidateCap) {
        candidates_dropped = true;
        values.clear();
        values.shrink_to_fit();
        seen = {};
      }
    }
  }
};

bool is_missing_cell(std::string_view cell) { return cell.empty() || cell == "?"; }

std::vector<std::string> read_header(std::istream& in, std::size_t& line_no) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty()) continue;
    std::vector<std::string> names;
    for (auto piece : split(body, ',')) names.emplace_back(trim(piece));
    return names;
  }
  throw ParseError(line_no, "missing CSV header row");
}

struct CsvLayout {
  std::shared_ptr<const Schema> schema;
  std::vector<std::size_t> attr_column;  // schema attribute index -> file column
  std::size_t class_column = 0;
  std::size_t column_count = 0;
  std::vector<ValueLookup> attr_lookup;
  ValueLookup class_lookup;

  void build_lookups() {
    attr_lookup.resize(schema->attribute_count());
    for (std::size_t a = 0; a < schema->attribute_count(); ++a) {
      const auto& values = schema->attributes[a].values;
      for (int i = 0; i < static_cast<int>(values.size()); ++i) attr_lookup[a][values[i]] = i;
    }
    for (int i = 0; i < schema->class_count(); ++i) class_lookup[schema->class_values[i]] = i;
  }

  Instance parse_row(std::span<std::string_view> cells, std::size_t line_no) const {
    if (cells.size() != column_count) {
      throw ParseError(line_no, "expected " + std::to_string(column_count) + " cells, got " +
                                    std::to_string(cells.size()));
    }
    Instance inst;
    inst.values.resize(schema->attribute_count());
    for (std::size_t a = 0; a < schema->attribute_count(); ++a) {
      std::string_view cell = trim(cells[attr_column[a]]);
      if (is_missing_cell(cell)) {
        inst.values[a] = Instance::missing_value();
        continue;
      }
      if (schema->attributes[a].is_nominal()) {
        auto it = attr_lookup[a].find(std::string(cell));
        if (it == attr_lookup[a].end()) {
          throw ParseError(line_no, "unknown value '" + std::string(cell) + "' in column '" +
                                        schema->attributes[a].name + "'");
        }
        inst.values[a] = static_cast<double>(it->second);
      } else {
        auto num = parse_double(cell);
        if (!num) {
          throw ParseError(line_no, "expected a number in column '" + schema->attributes[a].name +
                                        "', got '" + std::string(cell) + "'");
        }
        inst.values[a] = *num;
      }
    }
    std::string_view cls = trim(cells[class_column]);
    if (is_missing_cell(cls)) throw ParseError(line_no, "missing class value");
    auto it = class_lookup.find(std::string(cls));
    if (it == class_lookup.end()) {
      throw ParseError(line_no, "unknown class value '" + std::string(cls) + "'");
    }
    inst.true_class = it->second;
    inst.visible_class = it->second;
    return inst;
  }
};

class CsvSource : public InstanceSource {
 public:
  CsvSource(CsvLayout layout, std::unique_ptr<std::istream> in, std::size_t line_no)
      : layout_(std::move(layout)), in_(std::move(in)), line_no_(line_no) {}

  const Schema& schema() const override { return *layout_.schema; }

  std::optional<Instance> next() override {
    std::string line;
    while (std::getline(*in_, line)) {
      ++line_no_;
      std::string_view body = trim(line);
      if (body.empty()) continue;
      auto cells = split(body, ',');
      return layout_.parse_row(cells, line_no_);
    }
    return std::nullopt;
  }

 private:
  CsvLayout layout_;
  std::unique_ptr<std::istream> in_;
  std::size_t line_no_;
};

// First pass: header, class-column selection, and per-column type inference.
CsvLayout infer_layout(std::istream& in, std::string_view class_column) {
  std::size_t line_no = 0;
  auto header = read_header(in, line_no);
  std::size_t class_idx = header.size() - 1;
  if (!class_column.empty()) {
    auto it = std::find(header.begin(), header.end(), class_column);
    if (it == header.end()) throw UnknownColumnError(std::string(class_column));
    class_idx = static_cast<std::size_t>(it - header.begin());
  }

  std::vector<ColumnScan> scans(header.size());
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty()) continue;
    auto cells = split(body, ',');
    if (cells.size() != header.size()) {
      throw ParseError(line_no, "expected " + std::to_string(header.size()) + " cells, got " +
                                    std::to_string(cells.size()));
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      std::string_view cell = trim(cells[c]);
      if (!is_missing_cell(cell)) scans[c].note(cell, line_no);
    }
  }

  auto schema = std::make_shared<Schema>();
  CsvLayout layout;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c == class_idx) continue;
    AttributeSpec spec;
    spec.name = header[c];
    if (!scans[c].all_numeric) spec.values = std::move(scans[c].values);
    schema->attributes.push_back(std::move(spec));
    layout.attr_column.push_back(c);
  }
  if (scans[class_idx].candidates_dropped) {
    throw ParseError(line_no, "class column has too many distinct values");
  }
  schema->class_name = header[class_idx];
  schema->class_values = std::move(scans[class_idx].values);

  layout.schema = schema;
  layout.class_column = class_idx;
  layout.column_count = header.size();
  layout.build_lookups();
  return layout;
}

// Positions a fresh stream just past the header row and wraps it as a source.
ParsedDataset open_rows(CsvLayout layout, std::unique_ptr<std::istream> in) {
  std::size_t line_no = 0;
  std::string line;
  while (std::getline(*in, line)) {
    ++line_no;
    if (!trim(line).empty()) break;
  }
  ParsedDataset out;
  out.schema = layout.schema;
  out.stream = std::make_unique<CsvSource>(std::move(layout), std::move(in), line_no);
  return out;
}

}  // namespace

ParsedDataset parse_csv(std::string text, std::string_view class_column) {
  std::istringstream pass1(text);
  CsvLayout layout = infer_layout(pass1, class_column);
  return open_rows(std::move(layout), std::make_unique<std::istringstream>(std::move(text)));
}

ParsedDataset parse_csv_file(const std::filesystem::path& path, std::string_view class_column) {
  std::ifstream pass1(path);
  if (!pass1) throw std::runtime_error("cannot open " + path.string());
  CsvLayout layout = infer_layout(pass1, class_column);
  auto pass2 = std::make_unique<std::ifstream>(path);
  if (!*pass2) throw std::runtime_error("cannot open " + path.string());
  return open_rows(std::move(layout), std::move(pass2));
}

namespace {

std::string csv_header(const Schema& schema) {
  std::string out;
  for (const auto& attr : schema.attributes) {
    out += attr.name;
    out += ',';
  }
  out += schema.class_name;
  out += '\n';
  return out;
}

std::string csv_row(const Schema& schema, const Instance& inst) {
  std::string row;
  for (std::size_t a = 0; a < schema.attribute_count(); ++a) {
    if (!inst.is_missing(a)) {
      if (schema.attributes[a].is_nominal()) {
        row += schema.attributes[a].values[inst.nominal(a)];
      } else {
        row += format_double(inst.values[a]);
      }
    }
    row += ',';
  }
  row += schema.class_values[inst.true_class];
  row += '\n';
  return row;
}

}  // namespace

std::string serialize_csv(const Schema& schema, std::span<const Instance> rows) {
  std::string out = csv_header(schema);
  for (const Instance& inst : rows) out += csv_row(schema, inst);
  return out;
}

void write_csv(std::ostream& out, const Schema& schema, InstanceSource& source,
               std::uint64_t limit) {
  out << csv_header(schema);
  std::uint64_t n = 0;
  while (limit == 0 || n < limit) {
    auto inst = source.next();
    if (!inst) break;
    out << csv_row(schema, *inst);
    ++n;
  }
}

}  // namespace driftstream
