#include "siglearn/csv.hpp"

#include <algorithm>
#include <cfloat>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace siglearn {

namespace {

struct RawCsv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;  // field lists
  std::vector<std::size_t> line_numbers;       // 1-based physical line of each row
};

// RFC-4180 subset: comma separator, optional CRLF, double-quoted fields with
// "" escapes; quoted fields may span lines.
RawCsv parse_csv_stream(std::istream& in, const std::string& path) {
  RawCsv out;
  std::string field;
  std::vector<std::string> record;
  bool in_quotes = false;
  bool any_char = false;
  std::size_t line = 1;
  std::size_t record_start_line = 1;

  auto end_field = [&]() {
    record.push_back(field);
    field.clear();
  };
  auto end_record = [&]() {
    end_field();
    if (out.header.empty()) {
      out.header = record;
    } else {
      out.rows.push_back(record);
      out.line_numbers.push_back(record_start_line);
    }
    record.clear();
    record_start_line = line;
  };

  char c;
  while (in.get(c)) {
    any_char = true;
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\r') {
      // swallowed; the LF that follows ends the record
    } else if (c == '\n') {
      ++line;
      end_record();
    } else {
      field.push_back(c);
    }
  }
  if (in_quotes) throw std::runtime_error(path + ": unterminated quoted field");
  if (!field.empty() || !record.empty()) end_record();  // no trailing newline
  if (!any_char || out.header.empty())
    throw std::runtime_error(path + ": empty file");
  if (out.rows.empty())
    throw std::runtime_error(path + ": no data rows after header");
  return out;
}

double parse_double(const std::string& text, const std::string& path,
                    std::size_t line, const std::string& column) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  while (begin != end && (*begin == ' ' || *begin == '\t')) ++begin;
  while (end != begin && (*(end - 1) == ' ' || *(end - 1) == '\t')) --end;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw std::runtime_error(path + ":" + std::to_string(line) +
                             ": malformed numeric value '" + text + "' in column '" +
                             column + "'");
  if (!std::isfinite(value))
    throw std::runtime_error(path + ":" + std::to_string(line) +
                             ": non-finite value '" + text + "' in column '" + column +
                             "'");
  return value;
}

std::size_t column_index(const std::vector<std::string>& header,
                         const std::string& name, const std::string& path) {
  auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end())
    throw std::runtime_error(path + ": schema names unknown column '" + name + "'");
  return static_cast<std::size_t>(it - header.begin());
}

}  // namespace

int OneHotEncoding::level_index(const std::string& value) const {
  auto it = std::find(levels.begin(), levels.end(), value);
  return it == levels.end() ? -1 : static_cast<int>(it - levels.begin());
}

CsvSchema load_csv_schema(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open schema file: " + path);
  nlohmann::json j;
  in >> j;
  CsvSchema schema;
  if (!j.contains("response"))
    throw std::runtime_error(path + ": schema needs a \"response\" key");
  schema.response = j.at("response").get<std::string>();
  if (j.contains("response_kind")) {
    const auto kind = j.at("response_kind").get<std::string>();
    if (kind == "real")
      schema.response_kind = Task::kRegression;
    else if (kind == "label")
      schema.response_kind = Task::kClassification;
    else
      throw std::runtime_error(path + ": response_kind must be \"real\" or \"label\"");
  }
  if (j.contains("categorical"))
    schema.categorical = j.at("categorical").get<std::vector<std::string>>();
  if (j.contains("drop")) schema.drop = j.at("drop").get<std::vector<std::string>>();
  if (j.contains("missing_tokens"))
    schema.missing_tokens = j.at("missing_tokens").get<std::vector<std::string>>();
  return schema;
}

CsvLoadResult load_csv(const std::string& path, const CsvSchema& schema) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open CSV file: " + path);
  const RawCsv raw = parse_csv_stream(in, path);

  const std::size_t response_col = column_index(raw.header, schema.response, path);
  std::vector<bool> is_drop(raw.header.size(), false);
  for (const auto& name : schema.drop) is_drop[column_index(raw.header, name, path)] = true;
  std::vector<bool> is_categorical(raw.header.size(), false);
  for (const auto& name : schema.categorical) {
    const std::size_t idx = column_index(raw.header, name, path);
    if (idx == response_col)
      throw std::runtime_error(path + ": response column cannot also be categorical");
    is_categorical[idx] = true;
  }

  std::vector<std::size_t> numeric_cols, categorical_cols;
  for (std::size_t c = 0; c < raw.header.size(); ++c) {
    if (c == response_col || is_drop[c]) continue;
    (is_categorical[c] ? categorical_cols : numeric_cols).push_back(c);
  }

  auto is_missing = [&](const std::string& value) {
    return std::find(schema.missing_tokens.begin(), schema.missing_tokens.end(),
                     value) != schema.missing_tokens.end();
  };

  CsvLoadResult result;
  result.encodings.resize(categorical_cols.size());
  for (std::size_t k = 0; k < categorical_cols.size(); ++k)
    result.encodings[k].column = raw.header[categorical_cols[k]];

  // First pass: drop rows with missing values, collect category and label
  // levels in first-appearance order.
  std::vector<std::size_t> kept;
  std::map<std::string, int> label_ids;
  for (std::size_t r = 0; r < raw.rows.size(); ++r) {
    const auto& row = raw.rows[r];
    if (row.size() != raw.header.size())
      throw std::runtime_error(path + ":" + std::to_string(raw.line_numbers[r]) +
                               ": expected " + std::to_string(raw.header.size()) +
                               " fields, found " + std::to_string(row.size()));
    bool missing = is_missing(row[response_col]);
    for (std::size_t c = 0; c < row.size() && !missing; ++c) {
      if (c == response_col || is_drop[c]) continue;
      missing = is_missing(row[c]);
    }
    if (missing) {
      ++result.dropped_rows;
      continue;
    }
    kept.push_back(r);
    for (std::size_t k = 0; k < categorical_cols.size(); ++k) {
      const std::string& value = row[categorical_cols[k]];
      auto& levels = result.encodings[k].levels;
      if (std::find(levels.begin(), levels.end(), value) == levels.end())
        levels.push_back(value);
    }
    if (schema.response_kind == Task::kClassification) {
      const std::string& value = row[response_col];
      if (!label_ids.count(value)) {
        const int id = static_cast<int>(result.response_levels.size());
        label_ids[value] = id;
        result.response_levels.push_back(value);
      }
    }
  }
  if (kept.empty())
    throw std::runtime_error(path + ": all rows dropped for missing values");

  Eigen::Index dim = static_cast<Eigen::Index>(numeric_cols.size());
  for (const auto& enc : result.encodings)
    dim += static_cast<Eigen::Index>(enc.levels.size());

  Dataset& data = result.data;
  data.features = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(kept.size()), dim);
  data.response.resize(static_cast<Eigen::Index>(kept.size()));
  data.task = schema.response_kind;
  data.num_classes = static_cast<int>(result.response_levels.size());

  for (const std::size_t c : numeric_cols) data.feature_names.push_back(raw.header[c]);
  for (const auto& enc : result.encodings)
    for (const auto& level : enc.levels)
      data.feature_names.push_back(enc.column + "=" + level);

  for (std::size_t i = 0; i < kept.size(); ++i) {
    const auto& row = raw.rows[kept[i]];
    const std::size_t line = raw.line_numbers[kept[i]];
    Eigen::Index at = 0;
    for (const std::size_t c : numeric_cols)
      data.features(static_cast<Eigen::Index>(i), at++) =
          parse_double(row[c], path, line, raw.header[c]);
    for (std::size_t k = 0; k < categorical_cols.size(); ++k) {
      const int level = result.encodings[k].level_index(row[categorical_cols[k]]);
      data.features(static_cast<Eigen::Index>(i), at + level) = 1.0;
      at += static_cast<Eigen::Index>(result.encodings[k].levels.size());
    }
    if (schema.response_kind == Task::kClassification)
      data.response(static_cast<Eigen::Index>(i)) = label_ids.at(row[response_col]);
    else
      data.response(static_cast<Eigen::Index>(i)) =
          parse_double(row[response_col], path, line, schema.response);
  }
  data.validate();
  return result;
}

}  // namespace siglearn
