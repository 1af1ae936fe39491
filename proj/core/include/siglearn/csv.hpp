#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "siglearn/dataset.hpp"

namespace siglearn {

/// Column roles for CSV ingestion. Loaded from a JSON file (see
/// load_csv_schema) or assembled from CLI flags.
struct CsvSchema {
  std::string response;                    // response column name (required)
  Task response_kind = Task::kRegression;  // "real" or "label"
  std::vector<std::string> categorical;    // feature columns to one-hot encode
  std::vector<std::string> drop;           // columns excluded entirely
  std::vector<std::string> missing_tokens = {"", "?", "NA"};
};

/// Level list of one one-hot encoded column; level order is first appearance
/// in the file, so encoding is deterministic and decode(encode(x)) == x.
struct OneHotEncoding {
  std::string column;
  std::vector<std::string> levels;

  /// Index of a level, or -1 if unseen.
  int level_index(const std::string& value) const;
};

struct CsvLoadResult {
  Dataset data;
  std::int64_t dropped_rows = 0;           // rows removed for missing values
  std::vector<std::string> response_levels;  // classification label names
  std::vector<OneHotEncoding> encodings;     // one per categorical column
};

/// Parses a JSON schema file with keys: "response" (string, required),
/// "response_kind" ("real" | "label", default "real"), "categorical"
/// (array of strings), "drop" (array of strings), "missing_tokens"
/// (array of strings, default ["", "?", "NA"]).
CsvSchema load_csv_schema(const std::string& path);

/// Loads an RFC-4180-subset CSV (UTF-8, header row required, quoted fields
/// with "" escapes). Categorical features are one-hot encoded in
/// first-appearance order; rows containing a missing token are dropped and
/// counted. Malformed rows, non-finite numerics, and unknown schema columns
/// raise std::runtime_error naming the offending line or column.
CsvLoadResult load_csv(const std::string& path, const CsvSchema& schema);

}  // namespace siglearn
