#pragma once

#include <istream>
#include <string>
#include <vector>

#include "symrank/core/dataset.hpp"

namespace symrank::cli {

// Role spec "x:a,b;y:c" (';' or whitespace between roles). Items are header names,
// or 1-based column numbers prefixed with '#'. A role given as a bare count N
// that names no column takes the next N columns from the left.
struct Roles {
  std::vector<std::size_t> x, y;  // 0-based column indices
};

Roles parse_roles(const std::string& spec, const std::vector<std::string>& header);

struct IngestResult {
  Dataset data;
  std::vector<std::string> x_names, y_names;
};

// Lines starting with '#' are comments. Header row required; cells of role columns must be finite numbers.
IngestResult ingest_csv(std::istream& in, const std::string& roles, const std::string& source = "input");
IngestResult ingest_csv(const std::string& path, const std::string& roles);

// Splits one CSV record; double quotes may wrap fields and "" escapes a quote.
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace symrank::cli
