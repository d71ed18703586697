#include "symrank/cli/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "symrank/error.hpp"

namespace symrank::cli {

namespace {

std::string trim(std::string s) {
  auto blank = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), blank));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), blank).base(), s.end());
  return s;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  return out;
}

}  // namespace

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

Roles parse_roles(const std::string& spec, const std::vector<std::string>& header) {
  std::string norm = spec;
  std::replace_if(norm.begin(), norm.end(), [](unsigned char c) { return std::isspace(c) != 0; }, ';');
  Roles roles;
  bool seen_x = false, seen_y = false;
  std::size_t next_free = 0;
  for (const auto& part : split(norm, ';')) {
    if (part.empty()) continue;
    const auto colon = part.find(':');
    if (colon == std::string::npos) throw InputError("role '" + part + "' is missing ':' (expected x:... or y:...)");
    const std::string role = trim(part.substr(0, colon));
    if (role != "x" && role != "y") throw InputError("unknown role '" + role + "' (expected x or y)");
    auto& target = role == "x" ? roles.x : roles.y;
    (role == "x" ? seen_x : seen_y) = true;
    const auto items = split(part.substr(colon + 1), ',');
    const bool is_count = items.size() == 1 && all_digits(items[0]) &&
                          std::find(header.begin(), header.end(), items[0]) == header.end();
    if (is_count) {
      const std::size_t count = std::stoul(items[0]);
      if (next_free + count > header.size())
        throw InputError("role " + role + " asks for " + items[0] + " columns but only " +
                         std::to_string(header.size() - next_free) + " remain");
      for (std::size_t k = 0; k < count; ++k) target.push_back(next_free++);
      continue;
    }
    for (const auto& item : items) {
      std::size_t col;
      if (item.size() > 1 && item[0] == '#' && all_digits(item.substr(1))) {
        col = std::stoul(item.substr(1));
        if (col < 1 || col > header.size()) throw InputError("column " + item + " is out of range");
        --col;
      } else {
        const auto it = std::find(header.begin(), header.end(), item);
        if (it == header.end()) throw InputError("missing column '" + item + "'");
        col = static_cast<std::size_t>(it - header.begin());
      }
      target.push_back(col);
      next_free = std::max(next_free, col + 1);
    }
  }
  if (!seen_x || !seen_y || roles.x.empty() || roles.y.empty())
    throw InputError("roles must declare at least one x column and one y column");
  std::set<std::size_t> used(roles.x.begin(), roles.x.end());
  for (auto c : roles.y)
    if (!used.insert(c).second) throw InputError("column '" + header[c] + "' is assigned twice");
  if (used.size() != roles.x.size() + roles.y.size()) throw InputError("a column is assigned twice");
  return roles;
}

IngestResult ingest_csv(std::istream& in, const std::string& roles_spec, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  auto next_record = [&] {
    while (std::getline(in, line)) {
      ++line_no;
      const std::string t = trim(line);
      if (!t.empty() && t[0] != '#') return true;
    }
    return false;
  };
  if (!next_record()) throw InputError(source + ": empty file");
  const std::vector<std::string> header = split_csv_line(line);
  const Roles roles = parse_roles(roles_spec, header);
  std::vector<std::size_t> cols(roles.x);
  cols.insert(cols.end(), roles.y.begin(), roles.y.end());

  std::vector<std::vector<double>> columns(cols.size());
  std::size_t row = 0;
  while (next_record()) {
    ++row;
    const auto cells = split_csv_line(line);
    for (std::size_t q = 0; q < cols.size(); ++q) {
      const std::string& name = header[cols[q]];
      const std::string where = source + ": row " + std::to_string(row) + " (line " + std::to_string(line_no) +
                                "), column '" + name + "'";
      if (cols[q] >= cells.size() || cells[cols[q]].empty() || cells[cols[q]] == "NA")
        throw InputError(where + ": missing value");
      const std::string& cell = cells[cols[q]];
      double v = 0;
      const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc() || end != cell.data() + cell.size() || !std::isfinite(v))
        throw InputError(where + ": not a finite number '" + cell + "'");
      columns[q].push_back(v);
    }
  }
  if (row == 0) throw InputError(source + ": no observations");

  IngestResult out;
  std::vector<std::vector<double>> xs(columns.begin(), columns.begin() + roles.x.size());
  std::vector<std::vector<double>> ys(columns.begin() + roles.x.size(), columns.end());
  out.data = Dataset::from_columns(xs, ys);
  for (auto c : roles.x) out.x_names.push_back(header[c]);
  for (auto c : roles.y) out.y_names.push_back(header[c]);
  return out;
}

IngestResult ingest_csv(const std::string& path, const std::string& roles) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return ingest_csv(in, roles, path);
}

}  // namespace symrank::cli
