#include "nbf/csv.hpp"

#include <charconv>
#include <cmath>
#include <map>

namespace nbf {

namespace detail {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    s.remove_prefix(1);
    s.remove_suffix(1);
  }
  return s;
}

std::string slurp(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

}  // namespace

std::vector<std::string_view> split_lines(std::string_view text) {
  // Strip a UTF-8 byte-order mark.
  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF")
    text.remove_prefix(3);
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t end = line.find(',', start);
    if (end == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, end - start)));
    start = end + 1;
  }
  return fields;
}

std::int64_t parse_count(std::string_view field, std::size_t row,
                         std::size_t col) {
  if (field.empty()) throw ParseError("empty cell", row, col);
  if (field.front() == '-')
    throw ParseError("negative count '" + std::string(field) + "'", row, col);
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw ParseError("'" + std::string(field) + "' is not a nonnegative integer",
                     row, col);
  return value;
}

double parse_real(std::string_view field, std::size_t row, std::size_t col) {
  if (field.empty()) throw ParseError("empty cell", row, col);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw ParseError("'" + std::string(field) + "' is not a number", row, col);
  if (!std::isfinite(value))
    throw ParseError("'" + std::string(field) + "' is not finite", row, col);
  return value;
}

}  // namespace detail

ContingencyTable parse_table_csv(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.size() < 2)
    throw ParseError("table needs at least 2 rows, got " +
                     std::to_string(lines.size()));

  std::vector<std::vector<std::int64_t>> rows;
  std::size_t width = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto fields = detail::split_fields(lines[i]);
    if (i == 0) {
      width = fields.size();
      if (width < 2) throw ParseError("table needs at least 2 columns", 1);
    } else if (fields.size() != width) {
      throw ParseError("ragged row: expected " + std::to_string(width) +
                           " cells, got " + std::to_string(fields.size()),
                       i + 1);
    }
    std::vector<std::int64_t> row;
    row.reserve(width);
    for (std::size_t j = 0; j < fields.size(); ++j)
      row.push_back(detail::parse_count(fields[j], i + 1, j + 1));
    rows.push_back(std::move(row));
  }

  CountMatrix cells(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < width; ++j)
      cells(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          rows[i][j];
  return ContingencyTable(std::move(cells));
}

LabeledGroups parse_groups_csv(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty()) throw ParseError("empty input; expected header group,value");
  {
    const auto header = detail::split_fields(lines[0]);
    if (header.size() != 2 || header[0] != "group" || header[1] != "value")
      throw ParseError("missing header 'group,value'");
  }

  std::vector<std::string> labels;
  std::vector<std::vector<double>> buckets;
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = detail::split_fields(lines[i]);
    if (fields.size() != 2)
      throw ParseError("expected 2 fields, got " +
                           std::to_string(fields.size()),
                       i);
    if (fields[0].empty()) throw ParseError("empty group label", i, 1);
    const double value = detail::parse_real(fields[1], i, 2);
    const auto [it, inserted] =
        index.try_emplace(std::string(fields[0]), buckets.size());
    if (inserted) {
      labels.emplace_back(fields[0]);
      buckets.emplace_back();
    }
    buckets[it->second].push_back(value);
  }

  if (buckets.size() < 2)
    throw ParseError("need at least two groups, got " +
                     std::to_string(buckets.size()));
  LabeledGroups out;
  out.labels = std::move(labels);
  for (std::size_t g = 0; g < buckets.size(); ++g) {
    if (buckets[g].size() < 2)
      throw ParseError("group '" + out.labels[g] +
                       "' has fewer than 2 observations");
    out.groups.emplace_back(
        Eigen::Map<const Eigen::VectorXd>(buckets[g].data(),
                                          static_cast<Eigen::Index>(
                                              buckets[g].size())));
  }
  return out;
}

PairedSample parse_pairs_csv(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty()) throw ParseError("empty input; expected header x,y");
  {
    const auto header = detail::split_fields(lines[0]);
    if (header.size() != 2 || header[0] != "x" || header[1] != "y")
      throw ParseError("missing header 'x,y'");
  }

  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = detail::split_fields(lines[i]);
    if (fields.size() != 2)
      throw ParseError("expected 2 fields, got " +
                           std::to_string(fields.size()),
                       i);
    xs.push_back(detail::parse_real(fields[0], i, 1));
    ys.push_back(detail::parse_real(fields[1], i, 2));
  }
  if (xs.size() < 3)
    throw ParseError("need at least 3 pairs, got " + std::to_string(xs.size()));

  const auto n = static_cast<Eigen::Index>(xs.size());
  return PairedSample(Eigen::Map<const Eigen::VectorXd>(xs.data(), n),
                      Eigen::Map<const Eigen::VectorXd>(ys.data(), n));
}

ContingencyTable parse_table_csv(std::istream& in) {
  return parse_table_csv(std::string_view(detail::slurp(in)));
}

LabeledGroups parse_groups_csv(std::istream& in) {
  return parse_groups_csv(std::string_view(detail::slurp(in)));
}

PairedSample parse_pairs_csv(std::istream& in) {
  return parse_pairs_csv(std::string_view(detail::slurp(in)));
}

}  // namespace nbf
