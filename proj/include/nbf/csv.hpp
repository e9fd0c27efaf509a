#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "nbf/anova.hpp"
#include "nbf/contingency.hpp"
#include "nbf/correlation.hpp"

namespace nbf {

// Group observations together with their labels in first-appearance order.
struct LabeledGroups {
  std::vector<std::string> labels;
  GroupData groups;
};

// Headerless CSV of nonnegative integer counts, at least 2x2. Whitespace
// around cells is tolerated; ragged rows and non-integer cells are parse
// errors carrying the 1-based row/column location.
ContingencyTable parse_table_csv(std::string_view text);
ContingencyTable parse_table_csv(std::istream& in);

// Long-format CSV with header "group,value". Values are bucketed by label
// in first-appearance order; every group needs at least two observations.
// Error locations in headered formats count data rows, not physical lines.
LabeledGroups parse_groups_csv(std::string_view text);
LabeledGroups parse_groups_csv(std::istream& in);

// Two-column CSV with header "x,y" and at least three data rows.
PairedSample parse_pairs_csv(std::string_view text);
PairedSample parse_pairs_csv(std::istream& in);

namespace detail {

// Lines split on '\n' with trailing '\r' removed; one final empty line
// (trailing newline) is dropped.
std::vector<std::string_view> split_lines(std::string_view text);

// Fields split on ',', trimmed of surrounding blanks and an optional pair
// of double quotes.
std::vector<std::string_view> split_fields(std::string_view line);

std::int64_t parse_count(std::string_view field, std::size_t row,
                         std::size_t col);
double parse_real(std::string_view field, std::size_t row, std::size_t col);

}  // namespace detail

}  // namespace nbf
