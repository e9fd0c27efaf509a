#include "nbf/contingency.hpp"

#include <cstdlib>
#include <string>

namespace nbf {

namespace {

// Grand totals above this would let n^2/4 leave the range where the
// double-precision nb keeps full integer resolution in 128-bit terms.
constexpr std::int64_t kMaxGrandTotal = std::int64_t(1) << 32;

void require_2x2(const ContingencyTable& table) {
  if (!table.is_2x2())
    throw DimensionError("operation requires a 2x2 table, got " +
                         std::to_string(table.rows()) + "x" +
                         std::to_string(table.cols()));
}

}  // namespace

ContingencyTable::ContingencyTable(CountMatrix cells)
    : cells_(std::move(cells)) {
  if (rows() < 2 || cols() < 2)
    throw DimensionError("table must have at least 2 rows and 2 columns");
  detail::int128 total = 0;
  for (Eigen::Index i = 0; i < rows(); ++i)
    for (Eigen::Index j = 0; j < cols(); ++j) {
      if (cells_(i, j) < 0)
        throw ValidationError("cells", "cell (" + std::to_string(i) + "," +
                                           std::to_string(j) +
                                           ") is negative");
      total += cells_(i, j);
    }
  if (total == 0)
    throw DegenerateTableError("table has grand total 0");
  if (total > kMaxGrandTotal)
    throw ValidationError("cells",
                          "grand total exceeds 2^32; exact lattice "
                          "arithmetic would overflow");
  grand_total_ = static_cast<std::int64_t>(total);
  row_totals_ = cells_.rowwise().sum();
  col_totals_ = cells_.colwise().sum().transpose();
}

ContingencyTable ContingencyTable::fourfold(std::int64_t a, std::int64_t b,
                                            std::int64_t c, std::int64_t d) {
  CountMatrix m(2, 2);
  m << a, b, c, d;
  return ContingencyTable(std::move(m));
}

bool ContingencyTable::has_zero_margin() const noexcept {
  return (row_totals_.array() == 0).any() || (col_totals_.array() == 0).any();
}

ContingencyTable ContingencyTable::scaled(std::int64_t k) const {
  if (k < 1) throw ValidationError("k", "scaling factor must be >= 1");
  if (k > kMaxGrandTotal / grand_total_)
    throw ValidationError("k", "scaled grand total would exceed 2^32");
  return ContingencyTable(cells_ * k);
}

std::int64_t cross_product_diff(const ContingencyTable& table) {
  require_2x2(table);
  const detail::int128 ad =
      detail::int128(table.cell(0, 0)) * table.cell(1, 1);
  const detail::int128 bc =
      detail::int128(table.cell(0, 1)) * table.cell(1, 0);
  // |ad - bc| <= n^2/4 <= 2^62 under the grand-total cap, so the result
  // always fits a 64-bit integer.
  return static_cast<std::int64_t>(ad - bc);
}

double rq_2x2(const ContingencyTable& table) {
  require_2x2(table);
  const detail::int128 n = table.grand_total();
  detail::int128 x = cross_product_diff(table);
  if (x < 0) x = -x;
  return static_cast<double>(4 * x) / static_cast<double>(n * n);
}

NbValue nb_2x2(const ContingencyTable& table) {
  return NbValue(detail::canonical01(rq_2x2(table)), Domain::binary_2x2,
                 "nb_2x2");
}

ExpectedCounts expected_counts(const ContingencyTable& table) {
  const Eigen::VectorXd rows = table.row_totals().cast<double>();
  const Eigen::VectorXd cols = table.col_totals().cast<double>();
  return rows * cols.transpose() / static_cast<double>(table.grand_total());
}

namespace detail {

int128 gcd128(int128 a, int128 b) noexcept {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// sum_ij |n*O_ij - row_i*col_j|, the exact numerator of rq_rxc over n^2.
int128 rxc_deviation_sum(const ContingencyTable& table) {
  const int128 n = table.grand_total();
  int128 sum = 0;
  for (Eigen::Index i = 0; i < table.rows(); ++i) {
    const int128 ri = table.row_totals()(i);
    for (Eigen::Index j = 0; j < table.cols(); ++j) {
      int128 dev = n * table.cell(i, j) - ri * table.col_totals()(j);
      if (dev < 0) dev = -dev;
      sum += dev;
    }
  }
  return sum;
}

std::pair<int128, int128> rq_rxc_exact(const ContingencyTable& table) {
  const int128 n = table.grand_total();
  const int128 num = rxc_deviation_sum(table);
  const int128 den = n * n;
  const int128 g = gcd128(num, den);  // den >= 1, so g >= 1
  return {num / g, den / g};
}

}  // namespace detail

double rq_rxc(const ContingencyTable& table) {
  const detail::int128 n = table.grand_total();
  const detail::int128 num = detail::rxc_deviation_sum(table);
  return static_cast<double>(num) / static_cast<double>(n * n);
}

NbValue nb_rxc(const ContingencyTable& table) {
  return NbValue(detail::canonical01(rq_rxc(table)), Domain::contingency_rxc,
                 "nb_rxc");
}

ContingencyTable unit_exchange(const ContingencyTable& table,
                               ExchangeDirection direction) {
  require_2x2(table);
  CountMatrix m = table.cells();
  const std::int64_t step =
      direction == ExchangeDirection::toward_diagonal ? 1 : -1;
  m(0, 0) += step;
  m(0, 1) -= step;
  m(1, 0) -= step;
  m(1, 1) += step;
  if (m.minCoeff() < 0)
    throw InfeasibleExchangeError(
        "unit exchange would drive a cell count below zero");
  return ContingencyTable(std::move(m));
}

double lattice_step(const ContingencyTable& table) {
  require_2x2(table);
  return 4.0 / static_cast<double>(table.grand_total());
}

}  // namespace nbf
