#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>

#include "nbf/core.hpp"
#include "nbf/errors.hpp"

namespace nbf {

using CountMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using CountVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

// Expected cell counts under independence, E_ij = row_i * col_j / n.
using ExpectedCounts = Eigen::MatrixXd;

// An r x c grid of nonnegative integer counts (r, c >= 2) with cached
// margins and grand total. The grand total is capped at 2^32 so that every
// cross product and deviation sum stays exact in 128-bit intermediates;
// larger tables are a hard error rather than silent overflow.
class ContingencyTable {
 public:
  explicit ContingencyTable(CountMatrix cells);

  // Convenience constructor for the 2x2 table (a, b; c, d).
  static ContingencyTable fourfold(std::int64_t a, std::int64_t b,
                                   std::int64_t c, std::int64_t d);

  Eigen::Index rows() const noexcept { return cells_.rows(); }
  Eigen::Index cols() const noexcept { return cells_.cols(); }
  bool is_2x2() const noexcept { return rows() == 2 && cols() == 2; }

  const CountMatrix& cells() const noexcept { return cells_; }
  std::int64_t cell(Eigen::Index i, Eigen::Index j) const {
    return cells_(i, j);
  }

  const CountVector& row_totals() const noexcept { return row_totals_; }
  const CountVector& col_totals() const noexcept { return col_totals_; }
  std::int64_t grand_total() const noexcept { return grand_total_; }

  // True when some row or column is entirely zero; expected counts then
  // contain zeros and reports carry a warning.
  bool has_zero_margin() const noexcept;

  // Multiplies every cell by k (k >= 1).
  ContingencyTable scaled(std::int64_t k) const;

 private:
  CountMatrix cells_;
  CountVector row_totals_;
  CountVector col_totals_;
  std::int64_t grand_total_ = 0;
};

// Signed cross product ad - bc of a 2x2 table, exact integer arithmetic.
std::int64_t cross_product_diff(const ContingencyTable& table);

// Risk quotient 4|ad - bc| / n^2 of a 2x2 table, in [0, 1].
double rq_2x2(const ContingencyTable& table);

// nb = RQ / (1 + RQ) = |ad - bc| / (|ad - bc| + n^2/4) for a 2x2 table.
NbValue nb_2x2(const ContingencyTable& table);

// Expected counts under independence; row and column sums reproduce the
// observed margins.
ExpectedCounts expected_counts(const ContingencyTable& table);

// Generalized risk quotient (1/n) * sum_ij |O_ij - E_ij|. Zero exactly on
// the independence manifold. For a 2x2 table this equals rq_2x2 exactly.
//
// The value is NOT clamped to [0, 1]: tables with three or more categories
// can exceed 1 (the 3x3 diagonal table with 3 in each diagonal cell gives
// exactly 4/3). The bounded metric is nb_rxc.
double rq_rxc(const ContingencyTable& table);

// nb = RQ / (1 + RQ) on the generalized risk quotient; in [0, 1) even
// where rq_rxc exceeds 1.
NbValue nb_rxc(const ContingencyTable& table);

enum class ExchangeDirection {
  toward_diagonal,      // (a, b; c, d) -> (a+1, b-1; c-1, d+1)
  toward_antidiagonal,  // (a, b; c, d) -> (a-1, b+1; c+1, d-1)
};

// One-unit outcome exchange on a 2x2 table. Preserves all row and column
// margins and shifts ad - bc by exactly +n (toward_diagonal) or -n
// (toward_antidiagonal). Throws InfeasibleExchangeError when a cell would
// go negative.
ContingencyTable unit_exchange(const ContingencyTable& table,
                               ExchangeDirection direction);

// Spacing 4/n between adjacent attainable RQ values of a 2x2 table under
// fixed margins. The |ad - bc| shift of a unit exchange is exactly n; the
// RQ spacing statement holds on exchanges that do not cross ad - bc = 0
// (crossing folds the absolute value, so the |RQ| step is smaller).
double lattice_step(const ContingencyTable& table);

namespace detail {

using int128 = __int128;

// Generalized risk quotient as an exact reduced integer ratio
// sum_ij |n*O_ij - row_i*col_j| / n^2. Denominator is positive.
std::pair<int128, int128> rq_rxc_exact(const ContingencyTable& table);

int128 gcd128(int128 a, int128 b) noexcept;

}  // namespace detail

}  // namespace nbf
