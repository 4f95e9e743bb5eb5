#include "skelbary/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace skelbary {

namespace {

constexpr long kPivotHardCap = 100000000;  // defect detector, never legitimate

// Ceiling proportional to the number of bases C(cols, rows), saturated.
long pivot_ceiling(int cols, int rows) {
  long bound = 1;
  for (int i = 1; i <= rows; ++i) {
    bound = bound * (cols - rows + i) / i;
    if (bound > kPivotHardCap / (cols + 1)) return kPivotHardCap;
  }
  return std::min(kPivotHardCap, bound * (cols + 1));
}

// Dense rational simplex tableau. Structural columns first, one artificial
// per row, rhs last. Bland's rule on both the entering and leaving choice.
class SimplexTableau {
 public:
  SimplexTableau(const Mat& A, const Vec& b) {
    m_ = A.rows();
    structural_ = A.cols();
    width_ = structural_ + m_ + 1;
    flip_.assign(static_cast<std::size_t>(m_), 1);
    rows_.reserve(static_cast<std::size_t>(m_));
    basis_.reserve(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) {
      std::vector<Rational> row(static_cast<std::size_t>(width_));
      const bool neg = b[i] < 0;
      if (neg) flip_[static_cast<std::size_t>(i)] = -1;
      for (int j = 0; j < structural_; ++j)
        row[static_cast<std::size_t>(j)] = neg ? -A(i, j) : A(i, j);
      row[static_cast<std::size_t>(structural_ + i)] = 1;
      row[static_cast<std::size_t>(width_ - 1)] = neg ? -b[i] : b[i];
      rows_.push_back(std::move(row));
      basis_.push_back(structural_ + i);
    }
    ceiling_ = pivot_ceiling(structural_ + m_, m_);
  }

  // Minimizes the sum of artificials. Returns the optimal value.
  Rational run_phase_one() {
    reduced_.assign(static_cast<std::size_t>(structural_ + m_), Rational(0));
    objective_ = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (int j = 0; j < structural_ + m_; ++j)
        reduced_[static_cast<std::size_t>(j)] -= rows_[i][static_cast<std::size_t>(j)];
      objective_ += rhs(static_cast<int>(i));
    }
    for (int j = structural_; j < structural_ + m_; ++j)
      reduced_[static_cast<std::size_t>(j)] += 1;  // artificial cost 1
    iterate(structural_ + m_);
    return objective_;
  }

  // Minimizes the given structural costs; artificials are barred from
  // entering. Call only after a successful phase one. Returns false when
  // the objective is unbounded below.
  bool run_phase_two(const std::vector<Rational>& costs) {
    drive_out_artificials();
    reduced_.assign(static_cast<std::size_t>(structural_ + m_), Rational(0));
    objective_ = 0;
    for (int j = 0; j < structural_; ++j) reduced_[static_cast<std::size_t>(j)] = costs[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const int bj = basis_[i];
      if (bj >= structural_) continue;  // artificial cost 0 in phase two
      const Rational cb = costs[static_cast<std::size_t>(bj)];
      if (cb == 0) continue;
      for (int j = 0; j < structural_ + m_; ++j)
        reduced_[static_cast<std::size_t>(j)] -= cb * rows_[i][static_cast<std::size_t>(j)];
      objective_ += cb * rhs(static_cast<int>(i));
    }
    return iterate(structural_);
  }

  Rational objective() const { return objective_; }

  Vec structural_solution() const {
    std::vector<Rational> x(static_cast<std::size_t>(structural_));
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < structural_)
        x[static_cast<std::size_t>(basis_[i])] = rhs(static_cast<int>(i));
    return Vec(std::move(x));
  }

  // Simplex multipliers of the phase-one optimum, mapped back through the
  // row sign normalization. Infeasibility certificate.
  Vec phase_one_multipliers() const {
    std::vector<Rational> y(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i)
      y[static_cast<std::size_t>(i)] =
          flip_[static_cast<std::size_t>(i)] *
          (Rational(1) - reduced_[static_cast<std::size_t>(structural_ + i)]);
    return Vec(std::move(y));
  }

 private:
  Rational rhs(int i) const {
    return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(width_ - 1)];
  }

  // Bland: entering = lowest eligible index; leaving = lowest basis index
  // among minimal ratios. Returns false on an unbounded objective.
  bool iterate(int enter_limit) {
    long pivots = 0;
    for (;;) {
      int pc = -1;
      for (int j = 0; j < enter_limit; ++j) {
        if (reduced_[static_cast<std::size_t>(j)] < 0) {
          pc = j;
          break;
        }
      }
      if (pc < 0) return true;  // optimal

      int pr = -1;
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][static_cast<std::size_t>(pc)];
        if (a <= 0) continue;
        Rational ratio = rhs(static_cast<int>(i)) / a;
        if (pr < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[static_cast<std::size_t>(pr)])) {
          pr = static_cast<int>(i);
          best = ratio;
        }
      }
      if (pr < 0) return false;  // unbounded

      pivot(pr, pc);
      if (++pivots > ceiling_)
        throw std::logic_error("simplex exceeded its pivot ceiling");
    }
  }

  void pivot(int pr, int pc) {
    auto& prow = rows_[static_cast<std::size_t>(pr)];
    const Rational piv = prow[static_cast<std::size_t>(pc)];
    for (auto& v : prow) v /= piv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (static_cast<int>(i) == pr) continue;
      auto& irow = rows_[i];
      const Rational f = irow[static_cast<std::size_t>(pc)];
      if (f == 0) continue;
      for (int j = 0; j < width_; ++j)
        irow[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
    }
    const Rational rf = reduced_[static_cast<std::size_t>(pc)];
    if (rf != 0) {
      for (int j = 0; j < structural_ + m_; ++j)
        reduced_[static_cast<std::size_t>(j)] -= rf * prow[static_cast<std::size_t>(j)];
      objective_ += rf * prow[static_cast<std::size_t>(width_ - 1)];
    }
    basis_[static_cast<std::size_t>(pr)] = pc;
  }

  // Degenerate pivots move basic zero-level artificials out; rows with no
  // structural support are redundant and dropped.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < structural_) {
        ++i;
        continue;
      }
      int pc = -1;
      for (int j = 0; j < structural_; ++j) {
        if (rows_[i][static_cast<std::size_t>(j)] != 0) {
          pc = j;
          break;
        }
      }
      if (pc >= 0) {
        pivot(static_cast<int>(i), pc);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  int m_ = 0;
  int structural_ = 0;
  int width_ = 0;
  long ceiling_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> basis_;
  std::vector<Rational> reduced_;
  std::vector<int> flip_;
  Rational objective_;
};

void check_shapes(const StandardLP& lp) {
  if (lp.b.dim() != lp.A.rows())
    throw std::invalid_argument("LP right-hand side dimension mismatch");
}

}  // namespace

bool verify_feasible_point(const StandardLP& lp, const Vec& x) {
  if (x.dim() != lp.A.cols()) return false;
  for (int j = 0; j < x.dim(); ++j)
    if (x[j] < 0) return false;
  return lp.A.apply(x) == lp.b;
}

bool verify_farkas(const StandardLP& lp, const Vec& y) {
  if (y.dim() != lp.A.rows()) return false;
  for (int j = 0; j < lp.A.cols(); ++j) {
    Rational col = 0;
    for (int i = 0; i < lp.A.rows(); ++i) col += y[i] * lp.A(i, j);
    if (col > 0) return false;
  }
  Rational yb = 0;
  for (int i = 0; i < lp.A.rows(); ++i) yb += y[i] * lp.b[i];
  return yb > 0;
}

LPResult feasible(const StandardLP& lp) {
  check_shapes(lp);
  SimplexTableau tab(lp.A, lp.b);
  if (tab.run_phase_one() == 0) {
    Vec x = tab.structural_solution();
    if (!verify_feasible_point(lp, x))
      throw std::logic_error("simplex produced an invalid feasible point");
    return LPResult{LPStatus::Feasible, std::move(x), std::nullopt};
  }
  Vec y = tab.phase_one_multipliers();
  if (!verify_farkas(lp, y))
    throw std::logic_error("simplex produced an invalid Farkas certificate");
  return LPResult{LPStatus::Infeasible, std::nullopt, std::move(y)};
}

MaxSlackResult max_slack(const StandardLP& lp,
                         const std::vector<int>& slack_columns) {
  check_shapes(lp);
  for (int j : slack_columns)
    if (j < 0 || j >= lp.A.cols())
      throw std::invalid_argument("slack column index out of range");
  if (slack_columns.empty()) return MaxSlackResult{feasible(lp), Rational(0)};

  // Substitute x_j = s_j + t for designated j; the extra column for t is
  // the sum of the designated columns. Maximizing t maximizes the minimum
  // designated coordinate.
  const int n = lp.A.cols();
  Mat ext(lp.A.rows(), n + 1);
  for (int i = 0; i < lp.A.rows(); ++i) {
    Rational tsum = 0;
    for (int j = 0; j < n; ++j) ext(i, j) = lp.A(i, j);
    for (int j : slack_columns) tsum += lp.A(i, j);
    ext(i, n) = tsum;
  }

  SimplexTableau tab(ext, lp.b);
  if (tab.run_phase_one() != 0) {
    Vec y = tab.phase_one_multipliers();
    if (!verify_farkas(lp, y))
      throw std::logic_error("simplex produced an invalid Farkas certificate");
    return MaxSlackResult{
        LPResult{LPStatus::Infeasible, std::nullopt, std::move(y)}, Rational(0)};
  }

  std::vector<Rational> costs(static_cast<std::size_t>(n + 1));
  costs[static_cast<std::size_t>(n)] = -1;  // minimize -t
  const bool bounded = tab.run_phase_two(costs);

  Vec ext_point = tab.structural_solution();
  const Rational t = ext_point[n];
  std::vector<Rational> x(ext_point.coords().begin(),
                          ext_point.coords().begin() + n);
  std::vector<bool> designated(static_cast<std::size_t>(n), false);
  for (int j : slack_columns) designated[static_cast<std::size_t>(j)] = true;
  for (int j = 0; j < n; ++j)
    if (designated[static_cast<std::size_t>(j)]) x[static_cast<std::size_t>(j)] += t;

  Vec point(std::move(x));
  if (!verify_feasible_point(lp, point))
    throw std::logic_error("max_slack produced an invalid point");

  MaxSlackResult out{LPResult{LPStatus::Feasible, std::move(point), std::nullopt},
                     t, !bounded};
  return out;
}

}  // namespace skelbary
