#include "skelbary/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace skelbary {

namespace {

using IntRow = std::vector<Integer>;

// Clears denominators row by row; row scaling preserves rank, row space
// and (for augmented systems) the solution set.
std::vector<IntRow> to_integer_rows(const Mat& m) {
  std::vector<IntRow> out;
  out.reserve(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (int j = 0; j < m.cols(); ++j)
      l = boost::multiprecision::lcm(l, denominator(m(i, j)));
    IntRow row(static_cast<std::size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j) {
      const Rational& q = m(i, j);
      row[static_cast<std::size_t>(j)] = numerator(q) * (l / denominator(q));
    }
    out.push_back(std::move(row));
  }
  return out;
}

// Fraction-free (Bareiss) elimination restricted to the first `pivot_cols`
// columns. Entries stay minors of the input, so the division is exact.
// Returns the pivot column list; the matrix is left in echelon form.
std::vector<int> bareiss_echelon(std::vector<IntRow>& m, int pivot_cols) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  Integer prev = 1;
  int r = 0;
  for (int c = 0; c < pivot_cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i) {
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(pr)]);
    const IntRow& prow = m[static_cast<std::size_t>(r)];
    for (int i = r + 1; i < rows; ++i) {
      IntRow& irow = m[static_cast<std::size_t>(i)];
      const Integer head = irow[static_cast<std::size_t>(c)];
      for (int j = c + 1; j < cols; ++j) {
        irow[static_cast<std::size_t>(j)] =
            (irow[static_cast<std::size_t>(j)] * prow[static_cast<std::size_t>(c)] -
             head * prow[static_cast<std::size_t>(j)]) /
            prev;
      }
      irow[static_cast<std::size_t>(c)] = 0;
    }
    prev = prow[static_cast<std::size_t>(c)];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void check_common_dim(const std::vector<Vec>& rows) {
  for (const auto& r : rows)
    if (r.dim() != rows.front().dim())
      throw std::invalid_argument("rows of mixed dimension");
}

}  // namespace

bool AffineSubspace::contains(const Vec& x) const {
  return coordinates_of(x).has_value();
}

std::optional<Vec> AffineSubspace::coordinates_of(const Vec& x) const {
  if (x.dim() != ambient_dim())
    throw std::invalid_argument("point dimension mismatch");
  // Columns are the basis directions.
  Mat cols(ambient_dim(), dim());
  for (int j = 0; j < dim(); ++j)
    for (int i = 0; i < ambient_dim(); ++i)
      cols(i, j) = basis[static_cast<std::size_t>(j)][i];
  auto sol = solve_linear(cols, x - base);
  if (!sol) return std::nullopt;
  return sol->particular;  // unique: basis columns are independent
}

Vec AffineSubspace::point_at(const Vec& t) const {
  if (t.dim() != dim())
    throw std::invalid_argument("coordinate dimension mismatch");
  Vec out = base;
  for (int j = 0; j < dim(); ++j)
    out = out + t[j] * basis[static_cast<std::size_t>(j)];
  return out;
}

int rank(const Mat& m) {
  auto rows = to_integer_rows(m);
  return static_cast<int>(bareiss_echelon(rows, m.cols()).size());
}

int rank(const std::vector<Vec>& rows) {
  if (rows.empty()) return 0;
  check_common_dim(rows);
  return rank(Mat::from_rows(rows));
}

AffineSubspace affine_hull(const std::vector<Vec>& points) {
  if (points.empty())
    throw std::invalid_argument("affine hull of an empty point set");
  check_common_dim(points);
  const Vec& base = points.front();
  std::vector<Vec> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i)
    diffs.push_back(points[i] - base);
  if (diffs.empty()) return AffineSubspace{base, {}};

  auto rows = to_integer_rows(Mat::from_rows(diffs));
  auto pivots = bareiss_echelon(rows, base.dim());
  std::vector<Vec> basis;
  basis.reserve(pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    std::vector<Rational> coords(rows[i].size());
    for (std::size_t j = 0; j < rows[i].size(); ++j) coords[j] = Rational(rows[i][j]);
    basis.emplace_back(std::move(coords));
  }
  return AffineSubspace{base, std::move(basis)};
}

std::optional<LinearSolution> solve_linear(const Mat& A, const Vec& b) {
  if (b.dim() != A.rows())
    throw std::invalid_argument("right-hand side dimension mismatch");
  const int n = A.cols();
  const int m = A.rows();

  // Augmented integer system, Bareiss forward pass on variable columns.
  Mat aug(m, n + 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = A(i, j);
    aug(i, n) = b[i];
  }
  auto rows = to_integer_rows(aug);
  auto pivots = bareiss_echelon(rows, n);
  const int r = static_cast<int>(pivots.size());

  for (int i = r; i < m; ++i)
    if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] != 0)
      return std::nullopt;  // 0 = nonzero row: inconsistent

  // Normalize the echelon rows to reduced form over the rationals.
  Mat rref(r, n + 1);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j <= n; ++j)
      rref(i, j) = Rational(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  for (int i = r - 1; i >= 0; --i) {
    const int pc = pivots[static_cast<std::size_t>(i)];
    const Rational piv = rref(i, pc);
    for (int j = pc; j <= n; ++j) rref(i, j) /= piv;
    for (int above = 0; above < i; ++above) {
      const Rational f = rref(above, pc);
      if (f == 0) continue;
      for (int j = pc; j <= n; ++j) rref(above, j) -= f * rref(i, j);
    }
  }

  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int pc : pivots) is_pivot[static_cast<std::size_t>(pc)] = true;

  std::vector<Rational> particular(static_cast<std::size_t>(n));
  for (int i = 0; i < r; ++i)
    particular[static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] = rref(i, n);

  std::vector<Vec> nullspace;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(f)] = 1;
    for (int i = 0; i < r; ++i)
      v[static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] = -rref(i, f);
    nullspace.emplace_back(std::move(v));
  }
  return LinearSolution{Vec(std::move(particular)), std::move(nullspace)};
}

}  // namespace skelbary
