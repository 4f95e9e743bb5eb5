#ifndef SKELBARY_VEC_HPP
#define SKELBARY_VEC_HPP

#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "skelbary/rational.hpp"

namespace skelbary {

/// Rational point/direction. Immutable after construction so it can be
/// shared freely across worker threads.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Vec(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Vec zero(int dim) {
    return Vec(std::vector<Rational>(static_cast<std::size_t>(dim)));
  }

  int dim() const { return static_cast<int>(coords_.size()); }
  const Rational& operator[](int i) const {
    return coords_[static_cast<std::size_t>(i)];
  }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  friend bool operator==(const Vec& a, const Vec& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

  /// Lexicographic; used for canonical orderings.
  friend bool operator<(const Vec& a, const Vec& b) {
    return a.coords_ < b.coords_;
  }

  friend Vec operator+(const Vec& a, const Vec& b) {
    check_dims(a, b);
    std::vector<Rational> out(a.coords_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coords_[i];
    return Vec(std::move(out));
  }
  friend Vec operator-(const Vec& a, const Vec& b) {
    check_dims(a, b);
    std::vector<Rational> out(a.coords_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.coords_[i];
    return Vec(std::move(out));
  }
  friend Vec operator*(const Rational& s, const Vec& v) {
    std::vector<Rational> out(v.coords_);
    for (auto& c : out) c *= s;
    return Vec(std::move(out));
  }
  friend Vec operator-(const Vec& v) { return Rational(-1) * v; }

  friend Rational dot(const Vec& a, const Vec& b) {
    check_dims(a, b);
    Rational acc = 0;
    for (std::size_t i = 0; i < a.coords_.size(); ++i)
      acc += a.coords_[i] * b.coords_[i];
    return acc;
  }

  Rational squared_norm() const { return dot(*this, *this); }

 private:
  static void check_dims(const Vec& a, const Vec& b) {
    if (a.dim() != b.dim())
      throw std::invalid_argument("vector dimension mismatch");
  }

  std::vector<Rational> coords_;
};

/// Dense rational matrix; mutable workhorse for elimination and tableaus.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols)
      : rows_(rows),
        cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  }
  explicit Mat(std::vector<std::vector<Rational>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ > 0 ? static_cast<int>(rows[0].size()) : 0;
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_)
        throw std::invalid_argument("ragged matrix rows");
      for (auto& x : r) data_.push_back(std::move(x));
    }
  }

  static Mat from_rows(const std::vector<Vec>& rows) {
    std::vector<std::vector<Rational>> raw;
    raw.reserve(rows.size());
    for (const auto& r : rows) raw.push_back(r.coords());
    return Mat(std::move(raw));
  }
  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const Rational& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Vec row(int i) const {
    std::vector<Rational> out(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(j)] = (*this)(i, j);
    return Vec(std::move(out));
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

  /// A * x with x read as a column.
  Vec apply(const Vec& x) const {
    if (x.dim() != cols_)
      throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<Rational> out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
      Rational acc = 0;
      for (int j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
      out[static_cast<std::size_t>(i)] = acc;
    }
    return Vec(std::move(out));
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace skelbary

#endif
