#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace adorn {

/// Arbitrary-precision integer. Relation matrices produced by subgroup
/// rewriting blow up intermediate entries, so fixed-width integers are
/// not an option anywhere in the linear algebra.
using Int = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix. Zero-row and zero-column shapes are
/// legal (a free group has a 0 x n relation matrix).
class IntMatrix {
public:
  IntMatrix() = default;

  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw std::invalid_argument("IntMatrix: entry count does not match shape");
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<Int>& entries() const { return entries_; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  IntMatrix operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_)
      throw std::invalid_argument("IntMatrix: shape mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& a = at(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j)
          out.at(i, j) += a * rhs.at(k, j);
      }
    return out;
  }

  IntMatrix transposed() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ",";
        s += at(i, j).str();
      }
      s += "]";
    }
    s += "]";
    return s;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Used to certify that transformation matrices are unimodular.
inline Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

}  // namespace adorn
