#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace adorn {

/// Square matrix over Z/m with unit determinant, i.e. an element of
/// GL_n(Z/m). Entries are reduced representatives in [0, m).
class ModMatrix {
public:
  ModMatrix() = default;

  ModMatrix(std::size_t n, std::uint32_t modulus, std::vector<long long> entries)
      : n_(n), m_(modulus) {
    if (modulus < 2) throw std::invalid_argument("ModMatrix: modulus must be >= 2");
    if (entries.size() != n * n)
      throw std::invalid_argument("ModMatrix: entry count does not match dimension");
    e_.resize(n * n);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      long long r = entries[i] % static_cast<long long>(m_);
      if (r < 0) r += m_;
      e_[i] = static_cast<std::uint32_t>(r);
    }
    if (std::gcd(static_cast<long long>(det()), static_cast<long long>(m_)) != 1)
      throw std::invalid_argument("ModMatrix: determinant is not a unit mod m");
  }

  static ModMatrix identity(std::size_t n, std::uint32_t modulus) {
    std::vector<long long> e(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
    return ModMatrix(n, modulus, std::move(e));
  }

  std::size_t dimension() const { return n_; }
  std::uint32_t modulus() const { return m_; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return e_[r * n_ + c]; }

  ModMatrix operator*(const ModMatrix& rhs) const {
    ModMatrix out;
    out.n_ = n_;
    out.m_ = m_;
    out.e_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < n_; ++k)
          s += static_cast<std::uint64_t>(e_[i * n_ + k]) * rhs.e_[k * n_ + j];
        out.e_[i * n_ + j] = static_cast<std::uint32_t>(s % m_);
      }
    return out;
  }

  /// Inverse via the adjugate: inv = det^-1 * adj, valid over Z/m exactly
  /// when det is a unit (guaranteed by construction).
  ModMatrix inverse() const {
    long long d = det();
    long long dinv = unit_inverse(d);
    ModMatrix out;
    out.n_ = n_;
    out.m_ = m_;
    out.e_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        long long c = cofactor(j, i);  // adjugate transposes
        long long v = (c % m_) * dinv % m_;
        if (v < 0) v += m_;
        out.e_[i * n_ + j] = static_cast<std::uint32_t>(v);
      }
    return out;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
  }

  std::string key() const {
    std::string s(reinterpret_cast<const char*>(e_.data()), e_.size() * sizeof(std::uint32_t));
    s += static_cast<char>(m_);
    return s;
  }

  /// Parses the "mod m: [[a,b],[c,d]]" literal format.
  static ModMatrix from_string(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c) {
      skip_ws();
      if (pos >= text.size() || text[pos] != c)
        throw std::invalid_argument("ModMatrix: expected '" + std::string(1, c) +
                                    "' in matrix literal");
      ++pos;
    };
    auto number = [&]() -> long long {
      skip_ws();
      std::size_t start = pos;
      if (pos < text.size() && text[pos] == '-') ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw std::invalid_argument("ModMatrix: expected integer");
      return std::stoll(text.substr(start, pos - start));
    };

    skip_ws();
    if (text.compare(pos, 3, "mod") != 0)
      throw std::invalid_argument("ModMatrix: literal must start with 'mod'");
    pos += 3;
    long long modulus = number();
    expect(':');
    expect('[');
    std::vector<std::vector<long long>> rows;
    while (true) {
      expect('[');
      std::vector<long long> row;
      skip_ws();
      if (pos < text.size() && text[pos] != ']') {
        row.push_back(number());
        skip_ws();
        while (pos < text.size() && text[pos] == ',') {
          ++pos;
          row.push_back(number());
          skip_ws();
        }
      }
      expect(']');
      rows.push_back(std::move(row));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    expect(']');
    skip_ws();
    if (pos != text.size())
      throw std::invalid_argument("ModMatrix: trailing input in matrix literal");

    const std::size_t n = rows.size();
    std::vector<long long> entries;
    for (const auto& row : rows) {
      if (row.size() != n)
        throw std::invalid_argument("ModMatrix: matrix literal is not square");
      for (long long v : row) entries.push_back(v);
    }
    if (modulus < 2) throw std::invalid_argument("ModMatrix: modulus must be >= 2");
    return ModMatrix(n, static_cast<std::uint32_t>(modulus), std::move(entries));
  }

  /// "mod m: [[a,b],[c,d]]"
  std::string to_string() const {
    std::string s = "mod " + std::to_string(m_) + ": [";
    for (std::size_t i = 0; i < n_; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < n_; ++j) {
        if (j) s += ",";
        s += std::to_string(at(i, j));
      }
      s += "]";
    }
    s += "]";
    return s;
  }

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

private:
  // Determinant mod m by cofactor expansion; dimensions stay desk-scale.
  long long det() const { return minor_det(std::vector<std::size_t>{}, std::vector<std::size_t>{}); }

  long long cofactor(std::size_t row, std::size_t col) const {
    long long d = minor_det({row}, {col});
    return ((row + col) % 2 == 0) ? d : (m_ - d % m_) % m_;
  }

  long long minor_det(std::vector<std::size_t> cut_rows, std::vector<std::size_t> cut_cols) const {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < n_; ++i) {
      bool cut = false;
      for (std::size_t c : cut_rows) cut = cut || c == i;
      if (!cut) rows.push_back(i);
    }
    for (std::size_t j = 0; j < n_; ++j) {
      bool cut = false;
      for (std::size_t c : cut_cols) cut = cut || c == j;
      if (!cut) cols.push_back(j);
    }
    return det_rec(rows, cols);
  }

  long long det_rec(const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) const {
    const std::size_t k = rows.size();
    if (k == 0) return 1;
    if (k == 1) return at(rows[0], cols[0]);
    long long sum = 0;
    for (std::size_t j = 0; j < k; ++j) {
      long long a = at(rows[0], cols[j]);
      if (a == 0) continue;
      std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
      std::vector<std::size_t> sub_cols;
      for (std::size_t jj = 0; jj < k; ++jj)
        if (jj != j) sub_cols.push_back(cols[jj]);
      long long term = a * det_rec(sub_rows, sub_cols) % m_;
      sum = (j % 2 == 0) ? (sum + term) % m_ : (sum - term % m_ + m_) % m_;
    }
    return (sum % m_ + m_) % m_;
  }

  long long unit_inverse(long long a) const {
    a %= m_;
    if (a < 0) a += m_;
    long long t = 0, new_t = 1, r = m_, new_r = a;
    while (new_r != 0) {
      long long q = r / new_r;
      long long tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (r != 1) throw std::invalid_argument("ModMatrix: determinant not invertible");
    return (t % m_ + m_) % m_;
  }

  std::size_t n_ = 0;
  std::uint32_t m_ = 0;
  std::vector<std::uint32_t> e_;
};

}  // namespace adorn
