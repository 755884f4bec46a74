#pragma once

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adorn/ints.hpp"

namespace adorn {

/// Smith normal form U * M * V = diag(d1..dk, 0...) with d_i | d_{i+1},
/// d_i > 0 and U, V unimodular.
struct SmithForm {
  std::vector<Int> diag;
  IntMatrix left;    // U, rows x rows
  IntMatrix right;   // V, cols x cols
  std::size_t rows = 0;
  std::size_t cols = 0;

  /// The claimed diagonal as a full rows x cols matrix.
  IntMatrix diagonal_matrix() const {
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < diag.size(); ++i) d.at(i, i) = diag[i];
    return d;
  }
};

/// Finitely generated abelian group in canonical form: free rank plus a
/// divisibility chain of torsion invariants (all >= 2; trivial factors are
/// dropped so equality of values is equality of groups).
struct AbelianGroupData {
  std::size_t rank = 0;
  std::vector<Int> torsion;

  friend bool operator==(const AbelianGroupData&, const AbelianGroupData&) = default;

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rank; ++i) s += s.empty() ? "Z" : " + Z";
    for (const Int& t : torsion) {
      if (!s.empty()) s += " + ";
      s += "Z/" + t.str();
    }
    return s.empty() ? "0" : s;
  }
};

inline bool is_finite(const AbelianGroupData& a) { return a.rank == 0; }

inline bool is_trivial(const AbelianGroupData& a) {
  return a.rank == 0 && a.torsion.empty();
}

inline Int order(const AbelianGroupData& a) {
  if (!is_finite(a))
    throw std::domain_error("order: abelian group is infinite");
  Int n = 1;
  for (const Int& t : a.torsion) n *= t;
  return n;
}

/// rank(H2) of an abelian group of the given free rank: rank*(rank-1)/2,
/// the dimension of the rank-2 exterior power.
inline std::size_t h2_rank_abelian(const AbelianGroupData& a) {
  return a.rank * (a.rank - 1) / 2;
}

namespace detail {

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace detail

/// Diagonalizes M by unimodular row and column operations. Pivot choice is
/// the first entry of smallest nonzero absolute value (row-major scan),
/// which keeps coefficient growth down and makes the output deterministic.
inline SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  auto row_add = [&](std::size_t dst, std::size_t src, const Int& q) {
    // row dst += q * row src, mirrored on U
    for (std::size_t j = 0; j < cols; ++j) a.at(dst, j) += q * a.at(src, j);
    for (std::size_t j = 0; j < rows; ++j) u.at(dst, j) += q * u.at(src, j);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t i = 0; i < rows; ++i) a.at(i, dst) += q * a.at(i, src);
    for (std::size_t i = 0; i < cols; ++i) v.at(i, dst) += q * v.at(i, src);
  };
  auto row_swap = [&](std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(r1, j), a.at(r2, j));
    for (std::size_t j = 0; j < rows; ++j) std::swap(u.at(r1, j), u.at(r2, j));
  };
  auto col_swap = [&](std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(a.at(i, c1), a.at(i, c2));
    for (std::size_t i = 0; i < cols; ++i) std::swap(v.at(i, c1), v.at(i, c2));
  };
  auto row_negate = [&](std::size_t r) {
    for (std::size_t j = 0; j < cols; ++j) a.at(r, j) = -a.at(r, j);
    for (std::size_t j = 0; j < rows; ++j) u.at(r, j) = -u.at(r, j);
  };

  // Smallest nonzero |entry| in the trailing submatrix, row-major ties.
  auto find_pivot = [&](std::size_t k) -> std::optional<std::pair<std::size_t, std::size_t>> {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs = 0;
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j) {
        if (a.at(i, j) == 0) continue;
        Int ab = detail::abs_int(a.at(i, j));
        if (!best || ab < best_abs) {
          best = {{i, j}};
          best_abs = ab;
        }
      }
    return best;
  };

  // After every reduction pass the globally smallest surviving entry is
  // re-selected as the pivot; leftover remainders are always smaller than
  // the pivot that produced them, so the minimum strictly drops until the
  // row and column are clear. This keeps quotients, and with them
  // coefficient growth, small.
  std::size_t k = 0;
  while (true) {
    auto pivot = find_pivot(k);
    if (!pivot) break;
    row_swap(k, pivot->first);
    col_swap(k, pivot->second);

    bool dirty = false;
    for (std::size_t i = k + 1; i < rows; ++i) {
      if (a.at(i, k) == 0) continue;
      Int q = a.at(i, k) / a.at(k, k);
      if (q != 0) row_add(i, k, -q);
      if (a.at(i, k) != 0) dirty = true;
    }
    for (std::size_t j = k + 1; j < cols; ++j) {
      if (a.at(k, j) == 0) continue;
      Int q = a.at(k, j) / a.at(k, k);
      if (q != 0) col_add(j, k, -q);
      if (a.at(k, j) != 0) dirty = true;
    }
    if (dirty) continue;

    // Divisibility: fold one bad row into row k; the next rounds shrink
    // the pivot to a gcd of the two.
    bool divides_all = true;
    for (std::size_t i = k + 1; i < rows && divides_all; ++i)
      for (std::size_t j = k + 1; j < cols && divides_all; ++j)
        if (a.at(i, j) % a.at(k, k) != 0) {
          row_add(k, i, 1);
          divides_all = false;
        }
    if (!divides_all) continue;

    if (a.at(k, k) < 0) row_negate(k);
    ++k;
  }

  SmithForm out;
  out.rows = rows;
  out.cols = cols;
  out.left = std::move(u);
  out.right = std::move(v);
  for (std::size_t i = 0; i < k; ++i) out.diag.push_back(a.at(i, i));
  return out;
}

/// Abelian invariants of the group presented by a relation matrix
/// (rows = relators, columns = generators).
inline AbelianGroupData abelian_invariants(const IntMatrix& relation_matrix) {
  SmithForm s = smith_normal_form(relation_matrix);
  AbelianGroupData a;
  a.rank = relation_matrix.cols() - s.diag.size();
  for (const Int& d : s.diag)
    if (d > 1) a.torsion.push_back(d);
  return a;
}

}  // namespace adorn
