#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adorn/laurent.hpp"
#include "adorn/presentation.hpp"
#include "adorn/smith.hpp"
#include "adorn/tietze.hpp"
#include "adorn/verdict.hpp"
#include "adorn/word.hpp"

namespace adorn {

/// Checks the Wirtinger-style precondition: the abelianization is infinite
/// cyclic and every generator maps to one and the same generator of it.
/// Returns that common image (+1 or -1 as a power of t).
inline int wirtinger_orientation(const Presentation& p) {
  if (p.generator_count() == 0)
    throw std::invalid_argument("alexander: presentation has no generators");
  IntMatrix m = relation_matrix(p);
  SmithForm s = smith_normal_form(m);
  AbelianGroupData inv;
  inv.rank = p.generator_count() - s.diag.size();
  for (const Int& d : s.diag)
    if (d > 1) inv.torsion.push_back(d);
  if (inv.rank != 1 || !inv.torsion.empty())
    throw std::invalid_argument("alexander: abelianization is not infinite cyclic (got " +
                                inv.to_string() + ")");
  // generator j maps to row j of V; the free coordinate is the last one
  const std::size_t free_coord = s.diag.size();
  Int common = s.right.at(0, free_coord);
  for (std::size_t j = 1; j < p.generator_count(); ++j)
    if (s.right.at(j, free_coord) != common)
      throw std::invalid_argument("alexander: generators do not all map to the same power of t");
  if (common != 1 && common != -1)
    throw std::invalid_argument("alexander: generator image does not generate t");
  return common < 0 ? -1 : 1;
}

/// Abelianized Fox derivative d(w)/d(gen) with every generator mapped to
/// t^orientation: d(uv) = du + phi(u) dv, d(g)/dg = 1, d(g^-1)/dg = -t^-1.
inline LaurentPoly fox_derivative_abelianized(const Word& w, int gen, int orientation = 1) {
  LaurentPoly d;
  long long phi = 0;  // exponent of t carried by the prefix
  for (const Letter& l : w.letters()) {
    if (l.gen == gen) {
      if (l.exp > 0) {
        for (long long i = 0; i < l.exp; ++i) d.add_term(phi + i * orientation, 1);
      } else {
        for (long long i = 1; i <= -l.exp; ++i) d.add_term(phi - i * orientation, -1);
      }
    }
    phi += l.exp * orientation;
  }
  return d;
}

struct AlexanderData {
  std::vector<std::vector<LaurentPoly>> matrix;  // relators x generators
  LaurentPoly polynomial;                        // normalized
  long long degree = 0;
  bool degenerate = false;  // all maximal minors vanished
};

/// Normalized maximal minor of a deficiency-1 Fox matrix with one column
/// deleted; equal (up to the normalization) for every column choice.
inline LaurentPoly alexander_minor(const std::vector<std::vector<LaurentPoly>>& m,
                                   std::size_t n_cols, std::size_t deleted) {
  std::vector<std::vector<LaurentPoly>> reduced;
  for (const auto& row : m) {
    std::vector<LaurentPoly> r;
    for (std::size_t j = 0; j < n_cols; ++j)
      if (j != deleted) r.push_back(row[j]);
    reduced.push_back(std::move(r));
  }
  return laurent_det(reduced).normalized();
}

/// Alexander matrix and polynomial of a deficiency-1 presentation with
/// infinite cyclic abelianization (all generators conjugate into t). The
/// polynomial is the gcd of maximal minors after deleting one column,
/// normalized to minimum exponent 0 and positive leading coefficient; the
/// unknot's empty minor set gives the constant 1 by convention.
inline AlexanderData alexander_polynomial(const Presentation& input) {
  // safe Tietze moves leave the polynomial unchanged and strip junk
  // generators before the preconditions are checked
  Presentation p = tietze_simplify(input);
  if (p.relators().size() + 1 != p.generator_count())
    throw std::invalid_argument(
        "alexander: requires a deficiency-1 presentation (relators = generators - 1)");
  int orientation = wirtinger_orientation(p);

  AlexanderData data;
  const std::size_t rels = p.relators().size();
  const std::size_t gens = p.generator_count();
  data.matrix.resize(rels);
  for (std::size_t i = 0; i < rels; ++i)
    for (std::size_t j = 0; j < gens; ++j)
      data.matrix[i].push_back(
          fox_derivative_abelianized(p.relators()[i], static_cast<int>(j), orientation));

  if (gens == 1) {
    data.polynomial = LaurentPoly::one();  // no minors to take
    data.degree = 0;
    return data;
  }

  data.polynomial = alexander_minor(data.matrix, gens, 0);
  if (data.polynomial.is_zero()) {
    data.degenerate = true;
    data.degree = 0;
    return data;
  }
  data.degree = data.polynomial.span();
  return data;
}

/// Rank of H^1/H^2 of the presented group: the degree of the Alexander
/// polynomial.
inline long long h1prime_rank(const Presentation& p) { return alexander_polynomial(p).degree; }

/// Adorability of a knot group: trivial Alexander polynomial means the
/// commutator subgroup is perfect (doa 1); anything else is not adorable.
inline Verdict knot_adorability_verdict(const Presentation& p) {
  AlexanderData data = alexander_polynomial(p);
  if (data.degenerate)
    throw std::invalid_argument(
        "alexander: zero polynomial; presentation is not knot-like, refusing a verdict");
  if (data.polynomial.is_one())
    return Adorable{1, {}, "trivial Alexander polynomial"};
  return NotAdorable{NotAdorableReason::NontrivialAlexanderPolynomial,
                     data.polynomial.to_string() + " (degree " + std::to_string(data.degree) +
                         ")"};
}

}  // namespace adorn
