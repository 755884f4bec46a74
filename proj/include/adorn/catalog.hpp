#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adorn/finite_group.hpp"
#include "adorn/mod_matrix.hpp"
#include "adorn/permutation.hpp"
#include "adorn/presentation.hpp"
#include "adorn/smith.hpp"

namespace adorn {

/// Facts an entry is expected to satisfy, re-derived by the test suite so
/// they can never go stale. `source` strings say where each number comes
/// from (classical structure theory, an order formula, a decomposition).
struct ExpectedFacts {
  std::optional<int> doa;
  std::string doa_source;
  std::optional<Int> order;
  std::string order_source;
  std::optional<AbelianGroupData> abelianization;
  std::string abelianization_source;
};

/// Named group: a concrete model (permutations or matrices over Z/m), a
/// presentation, or both. Oracle-pair entries carry aligned forms: the
/// i-th presentation generator maps to the i-th model generator.
struct CatalogEntry {
  std::string name;
  std::string description;
  std::vector<Permutation> perm_generators;
  std::vector<ModMatrix> matrix_generators;
  std::optional<Presentation> presentation;
  bool prefer_presentation = false;  // CLI dispatch: run the FP pipeline
  bool knot = false;                 // Alexander operations apply
  ExpectedFacts expected;

  bool has_model() const { return !perm_generators.empty() || !matrix_generators.empty(); }
};

inline FiniteGroup build_model(const CatalogEntry& e,
                               std::size_t max_order = kDefaultMaxOrder) {
  if (!e.perm_generators.empty()) return enumerate_group(e.perm_generators, max_order);
  if (!e.matrix_generators.empty()) return enumerate_group(e.matrix_generators, max_order);
  throw std::invalid_argument("catalog: entry '" + e.name + "' has no concrete model");
}

namespace detail {

inline Permutation cycle_perm(std::size_t n) {
  std::vector<std::uint32_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>((i + 1) % n);
  return Permutation(std::move(img));
}

inline Permutation transposition(std::size_t n) {
  std::vector<std::uint32_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>(i);
  std::swap(img[0], img[1]);
  return Permutation(std::move(img));
}

inline Permutation reflection(std::size_t n) {
  std::vector<std::uint32_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>((n - i) % n);
  return Permutation(std::move(img));
}

inline AbelianGroupData ab(std::size_t rank, std::vector<long long> torsion) {
  AbelianGroupData a;
  a.rank = rank;
  for (long long t : torsion) a.torsion.push_back(t);
  return a;
}

inline std::string braid_presentation_text(std::size_t strands) {
  std::string gens, rels;
  for (std::size_t i = 1; i < strands; ++i) {
    if (!gens.empty()) gens += ", ";
    gens += "s" + std::to_string(i);
  }
  for (std::size_t i = 1; i + 1 < strands; ++i) {
    std::string a = "s" + std::to_string(i), b = "s" + std::to_string(i + 1);
    if (!rels.empty()) rels += ", ";
    rels += a + "*" + b + "*" + a + " = " + b + "*" + a + "*" + b;
  }
  for (std::size_t i = 1; i + 1 < strands; ++i)
    for (std::size_t j = i + 2; j < strands; ++j)
      rels += ", [s" + std::to_string(i) + ", s" + std::to_string(j) + "]";
  return "< " + gens + " | " + rels + " >";
}

inline std::string surface_presentation_text(std::size_t genus) {
  std::string gens, rel;
  for (std::size_t i = 1; i <= genus; ++i) {
    if (!gens.empty()) gens += ", ";
    gens += "a" + std::to_string(i) + ", b" + std::to_string(i);
    rel += "[a" + std::to_string(i) + ", b" + std::to_string(i) + "]";
    if (i < genus) rel += "*";
  }
  return "< " + gens + " | " + rel + " >";
}

inline std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> entries;
  auto add = [&](CatalogEntry e) { entries.push_back(std::move(e)); };

  // ---- symmetric and alternating groups -------------------------------
  Int factorial = 1;
  for (std::size_t n = 2; n <= 7; ++n) {
    factorial *= static_cast<long long>(n);
    CatalogEntry e;
    e.name = "symmetric" + std::to_string(n);
    e.description = "symmetric group on " + std::to_string(n) + " letters";
    e.perm_generators = {transposition(n), cycle_perm(n)};
    e.expected.order = factorial;
    e.expected.order_source = "n! formula";
    if (n >= 5) {
      e.expected.doa = 1;
      e.expected.doa_source = "derived series stops at the alternating group, n >= 5";
    } else if (n == 2) {
      e.expected.doa = 1;
      e.expected.doa_source = "abelian";
    } else if (n == 3) {
      e.expected.doa = 2;
      e.expected.doa_source = "derived series S3 > C3 > 1";
    } else {
      e.expected.doa = 3;
      e.expected.doa_source = "derived series S4 > A4 > V4 > 1";
    }
    e.expected.abelianization = ab(0, {2});
    e.expected.abelianization_source = "sign map";
    add(std::move(e));
  }
  Int alt_order = 3;
  for (std::size_t n = 3; n <= 7; ++n) {
    if (n > 3) alt_order = alt_order * static_cast<long long>(n);
    CatalogEntry e;
    e.name = "alternating" + std::to_string(n);
    e.description = "alternating group on " + std::to_string(n) + " letters";
    if (n == 3) {
      e.perm_generators = {Permutation::from_cycles("(0 1 2)", 3)};
    } else if (n % 2 == 1) {
      e.perm_generators = {Permutation::from_cycles("(0 1 2)", n), cycle_perm(n)};
    } else {
      std::vector<std::uint32_t> img(n);
      img[0] = 0;
      for (std::size_t i = 1; i < n; ++i) img[i] = static_cast<std::uint32_t>(i % (n - 1) + 1);
      e.perm_generators = {Permutation::from_cycles("(0 1 2)", n), Permutation(std::move(img))};
    }
    e.expected.order = alt_order;
    e.expected.order_source = "n!/2 formula";
    if (n >= 5) {
      e.expected.doa = 0;
      e.expected.doa_source = "perfect (simple and nonabelian)";
      e.expected.abelianization = ab(0, {});
      e.expected.abelianization_source = "perfect group";
    } else if (n == 3) {
      e.expected.doa = 1;
      e.expected.doa_source = "abelian";
      e.expected.abelianization = ab(0, {3});
      e.expected.abelianization_source = "cyclic of order 3";
    } else {
      e.expected.doa = 2;
      e.expected.doa_source = "derived series A4 > V4 > 1";
      e.expected.abelianization = ab(0, {3});
      e.expected.abelianization_source = "A4 / V4";
    }
    add(std::move(e));
  }

  // ---- cyclic, dihedral, Klein four, quaternion ------------------------
  for (std::size_t n : {2, 3, 4, 5, 6, 7, 12}) {
    CatalogEntry e;
    e.name = "cyclic" + std::to_string(n);
    e.description = "cyclic group of order " + std::to_string(n);
    e.perm_generators = {cycle_perm(n)};
    e.expected.order = static_cast<long long>(n);
    e.expected.order_source = "definition";
    e.expected.doa = 1;
    e.expected.doa_source = "abelian";
    e.expected.abelianization = ab(0, {static_cast<long long>(n)});
    e.expected.abelianization_source = "abelian group is its own abelianization";
    add(std::move(e));
  }
  for (std::size_t n : {3, 4, 5, 6}) {
    CatalogEntry e;
    e.name = "dihedral" + std::to_string(n);
    e.description = "dihedral group of order " + std::to_string(2 * n);
    e.perm_generators = {cycle_perm(n), reflection(n)};
    e.expected.order = static_cast<long long>(2 * n);
    e.expected.order_source = "2n formula";
    e.expected.doa = 2;
    e.expected.doa_source = "derived subgroup is the rotation subgroup <r^2>";
    e.expected.abelianization = n % 2 == 0 ? ab(0, {2, 2}) : ab(0, {2});
    e.expected.abelianization_source = "reflection and rotation classes";
    add(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "klein_four";
    e.description = "Klein four-group";
    e.perm_generators = {Permutation::from_cycles("(0 1)", 4),
                         Permutation::from_cycles("(2 3)", 4)};
    e.expected.order = 4;
    e.expected.order_source = "definition";
    e.expected.doa = 1;
    e.expected.doa_source = "abelian";
    e.expected.abelianization = ab(0, {2, 2});
    e.expected.abelianization_source = "elementary abelian";
    add(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "quaternion8";
    e.description = "quaternion group, i and j inside SL2(Z/3)";
    e.matrix_generators = {ModMatrix(2, 3, {0, 2, 1, 0}), ModMatrix(2, 3, {1, 1, 1, 2})};
    e.presentation = parse_presentation("< x, y | x^4, x^2*y^-2, y*x*y^-1*x >");
    e.expected.order = 8;
    e.expected.order_source = "definition";
    e.expected.doa = 2;
    e.expected.doa_source = "derived series Q8 > {+-1} > 1";
    e.expected.abelianization = ab(0, {2, 2});
    e.expected.abelianization_source = "Q8 / {+-1}";
    add(std::move(e));
  }

  // ---- matrix groups over Z/m ------------------------------------------
  struct LinearData {
    std::uint32_t m;
    long long unit;  // generator of (Z/m)^*, 0 when trivial
    long long gl_order, sl_order;
  };
  for (LinearData d : std::vector<LinearData>{{2, 0, 6, 6},
                                              {3, 2, 48, 24},
                                              {4, 3, 96, 48},
                                              {5, 2, 480, 120},
                                              {6, 5, 288, 144},
                                              {7, 3, 2016, 336}}) {
    std::vector<ModMatrix> sl_gens = {ModMatrix(2, d.m, {1, 1, 0, 1}),
                                      ModMatrix(2, d.m, {1, 0, 1, 1})};
    {
      CatalogEntry e;
      e.name = "sl2_" + std::to_string(d.m);
      e.description = "SL2 over Z/" + std::to_string(d.m) + ", elementary generators";
      e.matrix_generators = sl_gens;
      e.expected.order = d.sl_order;
      e.expected.order_source = "multiplicative order formula";
      if (d.m == 2) {
        e.expected.doa = 2;
        e.expected.doa_source = "isomorphic to S3";
      } else if (d.m == 3) {
        e.expected.doa = 3;
        e.expected.doa_source = "derived series SL2(3) > Q8 > {+-1} > 1";
      } else if (d.m == 5 || d.m == 7) {
        e.expected.doa = 0;
        e.expected.doa_source = "perfect for prime moduli >= 5";
        e.expected.abelianization = ab(0, {});
        e.expected.abelianization_source = "perfect group";
      } else if (d.m == 6) {
        e.expected.doa = 3;
        e.expected.doa_source = "splits as SL2(Z/2) x SL2(Z/3); doa is the max of 2 and 3";
      }
      add(std::move(e));
    }
    {
      CatalogEntry e;
      e.name = "gl2_" + std::to_string(d.m);
      e.description = "GL2 over Z/" + std::to_string(d.m) +
                      ", elementary generators plus a unit diagonal";
      e.matrix_generators = sl_gens;
      if (d.unit != 0)
        e.matrix_generators.push_back(ModMatrix(2, d.m, {d.unit, 0, 0, 1}));
      e.expected.order = d.gl_order;
      e.expected.order_source = "multiplicative order formula";
      if (d.m == 2) {
        e.expected.doa = 2;
        e.expected.doa_source = "isomorphic to S3";
      } else if (d.m == 3) {
        e.expected.doa = 4;
        e.expected.doa_source = "derived series GL2(3) > SL2(3) > Q8 > {+-1} > 1";
      } else if (d.m == 5 || d.m == 7) {
        e.expected.doa = 1;
        e.expected.doa_source =
            "elementary matrices generate the perfect derived subgroup SL2";
        e.expected.abelianization = ab(0, {d.m == 5 ? 4 : 6});
        e.expected.abelianization_source = "determinant onto the units";
      } else if (d.m == 6) {
        e.expected.doa = 4;
        e.expected.doa_source = "splits as GL2(Z/2) x GL2(Z/3); doa is the max of 2 and 4";
      }
      add(std::move(e));
    }
  }

  // ---- free groups, surfaces, braids ------------------------------------
  for (std::size_t n : {1, 2, 3}) {
    CatalogEntry e;
    e.name = "free" + std::to_string(n);
    e.description = "free group of rank " + std::to_string(n);
    std::string gens;
    for (std::size_t i = 1; i <= n; ++i) gens += (i > 1 ? ", a" : "a") + std::to_string(i);
    e.presentation = parse_presentation("< " + gens + " | >");
    e.prefer_presentation = true;
    e.expected.abelianization = ab(n, {});
    e.expected.abelianization_source = "free abelianization";
    add(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "klein_bottle";
    e.description = "Klein bottle group";
    e.presentation = parse_presentation("< a, b | a*b*a*b^-1 >");
    e.prefer_presentation = true;
    e.expected.abelianization = ab(1, {2});
    e.expected.abelianization_source = "single relator with exponent sums (2, 0)";
    add(std::move(e));
  }
  for (std::size_t g : {1, 2, 3}) {
    CatalogEntry e;
    e.name = "surface" + std::to_string(g);
    e.description = "orientable surface group, genus " + std::to_string(g);
    e.presentation = parse_presentation(surface_presentation_text(g));
    e.prefer_presentation = true;
    e.expected.abelianization = ab(2 * g, {});
    e.expected.abelianization_source = "product-of-commutators relator dies";
    add(std::move(e));
  }
  for (std::size_t n : {2, 3, 4, 5, 6}) {
    CatalogEntry e;
    e.name = "braid" + std::to_string(n);
    e.description = "braid group on " + std::to_string(n) + " strands, Artin generators";
    e.presentation = parse_presentation(braid_presentation_text(n));
    e.prefer_presentation = true;
    e.expected.abelianization = ab(1, {});
    e.expected.abelianization_source = "all Artin generators are conjugate";
    add(std::move(e));
  }

  // ---- knot groups -------------------------------------------------------
  {
    CatalogEntry e;
    e.name = "unknot";
    e.description = "unknot group (infinite cyclic)";
    e.presentation = parse_presentation("< x | >");
    e.prefer_presentation = true;
    e.knot = true;
    e.expected.abelianization = ab(1, {});
    e.expected.abelianization_source = "knot group homology";
    add(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "trefoil";
    e.description = "trefoil knot group";
    e.presentation = parse_presentation("< x, y | x*y*x = y*x*y >");
    e.prefer_presentation = true;
    e.knot = true;
    e.expected.abelianization = ab(1, {});
    e.expected.abelianization_source = "knot group homology";
    add(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "figure_eight";
    e.description = "figure-eight knot group";
    e.presentation =
        parse_presentation("< x, y | x*y^-1*x^-1*y*x*y^-1*x*y*x^-1*y^-1 >");
    e.prefer_presentation = true;
    e.knot = true;
    e.expected.abelianization = ab(1, {});
    e.expected.abelianization_source = "knot group homology";
    add(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "trefoil_sum_trefoil";
    e.description = "granny knot group (trefoil connected sum trefoil)";
    e.presentation = parse_presentation(
        "< x, y, v | x*y*x*y^-1*x^-1*y^-1, x*v*x*v^-1*x^-1*v^-1 >");
    e.prefer_presentation = true;
    e.knot = true;
    e.expected.abelianization = ab(1, {});
    e.expected.abelianization_source = "knot group homology";
    add(std::move(e));
  }

  // ---- presented oracle pairs (aligned with concrete models) -------------
  auto presented = [&](std::string name, std::string description, const char* text,
                       std::vector<Permutation> perm_gens, std::vector<ModMatrix> mat_gens,
                       int doa, Int order_value, AbelianGroupData abelianization) {
    CatalogEntry e;
    e.name = std::move(name);
    e.description = std::move(description);
    e.presentation = parse_presentation(text);
    e.perm_generators = std::move(perm_gens);
    e.matrix_generators = std::move(mat_gens);
    e.prefer_presentation = true;
    e.expected.doa = doa;
    e.expected.doa_source = "derived series of the aligned concrete model";
    e.expected.order = std::move(order_value);
    e.expected.order_source = "order of the aligned concrete model";
    e.expected.abelianization = std::move(abelianization);
    e.expected.abelianization_source = "Smith form of the relation matrix";
    add(std::move(e));
  };

  presented("symmetric3_presented", "S3 as a Coxeter-style presentation",
            "< a, b | a^2, b^3, (a*b)^2 >",
            {Permutation::from_cycles("(0 1)", 3), Permutation::from_cycles("(0 1 2)", 3)}, {},
            2, 6, ab(0, {2}));
  presented("symmetric4_presented", "S4 as a (2,3,4) triangle quotient",
            "< a, b | a^2, b^3, (a*b)^4 >",
            {Permutation::from_cycles("(0 1)", 4), Permutation::from_cycles("(1 2 3)", 4)}, {},
            3, 24, ab(0, {2}));
  presented("alternating4_presented", "A4 as a (2,3,3) triangle quotient",
            "< a, b | a^2, b^3, (a*b)^3 >",
            {Permutation::from_cycles("(0 1)(2 3)", 4), Permutation::from_cycles("(0 1 2)", 4)},
            {}, 2, 12, ab(0, {3}));
  presented("alternating5_presented", "A5 as a (2,3,5) triangle quotient",
            "< a, b | a^2, b^3, (a*b)^5 >",
            {Permutation::from_cycles("(0 1)(2 3)", 5), Permutation::from_cycles("(0 2 4)", 5)},
            {}, 0, 60, ab(0, {}));
  presented("dihedral4_presented", "D4 with rotation and reflection",
            "< r, s | r^4, s^2, (r*s)^2 >", {cycle_perm(4), reflection(4)}, {}, 2, 8,
            ab(0, {2, 2}));
  presented("dihedral5_presented", "D5 with rotation and reflection",
            "< r, s | r^5, s^2, (r*s)^2 >", {cycle_perm(5), reflection(5)}, {}, 2, 10,
            ab(0, {2}));
  presented("dihedral6_presented", "D6 with rotation and reflection",
            "< r, s | r^6, s^2, (r*s)^2 >", {cycle_perm(6), reflection(6)}, {}, 2, 12,
            ab(0, {2, 2}));
  presented("quaternion8_presented", "Q8, two-generator presentation",
            "< x, y | x^4, x^2*y^-2, y*x*y^-1*x >", {},
            {ModMatrix(2, 3, {0, 2, 1, 0}), ModMatrix(2, 3, {1, 1, 1, 2})}, 2, 8, ab(0, {2, 2}));
  presented("sl2_3_presented", "SL2(Z/3) as the binary tetrahedral presentation",
            "< a, b | a^3*b^-3, a^3*(a*b)^-2 >", {},
            {ModMatrix(2, 3, {2, 2, 0, 2}), ModMatrix(2, 3, {2, 0, 2, 2})}, 3, 24, ab(0, {3}));
  presented("frobenius20_presented", "Frobenius group of order 20",
            "< a, b | a^5, b^4, b*a*b^-1*a^-2 >",
            {Permutation::from_cycles("(0 1 2 3 4)", 5), Permutation::from_cycles("(1 3 4 2)", 5)},
            {}, 2, 20, ab(0, {4}));
  presented("frobenius21_presented", "Frobenius group of order 21",
            "< a, b | a^7, b^3, b*a*b^-1*a^-2 >",
            {Permutation::from_cycles("(0 1 2 3 4 5 6)", 7),
             Permutation::from_cycles("(1 4 2)(3 5 6)", 7)},
            {}, 2, 21, ab(0, {3}));
  presented("cyclic6_presented", "C6 on one generator", "< a | a^6 >", {cycle_perm(6)}, {}, 1, 6,
            ab(0, {6}));
  presented("klein_four_presented", "V4 on two commuting involutions",
            "< a, b | a^2, b^2, (a*b)^2 >",
            {Permutation::from_cycles("(0 1)", 4), Permutation::from_cycles("(2 3)", 4)}, {}, 1,
            4, ab(0, {2, 2}));

  return entries;
}

}  // namespace detail

/// Read-only registry of every named group; built once, safe to share.
class Catalog {
public:
  static const Catalog& instance() {
    static Catalog c;
    return c;
  }

  const CatalogEntry& get(const std::string& name) const {
    for (const CatalogEntry& e : entries_)
      if (e.name == name) return e;
    throw std::invalid_argument("catalog: unknown entry '" + name + "'");
  }

  bool has(const std::string& name) const {
    for (const CatalogEntry& e : entries_)
      if (e.name == name) return true;
    return false;
  }

  const std::vector<CatalogEntry>& entries() const { return entries_; }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const CatalogEntry& e : entries_) out.push_back(e.name);
    return out;
  }

private:
  Catalog() : entries_(detail::make_catalog()) {}
  std::vector<CatalogEntry> entries_;
};

}  // namespace adorn
