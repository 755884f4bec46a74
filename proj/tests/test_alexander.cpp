#include "adorn/alexander.hpp"

#include <gtest/gtest.h>

#include <random>

#include "adorn/presentation.hpp"
#include "adorn/smith.hpp"

using namespace adorn;

namespace {

const char* kTrefoil = "< x, y | x*y*x*y^-1*x^-1*y^-1 >";
const char* kFigureEight = "< x, y | x*y^-1*x^-1*y*x*y^-1*x*y*x^-1*y^-1 >";
const char* kGranny = "< x, y, v | x*y*x*y^-1*x^-1*y^-1, x*v*x*v^-1*x^-1*v^-1 >";

LaurentPoly from_terms(std::vector<std::pair<long long, long long>> terms) {
  LaurentPoly p;
  for (auto [e, c] : terms) p.add_term(e, Int(c));
  return p;
}

// |det| of the Fox matrix with one column deleted, evaluated at t = -1,
// via Smith invariants of the resulting integer matrix. Rows are shifted
// to clear negative exponents first (a unit move at t = -1).
Int torsion_at_minus_one(const std::vector<std::vector<LaurentPoly>>& fox, std::size_t n_cols,
                         std::size_t deleted) {
  std::vector<std::vector<LaurentPoly>> rows;
  for (const auto& row : fox) {
    std::vector<LaurentPoly> r;
    long long min_exp = 0;
    for (std::size_t j = 0; j < n_cols; ++j)
      if (j != deleted && !row[j].is_zero()) min_exp = std::min(min_exp, row[j].min_exp());
    for (std::size_t j = 0; j < n_cols; ++j)
      if (j != deleted) r.push_back(row[j] * LaurentPoly::monomial(-min_exp, 1));
    rows.push_back(std::move(r));
  }
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j].evaluate(-1);
  SmithForm s = smith_normal_form(m);
  Int prod = 1;
  for (const Int& d : s.diag) prod *= d;
  return prod;
}

}  // namespace

TEST(FoxDerivative, ProductAndInverseRules) {
  Word x = Word::generator(0), y = Word::generator(1);
  // d(xy)/dx = 1
  EXPECT_EQ(fox_derivative_abelianized(x * y, 0), LaurentPoly::one());
  // d(xy)/dy = t
  EXPECT_EQ(fox_derivative_abelianized(x * y, 1), LaurentPoly::monomial(1, 1));
  // d(x^-1)/dx = -t^-1
  EXPECT_EQ(fox_derivative_abelianized(x.inverse(), 0), LaurentPoly::monomial(-1, -1));
  // d(h)/dg = 0 for h != g
  EXPECT_TRUE(fox_derivative_abelianized(y, 0).is_zero());
}

TEST(FoxDerivative, TrefoilRelator) {
  // hand computation: d(xyxy^-1x^-1y^-1)/dx = 1 - t + t^2
  Presentation p = parse_presentation(kTrefoil);
  LaurentPoly d = fox_derivative_abelianized(p.relators()[0], 0);
  EXPECT_EQ(d, from_terms({{0, 1}, {1, -1}, {2, 1}}));
}

TEST(FoxDerivative, FundamentalIdentity) {
  // sum_g d(w)/dg * (t - 1) = t^(exponent sum of w) - 1, for random words
  std::mt19937 rng(59);
  std::uniform_int_distribution<int> gen(0, 2);
  std::uniform_int_distribution<int> exp(-2, 2);
  LaurentPoly t_minus_1 = from_terms({{1, 1}, {0, -1}});
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<Letter> raw;
    int len = static_cast<int>(rng() % 12);
    for (int i = 0; i < len; ++i) {
      int e = exp(rng);
      if (e == 0) e = 1;
      raw.push_back({gen(rng), e});
    }
    Word w(raw);
    long long total = 0;
    for (const Letter& l : w.letters()) total += l.exp;
    LaurentPoly sum;
    for (int g = 0; g < 3; ++g) sum = sum + fox_derivative_abelianized(w, g) * t_minus_1;
    LaurentPoly expected = LaurentPoly::monomial(total, 1) - LaurentPoly::one();
    EXPECT_EQ(sum, expected);
  }
}

TEST(Alexander, UnknotIsTrivial) {
  AlexanderData data = alexander_polynomial(parse_presentation("< x | >"));
  EXPECT_TRUE(data.polynomial.is_one());
  EXPECT_EQ(data.degree, 0);
  EXPECT_FALSE(data.degenerate);
}

TEST(Alexander, Trefoil) {
  AlexanderData data = alexander_polynomial(parse_presentation(kTrefoil));
  EXPECT_EQ(data.polynomial, from_terms({{0, 1}, {1, -1}, {2, 1}}));
  EXPECT_EQ(data.polynomial.to_string(), "t^2 - t + 1");
  EXPECT_EQ(data.degree, 2);
  // |delta(-1)| = 3, cross-checked through the integer Smith oracle
  Int dm1 = data.polynomial.evaluate(-1);
  EXPECT_EQ(dm1 < 0 ? Int(-dm1) : dm1, 3);
  EXPECT_EQ(torsion_at_minus_one(data.matrix, 2, 0), 3);
}

TEST(Alexander, FigureEight) {
  AlexanderData data = alexander_polynomial(parse_presentation(kFigureEight));
  EXPECT_EQ(data.polynomial, from_terms({{0, 1}, {1, -3}, {2, 1}}));
  EXPECT_EQ(data.degree, 2);
  Int dm1 = data.polynomial.evaluate(-1);
  EXPECT_EQ(dm1 < 0 ? Int(-dm1) : dm1, 5);
  EXPECT_EQ(torsion_at_minus_one(data.matrix, 2, 0), 5);
}

TEST(Alexander, GrannyKnotDegreeAdds) {
  // trefoil # trefoil: polynomial is the square, degree 4
  AlexanderData data = alexander_polynomial(parse_presentation(kGranny));
  LaurentPoly trefoil_poly = from_terms({{0, 1}, {1, -1}, {2, 1}});
  EXPECT_EQ(data.polynomial, trefoil_poly * trefoil_poly);
  EXPECT_EQ(data.degree, 4);
  EXPECT_EQ(torsion_at_minus_one(data.matrix, 3, 0), 9);
}

TEST(Alexander, ColumnDeletionIndependence) {
  for (const char* text : {kTrefoil, kFigureEight, kGranny}) {
    AlexanderData data = alexander_polynomial(parse_presentation(text));
    std::size_t cols = data.matrix[0].size();
    for (std::size_t j = 1; j < cols; ++j)
      EXPECT_EQ(alexander_minor(data.matrix, cols, j), data.polynomial) << text;
  }
}

TEST(Alexander, PolynomialSymmetry) {
  // normalized delta(t) equals normalized t^deg * delta(1/t) on the catalog
  for (const char* text : {kTrefoil, kFigureEight, kGranny}) {
    AlexanderData data = alexander_polynomial(parse_presentation(text));
    LaurentPoly reversed;
    for (const auto& [e, c] : data.polynomial.coefficients())
      reversed.add_term(data.degree - e, c);
    EXPECT_EQ(reversed.normalized(), data.polynomial) << text;
  }
}

TEST(Alexander, DegreeIsEven) {
  for (const char* text : {"< x | >", kTrefoil, kFigureEight, kGranny}) {
    AlexanderData data = alexander_polynomial(parse_presentation(text));
    EXPECT_EQ(data.degree % 2, 0) << text;
  }
}

TEST(Alexander, H1PrimeRankIsDegree) {
  EXPECT_EQ(h1prime_rank(parse_presentation(kTrefoil)), 2);
  EXPECT_EQ(h1prime_rank(parse_presentation("< x | >")), 0);
  EXPECT_EQ(h1prime_rank(parse_presentation(kGranny)), 4);
}

TEST(Alexander, Verdicts) {
  Verdict unknot = knot_adorability_verdict(parse_presentation("< x | >"));
  const auto* a = std::get_if<Adorable>(&unknot);
  ASSERT_NE(a, nullptr);
  EXPECT_EQ(a->doa, 1);

  Verdict trefoil = knot_adorability_verdict(parse_presentation(kTrefoil));
  const auto* na = std::get_if<NotAdorable>(&trefoil);
  ASSERT_NE(na, nullptr);
  EXPECT_EQ(na->reason, NotAdorableReason::NontrivialAlexanderPolynomial);
  EXPECT_NE(na->evidence.find("t^2 - t + 1"), std::string::npos);

  Verdict fig8 = knot_adorability_verdict(parse_presentation(kFigureEight));
  EXPECT_TRUE(std::holds_alternative<NotAdorable>(fig8));
}

TEST(Alexander, PreconditionViolations) {
  // abelianization Z x Z
  EXPECT_THROW(alexander_polynomial(parse_presentation("< x, y | [x,y] >")),
               std::invalid_argument);
  // abelianization Z/5: not infinite cyclic
  EXPECT_THROW(alexander_polynomial(parse_presentation("< x | x^5 >")), std::invalid_argument);
  // generators map to different powers of t
  EXPECT_THROW(alexander_polynomial(parse_presentation("< x, y | x*y^-2 >")),
               std::invalid_argument);
  // not deficiency 1 even after simplification
  EXPECT_THROW(alexander_polynomial(parse_presentation("< x, y | x*y*x*y^-1*x^-1*y^-1, "
                                                       "x^2*y*x^-2*y^-1*x*y*x^-1*y^-1 >")),
               std::invalid_argument);
}

TEST(Alexander, DeficiencyRepairViaSimplification) {
  // a redundant trivial generator is eliminated before the Fox matrix
  Presentation p = parse_presentation("< x, z | z >");
  AlexanderData data = alexander_polynomial(p);
  EXPECT_TRUE(data.polynomial.is_one());
}
