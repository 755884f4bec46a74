#include "adorn/presentation.hpp"

#include <gtest/gtest.h>

#include "adorn/smith.hpp"

using namespace adorn;

TEST(Parser, Triangle) {
  Presentation p = parse_presentation("< a, b | a^2, b^3, (a*b)^3 >");
  EXPECT_EQ(p.generators(), (std::vector<std::string>{"a", "b"}));
  ASSERT_EQ(p.relators().size(), 3u);
  EXPECT_EQ(p.relators()[0], Word::generator(0, 2));
  EXPECT_EQ(p.relators()[1], Word::generator(1, 3));
  EXPECT_EQ(p.relators()[2], (Word::generator(0) * Word::generator(1)).pow(3));
}

TEST(Parser, EquationStoredAsUVInverse) {
  Presentation p = parse_presentation("< x, y | x*y*x = y*x*y >");
  ASSERT_EQ(p.relators().size(), 1u);
  Word x = Word::generator(0), y = Word::generator(1);
  EXPECT_EQ(p.relators()[0], x * y * x * y.inverse() * x.inverse() * y.inverse());
}

TEST(Parser, CommutatorSugar) {
  Presentation p = parse_presentation("< a, b | [a,b] >");
  ASSERT_EQ(p.relators().size(), 1u);
  EXPECT_EQ(p.relators()[0], commutator(Word::generator(0), Word::generator(1)));
}

TEST(Parser, OneIsEmptyWord) {
  Presentation p = parse_presentation("< a | 1, a = 1 >");
  EXPECT_TRUE(p.relators()[0].empty());
  EXPECT_EQ(p.relators()[1], Word::generator(0));
}

TEST(Parser, NegativeAndParenExponents) {
  Presentation p = parse_presentation("< a, b | (a*b^-2)^-3 >");
  Word ab2 = Word::generator(0) * Word::generator(1, -2);
  EXPECT_EQ(p.relators()[0], ab2.pow(-3));
}

TEST(Parser, SyntaxErrorHasPosition) {
  try {
    parse_presentation("< a, b | a^2 b >");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 13u);  // the 'b' where ',' or '>' was expected
  }
}

TEST(Parser, UndeclaredGenerator) {
  EXPECT_THROW(parse_presentation("< a | b^2 >"), ParseError);
}

TEST(Parser, DuplicateGenerator) {
  EXPECT_THROW(parse_presentation("< a, a | >"), ParseError);
}

TEST(Parser, RoundTripFixpoint) {
  for (const char* text : {
           "< a, b | a^2, b^3, (a*b)^3 >",
           "< x, y | x*y*x = y*x*y >",
           "< a | >",
           "< | >",
           "< a, b, c | [a,b], c^12, a*b^-5*c >",
       }) {
    Presentation p = parse_presentation(text);
    std::string printed = to_text(p);
    Presentation again = parse_presentation(printed);
    EXPECT_EQ(p, again) << text;
    EXPECT_EQ(printed, to_text(again)) << text;
  }
}

TEST(RelationMatrix, KleinBottle) {
  Presentation p = parse_presentation("< a, b | a*b*a*b^-1 >");
  IntMatrix m = relation_matrix(p);
  ASSERT_EQ(m.rows(), 1u);
  ASSERT_EQ(m.cols(), 2u);
  EXPECT_EQ(m.at(0, 0), 2);
  EXPECT_EQ(m.at(0, 1), 0);
}

TEST(RelationMatrix, FreeGroupIsEmpty) {
  Presentation p = parse_presentation("< a, b | >");
  IntMatrix m = relation_matrix(p);
  EXPECT_EQ(m.rows(), 0u);
  EXPECT_EQ(m.cols(), 2u);
}

TEST(RelationMatrix, Trefoil) {
  // x y x y^-1 x^-1 y^-1: exponent sums are (1, -1)
  Presentation p = parse_presentation("< x, y | x*y*x*y^-1*x^-1*y^-1 >");
  IntMatrix m = relation_matrix(p);
  ASSERT_EQ(m.rows(), 1u);
  EXPECT_EQ(m.at(0, 0), 1);
  EXPECT_EQ(m.at(0, 1), -1);
  // rank deficit 1: the abelianization is Z
  AbelianGroupData a = abelian_invariants(m);
  EXPECT_EQ(a.rank, 1u);
  EXPECT_TRUE(a.torsion.empty());
}

TEST(Presentation, RejectsOutOfRangeRelator) {
  EXPECT_THROW(Presentation({"a"}, {Word::generator(1)}), std::invalid_argument);
}
