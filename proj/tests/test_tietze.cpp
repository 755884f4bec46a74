#include "adorn/tietze.hpp"

#include <gtest/gtest.h>

#include <random>

#include "adorn/presentation.hpp"
#include "adorn/smith.hpp"

using namespace adorn;

namespace {

long long total_length(const Presentation& p) {
  long long n = 0;
  for (const Word& r : p.relators()) n += r.length();
  return n;
}

Presentation random_presentation_raw(std::mt19937& rng, int ngens, int nrels, int maxlen) {
  std::uniform_int_distribution<int> gen(0, ngens - 1);
  std::uniform_int_distribution<int> exp(-2, 2);
  std::uniform_int_distribution<int> len(0, maxlen);
  std::vector<std::string> names;
  for (int i = 0; i < ngens; ++i) names.push_back("g" + std::to_string(i));
  std::vector<Word> rels;
  for (int i = 0; i < nrels; ++i) {
    std::vector<Letter> raw;
    int l = len(rng);
    for (int j = 0; j < l; ++j) {
      int e = exp(rng);
      if (e == 0) e = 1;
      raw.push_back({gen(rng), e});
    }
    rels.emplace_back(raw);
  }
  return Presentation(names, rels);
}

}  // namespace

TEST(Tietze, TrivializesFullyKilledGenerators) {
  Presentation p = tietze_simplify(parse_presentation("< a, b | a, b >"));
  EXPECT_EQ(p.generator_count(), 0u);
  EXPECT_TRUE(p.relators().empty());
  EXPECT_EQ(to_text(p), "<  |  >");
}

TEST(Tietze, SingleGeneratorKilled) {
  Presentation p = tietze_simplify(parse_presentation("< a | a^1 >"));
  EXPECT_EQ(p.generator_count(), 0u);
}

TEST(Tietze, LengthTwoPivot) {
  // b = a, leaving an infinite cyclic presentation
  Presentation before = parse_presentation("< a, b | b*a^-1 >");
  AbelianGroupData inv_before = abelian_invariants(relation_matrix(before));
  Presentation p = tietze_simplify(before);
  EXPECT_EQ(p.generator_count(), 1u);
  EXPECT_TRUE(p.relators().empty());
  AbelianGroupData inv_after = abelian_invariants(relation_matrix(p));
  EXPECT_EQ(inv_before, inv_after);
  EXPECT_EQ(inv_after.rank, 1u);
}

TEST(Tietze, DropsDuplicatesRotationsAndInverses) {
  // a*b, its inverse, and a rotation all present the same normal closure
  Presentation p = tietze_simplify(
      parse_presentation("< a, b, c | a*b*c, c*a*b, c^-1*b^-1*a^-1 >"));
  EXPECT_EQ(p.relators().size(), 1u);
}

TEST(Tietze, ZeroBudgetIsIdentity) {
  Presentation p = parse_presentation("< a, b | a, b >");
  EXPECT_EQ(tietze_simplify(p, 0), p);
}

TEST(Tietze, PreservesAbelianInvariantsAndNeverGrows) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    Presentation p = random_presentation_raw(rng, 3, 4, 6);
    Presentation q = tietze_simplify(p);
    EXPECT_LE(total_length(q), total_length(p));
    EXPECT_EQ(abelian_invariants(relation_matrix(p)), abelian_invariants(relation_matrix(q)));
  }
}

TEST(Tietze, CascadingElimination) {
  // c = b, b = a, then a^6 survives on one generator
  Presentation p = tietze_simplify(parse_presentation("< a, b, c | c*b^-1, b*a^-1, c^6 >"));
  EXPECT_EQ(p.generator_count(), 1u);
  ASSERT_EQ(p.relators().size(), 1u);
  EXPECT_EQ(p.relators()[0].length(), 6);
}
