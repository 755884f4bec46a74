#include "adorn/rewriting.hpp"

#include <gtest/gtest.h>

#include <random>

#include "adorn/coset_table.hpp"
#include "adorn/permutation.hpp"
#include "adorn/presentation.hpp"
#include "adorn/smith.hpp"

using namespace adorn;

namespace {

const char* kQ8 = "< x, y | x^4, x^2*y^-2, y*x*y^-1*x >";

// Image of a point under a word acting through permutations.
std::uint32_t act_word(const std::vector<Permutation>& gens, std::uint32_t point, const Word& w) {
  for (const Letter& l : w.expanded()) {
    const Permutation& p = gens[static_cast<std::size_t>(l.gen)];
    point = l.exp > 0 ? p(point) : p.inverse()(point);
  }
  return point;
}

// Schreier generator words of the stabilizer of point 0 under the action of
// free-group generators mapped to permutations. Generates the full preimage
// subgroup, whose index equals the orbit size of 0.
struct StabilizerWords {
  std::vector<Word> words;
  std::size_t orbit_size = 0;
};

StabilizerWords stabilizer_schreier_words(const std::vector<Permutation>& images) {
  const std::size_t degree = images[0].degree();
  std::vector<Word> rep(degree);
  std::vector<bool> seen(degree, false);
  std::vector<std::uint32_t> queue = {0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint32_t p = queue[head];
    for (std::size_t g = 0; g < images.size(); ++g)
      for (long long sign : {1LL, -1LL}) {
        std::uint32_t q = sign > 0 ? images[g](p) : images[g].inverse()(p);
        if (seen[q]) continue;
        seen[q] = true;
        rep[q] = rep[p] * Word::generator(static_cast<int>(g), sign);
        queue.push_back(q);
      }
  }
  StabilizerWords out;
  out.orbit_size = queue.size();
  for (std::uint32_t p : queue)
    for (std::size_t g = 0; g < images.size(); ++g) {
      std::uint32_t q = images[g](p);
      Word s = rep[p] * Word::generator(static_cast<int>(g)) * rep[q].inverse();
      if (!s.empty()) out.words.push_back(s);
    }
  return out;
}

}  // namespace

TEST(ReidemeisterSchreier, IndexTwoInF2IsFreeRankThree) {
  Presentation f2 = parse_presentation("< a, b | >");
  Word a = Word::generator(0), b = Word::generator(1);
  CosetTable t = todd_coxeter(f2, {b, a.pow(2), a * b * a.inverse()});
  ASSERT_EQ(t.index(), 2u);
  Presentation sub = reidemeister_schreier(t);
  EXPECT_EQ(sub.generator_count(), 3u);  // 2*(2-1)+1
  EXPECT_TRUE(sub.relators().empty());
}

TEST(ReidemeisterSchreier, QuaternionCommutatorSubgroupIsZ2) {
  CosetTable t = coset_table_from_abelianization(parse_presentation(kQ8));
  ASSERT_EQ(t.index(), 4u);
  Presentation sub = reidemeister_schreier(t);
  AbelianGroupData inv = abelian_invariants(relation_matrix(sub));
  EXPECT_EQ(inv.rank, 0u);
  EXPECT_EQ(inv.torsion, (std::vector<Int>{2}));
}

TEST(ReidemeisterSchreier, IndexOneTableKeepsTheGroup) {
  for (const char* text : {"< a, b | a^2, b^3, (a*b)^5 >", "< x, y | x*y^-1 >"}) {
    Presentation p = parse_presentation(text);
    Word a = Word::generator(0), b = Word::generator(1);
    CosetTable t = todd_coxeter(p, {a, b});
    ASSERT_EQ(t.index(), 1u) << text;
    Presentation sub = reidemeister_schreier(t);
    EXPECT_EQ(abelian_invariants(relation_matrix(sub)),
              abelian_invariants(relation_matrix(p)))
        << text;
  }
}

TEST(ReidemeisterSchreier, CommutatorTableIndexMatchesAbelianizationOrder) {
  for (const char* text : {kQ8, "< a, b | a^2, b^3, (a*b)^4 >", "< a | a^12 >",
                           "< a, b | a^4, b^2, (a*b)^2 >"}) {
    Presentation p = parse_presentation(text);
    AbelianGroupData inv = abelian_invariants(relation_matrix(p));
    ASSERT_TRUE(is_finite(inv)) << text;
    CosetTable t = coset_table_from_abelianization(p);
    EXPECT_EQ(Int(t.index()), order(inv)) << text;
  }
}

TEST(ReidemeisterSchreier, NielsenSchreierRankFormula) {
  // random finite-index subgroups of free groups through the full
  // todd_coxeter + reidemeister_schreier pipeline
  std::mt19937 rng(41);
  int checked = 0;
  while (checked < 40) {
    std::size_t rank = 1 + rng() % 3;        // n <= 3
    std::size_t degree = 2 + rng() % 7;      // orbit (index) <= 8
    std::vector<Permutation> images;
    for (std::size_t g = 0; g < rank; ++g) {
      std::vector<std::uint32_t> img(degree);
      for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<std::uint32_t>(i);
      std::shuffle(img.begin(), img.end(), rng);
      images.emplace_back(std::move(img));
    }
    StabilizerWords sw = stabilizer_schreier_words(images);

    std::vector<std::string> names;
    for (std::size_t g = 0; g < rank; ++g) names.push_back("g" + std::to_string(g));
    Presentation free_p(names, {});
    CosetTable t = todd_coxeter(free_p, sw.words);
    ASSERT_EQ(t.index(), sw.orbit_size);

    Presentation sub = reidemeister_schreier(t);
    EXPECT_EQ(sub.generator_count(), sw.orbit_size * (rank - 1) + 1);
    EXPECT_TRUE(sub.relators().empty());
    ++checked;
  }
}

TEST(ReidemeisterSchreier, SubgroupWordsTraceBackToSubgroup) {
  // every Schreier word used as a subgroup generator fixes coset 0
  Presentation p = parse_presentation("< a, b | a^2, b^3, (a*b)^4 >");
  Word b = Word::generator(1);
  CosetTable t = todd_coxeter(p, {b});
  for (std::uint32_t c = 0; c < t.index(); ++c) EXPECT_LT(t.act(c, 0, false), t.index());
  EXPECT_EQ(t.trace(0, b), 0u);
}
