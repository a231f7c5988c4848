#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>
#include <string>

#include "dyck4d/enumeration.hpp"
#include "oracle.hpp"

using namespace dyck4d;

TEST(Catalan, SmallValuesMatchBruteForce) {
  EXPECT_EQ(catalan(0), 1);
  EXPECT_EQ(catalan(3), 5);
  EXPECT_EQ(catalan(6), 132);
  for (unsigned n = 0; n <= 9; ++n) ASSERT_EQ(catalan(n), oracle::count_balanced(n)) << n;
}

TEST(Catalan, ConvolutionRecurrence) {
  for (std::size_t n = 0; n < 30; ++n) {
    BigInt sum = 0;
    for (std::size_t k = 0; k <= n; ++k) sum += catalan(k) * catalan(n - k);
    ASSERT_EQ(catalan(n + 1), sum) << n;
  }
}

TEST(EnumerateWords, Examples) {
  const auto one = enumerate_words(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(render_word(one[0]), "()");
  EXPECT_EQ(render_word(enumerate_words(3).front()), "((()))");
  EXPECT_EQ(enumerate_words(4).size(), 14u);
  const auto zero = enumerate_words(0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].empty());
}

TEST(EnumerateWords, EqualsTheFilteredBruteForceList) {
  for (unsigned n = 0; n <= 10; ++n) {
    std::vector<std::string> got;
    for (const DyckWord& w : enumerate_words(n)) got.push_back(render_word(w));
    ASSERT_EQ(got, oracle::balanced_strings(n)) << n;
  }
}

TEST(EnumerateWords, StrictlyIncreasingWithoutDuplicates) {
  for (std::size_t n = 0; n <= 10; ++n) {
    const auto words = enumerate_words(n);
    ASSERT_EQ(words.size(), catalan(n));
    std::set<std::string> seen;
    for (std::size_t k = 0; k < words.size(); ++k) {
      const std::string s = render_word(words[k]);
      ASSERT_TRUE(seen.insert(s).second);
      ASSERT_EQ(parse_word(s), words[k]);
      if (k) {
        ASSERT_LT(render_word(words[k - 1]), s);
        ASSERT_LT(words[k - 1], words[k]);
      }
    }
  }
}

TEST(WordEnumerator, IsPullDriven) {
  WordEnumerator gen(2);
  EXPECT_EQ(render_word(*gen.next()), "(())");
  EXPECT_EQ(render_word(*gen.next()), "()()");
  EXPECT_FALSE(gen.next().has_value());
  EXPECT_FALSE(gen.next().has_value());
}

TEST(Rank, Examples) {
  EXPECT_EQ(render_word(unrank({0}, 3)), "((()))");
  EXPECT_EQ(rank(parse_word("((()))")).value, 0);
  EXPECT_EQ(rank(parse_word("()()()")).value, 4);
  EXPECT_EQ(rank(DyckWord{}).value, 0);
  try {
    unrank({catalan(3)}, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RankOutOfRange);
  }
  EXPECT_THROW(unrank({-1}, 3), Error);
}

TEST(Rank, ExhaustiveAgainstEnumerationOrder) {
  for (std::size_t n = 0; n <= 8; ++n) {
    const Ranker ranker(n);
    const auto words = enumerate_words(n);
    for (std::size_t k = 0; k < words.size(); ++k) {
      ASSERT_EQ(ranker.rank(words[k]).value, k);
      ASSERT_EQ(ranker.unrank({k}), words[k]);
    }
  }
}

TEST(Rank, RandomRoundTripUpToSixty) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = seed % 61;
    const Ranker ranker(n);
    const Rank r = sample_rank(n, seed);
    ASSERT_LT(r.value, catalan(n));
    const DyckWord w = ranker.unrank(r);
    ASSERT_EQ(w.half_length(), n);
    ASSERT_EQ(ranker.rank(w), r);
    ASSERT_EQ(ranker.unrank(ranker.rank(w)), w);
  }
}

TEST(SampleUniform, Deterministic) {
  EXPECT_TRUE(sample_uniform(0, 12345).empty());
  EXPECT_EQ(sample_uniform(10, 7), sample_uniform(10, 7));
  EXPECT_EQ(sample_uniform(50, 99), sample_uniform(50, 99));
  EXPECT_EQ(sample_uniform(10, 7).half_length(), 10u);
}

// 14,000 draws over the 14 words of half-length 4: every count within five
// standard deviations of 1000, and the chi-square statistic below its
// 1e-6 upper quantile for 13 degrees of freedom (52.75).
TEST(SampleUniform, UniformOverHalfLengthFour) {
  std::map<std::string, int> counts;
  const int draws = 14000;
  for (int s = 0; s < draws; ++s) ++counts[render_word(sample_uniform(4, static_cast<std::uint64_t>(s)))];
  ASSERT_EQ(counts.size(), 14u);
  const double expected = draws / 14.0;
  const double sigma = std::sqrt(draws * (1.0 / 14) * (13.0 / 14));
  double chi2 = 0;
  for (const auto& [w, c] : counts) {
    EXPECT_LE(std::abs(c - expected), 5 * sigma) << w;
    chi2 += (c - expected) * (c - expected) / expected;
  }
  EXPECT_LT(chi2, 52.75) << chi2;
}
