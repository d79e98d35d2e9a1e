#include "cantor4/digits.hpp"
#include "cantor4/errors.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace cantor4;

TEST(Word4, RejectsLettersOutsideAlphabet) {
  EXPECT_THROW(Word4({0, 4}), ContractError);
  EXPECT_THROW(Word4({-1}), ContractError);
  EXPECT_THROW(Word4{}.then(7), ContractError);
}

TEST(Word4, LengthAndLetters) {
  const Word4 w{2, 1};
  EXPECT_EQ(w.length(), 2u);
  EXPECT_EQ(w.letter(0), 2);
  EXPECT_EQ(w.then(3).letters(), (std::vector<int>{2, 1, 3}));
  EXPECT_TRUE(Word4{}.empty());
}

TEST(CofWord, Examples) {
  EXPECT_EQ(c_of_word(Word4{3}), 3u);
  EXPECT_EQ(c_of_word(Word4{2, 1}), 9u);
  EXPECT_EQ(c_of_word(Word4{}), 0u);
}

TEST(CofWord, MatchesBruteForceOnAllShortWords) {
  for (int len = 0; len <= 5; ++len) {
    for (const auto& s : oracle::all_words(len)) {
      std::vector<int> letters;
      for (char c : s) letters.push_back(c - '0');
      EXPECT_EQ(c_of_word(Word4(letters)), oracle::index_of(s)) << s;
    }
  }
}

TEST(WordOfIndex, Examples) {
  EXPECT_EQ(word_of_index(0), Word4{0});
  EXPECT_EQ(word_of_index(9), (Word4{2, 1}));
  EXPECT_EQ(word_of_index(3), Word4{3});
}

TEST(WordOfIndex, RoundTrip) {
  for (std::uint64_t n = 0; n < 4096; ++n) {
    const Word4 w = word_of_index(n);
    EXPECT_EQ(c_of_word(w), n);
    EXPECT_TRUE(in_X4(w));
  }
}

TEST(WordOfIndex, InvertsExhaustiveEnumeration) {
  for (int len = 1; len <= 4; ++len) {
    for (const auto& s : oracle::all_words(len)) {
      if (len >= 2 && s[0] == '0') continue;
      std::vector<int> letters;
      for (char c : s) letters.push_back(c - '0');
      EXPECT_EQ(word_of_index(oracle::index_of(s)), Word4(letters)) << s;
    }
  }
}

TEST(DigitCounts, Examples) {
  EXPECT_EQ(digit_counts(0), (DigitCounts{0, 0, 0}));
  EXPECT_EQ(digit_counts(5), (DigitCounts{2, 0, 0}));
  EXPECT_EQ(digit_counts(30), (DigitCounts{1, 1, 1}));
}

TEST(DigitCounts, MatchesHistogramAndLengthBound) {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    const auto h = oracle::digit_histogram(n);
    const DigitCounts d = digit_counts(n);
    EXPECT_EQ(d.ones, h[1]);
    EXPECT_EQ(d.twos, h[2]);
    EXPECT_EQ(d.threes, h[3]);
    EXPECT_LE(d.ones + d.twos + d.threes, base4_length(n));
    EXPECT_EQ(base4_length(n), static_cast<int>(oracle::base4_digits(n).size()));
  }
}

TEST(InX4, Examples) {
  EXPECT_TRUE(in_X4(Word4{0}));
  EXPECT_FALSE(in_X4(Word4{0, 1}));
  EXPECT_TRUE(in_X4(Word4{3, 0}));
  EXPECT_FALSE(in_X4(Word4{}));
}

TEST(EnumerateX4, Counts) {
  EXPECT_EQ(enumerate_X4(1).size(), 4u);
  EXPECT_EQ(enumerate_X4(2).size(), 16u);
  EXPECT_EQ(enumerate_X4(4).size(), 256u);
}

TEST(EnumerateX4, MatchesFilteredBruteForce) {
  for (std::size_t max_len = 1; max_len <= 6; ++max_len) {
    std::set<std::uint64_t> expected;
    std::size_t count = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
      for (const auto& s : oracle::all_words(static_cast<int>(len))) {
        if (len >= 2 && s[0] == '0') continue;
        expected.insert(oracle::index_of(s));
        ++count;
      }
    }
    const auto words = enumerate_X4(max_len);
    ASSERT_EQ(words.size(), count);
    ASSERT_EQ(expected.size(), count);  // injective
    for (std::size_t i = 0; i < words.size(); ++i) {
      EXPECT_EQ(c_of_word(words[i]), i);  // image is exactly 0..4^L-1, ascending
      if (words[i].length() >= 2) {
        EXPECT_GE(c_of_word(words[i]), std::uint64_t{1} << (2 * (words[i].length() - 1)));
      }
    }
  }
}

TEST(EnumerateX4, Guards) {
  EXPECT_THROW(enumerate_X4(0), ContractError);
  EXPECT_THROW(enumerate_X4(16), CapacityError);
}

TEST(EnumerateWords, LexicographicAndComplete) {
  const auto words = enumerate_words(3);
  ASSERT_EQ(words.size(), 64u);
  for (std::size_t i = 1; i < words.size(); ++i) EXPECT_LT(words[i - 1], words[i]);
  EXPECT_EQ(enumerate_words(0).size(), 1u);
}
