#include "cantor4/digits.hpp"

#include "cantor4/errors.hpp"

#include <algorithm>

namespace cantor4 {

namespace {

void check_letter(int j) {
  if (j < 0 || j > 3) {
    throw ContractError("Word4 letter out of range {0,1,2,3}: " + std::to_string(j));
  }
}

}  // namespace

Word4::Word4(std::initializer_list<int> letters) : letters_(letters) {
  std::for_each(letters_.begin(), letters_.end(), check_letter);
}

Word4::Word4(std::vector<int> letters) : letters_(std::move(letters)) {
  std::for_each(letters_.begin(), letters_.end(), check_letter);
}

Word4 Word4::then(int j) const {
  check_letter(j);
  Word4 out = *this;
  out.letters_.push_back(j);
  return out;
}

std::string Word4::to_string() const {
  if (letters_.empty()) return "()";
  std::string s;
  s.reserve(letters_.size());
  for (int j : letters_) s.push_back(static_cast<char>('0' + j));
  return s;
}

std::uint64_t c_of_word(const Word4& word) {
  if (word.length() > kMaxWordLength) {
    throw CapacityError("word too long for a 64-bit index: " + std::to_string(word.length()));
  }
  std::uint64_t n = 0;
  for (int j : word.letters()) n = 4 * n + static_cast<std::uint64_t>(j);
  return n;
}

Word4 word_of_index(std::uint64_t n) {
  std::vector<int> reversed;
  do {
    reversed.push_back(static_cast<int>(n % 4));
    n /= 4;
  } while (n != 0);
  return Word4(std::vector<int>(reversed.rbegin(), reversed.rend()));
}

DigitCounts digit_counts(std::uint64_t n) {
  DigitCounts counts;
  while (n != 0) {
    switch (n % 4) {
      case 1: ++counts.ones; break;
      case 2: ++counts.twos; break;
      case 3: ++counts.threes; break;
      default: break;
    }
    n /= 4;
  }
  return counts;
}

int base4_length(std::uint64_t n) {
  int len = 1;
  while (n >= 4) {
    n /= 4;
    ++len;
  }
  return len;
}

bool in_X4(const Word4& word) {
  if (word.length() == 1) return true;
  return word.length() >= 2 && word.letter(0) != 0;
}

std::vector<Word4> enumerate_X4(std::size_t max_len) {
  if (max_len == 0) throw ContractError("enumerate_X4 requires max_len >= 1");
  if (max_len > kMaxWordLength / 2) {
    // 4^max_len words would not fit in memory long before the index overflows.
    throw CapacityError("enumerate_X4: max_len " + std::to_string(max_len) + " exceeds 15");
  }
  const std::uint64_t count = std::uint64_t{1} << (2 * max_len);
  std::vector<Word4> words;
  words.reserve(count);
  for (std::uint64_t n = 0; n < count; ++n) words.push_back(word_of_index(n));
  return words;
}

std::vector<Word4> enumerate_words(std::size_t len) {
  if (len > kMaxWordLength / 2) throw CapacityError("enumerate_words: length exceeds 15");
  const std::uint64_t count = std::uint64_t{1} << (2 * len);
  std::vector<Word4> words;
  words.reserve(count);
  for (std::uint64_t n = 0; n < count; ++n) {
    std::vector<int> letters(len);
    std::uint64_t m = n;
    for (std::size_t k = len; k-- > 0;) {
      letters[k] = static_cast<int>(m % 4);
      m /= 4;
    }
    words.emplace_back(std::move(letters));
  }
  return words;
}

}  // namespace cantor4
