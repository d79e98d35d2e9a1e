#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cantor4 {

/// A finite word over {0,1,2,3}.
///
/// Letters are stored in application order: letter(0) is j_1, the first
/// isometry applied, and letter(K-1) is j_K, the last. The empty word is the
/// identity composition.
class Word4 {
 public:
  Word4() = default;
  Word4(std::initializer_list<int> letters);
  explicit Word4(std::vector<int> letters);

  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int letter(std::size_t k) const { return letters_.at(k); }
  const std::vector<int>& letters() const noexcept { return letters_; }

  // Word with `j` applied after every existing letter.
  Word4 then(int j) const;

  std::string to_string() const;

  friend bool operator==(const Word4&, const Word4&) = default;
  friend auto operator<=>(const Word4&, const Word4&) = default;

 private:
  std::vector<int> letters_;
};

struct DigitCounts {
  int ones = 0;
  int twos = 0;
  int threes = 0;
  friend bool operator==(const DigitCounts&, const DigitCounts&) = default;
};

// Longest word whose index still fits in uint64_t.
inline constexpr std::size_t kMaxWordLength = 31;

// Sum of j_k * 4^(K-k); 0 for the empty word.
std::uint64_t c_of_word(const Word4& word);

// Inverse of c_of_word restricted to X4. Index 0 maps to the one-letter word (0).
Word4 word_of_index(std::uint64_t n);

DigitCounts digit_counts(std::uint64_t n);

// Number of base-4 digits of n (1 for n = 0).
int base4_length(std::uint64_t n);

bool in_X4(const Word4& word);

// All words of X4 with length <= max_len, ascending in c_of_word.
std::vector<Word4> enumerate_X4(std::size_t max_len);

// Every word over {0,1,2,3} of length exactly `len`, in lexicographic order
// of (j_1, ..., j_K).
std::vector<Word4> enumerate_words(std::size_t len);

}  // namespace cantor4
