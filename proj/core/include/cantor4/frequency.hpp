#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace cantor4 {

/// Exact dyadic rational numerator / 2^shift used as an exponential frequency.
///
/// Every finite double is dyadic, so real inputs convert exactly; the maps
/// t -> 4t + j and t -> (t - j)/4 applied by the Cuntz isometries stay exact,
/// which makes atom merging a bitwise key comparison. Arithmetic that would
/// leave the int64 / shift <= 62 range throws CapacityError.
class Frequency {
 public:
  constexpr Frequency() = default;

  static Frequency integer(std::int64_t n);
  static Frequency from_double(double t);
  // numerator / 2^shift, canonicalized.
  static Frequency dyadic(std::int64_t numerator, int shift);

  double to_double() const noexcept;
  std::int64_t numerator() const noexcept { return num_; }
  int shift() const noexcept { return shift_; }
  bool is_integer() const noexcept { return shift_ == 0; }

  // 4t + j
  Frequency dilated(int j) const;
  // (t - j) / 4
  Frequency contracted(int j) const;

  // Fractional part of t * numer / 2^numer_shift, in [0, 1). Reduced in
  // integer arithmetic so that exact multiples of a full turn give exactly 0.
  double fractional_turns(std::uint64_t numer, int numer_shift) const;

  std::string to_string() const;

  friend Frequency operator+(const Frequency& a, const Frequency& b);
  friend Frequency operator-(const Frequency& a, const Frequency& b);
  Frequency operator-() const;

  friend bool operator==(const Frequency&, const Frequency&) = default;
  friend std::strong_ordering operator<=>(const Frequency& a, const Frequency& b);

 private:
  std::int64_t num_ = 0;
  int shift_ = 0;
};

}  // namespace cantor4
