#include "cantor4/frequency.hpp"

#include "cantor4/errors.hpp"

#include <cmath>
#include <limits>

namespace cantor4 {

namespace {

__extension__ typedef __int128 i128;

constexpr int kMaxShift = 62;

Frequency make_checked(i128 num, int shift) {
  while (shift > 0 && (num & 1) == 0) {
    num /= 2;
    --shift;
  }
  if (num == 0) shift = 0;
  if (shift > kMaxShift) throw CapacityError("Frequency: denominator exceeds 2^62");
  if (num > std::numeric_limits<std::int64_t>::max() ||
      num < std::numeric_limits<std::int64_t>::min()) {
    throw CapacityError("Frequency: numerator overflows int64");
  }
  return Frequency::dyadic(static_cast<std::int64_t>(num), shift);
}

}  // namespace

Frequency Frequency::integer(std::int64_t n) { return dyadic(n, 0); }

Frequency Frequency::dyadic(std::int64_t numerator, int shift) {
  if (shift < 0) throw ContractError("Frequency: negative shift");
  while (shift > 0 && (numerator & 1) == 0) {
    numerator /= 2;
    --shift;
  }
  if (numerator == 0) shift = 0;
  if (shift > kMaxShift) throw CapacityError("Frequency: denominator exceeds 2^62");
  Frequency f;
  f.num_ = numerator;
  f.shift_ = shift;
  return f;
}

Frequency Frequency::from_double(double t) {
  if (!std::isfinite(t)) throw DomainError("Frequency: non-finite value");
  if (t == 0.0) return {};
  int exp = 0;
  const double mant = std::frexp(t, &exp);  // t = mant * 2^exp, 0.5 <= |mant| < 1
  auto m = static_cast<std::int64_t>(std::ldexp(mant, 53));
  int shift = 53 - exp;
  if (shift < 0) {
    if (-shift > 9) throw CapacityError("Frequency: |t| too large for int64 numerator");
    return make_checked(static_cast<i128>(m) << (-shift), 0);
  }
  return make_checked(m, shift);
}

double Frequency::to_double() const noexcept {
  return std::ldexp(static_cast<double>(num_), -shift_);
}

Frequency Frequency::dilated(int j) const {
  const i128 num = static_cast<i128>(num_) * 4 + (static_cast<i128>(j) << shift_);
  return make_checked(num, shift_);
}

Frequency Frequency::contracted(int j) const {
  const i128 num = static_cast<i128>(num_) - (static_cast<i128>(j) << shift_);
  return make_checked(num, shift_ + 2);
}

double Frequency::fractional_turns(std::uint64_t numer, int numer_shift) const {
  const int total = shift_ + numer_shift;
  if (total > 120) throw CapacityError("Frequency::fractional_turns: shift too large");
  const i128 prod = static_cast<i128>(num_) * static_cast<i128>(numer);
  if (total == 0) return 0.0;
  const i128 modulus = static_cast<i128>(1) << total;
  i128 r = prod % modulus;
  if (r < 0) r += modulus;
  return std::ldexp(static_cast<double>(r), -total);
}

std::string Frequency::to_string() const {
  if (shift_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/2^" + std::to_string(shift_);
}

Frequency operator+(const Frequency& a, const Frequency& b) {
  const int s = std::max(a.shift_, b.shift_);
  const i128 num = (static_cast<i128>(a.num_) << (s - a.shift_)) +
                   (static_cast<i128>(b.num_) << (s - b.shift_));
  return make_checked(num, s);
}

Frequency operator-(const Frequency& a, const Frequency& b) { return a + (-b); }

Frequency Frequency::operator-() const {
  if (num_ == std::numeric_limits<std::int64_t>::min()) {
    throw CapacityError("Frequency: negation overflows");
  }
  return dyadic(-num_, shift_);
}

std::strong_ordering operator<=>(const Frequency& a, const Frequency& b) {
  const i128 lhs = static_cast<i128>(a.num_) << b.shift_;
  const i128 rhs = static_cast<i128>(b.num_) << a.shift_;
  return lhs <=> rhs;
}

}  // namespace cantor4
