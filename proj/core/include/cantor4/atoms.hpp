#pragma once

#include "cantor4/frequency.hpp"
#include "cantor4/measures.hpp"

#include <compare>
#include <cstdint>
#include <random>
#include <vector>

namespace cantor4 {

/// Cylinder Upsilon_{k_1} o ... o Upsilon_{k_K}(C4 x [0,1]).
///
/// Each level stores one digit pair k = x/2 + 2y (x-digit in {0,2}, y-digit
/// in {0,1}), so k indexes the planar maps Upsilon_0..Upsilon_3 directly.
/// Pair 0 is the outermost map. Pairs are packed two bits each.
class Cylinder {
 public:
  static constexpr int kMaxLevel = 28;

  Cylinder() = default;
  Cylinder(const std::vector<int>& xword, const std::vector<int>& yword);
  static Cylinder from_pairs(const std::vector<int>& pairs);

  int level() const noexcept { return level_; }
  std::uint64_t bits() const noexcept { return bits_; }
  int pair(int i) const noexcept { return static_cast<int>((bits_ >> (2 * i)) & 3u); }
  int xdigit(int i) const noexcept { return 2 * (pair(i) & 1); }
  int ydigit(int i) const noexcept { return pair(i) >> 1; }
  std::vector<int> xword() const;
  std::vector<int> yword() const;

  // Upsilon_k applied on the outside (new pair 0).
  Cylinder prepended(int k) const;
  // Drops pair 0, i.e. applies R.
  Cylinder tail() const;
  // Refinement child: pair k appended at the deepest level.
  Cylinder child(int k) const;
  Cylinder prefix(int len) const;
  bool is_prefix_of(const Cylinder& other) const noexcept;

  // Integer X with sum_i xdigit_i 4^-i = X / 4^level.
  std::uint64_t x_offset_numerator() const noexcept;
  double x_offset() const noexcept;

  // Membership from coordinates; exact for dyadic points.
  bool contains_point(double x, double y) const noexcept;

  // Unique 64-bit key (level in the top bits).
  std::uint64_t key() const noexcept { return (static_cast<std::uint64_t>(level_) << 58) | bits_; }

  friend bool operator==(const Cylinder&, const Cylinder&) = default;
  friend auto operator<=>(const Cylinder& a, const Cylinder& b) {
    if (auto c = a.level_ <=> b.level_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
  int level_ = 0;
};

/// coeff * e^{2 pi i freq x} * indicator(cyl)(x, y).
struct Atom {
  cplx coeff{1.0, 0.0};
  Frequency freq;
  Cylinder cyl;

  Atom() = default;
  Atom(cplx c, Frequency f, Cylinder cylinder);
  Atom(cplx c, double f, const std::vector<int>& xword, const std::vector<int>& yword);

  int level() const noexcept { return cyl.level(); }
};

/// Finite sum of atoms; a function on C4 x [0,1].
class FunctionSum {
 public:
  FunctionSum() = default;
  explicit FunctionSum(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }
  int max_level() const noexcept;

  void push_back(const Atom& a) { atoms_.push_back(a); }

  friend FunctionSum operator+(const FunctionSum& f, const FunctionSum& g);
  friend FunctionSum operator-(const FunctionSum& f, const FunctionSum& g);
  friend FunctionSum operator*(cplx s, const FunctionSum& f);

 private:
  std::vector<Atom> atoms_;
};

inline constexpr double kDefaultMergeTolerance = 1e-15;

FunctionSum exponential(double t);
FunctionSum exponential(const Frequency& t);
// The constant function 1.
inline FunctionSum one() { return exponential(Frequency{}); }

/// <F, G> in L^2(mu_4 x lambda), evaluated exactly atom pair by atom pair.
///
/// Disjoint cylinders contribute 0. Otherwise, with (u, v) the deeper of
/// the two cylinders at level K and delta the frequency difference, the pair
/// contributes c_F conj(c_G) 2^-K * 2^-K e^{2 pi i delta offset(u)}
/// mu4_hat(delta / 4^K). Terms are accumulated in input order.
cplx inner_product(const FunctionSum& f, const FunctionSum& g,
                   const TransformEvaluator& cfg = TransformEvaluator{});

double norm(const FunctionSum& f, const TransformEvaluator& cfg = TransformEvaluator{});

// ||F - G||, with both refined to a common level and equal keys merged first so
// that cancellation happens in the coefficients, not in the quadratic form.
double distance(const FunctionSum& f, const FunctionSum& g,
                const TransformEvaluator& cfg = TransformEvaluator{});

// Same function with every atom split down to exactly `level`.
FunctionSum refine(const FunctionSum& f, int level);

// Sorted by (freq, cylinder); equal keys merged; |coeff| <= merge_tol dropped.
FunctionSum normalize(const FunctionSum& f, double merge_tol = kDefaultMergeTolerance);

// Pointwise value at (x, y).
cplx evaluate(const FunctionSum& f, double x, double y);

struct RandomSumOptions {
  int max_level = 2;
  bool exact_level = false;  // every atom at max_level instead of a random level <= max_level
  int min_atoms = 1;
  int max_atoms = 6;
  int min_freq = -8;
  int max_freq = 8;
  // |coeff| <= coeff_bound / atom_count, so that sup |F| <= coeff_bound.
  double coeff_bound = 1.0;
};

// Random sum with integer frequencies drawn uniformly from [min_freq, max_freq].
FunctionSum random_function_sum(std::mt19937_64& rng, const RandomSumOptions& opts = {});

}  // namespace cantor4
