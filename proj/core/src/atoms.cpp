#include "cantor4/atoms.hpp"

#include "cantor4/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_map>

namespace cantor4 {

namespace {

void check_pair(int k) {
  if (k < 0 || k > 3) throw ContractError("digit pair out of range: " + std::to_string(k));
}

void check_level(int level) {
  if (level > Cylinder::kMaxLevel) {
    throw CapacityError("cylinder level exceeds " + std::to_string(Cylinder::kMaxLevel));
  }
}

using CylinderIndex = std::unordered_map<std::uint64_t, std::vector<std::size_t>>;

CylinderIndex index_by_cylinder(const FunctionSum& f) {
  CylinderIndex idx;
  idx.reserve(f.size() * 2);
  for (std::size_t i = 0; i < f.size(); ++i) idx[f.atoms()[i].cyl.key()].push_back(i);
  return idx;
}

// Memo of mu4_hat(delta / 4^K); within one inner product most pairs share
// the same (delta, K).
class Mu4Memo {
 public:
  explicit Mu4Memo(const TransformEvaluator& cfg) : cfg_(cfg) {}
  cplx operator()(double arg) {
    const auto key = std::bit_cast<std::uint64_t>(arg);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const cplx v = mu4_hat(arg, cfg_);
    cache_.emplace(key, v);
    return v;
  }

 private:
  const TransformEvaluator& cfg_;
  std::unordered_map<std::uint64_t, cplx> cache_;
};

cplx pair_integral(const Atom& a, const Atom& b, const Cylinder& deeper, Mu4Memo& mu) {
  const Frequency delta = a.freq - b.freq;
  const int level = deeper.level();
  const double turns = delta.fractional_turns(deeper.x_offset_numerator(), 2 * level);
  const cplx phase{cospi(2.0 * turns), sinpi(2.0 * turns)};
  const double mass = std::ldexp(1.0, -2 * level);  // 2^-K (y) times 2^-K (x)
  return a.coeff * std::conj(b.coeff) * mass * phase *
         mu(std::ldexp(delta.to_double(), -2 * level));
}

}  // namespace

Cylinder::Cylinder(const std::vector<int>& xword, const std::vector<int>& yword) {
  if (xword.size() != yword.size()) {
    throw ContractError("Cylinder: x and y words must have equal length");
  }
  check_level(static_cast<int>(xword.size()));
  for (std::size_t i = 0; i < xword.size(); ++i) {
    if (xword[i] != 0 && xword[i] != 2) throw ContractError("Cylinder: x-digit must be 0 or 2");
    if (yword[i] != 0 && yword[i] != 1) throw ContractError("Cylinder: y-digit must be 0 or 1");
    const auto k = static_cast<std::uint64_t>(xword[i] / 2 + 2 * yword[i]);
    bits_ |= k << (2 * i);
  }
  level_ = static_cast<int>(xword.size());
}

Cylinder Cylinder::from_pairs(const std::vector<int>& pairs) {
  check_level(static_cast<int>(pairs.size()));
  Cylinder c;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    check_pair(pairs[i]);
    c.bits_ |= static_cast<std::uint64_t>(pairs[i]) << (2 * i);
  }
  c.level_ = static_cast<int>(pairs.size());
  return c;
}

std::vector<int> Cylinder::xword() const {
  std::vector<int> w(level_);
  for (int i = 0; i < level_; ++i) w[i] = xdigit(i);
  return w;
}

std::vector<int> Cylinder::yword() const {
  std::vector<int> w(level_);
  for (int i = 0; i < level_; ++i) w[i] = ydigit(i);
  return w;
}

Cylinder Cylinder::prepended(int k) const {
  check_pair(k);
  check_level(level_ + 1);
  Cylinder c;
  c.bits_ = (bits_ << 2) | static_cast<std::uint64_t>(k);
  c.level_ = level_ + 1;
  return c;
}

Cylinder Cylinder::tail() const {
  if (level_ == 0) throw ContractError("Cylinder::tail of the level-0 cylinder");
  Cylinder c;
  c.bits_ = bits_ >> 2;
  c.level_ = level_ - 1;
  return c;
}

Cylinder Cylinder::child(int k) const {
  check_pair(k);
  check_level(level_ + 1);
  Cylinder c;
  c.bits_ = bits_ | (static_cast<std::uint64_t>(k) << (2 * level_));
  c.level_ = level_ + 1;
  return c;
}

Cylinder Cylinder::prefix(int len) const {
  if (len < 0 || len > level_) throw ContractError("Cylinder::prefix length out of range");
  Cylinder c;
  c.bits_ = bits_ & ((std::uint64_t{1} << (2 * len)) - 1);
  c.level_ = len;
  return c;
}

bool Cylinder::is_prefix_of(const Cylinder& other) const noexcept {
  if (level_ > other.level_) return false;
  const std::uint64_t mask = (std::uint64_t{1} << (2 * level_)) - 1;
  return (other.bits_ & mask) == bits_;
}

std::uint64_t Cylinder::x_offset_numerator() const noexcept {
  std::uint64_t x = 0;
  for (int i = 0; i < level_; ++i) x = 4 * x + static_cast<std::uint64_t>(xdigit(i));
  return x;
}

double Cylinder::x_offset() const noexcept {
  return std::ldexp(static_cast<double>(x_offset_numerator()), -2 * level_);
}

bool Cylinder::contains_point(double x, double y) const noexcept {
  for (int i = 0; i < level_; ++i) {
    x *= 4.0;
    y *= 2.0;
    const double dx = std::floor(x);
    const double dy = std::floor(y);
    if (static_cast<int>(dx) != xdigit(i) || static_cast<int>(dy) != ydigit(i)) return false;
    x -= dx;
    y -= dy;
  }
  return true;
}

Atom::Atom(cplx c, Frequency f, Cylinder cylinder) : coeff(c), freq(f), cyl(cylinder) {
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
    throw DomainError("Atom: non-finite coefficient");
  }
}

Atom::Atom(cplx c, double f, const std::vector<int>& xword, const std::vector<int>& yword)
    : Atom(c, Frequency::from_double(f), Cylinder(xword, yword)) {}

int FunctionSum::max_level() const noexcept {
  int level = 0;
  for (const auto& a : atoms_) level = std::max(level, a.level());
  return level;
}

FunctionSum operator+(const FunctionSum& f, const FunctionSum& g) {
  std::vector<Atom> atoms = f.atoms_;
  atoms.insert(atoms.end(), g.atoms_.begin(), g.atoms_.end());
  return FunctionSum(std::move(atoms));
}

FunctionSum operator-(const FunctionSum& f, const FunctionSum& g) { return f + cplx{-1.0, 0.0} * g; }

FunctionSum operator*(cplx s, const FunctionSum& f) {
  std::vector<Atom> atoms = f.atoms_;
  for (auto& a : atoms) a.coeff *= s;
  return FunctionSum(std::move(atoms));
}

FunctionSum exponential(double t) { return exponential(Frequency::from_double(t)); }

FunctionSum exponential(const Frequency& t) {
  return FunctionSum({Atom(cplx{1.0, 0.0}, t, Cylinder{})});
}

cplx inner_product(const FunctionSum& f, const FunctionSum& g, const TransformEvaluator& cfg) {
  if (f.empty() || g.empty()) return {0.0, 0.0};
  const CylinderIndex g_index = index_by_cylinder(g);
  const CylinderIndex f_index = index_by_cylinder(f);
  Mu4Memo mu(cfg);
  cplx sum{0.0, 0.0};

  // Pairs where the G atom's cylinder contains (or equals) the F atom's.
  for (const Atom& a : f.atoms()) {
    for (int len = 0; len <= a.level(); ++len) {
      auto it = g_index.find(a.cyl.prefix(len).key());
      if (it == g_index.end()) continue;
      for (std::size_t j : it->second) sum += pair_integral(a, g.atoms()[j], a.cyl, mu);
    }
  }
  // Pairs where the F atom's cylinder strictly contains the G atom's.
  for (const Atom& b : g.atoms()) {
    for (int len = 0; len < b.level(); ++len) {
      auto it = f_index.find(b.cyl.prefix(len).key());
      if (it == f_index.end()) continue;
      for (std::size_t i : it->second) sum += pair_integral(f.atoms()[i], b, b.cyl, mu);
    }
  }
  return sum;
}

double norm(const FunctionSum& f, const TransformEvaluator& cfg) {
  return std::sqrt(std::max(0.0, inner_product(f, f, cfg).real()));
}

double distance(const FunctionSum& f, const FunctionSum& g, const TransformEvaluator& cfg) {
  const FunctionSum d = f - g;
  return norm(normalize(refine(d, d.max_level()), 0.0), cfg);
}

FunctionSum refine(const FunctionSum& f, int level) {
  check_level(level);
  std::vector<Atom> out;
  std::vector<Atom> stack;
  for (const Atom& a : f.atoms()) {
    if (a.level() > level) {
      throw ContractError("refine: atom at level " + std::to_string(a.level()) +
                          " is deeper than target level " + std::to_string(level));
    }
    stack.push_back(a);
    while (!stack.empty()) {
      Atom cur = stack.back();
      stack.pop_back();
      if (cur.level() == level) {
        out.push_back(cur);
        continue;
      }
      for (int k = 3; k >= 0; --k) stack.emplace_back(cur.coeff, cur.freq, cur.cyl.child(k));
    }
  }
  return FunctionSum(std::move(out));
}

FunctionSum normalize(const FunctionSum& f, double merge_tol) {
  if (merge_tol < 0.0) throw ContractError("normalize: merge_tol must be >= 0");
  std::vector<Atom> atoms = f.atoms();
  std::stable_sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
    if (auto c = a.freq <=> b.freq; c != 0) return c < 0;
    return a.cyl < b.cyl;
  });
  std::vector<Atom> out;
  out.reserve(atoms.size());
  for (const Atom& a : atoms) {
    if (!out.empty() && out.back().freq == a.freq && out.back().cyl == a.cyl) {
      out.back().coeff += a.coeff;
    } else {
      out.push_back(a);
    }
  }
  std::erase_if(out, [merge_tol](const Atom& a) { return std::abs(a.coeff) <= merge_tol; });
  return FunctionSum(std::move(out));
}

cplx evaluate(const FunctionSum& f, double x, double y) {
  cplx value{0.0, 0.0};
  for (const Atom& a : f.atoms()) {
    if (!a.cyl.contains_point(x, y)) continue;
    const double arg = 2.0 * std::numbers::pi * a.freq.to_double() * x;
    value += a.coeff * cplx{std::cos(arg), std::sin(arg)};
  }
  return value;
}

FunctionSum random_function_sum(std::mt19937_64& rng, const RandomSumOptions& opts) {
  if (opts.max_level < 0 || opts.min_atoms < 1 || opts.max_atoms < opts.min_atoms ||
      opts.max_freq < opts.min_freq) {
    throw ContractError("random_function_sum: inconsistent options");
  }
  check_level(opts.max_level);
  std::uniform_int_distribution<int> count_dist(opts.min_atoms, opts.max_atoms);
  std::uniform_int_distribution<int> level_dist(0, opts.max_level);
  std::uniform_int_distribution<int> pair_dist(0, 3);
  std::uniform_int_distribution<int> freq_dist(opts.min_freq, opts.max_freq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const int count = count_dist(rng);
  std::vector<Atom> atoms;
  atoms.reserve(count);
  for (int n = 0; n < count; ++n) {
    const int level = opts.exact_level ? opts.max_level : level_dist(rng);
    std::vector<int> pairs(level);
    for (auto& k : pairs) k = pair_dist(rng);
    const double r = opts.coeff_bound * unit(rng) / count;
    const double theta = 2.0 * std::numbers::pi * unit(rng);
    atoms.emplace_back(std::polar(r, theta), Frequency::integer(freq_dist(rng)),
                       Cylinder::from_pairs(pairs));
  }
  return FunctionSum(std::move(atoms));
}

}  // namespace cantor4
