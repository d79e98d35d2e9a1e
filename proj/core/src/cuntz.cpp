#include "cantor4/cuntz.hpp"

#include "cantor4/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace cantor4 {

namespace {

void check_index(int j) {
  if (j < 0 || j > 3) throw ContractError("Cuntz generator index out of range: " + std::to_string(j));
}

cplx turn(double frac) { return {cospi(2.0 * frac), sinpi(2.0 * frac)}; }

double relative(double deviation, double scale) { return scale > 0.0 ? deviation / scale : deviation; }

}  // namespace

CuntzRep::CuntzRep(FilterBank bank, TransformEvaluator cfg) : bank_(std::move(bank)), cfg_(cfg) {
  if (!bank_.admissible()) {
    throw ContractError("CuntzRep requires an admissible filter bank");
  }
}

FunctionSum apply_S(const CuntzRep& rep, int j, const FunctionSum& f) {
  check_index(j);
  const auto& a = rep.bank().A();
  std::vector<Atom> out;
  out.reserve(4 * f.size());
  for (const Atom& atom : f.atoms()) {
    const Frequency freq = atom.freq.dilated(j);
    // f(R(x, y)) = e^{2 pi i t (4x - d)} on the cylinder with x-digit d.
    const cplx right_phase = std::conj(turn(atom.freq.fractional_turns(2, 0)));
    for (int k = 0; k < 4; ++k) {
      const cplx phase = (k & 1) ? right_phase : cplx{1.0, 0.0};
      out.emplace_back(2.0 * a(j, k) * atom.coeff * phase, freq, atom.cyl.prepended(k));
    }
  }
  return normalize(FunctionSum(std::move(out)));
}

FunctionSum apply_S_star(const CuntzRep& rep, int j, const FunctionSum& f) {
  check_index(j);
  const auto& a = rep.bank().A();
  std::vector<Atom> out;
  out.reserve(f.size());
  for (const Atom& atom : f.atoms()) {
    const Frequency freq = atom.freq.contracted(j);
    // e^{i pi (t - j)} = e^{2 pi i * 2 (t - j)/4}
    const cplx right_phase = turn(freq.fractional_turns(2, 0));
    if (atom.level() == 0) {
      cplx c{0.0, 0.0};
      for (int k = 0; k < 4; ++k) c += std::conj(a(j, k)) * ((k & 1) ? right_phase : cplx{1.0, 0.0});
      out.emplace_back(0.5 * c * atom.coeff, freq, atom.cyl);
    } else {
      const int k = atom.cyl.pair(0);
      const cplx phase = (k & 1) ? right_phase : cplx{1.0, 0.0};
      out.emplace_back(0.5 * std::conj(a(j, k)) * phase * atom.coeff, freq, atom.cyl.tail());
    }
  }
  return normalize(FunctionSum(std::move(out)));
}

FunctionSum apply_word(const CuntzRep& rep, const Word4& word, const FunctionSum& f) {
  FunctionSum g = f;
  for (int j : word.letters()) g = apply_S(rep, j, g);
  return g;
}

FunctionSum s_word_one(const CuntzRep& rep, const Word4& word) {
  if (word.empty()) throw ContractError("s_word_one requires a non-empty word");
  const int len = static_cast<int>(word.length());
  if (len > 2 * kMaxGramWordLength) {
    throw CapacityError("s_word_one: word length " + std::to_string(len) + " exceeds 10");
  }
  const auto& a = rep.bank().A();
  const Frequency freq = Frequency::integer(static_cast<std::int64_t>(c_of_word(word)));
  const std::uint64_t count = std::uint64_t{1} << (2 * len);
  std::vector<Atom> atoms;
  atoms.reserve(count);
  std::vector<int> pairs(len);
  for (std::uint64_t code = 0; code < count; ++code) {
    cplx coeff{1.0, 0.0};
    for (int p = 0; p < len; ++p) pairs[p] = static_cast<int>((code >> (2 * p)) & 3u);
    // Letter j_k (1-based k) was applied k-th, so its pair sits at depth K - k.
    for (int k = 1; k <= len; ++k) coeff *= 2.0 * a(word.letter(k - 1), pairs[len - k]);
    atoms.emplace_back(coeff, freq, Cylinder::from_pairs(pairs));
  }
  // Zero coefficients are kept so the result always has 4^K atoms.
  std::sort(atoms.begin(), atoms.end(), [](const Atom& x, const Atom& y) { return x.cyl < y.cyl; });
  return FunctionSum(std::move(atoms));
}

CuntzReport verify_cuntz(const CuntzRep& rep, int level, int trials, std::uint64_t seed,
                         double tol) {
  if (trials < 1) throw ContractError("verify_cuntz: trials must be >= 1");
  if (level < 0 || level > kMaxCuntzCheckLevel) {
    throw CapacityError("verify_cuntz: level must be in [0, 4]");
  }
  CuntzReport rep_out;
  rep_out.level = level;
  rep_out.trials = trials;
  rep_out.seed = seed;
  rep_out.tolerance = tol;

  const auto& cfg = rep.cfg();
  std::mt19937_64 rng(seed);
  RandomSumOptions opts;
  opts.max_level = level;
  opts.exact_level = true;

  for (int trial = 0; trial < trials; ++trial) {
    const FunctionSum f = normalize(random_function_sum(rng, opts));
    const double f_norm = norm(f, cfg);
    std::array<FunctionSum, 4> s_f;
    for (int k = 0; k < 4; ++k) s_f[k] = apply_S(rep, k, f);
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) {
        const FunctionSum d = apply_S_star(rep, j, s_f[k]);
        const double r = relative(j == k ? distance(d, f, cfg) : distance(d, FunctionSum{}, cfg), f_norm);
        rep_out.pair_residuals[j][k] = std::max(rep_out.pair_residuals[j][k], r);
        rep_out.max_orthogonality_residual = std::max(rep_out.max_orthogonality_residual, r);
      }
    }
    FunctionSum sum;
    for (int k = 0; k < 4; ++k) sum = sum + apply_S(rep, k, apply_S_star(rep, k, f));
    const double r = relative(distance(sum, f, cfg), f_norm);
    rep_out.max_identity_residual = std::max(rep_out.max_identity_residual, r);
  }

  FunctionSum sum;
  for (int k = 0; k < 4; ++k) sum = sum + apply_S(rep, k, apply_S_star(rep, k, one()));
  rep_out.one_identity_residual = distance(sum, one(), cfg);

  rep_out.pass = rep_out.max_orthogonality_residual <= tol && rep_out.max_identity_residual <= tol;
  return rep_out;
}

GramReport gram_X4(const CuntzRep& rep, int max_len) {
  if (max_len < 1) throw ContractError("gram_X4: max_len must be >= 1");
  if (max_len > kMaxGramWordLength) {
    throw CapacityError("gram_X4: max_len " + std::to_string(max_len) + " exceeds 5");
  }
  GramReport out;
  out.max_len = max_len;
  out.words = enumerate_X4(static_cast<std::size_t>(max_len));
  const std::size_t n = out.words.size();
  std::vector<FunctionSum> vecs;
  vecs.reserve(n);
  for (const auto& w : out.words) vecs.push_back(s_word_one(rep, w));

  out.gram.assign(n * n, cplx{0.0, 0.0});
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      const cplx g = inner_product(vecs[r], vecs[c], rep.cfg());
      out.gram[r * n + c] = g;
      out.gram[c * n + r] = std::conj(g);
      const double dev = std::abs(r == c ? g - 1.0 : g);
      if (r == c) {
        out.max_diag_deviation = std::max(out.max_diag_deviation, dev);
      } else {
        out.max_offdiag = std::max(out.max_offdiag, dev);
      }
      out.max_abs_deviation = std::max(out.max_abs_deviation, dev);
    }
  }
  return out;
}

}  // namespace cantor4
