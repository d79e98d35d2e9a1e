#pragma once

#include "cantor4/atoms.hpp"
#include "cantor4/digits.hpp"
#include "cantor4/filters.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace cantor4 {

/// Representation of the Cuntz algebra O_4 on L^2(mu_4 x lambda):
///   [S_j f](x, y) = 2 m_j(x, y) f(R(x, y)),  m_j = e^{2 pi i j x} H_j,
/// where H_j equals a_{jk} on Upsilon_k(C4 x [0,1]) and R inverts every
/// Upsilon_k. The operators act exactly on FunctionSum values.
class CuntzRep {
 public:
  // Throws ContractError unless the bank is admissible.
  explicit CuntzRep(FilterBank bank, TransformEvaluator cfg = TransformEvaluator{});

  const FilterBank& bank() const noexcept { return bank_; }
  const TransformEvaluator& cfg() const noexcept { return cfg_; }

 private:
  FilterBank bank_;
  TransformEvaluator cfg_;
};

/// S_j F. Each atom (c, t, cyl) becomes four atoms, one per new outer pair k:
/// coefficient 2 a_{jk} c e^{-2 pi i t d_k} (d_k the x-digit of Upsilon_k,
/// so the phase is e^{-4 pi i t} on the right half), frequency 4t + j.
FunctionSum apply_S(const CuntzRep& rep, int j, const FunctionSum& f);

/// S_j* F = (1/2) sum_k conj(m_j o Upsilon_k) (F o Upsilon_k).
FunctionSum apply_S_star(const CuntzRep& rep, int j, const FunctionSum& f);

// S_{j_K} ... S_{j_1} F; the empty word is the identity.
FunctionSum apply_word(const CuntzRep& rep, const Word4& word, const FunctionSum& f);

/// Closed form of S_w 1: exactly 4^K atoms of frequency c(w), the atom on pairs
/// (p_0, ..., p_{K-1}) carrying prod_k 2 a_{j_k, p_{K-k}}.
FunctionSum s_word_one(const CuntzRep& rep, const Word4& word);

inline constexpr int kMaxCuntzCheckLevel = 4;
inline constexpr int kMaxGramWordLength = 5;

struct CuntzReport {
  int level = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  // max over trials of ||S_j* S_k F - delta_jk F|| / ||F||
  std::array<std::array<double, 4>, 4> pair_residuals{};
  double max_orthogonality_residual = 0.0;
  // max over trials of ||sum_k S_k S_k* F - F|| / ||F||
  double max_identity_residual = 0.0;
  double one_identity_residual = 0.0;  // same with F = 1, absolute
  bool pass = false;
};

CuntzReport verify_cuntz(const CuntzRep& rep, int level, int trials, std::uint64_t seed,
                         double tol);

struct GramReport {
  int max_len = 0;
  std::vector<Word4> words;
  std::vector<cplx> gram;  // row-major, words.size() squared
  double max_abs_deviation = 0.0;
  double max_offdiag = 0.0;
  double max_diag_deviation = 0.0;

  std::size_t dimension() const noexcept { return words.size(); }
  const cplx& at(std::size_t r, std::size_t c) const { return gram.at(r * words.size() + c); }
};

// Gram matrix of {S_w 1 : w in X4, |w| <= max_len}; max_len <= 5.
GramReport gram_X4(const CuntzRep& rep, int max_len);

}  // namespace cantor4
