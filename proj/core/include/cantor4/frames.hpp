#pragma once

#include "cantor4/atoms.hpp"
#include "cantor4/cuntz.hpp"
#include "cantor4/digits.hpp"
#include "cantor4/filters.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace cantor4 {

/// weight * e^{2 pi i frequency x}, an element of V = L^2(mu_4) inside
/// L^2(mu_4 x lambda).
struct WeightedExponential {
  cplx weight;
  Frequency frequency;
};

/// Which weight family d_n = p^{l1(n)} 0^{l2(n)} q^{l3(n)} to use.
class WeightSpec {
 public:
  enum class Mode { rho, pq };

  // |rho| = 1; p = (1 + rho)/2, q = (1 - rho)/2.
  static WeightSpec from_rho(cplx rho);
  // |p|^2 + |q|^2 = 1.
  static WeightSpec from_pq(cplx p, cplx q);

  Mode mode() const noexcept { return mode_; }
  cplx rho() const noexcept { return rho_; }
  cplx p() const noexcept { return p_; }
  cplx q() const noexcept { return q_; }
  // The Parseval property is only claimed for p != 0 (rho != -1).
  bool parseval_certified() const noexcept { return p_ != cplx{0.0, 0.0}; }
  std::string label() const;

 private:
  WeightSpec(Mode m, cplx rho, cplx p, cplx q) : mode_(m), rho_(rho), p_(p), q_(q) {}
  Mode mode_;
  cplx rho_;
  cplx p_;
  cplx q_;
};

// Filter bank whose projected weights match d_n: hadamard_rho(rho)
// in rho mode, the alpha completion with alpha10 = p, alpha30 = q in pq mode.
FilterBank bank_for_spec(const WeightSpec& spec);

// p^{l1(n)} * 0^{l2(n)} * q^{l3(n)}, with 0^0 = 1.
cplx frame_weight(const WeightSpec& spec, std::uint64_t n);

/// Orthogonal projection onto V: integrates y out exactly. Atoms are grouped
/// by frequency; each group must integrate to a constant multiple of its
/// exponential, otherwise UnsupportedShape is thrown. Output is ascending in
/// frequency.
std::vector<WeightedExponential> project_V(const FunctionSum& f);

// sum_gamma coeff * e^{2 pi i freq x}
struct ExponentialTerm {
  cplx coeff;
  double freq;
};
using ExponentialSum = std::vector<ExponentialTerm>;

double norm_squared(const ExponentialSum& f, const TransformEvaluator& cfg = TransformEvaluator{});
// <f, e_n> = sum_gamma coeff_gamma mu4_hat(gamma - n)
cplx exp_coefficient(const ExponentialSum& f, double n,
                     const TransformEvaluator& cfg = TransformEvaluator{});

struct PartialSumTrace {
  struct Checkpoint {
    std::uint64_t n = 0;
    double value = 0.0;
  };
  std::vector<Checkpoint> checkpoints;
  double target = 0.0;  // ||f||^2

  bool nondecreasing(double slack = 0.0) const;
  // max over checkpoints of value / target (0 when target is 0)
  double max_ratio() const;
};

// |d_n|^2 |<f, e_n>|^2 for n = 0..n_max. Terms with d_n = 0 are exactly 0.
std::vector<double> parseval_terms(const ExponentialSum& f, const WeightSpec& spec,
                                   std::uint64_t n_max,
                                   const TransformEvaluator& cfg = TransformEvaluator{});

// Checkpoints 4, 16, 64, ... <= n_max, plus n_max itself; each value is
// sum_{n=0}^{N} of parseval_terms.
std::vector<std::uint64_t> trace_checkpoints(std::uint64_t n_max);

PartialSumTrace parseval_trace(const ExponentialSum& f, const WeightSpec& spec,
                               std::uint64_t n_max,
                               const TransformEvaluator& cfg = TransformEvaluator{});

/// The orthonormal vectors {S_w 1 : w in X4, |w| <= max_len}, in ascending
/// c(w) order, kept around for repeated h evaluations.
class WordFamily {
 public:
  WordFamily(const CuntzRep& rep, int max_len);

  int max_len() const noexcept { return max_len_; }
  const std::vector<Word4>& words() const noexcept { return words_; }
  const std::vector<FunctionSum>& vectors() const noexcept { return vectors_; }

  // h_L(t) = sum_{|w| <= len} |<e_t, S_w 1>|^2, len <= max_len.
  double h(double t, int len) const;
  double h(double t) const { return h(t, max_len_); }

 private:
  TransformEvaluator cfg_;
  int max_len_;
  std::vector<Word4> words_;
  std::vector<FunctionSum> vectors_;
};

inline constexpr int kMaxHWordLength = 5;

double h_partial(double t, const CuntzRep& rep, int max_len);

struct RuellePoint {
  double t = 0.0;
  double lhs = 0.0;          // h_{L+1}(t)
  double rhs = 0.0;          // sum_j |m_j(t)|^2 h_L(g_j(t))
  double residual = 0.0;     // |lhs - rhs|
  double specialized = 0.0;  // cos^2 h_L(t/4) + sin^2 (|p|^2 h_L((t-1)/4) + |q|^2 h_L((t-3)/4))
  double specialization_gap = 0.0;
  double symbol_mass = 0.0;  // sum_j |m_j(t)|^2
};

struct RuelleReport {
  int level = 0;
  double tolerance = 0.0;
  std::vector<RuellePoint> points;
  double max_residual = 0.0;
  bool specialized_checked = false;
  double max_specialization_gap = 0.0;
  double max_symbol_mass_deviation = 0.0;  // constant functions solve the equation iff this is 0
  bool pass = false;
};

/// Checks h_{L+1}(t) = sum_j |m_j(t)|^2 h_L(g_j(t)) on the grid (L <= 4).
/// With a weight spec the specialized three-term form is compared against the
/// general one as well; its coefficients are |1 + conj(rho)|^2 / 4 and
/// |1 - conj(rho)|^2 / 4 in rho mode, |p|^2 and |q|^2 in pq mode.
RuelleReport verify_ruelle(const CuntzRep& rep, const std::vector<double>& t_grid, int level,
                           double tol, const std::optional<WeightSpec>& spec = std::nullopt);

// `steps` evenly spaced points from a to b inclusive.
std::vector<double> linear_grid(double a, double b, int steps);

struct IncompletenessEntry {
  std::int64_t gamma = 0;
  PartialSumTrace trace;
  std::vector<double> deficiencies;  // 1 - S_N per checkpoint
  double final_deficiency = 0.0;
  // Largest term among n with d_n != 0 and n != 3 mod 4.
  double max_term_not_3_mod_4 = 0.0;
  bool flagged = false;  // final_deficiency > threshold
};

struct IncompletenessReport {
  std::uint64_t n_max = 0;
  double threshold = 0.0;
  std::vector<IncompletenessEntry> entries;
};

/// rho = -1 traces for f = e_gamma and the resulting deficiencies.
IncompletenessReport incompleteness_report(const std::vector<std::int64_t>& gammas,
                                           std::uint64_t n_max,
                                           const TransformEvaluator& cfg = TransformEvaluator{},
                                           double threshold = 1e-6);

// CSV: n,l1,l2,l3,weight_re,weight_im,weight_abs2
void write_weight_table_csv(std::ostream& os, const WeightSpec& spec, std::uint64_t n_max);
// CSV: N,partial_sum,target
void write_trace_csv(std::ostream& os, const PartialSumTrace& trace);

// Shortest round-trip decimal form used by the CSV writers.
std::string format_real(double v);

}  // namespace cantor4
