#pragma once

#include "cantor4/measures.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cantor4 {

using Matrix4 = std::array<std::array<cplx, 4>, 4>;

/// 4x4 filter coefficients a[j][k]: row j is the filter index, column k the
/// first-level cylinder Upsilon_k(C4 x [0,1]).
class CoefficientMatrix {
 public:
  CoefficientMatrix() = default;
  explicit CoefficientMatrix(const Matrix4& entries);

  const cplx& operator()(int j, int k) const { return entries_.at(j).at(k); }
  const Matrix4& entries() const noexcept { return entries_; }

  friend bool operator==(const CoefficientMatrix&, const CoefficientMatrix&) = default;

 private:
  Matrix4 entries_{};
};

// -1 when both the row and the column are odd, else +1.
constexpr int sign_pattern(int j, int k) noexcept { return (j % 2 == 1 && k % 2 == 1) ? -1 : 1; }

// Entry-wise multiplication by sign_pattern; an involution mapping A to H and back.
CoefficientMatrix apply_sign_pattern(const CoefficientMatrix& m);

// Largest |(M* M - I)_{jk}|.
double unitarity_deviation(const CoefficientMatrix& m);

struct AdmissibilityReport {
  double tolerance = 0.0;
  double first_row_deviation = 0.0;  // max |a_0k - 1/2|
  double kernel_deviation = 0.0;     // max |a_j0 + a_j2 - a_j1 - a_j3|
  double unitarity_deviation = 0.0;  // max |(H* H - I)_{jk}|
  bool first_row_ok = false;
  bool kernel_ok = false;
  bool unitary_ok = false;

  bool admissible() const noexcept { return first_row_ok && kernel_ok && unitary_ok; }
};

/// A coefficient matrix A together with its sign-flipped H and the result of
/// the three admissibility checks. Constructed by filter_bank_from_A only.
class FilterBank {
 public:
  const CoefficientMatrix& A() const noexcept { return a_; }
  const CoefficientMatrix& H() const noexcept { return h_; }
  bool admissible() const noexcept { return report_.admissible(); }
  const AdmissibilityReport& report() const noexcept { return report_; }

  // a_j0 + a_j2, the factor each letter j contributes to a projected weight.
  cplx projection_factor(int j) const;
  // conj(a_j0) + conj(a_j2).
  cplx b(int j) const { return std::conj(projection_factor(j)); }

 private:
  friend FilterBank filter_bank_from_A(const CoefficientMatrix& a, double tol);
  CoefficientMatrix a_;
  CoefficientMatrix h_;
  AdmissibilityReport report_;
};

FilterBank filter_bank_from_A(const CoefficientMatrix& a, double tol = 1e-12);

// A = (1/2) [1 1 1 1; 1 1 rho rho; 1 1 -1 -1; 1 1 -rho -rho]. Requires |rho| = 1.
CoefficientMatrix hadamard_rho(cplx rho);

/// Free parameters of the unitary completion with first row 1/2 and
/// (1,-1,1,-1) in the kernel. Row j of H is written in the basis
/// (w0, w1, w2) for odd j and (v0, v1, v2) for even j.
struct AlphaParameters {
  cplx a10;
  cplx a30;
  cplx a11;
  cplx a12;
  cplx a21;
  cplx a22;
};

struct AlphaSolution {
  FilterBank bank;
  // Coordinates alpha_{jk}, k = 0..2, of every row of H.
  std::array<std::array<cplx, 3>, 4> alpha{};
  // Scalar with alpha_31 = lambda alpha_11, alpha_32 = lambda alpha_12; absent
  // on the |alpha_10| = 1 branch.
  std::optional<cplx> lambda_coupling;
  bool degenerate = false;
  // |lhs - rhs| of each row-orthogonality equation, keyed by constraint name.
  std::map<std::string, double> residuals;
};

/// Completes the alpha parameters to an admissible bank.
///
/// Throws InfeasibleParameters naming the first violated constraint:
/// weight_duality (|a10|^2 + |a30|^2 = 1), unit_rows (unit rows 1 and 2) or
/// row_orthogonality_12 (a11 conj(a22) + a12 conj(a21) = 0).
AlphaSolution solve_alpha(const AlphaParameters& params, double tol = 1e-12);

// Symbol of S_j* on exponentials: S_j* e_t = little_m(j, t) e_{(t-j)/4}.
//   (conj(a_j0) + conj(a_j2))/2 + (-1)^j/2 (conj(a_j1) + conj(a_j3)) e^{i pi t}
cplx little_m(const FilterBank& bank, int j, double t);

// Same symbol through the kernel condition: b_j e^{i pi t/2} cos(pi t/2) for
// even j, -i b_j e^{i pi t/2} sin(pi t/2) for odd j.
cplx little_m_factored(const FilterBank& bank, int j, double t);

inline double g_map(int j, double t) { return (t - j) / 4.0; }

/// Replay of the obstruction for the middle-third Cantor measure: with the
/// same filter shape and the x-scale 1/3, unitarity of H is impossible.
struct Mu3NogoCertificate {
  struct RowDeduction {
    int row = 0;
    cplx column_phase;     // phase multiplying a_j1, a_j3 in row j of H
    cplx factor;           // 1 + column_phase; <row_j, row_0> = (a_j0 + a_j2) factor / 2
    bool forces_zero_sum;  // factor != 0, hence a_j0 + a_j2 = 0
  };
  std::vector<RowDeduction> deductions;
  std::array<double, 4> input_vector{1.0, 0.0, 1.0, 0.0};
  std::array<double, 4> output_vector{};  // H (1,0,1,0)^T
  double input_norm = 0.0;
  double output_norm = 0.0;
  double norm_gap = 0.0;
  // A concrete coefficient set obeying every forced condition.
  CoefficientMatrix witness_h;
  double witness_image_residual = 0.0;  // max |H v - (1,0,0,0)| for the witness
  double witness_unitarity_deviation = 0.0;
  bool unitary_possible = true;
};

Mu3NogoCertificate mu3_nogo_certificate();

// {"rows": [[{"re": .., "im": ..} x4] x4]}
nlohmann::json matrix_to_json(const CoefficientMatrix& m);
CoefficientMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace cantor4
