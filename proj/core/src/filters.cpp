#include "cantor4/filters.hpp"

#include "cantor4/errors.hpp"

#include <cmath>
#include <sstream>

namespace cantor4 {

namespace {

using Row = std::array<cplx, 4>;

constexpr Row kV0{0.5, 0.5, 0.5, 0.5};
constexpr Row kV1{0.5, -0.5, -0.5, 0.5};
constexpr Row kV2{0.5, 0.5, -0.5, -0.5};
constexpr Row kW0{0.5, -0.5, 0.5, -0.5};
constexpr Row kW1{0.5, 0.5, -0.5, -0.5};
constexpr Row kW2{0.5, -0.5, -0.5, 0.5};

Row combine(const std::array<cplx, 3>& coords, const Row& e0, const Row& e1, const Row& e2) {
  Row r{};
  for (int k = 0; k < 4; ++k) r[k] = coords[0] * e0[k] + coords[1] * e1[k] + coords[2] * e2[k];
  return r;
}

void check_index(int j) {
  if (j < 0 || j > 3) throw ContractError("filter index out of range: " + std::to_string(j));
}

void require_admissible(const FilterBank& bank) {
  if (!bank.admissible()) throw ContractError("filter bank is not admissible");
}

std::string fmt_residual(double r) {
  std::ostringstream os;
  os.precision(3);
  os << r;
  return os.str();
}

}  // namespace

CoefficientMatrix::CoefficientMatrix(const Matrix4& entries) : entries_(entries) {
  for (const auto& row : entries_) {
    for (const auto& z : row) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError("CoefficientMatrix: non-finite entry");
      }
    }
  }
}

CoefficientMatrix apply_sign_pattern(const CoefficientMatrix& m) {
  Matrix4 out = m.entries();
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) out[j][k] *= static_cast<double>(sign_pattern(j, k));
  }
  return CoefficientMatrix(out);
}

double unitarity_deviation(const CoefficientMatrix& m) {
  double worst = 0.0;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      cplx s{0.0, 0.0};
      for (int k = 0; k < 4; ++k) s += std::conj(m(k, r)) * m(k, c);
      if (r == c) s -= 1.0;
      worst = std::max(worst, std::abs(s));
    }
  }
  return worst;
}

cplx FilterBank::projection_factor(int j) const {
  check_index(j);
  return a_(j, 0) + a_(j, 2);
}

FilterBank filter_bank_from_A(const CoefficientMatrix& a, double tol) {
  if (!(tol > 0.0)) throw ContractError("filter_bank_from_A: tol must be positive");
  FilterBank bank;
  bank.a_ = a;
  bank.h_ = apply_sign_pattern(a);

  AdmissibilityReport& rep = bank.report_;
  rep.tolerance = tol;
  for (int k = 0; k < 4; ++k) {
    rep.first_row_deviation = std::max(rep.first_row_deviation, std::abs(a(0, k) - 0.5));
  }
  for (int j = 0; j < 4; ++j) {
    rep.kernel_deviation =
        std::max(rep.kernel_deviation, std::abs(a(j, 0) + a(j, 2) - a(j, 1) - a(j, 3)));
  }
  rep.unitarity_deviation = unitarity_deviation(bank.h_);
  rep.first_row_ok = rep.first_row_deviation <= tol;
  rep.kernel_ok = rep.kernel_deviation <= tol;
  rep.unitary_ok = rep.unitarity_deviation <= tol;
  return bank;
}

CoefficientMatrix hadamard_rho(cplx rho) {
  if (!std::isfinite(rho.real()) || !std::isfinite(rho.imag()) ||
      std::abs(std::abs(rho) - 1.0) > 1e-12) {
    throw DomainError("hadamard_rho: |rho| must equal 1");
  }
  const cplx h{0.5, 0.0};
  return CoefficientMatrix(Matrix4{{
      {h, h, h, h},
      {h, h, h * rho, h * rho},
      {h, h, -h, -h},
      {h, h, -h * rho, -h * rho},
  }});
}

AlphaSolution solve_alpha(const AlphaParameters& p, double tol) {
  const double n10 = std::norm(p.a10);
  const double n30 = std::norm(p.a30);

  if (std::abs(n10 + n30 - 1.0) > tol) {
    throw InfeasibleParameters("weight_duality", "|alpha10|^2 + |alpha30|^2 = " +
                                                 fmt_residual(n10 + n30) + ", expected 1");
  }
  const double row1 = n10 + std::norm(p.a11) + std::norm(p.a12);
  if (std::abs(row1 - 1.0) > tol) {
    throw InfeasibleParameters("unit_rows", "row 1: |alpha10|^2 + |alpha11|^2 + |alpha12|^2 = " +
                                                fmt_residual(row1) + ", expected 1");
  }
  const double row2 = std::norm(p.a21) + std::norm(p.a22);
  if (std::abs(row2 - 1.0) > tol) {
    throw InfeasibleParameters("unit_rows", "row 2: |alpha21|^2 + |alpha22|^2 = " +
                                                fmt_residual(row2) + ", expected 1");
  }
  const cplx o12 = p.a11 * std::conj(p.a22) + p.a12 * std::conj(p.a21);
  if (std::abs(o12) > tol) {
    throw InfeasibleParameters("row_orthogonality_12", "alpha11 conj(alpha22) + alpha12 conj(alpha21) = " +
                                                 fmt_residual(std::abs(o12)) + ", expected 0");
  }

  AlphaSolution sol;
  auto& al = sol.alpha;
  al[0] = {1.0, 0.0, 0.0};
  al[1] = {p.a10, p.a11, p.a12};
  al[2] = {0.0, p.a21, p.a22};
  if (1.0 - n10 <= tol) {
    // alpha11 = alpha12 = alpha30 = 0 here; row 3 only has to be a unit vector
    // orthogonal to row 2, whose (w1, w2) coordinates are (alpha22, alpha21).
    sol.degenerate = true;
    al[3] = {0.0, std::conj(p.a21), -std::conj(p.a22)};
  } else {
    const cplx lambda = -std::conj(p.a10) * p.a30 / (1.0 - n10);
    sol.lambda_coupling = lambda;
    al[3] = {p.a30, lambda * p.a11, lambda * p.a12};
  }

  const Matrix4 h{
      combine(al[0], kV0, kV1, kV2),
      combine(al[1], kW0, kW1, kW2),
      combine(al[2], kV0, kV1, kV2),
      combine(al[3], kW0, kW1, kW2),
  };
  sol.bank = filter_bank_from_A(apply_sign_pattern(CoefficientMatrix(h)), std::max(tol, 1e-12));

  auto sq = [&](int j) { return std::norm(al[j][0]) + std::norm(al[j][1]) + std::norm(al[j][2]); };
  for (int j = 0; j < 4; ++j) sol.residuals["unit_row" + std::to_string(j)] = std::abs(sq(j) - 1.0);
  sol.residuals["row_orthogonality_02"] = std::abs(al[0][0] * std::conj(al[2][0]));
  sol.residuals["row_orthogonality_12"] = std::abs(al[1][1] * std::conj(al[2][2]) + al[1][2] * std::conj(al[2][1]));
  sol.residuals["unit_rows3"] = std::abs(al[1][0] * std::conj(al[3][0]) + al[1][1] * std::conj(al[3][1]) +
                                         al[1][2] * std::conj(al[3][2]));
  sol.residuals["row_orthogonality_23"] = std::abs(al[2][1] * std::conj(al[3][2]) + al[2][2] * std::conj(al[3][1]));

  if (!sol.bank.admissible()) {
    throw InfeasibleParameters("unitarity", "completed H fails the unitarity check, deviation " +
                                                fmt_residual(sol.bank.report().unitarity_deviation));
  }
  return sol;
}

cplx little_m(const FilterBank& bank, int j, double t) {
  check_index(j);
  require_admissible(bank);
  const auto& a = bank.A();
  const double sign = (j % 2 == 0) ? 1.0 : -1.0;
  const cplx e{cospi(t), sinpi(t)};
  return 0.5 * (std::conj(a(j, 0)) + std::conj(a(j, 2))) +
         0.5 * sign * (std::conj(a(j, 1)) + std::conj(a(j, 3))) * e;
}

cplx little_m_factored(const FilterBank& bank, int j, double t) {
  check_index(j);
  require_admissible(bank);
  const double h = t / 2.0;
  const cplx half_phase{cospi(h), sinpi(h)};
  if (j % 2 == 0) return bank.b(j) * half_phase * cospi(h);
  return cplx{0.0, -1.0} * bank.b(j) * half_phase * sinpi(h);
}

Mu3NogoCertificate mu3_nogo_certificate() {
  Mu3NogoCertificate cert;

  // Row phases of H for the x-scale 1/3: e^{4 pi i/3}, e^{2 pi i/3}, 1.
  const std::array<cplx, 4> phase{cplx{1.0, 0.0}, cplx{cospi(4.0 / 3.0), sinpi(4.0 / 3.0)},
                                  cplx{cospi(2.0 / 3.0), sinpi(2.0 / 3.0)}, cplx{1.0, 0.0}};
  bool all_forced = true;
  for (int j = 1; j < 4; ++j) {
    Mu3NogoCertificate::RowDeduction d;
    d.row = j;
    d.column_phase = phase[j];
    d.factor = 1.0 + phase[j];
    // |1 + e^{2 pi i k/3}| = 1 for k = 1, 2, and 2 for k = 0: far from zero.
    d.forces_zero_sum = std::abs(d.factor) > 0.5;
    all_forced = all_forced && d.forces_zero_sum;
    cert.deductions.push_back(d);
  }

  // First row 1/2 gives a_00 + a_02 = 1; the deductions give a_j0 + a_j2 = 0.
  cert.output_vector = {0.5 + 0.5, 0.0, 0.0, 0.0};
  auto norm = [](const std::array<double, 4>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
  };
  cert.input_norm = norm(cert.input_vector);
  cert.output_norm = norm(cert.output_vector);
  cert.norm_gap = cert.input_norm - cert.output_norm;

  // Witness: rows j >= 1 all (1/2)(1, 1, -1, -1), which satisfies the kernel
  // condition and a_j0 + a_j2 = 0.
  const cplx h{0.5, 0.0};
  Matrix4 a{{{h, h, h, h}, {h, h, -h, -h}, {h, h, -h, -h}, {h, h, -h, -h}}};
  Matrix4 hm = a;
  for (int j = 0; j < 4; ++j) {
    hm[j][1] *= phase[j];
    hm[j][3] *= phase[j];
  }
  cert.witness_h = CoefficientMatrix(hm);
  for (int j = 0; j < 4; ++j) {
    const cplx image = hm[j][0] + hm[j][2];
    cert.witness_image_residual =
        std::max(cert.witness_image_residual, std::abs(image - cert.output_vector[j]));
  }
  cert.witness_unitarity_deviation = unitarity_deviation(cert.witness_h);
  cert.unitary_possible = !(all_forced && cert.norm_gap > 0.0);
  return cert;
}

nlohmann::json matrix_to_json(const CoefficientMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int j = 0; j < 4; ++j) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < 4; ++k) row.push_back({{"re", m(j, k).real()}, {"im", m(j, k).imag()}});
    rows.push_back(std::move(row));
  }
  return {{"rows", std::move(rows)}};
}

CoefficientMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array() || j["rows"].size() != 4) {
    throw DomainError("matrix JSON: expected {\"rows\": [4 rows]}");
  }
  Matrix4 m{};
  for (int r = 0; r < 4; ++r) {
    const auto& row = j["rows"][r];
    if (!row.is_array() || row.size() != 4) throw DomainError("matrix JSON: each row needs 4 entries");
    for (int k = 0; k < 4; ++k) {
      const auto& e = row[k];
      if (!e.is_object() || !e.contains("re") || !e.contains("im") || !e["re"].is_number() ||
          !e["im"].is_number()) {
        throw DomainError("matrix JSON: entries must be {\"re\": number, \"im\": number}");
      }
      m[r][k] = cplx{e["re"].get<double>(), e["im"].get<double>()};
    }
  }
  return CoefficientMatrix(m);
}

}  // namespace cantor4
