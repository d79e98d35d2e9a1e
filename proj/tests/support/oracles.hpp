#pragma once

// Reference implementations that share no code with the library. They are
// deliberately naive: slow, plain std::complex arithmetic, no exact reduction.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
inline const double kPi = std::acos(-1.0);

// mu4_hat(t) = (1 + e^{i pi t}) / 2 * mu4_hat(t / 4), unrolled until the
// argument is negligible.
inline cplx mu4_hat(double t) {
  cplx acc{1.0, 0.0};
  for (int k = 0; k < 80 && std::abs(t) > 1e-18; ++k) {
    acc *= (1.0 + std::exp(cplx{0.0, kPi * t})) / 2.0;
    t /= 4.0;
  }
  return acc;
}

// Base-4 digits of n, least significant first (n = 0 gives {0}).
inline std::vector<int> base4_digits(std::uint64_t n) {
  std::vector<int> d;
  do {
    d.push_back(static_cast<int>(n % 4));
    n /= 4;
  } while (n != 0);
  return d;
}

inline std::array<int, 4> digit_histogram(std::uint64_t n) {
  std::array<int, 4> h{};
  for (int d : base4_digits(n)) ++h[d];
  return h;
}

inline cplx weight(cplx p, cplx q, std::uint64_t n) {
  const auto h = digit_histogram(n);
  if (h[2] > 0) return 0.0;
  cplx w{1.0, 0.0};
  for (int i = 0; i < h[1]; ++i) w *= p;
  for (int i = 0; i < h[3]; ++i) w *= q;
  return w;
}

struct Exp {
  cplx coeff;
  double freq;
};

// sum_{n=0}^{n_max} |d_n|^2 |<f, e_n>|^2
inline double parseval_partial(const std::vector<Exp>& f, cplx p, cplx q, std::uint64_t n_max) {
  double s = 0.0;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    const double w = std::norm(weight(p, q, n));
    if (w == 0.0) continue;
    cplx c{0.0, 0.0};
    for (const auto& e : f) c += e.coeff * mu4_hat(e.freq - static_cast<double>(n));
    s += w * std::norm(c);
  }
  return s;
}

inline double norm_squared(const std::vector<Exp>& f) {
  cplx s{0.0, 0.0};
  for (const auto& a : f)
    for (const auto& b : f) s += a.coeff * std::conj(b.coeff) * mu4_hat(a.freq - b.freq);
  return s.real();
}

// The projection of S_w 1 onto L^2(mu_4) is d_n e_n, and e_t lies in that
// subspace, so h_L(t) = sum_{n < 4^L} |d_n|^2 |mu4_hat(t - n)|^2.
inline double h(cplx p, cplx q, double t, int len) {
  double s = 0.0;
  const std::uint64_t count = std::uint64_t{1} << (2 * len);
  for (std::uint64_t n = 0; n < count; ++n) {
    s += std::norm(weight(p, q, n)) * std::norm(mu4_hat(t - static_cast<double>(n)));
  }
  return s;
}

// Words as strings over '0'..'3' in application order.
inline std::vector<std::string> all_words(int len) {
  std::vector<std::string> out{""};
  for (int i = 0; i < len; ++i) {
    std::vector<std::string> next;
    for (const auto& w : out)
      for (char c = '0'; c <= '3'; ++c) next.push_back(w + c);
    out = std::move(next);
  }
  return out;
}

// c(w) = sum_k j_k 4^{K-k}: the first letter is the leading base-4 digit.
inline std::uint64_t index_of(const std::string& w) {
  std::uint64_t n = 0;
  for (char c : w) n = 4 * n + static_cast<std::uint64_t>(c - '0');
  return n;
}

using Mat = std::array<std::array<cplx, 4>, 4>;

inline Mat adjoint_times(const Mat& a) {
  Mat r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) r[i][j] += std::conj(a[k][i]) * a[k][j];
  return r;
}

inline double identity_deviation(const Mat& a) {
  const Mat g = adjoint_times(a);
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(g[i][j] - (i == j ? 1.0 : 0.0)));
  return m;
}

}  // namespace oracle
