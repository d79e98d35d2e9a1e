#include "cantor4/frames.hpp"

#include "cantor4/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace cantor4 {

namespace {

cplx int_power(cplx base, int exponent) {
  cplx r{1.0, 0.0};
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace

WeightSpec WeightSpec::from_rho(cplx rho) {
  if (!std::isfinite(rho.real()) || !std::isfinite(rho.imag()) ||
      std::abs(std::abs(rho) - 1.0) > 1e-12) {
    throw DomainError("rho: |rho| must equal 1");
  }
  return WeightSpec(Mode::rho, rho, (1.0 + rho) / 2.0, (1.0 - rho) / 2.0);
}

WeightSpec WeightSpec::from_pq(cplx p, cplx q) {
  if (!std::isfinite(std::norm(p)) || !std::isfinite(std::norm(q)) ||
      std::abs(std::norm(p) + std::norm(q) - 1.0) > 1e-12) {
    throw DomainError("p, q: |p|^2 + |q|^2 must equal 1");
  }
  return WeightSpec(Mode::pq, cplx{std::nan(""), std::nan("")}, p, q);
}

std::string WeightSpec::label() const {
  std::ostringstream os;
  os.precision(17);
  if (mode_ == Mode::rho) {
    os << "rho=(" << rho_.real() << "," << rho_.imag() << ")";
  } else {
    os << "p=(" << p_.real() << "," << p_.imag() << "),q=(" << q_.real() << "," << q_.imag() << ")";
  }
  return os.str();
}

FilterBank bank_for_spec(const WeightSpec& spec) {
  if (spec.mode() == WeightSpec::Mode::rho) return filter_bank_from_A(hadamard_rho(spec.rho()));
  const double rest = std::sqrt(std::max(0.0, 1.0 - std::norm(spec.p())));
  return solve_alpha(AlphaParameters{spec.p(), spec.q(), rest, 0.0, 1.0, 0.0}).bank;
}

cplx frame_weight(const WeightSpec& spec, std::uint64_t n) {
  const DigitCounts l = digit_counts(n);
  if (l.twos > 0) return {0.0, 0.0};
  return int_power(spec.p(), l.ones) * int_power(spec.q(), l.threes);
}

std::vector<WeightedExponential> project_V(const FunctionSum& f) {
  std::map<Frequency, std::vector<Atom>> groups;
  for (const Atom& a : f.atoms()) groups[a.freq].push_back(a);

  std::vector<WeightedExponential> out;
  out.reserve(groups.size());
  for (const auto& [freq, atoms] : groups) {
    int level = 0;
    for (const Atom& a : atoms) level = std::max(level, a.level());
    if (level > 20) throw CapacityError("project_V: atom level above 20");
    // G(x) on the x-cylinders of this level: each atom contributes
    // coeff * lambda(y-cylinder) = coeff * 2^-level after refinement.
    std::vector<cplx> g(std::size_t{1} << level, cplx{0.0, 0.0});
    const FunctionSum refined = refine(FunctionSum(atoms), level);
    for (const Atom& a : refined.atoms()) {
      std::size_t xbits = 0;
      for (int i = 0; i < level; ++i) xbits |= static_cast<std::size_t>(a.cyl.xdigit(i) / 2) << i;
      g[xbits] += std::ldexp(1.0, -level) * a.coeff;
    }
    double scale = 1.0;
    for (const cplx& v : g) scale = std::max(scale, std::abs(v));
    for (const cplx& v : g) {
      if (std::abs(v - g.front()) > 1e-12 * scale) {
        throw UnsupportedShape("project_V: frequency group " + freq.to_string() +
                               " does not integrate to a constant multiple of its exponential");
      }
    }
    out.push_back({g.front(), freq});
  }
  return out;
}

double norm_squared(const ExponentialSum& f, const TransformEvaluator& cfg) {
  cplx s{0.0, 0.0};
  for (const auto& a : f) {
    for (const auto& b : f) s += a.coeff * std::conj(b.coeff) * mu4_hat(a.freq - b.freq, cfg);
  }
  return s.real();
}

cplx exp_coefficient(const ExponentialSum& f, double n, const TransformEvaluator& cfg) {
  cplx s{0.0, 0.0};
  for (const auto& a : f) s += a.coeff * mu4_hat(a.freq - n, cfg);
  return s;
}

bool PartialSumTrace::nondecreasing(double slack) const {
  for (std::size_t i = 1; i < checkpoints.size(); ++i) {
    if (checkpoints[i].value < checkpoints[i - 1].value - slack) return false;
  }
  return true;
}

double PartialSumTrace::max_ratio() const {
  if (target <= 0.0) return 0.0;
  double r = 0.0;
  for (const auto& c : checkpoints) r = std::max(r, c.value / target);
  return r;
}

std::vector<double> parseval_terms(const ExponentialSum& f, const WeightSpec& spec,
                                   std::uint64_t n_max, const TransformEvaluator& cfg) {
  std::vector<double> terms(n_max + 1, 0.0);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    const double w = std::norm(frame_weight(spec, n));
    if (w == 0.0) continue;
    terms[n] = w * std::norm(exp_coefficient(f, static_cast<double>(n), cfg));
  }
  return terms;
}

std::vector<std::uint64_t> trace_checkpoints(std::uint64_t n_max) {
  if (n_max < 1) throw ContractError("trace_checkpoints: n_max must be >= 1");
  std::vector<std::uint64_t> cps;
  for (std::uint64_t n = 4; n <= n_max; n *= 4) {
    cps.push_back(n);
    if (n > n_max / 4) break;
  }
  if (cps.empty() || cps.back() != n_max) cps.push_back(n_max);
  return cps;
}

PartialSumTrace parseval_trace(const ExponentialSum& f, const WeightSpec& spec,
                               std::uint64_t n_max, const TransformEvaluator& cfg) {
  const auto cps = trace_checkpoints(n_max);
  const auto terms = parseval_terms(f, spec, n_max, cfg);
  PartialSumTrace trace;
  trace.target = norm_squared(f, cfg);
  double running = 0.0;
  std::uint64_t n = 0;
  for (std::uint64_t cp : cps) {
    for (; n <= cp; ++n) running += terms[n];
    trace.checkpoints.push_back({cp, running});
  }
  return trace;
}

WordFamily::WordFamily(const CuntzRep& rep, int max_len) : cfg_(rep.cfg()), max_len_(max_len) {
  if (max_len < 1) throw ContractError("WordFamily: max_len must be >= 1");
  if (max_len > kMaxHWordLength) {
    throw CapacityError("WordFamily: max_len " + std::to_string(max_len) + " exceeds 5");
  }
  words_ = enumerate_X4(static_cast<std::size_t>(max_len));
  vectors_.reserve(words_.size());
  for (const auto& w : words_) vectors_.push_back(s_word_one(rep, w));
}

double WordFamily::h(double t, int len) const {
  if (len < 0 || len > max_len_) throw ContractError("WordFamily::h: length out of range");
  if (len == 0) return 0.0;
  const FunctionSum e = exponential(t);
  const std::size_t count = std::size_t{1} << (2 * len);  // words of length <= len
  double sum = 0.0;
  for (std::size_t i = 0; i < count; ++i) sum += std::norm(inner_product(e, vectors_[i], cfg_));
  return sum;
}

double h_partial(double t, const CuntzRep& rep, int max_len) {
  return WordFamily(rep, max_len).h(t);
}

std::vector<double> linear_grid(double a, double b, int steps) {
  if (steps < 1) throw ContractError("linear_grid: steps must be >= 1");
  if (steps == 1) return {a};
  std::vector<double> grid(steps);
  for (int i = 0; i < steps; ++i) grid[i] = a + (b - a) * i / (steps - 1);
  grid.back() = b;
  return grid;
}

RuelleReport verify_ruelle(const CuntzRep& rep, const std::vector<double>& t_grid, int level,
                           double tol, const std::optional<WeightSpec>& spec) {
  if (level < 1 || level > kMaxHWordLength - 1) {
    throw CapacityError("verify_ruelle: level must be in [1, 4]");
  }
  const WordFamily family(rep, level + 1);
  RuelleReport out;
  out.level = level;
  out.tolerance = tol;
  out.specialized_checked = spec.has_value();

  double coef_p = 0.0;
  double coef_q = 0.0;
  if (spec) {
    if (spec->mode() == WeightSpec::Mode::rho) {
      const cplx rb = std::conj(spec->rho());
      coef_p = std::norm(1.0 + rb) / 4.0;
      coef_q = std::norm(1.0 - rb) / 4.0;
    } else {
      coef_p = std::norm(std::conj(spec->p()));
      coef_q = std::norm(std::conj(spec->q()));
    }
  }

  for (double t : t_grid) {
    RuellePoint pt;
    pt.t = t;
    pt.lhs = family.h(t, level + 1);
    std::array<double, 4> h_at{};
    for (int j = 0; j < 4; ++j) {
      const double m2 = std::norm(little_m(rep.bank(), j, t));
      h_at[j] = family.h(g_map(j, t), level);
      pt.rhs += m2 * h_at[j];
      pt.symbol_mass += m2;
    }
    pt.residual = std::abs(pt.lhs - pt.rhs);
    if (spec) {
      const double c = cospi(t / 2.0);
      const double s = sinpi(t / 2.0);
      pt.specialized = c * c * h_at[0] + s * s * (coef_p * h_at[1] + coef_q * h_at[3]);
      pt.specialization_gap = std::abs(pt.specialized - pt.rhs);
    }
    out.max_residual = std::max(out.max_residual, pt.residual);
    out.max_specialization_gap = std::max(out.max_specialization_gap, pt.specialization_gap);
    out.max_symbol_mass_deviation =
        std::max(out.max_symbol_mass_deviation, std::abs(pt.symbol_mass - 1.0));
    out.points.push_back(pt);
  }
  out.pass = out.max_residual <= tol;
  return out;
}

IncompletenessReport incompleteness_report(const std::vector<std::int64_t>& gammas,
                                           std::uint64_t n_max, const TransformEvaluator& cfg,
                                           double threshold) {
  const WeightSpec spec = WeightSpec::from_rho(cplx{-1.0, 0.0});
  IncompletenessReport rep;
  rep.n_max = n_max;
  rep.threshold = threshold;
  const auto cps = trace_checkpoints(n_max);
  for (std::int64_t gamma : gammas) {
    IncompletenessEntry e;
    e.gamma = gamma;
    const ExponentialSum f{{cplx{1.0, 0.0}, static_cast<double>(gamma)}};
    const auto terms = parseval_terms(f, spec, n_max, cfg);
    e.trace.target = norm_squared(f, cfg);
    double running = 0.0;
    std::uint64_t n = 0;
    for (std::uint64_t cp : cps) {
      for (; n <= cp; ++n) {
        running += terms[n];
        if (n % 4 != 3 && frame_weight(spec, n) != cplx{0.0, 0.0}) {
          e.max_term_not_3_mod_4 = std::max(e.max_term_not_3_mod_4, terms[n]);
        }
      }
      e.trace.checkpoints.push_back({cp, running});
      e.deficiencies.push_back(e.trace.target - running);
    }
    e.final_deficiency = e.deficiencies.back();
    e.flagged = e.final_deficiency > threshold;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

void write_weight_table_csv(std::ostream& os, const WeightSpec& spec, std::uint64_t n_max) {
  os << "n,l1,l2,l3,weight_re,weight_im,weight_abs2\n";
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    const DigitCounts l = digit_counts(n);
    const cplx w = frame_weight(spec, n);
    os << n << ',' << l.ones << ',' << l.twos << ',' << l.threes << ',' << format_real(w.real())
       << ',' << format_real(w.imag()) << ',' << format_real(std::norm(w)) << '\n';
  }
}

void write_trace_csv(std::ostream& os, const PartialSumTrace& trace) {
  os << "N,partial_sum,target\n";
  for (const auto& c : trace.checkpoints) {
    os << c.n << ',' << format_real(c.value) << ',' << format_real(trace.target) << '\n';
  }
}

}  // namespace cantor4
