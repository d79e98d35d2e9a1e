#include "frame_lab/cli.hpp"

#include "cantor4/cuntz.hpp"
#include "cantor4/errors.hpp"
#include "cantor4/frames.hpp"
#include "cantor4/report.hpp"

#include <CLI11.hpp>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

namespace frame_lab {

namespace {

using namespace cantor4;

// Largest n_max accepted by the weight and partial-sum commands.
constexpr std::uint64_t kMaxTermIndex = std::uint64_t{1} << 20;

struct ComplexFlag {
  std::optional<double> re;
  std::optional<double> im;

  bool given() const { return re.has_value() || im.has_value(); }
  cplx value() const { return {re.value_or(0.0), im.value_or(0.0)}; }
};

struct BankFlags {
  ComplexFlag rho;
  ComplexFlag p;
  ComplexFlag q;
  // alpha10, alpha30, alpha11, alpha12, alpha21, alpha22
  std::array<ComplexFlag, 6> alpha;
  std::string matrix_path;
};

constexpr std::array<const char*, 6> kAlphaNames{"alpha10", "alpha30", "alpha11",
                                                 "alpha12", "alpha21", "alpha22"};

struct ResolvedBank {
  FilterBank bank;
  std::optional<WeightSpec> spec;
};

void add_complex(CLI::App* app, ComplexFlag& f, const std::string& name) {
  app->add_option("--" + name + "-re", f.re, "real part of " + name);
  app->add_option("--" + name + "-im", f.im, "imaginary part of " + name);
}

void add_bank_flags(CLI::App* app, BankFlags& b, bool weights_only) {
  add_complex(app, b.rho, "rho");
  add_complex(app, b.p, "p");
  add_complex(app, b.q, "q");
  if (weights_only) return;
  for (std::size_t i = 0; i < kAlphaNames.size(); ++i) add_complex(app, b.alpha[i], kAlphaNames[i]);
  app->add_option("--matrix", b.matrix_path, "JSON file holding the coefficient matrix A");
}

void put_complex(std::map<std::string, std::string>& params, const std::string& name, cplx v) {
  params[name + "_re"] = format_real(v.real());
  params[name + "_im"] = format_real(v.imag());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  if (!os || !(os << text)) throw DomainError("cannot write " + path);
}

ResolvedBank resolve_bank(const BankFlags& b, std::map<std::string, std::string>& params,
                          bool require_given = false) {
  const bool use_rho = b.rho.given();
  const bool use_pq = b.p.given() || b.q.given();
  bool use_alpha = false;
  for (const auto& a : b.alpha) use_alpha = use_alpha || a.given();
  const bool use_matrix = !b.matrix_path.empty();
  if (int(use_rho) + int(use_pq) + int(use_alpha) + int(use_matrix) > 1) {
    throw DomainError("choose one bank: --rho-*, --p-*/--q-*, --alpha*, or --matrix");
  }
  if (require_given && !use_rho && !use_pq) {
    throw DomainError("weights need --rho-re/--rho-im or --p-*/--q-*");
  }

  if (use_pq) {
    params["bank"] = "pq";
    put_complex(params, "p", b.p.value());
    put_complex(params, "q", b.q.value());
    const WeightSpec spec = WeightSpec::from_pq(b.p.value(), b.q.value());
    return {bank_for_spec(spec), spec};
  }
  if (use_alpha) {
    params["bank"] = "alpha";
    if (!b.alpha[0].given() || !b.alpha[1].given()) {
      throw DomainError("alpha bank needs --alpha10-* and --alpha30-*");
    }
    const cplx a10 = b.alpha[0].value();
    AlphaParameters ap{a10,
                       b.alpha[1].value(),
                       b.alpha[2].given() ? b.alpha[2].value()
                                          : cplx{std::sqrt(std::max(0.0, 1.0 - std::norm(a10))), 0.0},
                       b.alpha[3].value(),
                       b.alpha[4].given() ? b.alpha[4].value() : cplx{1.0, 0.0},
                       b.alpha[5].value()};
    const std::array<cplx, 6> vals{ap.a10, ap.a30, ap.a11, ap.a12, ap.a21, ap.a22};
    for (std::size_t i = 0; i < vals.size(); ++i) put_complex(params, kAlphaNames[i], vals[i]);
    AlphaSolution sol = solve_alpha(ap);
    if (sol.lambda_coupling) put_complex(params, "lambda_coupling", *sol.lambda_coupling);
    return {sol.bank, WeightSpec::from_pq(ap.a10, ap.a30)};
  }
  if (use_matrix) {
    params["bank"] = "matrix";
    params["matrix"] = b.matrix_path;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_file(b.matrix_path));
    } catch (const nlohmann::json::exception& e) {
      throw DomainError("matrix file is not valid JSON: " + std::string(e.what()));
    }
    return {filter_bank_from_A(matrix_from_json(j)), std::nullopt};
  }
  const cplx rho = use_rho ? b.rho.value() : cplx{1.0, 0.0};
  params["bank"] = "rho";
  put_complex(params, "rho", rho);
  const WeightSpec spec = WeightSpec::from_rho(rho);
  return {bank_for_spec(spec), spec};
}

CuntzRep make_rep(const FilterBank& bank) {
  if (!bank.admissible()) {
    const auto& r = bank.report();
    std::ostringstream os;
    os << "bank is not admissible (first_row " << r.first_row_deviation << ", kernel "
       << r.kernel_deviation << ", unitarity " << r.unitarity_deviation << ")";
    throw DomainError(os.str());
  }
  return CuntzRep(bank);
}

double parse_real(const std::string& text, const std::string& what) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (text.empty() || end != begin + text.size() || !std::isfinite(v)) {
    throw DomainError(what + ": not a finite real: '" + text + "'");
  }
  return v;
}

double resolve_tol(const std::optional<double>& flag, double fallback) {
  double tol = fallback;
  if (flag) {
    tol = *flag;
  } else if (const char* env = std::getenv(kToleranceEnv); env != nullptr && *env != '\0') {
    tol = parse_real(env, kToleranceEnv);
  }
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("tolerance must be positive and finite");
  return tol;
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 3) throw DomainError("--grid expects a:b:steps, got '" + spec + "'");
  const double a = parse_real(parts[0], "--grid start");
  const double b = parse_real(parts[1], "--grid end");
  const double steps = parse_real(parts[2], "--grid steps");
  if (steps < 1 || steps != std::floor(steps) || steps > 100000) {
    throw DomainError("--grid steps must be an integer in [1, 100000]");
  }
  return linear_grid(a, b, static_cast<int>(steps));
}

void check_n_max(std::uint64_t n_max) {
  if (n_max > kMaxTermIndex) {
    throw CapacityError("--n-max " + std::to_string(n_max) + " exceeds " +
                        std::to_string(kMaxTermIndex));
  }
}

std::string join_ints(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// Options shared by every verify subcommand.
struct Common {
  std::optional<double> tol;
  std::string out_path;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--tol", c.tol, "tolerance (overrides " + std::string(kToleranceEnv) + ")");
  app->add_option("--out", c.out_path, "also write the JSON report to this file");
}

struct Context {
  std::ostream& out;
  bool timing = false;
};

int emit(Context& ctx, RunReport report, const std::string& out_path,
         std::chrono::steady_clock::time_point start) {
  if (ctx.timing) {
    report.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  }
  report.version = library_version();
  const std::string text = report.dump();
  ctx.out << text;
  if (!out_path.empty()) write_file(out_path, text);
  return report.pass() ? kPass : kCheckFailed;
}

RunReport new_report(const std::string& command) {
  RunReport r;
  r.command = command;
  return r;
}

// --- commands -------------------------------------------------------------

struct Mu4HatArgs {
  double t = 0.0;
  double tol = TransformEvaluator::kDefaultTolerance;
  int max_factors = TransformEvaluator::kDefaultMaxFactors;
  bool plain = false;
};

int run_mu4hat(Context& ctx, const Mu4HatArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  if (!std::isfinite(a.t)) throw DomainError("--t must be finite");
  const TransformEvaluator cfg(a.tol, a.max_factors);
  const cplx v = mu4_hat(a.t, cfg);
  if (a.plain) {
    ctx.out << format_real(v.real()) << ' ' << format_real(v.imag()) << '\n';
    return kPass;
  }
  RunReport r = new_report("mu4hat");
  r.params["t"] = format_real(a.t);
  r.params["max_factors"] = std::to_string(a.max_factors);
  r.tolerances["transform"] = a.tol;
  r.metrics["re"] = v.real();
  r.metrics["im"] = v.imag();
  r.metrics["abs"] = std::abs(v);
  r.metrics["factors"] = cfg.factor_count(a.t);
  return emit(ctx, r, "", start);
}

struct WeightsArgs {
  BankFlags bank;
  std::uint64_t n_max = 0;
  std::string csv_path;
};

int run_weights(Context& ctx, const WeightsArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  check_n_max(a.n_max);
  RunReport r = new_report("weights");
  const ResolvedBank rb = resolve_bank(a.bank, r.params, true);
  const WeightSpec& spec = *rb.spec;
  if (a.csv_path.empty()) {
    write_weight_table_csv(ctx.out, spec, a.n_max);
    return kPass;
  }
  std::ostringstream csv;
  write_weight_table_csv(csv, spec, a.n_max);
  write_file(a.csv_path, csv.str());
  double total = 0.0;
  std::uint64_t nonzero = 0;
  for (std::uint64_t n = 0; n <= a.n_max; ++n) {
    const double w = std::norm(frame_weight(spec, n));
    total += w;
    nonzero += w != 0.0;
  }
  r.params["n_max"] = std::to_string(a.n_max);
  r.params["csv"] = a.csv_path;
  r.metrics["nonzero_weights"] = static_cast<double>(nonzero);
  r.metrics["total_weight_abs2"] = total;
  return emit(ctx, r, "", start);
}

struct UnitarityArgs {
  BankFlags bank;
  Common common;
  int sweep = 0;
  std::string export_path;
};

int run_unitarity(Context& ctx, const UnitarityArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  RunReport r = new_report("verify unitarity");
  const double tol = resolve_tol(a.common.tol, 1e-12);
  r.tolerances["unitarity"] = tol;
  double first = 0.0;
  double kernel = 0.0;
  double unit = 0.0;
  if (a.sweep > 0) {
    if (a.sweep > 1000000) throw CapacityError("--sweep exceeds 1000000");
    r.params["bank"] = "rho_sweep";
    r.params["sweep"] = std::to_string(a.sweep);
    const double pi = std::acos(-1.0);
    for (int k = 0; k < a.sweep; ++k) {
      const double th = 2.0 * pi * k / a.sweep;
      const auto rep = filter_bank_from_A(hadamard_rho({std::cos(th), std::sin(th)})).report();
      first = std::max(first, rep.first_row_deviation);
      kernel = std::max(kernel, rep.kernel_deviation);
      unit = std::max(unit, rep.unitarity_deviation);
    }
  } else {
    const ResolvedBank rb = resolve_bank(a.bank, r.params);
    const auto& rep = rb.bank.report();
    first = rep.first_row_deviation;
    kernel = rep.kernel_deviation;
    unit = rep.unitarity_deviation;
    if (!a.export_path.empty()) write_file(a.export_path, matrix_to_json(rb.bank.A()).dump(2) + "\n");
  }
  r.metrics["first_row_deviation"] = first;
  r.metrics["kernel_deviation"] = kernel;
  r.metrics["unitarity_deviation"] = unit;
  r.checks["first_row"] = first <= tol;
  r.checks["kernel"] = kernel <= tol;
  r.checks["unitary"] = unit <= tol;
  return emit(ctx, r, a.common.out_path, start);
}

struct CuntzArgs {
  BankFlags bank;
  Common common;
  int level = 2;
  int trials = 20;
  std::uint64_t seed = 1;
};

int run_cuntz(Context& ctx, const CuntzArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  RunReport r = new_report("verify cuntz");
  const double tol = resolve_tol(a.common.tol, 1e-10);
  const CuntzRep rep = make_rep(resolve_bank(a.bank, r.params).bank);
  r.params["level"] = std::to_string(a.level);
  r.params["trials"] = std::to_string(a.trials);
  r.params["seed"] = std::to_string(a.seed);
  const CuntzReport c = verify_cuntz(rep, a.level, a.trials, a.seed, tol);
  r.tolerances["relative_residual"] = tol;
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k)
      r.metrics["pair_residual." + std::to_string(j) + std::to_string(k)] = c.pair_residuals[j][k];
  r.metrics["max_orthogonality_residual"] = c.max_orthogonality_residual;
  r.metrics["max_identity_residual"] = c.max_identity_residual;
  r.metrics["one_identity_residual"] = c.one_identity_residual;
  r.checks["orthogonality"] = c.max_orthogonality_residual <= tol;
  r.checks["identity"] = c.max_identity_residual <= tol && c.one_identity_residual <= tol;
  return emit(ctx, r, a.common.out_path, start);
}

struct GramArgs {
  BankFlags bank;
  Common common;
  int max_len = 3;
};

int run_gram(Context& ctx, const GramArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  RunReport r = new_report("verify gram");
  const double tol = resolve_tol(a.common.tol, 1e-8);
  const CuntzRep rep = make_rep(resolve_bank(a.bank, r.params).bank);
  r.params["max_word_len"] = std::to_string(a.max_len);
  const GramReport g = gram_X4(rep, a.max_len);
  r.tolerances["gram"] = tol;
  r.metrics["dimension"] = static_cast<double>(g.dimension());
  r.metrics["max_abs_deviation"] = g.max_abs_deviation;
  r.metrics["max_offdiag"] = g.max_offdiag;
  r.metrics["max_diag_deviation"] = g.max_diag_deviation;
  r.checks["orthonormal"] = g.max_abs_deviation <= tol;
  return emit(ctx, r, a.common.out_path, start);
}

struct ProjectionArgs {
  BankFlags bank;
  Common common;
  int max_len = 3;
};

int run_projection(Context& ctx, const ProjectionArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  RunReport r = new_report("verify projection");
  const double tol = resolve_tol(a.common.tol, 1e-10);
  const CuntzRep rep = make_rep(resolve_bank(a.bank, r.params).bank);
  if (a.max_len < 1) throw DomainError("--max-word-len must be >= 1");
  if (a.max_len > kMaxGramWordLength) throw CapacityError("--max-word-len exceeds 5");
  r.params["max_word_len"] = std::to_string(a.max_len);
  double worst = 0.0;
  double words = 0.0;
  for (int len = 1; len <= a.max_len; ++len) {
    for (const Word4& w : enumerate_words(static_cast<std::size_t>(len))) {
      cplx expected{1.0, 0.0};
      for (int j : w.letters()) expected *= rep.bank().projection_factor(j);
      const Frequency freq = Frequency::integer(static_cast<std::int64_t>(c_of_word(w)));
      double dev = std::abs(expected);
      double stray = 0.0;
      for (const auto& we : project_V(apply_word(rep, w, one()))) {
        if (we.frequency == freq) {
          dev = std::abs(we.weight - expected);
        } else {
          stray += std::abs(we.weight);
        }
      }
      worst = std::max(worst, dev + stray);
      words += 1.0;
    }
  }
  r.tolerances["projection"] = tol;
  r.metrics["words_checked"] = words;
  r.metrics["max_deviation"] = worst;
  r.checks["projection_formula"] = worst <= tol;
  return emit(ctx, r, a.common.out_path, start);
}

struct ParsevalArgs {
  BankFlags bank;
  Common common;
  std::vector<std::int64_t> gammas{0};
  std::uint64_t n_max = 256;
  bool require_limit = false;
  std::string trace_path;
};

int run_parseval(Context& ctx, const ParsevalArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  RunReport r = new_report("verify parseval");
  const double tol = resolve_tol(a.common.tol, 1e-10);
  check_n_max(a.n_max);
  if (a.n_max < 1) throw DomainError("--n-max must be >= 1");
  if (a.gammas.empty()) throw DomainError("--gamma needs at least one value");
  const ResolvedBank rb = resolve_bank(a.bank, r.params);
  if (!rb.spec || r.params.at("bank") == "alpha") {
    throw DomainError("parseval needs --rho-* or --p-*/--q-*");
  }
  r.params["gamma"] = join_ints(a.gammas);
  r.params["n_max"] = std::to_string(a.n_max);
  r.params["parseval_certified"] = rb.spec->parseval_certified() ? "true" : "false";

  ExponentialSum f;
  std::int64_t top = 0;
  for (std::int64_t g : a.gammas) {
    f.push_back({cplx{1.0, 0.0}, static_cast<double>(g)});
    top = std::max(top, g);
  }
  const PartialSumTrace trace = parseval_trace(f, *rb.spec, a.n_max);
  if (!a.trace_path.empty()) {
    std::ostringstream csv;
    write_trace_csv(csv, trace);
    write_file(a.trace_path, csv.str());
  }
  double limit_dev = 0.0;
  for (const auto& c : trace.checkpoints) {
    r.metrics["partial_sum." + std::to_string(c.n)] = c.value;
    if (static_cast<std::int64_t>(c.n) >= top) {
      limit_dev = std::max(limit_dev, std::abs(c.value - trace.target));
    }
  }
  r.tolerances["bessel"] = tol;
  r.metrics["norm_squared"] = trace.target;
  r.metrics["final_partial_sum"] = trace.checkpoints.back().value;
  r.metrics["final_deficiency"] = trace.target - trace.checkpoints.back().value;
  r.metrics["max_ratio"] = trace.max_ratio();
  r.checks["nondecreasing"] = trace.nondecreasing();
  r.checks["bessel"] = trace.max_ratio() <= 1.0 + tol;
  if (a.require_limit) {
    r.tolerances["limit"] = tol;
    r.metrics["max_limit_deviation"] = limit_dev;
    r.checks["limit"] = limit_dev <= tol * std::max(1.0, trace.target);
  }
  return emit(ctx, r, a.common.out_path, start);
}

struct RuelleArgs {
  BankFlags bank;
  Common common;
  std::string grid = "-1:0:21";
  int level = 3;
};

int run_ruelle(Context& ctx, const RuelleArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  RunReport r = new_report("verify ruelle");
  const double tol = resolve_tol(a.common.tol, 1e-9);
  const ResolvedBank rb = resolve_bank(a.bank, r.params);
  const CuntzRep rep = make_rep(rb.bank);
  const std::vector<double> grid = parse_grid(a.grid);
  r.params["grid"] = a.grid;
  r.params["level"] = std::to_string(a.level);
  const RuelleReport rr = verify_ruelle(rep, grid, a.level, tol, rb.spec);
  constexpr double kSpecializationTol = 1e-12;
  r.tolerances["refinement"] = tol;
  r.metrics["points"] = static_cast<double>(rr.points.size());
  r.metrics["max_residual"] = rr.max_residual;
  r.metrics["max_symbol_mass_deviation"] = rr.max_symbol_mass_deviation;
  r.checks["refinement_identity"] = rr.max_residual <= tol;
  if (rr.specialized_checked) {
    r.tolerances["specialization"] = kSpecializationTol;
    r.metrics["max_specialization_gap"] = rr.max_specialization_gap;
    r.checks["specialization"] = rr.max_specialization_gap <= kSpecializationTol;
  }
  return emit(ctx, r, a.common.out_path, start);
}

int run_nogo(Context& ctx, const Common& common) {
  const auto start = std::chrono::steady_clock::now();
  RunReport r = new_report("verify nogo-mu3");
  const Mu3NogoCertificate c = mu3_nogo_certificate();
  constexpr double kNormTol = 1e-15;
  const double gap = std::sqrt(2.0) - 1.0;
  int forced = 0;
  for (const auto& d : c.deductions) forced += d.forces_zero_sum;
  r.tolerances["norms"] = kNormTol;
  r.metrics["input_norm"] = c.input_norm;
  r.metrics["output_norm"] = c.output_norm;
  r.metrics["norm_gap"] = c.norm_gap;
  r.metrics["rows_forcing_zero_sum"] = forced;
  r.metrics["witness_image_residual"] = c.witness_image_residual;
  r.metrics["witness_unitarity_deviation"] = c.witness_unitarity_deviation;
  r.checks["image_is_first_basis_vector"] =
      c.output_vector == std::array<double, 4>{1.0, 0.0, 0.0, 0.0};
  r.checks["every_row_forced"] = forced == 3;
  r.checks["norm_gap"] = std::abs(c.norm_gap - gap) <= kNormTol &&
                         std::abs(c.input_norm - std::sqrt(2.0)) <= kNormTol &&
                         std::abs(c.output_norm - 1.0) <= kNormTol;
  r.checks["unitary_impossible"] = !c.unitary_possible;
  return emit(ctx, r, common.out_path, start);
}

struct IncompleteArgs {
  Common common;
  std::vector<std::int64_t> gammas{1};
  std::uint64_t n_max = 4096;
  double threshold = 1e-6;
};

int run_incomplete(Context& ctx, const IncompleteArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  RunReport r = new_report("verify incomplete");
  const double tol = resolve_tol(a.common.tol, 1e-20);
  check_n_max(a.n_max);
  if (a.n_max < 1) throw DomainError("--n-max must be >= 1");
  if (a.gammas.empty()) throw DomainError("--gamma needs at least one value");
  r.params["bank"] = "rho";
  put_complex(r.params, "rho", {-1.0, 0.0});
  r.params["gamma"] = join_ints(a.gammas);
  r.params["n_max"] = std::to_string(a.n_max);
  const IncompletenessReport rep = incompleteness_report(a.gammas, a.n_max, TransformEvaluator{},
                                                         a.threshold);
  r.tolerances["forced_zero"] = tol;
  r.tolerances["deficiency_threshold"] = a.threshold;
  bool any_flagged = false;
  bool zeros_ok = true;
  for (const auto& e : rep.entries) {
    const std::string key = "gamma." + std::to_string(e.gamma) + ".";
    double min_def = e.deficiencies.front();
    for (double d : e.deficiencies) min_def = std::min(min_def, d);
    r.metrics[key + "final_partial_sum"] = e.trace.checkpoints.back().value;
    r.metrics[key + "final_deficiency"] = e.final_deficiency;
    r.metrics[key + "min_deficiency"] = min_def;
    r.metrics[key + "max_term_not_3_mod_4"] = e.max_term_not_3_mod_4;
    any_flagged = any_flagged || e.flagged;
    // Odd gamma: every n = 0 mod 4 term sits on an odd zero of the transform.
    if (e.gamma % 2 != 0) zeros_ok = zeros_ok && e.max_term_not_3_mod_4 <= tol;
  }
  r.checks["incomplete"] = any_flagged;
  r.checks["odd_gamma_forced_zeros"] = zeros_ok;
  return emit(ctx, r, a.common.out_path, start);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fourier frames for the Cantor-4 measure: construction and verification"};
  app.name("frame_lab");
  app.require_subcommand(1);
  Context ctx{out};
  app.add_flag("--timing", ctx.timing, "record wall time in duration_ms (otherwise 0)");
  app.set_version_flag("--version", std::string(library_version()));

  std::function<int()> action;

  Mu4HatArgs mu;
  auto* mu_cmd = app.add_subcommand("mu4hat", "evaluate the Fourier transform of mu_4");
  mu_cmd->add_option("--t", mu.t, "argument")->required();
  mu_cmd->add_option("--tol", mu.tol, "truncation tolerance")->check(CLI::PositiveNumber);
  mu_cmd->add_option("--max-factors", mu.max_factors, "product factor cap")->check(CLI::Range(2, 1024));
  mu_cmd->add_flag("--plain", mu.plain, "print 're im' instead of a JSON report");
  mu_cmd->callback([&] { action = [&] { return run_mu4hat(ctx, mu); }; });

  WeightsArgs wa;
  auto* w_cmd = app.add_subcommand("weights", "weight table d_n as CSV");
  add_bank_flags(w_cmd, wa.bank, true);
  w_cmd->add_option("--n-max", wa.n_max, "last index")->required();
  w_cmd->add_option("--csv", wa.csv_path, "write the CSV here and a JSON report to stdout");
  w_cmd->callback([&] { action = [&] { return run_weights(ctx, wa); }; });

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);

  UnitarityArgs ua;
  auto* u_cmd = verify->add_subcommand("unitarity", "admissibility of one bank or a rho sweep");
  add_bank_flags(u_cmd, ua.bank, false);
  add_common(u_cmd, ua.common);
  u_cmd->add_option("--sweep", ua.sweep, "check N values of rho evenly spaced on the circle")
      ->check(CLI::NonNegativeNumber);
  u_cmd->add_option("--export-matrix", ua.export_path, "write A as JSON");
  u_cmd->callback([&] { action = [&] { return run_unitarity(ctx, ua); }; });

  CuntzArgs ca;
  auto* c_cmd = verify->add_subcommand("cuntz", "Cuntz relations on random vectors");
  add_bank_flags(c_cmd, ca.bank, false);
  add_common(c_cmd, ca.common);
  c_cmd->add_option("--level", ca.level, "cylinder level of the random vectors");
  c_cmd->add_option("--trials", ca.trials, "number of random vectors");
  c_cmd->add_option("--seed", ca.seed, "random seed");
  c_cmd->callback([&] { action = [&] { return run_cuntz(ctx, ca); }; });

  GramArgs ga;
  auto* g_cmd = verify->add_subcommand("gram", "orthonormality of {S_w 1}");
  add_bank_flags(g_cmd, ga.bank, false);
  add_common(g_cmd, ga.common);
  g_cmd->add_option("--max-word-len", ga.max_len, "longest word");
  g_cmd->callback([&] { action = [&] { return run_gram(ctx, ga); }; });

  ProjectionArgs pa;
  auto* p_cmd = verify->add_subcommand("projection", "projection of S_w 1 onto L^2(mu_4)");
  add_bank_flags(p_cmd, pa.bank, false);
  add_common(p_cmd, pa.common);
  p_cmd->add_option("--max-word-len", pa.max_len, "longest word");
  p_cmd->callback([&] { action = [&] { return run_projection(ctx, pa); }; });

  ParsevalArgs sa;
  auto* s_cmd = verify->add_subcommand("parseval", "partial frame sums for f = sum of e_gamma");
  add_bank_flags(s_cmd, sa.bank, false);
  add_common(s_cmd, sa.common);
  s_cmd->add_option("--gamma", sa.gammas, "frequencies of f (repeatable)");
  s_cmd->add_option("--n-max", sa.n_max, "last frame index");
  s_cmd->add_flag("--require-limit", sa.require_limit,
                  "also require every checkpoint at or beyond max gamma to equal ||f||^2");
  s_cmd->add_option("--trace-csv", sa.trace_path, "write the partial-sum trace as CSV");
  s_cmd->callback([&] { action = [&] { return run_parseval(ctx, sa); }; });

  RuelleArgs ra;
  auto* r_cmd = verify->add_subcommand("ruelle", "refinement identity for h_L");
  add_bank_flags(r_cmd, ra.bank, false);
  add_common(r_cmd, ra.common);
  r_cmd->add_option("--grid", ra.grid, "a:b:steps");
  r_cmd->add_option("--level", ra.level, "L in [1, 4]");
  r_cmd->callback([&] { action = [&] { return run_ruelle(ctx, ra); }; });

  Common nogo_common;
  auto* n_cmd = verify->add_subcommand("nogo-mu3", "obstruction certificate for mu_3");
  n_cmd->add_option("--out", nogo_common.out_path, "also write the JSON report to this file");
  n_cmd->callback([&] { action = [&] { return run_nogo(ctx, nogo_common); }; });

  IncompleteArgs ia;
  auto* i_cmd = verify->add_subcommand("incomplete", "deficiencies of the rho = -1 frame");
  add_common(i_cmd, ia.common);
  i_cmd->add_option("--gamma", ia.gammas, "frequencies (repeatable)");
  i_cmd->add_option("--n-max", ia.n_max, "last frame index");
  i_cmd->add_option("--threshold", ia.threshold, "deficiency reporting threshold");
  i_cmd->callback([&] { action = [&] { return run_incomplete(ctx, ia); }; });

  std::vector<std::string> argv_store{"frame_lab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kBadInput;
  }

  try {
    return action();
  } catch (const InfeasibleParameters& e) {
    err << "frame_lab: infeasible parameters [" << e.equation() << "]: " << e.what() << '\n';
    return kBadInput;
  } catch (const CapacityError& e) {
    err << "frame_lab: capacity guard: " << e.what() << '\n';
    return kCapacity;
  } catch (const std::exception& e) {
    err << "frame_lab: " << e.what() << '\n';
    return kBadInput;
  }
}

}  // namespace frame_lab
