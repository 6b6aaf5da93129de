#include "plk/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>

#include "plk/error.hpp"
#include "plk/gln.hpp"
#include "plk/group.hpp"
#include "plk/poisson.hpp"

namespace plk {

namespace {

constexpr double kGroupLawTol = 1e-11;
constexpr double kAdjointTol = 1e-9;
constexpr double kAdDerivativeTol = 1e-7;
constexpr double kFunctionalTol = 1e-8;
constexpr double kFiniteDifferenceTol = 1e-6;
constexpr double kControlFloor = 1e-3;
constexpr double kControlFraction = 0.95;

struct Samples {
  std::vector<GroupElement> x, y;
  std::vector<RealVector> xi, eta;
};

/// Shared, lazily built state of one suite run.
class Context {
 public:
  Context(const InputDocument& doc, const SuiteOptions& options)
      : doc_(doc), options_(options), algebra_(doc.algebra()), r_(doc.r_matrix()) {}

  const InputDocument& doc() const { return doc_; }
  const SuiteOptions& options() const { return options_; }
  const LieAlgebra& algebra() const { return algebra_; }
  const RMatrix& r() const { return r_; }

  const CocycleAlpha& delta_r() {
    if (!delta_r_) delta_r_ = coboundary_cocycle(algebra_, r_);
    return *delta_r_;
  }
  const QuadraticBeta& beta() {
    if (!beta_) beta_ = build_beta(algebra_, r_);
    return *beta_;
  }
  const Tensor& cybe() {
    if (!cybe_) cybe_ = cybe_residual(algebra_, r_);
    return *cybe_;
  }
  /// Throws ThetaNotInvariant.
  InvariantTheta theta() const { return InvariantTheta::create(algebra_, doc_.theta_polynomial()); }

  const MatrixGroupModel& model() {
    if (!model_) model_.emplace(algebra_, *doc_.real_basis());
    return *model_;
  }
  const Samples& samples() {
    if (!samples_) {
      const MatrixGroupModel& m = model();
      std::mt19937_64 rng(options_.seed);
      Samples s;
      for (std::size_t k = 0; k < options_.samples; ++k) {
        s.x.push_back(exp_element(m, sample_unit_ball(rng, m.dim())));
        s.y.push_back(exp_element(m, sample_unit_ball(rng, m.dim())));
        s.xi.push_back(sample_unit_ball(rng, m.dim()));
        s.eta.push_back(sample_unit_ball(rng, m.dim()));
      }
      samples_ = std::move(s);
    }
    return *samples_;
  }

 private:
  const InputDocument& doc_;
  SuiteOptions options_;
  LieAlgebra algebra_;
  RMatrix r_;
  std::optional<CocycleAlpha> delta_r_;
  std::optional<QuadraticBeta> beta_;
  std::optional<Tensor> cybe_;
  std::optional<MatrixGroupModel> model_;
  std::optional<Samples> samples_;
};

struct Check {
  std::string id;
  std::string eq;
  CheckMode mode;
  std::function<void(Context&, CheckResult&)> run;
};

std::string format_float(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string one_based(const std::vector<std::size_t>& index) {
  std::string s = "(";
  for (std::size_t a = 0; a < index.size(); ++a) s += (a ? "," : "") + std::to_string(index[a] + 1);
  return s + ")";
}

void exact_tensor(CheckResult& out, const Tensor& residual) {
  out.tol = "0";
  const auto first = residual.first_nonzero();
  if (!first) {
    out.residual = "0";
    out.pass = true;
    return;
  }
  out.residual = format_rational(residual.max_abs());
  out.pass = false;
  out.note = std::to_string(residual.nonzero_count()) + " nonzero components, first at " + one_based(*first);
}

void exact_family(CheckResult& out, const PolynomialFamily& family) {
  out.tol = "0";
  if (family.is_zero()) {
    out.residual = "0";
    out.pass = true;
    return;
  }
  out.residual = format_rational(family.max_abs_coefficient());
  out.pass = false;
  std::string poly = family.nonzero.front().poly.to_string();
  if (poly.size() > 80) poly = poly.substr(0, 77) + "...";
  out.note = std::to_string(family.nonzero.size()) + " nonzero components, first at " +
             one_based(family.nonzero.front().index) + ": " + poly;
}

/// Max over samples of `f(k)` against a scaled tolerance.
void float_sweep(CheckResult& out, Context& ctx, double tol, const std::function<double(std::size_t)>& f) {
  const double scaled = tol * ctx.options().tol_scale;
  double worst = 0.0;
  std::size_t failures = 0;
  for (std::size_t k = 0; k < ctx.options().samples; ++k) {
    const double v = f(k);
    if (!(v <= scaled)) ++failures;
    if (!(v <= worst)) worst = v;  // NaN propagates into the report
  }
  out.residual = format_float(worst);
  out.tol = format_float(scaled);
  out.pass = failures == 0;
  out.note = failures == 0 ? "" : std::to_string(failures) + " of " + std::to_string(ctx.options().samples) +
                                      " samples above tolerance";
}

const std::vector<Check>& algebra_checks() {
  static const std::vector<Check> checks = {
      {"structure_jacobi", "C^s_ip C^q_sn + C^s_ni C^q_sp + C^s_pn C^q_si = 0", CheckMode::Exact,
       [](Context& ctx, CheckResult& out) { exact_tensor(out, check_structure_jacobi(ctx.algebra())); }},
  };
  return checks;
}

Check cybe_check() {
  return {"cybe", "C^n_sp r^sj r^pl + C^j_sp r^sl r^pn + C^l_sp r^sn r^pj = 0", CheckMode::Exact,
          [](Context& ctx, CheckResult& out) { exact_tensor(out, ctx.cybe()); }};
}

const std::vector<Check>& cybe_checks() {
  static const std::vector<Check> checks = {
      cybe_check(),
      {"coboundary_cocycle", "alpha = delta r: alpha^kl_s C^s_ij = alpha^ml_j C^k_im + alpha^km_j C^l_im - alpha^ml_i C^k_jm - alpha^km_i C^l_jm",
       CheckMode::Exact,
       [](Context& ctx, CheckResult& out) { exact_tensor(out, check_cocycle(ctx.algebra(), ctx.delta_r())); }},
      {"cocycle_alpha", "given alpha: alpha^kl_s C^s_ij = alpha^ml_j C^k_im + alpha^km_j C^l_im - alpha^ml_i C^k_jm - alpha^km_i C^l_jm",
       CheckMode::Exact,
       [](Context& ctx, CheckResult& out) { exact_tensor(out, check_cocycle(ctx.algebra(), *ctx.doc().cocycle())); }},
  };
  return checks;
}

const std::vector<Check>& bracket_checks() {
  static const std::vector<Check> checks = {
      cybe_check(),
      {"theta_invariance", "C^l_sn C^k_ij eta_l eta_k dTheta/deta_s = 0", CheckMode::Exact,
       [](Context& ctx, CheckResult& out) {
         exact_family(out, theta_invariance_residual(ctx.algebra(), ctx.doc().theta_polynomial()));
       }},
      {"beta_equivariance",
       "C^q_sn b^sr_ij + C^r_sn b^qs_ij - C^s_in b^qr_sj - C^s_jn b^qr_is = 1/2 (C^q_is C^r_jl + C^r_is C^q_jl) alpha^sl_n",
       CheckMode::Exact,
       [](Context& ctx, CheckResult& out) {
         exact_tensor(out, beta_identity_residual(ctx.algebra(), ctx.beta(), ctx.delta_r()));
       }},
      {"jacobi", "omega_ij d_i omega_kl + omega_ik d_i omega_lj + omega_il d_i omega_jk = 0", CheckMode::Exact,
       [](Context& ctx, CheckResult& out) {
         exact_family(out, jacobi_residual(build_bracket(ctx.algebra(), ctx.r(), ctx.theta())));
       }},
      {"beta_jacobi", "sum over cyclic (q,r,m) and cyclic (i,j,k) of b^qr_si b^sm_jk = 0", CheckMode::Exact,
       [](Context& ctx, CheckResult& out) { exact_tensor(out, beta_jacobi_residual(ctx.algebra(), ctx.beta())); }},
      {"beta_jacobi_bridge", "beta-Jacobi sum = 1/4 [C^q_js (C^m_ku C^r_iw + C^r_ku C^m_iw) + cyclic(q,m,r)] T^suw",
       CheckMode::Exact,
       [](Context& ctx, CheckResult& out) {
         Tensor diff = beta_jacobi_residual(ctx.algebra(), ctx.beta());
         diff -= kBetaJacobiToKernelFormRatio * eq22_form(ctx.algebra(), ctx.r());
         exact_tensor(out, diff);
       }},
      {"infinitesimal_equivariance",
       "C^l_sn eta_l d_s omega_ij = C^k_in omega_kj + C^l_jn omega_il + C^s_ik C^p_jl alpha^kl_n eta_s eta_p",
       CheckMode::Exact,
       [](Context& ctx, CheckResult& out) {
         const PoissonTensor omega = build_bracket(ctx.algebra(), ctx.r(), ctx.theta());
         exact_family(out, infinitesimal_equivariance_residual(ctx.algebra(), ctx.delta_r(), omega));
       }},
      {"falls_short", "beta(a = 1/4) leaves exactly -a C^m_ij [alpha^qs_n C^r_ms + alpha^rs_n C^q_ms]", CheckMode::Exact,
       [](Context& ctx, CheckResult& out) {
         const QuadraticBeta general = build_beta_general(ctx.algebra(), ctx.delta_r(), kFallsShortScalar);
         Tensor diff = beta_identity_residual(ctx.algebra(), general, ctx.delta_r());
         diff -= falls_short_term(ctx.algebra(), ctx.delta_r(), kFallsShortScalar);
         exact_tensor(out, diff);
       }},
  };
  return checks;
}

const std::vector<Check>& pair_checks() {
  static const std::vector<Check> checks = {
      {"poisson_pair", "[C^s_ij eta_s Theta, b^kl_ij eta_k eta_l] = 0 (mixed Jacobiator)", CheckMode::Exact,
       [](Context& ctx, CheckResult& out) {
         const PoissonTensor linear = linear_bracket(ctx.algebra(), ctx.theta());
         const PoissonTensor quadratic = quadratic_bracket(ctx.algebra(), ctx.beta());
         exact_family(out, compatibility_residual(linear, quadratic));
       }},
  };
  return checks;
}

const std::vector<Check>& group_checks() {
  static const std::vector<Check> checks = {
      {"group_law", "x x^-1 = x^-1 x = 1", CheckMode::Float,
       [](Context& ctx, CheckResult& out) {
         float_sweep(out, ctx, kGroupLawTol, [&](std::size_t k) { return group_law_sanity(ctx.model(), ctx.samples().x[k]); });
       }},
      {"ad_multiplicativity", "A(xy) = A(x) A(y)", CheckMode::Float,
       [](Context& ctx, CheckResult& out) {
         float_sweep(out, ctx, kAdjointTol, [&](std::size_t k) {
           return ad_multiplicativity_residual(ctx.model(), ctx.samples().x[k], ctx.samples().y[k]);
         });
       }},
      {"ad_derivative", "d/dt A(exp t xi) at 0 = C^i_sj xi^s (central difference, h = 1e-5)", CheckMode::Float,
       [](Context& ctx, CheckResult& out) {
         float_sweep(out, ctx, kAdDerivativeTol,
                     [&](std::size_t k) { return ad_derivative_residual(ctx.model(), ctx.samples().xi[k]); });
       }},
      {"ad_inverse", "A(y) A(y^-1) = 1", CheckMode::Float,
       [](Context& ctx, CheckResult& out) {
         float_sweep(out, ctx, kAdjointTol, [&](std::size_t k) { return ad_inverse_residual(ctx.model(), ctx.samples().y[k]); });
       }},
      {"ad_invariance", "C^i_jk = A^i_s(y) C^s_pq A^p_j(y^-1) A^q_k(y^-1)", CheckMode::Float,
       [](Context& ctx, CheckResult& out) {
         float_sweep(out, ctx, kAdjointTol,
                     [&](std::size_t k) { return ad_invariance_residual(ctx.model(), ctx.samples().y[k]); });
       }},
      {"sigma_cocycle", "sigma(xy) = sigma(x) + A(x) sigma(y) A(x)^T with sigma = A r A^T - r", CheckMode::Float,
       [](Context& ctx, CheckResult& out) {
         float_sweep(out, ctx, kFunctionalTol, [&](std::size_t k) {
           return sigma_cocycle_residual(ctx.model(), ctx.r(), ctx.samples().x[k], ctx.samples().y[k]);
         });
       }},
      {"sigma_r0_plus_control", "sigma = A r A^T + r breaks the cocycle identity (deviation >= 1e-3 on 95% of samples)",
       CheckMode::Float,
       [](Context& ctx, CheckResult& out) {
         const std::size_t n = ctx.options().samples;
         std::size_t broken = 0;
         double smallest = INFINITY;
         for (std::size_t k = 0; k < n; ++k) {
           const double v =
               sigma_cocycle_residual(ctx.model(), ctx.r(), ctx.samples().x[k], ctx.samples().y[k], ctx.r());
           if (v >= kControlFloor) ++broken;
           smallest = std::min(smallest, v);
         }
         out.residual = format_float(smallest);
         out.tol = ">=" + format_float(kControlFloor);
         out.pass = static_cast<double>(broken) >= std::ceil(kControlFraction * static_cast<double>(n));
         out.note = std::to_string(broken) + " of " + std::to_string(n) + " samples at or above the floor";
       }},
      {"sigma_pde", "d/dt sigma(x exp(t e_k)) at 0 = A(x) (delta r)_k A(x)^T (central difference, h = 1e-5)",
       CheckMode::Float,
       [](Context& ctx, CheckResult& out) {
         float_sweep(out, ctx, kFiniteDifferenceTol, [&](std::size_t k) {
           return sigma_pde_residual(ctx.model(), ctx.r(), ctx.samples().x[k], k % ctx.model().dim());
         });
       }},
      {"coadjoint_equivariance",
       "omega_ij(A(y^-1)^T eta) = A^k_i(y^-1) A^l_j(y^-1) omega_kl(eta) + C^m_iq C^n_jt A^s_m(y^-1) A^p_n(y^-1) eta_s eta_p sigma^qt(y)",
       CheckMode::Float,
       [](Context& ctx, CheckResult& out) {
         if (!ctx.cybe().is_zero()) raise(ErrorKind::CYBEViolated, "r does not solve the CYBE; equivariance not certified");
         const PoissonTensor omega = build_bracket(ctx.algebra(), ctx.r(), ctx.theta());
         float_sweep(out, ctx, kFunctionalTol, [&](std::size_t k) {
           return coadjoint_equivariance_residual(ctx.model(), omega, ctx.r(), ctx.samples().y[k], ctx.samples().eta[k]);
         });
       }},
  };
  return checks;
}

const std::vector<Check>& gl_checks() {
  static const std::vector<Check> checks = {
      {"gl_structure", "C^(a,i)_(b,j)(c,k) = d_ab d_jc d_ki - d_ac d_kb d_ji", CheckMode::Exact,
       [](Context& ctx, CheckResult& out) {
         const std::size_t n = detect_gl(ctx.algebra());
         exact_tensor(out, gl_structure_doubled(n) - ctx.algebra().structure());
       }},
      {"gl_cross_check", "doubled-index gl(n) bracket = generic bracket with flattened r", CheckMode::Exact,
       [](Context& ctx, CheckResult& out) {
         const std::size_t n = detect_gl(ctx.algebra());
         const Scalar worst = cross_check(n, unflatten(ctx.r()), ctx.theta());
         out.tol = "0";
         out.residual = format_rational(worst);
         out.pass = is_zero(worst);
       }},
  };
  return checks;
}

const std::vector<Check>& checks_of(std::string_view suite) {
  if (suite == "algebra") return algebra_checks();
  if (suite == "cybe") return cybe_checks();
  if (suite == "bracket") return bracket_checks();
  if (suite == "pair") return pair_checks();
  if (suite == "group") return group_checks();
  if (suite == "gl-cross") return gl_checks();
  raise(ErrorKind::UnknownSuite, "unknown suite \"" + std::string(suite) + "\"");
}

void run_one(Context& ctx, VerificationReport& report, const Check& check) {
  CheckResult out{check.id, check.eq, check.mode, "", "", false, ""};
  try {
    check.run(ctx, out);
  } catch (const Error& e) {
    out.residual = "n/a";
    if (out.tol.empty()) out.tol = check.mode == CheckMode::Exact ? "0" : "n/a";
    out.pass = false;
    out.note = e.what();
  }
  report.add(std::move(out));
}

/// Empty when the suite applies to the document, otherwise the reason.
std::string not_applicable(const InputDocument& doc, const LieAlgebra& algebra, std::string_view suite) {
  if (suite == "group" && !doc.matrix_basis) return "no matrix_basis";
  if (suite == "gl-cross" && detect_gl(algebra) == 0) return "algebra is not gl(n) in the matrix-unit basis";
  return "";
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"algebra", "cybe", "bracket", "pair", "group", "gl-cross", "all"};
  return names;
}

std::vector<std::string> suite_checks(std::string_view suite) {
  std::vector<std::string> ids;
  auto append = [&](std::string_view name) {
    for (const auto& check : checks_of(name)) {
      if (std::find(ids.begin(), ids.end(), check.id) == ids.end()) ids.push_back(check.id);
    }
  };
  if (suite == "all") {
    for (const auto& name : suite_names()) {
      if (name != "all") append(name);
    }
  } else {
    append(suite);
  }
  return ids;
}

std::size_t detect_gl(const LieAlgebra& algebra) {
  std::size_t n = 1;
  while (n * n < algebra.dim()) ++n;
  if (n * n != algebra.dim() || n > 4) return 0;
  return algebra == gl_structure_constants(n) ? n : 0;
}

VerificationReport run_suite(const InputDocument& doc, std::string_view suite, const SuiteOptions& options) {
  std::vector<std::string> parts;
  if (suite == "all") {
    for (const auto& name : suite_names()) {
      if (name != "all") parts.push_back(name);
    }
  } else {
    checks_of(suite);  // rejects unknown names
    parts.emplace_back(suite);
  }

  Context ctx(doc, options);
  VerificationReport report;
  report.suite = std::string(suite);
  report.seed = options.seed;
  report.digest = sha256_hex(emit_input(doc));

  for (const auto& part : parts) {
    const std::string reason = not_applicable(doc, ctx.algebra(), part);
    if (!reason.empty()) {
      if (suite != "all") {
        raise(part == "group" ? ErrorKind::MissingField : ErrorKind::AlgebraMismatch, part + " suite: " + reason);
      }
      report.skipped.push_back(part + ": " + reason);
      continue;
    }
    if (part == "group") ctx.model();  // a bad basis is an input error, not a failed check
    for (const auto& check : checks_of(part)) {
      const bool seen = std::any_of(report.entries.begin(), report.entries.end(),
                                    [&](const CheckResult& e) { return e.check == check.id; });
      if (seen) continue;
      if (check.id == "cocycle_alpha" && !doc.alpha) continue;
      if (check.id == "sigma_r0_plus_control" && ctx.r().values().is_zero()) continue;
      run_one(ctx, report, check);
    }
  }
  return report;
}

}  // namespace plk
