#include "hellinger/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "hellinger/barycentre.hpp"
#include "hellinger/bregman.hpp"
#include "hellinger/calculus.hpp"
#include "hellinger/distances.hpp"
#include "hellinger/legendre_cex.hpp"
#include "hellinger/means.hpp"
#include "hellinger/numdiff.hpp"
#include "hellinger/quadrature.hpp"
#include "hellinger/random.hpp"

namespace hellinger {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::LessEqual: return "<=";
    case Relation::Greater: return ">";
    case Relation::GreaterEqual: return ">=";
  }
  return "?";
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

std::string g12(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

// Collects checks and tracks worst-case witnesses across a sweep.
class Recorder {
 public:
  explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

  void add(std::string name, double value, Relation rel, double threshold,
           std::string detail = {}) {
    bool ok = false;
    switch (rel) {
      case Relation::LessEqual: ok = value <= threshold; break;
      case Relation::Greater: ok = value > threshold; break;
      case Relation::GreaterEqual: ok = value >= threshold; break;
    }
    report_.checks.push_back(Check{std::move(name), value, rel, threshold, ok, std::move(detail)});
  }
  void le(std::string name, double value, double threshold, std::string detail = {}) {
    add(std::move(name), value, Relation::LessEqual, threshold, std::move(detail));
  }
  void gt(std::string name, double value, double threshold, std::string detail = {}) {
    add(std::move(name), value, Relation::Greater, threshold, std::move(detail));
  }
  void ge(std::string name, double value, double threshold, std::string detail = {}) {
    add(std::move(name), value, Relation::GreaterEqual, threshold, std::move(detail));
  }

  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
};

// Running maximum (or minimum) with the sample index where it occurred.
struct Worst {
  Worst(bool track_max = true) : max(track_max), value(track_max ? -INFINITY : INFINITY) {}
  void see(double v, std::size_t k) {
    // A NaN sticks so it cannot hide behind a comparison.
    if (std::isnan(value)) return;
    if (std::isnan(v) || (max ? v > value : v < value)) {
      value = v;
      index = k;
    }
  }
  std::string where() const { return "sample " + std::to_string(index); }
  bool max;
  double value;
  std::size_t index = 0;
};

std::size_t scaled(std::size_t samples, std::size_t divisor) {
  return std::max<std::size_t>(1, samples / divisor);
}

Index random_dim(Rng& rng, Index lo, Index hi) {
  return lo + static_cast<Index>(rng.index(static_cast<std::size_t>(hi - lo + 1)));
}

// Spectrum in [0.5, 5]: moderate conditioning for derivative and solver sweeps.
SpdMatrix moderate_spd(Rng& rng, Index n) { return random_spd(rng, n, 10.0, 0.5); }

HermitianMatrix unit_direction(Rng& rng, Index n) {
  const HermitianMatrix y = random_hermitian(rng, n);
  return y * (1.0 / y.matrix().norm());
}

std::vector<SpdMatrix> random_family(Rng& rng, Index n, std::size_t m) {
  std::vector<SpdMatrix> as;
  for (std::size_t j = 0; j < m; ++j) as.push_back(moderate_spd(rng, n));
  return as;
}

WeightVector random_weights(Rng& rng, std::size_t m) {
  std::vector<double> w(m);
  for (double& x : w) x = rng.uniform(0.1, 1.0);
  return WeightVector(std::move(w));
}

SpdMatrix shifted(const SpdMatrix& x, const HermitianMatrix& y, double t) {
  return SpdMatrix(HermitianMatrix::symmetrized(x.matrix() + t * y.matrix()));
}

double rel_diff(const Matrix& a, const Matrix& b) {
  return (a - b).norm() / std::max(1e-300, b.norm());
}

SpdMatrix literal(double a, double b, double d) {
  RealMatrix m(2, 2);
  m << a, b, b, d;
  return SpdMatrix::from_real(m);
}

// ---------------------------------------------------------------------------

void triangle_counterexample(Recorder& rec, DistanceKind kind, const SpdMatrix& a,
                             const SpdMatrix& b, const SpdMatrix& c, double expect_ab,
                             double expect_acb) {
  const std::string tag(to_string(kind));
  const double ab = distance(kind, a, b);
  const double acb = distance(kind, a, c) + distance(kind, c, b);
  rec.le(tag + ".distance_ab", std::abs(ab - expect_ab), 5e-4,
         "d(A,B) = " + g12(ab) + ", expected " + g12(expect_ab));
  rec.le(tag + ".distance_acb", std::abs(acb - expect_acb), 5e-4,
         "d(A,C) + d(C,B) = " + g12(acb) + ", expected " + g12(expect_acb));
  rec.gt(tag + ".triangle_violation", ab - acb, 0.0,
         "d(A,B) - d(A,C) - d(C,B) = " + g12(ab - acb));
}

SuiteReport suite_counterexamples(const VerifyOptions&) {
  Recorder rec("counterexamples");
  triangle_counterexample(rec, DistanceKind::D3, literal(2, 5, 17), literal(13, 8, 5),
                          literal(5, 3, 10), 5.0347, 4.6768);
  triangle_counterexample(rec, DistanceKind::D4, literal(4, -7, 13), literal(8, -2, 1),
                          literal(5, -4, 5), 3.3349, 3.3146);
  return rec.take();
}

// ---------------------------------------------------------------------------

SuiteReport suite_trace_chain(const VerifyOptions& opt) {
  Recorder rec("trace-chain");
  Rng rng(opt.seed);
  std::array<Worst, 3> chain{Worst(false), Worst(false), Worst(false)};
  std::array<Worst, 3> order{Worst(false), Worst(false), Worst(false)};
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const Index n = random_dim(rng, 2, 6);
    const double cond = rng.log_uniform(1.0, 1e4);
    const double scale = rng.log_uniform(1e-2, 1e2 / cond);
    const SpdMatrix a = random_spd(rng, n, cond, scale);
    const SpdMatrix b = random_spd(rng, n, cond, scale);
    const TraceChain t = trace_chain(a, b);
    chain[0].see(t.log_euclidean - t.geometric, k);
    chain[1].see(t.sqrt_product - t.log_euclidean, k);
    chain[2].see(t.product_sqrt - t.sqrt_product, k);
    const double p3 = divergence(DistanceKind::D3, a, b);
    const double p4 = divergence(DistanceKind::D4, a, b);
    const double p1 = divergence(DistanceKind::D1, a, b);
    const double p2 = divergence(DistanceKind::D2, a, b);
    order[0].see(p3 - p4, k);
    order[1].see(p4 - p1, k);
    order[2].see(p1 - p2, k);
  }
  const char* chain_names[] = {"tr_logeuclid_minus_tr_geometric",
                               "tr_sqrt_product_minus_tr_logeuclid",
                               "tr_product_sqrt_minus_tr_sqrt_product"};
  const char* order_names[] = {"phi3_minus_phi4", "phi4_minus_phi1", "phi1_minus_phi2"};
  for (int i = 0; i < 3; ++i) {
    rec.ge(std::string("chain.") + chain_names[i], chain[i].value, -1e-10, chain[i].where());
  }
  for (int i = 0; i < 3; ++i) {
    rec.ge(std::string("order.") + order_names[i], order[i].value, -1e-10, order[i].where());
  }
  return rec.take();
}

// ---------------------------------------------------------------------------

SuiteReport suite_divergence_axioms(const VerifyOptions& opt) {
  Recorder rec("divergence-axioms");
  Rng rng(opt.seed);
  const std::array<DistanceKind, 4> kinds{DistanceKind::D1, DistanceKind::D2, DistanceKind::D3,
                                          DistanceKind::D4};
  std::array<Worst, 4> self{}, fd_grad{};
  Worst grad3, grad4, hess;
  for (std::size_t k = 0; k < scaled(opt.samples, 10); ++k) {
    const Index n = random_dim(rng, 2, 5);
    const SpdMatrix a = moderate_spd(rng, n);
    const HermitianMatrix y = unit_direction(rng, n);
    const double h = 1e-3 * a.min_eigenvalue();
    for (std::size_t i = 0; i < kinds.size(); ++i) {
      self[i].see(divergence(kinds[i], a, a), k);
      const HermitianMatrix g = numdiff::gradient(
          [&](const HermitianMatrix& x) { return divergence(kinds[i], a, SpdMatrix(x)); }, a, h);
      fd_grad[i].see(g.matrix().norm(), k);
    }
    grad3.see(grad_phi3(a, a).matrix().norm(), k);
    grad4.see(grad_phi4(a, a).matrix().norm(), k);

    // (Phi3(A, A+tY) + Phi3(A, A-tY)) / t^2 has an even expansion in t with
    // limit D^2 Phi3(A,A)(Y,Y) = 2 * hessian_phi3_diag.
    const double expected = hessian_phi3_diag(a, y);
    const double t0 = 0.1 * a.min_eigenvalue();
    const double limit = numdiff::richardson_even(
        [&](double t) {
          return (divergence(DistanceKind::D3, a, shifted(a, y, t)) +
                  divergence(DistanceKind::D3, a, shifted(a, y, -t))) /
                 (t * t);
        },
        t0);
    hess.see(std::abs(limit - expected) / expected, k);
  }
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    const std::string tag = kinds[i] == DistanceKind::D1   ? "phi1"
                            : kinds[i] == DistanceKind::D2 ? "phi2"
                            : kinds[i] == DistanceKind::D3 ? "phi3"
                                                           : "phi4";
    rec.le(tag + ".self_value", self[i].value, 1e-12, self[i].where());
    rec.le(tag + ".fd_gradient_at_diagonal", fd_grad[i].value, 1e-6, fd_grad[i].where());
  }
  rec.le("phi3.analytic_gradient_at_diagonal", grad3.value, 1e-10, grad3.where());
  rec.le("phi4.analytic_gradient_at_diagonal", grad4.value, 1e-10, grad4.where());
  rec.le("phi3.hessian_identity_relative_error", hess.value, 1e-4, hess.where());

  Worst jc3, jc4;
  for (std::size_t k = 0; k < scaled(opt.samples, 2); ++k) {
    const Index n = random_dim(rng, 2, 5);
    const SpdMatrix a1 = moderate_spd(rng, n), a2 = moderate_spd(rng, n);
    const SpdMatrix b1 = moderate_spd(rng, n), b2 = moderate_spd(rng, n);
    const SpdMatrix am(HermitianMatrix::symmetrized((a1.matrix() + a2.matrix()) / 2.0));
    const SpdMatrix bm(HermitianMatrix::symmetrized((b1.matrix() + b2.matrix()) / 2.0));
    for (auto [kind, worst] : {std::pair{DistanceKind::D3, &jc3}, std::pair{DistanceKind::D4, &jc4}}) {
      const double lhs = divergence(kind, am, bm);
      const double rhs = 0.5 * (divergence(kind, a1, b1) + divergence(kind, a2, b2));
      worst->see(lhs - rhs, k);
    }
  }
  rec.le("phi3.joint_convexity_excess", jc3.value, 1e-10, jc3.where());
  rec.le("phi4.joint_convexity_excess", jc4.value, 1e-10, jc4.where());
  return rec.take();
}

// ---------------------------------------------------------------------------

SuiteReport suite_derivatives(const VerifyOptions& opt) {
  Recorder rec("derivatives");
  Rng rng(opt.seed);
  const std::array<SpectralFunction, 3> fns{SpectralFunction::sqrt(), SpectralFunction::log(),
                                            SpectralFunction::exp()};
  std::array<Worst, 3> frechet_err{};
  Worst geo_quad, sqrt_quad, log_quad, trl_quad, g3_fd, g4_fd;
  for (std::size_t k = 0; k < scaled(opt.samples, 10); ++k) {
    const Index n = random_dim(rng, 2, 5);
    const SpdMatrix x = moderate_spd(rng, n);
    const SpdMatrix a = moderate_spd(rng, n);
    const HermitianMatrix y = unit_direction(rng, n);
    const double h = 1e-3 * x.min_eigenvalue();
    for (std::size_t i = 0; i < fns.size(); ++i) {
      const Matrix exact = frechet(fns[i], x, y).matrix();
      const Matrix fd = numdiff::central_richardson(
          [&](double t) -> Matrix {
            const SpdMatrix xt = shifted(x, y, t);
            switch (fns[i].kind()) {
              case SpectralFunction::Kind::Sqrt: return sqrtm(xt).matrix();
              case SpectralFunction::Kind::Log: return logm(xt).matrix();
              default: return expm(xt.hermitian()).matrix();
            }
          },
          h);
      frechet_err[i].see(rel_diff(fd, exact), k);
    }
    geo_quad.see(rel_diff(frechet_geometric_quadrature(a, x, y).matrix(),
                          frechet_geometric(a, x, y).matrix()), k);
    sqrt_quad.see(rel_diff(frechet_sqrt_quadrature(x, y).matrix(),
                           frechet(SpectralFunction::sqrt(), x, y).matrix()), k);
    log_quad.see(rel_diff(frechet_log_quadrature(x, y).matrix(),
                          frechet(SpectralFunction::log(), x, y).matrix()), k);
    trl_quad.see(rel_diff(d_tr_log_euclidean_quadrature(a, x).matrix(),
                          d_tr_log_euclidean(a, x).matrix()), k);

    const HermitianMatrix g3 = grad_phi3(a, x);
    const HermitianMatrix g3fd = numdiff::gradient(
        [&](const HermitianMatrix& z) { return divergence(DistanceKind::D3, a, SpdMatrix(z)); }, x,
        h);
    g3_fd.see((g3.matrix() - g3fd.matrix()).norm() / std::max(1.0, g3.matrix().norm()), k);
    const HermitianMatrix g4 = grad_phi4(a, x);
    const HermitianMatrix g4fd = numdiff::gradient(
        [&](const HermitianMatrix& z) { return divergence(DistanceKind::D4, a, SpdMatrix(z)); }, x,
        h);
    g4_fd.see((g4.matrix() - g4fd.matrix()).norm() / std::max(1.0, g4.matrix().norm()), k);
  }
  for (std::size_t i = 0; i < fns.size(); ++i) {
    rec.le("frechet_" + std::string(fns[i].name()) + ".fd_relative_error", frechet_err[i].value,
           1e-6, frechet_err[i].where());
  }
  rec.le("frechet_geometric.quadrature_relative_error", geo_quad.value, 1e-7, geo_quad.where());
  rec.le("frechet_sqrt.quadrature_relative_error", sqrt_quad.value, 1e-7, sqrt_quad.where());
  rec.le("frechet_log.quadrature_relative_error", log_quad.value, 1e-7, log_quad.where());
  rec.le("d_tr_log_euclidean.quadrature_relative_error", trl_quad.value, 1e-7, trl_quad.where());
  rec.le("grad_phi3.fd_error", g3_fd.value, 1e-6, g3_fd.where());
  rec.le("grad_phi4.fd_error", g4_fd.value, 1e-6, g4_fd.where());

  Worst sq;
  for (double v : {1e-2, 0.25, 1.0, 3.0, 100.0}) {
    sq.see(std::abs(quad_check(QuadCheck::SqrtRepresentation, v) - std::sqrt(v)) / std::sqrt(v),
           0);
  }
  rec.le("quad_check.sqrt_representation_relative_error", sq.value, 1e-8);
  const double first = quad_check(QuadCheck::FirstOrderNormalization);
  const double second = quad_check(QuadCheck::SecondOrderNormalization);
  rec.le("quad_check.first_order_normalization", std::abs(first - 0.5), 1e-8,
         "value " + g12(first) + ", expected 0.5");
  rec.le("quad_check.second_order_normalization", std::abs(second - 0.5), 1e-8,
         "value " + g12(second) + ", expected 0.5");
  return rec.take();
}

// ---------------------------------------------------------------------------

SuiteReport suite_barycentre(const VerifyOptions& opt) {
  Recorder rec("barycentre");
  Rng rng(opt.seed);
  const SolverConfig cfg;
  const std::array<MeanKind, 4> kinds{MeanKind::wasserstein(), MeanKind::power_t(0.5),
                                      MeanKind::log_euclid_type(), MeanKind::power_t(0.3)};
  const std::array<std::string, 4> tags{"wasserstein", "power_half", "logeuclid_type",
                                        "power_0.3"};
  std::array<Worst, 4> residual{}, stationarity{}, restart{};
  std::array<int, 4> failures{};
  int bracket_violations = 0;
  std::string bracket_detail;
  for (std::size_t k = 0; k < scaled(opt.samples, 100); ++k) {
    const Index n = random_dim(rng, 2, 5);
    const std::size_t m = 2 + rng.index(4);
    const std::vector<SpdMatrix> as = random_family(rng, n, m);
    const WeightVector w = random_weights(rng, m);
    for (std::size_t i = 0; i < kinds.size(); ++i) {
      try {
        const SolveResult r = solve(kinds[i], as, w, cfg);
        residual[i].see(r.report.converged ? r.report.final_residual : INFINITY, k);
        if (i == 2) bracket_violations += r.report.bracket_violations;
        if (i < 3) {
          const double h = 1e-3 * r.x.min_eigenvalue();
          const HermitianMatrix g = numdiff::gradient(
              [&](const HermitianMatrix& z) { return objective(kinds[i], SpdMatrix(z), as, w); },
              r.x, h);
          stationarity[i].see(g.matrix().norm(), k);
        }
        const UniquenessReport u = check_uniqueness(kinds[i], as, w, cfg, rng, 5, 1e-8);
        restart[i].see(u.all_converged ? u.max_pairwise_distance : INFINITY, k);
      } catch (const ConsistencyError& e) {
        ++failures[i];
        ++bracket_violations;
        bracket_detail = e.what();
      }
    }
  }
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    rec.le(tags[i] + ".relative_residual", residual[i].value, cfg.tol, residual[i].where());
    if (i < 3) {
      rec.le(tags[i] + ".objective_fd_stationarity", stationarity[i].value, 1e-6,
             stationarity[i].where());
    }
    rec.le(tags[i] + ".restart_max_distance", restart[i].value, 1e-8, restart[i].where());
  }
  rec.le("logeuclid_type.bracket_violations", bracket_violations, 0.0, bracket_detail);

  // The d1 barycentre is Q_{1/2}, the minimiser of sum_j w_j Phi1(X, A_j).
  Worst qhalf_stationarity;
  for (std::size_t k = 0; k < scaled(opt.samples, 100); ++k) {
    const Index n = random_dim(rng, 2, 5);
    const std::size_t m = 2 + rng.index(4);
    const std::vector<SpdMatrix> as = random_family(rng, n, m);
    const WeightVector w = random_weights(rng, m);
    const SpdMatrix q = q_half(as, w);
    const HermitianMatrix g = numdiff::gradient(
        [&](const HermitianMatrix& z) {
          const SpdMatrix zs(z);
          double s = 0.0;
          for (std::size_t j = 0; j < m; ++j) s += w[j] * divergence(DistanceKind::D1, zs, as[j]);
          return s;
        },
        q, 1e-3 * q.min_eigenvalue());
    qhalf_stationarity.see(g.matrix().norm(), k);
  }
  rec.le("q_half.phi1_fd_stationarity", qhalf_stationarity.value, 1e-6, qhalf_stationarity.where());

  Worst collapse;
  for (std::size_t k = 0; k < scaled(opt.samples, 100); ++k) {
    const Index n = random_dim(rng, 2, 5);
    const std::size_t m = 2 + rng.index(4);
    const Matrix u = random_unitary(rng, n);
    std::vector<SpdMatrix> as;
    for (std::size_t j = 0; j < m; ++j) {
      RealVector l(n);
      for (Index i = 0; i < n; ++i) l(i) = rng.log_uniform(0.5, 5.0);
      as.push_back(spd_with_basis(u, l));
    }
    const WeightVector w = random_weights(rng, m);
    const SpdMatrix q = q_half(as, w);
    for (std::size_t i = 0; i < 3; ++i) {
      const SolveResult r = solve(kinds[i], as, w, cfg);
      collapse.see(r.report.converged ? rel_diff(r.x.matrix(), q.matrix()) : INFINITY, k);
    }
  }
  rec.le("commuting_collapse_to_q_half", collapse.value, 1e-8, collapse.where());
  return rec.take();
}

// ---------------------------------------------------------------------------

SuiteReport suite_d4_guess(const VerifyOptions& opt) {
  Recorder rec("d4-guess");
  Rng rng(opt.seed);
  const WeightVector w = WeightVector::uniform(2);
  Worst wass, power, guess(false), guess_abs(false);
  std::size_t guess_failures = 0, pairs = 0;
  for (std::size_t k = 0; k < scaled(opt.samples, 10); ++k) {
    const Index n = random_dim(rng, 2, 5);
    const SpdMatrix a = moderate_spd(rng, n), b = moderate_spd(rng, n);
    const std::array<SpdMatrix, 2> pair{a, b};
    const MeanKind mw = MeanKind::wasserstein(), mp = MeanKind::power_t(0.5);
    wass.see(fixed_point_residual(mw, closed_form_m2(mw, a, b), pair, w), k);
    power.see(fixed_point_residual(mp, closed_form_m2(mp, a, b), pair, w), k);
    const D4GuessReport r = refute_d4_guess(a, b);
    if (r.inconclusive) continue;
    ++pairs;
    guess.see(r.relative_residual, k);
    guess_abs.see(r.relative_residual, k);
    if (r.guess_fails) ++guess_failures;
  }
  rec.le("wasserstein_closed_form.relative_residual", wass.value, 1e-8, wass.where());
  rec.le("power_half_closed_form.relative_residual", power.value, 1e-8, power.where());
  rec.gt("logeuclid_guess.min_relative_residual", guess.value, 1e-6,
         guess.where() + "; " + std::to_string(guess_failures) + " of " + std::to_string(pairs) +
             " non-commuting pairs exceed 1e-6 relative");
  // Refutation beyond roundoff: commuting pairs give residuals near 1e-16.
  rec.gt("logeuclid_guess.min_relative_residual_over_roundoff", guess_abs.value, 1e-12,
         guess_abs.where());

  const D4GuessReport fixed = refute_d4_guess(literal(2, 5, 17), literal(13, 8, 5));
  rec.gt("logeuclid_guess.reference_pair_relative_residual", fixed.relative_residual, 1e-6,
         "||C - X*||_F = " + g12(fixed.distance_to_solution));

  const SpdMatrix da = SpdMatrix::from_real(RealVector(RealVector::LinSpaced(3, 1.0, 4.0)).asDiagonal().toDenseMatrix());
  const SpdMatrix db = SpdMatrix::from_real(RealVector(RealVector::LinSpaced(3, 5.0, 0.5)).asDiagonal().toDenseMatrix());
  const D4GuessReport commuting = refute_d4_guess(da, db);
  rec.ge("logeuclid_guess.commuting_pair_inconclusive", commuting.inconclusive ? 1.0 : 0.0, 1.0);
  rec.le("logeuclid_guess.commuting_pair_residual", commuting.relative_residual, 1e-12);
  return rec.take();
}

// ---------------------------------------------------------------------------

SuiteReport suite_bregman(const VerifyOptions& opt) {
  Recorder rec("bregman");
  Rng rng(opt.seed);
  const std::array<MotherFunction, 3> mothers{MotherFunction::entropy(), MotherFunction::square(),
                                              MotherFunction::power(1.5)};
  Worst right_indep, right_arith, left_logeuclid, left_square, var_identity, phi4_min;
  std::array<Worst, 3> left_stationarity{};
  for (std::size_t k = 0; k < scaled(opt.samples, 10); ++k) {
    const Index n = random_dim(rng, 2, 5);
    const std::size_t m = 2 + rng.index(4);
    const std::vector<SpdMatrix> as = random_family(rng, n, m);
    const WeightVector w = random_weights(rng, m);

    const SpdMatrix re = right_barycentre(mothers[0], as, w);
    const SpdMatrix rs = right_barycentre(mothers[1], as, w);
    right_indep.see((re.matrix() - rs.matrix()).norm(), k);
    right_arith.see(rel_diff(re.matrix(), arithmetic_mean(as, w).matrix()), k);

    const SpdMatrix le = log_euclidean(std::span<const SpdMatrix>(as), w);
    left_logeuclid.see(rel_diff(left_barycentre(mothers[0], as, w).matrix(), le.matrix()), k);
    left_square.see(
        rel_diff(left_barycentre(mothers[1], as, w).matrix(), arithmetic_mean(as, w).matrix()), k);
    var_identity.see(
        std::abs(variance(mothers[0], as, w) - (arithmetic_mean(as, w).trace() - le.trace())), k);

    for (std::size_t i = 0; i < mothers.size(); ++i) {
      const SpdMatrix x = left_barycentre(mothers[i], as, w);
      const HermitianMatrix g = numdiff::gradient(
          [&](const HermitianMatrix& z) {
            const SpdMatrix zs(z);
            double s = 0.0;
            for (std::size_t j = 0; j < m; ++j) s += w[j] * bregman_tracial(mothers[i], zs, as[j]);
            return s;
          },
          x, 1e-3 * x.min_eigenvalue());
      left_stationarity[i].see(g.matrix().norm(), k);
    }
    phi4_min.see(std::abs(phi4_via_min(as[0], as[1]) - divergence(DistanceKind::D4, as[0], as[1])),
                 k);
  }
  rec.le("right_barycentre.instance_independence", right_indep.value, 1e-12, right_indep.where());
  rec.le("right_barycentre.equals_arithmetic_mean", right_arith.value, 1e-12, right_arith.where());
  rec.le("left_barycentre.entropy_equals_logeuclid", left_logeuclid.value, 1e-10,
         left_logeuclid.where());
  rec.le("left_barycentre.square_equals_arithmetic", left_square.value, 1e-12, left_square.where());
  for (std::size_t i = 0; i < mothers.size(); ++i) {
    rec.le("left_barycentre." + mothers[i].name() + ".fd_stationarity",
           left_stationarity[i].value, 1e-6, left_stationarity[i].where());
  }
  rec.le("variance.entropy_trace_identity", var_identity.value, 1e-10, var_identity.where());
  rec.le("phi4_via_min.equals_phi4", phi4_min.value, 1e-9, phi4_min.where());

  Worst kolmogorov, geometric;
  for (std::size_t k = 0; k < scaled(opt.samples, 10); ++k) {
    const std::size_t m = 2 + rng.index(4);
    std::vector<SpdMatrix> as;
    std::vector<double> xs;
    for (std::size_t j = 0; j < m; ++j) {
      xs.push_back(rng.log_uniform(0.1, 10.0));
      as.push_back(SpdMatrix::from_real(RealMatrix::Constant(1, 1, xs.back())));
    }
    const WeightVector w = random_weights(rng, m);
    for (const MotherFunction& mf : mothers) {
      double s = 0.0;
      for (std::size_t j = 0; j < m; ++j) s += w[j] * mf.dpsi(xs[j]);
      const double expect = mf.inv_dpsi(s);
      kolmogorov.see(std::abs(left_barycentre(mf, as, w).trace() - expect) / expect, k);
    }
    double logs = 0.0;
    for (std::size_t j = 0; j < m; ++j) logs += w[j] * std::log(xs[j]);
    geometric.see(
        std::abs(left_barycentre(mothers[0], as, w).trace() - std::exp(logs)) / std::exp(logs), k);
  }
  rec.le("scalar.kolmogorov_mean_identity", kolmogorov.value, 1e-12, kolmogorov.where());
  rec.le("scalar.entropy_geometric_mean", geometric.value, 1e-12, geometric.where());

  Worst nonneg(false), self_div, strict(false), jc_entropy;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const Index n = random_dim(rng, 2, 5);
    const SpdMatrix a = moderate_spd(rng, n), b = moderate_spd(rng, n);
    for (const MotherFunction& mf : mothers) {
      nonneg.see(bregman_tracial(mf, a, b), k);
      self_div.see(bregman_tracial(mf, a, a), k);
    }
  }
  for (std::size_t k = 0; k < scaled(opt.samples, 2); ++k) {
    const Index n = random_dim(rng, 2, 5);
    const SpdMatrix x1 = moderate_spd(rng, n), x2 = moderate_spd(rng, n), a = moderate_spd(rng, n);
    const SpdMatrix mid(HermitianMatrix::symmetrized((x1.matrix() + x2.matrix()) / 2.0));
    const double gap = 0.5 * (divergence(DistanceKind::D4, x1, a) + divergence(DistanceKind::D4, x2, a)) -
                       divergence(DistanceKind::D4, mid, a);
    strict.see(gap, k);

    const SpdMatrix b1 = moderate_spd(rng, n), b2 = moderate_spd(rng, n);
    const SpdMatrix bm(HermitianMatrix::symmetrized((b1.matrix() + b2.matrix()) / 2.0));
    jc_entropy.see(relative_entropy(mid, bm) -
                       0.5 * (relative_entropy(x1, b1) + relative_entropy(x2, b2)),
                   k);
  }
  rec.ge("bregman_tracial.min_value", nonneg.value, 0.0, nonneg.where());
  rec.le("bregman_tracial.self_value", self_div.value, 1e-12, self_div.where());
  rec.gt("phi4.strict_separate_convexity_min_gap", strict.value, 0.0, strict.where());
  rec.le("relative_entropy.joint_convexity_excess", jc_entropy.value, 1e-10, jc_entropy.where());
  return rec.take();
}

// ---------------------------------------------------------------------------

SuiteReport suite_legendre_cex(const VerifyOptions& opt) {
  using namespace legendre;
  Recorder rec("legendre-cex");
  Rng rng(opt.seed);
  const CexParams params = CexParams::defaults();
  const double c = params.gradient_at_zero();
  rec.le("gradient_at_zero.reference_value", std::abs(c - 0.744324), 5e-7,
         "(N-3) p (1 - N^(p-1)/2) = " + g12(c));

  const Vec2 g0 = grad_psibar_vector(params, Vec2::Zero());
  rec.le("vector.gradient_at_zero_closed_form_error", (g0 - Vec2::Constant(c)).norm(), 1e-9,
         "grad = (" + g12(g0(0)) + ", " + g12(g0(1)) + ")");
  Vec2 fd;
  for (int i = 0; i < 2; ++i) {
    fd(i) = numdiff::central_richardson(
        [&](double t) { return psibar_vector(params, Vec2::Unit(i) * t); }, 1e-3);
  }
  rec.le("vector.gradient_at_zero_fd_error", (fd - g0).norm(), 1e-6);
  rec.gt("vector.gradient_at_zero_min_component", g0.minCoeff(), 0.0);

  const StrictnessReport vs = verify_vector_strictness(params, opt.samples, rng);
  rec.gt("vector.min_gap", vs.min_gap, 0.0, vs.witness.value_or(std::to_string(vs.samples) + " samples"));
  rec.ge("vector.min_gap_over_linear_bound", vs.min_gap_over_bound, 1.0 - 1e-12);

  const MatrixCexReport ms = verify_matrix_cex(params, opt.samples, rng);
  const std::string witness = ms.witness.value_or("");
  rec.le("matrix.gradient_at_zero_error", ms.gradient_error, 1e-9, witness);
  rec.ge("matrix.gradient_at_zero_positive_definite", ms.gradient_positive_definite ? 1.0 : 0.0,
         1.0);
  rec.gt("matrix.min_psd_gap", ms.min_psd_gap, 0.0,
         std::to_string(ms.psd_samples) + " PSD samples");
  rec.gt("matrix.min_stationarity_residual", ms.min_stationarity_residual, 0.0,
         std::to_string(ms.grid_points) + " grid points; convexity bound " +
             g12(ms.residual_lower_bound));
  rec.ge("matrix.stationarity_residual_over_bound",
         ms.min_stationarity_residual / ms.residual_lower_bound, 1.0 - 1e-8);

  Worst consistency;
  for (std::size_t k = 0; k < scaled(opt.samples, 10); ++k) {
    const Vec2 x(rng.log_uniform(1e-3, 1e2), rng.log_uniform(1e-3, 1e2));
    const HermitianMatrix xm = HermitianMatrix::symmetrized(
        x.cast<Complex>().asDiagonal().toDenseMatrix());
    const double mv = psibar_matrix(params, xm), vv = psibar_vector(params, x);
    consistency.see(std::abs(mv - vv) / std::max(1.0, std::abs(vv)), k);
  }
  rec.le("diagonal_matrix_matches_vector", consistency.value, 1e-10, consistency.where());

  rec.add("flipped_params_gradient_sign", CexParams::gradient_at_zero(5.0, 2.0),
          Relation::LessEqual, 0.0, "p = 2 gives 1 - N/2 < 0");
  return rec.take();
}

// ---------------------------------------------------------------------------

SuiteReport suite_metric(const VerifyOptions& opt) {
  Recorder rec("metric");
  Rng rng(opt.seed);
  Worst tri1, tri2;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const Index n = random_dim(rng, 2, 5);
    const SpdMatrix a = moderate_spd(rng, n), b = moderate_spd(rng, n), c = moderate_spd(rng, n);
    for (auto [kind, worst] : {std::pair{DistanceKind::D1, &tri1}, std::pair{DistanceKind::D2, &tri2}}) {
      worst->see(distance(kind, a, c) - distance(kind, a, b) - distance(kind, b, c), k);
    }
  }
  rec.le("d1.triangle_excess", tri1.value, 1e-10, tri1.where());
  rec.le("d2.triangle_excess", tri2.value, 1e-10, tri2.where());

  Worst unitary_match, unitary_min, invariance;
  for (std::size_t k = 0; k < scaled(opt.samples, 2); ++k) {
    const Index n = random_dim(rng, 2, 5);
    const SpdMatrix a = moderate_spd(rng, n), b = moderate_spd(rng, n);
    const double d2 = distance(DistanceKind::D2, a, b);
    const UnitaryMinimum um = d2_unitary(a, b);
    unitary_match.see(std::abs(um.value - d2), k);
    // One fresh pair per random unitary.
    const Matrix u = random_unitary(rng, n);
    const double at_u = (sqrtm(a).matrix() - sqrtm(b).matrix() * u).norm();
    unitary_min.see(d2 - at_u, k);
    const Matrix v = random_unitary(rng, n);
    const SpdMatrix va(HermitianMatrix::symmetrized(v * a.matrix() * v.adjoint()));
    const SpdMatrix vb(HermitianMatrix::symmetrized(v * b.matrix() * v.adjoint()));
    for (DistanceKind kind :
         {DistanceKind::D1, DistanceKind::D2, DistanceKind::D3, DistanceKind::D4}) {
      invariance.see(std::abs(distance(kind, va, vb) - distance(kind, a, b)), k);
    }
  }
  rec.le("d2.unitary_minimum_matches", unitary_match.value, 1e-9, unitary_match.where());
  rec.le("d2.below_random_unitary_objective", unitary_min.value, 1e-12, unitary_min.where());
  rec.le("unitary_invariance", invariance.value, 1e-10, invariance.where());
  return rec.take();
}

using SuiteFn = SuiteReport (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"counterexamples", suite_counterexamples},
      {"trace-chain", suite_trace_chain},
      {"divergence-axioms", suite_divergence_axioms},
      {"derivatives", suite_derivatives},
      {"barycentre", suite_barycentre},
      {"d4-guess", suite_d4_guess},
      {"bregman", suite_bregman},
      {"legendre-cex", suite_legendre_cex},
      {"metric", suite_metric},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, const VerifyOptions& options) {
  for (const auto& [n, fn] : registry()) {
    if (n == name) return fn(options);
  }
  throw std::invalid_argument("unknown verification suite '" + std::string(name) + "'");
}

std::vector<SuiteReport> run_all(const VerifyOptions& options) {
  std::vector<SuiteReport> out;
  for (const auto& [name, fn] : registry()) out.push_back(fn(options));
  return out;
}

}  // namespace hellinger
