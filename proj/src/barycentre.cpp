#include "hellinger/barycentre.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "hellinger/distances.hpp"

namespace hellinger {

MeanKind MeanKind::power_t(double t) {
  if (!(t > 0.0 && t < 1.0)) {
    throw DomainError("MeanKind::power_t: t = " + std::to_string(t) + " is outside (0, 1)");
  }
  return MeanKind(Tag::PowerT, t);
}

std::string MeanKind::name() const {
  switch (tag_) {
    case Tag::Wasserstein: return "wasserstein";
    case Tag::PowerT: {
      std::ostringstream os;
      os << "power-t(" << t_ << ")";
      return os.str();
    }
    case Tag::LogEuclidType: return "logeuclid-type";
  }
  return "?";
}

void SolverConfig::validate() const {
  if (!(tol > 0.0)) throw DomainError("SolverConfig: tol must be positive");
  if (max_iter <= 0) throw DomainError("SolverConfig: max_iter must be positive");
  if (!(damping > 0.0 && damping <= 1.0)) {
    throw DomainError("SolverConfig: damping must lie in (0, 1]");
  }
}

SpdMatrix mean_map(const MeanKind& kind, const SpdMatrix& x, const SpdMatrix& a) {
  require_same_dim(x, a, "mean_map");
  switch (kind.tag()) {
    case MeanKind::Tag::Wasserstein: {
      const Matrix rx = sqrtm(x).matrix();
      return sqrtm(SpdMatrix(HermitianMatrix::symmetrized(rx * a.matrix() * rx)));
    }
    case MeanKind::Tag::PowerT:
      return geometric_mean_t(x, a, kind.t());
    case MeanKind::Tag::LogEuclidType:
      return log_euclidean(x, a);
  }
  throw DomainError("mean_map: invalid kind");
}

namespace {

// Sum_j w_j G(X, A_j) without re-validating each term.
Matrix map_sum(const MeanKind& kind, const SpdMatrix& x, std::span<const SpdMatrix> as,
               const WeightVector& w) {
  Matrix sum = Matrix::Zero(x.dim(), x.dim());
  for (std::size_t j = 0; j < as.size(); ++j) sum += w[j] * mean_map(kind, x, as[j]).matrix();
  return sum;
}

double relative_residual(const SpdMatrix& x, const Matrix& fx) {
  return (x.matrix() - fx).norm() / x.matrix().norm();
}

struct Bracket {
  double alpha;
  double beta;
};

Bracket spectral_bracket(std::span<const SpdMatrix> as) {
  Bracket b{INFINITY, 0.0};
  for (const auto& a : as) {
    b.alpha = std::min(b.alpha, a.min_eigenvalue());
    b.beta = std::max(b.beta, a.max_eigenvalue());
  }
  return b;
}

}  // namespace

SpdMatrix fixed_point_map(const MeanKind& kind, const SpdMatrix& x,
                          std::span<const SpdMatrix> as, const WeightVector& w) {
  require_family(as, w, "fixed_point_map");
  require_same_dim(x, as.front(), "fixed_point_map");
  return SpdMatrix(HermitianMatrix::symmetrized(map_sum(kind, x, as, w)));
}

double fixed_point_residual(const MeanKind& kind, const SpdMatrix& x,
                            std::span<const SpdMatrix> as, const WeightVector& w) {
  require_family(as, w, "fixed_point_residual");
  require_same_dim(x, as.front(), "fixed_point_residual");
  return relative_residual(x, map_sum(kind, x, as, w));
}

SolveResult solve_from(const MeanKind& kind, std::span<const SpdMatrix> as,
                       const WeightVector& w, const SpdMatrix& start, const SolverConfig& cfg) {
  cfg.validate();
  require_family(as, w, "solve");
  require_same_dim(start, as.front(), "solve");

  const Bracket bracket = spectral_bracket(as);
  SolverReport report;
  report.alpha = bracket.alpha;
  report.beta = bracket.beta;
  report.min_iterate_eigenvalue = start.min_eigenvalue();
  report.max_iterate_eigenvalue = start.max_eigenvalue();

  auto check_bracket = [&](const SpdMatrix& x, int iteration) {
    report.min_iterate_eigenvalue = std::min(report.min_iterate_eigenvalue, x.min_eigenvalue());
    report.max_iterate_eigenvalue = std::max(report.max_iterate_eigenvalue, x.max_eigenvalue());
    const bool inside = x.min_eigenvalue() >= bracket.alpha * (1.0 - 1e-10) &&
                        x.max_eigenvalue() <= bracket.beta * (1.0 + 1e-10);
    if (inside) return;
    ++report.bracket_violations;
    if (kind.tag() == MeanKind::Tag::LogEuclidType) {
      std::ostringstream os;
      os << "solve(" << kind.name() << "): iterate " << iteration << " has spectrum ["
         << x.min_eigenvalue() << ", " << x.max_eigenvalue() << "] outside [" << bracket.alpha
         << ", " << bracket.beta << "]";
      throw ConsistencyError(os.str());
    }
  };

  SpdMatrix x = start;
  Matrix fx = map_sum(kind, x, as, w);
  double residual = relative_residual(x, fx);
  report.residuals.push_back(residual);

  double damping = cfg.damping;
  const double min_damping = cfg.damping / 16.0;
  int growth_streak = 0;
  int iteration = 0;
  while (residual > cfg.tol && iteration < cfg.max_iter) {
    ++iteration;
    const Matrix next = damping == 1.0 ? fx : Matrix((1.0 - damping) * x.matrix() + damping * fx);
    x = SpdMatrix(HermitianMatrix::symmetrized(next));
    check_bracket(x, iteration);
    fx = map_sum(kind, x, as, w);
    const double r = relative_residual(x, fx);
    growth_streak = r > residual ? growth_streak + 1 : 0;
    if (growth_streak >= 5 && damping > min_damping) {
      damping = std::max(min_damping, damping / 2.0);
      growth_streak = 0;
    }
    residual = r;
    report.residuals.push_back(residual);
  }

  report.iterations = iteration;
  report.final_residual = residual;
  report.converged = residual <= cfg.tol;
  report.final_damping = damping;
  return SolveResult{std::move(x), std::move(report)};
}

SolveResult solve(const MeanKind& kind, std::span<const SpdMatrix> as, const WeightVector& w,
                  const SolverConfig& cfg) {
  return solve_from(kind, as, w, arithmetic_mean(as, w), cfg);
}

UniquenessReport check_uniqueness(const MeanKind& kind, std::span<const SpdMatrix> as,
                                  const WeightVector& w, const SolverConfig& cfg, Rng& rng,
                                  int starts, double tolerance) {
  require_family(as, w, "check_uniqueness");
  const Bracket bracket = spectral_bracket(as);
  const Index n = as.front().dim();

  UniquenessReport report;
  report.all_converged = true;
  for (int s = 0; s < starts; ++s) {
    const Matrix u = random_unitary(rng, n);
    RealVector l(n);
    for (Index i = 0; i < n; ++i) l(i) = rng.uniform(bracket.alpha, bracket.beta);
    SolveResult run = solve_from(kind, as, w, spd_with_basis(u, l), cfg);
    report.all_converged = report.all_converged && run.report.converged;
    report.runs.push_back(std::move(run));
  }
  for (std::size_t i = 0; i < report.runs.size(); ++i) {
    for (std::size_t j = i + 1; j < report.runs.size(); ++j) {
      report.max_pairwise_distance =
          std::max(report.max_pairwise_distance,
                   (report.runs[i].x.matrix() - report.runs[j].x.matrix()).norm());
    }
  }
  report.agree = report.all_converged && report.max_pairwise_distance <= tolerance;
  return report;
}

double objective(const MeanKind& kind, const SpdMatrix& x, std::span<const SpdMatrix> as,
                 const WeightVector& w) {
  require_family(as, w, "objective");
  DistanceKind d = DistanceKind::D2;
  switch (kind.tag()) {
    case MeanKind::Tag::Wasserstein: d = DistanceKind::D2; break;
    case MeanKind::Tag::PowerT:
      if (kind.t() != 0.5) {
        throw UnsupportedError("objective: " + kind.name() +
                               " is not the barycentre of any distance (only t = 1/2 is)");
      }
      d = DistanceKind::D3;
      break;
    case MeanKind::Tag::LogEuclidType: d = DistanceKind::D4; break;
  }
  double total = 0.0;
  for (std::size_t j = 0; j < as.size(); ++j) total += w[j] * divergence(d, x, as[j]);
  return total;
}

SpdMatrix closed_form_m2(const MeanKind& kind, const SpdMatrix& a, const SpdMatrix& b) {
  require_same_dim(a, b, "closed_form_m2");
  if (kind.tag() == MeanKind::Tag::Wasserstein) {
    const Matrix sum = a.matrix() + b.matrix() + product_sqrt(a, b) + product_sqrt(b, a);
    return SpdMatrix(HermitianMatrix::symmetrized(sum / 4.0));
  }
  if (kind.tag() == MeanKind::Tag::PowerT && kind.t() == 0.5) {
    const Matrix sum = a.matrix() + b.matrix() + 2.0 * geometric_mean(a, b).matrix();
    return SpdMatrix(HermitianMatrix::symmetrized(sum / 4.0));
  }
  throw UnsupportedError("closed_form_m2: no closed form for " + kind.name());
}

D4GuessReport refute_d4_guess(const SpdMatrix& a, const SpdMatrix& b, const SolverConfig& cfg) {
  require_same_dim(a, b, "refute_d4_guess");
  const MeanKind kind = MeanKind::log_euclid_type();
  const std::array<SpdMatrix, 2> pair{a, b};
  const WeightVector w = WeightVector::uniform(2);

  SpdMatrix c(HermitianMatrix::symmetrized(
      (a.matrix() + b.matrix() + 2.0 * log_euclidean(a, b).matrix()) / 4.0));
  const Matrix fc = map_sum(kind, c, pair, w);

  D4GuessReport report{.guess = c, .solver = {}};
  report.commutator = commutator_norm(a.matrix(), b.matrix());
  report.inconclusive = report.commutator <= 1e-6 * a.matrix().norm() * b.matrix().norm();
  report.residual = (c.matrix() - fc).norm();
  report.relative_residual = report.residual / c.matrix().norm();

  SolveResult solved = solve(kind, pair, w, cfg);
  report.distance_to_solution = (c.matrix() - solved.x.matrix()).norm();
  report.solver = std::move(solved.report);
  report.guess_fails = !report.inconclusive && report.residual > 1e-6 * c.matrix().norm();
  return report;
}

}  // namespace hellinger
