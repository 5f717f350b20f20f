#pragma once

// Barycentres of SPD families as fixed points of X = Sum_j w_j G(X, A_j),
// where G is the geometric-type mean paired with the distance:
//   Wasserstein    G(X, A) = (X^{1/2} A X^{1/2})^{1/2}   (d2)
//   PowerT(t)      G(X, A) = X #_t A                     (d3 when t = 1/2)
//   LogEuclidType  G(X, A) = L(X, A)                     (d4)

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hellinger/means.hpp"
#include "hellinger/random.hpp"

namespace hellinger {

class MeanKind {
 public:
  enum class Tag { Wasserstein, PowerT, LogEuclidType };

  static MeanKind wasserstein() { return MeanKind(Tag::Wasserstein, 0.5); }
  /// Throws DomainError unless t is in (0, 1).
  static MeanKind power_t(double t);
  static MeanKind log_euclid_type() { return MeanKind(Tag::LogEuclidType, 0.5); }

  Tag tag() const { return tag_; }
  /// Only meaningful for PowerT.
  double t() const { return t_; }
  std::string name() const;

 private:
  MeanKind(Tag tag, double t) : tag_(tag), t_(t) {}
  Tag tag_;
  double t_;
};

struct SolverConfig {
  /// Relative residual ||X - F(X)||_F / ||X||_F at which to stop.
  double tol = 1e-12;
  int max_iter = 500;
  /// Initial weight of F(X_k) in X_{k+1} = (1 - damping) X_k + damping F(X_k).
  double damping = 1.0;

  /// Throws DomainError if a field is out of range.
  void validate() const;
};

struct SolverReport {
  int iterations = 0;
  double final_residual = 0.0;
  bool converged = false;
  /// alpha, beta with alpha I <= A_j <= beta I for every input.
  double alpha = 0.0;
  double beta = 0.0;
  /// Extreme eigenvalues seen over all iterates.
  double min_iterate_eigenvalue = 0.0;
  double max_iterate_eigenvalue = 0.0;
  /// Iterates that left [alpha I, beta I] (beyond a 1e-10 relative margin).
  int bracket_violations = 0;
  double final_damping = 1.0;
  /// Relative residual after each iteration, starting with the initial point.
  std::vector<double> residuals;
};

struct SolveResult {
  SpdMatrix x;
  SolverReport report;
};

/// G(X, A) for the kind.
SpdMatrix mean_map(const MeanKind& kind, const SpdMatrix& x, const SpdMatrix& a);

/// Sum_j w_j G(X, A_j), summed left to right.
SpdMatrix fixed_point_map(const MeanKind& kind, const SpdMatrix& x,
                          std::span<const SpdMatrix> as, const WeightVector& w);

/// ||X - F(X)||_F / ||X||_F.
double fixed_point_residual(const MeanKind& kind, const SpdMatrix& x,
                            std::span<const SpdMatrix> as, const WeightVector& w);

/// Damped Picard iteration started at the arithmetic mean. The damping is
/// halved (down to 1/16 of its initial value) whenever the residual has grown
/// for 5 consecutive iterations. A non-converged run still returns the last
/// iterate, with report.converged = false. For LogEuclidType a bracket
/// violation throws ConsistencyError.
SolveResult solve(const MeanKind& kind, std::span<const SpdMatrix> as, const WeightVector& w,
                  const SolverConfig& cfg = SolverConfig{});

/// As solve, from a caller-supplied initial point.
SolveResult solve_from(const MeanKind& kind, std::span<const SpdMatrix> as,
                       const WeightVector& w, const SpdMatrix& start,
                       const SolverConfig& cfg = SolverConfig{});

struct UniquenessReport {
  std::vector<SolveResult> runs;
  /// Max pairwise ||X_i - X_j||_F over converged runs.
  double max_pairwise_distance = 0.0;
  bool all_converged = false;
  bool agree = false;  ///< all converged and max_pairwise_distance <= tolerance
};

/// Runs the solver from `starts` random points in [alpha I, beta I] and checks
/// that they reach the same fixed point.
UniquenessReport check_uniqueness(const MeanKind& kind, std::span<const SpdMatrix> as,
                                  const WeightVector& w, const SolverConfig& cfg, Rng& rng,
                                  int starts = 5, double tolerance = 1e-8);

/// Sum_j w_j d^2(X, A_j) with d^2 = Phi2 (Wasserstein), Phi3 (PowerT(1/2)),
/// Phi4 (LogEuclidType). Throws UnsupportedError for PowerT with t != 1/2.
double objective(const MeanKind& kind, const SpdMatrix& x, std::span<const SpdMatrix> as,
                 const WeightVector& w);

/// Equal-weight m = 2 closed forms:
///   Wasserstein    (A + B + (AB)^{1/2} + (BA)^{1/2}) / 4
///   PowerT(1/2)    (A + B + 2 A#B) / 4
/// Throws UnsupportedError for other kinds.
SpdMatrix closed_form_m2(const MeanKind& kind, const SpdMatrix& a, const SpdMatrix& b);

struct D4GuessReport {
  bool inconclusive = false;  ///< A and B commute; the guess holds trivially
  double commutator = 0.0;    ///< ||AB - BA||_F
  SpdMatrix guess;            ///< (A + B + 2 L(A, B)) / 4
  double residual = 0.0;      ///< ||C - (L(C,A) + L(C,B))/2||_F
  double relative_residual = 0.0;
  double distance_to_solution = 0.0;  ///< ||C - X*||_F for the solved barycentre X*
  SolverReport solver;
  bool guess_fails = false;   ///< residual > 1e-6 ||C||_F
};

/// Tests whether (A + B + 2 exp((log A + log B)/2)) / 4 solves
/// X = (L(X,A) + L(X,B)) / 2.
D4GuessReport refute_d4_guess(const SpdMatrix& a, const SpdMatrix& b,
                              const SolverConfig& cfg = SolverConfig{});

}  // namespace hellinger
