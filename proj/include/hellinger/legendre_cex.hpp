#pragma once

// Counterexamples showing that the Legendre-type condition cannot be dropped
// when characterising the left Bregman barycentre of a non-tracial convex
// function.
//
// Vector case: phi(x) = |x_1|^p + |x_2|^p, g(x) = e + L x with
// L = [[N-1, -2], [-2, N-1]], phibar = phi o g. For abar = g^{-1}((N,0)),
// bbar = g^{-1}((0,N)) the function
//   Psibar(x) = (Phibar(x, abar) + Phibar(x, bbar)) / 2
// is minimised over the closed orthant at x = 0, a boundary point.
//
// Matrix case: T(X) = (N-1) X - 2 tau X tau with tau the 2x2 exchange matrix,
// G(X) = I + T(X), phi(X) = tr|X|^p, phibar = phi o G. Then Psibar is
// minimised over the closed PSD cone at 0, and the first-order condition has
// no positive definite solution.

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>

#include "hellinger/linalg.hpp"
#include "hellinger/random.hpp"

namespace hellinger::legendre {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

/// N > 3 and p > 1 with (N - 3) p (1 - N^{p-1}/2) > 0.
class CexParams {
 public:
  CexParams(double n, double p);
  static CexParams defaults() { return CexParams(5.0, 1.2); }

  double n() const { return n_; }
  double p() const { return p_; }
  /// (N - 3) p (1 - N^{p-1}/2): the common entry of grad Psibar(0).
  double gradient_at_zero() const;

  /// Same formula, no validity check. Used to show the sign flip.
  static double gradient_at_zero(double n, double p);

 private:
  double n_;
  double p_;
};

struct VectorInstance {
  Mat2 l;
  Vec2 a;
  Vec2 b;
  Vec2 abar;
  Vec2 bbar;
};

/// L, a = (N,0), b = (0,N) and their preimages under g(x) = e + Lx, from the
/// closed forms abar = (N^2-2N-1, N-1)/(N^2-2N-3), bbar = (N-1, N^2-2N-1)/(N^2-2N-3).
VectorInstance build_vector_instance(const CexParams& params);

/// phibar(x) = |g(x)_1|^p + |g(x)_2|^p.
double phibar_vector(const CexParams& params, const Vec2& x);
/// L^T grad phi(g(x)), grad phi(z) = p sign(z) |z|^{p-1}.
Vec2 grad_phibar_vector(const CexParams& params, const Vec2& x);
/// Psibar(x) = (Phibar(x, abar) + Phibar(x, bbar)) / 2.
double psibar_vector(const CexParams& params, const Vec2& x);
/// L^T grad phi(g(x)) - (L^T grad phi(a) + L^T grad phi(b)) / 2.
Vec2 grad_psibar_vector(const CexParams& params, const Vec2& x);

struct StrictnessReport {
  std::size_t samples = 0;
  double min_gap = 0.0;               ///< min over samples of Psibar(x) - Psibar(0)
  double min_gap_over_bound = 0.0;    ///< min of gap / <grad Psibar(0), x>
  bool passed = false;
  std::optional<std::string> witness; ///< first violating sample, if any
};

/// Samples x in the closed nonnegative orthant minus the origin and checks
/// Psibar(x) - Psibar(0) >= <grad Psibar(0), x> > 0.
StrictnessReport verify_vector_strictness(const CexParams& params, std::size_t samples,
                                          Rng& rng);

struct MatrixMaps {
  HermitianMatrix t;      ///< T(X)
  HermitianMatrix t_inv;  ///< T^{-1}(X)
  HermitianMatrix g;      ///< G(X) = I + T(X)
};

HermitianMatrix apply_t(const CexParams& params, const HermitianMatrix& x);
HermitianMatrix apply_t_inv(const CexParams& params, const HermitianMatrix& x);
/// T(X), T^{-1}(X) and G(X) for a 2x2 Hermitian X.
MatrixMaps matrix_maps(const CexParams& params, const HermitianMatrix& x);

/// Gradient of X -> tr|X|^p, p > 1: p X^{p-1} on positive semidefinite X,
/// extended to Hermitian X as p sign(X)|X|^{p-1} (the polar factor of a
/// Hermitian matrix is sign(X)). Throws DomainError if p <= 1.
HermitianMatrix grad_schatten_p(const HermitianMatrix& x, double p);
/// tr|X|^p.
double schatten_p_power(const HermitianMatrix& x, double p);

/// phibar(X) = tr|G(X)|^p.
double phibar_matrix(const CexParams& params, const HermitianMatrix& x);
/// T(grad phi(G(X))); T is self-adjoint for the Frobenius inner product.
HermitianMatrix grad_phibar_matrix(const CexParams& params, const HermitianMatrix& x);
/// Psibar(X) = (Phibar(X, Abar) + Phibar(X, Bbar)) / 2 with Abar = diag(abar), Bbar = diag(bbar).
double psibar_matrix(const CexParams& params, const HermitianMatrix& x);
HermitianMatrix grad_psibar_matrix(const CexParams& params, const HermitianMatrix& x);

struct MatrixCexReport {
  double gradient_at_zero_closed_form = 0.0;
  HermitianMatrix gradient_at_zero = HermitianMatrix::zero(2);
  double gradient_error = 0.0;        ///< ||grad Psibar(0) - c I||_F
  bool gradient_positive_definite = false;

  std::size_t psd_samples = 0;
  double min_psd_gap = 0.0;           ///< min over PSD X != 0 of Psibar(X) - Psibar(0)
  double min_psd_gap_over_bound = 0.0;
  bool psd_gaps_positive = false;

  std::size_t grid_points = 0;
  double min_stationarity_residual = 0.0;  ///< min ||grad Psibar(X)||_F over the PD grid
  double residual_lower_bound = 0.0;       ///< c, implied by convexity: ||grad Psibar(X)|| >= c
  bool residual_bounded_below = false;

  bool passed = false;
  std::optional<std::string> witness;
};

/// Checks (1) grad Psibar(0) = c I is positive definite, (2) Psibar(X) > Psibar(0)
/// for random PSD X != 0, and (3) the stationarity residual
/// ||grad phibar(X) - (grad phibar(Abar) + grad phibar(Bbar))/2||_F stays above
/// a positive bound on a grid of PD X with eigenvalues in [1e-6, 1e3].
MatrixCexReport verify_matrix_cex(const CexParams& params, std::size_t samples, Rng& rng);

}  // namespace hellinger::legendre
