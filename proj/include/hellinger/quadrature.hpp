#pragma once

// Quadrature over (0, inf) for the integral representations of sqrt and log
// and of their Fréchet derivatives. These evaluate the same derivatives as
// calculus.hpp along an independent route and are used to cross-check it.

#include <functional>

#include "hellinger/linalg.hpp"

namespace hellinger {

/// The measure the integrand is taken against:
///   SqrtWeight  dnu(l) = (1/pi) l^{1/2} dl
///   Lebesgue    dl
enum class MeasureKind { SqrtWeight, Lebesgue };

/// Composite 20-point Gauss-Legendre on u in (0, 1) with panel doubling.
/// The half line is reached by s = u / (1 - u), with l = s for Lebesgue and
/// l = s^2 for SqrtWeight (which removes the l^{1/2} endpoint singularity).
struct QuadratureRule {
  int initial_panels = 4;
  int max_panels = 4096;
  /// Stop when doubling the panel count changes the result by less than
  /// tol * max(1, |result|).
  double tol = 1e-12;
};

struct IntegrationMeasure {
  MeasureKind kind = MeasureKind::SqrtWeight;
  QuadratureRule rule{};
};

struct QuadratureResult {
  Matrix value;
  int panels = 0;
  double last_change = 0.0;
  bool converged = false;
};

/// Integral of integrand(l) d(measure)(l) over (0, inf). The integrand may be
/// matrix valued; scalar integrands use 1x1 matrices.
QuadratureResult integrate_half_line(const IntegrationMeasure& measure,
                                     const std::function<Matrix(double)>& integrand);

/// Scalar convenience wrapper. Throws ConvergenceError if not converged.
double integrate_scalar(const IntegrationMeasure& measure,
                        const std::function<double(double)>& integrand);

/// Scalar identities checked by quadrature.
enum class QuadCheck {
  /// x^{1/2} = 1/sqrt(2) + int (l/(l^2+1) - 1/(l+x)) dnu(l)
  SqrtRepresentation,
  /// int (1+l)^{-2} dnu(l): the factor in D(A # X)|_{X=A}(Y) = Y/2
  FirstOrderNormalization,
  /// 4 int (1+l)^{-3} dnu(l): the factor in D^2 Phi3(A,A)(Y,Y) = tr(Y A^{-1} Y)/2
  SecondOrderNormalization,
};

/// Evaluates the representation by quadrature; x is used only by
/// SqrtRepresentation and must be positive. Throws ConvergenceError if the
/// quadrature does not converge.
double quad_check(QuadCheck which, double x = 1.0,
                  const QuadratureRule& rule = QuadratureRule{});

/// int (1+l)^{-k} dnu(l) = B(3/2, k - 3/2) / pi for k > 3/2.
double resolvent_moment(int k, const QuadratureRule& rule = QuadratureRule{});

/// Dsqrt(X)(Y) = int (l+X)^{-1} Y (l+X)^{-1} dnu(l).
HermitianMatrix frechet_sqrt_quadrature(const SpdMatrix& x, const HermitianMatrix& y,
                                        const QuadratureRule& rule = QuadratureRule{});

/// Dlog(X)(Y) = int (l+X)^{-1} Y (l+X)^{-1} dl.
HermitianMatrix frechet_log_quadrature(const SpdMatrix& x, const HermitianMatrix& y,
                                       const QuadratureRule& rule = QuadratureRule{});

/// D(A # X)(Y) = int (l + X A^{-1})^{-1} Y (l + A^{-1} X)^{-1} dnu(l).
HermitianMatrix frechet_geometric_quadrature(const SpdMatrix& a, const SpdMatrix& x,
                                             const HermitianMatrix& y,
                                             const QuadratureRule& rule = QuadratureRule{});

/// (1/2) int (l+X)^{-1} L(A,X) (l+X)^{-1} dl, the gradient of X -> tr L(A, X).
HermitianMatrix d_tr_log_euclidean_quadrature(const SpdMatrix& a, const SpdMatrix& x,
                                              const QuadratureRule& rule = QuadratureRule{});

}  // namespace hellinger
