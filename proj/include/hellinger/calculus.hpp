#pragma once

// Fréchet derivatives of spectral matrix functions.
//
// The derivative of X -> f(X) at X = V diag(l) V* in direction Y is
//   Df(X)(Y) = V (K o (V* Y V)) V*,   K_ij = f[l_i, l_j],
// where f[a, b] is the first divided difference (f'(a) on the diagonal) and
// "o" is the entrywise product. Integral representations of the same
// derivatives are evaluated by quadrature (see quadrature.hpp) as an
// independent cross-check.

#include <string_view>

#include "hellinger/linalg.hpp"

namespace hellinger {

/// Scalar function on (0, inf) used for spectral calculus.
class SpectralFunction {
 public:
  enum class Kind { Sqrt, Log, Exp, Power };

  static SpectralFunction sqrt() { return SpectralFunction(Kind::Sqrt, 0.5); }
  static SpectralFunction log() { return SpectralFunction(Kind::Log, 0.0); }
  static SpectralFunction exp() { return SpectralFunction(Kind::Exp, 0.0); }
  static SpectralFunction power(double t) { return SpectralFunction(Kind::Power, t); }

  Kind kind() const { return kind_; }
  double exponent() const { return exponent_; }
  std::string_view name() const;

  double value(double x) const;
  double derivative(double x) const;
  /// (f(a) - f(b)) / (a - b), with f'(a) when a == b. Evaluated in a
  /// cancellation-free form for each kind.
  double divided_difference(double a, double b) const;

 private:
  SpectralFunction(Kind k, double e) : kind_(k), exponent_(e) {}
  Kind kind_;
  double exponent_;
};

/// Divided-difference kernel of f at a base point, in the base point's eigenbasis.
class DividedDifferenceKernel {
 public:
  DividedDifferenceKernel(const SpectralFunction& f, EigenDecomposition basis);

  const EigenDecomposition& basis() const { return basis_; }
  const RealMatrix& kernel() const { return kernel_; }

  /// Df(X)(Y). Linear in Y, and self-adjoint for the Frobenius inner product.
  HermitianMatrix apply(const HermitianMatrix& y) const;

 private:
  EigenDecomposition basis_;
  RealMatrix kernel_;
};

/// Df(X)(Y) for f in {sqrt, log, exp, pow_t}.
HermitianMatrix frechet(const SpectralFunction& f, const HermitianMatrix& x,
                        const HermitianMatrix& y);
HermitianMatrix frechet(const SpectralFunction& f, const SpdMatrix& x, const HermitianMatrix& y);

/// Derivative of X -> A # X in direction Y, by the chain rule through
/// A # X = A^{1/2} (A^{-1/2} X A^{-1/2})^{1/2} A^{1/2}.
HermitianMatrix frechet_geometric(const SpdMatrix& a, const SpdMatrix& x,
                                  const HermitianMatrix& y);

/// Gradient G of X -> Phi3(A, X) = tr(A + X) - 2 tr(A # X), i.e.
/// DPhi3(A, X)(Y) = tr(G Y). Vanishes at X = A.
HermitianMatrix grad_phi3(const SpdMatrix& a, const SpdMatrix& x);

/// D^2 Phi3(A, A)(Y, Y) = tr(Y A^{-1} Y) / 2.
double hessian_phi3_diag(const SpdMatrix& a, const HermitianMatrix& y);

/// Gradient of X -> tr L(A, X): (1/2) Dlog(X)(L(A, X)).
HermitianMatrix d_tr_log_euclidean(const SpdMatrix& a, const SpdMatrix& x);

/// Gradient of X -> Phi4(A, X) = tr(A + X) - 2 tr L(A, X).
HermitianMatrix grad_phi4(const SpdMatrix& a, const SpdMatrix& x);

}  // namespace hellinger
