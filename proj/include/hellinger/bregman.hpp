#pragma once

// Tracial Bregman divergences Phi(A, B) = tr psi(A) - tr psi(B) - tr(psi'(B)(A - B))
// generated by a scalar strictly convex mother function psi, together with
// their left and right barycentres.

#include <functional>
#include <span>
#include <string>

#include "hellinger/linalg.hpp"
#include "hellinger/means.hpp"

namespace hellinger {

/// Open interval (lo, hi); infinities allowed.
struct OpenInterval {
  double lo;
  double hi;
  bool contains(double x) const { return x > lo && x < hi; }
};

/// Scalar strictly convex psi on (0, inf) with analytic psi' and (psi')^{-1}.
/// Construction samples strict monotonicity of psi' and the inverse on a
/// log-spaced grid over [1e-6, 1e6] and throws DomainError on failure.
class MotherFunction {
 public:
  using Fn = std::function<double(double)>;

  MotherFunction(std::string name, Fn psi, Fn dpsi, Fn inv_dpsi, OpenInterval dpsi_image);

  /// psi(x) = x log x - x, psi' = log, J = R.
  static MotherFunction entropy();
  /// psi(x) = x^2 / 2, psi' = id, J = (0, inf).
  static MotherFunction square();
  /// psi(x) = x^p for p > 1, J = (0, inf).
  static MotherFunction power(double p);

  const std::string& name() const { return name_; }
  double psi(double x) const { return psi_(x); }
  double dpsi(double x) const { return dpsi_(x); }
  double inv_dpsi(double y) const { return inv_dpsi_(y); }
  const OpenInterval& dpsi_image() const { return image_; }

 private:
  std::string name_;
  Fn psi_;
  Fn dpsi_;
  Fn inv_dpsi_;
  OpenInterval image_;
};

/// psi(x) - psi(y) - psi'(y)(x - y). Throws DomainError for nonpositive input.
double bregman_scalar(const MotherFunction& m, double x, double y);

/// Bregman divergence of phi = tr psi. Nonnegative; throws ConsistencyError if
/// roundoff drives it below -1e-10 * max(1, tr|A| + tr|B|).
double bregman_tracial(const MotherFunction& m, const SpdMatrix& a, const SpdMatrix& b);

/// S(A|B) = tr A (log A - log B).
double relative_entropy(const SpdMatrix& a, const SpdMatrix& b);

/// argmin_X Sum_j w_j Phi(A_j, X): the arithmetic mean, whatever the mother function.
SpdMatrix right_barycentre(const MotherFunction& m, std::span<const SpdMatrix> as,
                           const WeightVector& w);

/// argmin_X Sum_j w_j Phi(X, A_j) = (psi')^{-1}(Sum_j w_j psi'(A_j)).
/// Throws DomainError if the spectrum of the weighted sum leaves psi'((0, inf)).
SpdMatrix left_barycentre(const MotherFunction& m, std::span<const SpdMatrix> as,
                          const WeightVector& w);

/// Sum_j w_j Phi(mu, A_j) with mu the left barycentre.
double variance(const MotherFunction& m, std::span<const SpdMatrix> as, const WeightVector& w);

/// min_X [Phi(X, A) + Phi(X, B)] for the entropy divergence, attained at X = L(A, B).
/// Equals Phi4(A, B).
double phi4_via_min(const SpdMatrix& a, const SpdMatrix& b);

}  // namespace hellinger
