#pragma once

// Finite-difference oracles. Every routine takes a scalar function of the
// step t, so directional derivatives of matrix maps are g(t) = f(X + tY).

#include <cmath>
#include <type_traits>
#include <utility>
#include <vector>

#include "hellinger/linalg.hpp"

namespace hellinger::numdiff {

// g may return double or an Eigen matrix; results are evaluated eagerly so
// no expression template outlives its operands.
template <class G>
using Value = std::decay_t<std::invoke_result_t<G&, double>>;

/// (g(h) - g(-h)) / 2h.
template <class G>
Value<G> central(G&& g, double h) {
  const Value<G> plus = g(h);
  const Value<G> minus = g(-h);
  return Value<G>((plus - minus) / (2.0 * h));
}

/// Central difference with one Richardson step: (4 D(h/2) - D(h)) / 3, O(h^4).
template <class G>
Value<G> central_richardson(G&& g, double h) {
  const Value<G> coarse = central(g, h);
  const Value<G> fine = central(g, h / 2.0);
  return Value<G>((4.0 * fine - coarse) / 3.0);
}

/// (g(h) - 2 g(0) + g(-h)) / h^2.
template <class G>
double second(G&& g, double h) {
  return (g(h) - 2.0 * g(0.0) + g(-h)) / (h * h);
}

/// Extrapolates q(t) -> q(0) for q with an even error expansion
/// q(t) = q0 + c2 t^2 + c4 t^4 + ..., using q(h), q(h/2), q(h/4).
template <class Q>
double richardson_even(Q&& q, double h) {
  const double r0 = q(h), r1 = q(h / 2.0), r2 = q(h / 4.0);
  const double s0 = (4.0 * r1 - r0) / 3.0;
  const double s1 = (4.0 * r2 - r1) / 3.0;
  return (16.0 * s1 - s0) / 15.0;
}

/// Orthonormal basis of the real space of n x n Hermitian matrices under
/// Re tr(X* Y): E_ii, (E_ij + E_ji)/sqrt2 and i(E_ij - E_ji)/sqrt2 for i < j.
inline std::vector<HermitianMatrix> hermitian_basis(Index n) {
  std::vector<HermitianMatrix> basis;
  const double r = 1.0 / std::sqrt(2.0);
  for (Index i = 0; i < n; ++i) {
    Matrix e = Matrix::Zero(n, n);
    e(i, i) = 1.0;
    basis.push_back(HermitianMatrix::symmetrized(e));
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      Matrix s = Matrix::Zero(n, n);
      s(i, j) = s(j, i) = r;
      basis.push_back(HermitianMatrix::symmetrized(s));
      Matrix a = Matrix::Zero(n, n);
      a(i, j) = Complex(0.0, r);
      a(j, i) = Complex(0.0, -r);
      basis.push_back(HermitianMatrix::symmetrized(a));
    }
  }
  return basis;
}

/// Gradient of a real function on Hermitian matrices at x, by central
/// differences with Richardson along the basis above.
template <class F>
HermitianMatrix gradient(F&& f, const HermitianMatrix& x, double h) {
  Matrix g = Matrix::Zero(x.dim(), x.dim());
  for (const HermitianMatrix& e : hermitian_basis(x.dim())) {
    const double d = central_richardson(
        [&](double t) { return f(HermitianMatrix::symmetrized(x.matrix() + t * e.matrix())); }, h);
    g += d * e.matrix();
  }
  return HermitianMatrix::symmetrized(g);
}

}  // namespace hellinger::numdiff
