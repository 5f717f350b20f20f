#include "hellinger/random.hpp"

#include <cmath>
#include <numbers>

namespace hellinger {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

double Rng::normal() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  return r * std::cos(theta);
}

std::size_t Rng::index(std::size_t n) {
  return n == 0 ? 0 : static_cast<std::size_t>(engine_() % n);
}

Matrix random_gaussian(Rng& rng, Index rows, Index cols, bool complex_entries) {
  Matrix g(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      const double re = rng.normal();
      const double im = complex_entries ? rng.normal() : 0.0;
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

Matrix random_unitary(Rng& rng, Index n) {
  const Matrix g = random_gaussian(rng, n, n);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < n; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

HermitianMatrix random_hermitian(Rng& rng, Index n) {
  return HermitianMatrix::symmetrized(random_gaussian(rng, n, n));
}

SpdMatrix spd_with_basis(const Matrix& unitary, const RealVector& eigenvalues) {
  return SpdMatrix(HermitianMatrix::symmetrized(
      unitary * eigenvalues.cast<Complex>().asDiagonal() * unitary.adjoint()));
}

SpdMatrix random_spd(Rng& rng, Index n, double max_condition, double scale) {
  const Matrix u = random_unitary(rng, n);
  RealVector l(n);
  for (Index i = 0; i < n; ++i) l(i) = rng.log_uniform(scale, scale * max_condition);
  return spd_with_basis(u, l);
}

HermitianMatrix random_psd(Rng& rng, Index n, Index rank, double scale) {
  const Matrix u = random_unitary(rng, n);
  RealVector l = RealVector::Zero(n);
  for (Index i = 0; i < std::min(rank, n); ++i) l(i) = rng.log_uniform(scale / 10.0, scale);
  return HermitianMatrix::symmetrized(u * l.cast<Complex>().asDiagonal() * u.adjoint());
}

Matrix random_invertible(Rng& rng, Index n) {
  for (;;) {
    Matrix k = random_gaussian(rng, n, n) + 2.0 * Matrix::Identity(n, n);
    Eigen::JacobiSVD<Matrix> svd(k);
    const RealVector& s = svd.singularValues();
    if (s(0) <= 1e3 * s(n - 1)) return k;
  }
}

}  // namespace hellinger
