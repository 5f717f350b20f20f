#pragma once

// Dense Hermitian / positive definite matrix values and spectral calculus.
//
// All matrix functions are evaluated through an eigendecomposition
// H = V diag(lambda) V*, so f(H) = V diag(f(lambda)) V*. Matrices here are
// small (tens of rows at most) and Hermitian, which makes this both exact in
// the spectral sense and cheap.

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <utility>

#include "hellinger/errors.hpp"

namespace hellinger {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Entrywise Hermitian tolerance used at construction, relative to max(1, max |m_ij|).
inline constexpr double kHermitianTol = 1e-12;
/// Positive definiteness threshold, relative to max(1, spectral radius).
inline constexpr double kSpdTol = 1e-12;

class HermitianMatrix {
 public:
  /// Checks |m_ij - conj(m_ji)| <= kHermitianTol * max(1, max|m_ij|), then
  /// stores (M + M*)/2.
  explicit HermitianMatrix(const Matrix& m);
  static HermitianMatrix from_real(const RealMatrix& m);

  /// (M + M*)/2 with no check. For results that are Hermitian in exact arithmetic.
  static HermitianMatrix symmetrized(const Matrix& m);

  static HermitianMatrix identity(Index n);
  static HermitianMatrix zero(Index n);

  Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(Index i, Index j) const { return m_(i, j); }
  double trace() const { return m_.trace().real(); }

  HermitianMatrix operator+(const HermitianMatrix& o) const;
  HermitianMatrix operator-(const HermitianMatrix& o) const;
  HermitianMatrix operator*(double s) const;
  friend HermitianMatrix operator*(double s, const HermitianMatrix& h) { return h * s; }

 private:
  struct Unchecked {};
  HermitianMatrix(Unchecked, Matrix m) : m_(std::move(m)) {}

  Matrix m_;
};

/// Spectrum in ascending order plus unitary eigenvectors (as columns).
struct EigenDecomposition {
  RealVector values;
  Matrix vectors;

  Index dim() const { return values.size(); }
  /// V diag(values) V*.
  Matrix reconstruct() const;
};

/// Hermitian eigensolver. Throws ConvergenceError if the solver does not converge.
EigenDecomposition eigh(const HermitianMatrix& h);

class SpdMatrix;

namespace detail {
SpdMatrix spd_from_spectrum(const EigenDecomposition& basis, const RealVector& values);
}

/// Hermitian matrix with every eigenvalue above kSpdTol * max(1, spectral radius).
/// Caches its eigendecomposition; immutable.
class SpdMatrix {
 public:
  explicit SpdMatrix(const HermitianMatrix& h);
  static SpdMatrix from_real(const RealMatrix& m);
  static SpdMatrix identity(Index n);

  Index dim() const { return h_.dim(); }
  const HermitianMatrix& hermitian() const { return h_; }
  const Matrix& matrix() const { return h_.matrix(); }
  const EigenDecomposition& eigen() const { return eig_; }
  double trace() const { return h_.trace(); }
  double min_eigenvalue() const { return eig_.values(0); }
  double max_eigenvalue() const { return eig_.values(eig_.values.size() - 1); }

  operator const HermitianMatrix&() const { return h_; }

 private:
  SpdMatrix(HermitianMatrix h, EigenDecomposition eig);
  friend SpdMatrix detail::spd_from_spectrum(const EigenDecomposition&, const RealVector&);

  HermitianMatrix h_;
  EigenDecomposition eig_;
};

/// True if every eigenvalue of h exceeds the SPD threshold.
bool is_positive_definite(const HermitianMatrix& h);

/// V diag(mapped) V* for the basis of `eig`.
HermitianMatrix from_spectrum(const EigenDecomposition& eig, const RealVector& mapped);

/// f(H) by spectral calculus. Throws DomainError naming the first eigenvalue
/// at which f is not finite.
template <typename F>
HermitianMatrix apply_spectral(F&& f, const EigenDecomposition& eig) {
  RealVector mapped(eig.dim());
  for (Index i = 0; i < eig.dim(); ++i) {
    const double v = f(eig.values(i));
    if (!std::isfinite(v)) {
      throw DomainError("apply_spectral: function undefined at eigenvalue " +
                        std::to_string(eig.values(i)));
    }
    mapped(i) = v;
  }
  return from_spectrum(eig, mapped);
}

template <typename F>
HermitianMatrix apply_spectral(F&& f, const HermitianMatrix& h) {
  return apply_spectral(std::forward<F>(f), eigh(h));
}

SpdMatrix sqrtm(const SpdMatrix& a);
SpdMatrix inv_sqrtm(const SpdMatrix& a);
SpdMatrix inverse(const SpdMatrix& a);
SpdMatrix powm(const SpdMatrix& a, double t);
HermitianMatrix logm(const SpdMatrix& a);
SpdMatrix expm(const HermitianMatrix& h);

/// The square root of AB with positive spectrum:
/// A^{1/2} (A^{1/2} B A^{1/2})^{1/2} A^{-1/2}. Not Hermitian in general.
Matrix product_sqrt(const SpdMatrix& a, const SpdMatrix& b);

/// K A K*. Throws DimensionError on size mismatch and DomainError if K is
/// numerically singular (smallest singular value <= 1e-12 * largest).
SpdMatrix congruence(const Matrix& k, const SpdMatrix& a);

/// <A, B> = tr(A* B).
Complex frobenius_inner(const Matrix& a, const Matrix& b);
/// Real inner product of Hermitian matrices, tr(AB).
double frobenius_inner(const HermitianMatrix& a, const HermitianMatrix& b);
double frobenius_norm(const Matrix& a);

/// ||AB - BA||_F.
double commutator_norm(const Matrix& a, const Matrix& b);

void require_same_dim(const HermitianMatrix& a, const HermitianMatrix& b, const char* where);

}  // namespace hellinger
