#include "hellinger/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

namespace hellinger {

namespace {

double max_abs_entry(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

void require_square(const Matrix& m, const char* where) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream os;
    os << where << ": expected a non-empty square matrix, got " << m.rows() << "x" << m.cols();
    throw DimensionError(os.str());
  }
}

double spd_threshold(const RealVector& values) {
  const double radius = values.cwiseAbs().maxCoeff();
  return kSpdTol * std::max(1.0, radius);
}

}  // namespace

// ---------------------------------------------------------------------------
// HermitianMatrix

HermitianMatrix::HermitianMatrix(const Matrix& m) {
  require_square(m, "HermitianMatrix");
  if (!m.allFinite()) {
    throw NotHermitianError("HermitianMatrix: non-finite entry");
  }
  const double tol = kHermitianTol * std::max(1.0, max_abs_entry(m));
  const double asym = max_abs_entry(m - m.adjoint());
  if (asym > tol) {
    std::ostringstream os;
    os << "HermitianMatrix: max |m_ij - conj(m_ji)| = " << asym << " exceeds " << tol;
    throw NotHermitianError(os.str());
  }
  m_ = (m + m.adjoint()) / 2.0;
}

HermitianMatrix HermitianMatrix::from_real(const RealMatrix& m) {
  return HermitianMatrix(Matrix(m.cast<Complex>()));
}

HermitianMatrix HermitianMatrix::symmetrized(const Matrix& m) {
  require_square(m, "HermitianMatrix::symmetrized");
  return HermitianMatrix(Unchecked{}, (m + m.adjoint()) / 2.0);
}

HermitianMatrix HermitianMatrix::identity(Index n) {
  return HermitianMatrix(Unchecked{}, Matrix::Identity(n, n));
}

HermitianMatrix HermitianMatrix::zero(Index n) {
  return HermitianMatrix(Unchecked{}, Matrix::Zero(n, n));
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
  require_same_dim(*this, o, "HermitianMatrix::operator+");
  return HermitianMatrix(Unchecked{}, m_ + o.m_);
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& o) const {
  require_same_dim(*this, o, "HermitianMatrix::operator-");
  return HermitianMatrix(Unchecked{}, m_ - o.m_);
}

HermitianMatrix HermitianMatrix::operator*(double s) const {
  return HermitianMatrix(Unchecked{}, m_ * s);
}

void require_same_dim(const HermitianMatrix& a, const HermitianMatrix& b, const char* where) {
  if (a.dim() != b.dim()) {
    std::ostringstream os;
    os << where << ": dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
    throw DimensionError(os.str());
  }
}

// ---------------------------------------------------------------------------
// Eigendecomposition

Matrix EigenDecomposition::reconstruct() const {
  return vectors * values.cast<Complex>().asDiagonal() * vectors.adjoint();
}

EigenDecomposition eigh(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    std::ostringstream os;
    os << "eigh: eigensolver did not converge on a " << h.dim() << "x" << h.dim() << " matrix";
    throw ConvergenceError(os.str());
  }
  return EigenDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

HermitianMatrix from_spectrum(const EigenDecomposition& eig, const RealVector& mapped) {
  const Matrix& v = eig.vectors;
  return HermitianMatrix::symmetrized(v * mapped.cast<Complex>().asDiagonal() * v.adjoint());
}

// ---------------------------------------------------------------------------
// SpdMatrix

SpdMatrix::SpdMatrix(const HermitianMatrix& h) : h_(h), eig_(eigh(h)) {
  const double threshold = spd_threshold(eig_.values);
  if (!(eig_.values(0) > threshold)) {
    std::ostringstream os;
    os << "SpdMatrix: smallest eigenvalue " << eig_.values(0) << " is not above " << threshold;
    throw NotPositiveDefiniteError(os.str());
  }
}

SpdMatrix::SpdMatrix(HermitianMatrix h, EigenDecomposition eig)
    : h_(std::move(h)), eig_(std::move(eig)) {}

SpdMatrix SpdMatrix::from_real(const RealMatrix& m) {
  return SpdMatrix(HermitianMatrix::from_real(m));
}

SpdMatrix SpdMatrix::identity(Index n) { return SpdMatrix(HermitianMatrix::identity(n)); }

bool is_positive_definite(const HermitianMatrix& h) {
  const auto eig = eigh(h);
  return eig.values(0) > spd_threshold(eig.values);
}

namespace detail {

SpdMatrix spd_from_spectrum(const EigenDecomposition& basis, const RealVector& values) {
  const Index n = values.size();
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index i, Index j) { return values(i) < values(j); });

  EigenDecomposition sorted{RealVector(n), Matrix(n, n)};
  for (Index k = 0; k < n; ++k) {
    sorted.values(k) = values(order[static_cast<std::size_t>(k)]);
    sorted.vectors.col(k) = basis.vectors.col(order[static_cast<std::size_t>(k)]);
  }
  if (!sorted.values.allFinite() || !(sorted.values(0) > spd_threshold(sorted.values))) {
    std::ostringstream os;
    os << "SpdMatrix: spectral map produced eigenvalue " << sorted.values(0)
       << " which is not positive definite";
    throw NotPositiveDefiniteError(os.str());
  }
  HermitianMatrix h = from_spectrum(sorted, sorted.values);
  return SpdMatrix(std::move(h), std::move(sorted));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Standard matrix functions

namespace {

template <typename F>
SpdMatrix spd_map(const EigenDecomposition& eig, F&& f) {
  RealVector mapped(eig.dim());
  for (Index i = 0; i < eig.dim(); ++i) mapped(i) = f(eig.values(i));
  return detail::spd_from_spectrum(eig, mapped);
}

}  // namespace

SpdMatrix sqrtm(const SpdMatrix& a) {
  return spd_map(a.eigen(), [](double x) { return std::sqrt(x); });
}

SpdMatrix inv_sqrtm(const SpdMatrix& a) {
  return spd_map(a.eigen(), [](double x) { return 1.0 / std::sqrt(x); });
}

SpdMatrix inverse(const SpdMatrix& a) {
  return spd_map(a.eigen(), [](double x) { return 1.0 / x; });
}

SpdMatrix powm(const SpdMatrix& a, double t) {
  return spd_map(a.eigen(), [t](double x) { return std::pow(x, t); });
}

HermitianMatrix logm(const SpdMatrix& a) {
  return apply_spectral([](double x) { return std::log(x); }, a.eigen());
}

SpdMatrix expm(const HermitianMatrix& h) {
  return spd_map(eigh(h), [](double x) { return std::exp(x); });
}

Matrix product_sqrt(const SpdMatrix& a, const SpdMatrix& b) {
  require_same_dim(a, b, "product_sqrt");
  const SpdMatrix ra = sqrtm(a);
  const SpdMatrix ra_inv = inv_sqrtm(a);
  const SpdMatrix inner(HermitianMatrix::symmetrized(ra.matrix() * b.matrix() * ra.matrix()));
  return ra.matrix() * sqrtm(inner).matrix() * ra_inv.matrix();
}

SpdMatrix congruence(const Matrix& k, const SpdMatrix& a) {
  if (k.rows() != k.cols() || k.rows() != a.dim()) {
    std::ostringstream os;
    os << "congruence: K is " << k.rows() << "x" << k.cols() << " but A has dimension "
       << a.dim();
    throw DimensionError(os.str());
  }
  Eigen::JacobiSVD<Matrix> svd(k);
  const RealVector& s = svd.singularValues();
  if (!(s(s.size() - 1) > 1e-12 * s(0))) {
    std::ostringstream os;
    os << "congruence: K is numerically singular (singular values " << s(0) << " .. "
       << s(s.size() - 1) << ")";
    throw DomainError(os.str());
  }
  return SpdMatrix(HermitianMatrix::symmetrized(k * a.matrix() * k.adjoint()));
}

// ---------------------------------------------------------------------------
// Inner products

Complex frobenius_inner(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("frobenius_inner: dimension mismatch");
  }
  return a.conjugate().cwiseProduct(b).sum();
}

double frobenius_inner(const HermitianMatrix& a, const HermitianMatrix& b) {
  require_same_dim(a, b, "frobenius_inner");
  return frobenius_inner(a.matrix(), b.matrix()).real();
}

double frobenius_norm(const Matrix& a) { return a.norm(); }

double commutator_norm(const Matrix& a, const Matrix& b) {
  return (a * b - b * a).norm();
}

}  // namespace hellinger
