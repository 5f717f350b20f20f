#include "hellinger/calculus.hpp"

#include <cmath>
#include <utility>

#include "hellinger/means.hpp"

namespace hellinger {

std::string_view SpectralFunction::name() const {
  switch (kind_) {
    case Kind::Sqrt: return "sqrt";
    case Kind::Log: return "log";
    case Kind::Exp: return "exp";
    case Kind::Power: return "pow";
  }
  return "?";
}

double SpectralFunction::value(double x) const {
  switch (kind_) {
    case Kind::Sqrt: return x >= 0.0 ? std::sqrt(x) : NAN;
    case Kind::Log: return x > 0.0 ? std::log(x) : NAN;
    case Kind::Exp: return std::exp(x);
    case Kind::Power: return x > 0.0 ? std::pow(x, exponent_) : NAN;
  }
  return NAN;
}

double SpectralFunction::derivative(double x) const {
  switch (kind_) {
    case Kind::Sqrt: return x > 0.0 ? 0.5 / std::sqrt(x) : NAN;
    case Kind::Log: return x > 0.0 ? 1.0 / x : NAN;
    case Kind::Exp: return std::exp(x);
    case Kind::Power: return x > 0.0 ? exponent_ * std::pow(x, exponent_ - 1.0) : NAN;
  }
  return NAN;
}

double SpectralFunction::divided_difference(double a, double b) const {
  if (a == b) return derivative(a);
  switch (kind_) {
    case Kind::Sqrt:
      if (a < 0.0 || b < 0.0) return NAN;
      return 1.0 / (std::sqrt(a) + std::sqrt(b));
    case Kind::Log: {
      if (a <= 0.0 || b <= 0.0) return NAN;
      const double d = a - b;
      return std::log1p(d / b) / d;
    }
    case Kind::Exp: {
      const double lo = std::min(a, b);
      const double d = std::max(a, b) - lo;
      return std::exp(lo) * std::expm1(d) / d;
    }
    case Kind::Power: {
      if (a <= 0.0 || b <= 0.0) return NAN;
      const double r = (a - b) / b;
      return std::pow(b, exponent_ - 1.0) * std::expm1(exponent_ * std::log1p(r)) / r;
    }
  }
  return NAN;
}

DividedDifferenceKernel::DividedDifferenceKernel(const SpectralFunction& f,
                                                 EigenDecomposition basis)
    : basis_(std::move(basis)), kernel_(basis_.dim(), basis_.dim()) {
  const RealVector& l = basis_.values;
  for (Index i = 0; i < l.size(); ++i) {
    for (Index j = 0; j <= i; ++j) {
      const double k = f.divided_difference(l(i), l(j));
      if (!std::isfinite(k)) {
        throw DomainError(std::string("frechet: ") + std::string(f.name()) +
                          " is not differentiable at eigenvalue " + std::to_string(l(i)));
      }
      kernel_(i, j) = k;
      kernel_(j, i) = k;
    }
  }
}

HermitianMatrix DividedDifferenceKernel::apply(const HermitianMatrix& y) const {
  if (y.dim() != basis_.dim()) throw DimensionError("frechet: direction has wrong dimension");
  const Matrix& v = basis_.vectors;
  const Matrix inner = (v.adjoint() * y.matrix() * v).cwiseProduct(kernel_.cast<Complex>());
  return HermitianMatrix::symmetrized(v * inner * v.adjoint());
}

HermitianMatrix frechet(const SpectralFunction& f, const HermitianMatrix& x,
                        const HermitianMatrix& y) {
  require_same_dim(x, y, "frechet");
  return DividedDifferenceKernel(f, eigh(x)).apply(y);
}

HermitianMatrix frechet(const SpectralFunction& f, const SpdMatrix& x, const HermitianMatrix& y) {
  require_same_dim(x, y, "frechet");
  return DividedDifferenceKernel(f, x.eigen()).apply(y);
}

namespace {

struct Whitened {
  Matrix root;      // A^{1/2}
  Matrix root_inv;  // A^{-1/2}
  SpdMatrix m;      // A^{-1/2} X A^{-1/2}
};

Whitened whiten(const SpdMatrix& a, const SpdMatrix& x) {
  Matrix root = sqrtm(a).matrix();
  Matrix root_inv = inv_sqrtm(a).matrix();
  SpdMatrix m(HermitianMatrix::symmetrized(root_inv * x.matrix() * root_inv));
  return Whitened{std::move(root), std::move(root_inv), std::move(m)};
}

}  // namespace

HermitianMatrix frechet_geometric(const SpdMatrix& a, const SpdMatrix& x,
                                  const HermitianMatrix& y) {
  require_same_dim(a, x, "frechet_geometric");
  require_same_dim(a, y, "frechet_geometric");
  const Whitened w = whiten(a, x);
  const HermitianMatrix z = HermitianMatrix::symmetrized(w.root_inv * y.matrix() * w.root_inv);
  const HermitianMatrix dz = frechet(SpectralFunction::sqrt(), w.m, z);
  return HermitianMatrix::symmetrized(w.root * dz.matrix() * w.root);
}

HermitianMatrix grad_phi3(const SpdMatrix& a, const SpdMatrix& x) {
  require_same_dim(a, x, "grad_phi3");
  // D tr(A # X)(Y) = tr(A Dsqrt(M)(A^{-1/2} Y A^{-1/2})); moving the
  // self-adjoint Dsqrt(M) across gives the gradient A^{-1/2} Dsqrt(M)(A) A^{-1/2}.
  const Whitened w = whiten(a, x);
  const HermitianMatrix da = frechet(SpectralFunction::sqrt(), w.m, a.hermitian());
  const Matrix g = w.root_inv * da.matrix() * w.root_inv;
  return HermitianMatrix::symmetrized(Matrix::Identity(a.dim(), a.dim()) - 2.0 * g);
}

double hessian_phi3_diag(const SpdMatrix& a, const HermitianMatrix& y) {
  require_same_dim(a, y, "hessian_phi3_diag");
  const Matrix& ym = y.matrix();
  return 0.5 * (ym * inverse(a).matrix() * ym).trace().real();
}

HermitianMatrix d_tr_log_euclidean(const SpdMatrix& a, const SpdMatrix& x) {
  require_same_dim(a, x, "d_tr_log_euclidean");
  const SpdMatrix l = log_euclidean(a, x);
  return frechet(SpectralFunction::log(), x, l.hermitian()) * 0.5;
}

HermitianMatrix grad_phi4(const SpdMatrix& a, const SpdMatrix& x) {
  return HermitianMatrix::identity(a.dim()) - d_tr_log_euclidean(a, x) * 2.0;
}

}  // namespace hellinger
