#include "hellinger/means.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace hellinger {

WeightVector::WeightVector(std::vector<double> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw DimensionError("WeightVector: no weights");
  double total = 0.0;
  for (std::size_t j = 0; j < w_.size(); ++j) {
    if (!std::isfinite(w_[j]) || !(w_[j] > 0.0)) {
      std::ostringstream os;
      os << "WeightVector: weight " << j << " = " << w_[j] << " is not a positive number";
      throw DomainError(os.str());
    }
    total += w_[j];
  }
  for (double& x : w_) x /= total;
}

WeightVector WeightVector::uniform(std::size_t m) {
  return WeightVector(std::vector<double>(m, 1.0));
}

void require_family(std::span<const SpdMatrix> as, const WeightVector& w, const char* where) {
  if (as.empty()) {
    throw DimensionError(std::string(where) + ": empty family");
  }
  if (as.size() != w.size()) {
    std::ostringstream os;
    os << where << ": " << as.size() << " matrices but " << w.size() << " weights";
    throw DimensionError(os.str());
  }
  for (const auto& a : as) require_same_dim(as.front(), a, where);
}

SpdMatrix arithmetic_mean(std::span<const SpdMatrix> as, const WeightVector& w) {
  require_family(as, w, "arithmetic_mean");
  Matrix sum = Matrix::Zero(as.front().dim(), as.front().dim());
  for (std::size_t j = 0; j < as.size(); ++j) sum += w[j] * as[j].matrix();
  return SpdMatrix(HermitianMatrix::symmetrized(sum));
}

SpdMatrix geometric_mean_t(const SpdMatrix& a, const SpdMatrix& b, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError("geometric_mean_t: t = " + std::to_string(t) + " is outside [0, 1]");
  }
  require_same_dim(a, b, "geometric_mean_t");
  if (t == 0.0) return a;
  if (t == 1.0) return b;
  const Matrix ra = sqrtm(a).matrix();
  const Matrix ra_inv = inv_sqrtm(a).matrix();
  const SpdMatrix inner(HermitianMatrix::symmetrized(ra_inv * b.matrix() * ra_inv));
  return SpdMatrix(HermitianMatrix::symmetrized(ra * powm(inner, t).matrix() * ra));
}

SpdMatrix geometric_mean(const SpdMatrix& a, const SpdMatrix& b) {
  return geometric_mean_t(a, b, 0.5);
}

SpdMatrix log_euclidean(const SpdMatrix& a, const SpdMatrix& b) {
  require_same_dim(a, b, "log_euclidean");
  return expm((logm(a) + logm(b)) * 0.5);
}

SpdMatrix log_euclidean(std::span<const SpdMatrix> as, const WeightVector& w) {
  require_family(as, w, "log_euclidean");
  HermitianMatrix sum = HermitianMatrix::zero(as.front().dim());
  for (std::size_t j = 0; j < as.size(); ++j) sum = sum + logm(as[j]) * w[j];
  return expm(sum);
}

double fidelity(const SpdMatrix& a, const SpdMatrix& b) {
  require_same_dim(a, b, "fidelity");
  const Matrix ra = sqrtm(a).matrix();
  const auto eig = eigh(HermitianMatrix::symmetrized(ra * b.matrix() * ra));
  double f = 0.0;
  for (Index i = 0; i < eig.dim(); ++i) f += std::sqrt(std::max(0.0, eig.values(i)));
  return f;
}

SpdMatrix q_half(std::span<const SpdMatrix> as, const WeightVector& w) {
  require_family(as, w, "q_half");
  Matrix sum = Matrix::Zero(as.front().dim(), as.front().dim());
  for (std::size_t j = 0; j < as.size(); ++j) sum += w[j] * sqrtm(as[j]).matrix();
  const HermitianMatrix root = HermitianMatrix::symmetrized(sum);
  return SpdMatrix(HermitianMatrix::symmetrized(root.matrix() * root.matrix()));
}

}  // namespace hellinger
