#include "hellinger/distances.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <string>

#include "hellinger/means.hpp"

namespace hellinger {

ProbabilityVector::ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {
  if (p_.empty()) throw DimensionError("ProbabilityVector: empty");
  double total = 0.0;
  for (double x : p_) {
    if (!std::isfinite(x) || x < 0.0) {
      throw DomainError("ProbabilityVector: entry " + std::to_string(x) + " is not nonnegative");
    }
    total += x;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    std::ostringstream os;
    os.precision(17);
    os << "ProbabilityVector: entries sum to " << total << ", not 1";
    throw DomainError(os.str());
  }
}

double hellinger(const ProbabilityVector& p, const ProbabilityVector& q) {
  if (p.size() != q.size()) {
    throw DimensionError("hellinger: length mismatch (" + std::to_string(p.size()) + " vs " +
                         std::to_string(q.size()) + ")");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = std::sqrt(p[i]) - std::sqrt(q[i]);
    s += d * d;
  }
  return std::sqrt(s / 2.0);
}

std::string_view to_string(DistanceKind kind) {
  switch (kind) {
    case DistanceKind::D1: return "d1";
    case DistanceKind::D2: return "d2";
    case DistanceKind::D3: return "d3";
    case DistanceKind::D4: return "d4";
  }
  return "?";
}

DistanceKind parse_distance_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "d1") return DistanceKind::D1;
  if (lower == "d2") return DistanceKind::D2;
  if (lower == "d3") return DistanceKind::D3;
  if (lower == "d4") return DistanceKind::D4;
  throw DomainError("unknown distance kind '" + std::string(name) + "'");
}

double mean_trace(DistanceKind kind, const SpdMatrix& a, const SpdMatrix& b) {
  require_same_dim(a, b, "mean_trace");
  switch (kind) {
    case DistanceKind::D1:
      // tr of a product of two Hermitian matrices is real.
      return (sqrtm(a).matrix() * sqrtm(b).matrix()).trace().real();
    case DistanceKind::D2:
      return fidelity(a, b);
    case DistanceKind::D3:
      return geometric_mean(a, b).trace();
    case DistanceKind::D4:
      return log_euclidean(a, b).trace();
  }
  throw DomainError("mean_trace: invalid kind");
}

double divergence(DistanceKind kind, const SpdMatrix& a, const SpdMatrix& b) {
  require_same_dim(a, b, "divergence");
  double radicand = 0.0;
  if (kind == DistanceKind::D1) {
    // Same quantity as the trace form, without cancellation.
    const double n = (sqrtm(a).matrix() - sqrtm(b).matrix()).norm();
    radicand = n * n;
  } else {
    radicand = a.trace() + b.trace() - 2.0 * mean_trace(kind, a, b);
  }
  if (radicand < 0.0) {
    if (radicand < -kRadicandTol) {
      std::ostringstream os;
      os << "divergence(" << to_string(kind) << "): negative radicand " << radicand;
      throw ConsistencyError(os.str());
    }
    radicand = 0.0;
  }
  return radicand;
}

double distance(DistanceKind kind, const SpdMatrix& a, const SpdMatrix& b) {
  return std::sqrt(divergence(kind, a, b));
}

TraceChain trace_chain(const SpdMatrix& a, const SpdMatrix& b) {
  return TraceChain{
      mean_trace(DistanceKind::D3, a, b),
      mean_trace(DistanceKind::D4, a, b),
      mean_trace(DistanceKind::D1, a, b),
      mean_trace(DistanceKind::D2, a, b),
  };
}

UnitaryMinimum d2_unitary(const SpdMatrix& a, const SpdMatrix& b) {
  require_same_dim(a, b, "d2_unitary");
  const Matrix ra = sqrtm(a).matrix();
  const Matrix rb = sqrtm(b).matrix();
  // B^{1/2} A^{1/2} = W S V*  =>  polar factor W V* maximises Re tr(A^{1/2} B^{1/2} U).
  Eigen::JacobiSVD<Matrix> svd(rb * ra, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Matrix u = svd.matrixU() * svd.matrixV().adjoint();
  const double value = (ra - rb * u).norm();
  return UnitaryMinimum{value, std::move(u)};
}

}  // namespace hellinger
