#pragma once

#include <string_view>
#include <vector>

#include "hellinger/linalg.hpp"

namespace hellinger {

/// Nonnegative entries summing to one (within 1e-12).
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> p);
  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }

 private:
  std::vector<double> p_;
};

/// d_H(p, q) = ||sqrt(p) - sqrt(q)||_2 / sqrt(2).
double hellinger(const ProbabilityVector& p, const ProbabilityVector& q);

/// Which "geometric mean" G enters d(A,B) = [tr(A+B) - 2 tr G(A,B)]^{1/2}:
///   D1  A^{1/2} B^{1/2}
///   D2  (A^{1/2} B A^{1/2})^{1/2}   (Bures-Wasserstein)
///   D3  A # B                        (Pusz-Woronowicz)
///   D4  exp((log A + log B)/2)       (log-Euclidean)
enum class DistanceKind { D1, D2, D3, D4 };

std::string_view to_string(DistanceKind kind);
/// Accepts "d1".."d4" (case-insensitive). Throws DomainError otherwise.
DistanceKind parse_distance_kind(std::string_view name);

/// Radicands in [-kRadicandTol, 0) are treated as zero.
inline constexpr double kRadicandTol = 1e-10;

/// tr G(A, B) for the given kind.
double mean_trace(DistanceKind kind, const SpdMatrix& a, const SpdMatrix& b);

/// d_kind(A,B)^2. Throws ConsistencyError if the radicand is below -kRadicandTol.
double divergence(DistanceKind kind, const SpdMatrix& a, const SpdMatrix& b);
double distance(DistanceKind kind, const SpdMatrix& a, const SpdMatrix& b);

struct TraceChain {
  double geometric;       ///< tr A#B
  double log_euclidean;   ///< tr L(A,B)
  double sqrt_product;    ///< tr A^{1/2} B^{1/2}
  double product_sqrt;    ///< tr (AB)^{1/2}
};

/// The four traces, weakly increasing in declaration order.
TraceChain trace_chain(const SpdMatrix& a, const SpdMatrix& b);

struct UnitaryMinimum {
  double value;    ///< min_U ||A^{1/2} - B^{1/2} U||_2
  Matrix unitary;  ///< a minimiser
};

/// Minimises ||A^{1/2} - B^{1/2} U||_2 over unitaries U. The optimum is the
/// unitary polar factor of B^{1/2} A^{1/2}; the value equals d2(A,B).
UnitaryMinimum d2_unitary(const SpdMatrix& a, const SpdMatrix& b);

}  // namespace hellinger
