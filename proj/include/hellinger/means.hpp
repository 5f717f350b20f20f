#pragma once

#include <span>
#include <vector>

#include "hellinger/linalg.hpp"

namespace hellinger {

/// Positive weights, normalized to sum to one at construction.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> weights);
  static WeightVector uniform(std::size_t m);

  std::size_t size() const { return w_.size(); }
  double operator[](std::size_t j) const { return w_[j]; }
  std::span<const double> values() const { return w_; }

 private:
  std::vector<double> w_;
};

/// Sum_j w_j A_j.
SpdMatrix arithmetic_mean(std::span<const SpdMatrix> as, const WeightVector& w);

/// A #_t B = A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2}, t in [0, 1].
SpdMatrix geometric_mean_t(const SpdMatrix& a, const SpdMatrix& b, double t);
/// A # B, the t = 1/2 case.
SpdMatrix geometric_mean(const SpdMatrix& a, const SpdMatrix& b);

/// exp((log A + log B) / 2).
SpdMatrix log_euclidean(const SpdMatrix& a, const SpdMatrix& b);
/// exp(Sum_j w_j log A_j).
SpdMatrix log_euclidean(std::span<const SpdMatrix> as, const WeightVector& w);

/// tr (A^{1/2} B A^{1/2})^{1/2}.
double fidelity(const SpdMatrix& a, const SpdMatrix& b);

/// The 1/2-power mean (Sum_j w_j A_j^{1/2})^2.
SpdMatrix q_half(std::span<const SpdMatrix> as, const WeightVector& w);

/// Throws DimensionError unless as is non-empty, |as| == |w| and all dims agree.
void require_family(std::span<const SpdMatrix> as, const WeightVector& w, const char* where);

}  // namespace hellinger
