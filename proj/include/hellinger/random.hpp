#pragma once

// Deterministic random sampling for property checks and verification suites.
//
// Generator: std::mt19937_64 seeded with the 64-bit seed as-is. Uniform
// doubles take the top 53 bits of one draw, (x >> 11) * 2^-53. Normals use
// the Box-Muller transform on two uniforms (u1 replaced by 1 - u1 so it is
// never zero), returning the cosine branch first and caching the sine branch.
// Integers in [0, n) are x % n. Every sampler below consumes draws in a fixed
// documented order, so a seed reproduces the same matrices on any platform.

#include <cstdint>
#include <optional>
#include <random>

#include "hellinger/linalg.hpp"

namespace hellinger {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// exp(uniform(log lo, log hi)).
  double log_uniform(double lo, double hi);
  double normal();
  std::size_t index(std::size_t n);

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// Entries with independent standard normal real parts and, when complex_entries
/// is set, imaginary parts (drawn real then imaginary, row-major).
Matrix random_gaussian(Rng& rng, Index rows, Index cols, bool complex_entries = true);

/// Haar unitary: QR of a complex Gaussian matrix with R's diagonal phases moved into Q.
Matrix random_unitary(Rng& rng, Index n);

/// (G + G*) / 2 for a complex Gaussian G.
HermitianMatrix random_hermitian(Rng& rng, Index n);

/// U diag(l) U* with U Haar and each l_i log-uniform on [scale, scale * max_condition].
SpdMatrix random_spd(Rng& rng, Index n, double max_condition = 10.0, double scale = 1.0);

/// Rank-r positive semidefinite: U diag(l_1..l_r, 0..0) U*, l_i log-uniform on [scale/10, scale].
HermitianMatrix random_psd(Rng& rng, Index n, Index rank, double scale = 1.0);

/// Complex Gaussian matrix shifted by 2I; resampled until well conditioned (cond <= 1e3).
Matrix random_invertible(Rng& rng, Index n);

/// The same eigenvalues for every member of a simultaneously diagonal family:
/// U diag(l) U* for one shared Haar U.
SpdMatrix spd_with_basis(const Matrix& unitary, const RealVector& eigenvalues);

}  // namespace hellinger
