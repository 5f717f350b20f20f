#include "hellinger/legendre_cex.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace hellinger::legendre {

// ---------------------------------------------------------------------------
// Parameters

CexParams::CexParams(double n, double p) : n_(n), p_(p) {
  if (!(n > 3.0) || !std::isfinite(n)) {
    throw DomainError("CexParams: N = " + std::to_string(n) + " must exceed 3");
  }
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw DomainError("CexParams: p = " + std::to_string(p) + " must exceed 1");
  }
  if (!(gradient_at_zero(n, p) > 0.0)) {
    std::ostringstream os;
    os << "CexParams: (N-3) p (1 - N^{p-1}/2) = " << gradient_at_zero(n, p)
       << " is not positive; choose p closer to 1";
    throw DomainError(os.str());
  }
}

double CexParams::gradient_at_zero(double n, double p) {
  return (n - 3.0) * p * (1.0 - std::pow(n, p - 1.0) / 2.0);
}

double CexParams::gradient_at_zero() const { return gradient_at_zero(n_, p_); }

// ---------------------------------------------------------------------------
// Vector case

namespace {

double signed_power(double z, double e) {
  if (z == 0.0) return 0.0;
  return std::copysign(std::pow(std::abs(z), e), z);
}

Vec2 grad_phi(double p, const Vec2& z) {
  return Vec2(p * signed_power(z(0), p - 1.0), p * signed_power(z(1), p - 1.0));
}

double phi(double p, const Vec2& z) {
  return std::pow(std::abs(z(0)), p) + std::pow(std::abs(z(1)), p);
}

Vec2 g_map(const VectorInstance& v, const Vec2& x) { return Vec2::Ones() + v.l * x; }

// phibar and its gradient at the anchors abar, bbar, evaluated at their exact
// images a, b under g.
struct VectorAnchors {
  VectorInstance inst;
  double phibar_abar;
  double phibar_bbar;
  Vec2 grad_abar;
  Vec2 grad_bbar;
};

VectorAnchors vector_anchors(const CexParams& params) {
  VectorInstance inst = build_vector_instance(params);
  const double p = params.p();
  return VectorAnchors{inst, phi(p, inst.a), phi(p, inst.b),
                       inst.l.transpose() * grad_phi(p, inst.a),
                       inst.l.transpose() * grad_phi(p, inst.b)};
}

double psibar_from(const CexParams& params, const VectorAnchors& an, const Vec2& x) {
  const double fx = phi(params.p(), g_map(an.inst, x));
  const double div_a = fx - an.phibar_abar - an.grad_abar.dot(x - an.inst.abar);
  const double div_b = fx - an.phibar_bbar - an.grad_bbar.dot(x - an.inst.bbar);
  return 0.5 * (div_a + div_b);
}

}  // namespace

VectorInstance build_vector_instance(const CexParams& params) {
  const double n = params.n();
  const double det = n * n - 2.0 * n - 3.0;
  VectorInstance v;
  v.l << n - 1.0, -2.0, -2.0, n - 1.0;
  v.a = Vec2(n, 0.0);
  v.b = Vec2(0.0, n);
  v.abar = Vec2(n * n - 2.0 * n - 1.0, n - 1.0) / det;
  v.bbar = Vec2(n - 1.0, n * n - 2.0 * n - 1.0) / det;
  if (!(v.abar.minCoeff() > 0.0 && v.bbar.minCoeff() > 0.0)) {
    throw DomainError("build_vector_instance: preimages are not strictly positive");
  }
  return v;
}

double phibar_vector(const CexParams& params, const Vec2& x) {
  return phi(params.p(), g_map(build_vector_instance(params), x));
}

Vec2 grad_phibar_vector(const CexParams& params, const Vec2& x) {
  const VectorInstance v = build_vector_instance(params);
  return v.l.transpose() * grad_phi(params.p(), g_map(v, x));
}

double psibar_vector(const CexParams& params, const Vec2& x) {
  return psibar_from(params, vector_anchors(params), x);
}

Vec2 grad_psibar_vector(const CexParams& params, const Vec2& x) {
  const VectorAnchors an = vector_anchors(params);
  return an.inst.l.transpose() * grad_phi(params.p(), g_map(an.inst, x)) -
         0.5 * (an.grad_abar + an.grad_bbar);
}

StrictnessReport verify_vector_strictness(const CexParams& params, std::size_t samples,
                                          Rng& rng) {
  const VectorAnchors an = vector_anchors(params);
  const double psi0 = psibar_from(params, an, Vec2::Zero());
  const Vec2 grad0 = grad_psibar_vector(params, Vec2::Zero());

  StrictnessReport report;
  report.samples = samples;
  report.min_gap = INFINITY;
  report.min_gap_over_bound = INFINITY;
  report.passed = true;
  for (std::size_t k = 0; k < samples; ++k) {
    // Every 10th sample lies on an axis; radius log-uniform in [1e-3, 1e2].
    const double theta = rng.uniform(0.0, std::numbers::pi / 2.0);
    const double r = rng.log_uniform(1e-3, 1e2);
    Vec2 xc(r * std::cos(theta), r * std::sin(theta));
    if (k % 20 == 0) {
      xc = Vec2(r, 0.0);
    } else if (k % 10 == 0) {
      xc = Vec2(0.0, r);
    }

    const double gap = psibar_from(params, an, xc) - psi0;
    const double bound = grad0.dot(xc);
    report.min_gap = std::min(report.min_gap, gap);
    report.min_gap_over_bound = std::min(report.min_gap_over_bound, gap / bound);
    // Convexity gives gap >= bound; allow roundoff relative to the Psibar scale.
    const bool ok = gap > 0.0 && gap >= bound - 1e-12 * std::max(1.0, std::abs(psi0));
    if (!ok && report.passed) {
      std::ostringstream os;
      os.precision(17);
      os << "x = (" << xc(0) << ", " << xc(1) << "), gap = " << gap << ", bound = " << bound;
      report.witness = os.str();
      report.passed = false;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Matrix case

namespace {

Matrix exchange() {
  Matrix tau = Matrix::Zero(2, 2);
  tau(0, 1) = 1.0;
  tau(1, 0) = 1.0;
  return tau;
}

void require_2x2(const HermitianMatrix& x, const char* where) {
  if (x.dim() != 2) {
    throw DimensionError(std::string(where) + ": expected a 2x2 matrix, got dimension " +
                         std::to_string(x.dim()));
  }
}

HermitianMatrix diag2(double a, double b) {
  return HermitianMatrix::from_real((RealMatrix(2, 2) << a, 0.0, 0.0, b).finished());
}

struct MatrixAnchors {
  HermitianMatrix abar;
  HermitianMatrix bbar;
  double phibar_abar;  // tr|diag(a)|^p
  double phibar_bbar;
  HermitianMatrix grad_abar;  // T(grad phi(diag(a)))
  HermitianMatrix grad_bbar;
};

MatrixAnchors matrix_anchors(const CexParams& params) {
  const VectorInstance v = build_vector_instance(params);
  const double p = params.p();
  const HermitianMatrix ga = diag2(v.a(0), v.a(1));
  const HermitianMatrix gb = diag2(v.b(0), v.b(1));
  return MatrixAnchors{diag2(v.abar(0), v.abar(1)),
                       diag2(v.bbar(0), v.bbar(1)),
                       schatten_p_power(ga, p),
                       schatten_p_power(gb, p),
                       apply_t(params, grad_schatten_p(ga, p)),
                       apply_t(params, grad_schatten_p(gb, p))};
}

double psibar_from(const CexParams& params, const MatrixAnchors& an, const HermitianMatrix& x) {
  const double fx = phibar_matrix(params, x);
  const double div_a = fx - an.phibar_abar - frobenius_inner(an.grad_abar, x - an.abar);
  const double div_b = fx - an.phibar_bbar - frobenius_inner(an.grad_bbar, x - an.bbar);
  return 0.5 * (div_a + div_b);
}

HermitianMatrix grad_psibar_from(const CexParams& params, const MatrixAnchors& an,
                                 const HermitianMatrix& x) {
  return grad_phibar_matrix(params, x) - (an.grad_abar + an.grad_bbar) * 0.5;
}

}  // namespace

HermitianMatrix apply_t(const CexParams& params, const HermitianMatrix& x) {
  require_2x2(x, "apply_t");
  const Matrix tau = exchange();
  return HermitianMatrix::symmetrized((params.n() - 1.0) * x.matrix() -
                                      2.0 * tau * x.matrix() * tau);
}

HermitianMatrix apply_t_inv(const CexParams& params, const HermitianMatrix& x) {
  require_2x2(x, "apply_t_inv");
  const double n = params.n();
  const Matrix tau = exchange();
  return HermitianMatrix::symmetrized(((n - 1.0) * x.matrix() + 2.0 * tau * x.matrix() * tau) /
                                      (n * n - 2.0 * n - 3.0));
}

MatrixMaps matrix_maps(const CexParams& params, const HermitianMatrix& x) {
  HermitianMatrix t = apply_t(params, x);
  HermitianMatrix g = HermitianMatrix::identity(2) + t;
  return MatrixMaps{std::move(t), apply_t_inv(params, x), std::move(g)};
}

HermitianMatrix grad_schatten_p(const HermitianMatrix& x, double p) {
  if (!(p > 1.0)) {
    throw DomainError("grad_schatten_p: p = " + std::to_string(p) + " must exceed 1");
  }
  return apply_spectral([p](double l) { return p * signed_power(l, p - 1.0); }, x);
}

double schatten_p_power(const HermitianMatrix& x, double p) {
  const auto eig = eigh(x);
  double s = 0.0;
  for (Index i = 0; i < eig.dim(); ++i) s += std::pow(std::abs(eig.values(i)), p);
  return s;
}

double phibar_matrix(const CexParams& params, const HermitianMatrix& x) {
  return schatten_p_power(matrix_maps(params, x).g, params.p());
}

HermitianMatrix grad_phibar_matrix(const CexParams& params, const HermitianMatrix& x) {
  return apply_t(params, grad_schatten_p(matrix_maps(params, x).g, params.p()));
}

double psibar_matrix(const CexParams& params, const HermitianMatrix& x) {
  require_2x2(x, "psibar_matrix");
  return psibar_from(params, matrix_anchors(params), x);
}

HermitianMatrix grad_psibar_matrix(const CexParams& params, const HermitianMatrix& x) {
  require_2x2(x, "grad_psibar_matrix");
  return grad_psibar_from(params, matrix_anchors(params), x);
}

MatrixCexReport verify_matrix_cex(const CexParams& params, std::size_t samples, Rng& rng) {
  const MatrixAnchors an = matrix_anchors(params);
  const HermitianMatrix zero = HermitianMatrix::zero(2);
  const double c = params.gradient_at_zero();

  MatrixCexReport report;
  report.gradient_at_zero_closed_form = c;
  report.gradient_at_zero = grad_psibar_from(params, an, zero);
  report.gradient_error =
      (report.gradient_at_zero.matrix() - c * Matrix::Identity(2, 2)).norm();
  report.gradient_positive_definite = is_positive_definite(report.gradient_at_zero);

  auto record_witness = [&](const std::string& w) {
    if (!report.witness) report.witness = w;
  };
  if (!report.gradient_positive_definite) {
    std::ostringstream os;
    os << "grad Psibar(0) is not positive definite (closed form " << c << ")";
    record_witness(os.str());
  }

  // (2) Random PSD samples of rank 1 and 2 over several scales.
  const double psi0 = psibar_from(params, an, zero);
  report.psd_samples = samples;
  report.min_psd_gap = INFINITY;
  report.min_psd_gap_over_bound = INFINITY;
  report.psd_gaps_positive = true;
  for (std::size_t k = 0; k < samples; ++k) {
    const Index rank = (k % 2 == 0) ? 1 : 2;
    const double scale = rng.log_uniform(1e-3, 1e2);
    const HermitianMatrix x = random_psd(rng, 2, rank, scale);
    const double gap = psibar_from(params, an, x) - psi0;
    const double bound = frobenius_inner(report.gradient_at_zero, x);
    report.min_psd_gap = std::min(report.min_psd_gap, gap);
    report.min_psd_gap_over_bound = std::min(report.min_psd_gap_over_bound, gap / bound);
    if (!(gap > 0.0 && gap >= bound - 1e-12 * std::max(1.0, std::abs(psi0)))) {
      report.psd_gaps_positive = false;
      std::ostringstream os;
      os.precision(17);
      os << "PSD sample " << k << ": gap " << gap << ", linear bound " << bound;
      record_witness(os.str());
    }
  }

  // (3) Stationarity residual on a grid of PD matrices U diag(m1, m2) U*.
  constexpr int kPerDecade = 4;
  constexpr int kLevels = 9 * kPerDecade + 1;  // 1e-6 .. 1e3
  constexpr int kAngles = 8;
  report.residual_lower_bound = c;
  report.min_stationarity_residual = INFINITY;
  std::size_t points = 0;
  for (int i = 0; i < kLevels; ++i) {
    const double m1 = std::pow(10.0, -6.0 + static_cast<double>(i) / kPerDecade);
    for (int j = 0; j < kLevels; ++j) {
      const double m2 = std::pow(10.0, -6.0 + static_cast<double>(j) / kPerDecade);
      for (int a = 0; a < kAngles; ++a) {
        const double theta = std::numbers::pi * a / kAngles;
        for (double phase : {0.0, std::numbers::pi / 2.0}) {
          const Complex e = std::polar(1.0, phase);
          Matrix u(2, 2);
          u << std::cos(theta), -std::sin(theta) * e, std::sin(theta) * std::conj(e),
              std::cos(theta);
          const HermitianMatrix x = HermitianMatrix::symmetrized(
              u * RealVector((RealVector(2) << m1, m2).finished()).cast<Complex>().asDiagonal() *
              u.adjoint());
          const double r = grad_psibar_from(params, an, x).matrix().norm();
          report.min_stationarity_residual = std::min(report.min_stationarity_residual, r);
          ++points;
        }
      }
    }
  }
  report.grid_points = points;
  report.residual_bounded_below = report.min_stationarity_residual > 0.0 &&
                                  report.min_stationarity_residual >= c * (1.0 - 1e-8);
  if (!report.residual_bounded_below) {
    std::ostringstream os;
    os << "stationarity residual " << report.min_stationarity_residual
       << " fell below the convexity bound " << c;
    record_witness(os.str());
  }

  report.passed = report.gradient_error <= 1e-9 && report.gradient_positive_definite &&
                  report.psd_gaps_positive && report.residual_bounded_below;
  return report;
}

}  // namespace hellinger::legendre
