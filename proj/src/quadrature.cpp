#include "hellinger/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

#include "hellinger/means.hpp"

namespace hellinger {

namespace {

using GaussRule = boost::math::quadrature::gauss<double, 20>;

struct Substitution {
  double lambda;  // point on the half line
  double weight;  // d(measure)/du at that point
};

// u in (0,1) -> (lambda, dmeasure/du)
Substitution substitute(MeasureKind kind, double u) {
  const double one_minus = 1.0 - u;
  const double s = u / one_minus;
  const double ds = 1.0 / (one_minus * one_minus);
  if (kind == MeasureKind::Lebesgue) return {s, ds};
  // l = s^2, dnu = (1/pi) s * 2s ds
  return {s * s, 2.0 * s * s * ds / std::numbers::pi};
}

Matrix composite_gauss(MeasureKind kind, const std::function<Matrix(double)>& f, int panels) {
  const auto& x = GaussRule::abscissa();
  const auto& w = GaussRule::weights();
  const double h = 1.0 / panels;
  Matrix total;
  bool first = true;
  auto accumulate = [&](const Matrix& m) {
    if (first) {
      total = m;
      first = false;
    } else {
      total += m;
    }
  };
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * h;
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (double sign : {-1.0, 1.0}) {
        if (x[i] == 0.0 && sign > 0.0) continue;
        const double u = mid + sign * 0.5 * h * x[i];
        const Substitution sub = substitute(kind, u);
        accumulate(f(sub.lambda) * (sub.weight * w[i] * 0.5 * h));
      }
    }
  }
  return total;
}

Matrix resolvent(const Matrix& shifted) { return shifted.partialPivLu().inverse(); }

HermitianMatrix require_converged(const QuadratureResult& r, const char* where) {
  if (!r.converged) {
    std::ostringstream os;
    os << where << ": quadrature did not converge (panels " << r.panels << ", last change "
       << r.last_change << ")";
    throw ConvergenceError(os.str());
  }
  return HermitianMatrix::symmetrized(r.value);
}

}  // namespace

QuadratureResult integrate_half_line(const IntegrationMeasure& measure,
                                     const std::function<Matrix(double)>& integrand) {
  const QuadratureRule& rule = measure.rule;
  int panels = std::max(1, rule.initial_panels);
  QuadratureResult result;
  result.value = composite_gauss(measure.kind, integrand, panels);
  result.panels = panels;
  result.last_change = INFINITY;
  while (panels * 2 <= rule.max_panels) {
    panels *= 2;
    Matrix refined = composite_gauss(measure.kind, integrand, panels);
    const double change = (refined - result.value).norm();
    const double scale = std::max(1.0, refined.norm());
    result.value = std::move(refined);
    result.panels = panels;
    result.last_change = change;
    if (change <= rule.tol * scale) {
      result.converged = true;
      break;
    }
  }
  return result;
}

double integrate_scalar(const IntegrationMeasure& measure,
                        const std::function<double(double)>& integrand) {
  const auto r = integrate_half_line(measure, [&](double l) {
    return Matrix::Constant(1, 1, Complex(integrand(l), 0.0));
  });
  if (!r.converged) {
    std::ostringstream os;
    os << "integrate_scalar: quadrature did not converge (panels " << r.panels
       << ", last change " << r.last_change << ")";
    throw ConvergenceError(os.str());
  }
  return r.value(0, 0).real();
}

double resolvent_moment(int k, const QuadratureRule& rule) {
  if (k < 2) throw DomainError("resolvent_moment: k must be at least 2");
  return integrate_scalar({MeasureKind::SqrtWeight, rule},
                          [k](double l) { return std::pow(1.0 + l, -k); });
}

double quad_check(QuadCheck which, double x, const QuadratureRule& rule) {
  switch (which) {
    case QuadCheck::SqrtRepresentation: {
      if (!(x > 0.0)) throw DomainError("quad_check: x must be positive");
      // l/(l^2+1) - 1/(l+x) written without cancellation.
      const double integral = integrate_scalar(
          {MeasureKind::SqrtWeight, rule},
          [x](double l) { return (l * x - 1.0) / ((l * l + 1.0) * (l + x)); });
      return 1.0 / std::numbers::sqrt2 + integral;
    }
    case QuadCheck::FirstOrderNormalization:
      return resolvent_moment(2, rule);
    case QuadCheck::SecondOrderNormalization:
      // D^2 Phi3 = -2 D^2 tr g and each of the two resolvent terms of D^2 tr g
      // contributes -int (1+l)^{-3} dnu at X = A, Z = Y.
      return 4.0 * resolvent_moment(3, rule);
  }
  throw DomainError("quad_check: unknown check");
}

HermitianMatrix frechet_sqrt_quadrature(const SpdMatrix& x, const HermitianMatrix& y,
                                        const QuadratureRule& rule) {
  require_same_dim(x, y, "frechet_sqrt_quadrature");
  const Index n = x.dim();
  const auto r = integrate_half_line({MeasureKind::SqrtWeight, rule}, [&](double l) {
    const Matrix res = resolvent(x.matrix() + l * Matrix::Identity(n, n));
    return Matrix(res * y.matrix() * res);
  });
  return require_converged(r, "frechet_sqrt_quadrature");
}

HermitianMatrix frechet_log_quadrature(const SpdMatrix& x, const HermitianMatrix& y,
                                       const QuadratureRule& rule) {
  require_same_dim(x, y, "frechet_log_quadrature");
  const Index n = x.dim();
  const auto r = integrate_half_line({MeasureKind::Lebesgue, rule}, [&](double l) {
    const Matrix res = resolvent(x.matrix() + l * Matrix::Identity(n, n));
    return Matrix(res * y.matrix() * res);
  });
  return require_converged(r, "frechet_log_quadrature");
}

HermitianMatrix frechet_geometric_quadrature(const SpdMatrix& a, const SpdMatrix& x,
                                             const HermitianMatrix& y,
                                             const QuadratureRule& rule) {
  require_same_dim(a, x, "frechet_geometric_quadrature");
  require_same_dim(a, y, "frechet_geometric_quadrature");
  const Index n = a.dim();
  const Matrix a_inv = a.matrix().partialPivLu().inverse();
  const Matrix x_ainv = x.matrix() * a_inv;
  const Matrix ainv_x = a_inv * x.matrix();
  const Matrix id = Matrix::Identity(n, n);
  const auto r = integrate_half_line({MeasureKind::SqrtWeight, rule}, [&](double l) {
    return Matrix(resolvent(x_ainv + l * id) * y.matrix() * resolvent(ainv_x + l * id));
  });
  return require_converged(r, "frechet_geometric_quadrature");
}

HermitianMatrix d_tr_log_euclidean_quadrature(const SpdMatrix& a, const SpdMatrix& x,
                                              const QuadratureRule& rule) {
  require_same_dim(a, x, "d_tr_log_euclidean_quadrature");
  const Index n = x.dim();
  const Matrix l_ax = log_euclidean(a, x).matrix();
  const auto r = integrate_half_line({MeasureKind::Lebesgue, rule}, [&](double l) {
    const Matrix res = resolvent(x.matrix() + l * Matrix::Identity(n, n));
    return Matrix(res * l_ax * res);
  });
  return require_converged(r, "d_tr_log_euclidean_quadrature") * 0.5;
}

}  // namespace hellinger
