#include "hellinger/bregman.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace hellinger {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_mother_function(const MotherFunction& m) {
  constexpr int kGrid = 121;  // 10 points per decade over [1e-6, 1e6]
  double prev = -kInf;
  for (int i = 0; i < kGrid; ++i) {
    const double x = std::pow(10.0, -6.0 + 12.0 * i / (kGrid - 1));
    const double d = m.dpsi(x);
    if (!std::isfinite(d) || !(d > prev)) {
      std::ostringstream os;
      os << "MotherFunction '" << m.name() << "': psi' is not strictly increasing at x = " << x;
      throw DomainError(os.str());
    }
    if (!m.dpsi_image().contains(d)) {
      std::ostringstream os;
      os << "MotherFunction '" << m.name() << "': psi'(" << x << ") = " << d
         << " lies outside the declared image";
      throw DomainError(os.str());
    }
    const double back = m.inv_dpsi(d);
    if (!(std::abs(back - x) <= 1e-10 * x)) {
      std::ostringstream os;
      os << "MotherFunction '" << m.name() << "': inverse derivative maps psi'(" << x
         << ") to " << back;
      throw DomainError(os.str());
    }
    prev = d;
  }
}

}  // namespace

MotherFunction::MotherFunction(std::string name, Fn psi, Fn dpsi, Fn inv_dpsi,
                               OpenInterval dpsi_image)
    : name_(std::move(name)),
      psi_(std::move(psi)),
      dpsi_(std::move(dpsi)),
      inv_dpsi_(std::move(inv_dpsi)),
      image_(dpsi_image) {
  check_mother_function(*this);
}

MotherFunction MotherFunction::entropy() {
  return MotherFunction(
      "entropy", [](double x) { return x * std::log(x) - x; },
      [](double x) { return std::log(x); }, [](double y) { return std::exp(y); },
      OpenInterval{-kInf, kInf});
}

MotherFunction MotherFunction::square() {
  return MotherFunction(
      "square", [](double x) { return 0.5 * x * x; }, [](double x) { return x; },
      [](double y) { return y; }, OpenInterval{0.0, kInf});
}

MotherFunction MotherFunction::power(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw DomainError("MotherFunction::power: p = " + std::to_string(p) + " must exceed 1");
  }
  std::ostringstream name;
  name << "power(" << p << ")";
  return MotherFunction(
      name.str(), [p](double x) { return std::pow(x, p); },
      [p](double x) { return p * std::pow(x, p - 1.0); },
      [p](double y) { return std::pow(y / p, 1.0 / (p - 1.0)); }, OpenInterval{0.0, kInf});
}

double bregman_scalar(const MotherFunction& m, double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) {
    std::ostringstream os;
    os << "bregman_scalar: arguments must be positive, got (" << x << ", " << y << ")";
    throw DomainError(os.str());
  }
  return m.psi(x) - m.psi(y) - m.dpsi(y) * (x - y);
}

double bregman_tracial(const MotherFunction& m, const SpdMatrix& a, const SpdMatrix& b) {
  require_same_dim(a, b, "bregman_tracial");
  double tr_psi_a = 0.0;
  double tr_psi_b = 0.0;
  for (Index i = 0; i < a.dim(); ++i) tr_psi_a += m.psi(a.eigen().values(i));
  for (Index i = 0; i < b.dim(); ++i) tr_psi_b += m.psi(b.eigen().values(i));
  const HermitianMatrix dpsi_b = apply_spectral([&](double x) { return m.dpsi(x); }, b.eigen());
  const double linear = frobenius_inner(dpsi_b, a.hermitian() - b.hermitian());
  const double value = tr_psi_a - tr_psi_b - linear;
  if (value < 0.0) {
    const double scale = std::max(1.0, std::abs(tr_psi_a) + std::abs(tr_psi_b) + std::abs(linear));
    if (value < -1e-10 * scale) {
      std::ostringstream os;
      os << "bregman_tracial(" << m.name() << "): negative value " << value;
      throw ConsistencyError(os.str());
    }
    return 0.0;
  }
  return value;
}

double relative_entropy(const SpdMatrix& a, const SpdMatrix& b) {
  require_same_dim(a, b, "relative_entropy");
  const HermitianMatrix diff = logm(a) - logm(b);
  return frobenius_inner(a.hermitian(), diff);
}

SpdMatrix right_barycentre(const MotherFunction&, std::span<const SpdMatrix> as,
                           const WeightVector& w) {
  return arithmetic_mean(as, w);
}

SpdMatrix left_barycentre(const MotherFunction& m, std::span<const SpdMatrix> as,
                          const WeightVector& w) {
  require_family(as, w, "left_barycentre");
  HermitianMatrix sum = HermitianMatrix::zero(as.front().dim());
  for (std::size_t j = 0; j < as.size(); ++j) {
    sum = sum + apply_spectral([&](double x) { return m.dpsi(x); }, as[j].eigen()) * w[j];
  }
  const EigenDecomposition eig = eigh(sum);
  RealVector mapped(eig.dim());
  for (Index i = 0; i < eig.dim(); ++i) {
    const double y = eig.values(i);
    if (!m.dpsi_image().contains(y)) {
      std::ostringstream os;
      os << "left_barycentre(" << m.name() << "): eigenvalue " << y
         << " of the averaged gradient lies outside the image of psi'";
      throw DomainError(os.str());
    }
    mapped(i) = m.inv_dpsi(y);
  }
  return detail::spd_from_spectrum(eig, mapped);
}

double variance(const MotherFunction& m, std::span<const SpdMatrix> as, const WeightVector& w) {
  const SpdMatrix mu = left_barycentre(m, as, w);
  double total = 0.0;
  for (std::size_t j = 0; j < as.size(); ++j) total += w[j] * bregman_tracial(m, mu, as[j]);
  return total;
}

double phi4_via_min(const SpdMatrix& a, const SpdMatrix& b) {
  const MotherFunction entropy = MotherFunction::entropy();
  const SpdMatrix l = log_euclidean(a, b);
  return bregman_tracial(entropy, l, a) + bregman_tracial(entropy, l, b);
}

}  // namespace hellinger
