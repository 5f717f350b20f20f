#pragma once

#include <initializer_list>
#include <vector>

#include "hellinger/linalg.hpp"

namespace hellinger::testing {

inline SpdMatrix diag(std::initializer_list<double> d) {
  RealVector v(static_cast<Index>(d.size()));
  Index i = 0;
  for (double x : d) v(i++) = x;
  return SpdMatrix::from_real(v.asDiagonal().toDenseMatrix());
}

inline HermitianMatrix hdiag(std::initializer_list<double> d) {
  RealVector v(static_cast<Index>(d.size()));
  Index i = 0;
  for (double x : d) v(i++) = x;
  return HermitianMatrix::from_real(v.asDiagonal().toDenseMatrix());
}

inline SpdMatrix spd2(double a, double b, double c) {
  RealMatrix m(2, 2);
  m << a, b, b, c;
  return SpdMatrix::from_real(m);
}

inline double dist(const Matrix& a, const Matrix& b) { return (a - b).norm(); }
inline double dist(const HermitianMatrix& a, const HermitianMatrix& b) {
  return (a.matrix() - b.matrix()).norm();
}

}  // namespace hellinger::testing
