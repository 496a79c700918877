#pragma once

#include <utility>

#include "dp1/numerics.hpp"

// The dP1 maps and their autonomous alpha-dP1 counterparts. Everything here
// is templated on the scalar so the same formulas run exactly over Rational
// (property tests) and at arbitrary precision over BigReal.

namespace dp1 {

template <class T>
struct PlanePoint {
  T x;
  T y;
};

template <class T>
struct AutonomousParams {
  T alpha;
  T r;  // > 0
};

// x_{n+1} = n/(N r x_n) - 1/r - x_n - y_n,  y_{n+1} = x_n.
// The n = 0 step is defined on the whole y-axis: the n/(Nrx) term is zero.
template <class T>
PlanePoint<T> dp1_forward(const PlanePoint<T>& p, long n, const T& r,
                          const T& N) {
  T term = scalar_from_long(0, p.x);
  if (n != 0) {
    if (p.x.is_zero())
      raise(Errc::singular_axis, "dp1_forward: x = 0 at n = " + std::to_string(n));
    term = scalar_from_long(n, p.x) / (N * r * p.x);
  }
  T one = scalar_from_long(1, p.x);
  return {term - one / r - p.x - p.y, p.x};
}

// Inverse map: input is (x_{n+1}, y_{n+1}), output (x_n, y_n).
// x_n = y_{n+1},  y_n = n/(N r y_{n+1}) - 1/r - x_{n+1} - y_{n+1}.
template <class T>
PlanePoint<T> dp1_inverse(const PlanePoint<T>& p, long n, const T& r,
                          const T& N) {
  T term = scalar_from_long(0, p.y);
  if (n != 0) {
    if (p.y.is_zero())
      raise(Errc::singular_axis, "dp1_inverse: y = 0 at n = " + std::to_string(n));
    term = scalar_from_long(n, p.y) / (N * r * p.y);
  }
  T one = scalar_from_long(1, p.y);
  return {p.y, term - one / r - p.x - p.y};
}

template <class T>
PlanePoint<T> dp1_forward(const PlanePoint<T>& p, long n, const Params& params);
template <>
inline PlanePoint<Rational> dp1_forward(const PlanePoint<Rational>& p, long n,
                                        const Params& params) {
  return dp1_forward(p, n, params.r, params.N);
}
template <>
inline PlanePoint<BigReal> dp1_forward(const PlanePoint<BigReal>& p, long n,
                                       const Params& params) {
  mpfr_prec_t prec = std::min(p.x.precision(), p.y.precision());
  return dp1_forward(p, n, BigReal(params.r, prec), BigReal(params.N, prec));
}

template <class T>
PlanePoint<T> dp1_inverse(const PlanePoint<T>& p, long n, const Params& params);
template <>
inline PlanePoint<Rational> dp1_inverse(const PlanePoint<Rational>& p, long n,
                                        const Params& params) {
  return dp1_inverse(p, n, params.r, params.N);
}
template <>
inline PlanePoint<BigReal> dp1_inverse(const PlanePoint<BigReal>& p, long n,
                                       const Params& params) {
  mpfr_prec_t prec = std::min(p.x.precision(), p.y.precision());
  return dp1_inverse(p, n, BigReal(params.r, prec), BigReal(params.N, prec));
}

// Autonomous family: xbar = alpha/(r x) - 1/r - x - y, ybar = x.
template <class T>
PlanePoint<T> alpha_dp1_step(const PlanePoint<T>& p,
                             const AutonomousParams<T>& ap) {
  if (p.x.is_zero()) raise(Errc::singular_axis, "alpha_dp1_step: x = 0");
  T one = scalar_from_long(1, p.x);
  return {ap.alpha / (ap.r * p.x) - one / ap.r - p.x - p.y, p.x};
}

// Hyperbolic fixed point (omega, omega), omega = (-1 + sqrt(1+12 alpha r))/(6r).
inline PlanePoint<BigReal> alpha_fixed_point(const AutonomousParams<BigReal>& ap) {
  BigReal radicand = 1 + 12 * (ap.alpha * ap.r);
  if (radicand.sign() < 0)
    raise(Errc::complex_root, "alpha_fixed_point: 1 + 12*alpha*r < 0");
  BigReal omega = (big_sqrt(radicand) - 1) / (6 * ap.r);
  return {omega, omega};
}

// Exact variant; requires the radicand to be a perfect square.
inline PlanePoint<Rational> alpha_fixed_point(const AutonomousParams<Rational>& ap) {
  Rational radicand = Rational(1) + Rational(12) * ap.alpha * ap.r;
  if (radicand.sign() < 0)
    raise(Errc::complex_root, "alpha_fixed_point: 1 + 12*alpha*r < 0");
  auto root = rational_sqrt(radicand);
  if (!root)
    raise(Errc::invalid_argument,
          "alpha_fixed_point<Rational>: radicand is not a perfect square");
  Rational omega = (*root - Rational(1)) / (Rational(6) * ap.r);
  return {omega, omega};
}

// The unique genuine period-2 orbit, real only for alpha < 0:
// Omega_{+,-} = (-1 +- sqrt(1 - 4 alpha r))/(2r). Returned as the ordered
// pair of plane points ((O+, O-), (O-, O+)).
inline std::pair<PlanePoint<BigReal>, PlanePoint<BigReal>> alpha_period2(
    const AutonomousParams<BigReal>& ap) {
  if (ap.alpha.sign() >= 0)
    raise(Errc::not_genuine, "alpha_period2: requires alpha < 0");
  BigReal root = big_sqrt(1 - 4 * (ap.alpha * ap.r));
  BigReal plus = (root - 1) / (2 * ap.r);
  BigReal minus = ((-root) - 1) / (2 * ap.r);
  return {PlanePoint<BigReal>{plus, minus}, PlanePoint<BigReal>{minus, plus}};
}

inline std::pair<PlanePoint<Rational>, PlanePoint<Rational>> alpha_period2(
    const AutonomousParams<Rational>& ap) {
  if (ap.alpha.sign() >= 0)
    raise(Errc::not_genuine, "alpha_period2: requires alpha < 0");
  Rational radicand = Rational(1) - Rational(4) * ap.alpha * ap.r;
  auto root = rational_sqrt(radicand);
  if (!root)
    raise(Errc::invalid_argument,
          "alpha_period2<Rational>: radicand is not a perfect square");
  Rational plus = (*root - Rational(1)) / (Rational(2) * ap.r);
  Rational minus = (-*root - Rational(1)) / (Rational(2) * ap.r);
  return {PlanePoint<Rational>{plus, minus}, PlanePoint<Rational>{minus, plus}};
}

// Conserved quantity of the alpha-dP1 step:
//   I(x, y) = x y (x + y) + x y / r - (alpha / r)(x + y).
// Conservation under the step was checked symbolically before this form was
// committed; the tests re-check it exactly on random rational states.
template <class T>
T qrt_invariant(const PlanePoint<T>& p, const AutonomousParams<T>& ap) {
  return p.x * p.y * (p.x + p.y) + p.x * p.y / ap.r -
         (ap.alpha / ap.r) * (p.x + p.y);
}

// Geometric action on the invariant biquadratic: intersect the level set of
// I(x, .) with the vertical line through (x, y), take the second root, and
// reflect across the diagonal. Computed through the root-product relation
// (the root-sum relation would literally restate the map), so agreement with
// alpha_dp1_step is a genuine identity, not a tautology.
template <class T>
PlanePoint<T> qrt_vertical_partner(const PlanePoint<T>& p,
                                   const AutonomousParams<T>& ap) {
  if (p.x.is_zero()) raise(Errc::singular_axis, "qrt_vertical_partner: x = 0");
  T one = scalar_from_long(1, p.x);
  T ytilde = [&] {
    if (p.y.is_zero()) {
      // y = 0 is itself a root; the second root comes from the root sum.
      return ap.alpha / (ap.r * p.x) - one / ap.r - p.x;
    }
    T level = qrt_invariant(p, ap);
    return -((ap.alpha / ap.r) * p.x + level) / (p.x * p.y);
  }();
  return {ytilde, p.x};
}

// Freud's equation residual r*x*(x_next + x + x_prev) + x - n/N; identically
// zero along dP1 orbits of squared recurrence coefficients.
template <class T>
T freud_residual(const T& x_prev, const T& x, const T& x_next, long n,
                 const T& r, const T& N) {
  return r * x * (x_next + x + x_prev) + x - scalar_from_long(n, x) / N;
}

}  // namespace dp1
