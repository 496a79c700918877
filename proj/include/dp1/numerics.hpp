#pragma once

#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dp1/errors.hpp"

namespace dp1 {

// ---------------------------------------------------------------------------
// Rational: exact arbitrary-size rational, always reduced, denominator > 0.
// ---------------------------------------------------------------------------
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long num) {
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
  }
  Rational(long num, long den);
  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  // Accepts "p/q", plain integers, and decimal literals ("1.7" -> 17/10).
  static Rational from_string(std::string_view text);

  std::string to_string() const;  // "num/den", or "num" when den == 1
  std::string num_string() const;
  std::string den_string() const;

  int sign() const { return mpq_sgn(q_); }
  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

  Rational abs() const;
  Rational reciprocal() const;
  double to_double() const { return mpq_get_d(q_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational out;
    mpq_add(out.q_, a.q_, b.q_);
    return out;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational out;
    mpq_sub(out.q_, a.q_, b.q_);
    return out;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational out;
    mpq_mul(out.q_, a.q_, b.q_);
    return out;
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) raise(Errc::invalid_argument, "Rational division by zero");
    Rational out;
    mpq_div(out.q_, a.q_, b.q_);
    return out;
  }
  Rational operator-() const {
    Rational out;
    mpq_neg(out.q_, q_);
    return out;
  }
  Rational& operator+=(const Rational& o) { mpq_add(q_, q_, o.q_); return *this; }
  Rational& operator-=(const Rational& o) { mpq_sub(q_, q_, o.q_); return *this; }
  Rational& operator*=(const Rational& o) { mpq_mul(q_, q_, o.q_); return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = mpq_cmp(a.q_, b.q_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  mpq_srcptr raw() const { return q_; }

 private:
  mpq_t q_;
};

// Exact square root; empty when the argument is not a perfect square.
std::optional<Rational> rational_sqrt(const Rational& x);

// ---------------------------------------------------------------------------
// BigReal: MPFR-backed real with explicit per-value precision (bits).
// Combining two values rounds at the minimum of the operand precisions; a
// value's precision is only raised through with_precision().
// ---------------------------------------------------------------------------
class BigReal {
 public:
  static constexpr mpfr_prec_t kMinPrecision = 2;

  BigReal(long value, mpfr_prec_t prec) {
    mpfr_init2(v_, check_prec(prec));
    mpfr_set_si(v_, value, MPFR_RNDN);
  }
  BigReal(const Rational& value, mpfr_prec_t prec) {
    mpfr_init2(v_, check_prec(prec));
    mpfr_set_q(v_, value.raw(), MPFR_RNDN);
  }
  BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, kMinPrecision);
    mpfr_swap(v_, o.v_);
  }
  BigReal& operator=(const BigReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigReal& operator=(BigReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigReal() { mpfr_clear(v_); }

  static BigReal from_decimal(std::string_view text, mpfr_prec_t prec);

  // Decimal string with enough digits that re-reading at the same precision
  // recovers the value exactly.
  std::string to_decimal() const;

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  BigReal with_precision(mpfr_prec_t prec) const {
    BigReal out(uninit_tag{}, check_prec(prec));
    mpfr_set(out.v_, v_, MPFR_RNDN);
    return out;
  }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  friend BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal out(uninit_tag{}, combine(a, b));
    mpfr_add(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
  }
  friend BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal out(uninit_tag{}, combine(a, b));
    mpfr_sub(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
  }
  friend BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal out(uninit_tag{}, combine(a, b));
    mpfr_mul(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
  }
  friend BigReal operator/(const BigReal& a, const BigReal& b) {
    if (b.is_zero()) raise(Errc::invalid_argument, "BigReal division by zero");
    BigReal out(uninit_tag{}, combine(a, b));
    mpfr_div(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
  }
  BigReal operator-() const {
    BigReal out(uninit_tag{}, precision());
    mpfr_neg(out.v_, v_, MPFR_RNDN);
    return out;
  }

  friend BigReal operator+(const BigReal& a, long b) {
    BigReal out(uninit_tag{}, a.precision());
    mpfr_add_si(out.v_, a.v_, b, MPFR_RNDN);
    return out;
  }
  friend BigReal operator+(long a, const BigReal& b) { return b + a; }
  friend BigReal operator-(const BigReal& a, long b) {
    BigReal out(uninit_tag{}, a.precision());
    mpfr_sub_si(out.v_, a.v_, b, MPFR_RNDN);
    return out;
  }
  friend BigReal operator-(long a, const BigReal& b) {
    BigReal out(uninit_tag{}, b.precision());
    mpfr_si_sub(out.v_, a, b.v_, MPFR_RNDN);
    return out;
  }
  friend BigReal operator*(const BigReal& a, long b) {
    BigReal out(uninit_tag{}, a.precision());
    mpfr_mul_si(out.v_, a.v_, b, MPFR_RNDN);
    return out;
  }
  friend BigReal operator*(long a, const BigReal& b) { return b * a; }
  friend BigReal operator/(const BigReal& a, long b) {
    if (b == 0) raise(Errc::invalid_argument, "BigReal division by zero");
    BigReal out(uninit_tag{}, a.precision());
    mpfr_div_si(out.v_, a.v_, b, MPFR_RNDN);
    return out;
  }
  friend BigReal operator/(long a, const BigReal& b) {
    if (b.is_zero()) raise(Errc::invalid_argument, "BigReal division by zero");
    BigReal out(uninit_tag{}, b.precision());
    mpfr_si_div(out.v_, a, b.v_, MPFR_RNDN);
    return out;
  }

  friend bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }
  friend bool operator<(const BigReal& a, const BigReal& b) {
    return mpfr_less_p(a.v_, b.v_) != 0;
  }
  friend bool operator<=(const BigReal& a, const BigReal& b) {
    return mpfr_lessequal_p(a.v_, b.v_) != 0;
  }
  friend bool operator>(const BigReal& a, const BigReal& b) {
    return mpfr_greater_p(a.v_, b.v_) != 0;
  }
  friend bool operator>=(const BigReal& a, const BigReal& b) {
    return mpfr_greaterequal_p(a.v_, b.v_) != 0;
  }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  struct uninit_tag {};
  BigReal(uninit_tag, mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  static mpfr_prec_t combine(const BigReal& a, const BigReal& b) {
    return std::min(a.precision(), b.precision());
  }
  static mpfr_prec_t check_prec(mpfr_prec_t prec) {
    if (prec < kMinPrecision)
      raise(Errc::invalid_argument, "precision below minimum");
    return prec;
  }
  mpfr_t v_;

  friend BigReal big_abs(const BigReal&);
  friend BigReal big_sqrt(const BigReal&, mpfr_prec_t);
  friend BigReal big_exp(const BigReal&);
  friend BigReal big_log(const BigReal&);
  friend BigReal big_sinh(const BigReal&);
  friend BigReal big_cosh(const BigReal&);
  friend BigReal big_tanh(const BigReal&);
  friend BigReal big_hypot(const BigReal&, const BigReal&);
  friend BigReal big_pi(mpfr_prec_t);
};

BigReal big_abs(const BigReal& x);
BigReal big_sqrt(const BigReal& x, mpfr_prec_t prec);  // NegativeInput on x < 0
inline BigReal big_sqrt(const BigReal& x) { return big_sqrt(x, x.precision()); }
BigReal big_exp(const BigReal& x);
BigReal big_log(const BigReal& x);
BigReal big_sinh(const BigReal& x);
BigReal big_cosh(const BigReal& x);
BigReal big_tanh(const BigReal& x);
BigReal big_hypot(const BigReal& x, const BigReal& y);
BigReal big_pi(mpfr_prec_t prec);

// Scalar helpers shared by code templated over BigReal / Rational.
inline BigReal scalar_from_long(long v, const BigReal& like) {
  return BigReal(v, like.precision());
}
inline Rational scalar_from_long(long v, const Rational&) { return Rational(v); }

// ceil(digits * log2(10)), the bit budget for a decimal digit count.
mpfr_prec_t bits_for_digits(long digits);

// ---------------------------------------------------------------------------
// GammaPoly: dense polynomial in gamma = r/N with exact Rational coefficients.
// Trailing zero coefficients are trimmed; the zero polynomial has no terms.
// ---------------------------------------------------------------------------
class GammaPoly {
 public:
  GammaPoly() = default;
  GammaPoly(Rational constant);
  GammaPoly(long constant) : GammaPoly(Rational(constant)) {}
  explicit GammaPoly(std::vector<Rational> coeffs);

  static GammaPoly gamma();  // the monomial g

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  Rational coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : Rational(0);
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& gamma) const;  // exact Horner
  BigReal eval(const Rational& gamma, mpfr_prec_t prec) const;

  std::string to_string() const;  // human-readable, e.g. "-1/6*g^2 + 2"

  friend GammaPoly operator+(const GammaPoly& a, const GammaPoly& b);
  friend GammaPoly operator-(const GammaPoly& a, const GammaPoly& b);
  friend GammaPoly operator*(const GammaPoly& a, const GammaPoly& b);
  GammaPoly operator-() const;
  GammaPoly scaled(const Rational& k) const;

  // Exact quotient; empty when b does not divide a over Q[gamma].
  static std::optional<GammaPoly> exact_div(const GammaPoly& a,
                                            const GammaPoly& b);

  friend bool operator==(const GammaPoly& a, const GammaPoly& b) {
    return a.c_ == b.c_;
  }

 private:
  void trim();
  std::vector<Rational> c_;  // c_[k] multiplies gamma^k
};

// ---------------------------------------------------------------------------
// Params: run configuration. gamma = r/N is exact.
// ---------------------------------------------------------------------------
struct Params {
  Rational r;
  Rational N;
  Rational gamma;
  mpfr_prec_t precision_bits = 4096;  // default orbit precision
  int contraction_count = 800;

  static Params make(Rational r, Rational N, mpfr_prec_t precision_bits = 4096,
                     int contraction_count = 800);

  BigReal r_big() const { return BigReal(r, precision_bits); }
  BigReal N_big() const { return BigReal(N, precision_bits); }
  BigReal gamma_big() const { return BigReal(gamma, precision_bits); }
};

}  // namespace dp1
