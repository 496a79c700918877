#include "dp1/numerics.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace dp1 {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::parse_error: return "ParseError";
    case Errc::singular_axis: return "SingularAxis";
    case Errc::singular_step: return "SingularStep";
    case Errc::plane_at_infinity: return "PlaneAtInfinity";
    case Errc::negative_input: return "NegativeInput";
    case Errc::complex_root: return "ComplexRoot";
    case Errc::not_genuine: return "NotGenuine";
    case Errc::insufficient_length: return "InsufficientLength";
    case Errc::quadrature_non_convergence: return "QuadratureNonConvergence";
    case Errc::no_interior_minimum: return "NoInteriorMinimum";
    case Errc::singular_family_member: return "SingularFamilyMember";
    case Errc::internal: return "InternalError";
  }
  return "UnknownError";
}

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

Rational::Rational(long num, long den) {
  if (den == 0) raise(Errc::invalid_argument, "Rational with zero denominator");
  mpq_init(q_);
  mpq_set_si(q_, num, 1);
  Rational d;
  mpq_set_si(d.q_, den, 1);
  mpq_div(q_, q_, d.q_);
}

Rational Rational::from_string(std::string_view text) {
  auto bad = [&] {
    raise(Errc::parse_error, "cannot parse rational: '" + std::string(text) + "'");
  };
  std::string s(text);
  if (s.empty()) bad();

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational out;
    if (mpq_set_str(out.q_, s.c_str(), 10) != 0) bad();
    if (mpz_sgn(mpq_denref(out.q_)) == 0)
      raise(Errc::invalid_argument, "rational with zero denominator");
    mpq_canonicalize(out.q_);
    return out;
  }

  auto dot = s.find('.');
  if (dot == std::string::npos) {
    Rational out;
    if (mpq_set_str(out.q_, s.c_str(), 10) != 0) bad();
    mpq_canonicalize(out.q_);
    return out;
  }

  // Decimal literal: shift the point away and divide by the matching power
  // of ten, keeping the value exact.
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  std::size_t frac_len = s.size() - dot - 1;
  if (digits.empty() || digits == "-" || digits == "+") bad();
  for (std::size_t i = 0; i < digits.size(); ++i) {
    char c = digits[i];
    if (!(std::isdigit(static_cast<unsigned char>(c)) ||
          (i == 0 && (c == '-' || c == '+'))))
      bad();
  }
  Rational out;
  if (mpq_set_str(out.q_, digits.c_str(), 10) != 0) bad();
  mpz_t pow10;
  mpz_init(pow10);
  mpz_ui_pow_ui(pow10, 10, frac_len);
  mpz_mul(mpq_denref(out.q_), mpq_denref(out.q_), pow10);
  mpz_clear(pow10);
  mpq_canonicalize(out.q_);
  return out;
}

std::string Rational::to_string() const {
  char* raw = mpq_get_str(nullptr, 10, q_);
  std::string out(raw);
  std::free(raw);
  return out;
}

std::string Rational::num_string() const {
  char* raw = mpz_get_str(nullptr, 10, mpq_numref(q_));
  std::string out(raw);
  std::free(raw);
  return out;
}

std::string Rational::den_string() const {
  char* raw = mpz_get_str(nullptr, 10, mpq_denref(q_));
  std::string out(raw);
  std::free(raw);
  return out;
}

Rational Rational::abs() const {
  Rational out;
  mpq_abs(out.q_, q_);
  return out;
}

Rational Rational::reciprocal() const {
  if (is_zero()) raise(Errc::invalid_argument, "reciprocal of zero");
  Rational out;
  mpq_inv(out.q_, q_);
  return out;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  mpz_t num_root, den_root;
  mpz_init(num_root);
  mpz_init(den_root);
  bool ok = mpz_root(num_root, mpq_numref(x.raw()), 2) != 0 &&
            mpz_root(den_root, mpq_denref(x.raw()), 2) != 0;
  std::optional<Rational> out;
  if (ok) {
    Rational q;
    mpq_t tmp;
    mpq_init(tmp);
    mpz_set(mpq_numref(tmp), num_root);
    mpz_set(mpq_denref(tmp), den_root);
    mpq_canonicalize(tmp);
    mpq_set(const_cast<mpq_ptr>(q.raw()), tmp);
    mpq_clear(tmp);
    out = q;
  }
  mpz_clear(num_root);
  mpz_clear(den_root);
  return out;
}

// ---------------------------------------------------------------------------
// BigReal
// ---------------------------------------------------------------------------

BigReal BigReal::from_decimal(std::string_view text, mpfr_prec_t prec) {
  BigReal out(0L, prec);
  std::string s(text);
  if (s.empty() || mpfr_set_str(out.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    raise(Errc::parse_error, "cannot parse decimal: '" + s + "'");
  return out;
}

std::string BigReal::to_decimal() const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";
  mpfr_exp_t exp = 0;
  // n_digits = 0: enough digits for exact round-trip at this precision.
  char* raw = mpfr_get_str(nullptr, &exp, 10, 0, v_, MPFR_RNDN);
  std::string digits(raw);
  mpfr_free_str(raw);
  std::string sign_str;
  if (!digits.empty() && digits[0] == '-') {
    sign_str = "-";
    digits.erase(0, 1);
  }
  // Strip digits that are trailing zeros to keep outputs tidy; round-trip is
  // unaffected.
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  std::string out = sign_str + digits.substr(0, 1);
  if (digits.size() > 1) out += "." + digits.substr(1);
  out += "e" + std::to_string(static_cast<long>(exp) - 1);
  return out;
}

BigReal big_abs(const BigReal& x) {
  BigReal out(0L, x.precision());
  mpfr_abs(out.v_, x.v_, MPFR_RNDN);
  return out;
}

BigReal big_sqrt(const BigReal& x, mpfr_prec_t prec) {
  if (x.sign() < 0)
    raise(Errc::negative_input, "big_sqrt of negative value");
  BigReal out(0L, prec);
  mpfr_sqrt(out.v_, x.v_, MPFR_RNDN);
  return out;
}

BigReal big_exp(const BigReal& x) {
  BigReal out(0L, x.precision());
  mpfr_exp(out.v_, x.v_, MPFR_RNDN);
  return out;
}

BigReal big_log(const BigReal& x) {
  BigReal out(0L, x.precision());
  mpfr_log(out.v_, x.v_, MPFR_RNDN);
  return out;
}

BigReal big_sinh(const BigReal& x) {
  BigReal out(0L, x.precision());
  mpfr_sinh(out.v_, x.v_, MPFR_RNDN);
  return out;
}

BigReal big_cosh(const BigReal& x) {
  BigReal out(0L, x.precision());
  mpfr_cosh(out.v_, x.v_, MPFR_RNDN);
  return out;
}

BigReal big_tanh(const BigReal& x) {
  BigReal out(0L, x.precision());
  mpfr_tanh(out.v_, x.v_, MPFR_RNDN);
  return out;
}

BigReal big_hypot(const BigReal& x, const BigReal& y) {
  BigReal out(0L, std::min(x.precision(), y.precision()));
  mpfr_hypot(out.v_, x.v_, y.v_, MPFR_RNDN);
  return out;
}

BigReal big_pi(mpfr_prec_t prec) {
  BigReal out(0L, prec);
  mpfr_const_pi(out.v_, MPFR_RNDN);
  return out;
}

mpfr_prec_t bits_for_digits(long digits) {
  if (digits < 1) raise(Errc::invalid_argument, "digit count must be positive");
  double bits = static_cast<double>(digits) * std::log2(10.0);
  return static_cast<mpfr_prec_t>(std::ceil(bits));
}

// ---------------------------------------------------------------------------
// GammaPoly
// ---------------------------------------------------------------------------

GammaPoly::GammaPoly(Rational constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

GammaPoly::GammaPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  trim();
}

GammaPoly GammaPoly::gamma() {
  GammaPoly g;
  g.c_ = {Rational(0), Rational(1)};
  return g;
}

void GammaPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational GammaPoly::eval(const Rational& gamma) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * gamma + *it;
  return acc;
}

BigReal GammaPoly::eval(const Rational& gamma, mpfr_prec_t prec) const {
  return BigReal(eval(gamma), prec);
}

GammaPoly operator+(const GammaPoly& a, const GammaPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return GammaPoly(std::move(c));
}

GammaPoly operator-(const GammaPoly& a, const GammaPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
  return GammaPoly(std::move(c));
}

GammaPoly operator*(const GammaPoly& a, const GammaPoly& b) {
  if (a.is_zero() || b.is_zero()) return GammaPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] += a.c_[i] * b.c_[j];
  return GammaPoly(std::move(c));
}

GammaPoly GammaPoly::operator-() const {
  std::vector<Rational> c(c_.size(), Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) c[k] = -c_[k];
  return GammaPoly(std::move(c));
}

GammaPoly GammaPoly::scaled(const Rational& k) const {
  std::vector<Rational> c(c_.size(), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * k;
  return GammaPoly(std::move(c));
}

std::optional<GammaPoly> GammaPoly::exact_div(const GammaPoly& a,
                                              const GammaPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return GammaPoly();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quot(a.c_.size() - b.c_.size() + 1, Rational(0));
  const Rational lead = b.c_.back();
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    Rational q = rem[k + b.degree()] / lead;
    quot[k] = q;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      rem[k + j] -= q * b.c_[j];
  }
  for (const auto& x : rem)
    if (!x.is_zero()) return std::nullopt;
  return GammaPoly(std::move(quot));
}

std::string GammaPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeff(static_cast<std::size_t>(k));
    if (c.is_zero()) continue;
    if (!first) out << (c.sign() < 0 ? " - " : " + ");
    if (first && c.sign() < 0) out << "-";
    first = false;
    Rational mag = c.abs();
    if (k == 0) {
      out << mag.to_string();
    } else {
      if (!(mag == Rational(1))) out << mag.to_string() << "*";
      out << "g";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Params
// ---------------------------------------------------------------------------

Params Params::make(Rational r, Rational N, mpfr_prec_t precision_bits,
                    int contraction_count) {
  if (r.sign() <= 0) raise(Errc::invalid_argument, "parameter r must be > 0");
  if (N.sign() <= 0) raise(Errc::invalid_argument, "parameter N must be > 0");
  if (precision_bits < 64)
    raise(Errc::invalid_argument, "precision must be at least 64 bits");
  if (contraction_count < 1)
    raise(Errc::invalid_argument, "contraction count must be >= 1");
  Params p;
  p.r = std::move(r);
  p.N = std::move(N);
  p.gamma = p.r / p.N;
  p.precision_bits = precision_bits;
  p.contraction_count = contraction_count;
  return p;
}

}  // namespace dp1
