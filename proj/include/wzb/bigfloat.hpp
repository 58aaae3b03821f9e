#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "wzb/rational.hpp"

namespace wzb {

// Target accuracy in decimal digits plus extra working digits. All numeric
// routines compute at bits() precision and promise absolute error around
// 10^{-digits} for O(1) results.
struct Precision {
  int digits;
  int guard;

  explicit Precision(int d = 30, int g = 20) : digits(d), guard(g) {
    if (digits < 10) fail(errc::domain_error, "precision below 10 digits");
    if (guard < 10) fail(errc::domain_error, "guard below 10 digits");
  }
  mpfr_prec_t bits() const {
    return static_cast<mpfr_prec_t>((digits + guard) * 3.3219280948873626 + 16);
  }
  Precision bump(int extra_digits) const { return Precision(digits + extra_digits, guard); }
};

// Thin RAII wrapper over mpfr_t. Every value carries its own precision;
// binary operations round to the wider operand's precision (round-to-nearest),
// so leaves created at working precision propagate it through formulas.
class BigFloat {
public:
  BigFloat() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
  explicit BigFloat(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat of(const Rat& q, mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
  }
  static BigFloat of(long i, mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_set_si(r.v_, i, MPFR_RNDN);
    return r;
  }
  static BigFloat of_double(double d, mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_set_d(r.v_, d, MPFR_RNDN);
    return r;
  }
  static BigFloat pi(mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  // 10^e at the given precision
  static BigFloat pow10(long e, mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_ui_pow_ui(r.v_, 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0) mpfr_ui_div(r.v_, 1, r.v_, MPFR_RNDN);
    return r;
  }
  static BigFloat nan(mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_set_nan(r.v_);
    return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  bool is_negative() const { return mpfr_sgn(v_) < 0; }
  int sgn() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  std::string str(int digits = 20) const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return bin(mpfr_add, a, b); }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return bin(mpfr_sub, a, b); }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return bin(mpfr_mul, a, b); }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return bin(mpfr_div, a, b); }
  BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend BigFloat operator+(const BigFloat& a, long b) { BigFloat r(a); mpfr_add_si(r.v_, r.v_, b, MPFR_RNDN); return r; }
  friend BigFloat operator-(const BigFloat& a, long b) { BigFloat r(a); mpfr_sub_si(r.v_, r.v_, b, MPFR_RNDN); return r; }
  friend BigFloat operator*(const BigFloat& a, long b) { BigFloat r(a); mpfr_mul_si(r.v_, r.v_, b, MPFR_RNDN); return r; }
  friend BigFloat operator/(const BigFloat& a, long b) { BigFloat r(a); mpfr_div_si(r.v_, r.v_, b, MPFR_RNDN); return r; }
  friend BigFloat operator-(long a, const BigFloat& b) { BigFloat r(b); mpfr_si_sub(r.v_, a, r.v_, MPFR_RNDN); return r; }
  friend BigFloat operator/(long a, const BigFloat& b) { BigFloat r(b); mpfr_si_div(r.v_, a, r.v_, MPFR_RNDN); return r; }
  BigFloat operator-() const { BigFloat r(*this); mpfr_neg(r.v_, r.v_, MPFR_RNDN); return r; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const BigFloat& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const BigFloat& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator<=(const BigFloat& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>=(const BigFloat& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
  friend bool operator==(const BigFloat& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

private:
  mpfr_t v_;
  using MpfrBin = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  static BigFloat bin(MpfrBin f, const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    f(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
};

inline BigFloat abs(const BigFloat& a) { BigFloat r(a); mpfr_abs(r.raw(), r.raw(), MPFR_RNDN); return r; }
inline BigFloat sqrt(const BigFloat& a) { BigFloat r(a); mpfr_sqrt(r.raw(), r.raw(), MPFR_RNDN); return r; }
inline BigFloat exp(const BigFloat& a) { BigFloat r(a); mpfr_exp(r.raw(), r.raw(), MPFR_RNDN); return r; }
inline BigFloat log(const BigFloat& a) { BigFloat r(a); mpfr_log(r.raw(), r.raw(), MPFR_RNDN); return r; }
inline BigFloat sin(const BigFloat& a) { BigFloat r(a); mpfr_sin(r.raw(), r.raw(), MPFR_RNDN); return r; }
inline BigFloat cos(const BigFloat& a) { BigFloat r(a); mpfr_cos(r.raw(), r.raw(), MPFR_RNDN); return r; }
inline BigFloat floor(const BigFloat& a) { BigFloat r(a); mpfr_floor(r.raw(), r.raw()); return r; }
inline BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(std::max(y.prec(), x.prec()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat hypot(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::max(a.prec(), b.prec()));
  mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat pow_si(const BigFloat& a, long e) {
  BigFloat r(a);
  mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
  return r;
}
inline BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

}  // namespace wzb
