#pragma once

#include "wzb/bigfloat.hpp"

namespace wzb {

// Complex numbers over BigFloat. MPFR has no complex type, so the handful of
// operations the library needs (field ops, exp/log/pow, abs/arg) live here.
class BigComplex {
public:
  BigComplex() = default;
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit BigComplex(BigFloat re) : re_(std::move(re)), im_(BigFloat(re_.prec())) {}
  static BigComplex of(const Rat& re, mpfr_prec_t bits) { return BigComplex(BigFloat::of(re, bits)); }
  static BigComplex of(const Rat& re, const Rat& im, mpfr_prec_t bits) {
    return BigComplex(BigFloat::of(re, bits), BigFloat::of(im, bits));
  }
  static BigComplex zero(mpfr_prec_t bits) { return BigComplex(BigFloat(bits), BigFloat(bits)); }
  static BigComplex one(mpfr_prec_t bits) { return BigComplex(BigFloat::of(1L, bits), BigFloat(bits)); }
  static BigComplex i(mpfr_prec_t bits) { return BigComplex(BigFloat(bits), BigFloat::of(1L, bits)); }

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  bool is_real_integer() const { return im_.is_zero() && re_.is_integer(); }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend BigComplex operator*(const BigComplex& a, const BigFloat& b) { return {a.re_ * b, a.im_ * b}; }
  friend BigComplex operator*(const BigFloat& b, const BigComplex& a) { return a * b; }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator/(const BigComplex& a, const BigFloat& b) { return {a.re_ / b, a.im_ / b}; }
  friend BigComplex operator/(const BigComplex& a, long b) { return {a.re_ / b, a.im_ / b}; }
  friend BigComplex operator*(const BigComplex& a, long b) { return {a.re_ * b, a.im_ * b}; }
  BigComplex operator-() const { return {-re_, -im_}; }
  BigComplex conj() const { return {re_, -im_}; }
  BigComplex& operator+=(const BigComplex& o) { re_ += o.re_; im_ += o.im_; return *this; }
  BigComplex& operator-=(const BigComplex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  BigComplex& operator*=(const BigComplex& o) { *this = *this * o; return *this; }
  BigComplex& operator/=(const BigComplex& o) { *this = *this / o; return *this; }

  // exact bit-for-bit equality (used by the serial-vs-parallel determinism test)
  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  BigFloat abs() const { return hypot(re_, im_); }
  BigFloat arg() const { return atan2(im_, re_); }

  std::string str(int digits = 20) const {
    if (im_.is_zero()) return re_.str(digits);
    return re_.str(digits) + (im_.is_negative() ? " - " : " + ") + wzb::abs(im_).str(digits) + "i";
  }

private:
  BigFloat re_, im_;
};

BigComplex exp(const BigComplex& z);
// principal branch, arg in (-pi, pi]
BigComplex log(const BigComplex& z);
BigComplex pow(const BigComplex& z, const BigComplex& w);
BigComplex pow_si(const BigComplex& z, long e);
BigComplex sin(const BigComplex& z);

}  // namespace wzb
