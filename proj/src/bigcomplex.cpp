#include "wzb/bigcomplex.hpp"

namespace wzb {

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  // Smith's formula avoids overflow from squaring the larger component.
  if (abs(b.re_) >= abs(b.im_)) {
    if (b.re_.is_zero()) fail(errc::division_by_zero, "complex division by zero");
    BigFloat r = b.im_ / b.re_;
    BigFloat d = b.re_ + b.im_ * r;
    return {(a.re_ + a.im_ * r) / d, (a.im_ - a.re_ * r) / d};
  }
  BigFloat r = b.re_ / b.im_;
  BigFloat d = b.im_ + b.re_ * r;
  return {(a.re_ * r + a.im_) / d, (a.im_ * r - a.re_) / d};
}

BigComplex exp(const BigComplex& z) {
  BigFloat m = exp(z.re());
  if (z.im().is_zero()) return BigComplex(m, BigFloat(z.prec()));
  BigFloat s(z.im().prec()), c(z.im().prec());
  mpfr_sin_cos(s.raw(), c.raw(), z.im().raw(), MPFR_RNDN);
  return {m * c, m * s};
}

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) fail(errc::domain_error, "log of zero");
  return {log(z.abs()), z.arg()};
}

BigComplex pow(const BigComplex& z, const BigComplex& w) {
  if (z.is_zero()) {
    if (w.is_zero()) return BigComplex::one(z.prec());
    return BigComplex::zero(z.prec());
  }
  return exp(log(z) * w);
}

BigComplex pow_si(const BigComplex& z, long e) {
  if (e == 0) return BigComplex::one(z.prec());
  bool invert = e < 0;
  unsigned long ae = static_cast<unsigned long>(invert ? -e : e);
  BigComplex r = BigComplex::one(z.prec()), b = z;
  while (ae) {
    if (ae & 1) r *= b;
    if (ae >>= 1) b *= b;
  }
  if (invert) return BigComplex::one(z.prec()) / r;
  return r;
}

BigComplex sin(const BigComplex& z) {
  // sin(x+iy) = sin x cosh y + i cos x sinh y
  BigFloat s(z.re().prec()), c(z.re().prec());
  mpfr_sin_cos(s.raw(), c.raw(), z.re().raw(), MPFR_RNDN);
  if (z.im().is_zero()) return BigComplex(s, BigFloat(z.prec()));
  BigFloat sh(z.im().prec()), ch(z.im().prec());
  mpfr_sinh_cosh(sh.raw(), ch.raw(), z.im().raw(), MPFR_RNDN);
  return {s * ch, c * sh};
}

}  // namespace wzb
