#include "wzb/ratfun.hpp"

namespace wzb {

RationalFunction::RationalFunction(BiPoly num, BiPoly den) {
  if (den.is_zero()) fail(errc::division_by_zero, "rational function with zero denominator");
  if (num.is_zero()) {
    num_ = BiPoly();
    den_ = BiPoly(Rat(1));
    return;
  }
  BiPoly g = BiPoly::gcd(num, den);
  if (!g.is_constant()) {
    num = *BiPoly::try_div(num, g);
    den = *BiPoly::try_div(den, g);
  }
  Rat lc = den.leading_coeff();
  if (lc != 1) {
    Rat inv = 1 / lc;
    num *= inv;
    den *= inv;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  *this = RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  *this = RationalFunction(num_ * o.num_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) fail(errc::division_by_zero, "division by the zero rational function");
  *this = RationalFunction(num_ * o.den_, den_ * o.num_);
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::inv() const {
  if (is_zero()) fail(errc::division_by_zero, "inverse of zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int e) const {
  if (e == 0) return RationalFunction(Rat(1));
  RationalFunction base = e < 0 ? inv() : *this;
  unsigned ae = static_cast<unsigned>(e < 0 ? -e : e);
  return RationalFunction(base.num_.pow(ae), base.den_.pow(ae));
}

Rat RationalFunction::eval(const Rat& vn, const Rat& vk) const {
  Rat d = den_.eval(vn, vk);
  if (d == 0)
    fail(errc::pole_at_point,
         "denominator vanishes at (" + rat_str(vn) + ", " + rat_str(vk) + ")");
  return num_.eval(vn, vk) / d;
}

RationalFunction RationalFunction::eval_partial(Var v, const Rat& value) const {
  BiPoly d = den_.eval_partial(v, value);
  if (d.is_zero())
    fail(errc::pole_at_point, "denominator vanishes identically after substitution");
  return RationalFunction(num_.eval_partial(v, value), d);
}

RationalFunction RationalFunction::subst_shift(Var v, const Rat& delta) const {
  return RationalFunction(num_.subst_shift(v, delta), den_.subst_shift(v, delta));
}

RationalFunction RationalFunction::subst_negate() const {
  return RationalFunction(num_.subst_negate(), den_.subst_negate());
}

std::string RationalFunction::str(const char* vn, const char* vk) const {
  if (den_ == BiPoly(Rat(1))) return num_.str(vn, vk);
  return "(" + num_.str(vn, vk) + ")/(" + den_.str(vn, vk) + ")";
}

bool rf_equal(const RationalFunction& a, const RationalFunction& b) {
  return a.num() * b.den() == b.num() * a.den();
}

}  // namespace wzb
