#pragma once

#include <string>

#include "wzb/bipoly.hpp"

namespace wzb {

// Reduced rational function num/den in (n,k). Canonical form: gcd(num,den)=1,
// den's leading coefficient (graded lex, n before k) is 1, zero is 0/1. Equal
// functions therefore have identical representations.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(Rat(1)) {}  // zero
  RationalFunction(BiPoly num, BiPoly den);
  explicit RationalFunction(const Rat& c) : num_(c), den_(Rat(1)) {}
  explicit RationalFunction(long c) : num_(Rat(c)), den_(Rat(1)) {}
  static RationalFunction variable(Var v) { return RationalFunction(BiPoly::variable(v), BiPoly(Rat(1))); }

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);  // throws DivisionByZero
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;
  RationalFunction inv() const;
  RationalFunction pow(int e) const;

  // canonical forms make structural equality a decision procedure
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  Rat eval(const Rat& vn, const Rat& vk) const;  // throws PoleAtPoint
  RationalFunction eval_partial(Var v, const Rat& value) const;
  RationalFunction subst_shift(Var v, const Rat& delta) const;
  RationalFunction subst_negate() const;

  std::string str(const char* vn = "n", const char* vk = "k") const;

private:
  BiPoly num_, den_;
};

// a - b == 0 checked by cross-multiplication (no dependence on canonicalization)
bool rf_equal(const RationalFunction& a, const RationalFunction& b);

// Affine argument c0 + cn*n + ck*k, used for Gamma arguments, Pochhammer bases
// and exponents of exponential factors.
struct AffineForm {
  Rat c0{0}, cn{0}, ck{0};

  AffineForm() = default;
  AffineForm(Rat c0_, Rat cn_, Rat ck_) : c0(std::move(c0_)), cn(std::move(cn_)), ck(std::move(ck_)) {}
  explicit AffineForm(const Rat& c) : c0(c) {}

  static AffineForm variable(Var v) {
    return v == Var::n ? AffineForm(Rat(0), Rat(1), Rat(0)) : AffineForm(Rat(0), Rat(0), Rat(1));
  }

  const Rat& coeff(Var v) const { return v == Var::n ? cn : ck; }
  Rat& coeff(Var v) { return v == Var::n ? cn : ck; }
  bool is_constant() const { return cn == 0 && ck == 0; }
  bool is_zero() const { return c0 == 0 && is_constant(); }

  AffineForm operator+(const AffineForm& o) const { return {c0 + o.c0, cn + o.cn, ck + o.ck}; }
  AffineForm operator-(const AffineForm& o) const { return {c0 - o.c0, cn - o.cn, ck - o.ck}; }
  AffineForm operator-() const { return {-c0, -cn, -ck}; }
  AffineForm operator+(const Rat& c) const { return {c0 + c, cn, ck}; }
  AffineForm operator*(const Rat& c) const { return {c0 * c, cn * c, ck * c}; }
  AffineForm subst_shift(Var v, const Rat& delta) const {
    AffineForm r = *this;
    r.c0 += coeff(v) * delta;
    return r;
  }
  AffineForm subst_negate() const { return {c0, -cn, -ck}; }

  Rat eval(const Rat& vn, const Rat& vk) const { return c0 + cn * vn + ck * vk; }
  BiPoly to_poly() const { return BiPoly::affine(c0, cn, ck); }

  friend bool operator==(const AffineForm&, const AffineForm&) = default;

  std::string str(const char* vn = "n", const char* vk = "k") const { return to_poly().str(vn, vk); }
};

// total order for deterministic sorting/grouping
inline bool affine_less(const AffineForm& a, const AffineForm& b) {
  if (a.cn != b.cn) return a.cn < b.cn;
  if (a.ck != b.ck) return a.ck < b.ck;
  return a.c0 < b.c0;
}

}  // namespace wzb
