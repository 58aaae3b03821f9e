#include <random>

#include "doctest.h"
#include "wzb/gamma.hpp"

using namespace wzb;

namespace {

BigFloat tol10(int e, const Precision& p) { return BigFloat::pow10(e, p.bits()); }

}  // namespace

TEST_CASE("log_gamma at classic real points") {
  Precision p(30);
  auto bits = p.bits();

  // Gamma(1/2) = sqrt(pi)
  BigComplex lg = log_gamma(BigComplex::of(rat(1, 2), bits), p);
  BigFloat expect = log(sqrt(BigFloat::pi(bits)));
  CHECK(abs(lg.re() - expect) < tol10(-p.digits, p));
  CHECK(abs(lg.im()) < tol10(-p.digits, p));

  // Gamma(5) = 24
  BigComplex lg5 = log_gamma(BigComplex::of(Rat(5), bits), p);
  CHECK(abs(lg5.re() - log(BigFloat::of(24L, bits))) < tol10(-p.digits, p));

  CHECK_THROWS_AS(log_gamma(BigComplex::of(Rat(0), bits), p), Error);
  CHECK_THROWS_AS(log_gamma(BigComplex::of(Rat(-3), bits), p), Error);
}

TEST_CASE("duplication identity oracle at z = 1+i, 40 digits") {
  Precision p(40);
  auto bits = p.bits();
  BigComplex z = BigComplex::of(Rat(1), Rat(1), bits);
  BigComplex half = BigComplex::of(rat(1, 2), bits);
  // Gamma(z) Gamma(z+1/2) = 2^{1-2z} sqrt(pi) Gamma(2z)
  BigComplex lhs = gamma(z, p) * gamma(z + half, p);
  BigComplex two_pow = pow(BigComplex::of(Rat(2), bits), BigComplex::of(Rat(1), bits) - z * 2L);
  BigComplex rhs = two_pow * BigComplex(sqrt(BigFloat::pi(bits))) * gamma(z * 2L, p);
  CHECK((lhs - rhs).abs() < tol10(-p.digits + 2, p));
}

TEST_CASE("mpfr lngamma agrees on the positive real axis") {
  Precision p(40);
  auto bits = p.bits();
  for (const char* xs : {"11/4", "73/10", "1/3", "291/7"}) {
    Rat x = parse_rat(xs);
    BigComplex mine = log_gamma(BigComplex::of(x, bits), p);
    BigFloat ref(bits);
    BigFloat xf = BigFloat::of(x, bits);
    mpfr_lngamma(ref.raw(), xf.raw(), MPFR_RNDN);
    CHECK(abs(mine.re() - ref) < tol10(-p.digits, p));
    CHECK(mine.im().is_zero());
  }
}

TEST_CASE("reflection and recurrence at random complex points") {
  Precision p(30);
  auto bits = p.bits();
  std::mt19937_64 rng(0x9a33a5eedULL);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  BigFloat pi = BigFloat::pi(bits);
  int done = 0;
  while (done < 20) {
    double xr = coord(rng), xi = coord(rng);
    if (std::abs(xi) < 0.05 && std::abs(xr - std::round(xr)) < 0.05) continue;  // stay off the lattice
    BigComplex z(BigFloat::of_double(xr, bits), BigFloat::of_double(xi, bits));
    ++done;

    // reflection: Gamma(z) Gamma(1-z) sin(pi z)/pi = 1
    BigComplex one(BigFloat::of(1L, bits));
    BigComplex refl = gamma(z, p) * gamma(one - z, p) * sin(BigComplex(pi) * z) / BigComplex(pi);
    CHECK((refl - one).abs() < tol10(-p.digits + 2, p));

    // recurrence: Gamma(z+1) = z Gamma(z)
    BigComplex g = gamma(z, p);
    BigComplex g1 = gamma(z + one, p);
    CHECK((g1 - z * g).abs() < tol10(-p.digits + 2, p) * (g1.abs() + BigFloat::of(1L, bits)));
  }
}

TEST_CASE("precision monotonicity") {
  for (const char* zs : {"5/2", "-7/3"}) {
    Precision lo(30), hi(50);
    Rat z = parse_rat(zs);
    BigComplex a = gamma(BigComplex::of(z, Rat(1), lo.bits()), lo);
    BigComplex b = gamma(BigComplex::of(z, Rat(1), hi.bits()), hi);
    CHECK((a - b).abs() < tol10(-lo.digits, lo));
  }
}

TEST_CASE("pochhammer") {
  Precision p(30);
  auto bits = p.bits();
  CHECK(pochhammer(rat(1, 2), Rat(0), p) == BigFloat::of(1L, bits));
  CHECK(abs(pochhammer(rat(7, 3), Rat(1), p) - BigFloat::of(rat(7, 3), bits)) < tol10(-p.digits, p));

  // (1/2)_{1/2} = Gamma(1)/Gamma(1/2) = 1/sqrt(pi)
  BigFloat val = pochhammer(rat(1, 2), rat(1, 2), p);
  CHECK(abs(val - 1L / sqrt(BigFloat::pi(bits))) < tol10(-p.digits, p));

  // integer fast path handles interior zeros: (0)_3 = 0, (-2)_2 = (-2)(-1) = 2
  CHECK(pochhammer(BigComplex::of(Rat(0), bits), BigComplex::of(Rat(3), bits), p).is_zero());
  CHECK(pochhammer(rat(-2, 1), Rat(2), p) == BigFloat::of(2L, bits));
  CHECK_THROWS_AS(pochhammer(rat(1, 1), Rat(-1), p), Error);
}

TEST_CASE("named constants") {
  Precision p(30);
  auto bits = p.bits();
  BigFloat pi = named_constant(NamedConst::pi, p);
  BigFloat ref(bits);
  mpfr_set_str(ref.raw(), "3.14159265358979323846264338328", 10, MPFR_RNDN);
  CHECK(abs(pi - ref) < tol10(-28, p));

  // Gamma(3/4) Gamma(1/4) = pi sqrt(2)
  BigFloat g34 = named_constant(NamedConst::gamma_3_4, p);
  BigFloat g14 = gamma(BigComplex::of(rat(1, 4), bits), p).re();
  CHECK(abs(g34 * g14 - pi * named_constant(NamedConst::sqrt2, p)) < tol10(-p.digits + 2, p));

  // sqrt3/pi stable across precisions
  Precision hi(60);
  BigFloat a = named_constant(NamedConst::sqrt3, p) / pi;
  BigFloat b = named_constant(NamedConst::sqrt3, hi) / named_constant(NamedConst::pi, hi);
  CHECK(abs(a - b) < tol10(-p.digits, p));
}

TEST_CASE("bernoulli") {
  CHECK(bernoulli(0) == Rat(1));
  CHECK(bernoulli(1) == rat(-1, 2));
  CHECK(bernoulli(2) == rat(1, 6));
  CHECK(bernoulli(12) == rat(-691, 2730));
  CHECK(bernoulli(3) == Rat(0));
  // B_3(x) = x^3 - 3/2 x^2 + 1/2 x at x = 1/3
  CHECK(bernoulli_poly(3, rat(1, 3)) == rat(1, 27) - rat(3, 2) * rat(1, 9) + rat(1, 6));
}
