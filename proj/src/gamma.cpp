#include "wzb/gamma.hpp"

#include <mutex>
#include <vector>

namespace wzb {

namespace {

std::mutex bern_mutex;
std::vector<Rat> bern_all = {Rat(1)};  // B_0, B_1, ...

// B_m = -1/(m+1) * sum_{j<m} C(m+1,j) B_j
void grow_bernoulli(size_t upto) {
  std::lock_guard<std::mutex> lock(bern_mutex);
  while (bern_all.size() <= upto) {
    size_t m = bern_all.size();
    Rat acc(0);
    Rat binom(1);  // C(m+1, j), starting at j = 0
    for (size_t j = 0; j < m; ++j) {
      acc += binom * bern_all[j];
      binom *= Rat(static_cast<long>(m + 1 - j));
      binom /= Rat(static_cast<long>(j + 1));
    }
    bern_all.push_back(-acc / Rat(static_cast<long>(m + 1)));
  }
}

// Stirling series coefficients B_{2j}/((2j)(2j-1)) as floats, per thread per precision.
const std::vector<BigFloat>& stirling_coeffs(mpfr_prec_t bits, size_t count) {
  thread_local mpfr_prec_t cached_bits = 0;
  thread_local std::vector<BigFloat> coeffs;
  if (cached_bits != bits) {
    coeffs.clear();
    cached_bits = bits;
  }
  if (coeffs.size() < count) {
    grow_bernoulli(2 * count);
    std::lock_guard<std::mutex> lock(bern_mutex);
    for (size_t j = coeffs.size() + 1; j <= count; ++j) {
      Rat c = bern_all[2 * j] / rat(static_cast<long>(2 * j) * static_cast<long>(2 * j - 1));
      coeffs.push_back(BigFloat::of(c, bits));
    }
  }
  return coeffs;
}

bool is_nonpositive_integer(const BigComplex& z) {
  return z.is_real_integer() && z.re() <= 0;
}

// asymptotic series; requires |w| in the Stirling region for wd working digits
BigComplex stirling(const BigComplex& w, mpfr_prec_t bits, int wd) {
  BigComplex lw = log(w);
  BigFloat half = BigFloat::of(rat(1, 2), bits);
  BigFloat log2pi = log(BigFloat::pi(bits) * 2);
  BigComplex acc = (w - BigComplex(half)) * lw - w + BigComplex(log2pi * half);
  BigComplex p = BigComplex::one(bits) / w;
  BigComplex u = p * p;
  BigFloat cutoff = BigFloat::pow10(-(wd + 8), bits);
  const size_t chunk = 16;
  for (size_t j = 1; j < 4000; ++j) {
    const auto& cs = stirling_coeffs(bits, ((j + chunk - 1) / chunk) * chunk);
    BigComplex term = p * cs[j - 1];
    acc += term;
    if (term.abs() < cutoff) return acc;
    p *= u;
  }
  fail(errc::not_converged, "Stirling series did not reach the target accuracy");
}

}  // namespace

Rat bernoulli(unsigned m) {
  grow_bernoulli(m);
  std::lock_guard<std::mutex> lock(bern_mutex);
  return bern_all[m];
}

Rat bernoulli_poly(unsigned m, const Rat& x) {
  grow_bernoulli(m);
  Rat acc(0);
  Rat binom(1);
  Rat xp(1);  // x^{m-i} built from the top
  // B_m(x) = sum_i C(m,i) B_i x^{m-i}; iterate i = m..0 so x powers grow
  std::vector<Rat> bs;
  {
    std::lock_guard<std::mutex> lock(bern_mutex);
    bs.assign(bern_all.begin(), bern_all.begin() + m + 1);
  }
  for (int i = static_cast<int>(m); i >= 0; --i) {
    acc += binom * bs[static_cast<size_t>(i)] * xp;
    if (i > 0) {
      binom *= Rat(i);
      binom /= Rat(static_cast<long>(m) - i + 1);
      xp *= x;
    }
  }
  return acc;
}

BigComplex log_gamma(const BigComplex& z, const Precision& prec) {
  const mpfr_prec_t bits = prec.bits();
  const int wd = prec.digits + prec.guard;
  if (is_nonpositive_integer(z))
    fail(errc::pole_at_nonpositive_integer, "log_gamma at " + z.str(6));

  BigFloat half = BigFloat::of(rat(1, 2), bits);
  if (z.re() < half && abs(z.im()) <= BigFloat::of(1L, bits)) {
    BigFloat pi = BigFloat::pi(bits);
    BigComplex pz = BigComplex(pi) * z;
    BigComplex one_minus(BigFloat::of(1L, bits) - z.re(), -z.im());
    return BigComplex(log(pi)) - log(sin(pz)) - log_gamma(one_minus, prec);
  }

  BigFloat threshold = BigFloat::of_double(0.4 * wd + 10.0, bits);
  BigComplex w = z;
  BigComplex logs = BigComplex::zero(bits);
  long pushed = 0;
  while (w.abs() < threshold || w.re() < 1) {
    logs += log(w);
    w += BigComplex::one(bits);
    if (++pushed > 4 * wd + 100)
      fail(errc::not_converged, "log_gamma recurrence failed to reach the Stirling region");
  }
  return stirling(w, bits, wd) - logs;
}

BigComplex gamma(const BigComplex& z, const Precision& prec) { return exp(log_gamma(z, prec)); }

BigComplex pochhammer(const BigComplex& x, const BigComplex& s, const Precision& prec) {
  const mpfr_prec_t bits = prec.bits();
  if (s.is_real_integer() && abs(s.re()) < BigFloat::of(1000000L, bits)) {
    long m = s.re().to_long();
    BigComplex acc = BigComplex::one(bits);
    if (m >= 0) {
      for (long j = 0; j < m; ++j) acc *= (x + BigComplex(BigFloat::of(j, bits)));
      return acc;
    }
    for (long j = 1; j <= -m; ++j) {
      BigComplex f = x - BigComplex(BigFloat::of(j, bits));
      if (f.is_zero())
        fail(errc::pole_at_nonpositive_integer, "(x)_s with zero factor at x-" + std::to_string(j));
      acc *= f;
    }
    return BigComplex::one(bits) / acc;
  }
  return exp(log_gamma(x + s, prec) - log_gamma(x, prec));
}

BigFloat pochhammer(const Rat& x, const Rat& s, const Precision& prec) {
  const mpfr_prec_t bits = prec.bits();
  if (rat_is_integer(s)) {
    // exact rational product
    long m = rat_to_long(s);
    Rat acc(1);
    if (m >= 0) {
      for (long j = 0; j < m; ++j) acc *= x + Rat(j);
    } else {
      for (long j = 1; j <= -m; ++j) {
        Rat f = x - Rat(j);
        if (f == 0) fail(errc::pole_at_nonpositive_integer, "(x)_s hits a pole");
        acc /= f;
      }
    }
    return BigFloat::of(acc, bits);
  }
  return pochhammer(BigComplex::of(x, bits), BigComplex::of(s, bits), prec).re();
}

BigFloat named_constant(NamedConst c, const Precision& prec) {
  const mpfr_prec_t bits = prec.bits();
  switch (c) {
    case NamedConst::pi: return BigFloat::pi(bits);
    case NamedConst::sqrt2: return sqrt(BigFloat::of(2L, bits));
    case NamedConst::sqrt3: return sqrt(BigFloat::of(3L, bits));
    case NamedConst::gamma_3_4: return gamma(BigComplex::of(rat(3, 4), bits), prec).re();
  }
  fail(errc::domain_error, "unknown constant");
}

}  // namespace wzb
