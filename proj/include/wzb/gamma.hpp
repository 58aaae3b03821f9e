#pragma once

#include "wzb/bigcomplex.hpp"

namespace wzb {

// Principal-branch complex log Gamma. Strategy: upward recurrence
// logGamma(z) = logGamma(z+m) - sum_j log(z+j) until the argument reaches the
// Stirling region, then the asymptotic series with Bernoulli coefficients;
// near the pole line (Re z < 1/2, |Im z| <= 1) the reflection formula
// logGamma(z) = log pi - log sin(pi z) - logGamma(1-z) is used instead.
// Throws PoleAtNonpositiveInteger at z = 0, -1, -2, ...
BigComplex log_gamma(const BigComplex& z, const Precision& prec);
BigComplex gamma(const BigComplex& z, const Precision& prec);

// Generalized Pochhammer (x)_s = Gamma(x+s)/Gamma(x), with an exact finite
// product fast path when s is an integer (which also handles the zeros that
// the Gamma quotient cannot, e.g. (0)_2 = 0).
BigComplex pochhammer(const BigComplex& x, const BigComplex& s, const Precision& prec);
BigFloat pochhammer(const Rat& x, const Rat& s, const Precision& prec);

enum class NamedConst { pi, sqrt2, sqrt3, gamma_3_4 };
BigFloat named_constant(NamedConst c, const Precision& prec);

// Exact Bernoulli numbers B_m (B_1 = -1/2) and Bernoulli polynomials B_m(x);
// cached, safe for concurrent use.
Rat bernoulli(unsigned m);
Rat bernoulli_poly(unsigned m, const Rat& x);

}  // namespace wzb
