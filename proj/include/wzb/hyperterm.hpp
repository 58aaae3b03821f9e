#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wzb/gamma.hpp"
#include "wzb/ratfun.hpp"

namespace wzb {

// (base)_index ^ exp, base affine in (n,k) but independent of the index
// variable. Keeping the Pochhammer pairing (rather than only the merged
// Gamma factors) is what makes the duality rewrite well defined.
struct PochFactor {
  AffineForm base;
  Var index;
  int exp;
};

// Gamma(arg)^exp for factors that did not arrive as Pochhammers
// (factorials, and the bookkeeping constants Gamma(a) of (a)_c splits).
struct GammaFactor {
  AffineForm arg;
  int exp;
};

// base^exponent with base a positive rational; normalize() rewrites these
// over prime bases so (16/9)^n and (4/3)^{2n} merge.
struct ExpFactor {
  Rat base;
  AffineForm exponent;
};

// A hypergeometric term in Gamma-normal form: Pochhammer factors, raw Gamma
// factors, exponential factors, optional (-1)^n / (-1)^k signs, a rational
// function multiplier and an exact rational constant.
class HyperTerm {
public:
  std::vector<PochFactor> pochs;
  std::vector<GammaFactor> gammas;
  std::vector<ExpFactor> exps;
  bool sign_n = false, sign_k = false;
  RationalFunction rat{Rat(1)};
  Rat const_rat{1};

  HyperTerm() = default;

  // builder helpers; each returns *this for chaining
  HyperTerm& poch(const AffineForm& base, Var index, int exp = 1);
  HyperTerm& gamma_factor(const AffineForm& arg, int exp = 1);
  HyperTerm& exp_factor(const Rat& base, const AffineForm& exponent);
  HyperTerm& sign(Var v);
  HyperTerm& times(const RationalFunction& f);
  HyperTerm& times(const Rat& c);

  HyperTerm& operator*=(const HyperTerm& o);
  friend HyperTerm operator*(HyperTerm a, const HyperTerm& b) { return a *= b; }
  HyperTerm inverse() const;
  HyperTerm pow(int e) const;

  void normalize();
  friend bool operator==(const HyperTerm& a, const HyperTerm& b);

  // Pochhammers expanded to Gamma(base+index)/Gamma(base) plus raw factors
  std::vector<GammaFactor> all_gammas() const;

  std::string str(const char* vn = "n", const char* vk = "k") const;
};

struct WZPair {
  HyperTerm F, G;
  std::optional<RationalFunction> certificate;
};

struct VerificationReport {
  bool wz_holds = false;
  RationalFunction certificate_used;
  RationalFunction residual;  // zero iff wz_holds
  std::string notes;
};

// t(..var+1..)/t(..var..) as an exact rational function of (n,k).
// Throws NotHypergeometric when the Gamma-quotient reduction leaves an
// unmatched factor with a non-integer shift.
RationalFunction shift_quotient(const HyperTerm& t, Var var);

// exact a/b, or NotProportional
RationalFunction term_ratio(const HyperTerm& a, const HyperTerm& b);

// Checks F(n+1,k)-F(n,k) = G(n,k+1)-G(n,k) divided through by F:
// residual = (rho - 1) - (C'*sigma - C) with rho,sigma the n,k shift
// quotients of F and C the certificate (stored or term_ratio(G,F)).
VerificationReport wz_verify(const WZPair& p);

// n -> -n, k -> -k followed by the Pochhammer rewrites
// (a)_{-v} -> (-1)^v/(1-a)_v and (1)_{-v} -> v(-1)^v/(1)_v.
HyperTerm dual(const HyperTerm& t);

// var -> var + shift (rational shift); Pochhammers indexed by var split as
// (b)_{v+c} = (b)_c (b+c)_v.
HyperTerm substitute(const HyperTerm& t, Var var, const Rat& shift);

BigComplex numeric_eval(const HyperTerm& t, const BigComplex& n, const BigComplex& k,
                        const Precision& prec);
BigComplex numeric_eval(const HyperTerm& t, const Rat& n, const Rat& k, const Precision& prec);

// numeric bridges shared with the quadrature layer
BigComplex eval_c(const AffineForm& a, const BigComplex& n, const BigComplex& k);
BigComplex eval_c(const BiPoly& p, const BigComplex& n, const BigComplex& k);
BigComplex eval_c(const RationalFunction& f, const BigComplex& n, const BigComplex& k);

}  // namespace wzb
