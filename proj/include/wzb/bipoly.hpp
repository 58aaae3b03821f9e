#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wzb/rational.hpp"

namespace wzb {

// The two discrete variables of the exact layer. Integrands reuse the same
// slots with the reading (n,k) = (s,t).
enum class Var { n, k };

inline Var other_var(Var v) { return v == Var::n ? Var::k : Var::n; }
const char* var_name(Var v);

// Monomial n^dn k^dk. Canonical term order: graded lexicographic, n before k.
struct Mono {
  int dn = 0, dk = 0;
  int total() const { return dn + dk; }
  friend bool operator==(const Mono& a, const Mono& b) = default;
};

struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.dn < b.dn;  // same total + same dn forces same dk
  }
};

// Sparse bivariate polynomial over Q. Invariant: no stored zero coefficients,
// so equal polynomials have identical representations.
class BiPoly {
public:
  BiPoly() = default;  // zero
  explicit BiPoly(const Rat& c);
  explicit BiPoly(long c) : BiPoly(Rat(c)) {}

  static BiPoly variable(Var v);
  static BiPoly monomial(const Rat& c, int dn, int dk);
  static BiPoly affine(const Rat& c0, const Rat& cn, const Rat& ck);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool depends_on(Var v) const;
  int degree(Var v) const;             // -1 for the zero polynomial
  Rat coeff(int dn, int dk) const;
  Rat constant_term() const { return coeff(0, 0); }

  Mono leading_mono() const;           // canonical-order leading term
  Rat leading_coeff() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  BiPoly& operator*=(const Rat& c);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
  friend BiPoly operator*(BiPoly a, const Rat& c) { return a *= c; }
  friend BiPoly operator*(const Rat& c, BiPoly a) { return a *= c; }
  BiPoly operator-() const;
  BiPoly pow(unsigned e) const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  Rat eval(const Rat& vn, const Rat& vk) const;
  BiPoly eval_partial(Var v, const Rat& value) const;  // substitute one variable
  BiPoly subst_shift(Var v, const Rat& delta) const;   // v -> v + delta
  BiPoly subst_negate() const;                         // n -> -n, k -> -k

  // gcd normalized to leading coefficient 1; gcd(0,0) = 0.
  static BiPoly gcd(const BiPoly& a, const BiPoly& b);
  // exact quotient, or nullopt when b does not divide a
  static std::optional<BiPoly> try_div(const BiPoly& a, const BiPoly& b);

  const std::map<Mono, Rat, MonoLess>& terms() const { return terms_; }

  std::string str(const char* vn = "n", const char* vk = "k") const;

private:
  std::map<Mono, Rat, MonoLess> terms_;
  void add_term(const Mono& m, const Rat& c);
};

}  // namespace wzb
