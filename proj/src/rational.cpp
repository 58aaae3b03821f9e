#include "wzb/rational.hpp"

namespace wzb {

const char* errc_name(errc c) {
  switch (c) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::pole_at_point: return "PoleAtPoint";
    case errc::not_hypergeometric: return "NotHypergeometric";
    case errc::not_proportional: return "NotProportional";
    case errc::missing_sign_factor: return "MissingSignFactor";
    case errc::rule_not_applicable: return "RuleNotApplicable";
    case errc::gamma_pole: return "GammaPole";
    case errc::pole_at_nonpositive_integer: return "PoleAtNonpositiveInteger";
    case errc::no_straight_separating_line: return "NoStraightSeparatingLine";
    case errc::not_converged: return "NotConverged";
    case errc::domain_error: return "DomainError";
    case errc::colliding_poles: return "CollidingPoles";
    case errc::divergent: return "Divergent";
    case errc::syntax_error: return "SyntaxError";
    case errc::undefined_name: return "UndefinedName";
    case errc::unknown_id: return "UnknownId";
  }
  return "Error";
}

Rat rat(long num, long den) {
  if (den == 0) fail(errc::division_by_zero, "rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Rat q{Int(s)};
      return q;
    }
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) fail(errc::division_by_zero, "rational with zero denominator: " + s);
    Rat q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    fail(errc::syntax_error, "malformed rational: " + s);
  }
}

bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

long rat_to_long(const Rat& q) {
  if (!rat_is_integer(q) || !q.get_num().fits_slong_p())
    fail(errc::domain_error, "rational does not fit an integer: " + rat_str(q));
  return q.get_num().get_si();
}

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0) {
    if (e < 0) fail(errc::division_by_zero, "0 to a negative power");
    return Rat(0);
  }
  Rat p;
  unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(p.get_num_mpz_t(), base.get_num_mpz_t(), ae);
  mpz_pow_ui(p.get_den_mpz_t(), base.get_den_mpz_t(), ae);
  if (e < 0) {
    Rat inv;
    mpq_inv(inv.get_mpq_t(), p.get_mpq_t());
    return inv;
  }
  return p;
}

std::optional<Rat> rat_exact_pow(const Rat& base, const Rat& expo) {
  if (rat_is_integer(expo)) {
    if (!expo.get_num().fits_slong_p()) return std::nullopt;
    if (base == 0 && expo < 0) return std::nullopt;
    return rat_pow(base, expo.get_num().get_si());
  }
  if (base == 0) return expo > 0 ? std::optional<Rat>(Rat(0)) : std::nullopt;
  if (!expo.get_den().fits_ulong_p() || !expo.get_num().fits_slong_p()) return std::nullopt;
  unsigned long q = expo.get_den().get_ui();
  if (base < 0 && q % 2 == 0) return std::nullopt;
  Int rn, rd;
  // mpz_root returns nonzero iff the root is exact
  if (!mpz_root(rn.get_mpz_t(), base.get_num_mpz_t(), q)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), base.get_den_mpz_t(), q)) return std::nullopt;
  Rat root(rn, rd);
  root.canonicalize();
  return rat_pow(root, expo.get_num().get_si());
}

Rat rat_floor(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rat(f);
}

Rat rat_frac(const Rat& q) { return q - rat_floor(q); }

std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace wzb
