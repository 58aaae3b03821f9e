#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "wzb/errors.hpp"

namespace wzb {

// Exact rationals throughout the symbolic layer. mpq_class keeps the canonical
// invariant (gcd(|num|,den)=1, den>=1) once canonicalize() has run; every
// constructor below guarantees it.
using Rat = mpq_class;
using Int = mpz_class;

Rat rat(long num, long den = 1);

// Accepts "p", "-p", "p/q" with arbitrary-size integers.
Rat parse_rat(const std::string& s);

bool rat_is_integer(const Rat& q);
// Requires rat_is_integer and fit into long.
long rat_to_long(const Rat& q);

Rat rat_pow(const Rat& base, long e);

// base^expo as an exact rational, when one exists (integer expo always;
// fractional expo only if the exact root exists). base > 0 expected.
std::optional<Rat> rat_exact_pow(const Rat& base, const Rat& expo);

Rat rat_floor(const Rat& q);
// q - floor(q), in [0, 1)
Rat rat_frac(const Rat& q);

std::string rat_str(const Rat& q);

}  // namespace wzb
